#pragma once

#include <string>

#include "vcflow/engine.hpp"
#include "vcflow/sim.hpp"
#include "vcflow/spec_lang.hpp"

namespace vcflow {

// Machine-readable run report. Key order and number formatting are stable:
// identical runs serialize byte-identically (determinism contract).
struct ReportContext {
    std::string workflow_name;
    std::string mode;  // validate | run | simulate
    std::uint64_t seed = 0;
    int exit_code = 0;
};

std::string report_to_json(const ReportContext& ctx, const RunResult& result,
                           const SavingsReport* savings = nullptr);

// Setup-only report (cmd_validate).
std::string setup_report_to_json(const ReportContext& ctx, const SetupVerdict& verdict);

// Parses violation reports back out of a stored report (cmd_explain).
std::vector<ViolationReport> violations_from_json_text(const std::string& text);

std::string render_human_report(const ReportContext& ctx, const RunResult& result,
                                const SavingsReport* savings = nullptr);

// Cluster spec file format (json): {"nodes": [{"id", "memory_bytes", ...}]}.
ClusterSpec cluster_from_json_text(const std::string& text);
std::string cluster_to_json(const ClusterSpec& cluster);

}  // namespace vcflow
