#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vcflow/constraint.hpp"
#include "vcflow/daw.hpp"
#include "vcflow/property.hpp"

namespace vcflow {

struct RetryPolicy {
    int max_attempts = 1;      // attempts on the same node before escalating
    double backoff_base_s = 0.0;
    double backoff_cap_s = 0.0;

    double backoff_for(int attempt) const;  // delay before attempt N (1-based)
};

enum class EngineMode { Real, Simulated };

struct EngineConfig {
    EngineMode mode = EngineMode::Real;
    int max_parallel_tasks = 4;
    RetryPolicy retry;
    double heartbeat_interval_s = 1.0;
    int heartbeat_miss_threshold = 3;
    double poll_interval_s = 0.02;   // during-check polling (real mode)
    std::string sandbox_root;        // real mode working area
    std::string workdir = ".";       // where declared workflow inputs live
    std::uint64_t seed = 0;
    std::string scheduler_policy = "first-fit";
    bool static_checks = true;
    bool keep_sandbox = false;

    void validate() const;  // intervals > 0, attempts >= 1
};

struct CheckOutcome {
    std::string constraint_id;
    EvalOutcome outcome = EvalOutcome::Holds;
    std::string detail;
};

// One task attempt. Created at launch; before-check failures never launch and
// therefore never create a record.
struct RunRecord {
    TaskId task;
    int attempt = 1;
    NodeId node;
    double start_time = 0.0;
    double end_time = 0.0;
    std::optional<std::int64_t> exit_code;  // empty when killed
    bool killed_timeout = false;
    std::string stdout_path;
    std::string stderr_path;
    std::int64_t peak_memory_bytes = 0;
    std::vector<CheckOutcome> before_checks;
    std::vector<CheckOutcome> during_checks;
    std::vector<CheckOutcome> after_checks;
};

enum class RecoveryActionKind { RetrySameNode, RescheduleOtherNode, AbortWorkflow, WarnOnly };

std::string to_string(RecoveryActionKind a);

// Policy table: what to do about a violated constraint.
RecoveryActionKind recovery_action(Severity severity, Recoverable recoverable, int attempts_so_far,
                                   const RetryPolicy& policy, bool other_node_available,
                                   bool already_rescheduled);

enum class RunStatus { Correct, Failed, AbortedStatic, TaskFailed };

std::string to_string(RunStatus s);

struct EngineEvent {
    double time = 0.0;
    Component component = Component::EE;
    std::string kind;
    std::string payload;
};

struct RunResult {
    RunStatus status = RunStatus::Correct;
    ExecutionTrace trace;
    std::vector<RunRecord> records;
    std::vector<ViolationReport> violations;
    std::optional<std::size_t> first_erroneous_step;
    std::vector<EngineEvent> events;
    Schedule schedule;
    double end_time = 0.0;                       // wall seconds (real) or sim time
    std::vector<PropertyEnvironment> step_envs;  // one frozen snapshot per trace state
    PropertyEnvironment setup_env;
    std::string sandbox_root;                    // preserved when keep_sandbox
};

struct LivenessEvent {
    double time = 0.0;
    NodeId node;
    bool alive = false;  // false = dead event
};

// --- operations -------------------------------------------------------------

// First-fit by descending memory request; deterministic. Throws InvalidArgument
// naming the task and binding dimension when some task fits no node.
Schedule plan(const LogicalDaw& daw, const ClusterSpec& cluster, const std::string& policy = "first-fit");

// Like plan(), but assigns infeasible tasks to the largest node instead of
// failing; used when static checks are disabled.
Schedule plan_best_effort(const LogicalDaw& daw, const ClusterSpec& cluster, const std::string& policy = "first-fit");

RunResult run(const LogicalDaw& daw, const ClusterSpec& cluster,
              const std::optional<Schedule>& schedule,
              const std::vector<ValidityConstraint>& static_vcs,
              const std::vector<ValidityConstraint>& dynamic_vcs, const EngineConfig& config);

// Scans recorded beats (node -> ascending beat times) up to `horizon` and
// reports dead/alive transitions per the miss-threshold policy.
std::vector<LivenessEvent> monitor_heartbeats(const std::map<NodeId, std::vector<double>>& beats,
                                              const EngineConfig& config, double horizon);

// Re-evaluates every d/p-classified VC from the recorded evidence and the
// preserved sandbox. Verdict reports carry the same constraint ids as live.
std::vector<ViolationReport> recheck_posthoc(const RunResult& result,
                                             const std::string& sandbox_root,
                                             const std::vector<ValidityConstraint>& dynamic_vcs,
                                             const LogicalDaw& daw);

// One paragraph per violation: constraint, all six catalog dimensions,
// implicated objects, suggested remediation.
std::string explain(const std::vector<ViolationReport>& reports);

// Metamorphic predicates are registered by name; the engine evaluates them
// after the task over (sandbox dir, input files, output files).
using MetamorphicPredicate =
    std::function<bool(const std::string& sandbox, const std::vector<std::string>& inputs,
                       const std::vector<std::string>& outputs)>;
void register_metamorphic_predicate(const std::string& name, MetamorphicPredicate fn);
const std::map<std::string, MetamorphicPredicate>& metamorphic_predicates();

}  // namespace vcflow
