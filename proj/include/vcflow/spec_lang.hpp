#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vcflow/constraint.hpp"
#include "vcflow/contract.hpp"
#include "vcflow/daw.hpp"
#include "vcflow/types.hpp"

namespace vcflow {

struct SourcePos {
    int line = 0;
    int col = 0;
};

struct ParamDef {
    std::string name;
    PropertyValue value;
    std::optional<PropertyValue> range_min;
    std::optional<PropertyValue> range_max;
    SourcePos pos;
};

struct TaskDecl {
    TaskId id;
    std::optional<std::string> run;
    std::vector<LabelId> inputs;
    std::vector<LabelId> outputs;
    ResourceVector resources;
    bool has_resources = false;
    std::optional<double> max_runtime_s;
    ContractSet contracts;
    std::optional<SimProfile> sim;
    SourcePos pos;
};

struct DepDecl {
    LabelId label;
    TaskId producer;
    TaskId consumer;
    std::optional<std::string> filename;  // `as "name"`, default = label
    SourcePos pos;
};

struct InputDecl {
    LabelId label;
    TaskId consumer;
    std::string path;                     // relative to the run workdir
    std::optional<std::string> filename;  // staged name, default = basename(path)
    SourcePos pos;
};

struct WorkflowDocument {
    std::string name;
    std::vector<ParamDef> params;
    std::vector<TaskDecl> tasks;
    std::vector<DepDecl> deps;
    std::vector<InputDecl> inputs;
    std::vector<ClausePtr> requires_;  // workflow-level static clauses

    bool structurally_equal(const WorkflowDocument& other) const;
};

struct LintWarning {
    std::string code;  // tautology, misplaced-check, unreferenced-label
    std::string message;
    SourcePos pos;
};

struct DesugarResult {
    LogicalDaw daw;
    std::vector<ValidityConstraint> static_vcs;
    std::map<TaskId, std::vector<ValidityConstraint>> dynamic_vcs;

    std::vector<ValidityConstraint> all_dynamic() const;
};

// Parses `.vcw` text. Throws ParseError with file:line:col on failure.
WorkflowDocument parse(const std::string& text, const std::string& filename = "<input>");

// parse(serialize(doc)) is structurally equal to doc.
std::string serialize(const WorkflowDocument& doc);

DesugarResult desugar(const WorkflowDocument& doc);

std::vector<LintWarning> lint(const WorkflowDocument& doc);

}  // namespace vcflow
