#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vcflow/contract.hpp"
#include "vcflow/daw.hpp"
#include "vcflow/property.hpp"
#include "vcflow/types.hpp"

namespace vcflow {

enum class VcKind { Static, Dynamic };

enum class VcType { Static, Dynamic, DynamicPosthoc };  // Table-style s / d / d/p

enum class CheckTime { Before, During, After };

enum class Component { EE, S, RM, M };

enum class Recoverable { Yes, No, Maybe };

enum class AffectedObject { Setup, Task, File };

enum class NodeQuantifier { AtLeastOneNode, AllNodes };

std::string to_string(Severity s);
std::string to_string(VcType t);
std::string to_string(CheckTime t);
std::string to_string(Component c);
std::string to_string(Recoverable r);
std::string to_string(AffectedObject o);

struct VcMetadata {
    Severity severity = Severity::Hard;
    AffectedObject affected = AffectedObject::Task;
    VcType vc_type = VcType::Dynamic;
    std::set<CheckTime> time_of_check;
    std::set<Component> components;
    Recoverable recoverable = Recoverable::Maybe;
    std::string targets;  // property-function forms, e.g. "P_D^i(s),P_D^o(s)"
};

struct PropertyRef {
    TargetKind kind = TargetKind::Task;
    std::optional<TaskId> task;    // Task target, or Node target = scheduled node of task
    std::optional<LabelId> label;  // DepLabel target
    Direction direction = Direction::Incoming;
    std::optional<NodeId> node;    // explicit Node target; nullopt = task's node / quantified
    std::optional<std::string> path;  // Path target
    std::string property;
    std::optional<std::string> param;

    std::string render() const;
};

struct ValidityConstraint {
    std::string id;
    VcKind kind = VcKind::Dynamic;
    PropertyRef lhs;
    CompareOp op = CompareOp::Eq;
    PropertyValue rhs = true;
    std::optional<NodeQuantifier> quantifier;  // node-targeted static VCs only
    VcMetadata metadata;
    std::string origin;       // "catalog:<name>" or "contract:<task>:<block>[<i>]"
    std::string catalog_name; // builtin catalog entry realized by this VC (may be empty)
    ClausePtr clause;         // present when lhs.property == "contract_clause"

    std::string render() const;
};

struct Scope {
    std::size_t step_index = 0;
    std::set<TaskId> executed;                // X(s)
    std::set<Dep> incoming;                   // Y^i(s)
    std::set<Dep> outgoing;                   // Y^o(s)
    std::map<TaskId, NodeId> node_of;         // C(s, t), defined on all of X(s)
};

enum class EvalOutcome { Holds, Violated, Unevaluable };

struct Evaluation {
    EvalOutcome outcome = EvalOutcome::Holds;
    std::string observed;            // rendered observed value (empty when vacuous)
    std::vector<std::string> implicated;  // tasks / nodes / files involved
    std::string detail;
};

enum class ViolationVerdict { Violated, Warned, Recovered, Unevaluable };

struct RecoveryAttempt {
    std::string action;   // retry_same_node, reschedule_other_node, abort_workflow, warn_only
    bool succeeded = false;
    std::string detail;
};

struct ViolationReport {
    std::string constraint_id;
    std::string catalog_name;
    VcMetadata metadata;
    ViolationVerdict verdict = ViolationVerdict::Violated;
    std::optional<std::size_t> step_index;  // nullopt = pre-execution (static)
    std::vector<std::string> implicated;
    std::string observed;
    std::string bound;
    Component responsible = Component::EE;
    double timestamp = 0.0;
    std::vector<RecoveryAttempt> recovery;
    std::string constraint_text;
    std::string detail;
};

struct SetupVerdict {
    bool correct = true;
    std::vector<ViolationReport> violations;
};

struct ExecutionVerdict {
    bool correct = true;
    SetupVerdict setup;
    std::vector<bool> step_correct;              // indexed by step (0 = initial, vacuous)
    std::optional<std::size_t> first_erroneous_step;
    std::vector<ViolationReport> violations;     // across all steps, in step order
};

// --- operations -------------------------------------------------------------

Evaluation evaluate_static(const ValidityConstraint& vc, const LogicalDaw& daw,
                           const ClusterSpec& cluster, const PropertyEnvironment& env);

Scope compute_scope(const ExecutionTrace& trace, std::size_t step, const LogicalDaw& daw,
                    const Schedule& schedule);

Evaluation evaluate_dynamic(const ValidityConstraint& vc, const Scope& scope,
                            const PropertyEnvironment& env);

SetupVerdict check_setup(const LogicalDaw& daw, const ClusterSpec& cluster,
                         const std::vector<ValidityConstraint>& static_vcs,
                         const PropertyEnvironment& env);

// Re-evaluates every VC at every step of the trace against per-step snapshots.
// step_envs[i] freezes the facts observable at step i; step_envs.size() must be
// trace.states.size() (one snapshot per step, index 0 = initial).
ExecutionVerdict check_execution(const ExecutionTrace& trace, const Schedule& schedule,
                                 const ClusterSpec& cluster, const LogicalDaw& daw,
                                 const std::vector<ValidityConstraint>& static_vcs,
                                 const std::vector<ValidityConstraint>& dynamic_vcs,
                                 const PropertyEnvironment& setup_env,
                                 const std::vector<PropertyEnvironment>& step_envs);

ViolationReport report_from(const ValidityConstraint& vc, const Evaluation& eval,
                            std::optional<std::size_t> step_index, double timestamp);

}  // namespace vcflow
