#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "vcflow/contract.hpp"
#include "vcflow/types.hpp"

namespace vcflow {

// Reserved ids for the synthetic source/sink tasks injected by the desugarer.
inline const TaskId kStartTask = "__start__";
inline const TaskId kEndTask = "__end__";

using Dep = std::pair<TaskId, TaskId>;  // (producer, consumer)

struct TaskDef {
    TaskId id;
    std::optional<std::string> command;  // absent for pure-simulation and synthetic tasks
    std::vector<LabelId> inputs;
    std::vector<LabelId> outputs;
    ResourceVector resources;
    std::optional<double> max_runtime_s;
    ContractSet contracts;
    std::optional<SimProfile> sim;
    std::map<std::string, PropertyValue> params;  // config_param(key) facts
};

struct LogicalDaw {
    std::set<TaskId> tasks;
    std::set<Dep> deps;
    std::map<Dep, LabelId> labels;  // total on deps
    TaskId start;
    TaskId end;
    std::map<TaskId, TaskDef> task_defs;
    std::map<LabelId, std::string> label_files;  // exchange file name per label

    std::vector<TaskId> predecessors(const TaskId& t) const;
    std::vector<TaskId> successors(const TaskId& t) const;
    std::vector<Dep> incoming_deps(const TaskId& t) const;
    std::vector<Dep> outgoing_deps(const TaskId& t) const;
    const std::string& file_for(const LabelId& label) const;
};

enum class TaskState { Finished, Ready, Open };

char state_letter(TaskState s);

struct DawState {
    std::map<TaskId, TaskState> assignment;

    bool operator==(const DawState& other) const { return assignment == other.assignment; }
    bool operator<(const DawState& other) const { return assignment < other.assignment; }
    std::set<TaskId> finished_set() const;
};

struct StepRecord {
    std::set<TaskId> finished;          // tasks moved R -> F in this step
    double time = 0.0;                  // wall or sim timestamp of the transition
    std::map<TaskId, NodeId> node_of;   // where the finished tasks ran
};

struct ExecutionTrace {
    std::vector<DawState> states;       // S_0 ... S_n
    std::vector<StepRecord> steps;      // steps[i] is step i+1 (transition into states[i+1])
    bool complete = false;              // S_n assigns F to the end task

    std::size_t step_count() const { return steps.size(); }
};

enum class StructuralErrorKind {
    MissingStartOrEnd,
    StartHasIncoming,
    EndHasOutgoing,
    Cycle,
    ExtraSource,       // non-start task with no predecessors
    ExtraSink,         // non-end task with no successors
    Unreachable,       // not reachable from start
    CannotReachEnd,
    UnlabeledDep,
    LabelOnMissingDep,
    DepEndpointUnknown,
};

struct StructuralError {
    StructuralErrorKind kind;
    std::string message;
    std::vector<TaskId> tasks;  // offending tasks / edge endpoints
};

struct NodeDescriptor {
    NodeId id;
    ResourceVector capacity;  // memory_bytes, cpu_cores, gpu_count, disk_bytes
    std::set<std::string> installed_executables;
    std::set<std::string> present_files;  // virtual paths (simulation)
    bool alive = true;
};

struct ClusterSpec {
    std::vector<NodeDescriptor> nodes;

    const NodeDescriptor* find(const NodeId& id) const;
    void validate() const;  // unique ids, >= 1 node, nonnegative capacities
};

struct Schedule {
    std::map<TaskId, NodeId> assignment;
};

struct PhysicalDaw {
    const LogicalDaw* daw = nullptr;
    const ClusterSpec* cluster = nullptr;
    Schedule schedule;

    const NodeId& node_of(const TaskId& t) const;
};

// --- operations -------------------------------------------------------------

std::vector<StructuralError> validate_structure(const LogicalDaw& daw);

// Requires a structurally valid DAW (throws InvalidArgument otherwise).
DawState initial_state(const LogicalDaw& daw);

bool is_valid_state(const LogicalDaw& daw, const DawState& state);

// The unique valid state whose finished-set is `finished`; requires the set to
// be downward-closed and to contain the start task.
DawState state_from_finished_set(const LogicalDaw& daw, const std::set<TaskId>& finished);

// All valid successors reachable by finishing a nonempty subset of ready tasks.
std::set<DawState> next_states(const LogicalDaw& daw, const DawState& state);

// Every maximal chain of next_states from the initial to the all-finished state.
// Throws BoundExceeded when more than max_count traces exist.
std::vector<ExecutionTrace> enumerate_executions(const LogicalDaw& daw, std::size_t max_count);

PhysicalDaw apply_schedule(const LogicalDaw& daw, const ClusterSpec& cluster, const Schedule& schedule);

}  // namespace vcflow
