#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vcflow/daw.hpp"
#include "vcflow/types.hpp"

namespace vcflow {

enum class TargetKind { Task, DepLabel, Node, Path };

enum class ValueType { Int, Decimal, Bool, String };

// Closed, versioned registry of checkable properties. Comparisons are only
// well-defined for names registered here with a matching target kind.
struct RegistryEntry {
    std::string name;
    std::set<TargetKind> targets;
    ValueType type;
    bool takes_param = false;
    bool ordered = true;  // false: equality-only (bool, string)
    std::string unit;     // "bytes", "seconds", "count", ""
};

const std::vector<RegistryEntry>& property_registry();
const RegistryEntry* registry_lookup(const std::string& name);

// Facts frozen into a PropertyEnvironment snapshot.

struct FileFacts {
    bool exists = false;
    std::int64_t size_bytes = 0;
    std::string digest;                       // content digest (sha256 hex / virtual tag)
    std::map<std::string, bool> format_ok;    // per format tag
};

struct NodeFacts {
    ResourceVector capacity;
    std::set<std::string> executables;
    bool alive = true;
    double heartbeat_age_s = 0.0;
};

struct EvaluatedClause {
    enum class Outcome { Holds, Violated, Unevaluable };
    Outcome outcome = Outcome::Unevaluable;
    std::string detail;      // transcript / failure description
    std::string implicated;  // file or object the clause failed on
};

struct TaskFacts {
    std::optional<std::int64_t> exit_code;
    std::optional<double> runtime_s;
    bool stderr_empty = true;
    std::map<std::string, PropertyValue> config;            // config_param(key)
    std::map<std::string, bool> metamorphic_ok;             // per predicate name
    std::map<std::string, EvaluatedClause> clause_results;  // contract_clause(id)
};

// A frozen snapshot of every probe-able fact at one check point. Building a
// snapshot may touch the filesystem or run probes; evaluating constraints
// against it is pure.
struct PropertyEnvironment {
    std::map<NodeId, NodeFacts> nodes;
    std::map<std::string, FileFacts> files;    // keyed by exchange file name or path
    std::map<std::string, FileFacts> paths;    // workflow-level path probes
    std::set<std::string> licenses;
    std::map<TaskId, TaskFacts> tasks;
    std::map<std::string, bool> folders;       // folder_exists probes

    NodeFacts& node(const NodeId& id) { return nodes[id]; }
    TaskFacts& task(const TaskId& id) { return tasks[id]; }
};

// Node facts straight from a cluster spec (static views: before execution).
PropertyEnvironment environment_from_cluster(const ClusterSpec& cluster);

}  // namespace vcflow
