#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vcflow/types.hpp"

namespace vcflow {

enum class Severity { Hard, Soft, Both };  // Both appears only in catalog metadata

enum class Direction { Incoming, Outgoing };

// Surface-level atom target inside a contract or requires block.
struct AtomTarget {
    enum class Kind { Self, Node, Input, Output, File, Config, AllNodes, SomeNode };
    Kind kind = Kind::Self;
    std::string arg;  // label (Input/Output), path (File), key (Config)
};

enum class CompareOp { Eq, Lt, Gt, Le, Ge };

std::string op_symbol(CompareOp op);

struct ContractClause;
using ClausePtr = std::shared_ptr<ContractClause>;

enum class ClauseKind { Atom, ForAll, IfThen, ShellProbe, Builtin };

enum class BuiltinCheck { CommandLoggedNoError, InputsNotChanged };

enum class FailureAction { Fail, Warn };

struct ContractClause {
    ClauseKind kind = ClauseKind::Atom;
    std::optional<Severity> severity_override;  // per-clause, default hard

    // Atom
    AtomTarget target;
    std::string property;               // registry name
    std::optional<std::string> param;   // executable name, format tag, license, key
    CompareOp op = CompareOp::Eq;
    PropertyValue constant = true;

    // ForAll
    std::string binder;
    std::string glob;       // resolved in the task sandbox at check time
    ClausePtr body;

    // IfThen
    ClausePtr condition;
    FailureAction action = FailureAction::Fail;

    // ShellProbe: exit status 0 <=> true; may reference ${binder} variables
    std::string probe_command;

    // Builtin
    BuiltinCheck builtin = BuiltinCheck::CommandLoggedNoError;

    bool structurally_equal(const ContractClause& other) const;
    // Human-readable one-line rendering, used in reports and serialization.
    std::string render() const;
};

struct ContractSet {
    std::vector<ClausePtr> requires_;  // checked before task start
    std::vector<ClausePtr> promises;   // checked after task end

    bool structurally_equal(const ContractSet& other) const;
};

ClausePtr make_atom(AtomTarget target, std::string property, CompareOp op, PropertyValue constant,
                    std::optional<std::string> param = std::nullopt);
ClausePtr make_forall(std::string binder, std::string glob, ClausePtr body);
ClausePtr make_if_then(ClausePtr condition, FailureAction action);
ClausePtr make_probe(std::string command);
ClausePtr make_builtin(BuiltinCheck check);

}  // namespace vcflow
