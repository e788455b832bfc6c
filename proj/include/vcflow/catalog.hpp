#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vcflow/constraint.hpp"

namespace vcflow {

// Parameters accepted by instantiate_catalog; which fields are required is
// entry-specific (see each entry's schema in catalog.cpp).
struct CatalogParams {
    std::optional<TaskId> task;
    std::optional<LabelId> label;
    Direction direction = Direction::Incoming;
    std::optional<std::string> path;
    std::optional<std::string> property;   // registry name, where the entry allows a choice
    std::optional<CompareOp> op;
    std::optional<PropertyValue> value;
    std::optional<NodeQuantifier> quantifier;
    std::optional<std::string> param;      // executable / license / key / format / predicate
    std::optional<Severity> severity;      // override (must stay within the entry's class)
    std::optional<VcKind> kind;            // static variant where the entry allows it
};

struct CatalogEntry {
    std::string name;          // e.g. "task/ends-within-limits"
    VcMetadata metadata;       // the Table row (severity may be Both)
    bool allows_static = false;  // entry has a meaningful static instantiation
    std::string remediation;   // suggestion template used by explain()
};

const std::vector<CatalogEntry>& builtin_catalog();

// Throws InvalidArgument for unknown names.
const CatalogEntry& catalog_entry(const std::string& name);

VcMetadata classify(const std::string& entry_name);

ValidityConstraint instantiate_catalog(const std::string& entry_name, const CatalogParams& params);

// Rendering of the full catalog, one line per entry; byte-stable (golden-tested).
std::string render_catalog_table();
std::string render_catalog_row(const CatalogEntry& entry);

}  // namespace vcflow
