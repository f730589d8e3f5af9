#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "topodeck/audit.hpp"
#include "topodeck/deck.hpp"
#include "topodeck/enumerate.hpp"
#include "topodeck/properties.hpp"
#include "topodeck/space.hpp"

namespace topodeck::io {

using nlohmann::json;

/// {"n": n, "opens": [[points...], ...]} in normalized order.
json space_to_json(const FiniteSpace& space);
/// Accepts the "opens" form (validated) or the "preorder" form (rows of 0/1,
/// row x column y meaning rel(x, y)). Throws TopologyError.
FiniteSpace space_from_json(const json& doc);

json deck_to_json(const Deck& deck, const MultiDeck& multideck);
json properties_to_json(const PropertyVector& props);
PropertyVector properties_from_json(const json& doc);

/// Header line then one entry per line.
void write_catalog(std::ostream& out, const Catalog& catalog);
/// Rejects truncated files, unsorted keys, and entries whose key, space or
/// properties disagree with a recomputation. Throws TopologyError(Malformed).
Catalog read_catalog(std::istream& in);

json suite_to_json(const TheoremSuite& suite);
json report_to_json(const AuditReport& report);

}  // namespace topodeck::io
