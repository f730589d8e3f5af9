#include "topodeck/io.hpp"

#include <istream>
#include <ostream>

namespace topodeck::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw TopologyError(ErrorKind::Malformed, what); }

json points_json(PointSet s) { return to_points(s); }

PointSet points_from(const json& list, int n) {
  if (!list.is_array()) malformed("expected a list of points");
  PointSet s = 0;
  for (const auto& v : list) {
    if (!v.is_number_integer()) malformed("points must be integers");
    const int x = v.get<int>();
    if (x < 0 || x >= n)
      throw TopologyError(ErrorKind::PointOutOfRange, "point " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
    s |= singleton(x);
  }
  return s;
}

json verdict_json(const PropertyVerdict& v) {
  json out{{"property", v.property}, {"scope", v.scope}, {"reconstructible", v.reconstructible}};
  if (v.witness) {
    out["witness_class"] = *v.witness;
    out["witness_members"] = v.witness_members;
    out["witness_values"] = v.witness_values;
  } else {
    out["witness_class"] = nullptr;
  }
  return out;
}

json class_json(const DeckClass& c) {
  json members = json::array();
  for (const auto& key : c.members) members.push_back(key.hex());
  return {{"fingerprint", c.fingerprint}, {"members", members}};
}

}  // namespace

json space_to_json(const FiniteSpace& space) {
  json opens = json::array();
  for (PointSet o : space.opens()) opens.push_back(points_json(o));
  return {{"n", space.n()}, {"opens", opens}};
}

FiniteSpace space_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) malformed("space needs an integer \"n\"");
  const int n = doc["n"].get<int>();
  if (n < 1 || n > kMaxPoints)
    throw TopologyError(ErrorKind::PointOutOfRange, "point count " + std::to_string(n) + " outside 1..16");
  if (doc.contains("opens")) {
    if (!doc["opens"].is_array()) malformed("\"opens\" must be a list");
    std::vector<PointSet> family;
    for (const auto& o : doc["opens"]) family.push_back(points_from(o, n));
    return to_space(validate(std::move(family), n));
  }
  if (doc.contains("preorder")) {
    const auto& rows = doc["preorder"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) malformed("\"preorder\" must have n rows");
    std::vector<std::vector<bool>> matrix;
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != n) malformed("\"preorder\" rows must have n entries");
      std::vector<bool> bits;
      for (const auto& v : row) {
        if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) malformed("preorder entries are 0 or 1");
        bits.push_back(v.get<int>() == 1);
      }
      matrix.push_back(std::move(bits));
    }
    return FiniteSpace::from_preorder(matrix);
  }
  malformed("space needs \"opens\" or \"preorder\"");
}

json deck_to_json(const Deck& deck, const MultiDeck& multideck) {
  json keys = json::array(), counted = json::array();
  for (const auto& key : deck.keys) keys.push_back(key.hex());
  for (const auto& [key, count] : multideck.entries) counted.push_back(json::array({key.hex(), count}));
  return {{"deck", keys}, {"multideck", counted}};
}

json properties_to_json(const PropertyVector& p) {
  const auto& s = p.separation;
  json out{{"t0", s.t0},
           {"t1", s.t1},
           {"t2", s.t2},
           {"regular", s.regular},
           {"completely_regular", s.completely_regular},
           {"normal", s.normal},
           {"hereditarily_normal", s.hereditarily_normal},
           {"perfectly_normal", s.perfectly_normal},
           {"isolated_count", p.isolated_count},
           {"weight", p.weight},
           {"density", p.density},
           {"connected", p.connected},
           {"component_count", p.component_count},
           {"totally_disconnected", p.totally_disconnected},
           {"dispersion_points", points_json(p.dispersion_points)},
           {"cut_points", points_json(p.cut_points)}};
  out["cellularity"] = p.cellularity ? json(*p.cellularity) : json(nullptr);
  out["spread"] = p.spread ? json(*p.spread) : json(nullptr);
  return out;
}

PropertyVector properties_from_json(const json& doc) {
  try {
    PropertyVector p;
    auto& s = p.separation;
    s.t0 = doc.at("t0").get<bool>();
    s.t1 = doc.at("t1").get<bool>();
    s.t2 = doc.at("t2").get<bool>();
    s.regular = doc.at("regular").get<bool>();
    s.completely_regular = doc.at("completely_regular").get<bool>();
    s.normal = doc.at("normal").get<bool>();
    s.hereditarily_normal = doc.at("hereditarily_normal").get<bool>();
    s.perfectly_normal = doc.at("perfectly_normal").get<bool>();
    p.isolated_count = doc.at("isolated_count").get<int>();
    p.weight = doc.at("weight").get<int>();
    p.density = doc.at("density").get<int>();
    if (!doc.at("cellularity").is_null()) p.cellularity = doc.at("cellularity").get<int>();
    if (!doc.at("spread").is_null()) p.spread = doc.at("spread").get<int>();
    p.connected = doc.at("connected").get<bool>();
    p.component_count = doc.at("component_count").get<int>();
    p.totally_disconnected = doc.at("totally_disconnected").get<bool>();
    p.dispersion_points = points_from(doc.at("dispersion_points"), kMaxPoints);
    p.cut_points = points_from(doc.at("cut_points"), kMaxPoints);
    return p;
  } catch (const json::exception& e) {
    malformed(std::string("bad property vector: ") + e.what());
  }
}

void write_catalog(std::ostream& out, const Catalog& catalog) {
  out << json{{"n", catalog.n}, {"method", catalog.method}, {"count", catalog.entries.size()}}.dump() << '\n';
  for (const auto& entry : catalog.entries)
    out << json{{"key", entry.key.hex()}, {"space", space_to_json(entry.space)}, {"props", properties_to_json(entry.props)}}
               .dump()
        << '\n';
}

Catalog read_catalog(std::istream& in) {
  auto parse_line = [](const std::string& line, std::size_t number) {
    try {
      return json::parse(line);
    } catch (const json::parse_error&) {
      malformed("catalog line " + std::to_string(number) + " is not valid JSON");
    }
  };

  std::string line;
  if (!std::getline(in, line)) malformed("catalog is empty");
  const json header = parse_line(line, 1);
  Catalog catalog;
  std::size_t expected = 0;
  try {
    catalog.n = header.at("n").get<int>();
    catalog.method = header.at("method").get<std::string>();
    expected = header.at("count").get<std::size_t>();
  } catch (const json::exception&) {
    malformed("catalog header needs n, method and count");
  }

  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    const json doc = parse_line(line, number);
    const std::string where = "catalog line " + std::to_string(number);
    if (!doc.is_object() || !doc.contains("key") || !doc.contains("space") || !doc.contains("props"))
      malformed(where + " needs key, space and props");
    CatalogEntry entry;
    try {
      entry.key = CanonicalKey::from_hex(doc["key"].get<std::string>());
      entry.space = space_from_json(doc["space"]);
    } catch (const json::exception&) {
      malformed(where + " has a malformed key");
    } catch (const TopologyError& e) {
      malformed(where + ": " + e.what());
    }
    entry.props = properties_from_json(doc["props"]);
    if (entry.space.n() != catalog.n) malformed(where + " has the wrong point count");
    if (canonical_key(entry.space) != entry.key) malformed(where + ": key does not match the space");
    if (compute_properties(entry.space) != entry.props) malformed(where + ": properties do not match the space");
    if (!catalog.entries.empty() && !(catalog.entries.back().key < entry.key))
      malformed(where + ": keys are not strictly increasing");
    // Representatives are stored canonically labeled.
    entry.space = entry.key.decode();
    catalog.entries.push_back(std::move(entry));
  }
  if (catalog.entries.size() != expected)
    malformed("catalog header promises " + std::to_string(expected) + " entries, found " +
              std::to_string(catalog.entries.size()));
  return catalog;
}

json suite_to_json(const TheoremSuite& suite) {
  json theorems = json::object(), details = json::object(), analogs = json::object();
  for (const auto& c : suite.checks) {
    theorems[c.id] = to_string(c.status);
    json d{{"description", c.description}, {"status", to_string(c.status)}};
    if (c.witness) {
      d["witness"] = *c.witness;
      d["detail"] = c.detail;
    }
    details[c.id] = d;
  }
  for (const auto& a : suite.analogs) {
    json d{{"description", a.description},
           {"label", "finite analog"},
           {"applicable", a.applicable},
           {"spaces_checked", a.spaces_checked},
           {"counterexamples", a.counterexamples},
           {"outcome", !a.applicable ? "n/a" : (a.counterexamples == 0 ? "holds" : "counterexample")}};
    if (a.witness) {
      d["witness"] = *a.witness;
      d["detail"] = a.detail;
    }
    analogs[a.id] = d;
  }
  return {{"n", suite.n}, {"theorems", theorems}, {"theorem_details", details}, {"analogs", analogs},
          {"passed", suite.passed()}};
}

json report_to_json(const AuditReport& report) {
  json classes = json::array(), collisions = json::array(), verdicts = json::object();
  for (const auto& c : report.classes) classes.push_back(class_json(c));
  for (const auto& c : report.collisions) {
    json entry = class_json(c);
    entry["label"] = report.degenerate ? "degenerate n=2" : "collision";
    collisions.push_back(entry);
  }
  for (const auto& v : report.property_audit)
    verdicts[v.scope == "all" ? v.property : v.property + "[" + v.scope + "]"] = verdict_json(v);
  const json suite = suite_to_json(report.theorems);
  return {{"n", report.n},
          {"mode", to_string(report.mode)},
          {"degenerate", report.degenerate},
          {"classes", classes},
          {"collisions", collisions},
          {"collision_count", report.degenerate ? 0 : report.collisions.size()},
          {"property_audit", verdicts},
          {"theorems", suite["theorems"]},
          {"theorem_details", suite["theorem_details"]},
          {"analogs", suite["analogs"]}};
}

}  // namespace topodeck::io
