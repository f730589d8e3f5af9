#include "topodeck/audit.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "topodeck/deck.hpp"
#include "topodeck/parallel.hpp"
#include "topodeck/properties.hpp"

namespace topodeck {

const char* to_string(DeckMode mode) { return mode == DeckMode::Set ? "set-deck" : "multi-deck"; }

DeckMode parse_deck_mode(const std::string& text) {
  if (text == "set" || text == "set-deck") return DeckMode::Set;
  if (text == "multi" || text == "multi-deck") return DeckMode::Multi;
  throw TopologyError(ErrorKind::Malformed, "unknown deck mode '" + text + "'");
}

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "n/a";
}

bool TheoremSuite::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.status == CheckStatus::Fail; });
}

namespace {

void require_decks(const Catalog& catalog) {
  if (catalog.n < 2) throw TopologyError(ErrorKind::SpaceTooSmall, "deck classes need at least two points");
}

std::vector<DeckClass> group_fingerprints(const Catalog& catalog, const std::vector<std::string>& prints) {
  std::map<std::string, std::vector<CanonicalKey>> groups;
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) groups[prints[i]].push_back(catalog.entries[i].key);
  std::vector<DeckClass> out;
  for (auto& [print, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back({print, std::move(members)});
  }
  return out;
}

using Extractor = std::function<long(const PropertyVector&)>;

const std::vector<std::pair<std::string, Extractor>>& extractors() {
  static const std::vector<std::pair<std::string, Extractor>> table = {
      {"t0", [](const PropertyVector& p) { return long{p.separation.t0}; }},
      {"t1", [](const PropertyVector& p) { return long{p.separation.t1}; }},
      {"t2", [](const PropertyVector& p) { return long{p.separation.t2}; }},
      {"regular", [](const PropertyVector& p) { return long{p.separation.regular}; }},
      {"completely_regular", [](const PropertyVector& p) { return long{p.separation.completely_regular}; }},
      {"normal", [](const PropertyVector& p) { return long{p.separation.normal}; }},
      {"hereditarily_normal", [](const PropertyVector& p) { return long{p.separation.hereditarily_normal}; }},
      {"perfectly_normal", [](const PropertyVector& p) { return long{p.separation.perfectly_normal}; }},
      {"isolated_count", [](const PropertyVector& p) { return long{p.isolated_count}; }},
      {"weight", [](const PropertyVector& p) { return long{p.weight}; }},
      {"density", [](const PropertyVector& p) { return long{p.density}; }},
      {"cellularity", [](const PropertyVector& p) { return long{p.cellularity.value_or(-1)}; }},
      {"spread", [](const PropertyVector& p) { return long{p.spread.value_or(-1)}; }},
      {"connected", [](const PropertyVector& p) { return long{p.connected}; }},
      {"component_count", [](const PropertyVector& p) { return long{p.component_count}; }},
      {"totally_disconnected", [](const PropertyVector& p) { return long{p.totally_disconnected}; }},
      {"dispersion_points", [](const PropertyVector& p) { return long{size_of(p.dispersion_points)}; }},
      {"cut_points", [](const PropertyVector& p) { return long{size_of(p.cut_points)}; }},
  };
  return table;
}

// Facts about one card that the theorem checks consume.
struct CardFacts {
  bool t0, t1, t2, t3, t4;
  bool connected, totally_disconnected;
  bool locally_connected, locally_totally_disconnected;
  int isolated, weight, density;
};

struct SpaceFacts {
  bool t0, t1, t2, t3, t4;
  bool connected, totally_disconnected;
  bool locally_connected, locally_totally_disconnected;
  int isolated, weight, density, dispersion_count;
  std::vector<CardFacts> cards;
};

// T3 and T4 include T1 (hence Hausdorff), as in the separation theorem.
template <typename Facts>
void fill_common(Facts& f, const FiniteSpace& s) {
  f.t0 = is_t0(s);
  f.t1 = is_t1(s);
  f.t2 = is_t2(s);
  f.t3 = f.t1 && is_regular(s);
  f.t4 = f.t1 && is_normal(s);
  f.connected = connected(s);
  f.totally_disconnected = totally_disconnected(s);
  f.locally_connected = locally(s, [](const FiniteSpace& u) { return connected(u); });
  f.locally_totally_disconnected = locally(s, [](const FiniteSpace& u) { return totally_disconnected(u); });
  f.isolated = isolated_count(s);
  f.weight = weight(s);
  f.density = density(s);
}

SpaceFacts gather(const FiniteSpace& s) {
  SpaceFacts f{};
  fill_common(f, s);
  f.dispersion_count = size_of(dispersion_points(s));
  for (int x = 0; x < s.n(); ++x) {
    CardFacts c{};
    fill_common(c, delete_point(s, x));
    f.cards.push_back(c);
  }
  return f;
}

template <typename Pred>
bool all_cards(const SpaceFacts& f, Pred pred) {
  return std::all_of(f.cards.begin(), f.cards.end(), pred);
}
template <typename Pred>
bool any_card(const SpaceFacts& f, Pred pred) {
  return std::any_of(f.cards.begin(), f.cards.end(), pred);
}

// Runs `holds` over every catalog space; the first failure becomes the witness.
TheoremCheck run_check(const std::string& id, const std::string& description, const Catalog& catalog,
                       const std::vector<SpaceFacts>& facts, bool applicable,
                       const std::function<std::optional<std::string>(const SpaceFacts&)>& violation) {
  TheoremCheck check{id, description, CheckStatus::NotApplicable, std::nullopt, {}};
  if (!applicable) return check;
  check.status = CheckStatus::Pass;
  for (std::size_t i = 0; i < facts.size(); ++i)
    if (auto why = violation(facts[i])) {
      check.status = CheckStatus::Fail;
      check.witness = catalog.entries[i].key.hex();
      check.detail = *why;
      break;
    }
  return check;
}

std::string int_list(const std::vector<int>& values) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << ']';
  return os.str();
}

}  // namespace

std::vector<DeckClass> group_by_deck(const Catalog& catalog, DeckMode mode, int workers) {
  require_decks(catalog);
  auto prints = parallel_map(catalog.entries.size(), workers, [&](std::size_t i) {
    const auto& space = catalog.entries[i].space;
    return mode == DeckMode::Set ? deck(space).fingerprint() : multideck(space).fingerprint();
  });
  return group_fingerprints(catalog, prints);
}

std::vector<DeckClass> find_collisions(const Catalog& catalog, DeckMode mode, int workers) {
  auto classes = group_by_deck(catalog, mode, workers);
  std::erase_if(classes, [](const DeckClass& c) { return c.members.size() < 2; });
  return classes;
}

const std::vector<std::string>& audited_properties() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : extractors()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<PropertyVerdict> property_audit(const Catalog& catalog, const std::vector<DeckClass>& classes) {
  std::map<CanonicalKey, const PropertyVector*> by_key;
  for (const auto& entry : catalog.entries) by_key[entry.key] = &entry.props;

  auto audit_one = [&](const std::string& name, const Extractor& value, bool t1_only) {
    PropertyVerdict verdict{name, t1_only ? "t1" : "all", true, std::nullopt, {}, {}};
    for (const auto& cls : classes) {
      std::vector<const CanonicalKey*> members;
      for (const auto& key : cls.members)
        if (!t1_only || by_key.at(key)->separation.t1) members.push_back(&key);
      if (members.size() < 2) continue;
      const long first = value(*by_key.at(*members.front()));
      const bool constant = std::all_of(members.begin(), members.end(),
                                        [&](const CanonicalKey* k) { return value(*by_key.at(*k)) == first; });
      if (constant) continue;
      verdict.reconstructible = false;
      verdict.witness = cls.fingerprint;
      for (const auto* k : members) {
        verdict.witness_members.push_back(k->hex());
        verdict.witness_values.push_back(value(*by_key.at(*k)));
      }
      break;
    }
    return verdict;
  };

  std::vector<PropertyVerdict> out;
  for (const auto& [name, fn] : extractors()) out.push_back(audit_one(name, fn, false));
  for (const auto& [name, fn] : extractors())
    if (name == "isolated_count") out.push_back(audit_one(name, fn, true));
  return out;
}

TheoremSuite theorem_suite(const Catalog& catalog, int workers) {
  TheoremSuite suite;
  suite.n = catalog.n;
  const int n = catalog.n;
  const bool three = n >= 3;

  std::vector<SpaceFacts> facts;
  if (n >= 2)
    facts = parallel_map(catalog.entries.size(), workers, [&](std::size_t i) { return gather(catalog.entries[i].space); });

  suite.checks.push_back(run_check(
      "a", "X is T_i iff every card is T_i, for i in {0,1,2} and |X| >= 3", catalog, facts, three,
      [](const SpaceFacts& f) -> std::optional<std::string> {
        if (f.t0 != all_cards(f, [](const CardFacts& c) { return c.t0; })) return "T0 disagrees with its cards";
        if (f.t1 != all_cards(f, [](const CardFacts& c) { return c.t1; })) return "T1 disagrees with its cards";
        if (f.t2 != all_cards(f, [](const CardFacts& c) { return c.t2; })) return "T2 disagrees with its cards";
        return std::nullopt;
      }));

  suite.checks.push_back(run_check(
      "b", "all cards T3 and one card T4 implies X is T4", catalog, facts, three,
      [](const SpaceFacts& f) -> std::optional<std::string> {
        const bool premise = all_cards(f, [](const CardFacts& c) { return c.t3; }) &&
                             any_card(f, [](const CardFacts& c) { return c.t4; });
        if (premise && !f.t4) return "cards are T3 with a T4 card, but X is not T4";
        return std::nullopt;
      }));

  suite.checks.push_back(run_check(
      "c", "T1 spaces: i(X)-1 <= i(Y) <= i(X) for every card, and i(X) follows from the card counts", catalog,
      facts, three, [](const SpaceFacts& f) -> std::optional<std::string> {
        if (!f.t1) return std::nullopt;
        std::vector<int> counts;
        for (const auto& c : f.cards) counts.push_back(c.isolated);
        for (int i : counts)
          if (i < f.isolated - 1 || i > f.isolated) return "card isolated counts " + int_list(counts) + " vs i(X)=" + std::to_string(f.isolated);
        const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
        const int predicted = (*lo != *hi) ? *hi : (*lo == 0 ? 0 : *lo + 1);
        if (predicted != f.isolated)
          return "predicted i(X)=" + std::to_string(predicted) + " but i(X)=" + std::to_string(f.isolated);
        return std::nullopt;
      }));

  {
    TheoremCheck d{"d", "no set-deck collision class contains a T1 space with a positive number of isolated points",
                   CheckStatus::NotApplicable, std::nullopt, {}};
    if (three) {
      d.status = CheckStatus::Pass;
      std::map<CanonicalKey, const PropertyVector*> by_key;
      for (const auto& entry : catalog.entries) by_key[entry.key] = &entry.props;
      for (const auto& cls : find_collisions(catalog, DeckMode::Set, workers)) {
        for (const auto& key : cls.members) {
          const auto& p = *by_key.at(key);
          if (p.separation.t1 && p.isolated_count > 0) {
            d.status = CheckStatus::Fail;
            d.witness = key.hex();
            d.detail = "collision class " + cls.fingerprint + " has " + std::to_string(cls.members.size()) + " members";
            break;
          }
        }
        if (d.status == CheckStatus::Fail) break;
      }
    }
    suite.checks.push_back(d);
  }

  suite.checks.push_back(run_check(
      "g", "connected X, |X| >= 3: at most one dispersion point; a totally disconnected card forces all other cards connected",
      catalog, facts, three, [](const SpaceFacts& f) -> std::optional<std::string> {
        if (!f.connected) return std::nullopt;
        if (f.dispersion_count > 1) return std::to_string(f.dispersion_count) + " dispersion points";
        for (std::size_t x = 0; x < f.cards.size(); ++x) {
          if (!f.cards[x].totally_disconnected) continue;
          for (std::size_t y = 0; y < f.cards.size(); ++y)
            if (y != x && !f.cards[y].connected)
              return "card " + std::to_string(x) + " is totally disconnected but card " + std::to_string(y) +
                     " is disconnected";
        }
        return std::nullopt;
      }));

  suite.checks.push_back(run_check(
      "h", "X is totally disconnected iff every card is, for |X| >= 3", catalog, facts, three,
      [](const SpaceFacts& f) -> std::optional<std::string> {
        if (f.totally_disconnected != all_cards(f, [](const CardFacts& c) { return c.totally_disconnected; }))
          return "total disconnectedness disagrees with its cards";
        return std::nullopt;
      }));

  suite.checks.push_back(run_check(
      "i", "|X| > 3 with all cards connected is connected; no isolated points and one connected card gives connected",
      catalog, facts, three, [n](const SpaceFacts& f) -> std::optional<std::string> {
        if (n > 3 && all_cards(f, [](const CardFacts& c) { return c.connected; }) && !f.connected)
          return "all cards connected but X is not";
        if (f.isolated == 0 && any_card(f, [](const CardFacts& c) { return c.connected; }) && !f.connected)
          return "no isolated points and a connected card, but X is disconnected";
        return std::nullopt;
      }));

  suite.checks.push_back(run_check(
      "j", "T1 spaces: X is locally P iff every card is, for P in {connected, totally disconnected}", catalog, facts,
      three, [](const SpaceFacts& f) -> std::optional<std::string> {
        if (!f.t1) return std::nullopt;
        if (f.locally_connected != all_cards(f, [](const CardFacts& c) { return c.locally_connected; }))
          return "local connectedness disagrees with its cards";
        if (f.locally_totally_disconnected !=
            all_cards(f, [](const CardFacts& c) { return c.locally_totally_disconnected; }))
          return "local total disconnectedness disagrees with its cards";
        return std::nullopt;
      }));

  auto analog = [&](const std::string& id, const std::string& description,
                    const std::function<std::optional<std::string>(const SpaceFacts&)>& violation) {
    AnalogFinding finding{id, description, three, 0, 0, std::nullopt, {}};
    if (!three) return finding;
    for (std::size_t i = 0; i < facts.size(); ++i) {
      ++finding.spaces_checked;
      if (auto why = violation(facts[i])) {
        if (!finding.witness) {
          finding.witness = catalog.entries[i].key.hex();
          finding.detail = *why;
        }
        ++finding.counterexamples;
      }
    }
    return finding;
  };

  suite.analogs.push_back(analog("e", "finite analog of w(X) = sup of w over the cards",
                                 [](const SpaceFacts& f) -> std::optional<std::string> {
                                   std::vector<int> w;
                                   for (const auto& c : f.cards) w.push_back(c.weight);
                                   const int best = *std::max_element(w.begin(), w.end());
                                   if (best == f.weight) return std::nullopt;
                                   return "w(X)=" + std::to_string(f.weight) + ", card weights " + int_list(w);
                                 }));
  suite.analogs.push_back(analog("f", "finite analog of d(X) = inf of d over the cards",
                                 [](const SpaceFacts& f) -> std::optional<std::string> {
                                   std::vector<int> d;
                                   for (const auto& c : f.cards) d.push_back(c.density);
                                   const int least = *std::min_element(d.begin(), d.end());
                                   if (least == f.density) return std::nullopt;
                                   return "d(X)=" + std::to_string(f.density) + ", card densities " + int_list(d);
                                 }));
  return suite;
}

AuditReport audit(const Catalog& catalog, DeckMode mode, int workers) {
  AuditReport report;
  report.n = catalog.n;
  report.mode = mode;
  report.degenerate = catalog.n == 2;
  report.classes = group_by_deck(catalog, mode, workers);
  for (const auto& cls : report.classes)
    if (cls.members.size() >= 2) report.collisions.push_back(cls);
  report.property_audit = property_audit(catalog, report.classes);
  report.theorems = theorem_suite(catalog, workers);
  return report;
}

}  // namespace topodeck
