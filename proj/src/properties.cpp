#include "topodeck/properties.hpp"

#include <algorithm>

namespace topodeck {

namespace {

// rel restricted to the subspace on `within`; regular/normal checks only need
// the traces of U_x and cl{x} on it.
bool normal_within(const FiniteSpace& s, PointSet within) {
  for (int a = 0; a < s.n(); ++a) {
    if (!contains(within, a)) continue;
    for (int b = a + 1; b < s.n(); ++b) {
      if (!contains(within, b)) continue;
      const bool closures_disjoint = (s.closure_of_point(a) & s.closure_of_point(b) & within) == 0;
      const bool opens_meet = (s.min_open(a) & s.min_open(b) & within) != 0;
      if (closures_disjoint && opens_meet) return false;
    }
  }
  return true;
}

void require_exhaustive(const FiniteSpace& s) {
  if (s.n() > kExhaustiveLimit)
    throw TopologyError(ErrorKind::SpaceTooLarge,
                        "exhaustive search supports at most " + std::to_string(kExhaustiveLimit) + " points");
}

}  // namespace

bool is_t0(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    for (int y = x + 1; y < s.n(); ++y)
      if (s.min_open(x) == s.min_open(y)) return false;
  return true;
}

bool is_t1(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    if (s.min_open(x) != singleton(x)) return false;
  return true;
}

bool is_t2(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    for (int y = x + 1; y < s.n(); ++y)
      if (s.min_open(x) & s.min_open(y)) return false;
  return true;
}

// A point x and a closed set A fail to separate iff some a in A has U_a
// meeting U_x; cl{a} is then already a failing closed set.
bool is_regular(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    for (int a = 0; a < s.n(); ++a)
      if (!contains(s.closure_of_point(a), x) && (s.min_open(a) & s.min_open(x))) return false;
  return true;
}

bool is_completely_regular(const FiniteSpace& s) {
  for (int x = 0; x < s.n(); ++x)
    for (int y = 0; y < s.n(); ++y)
      if (s.min_open(x) != s.min_open(y) && (s.min_open(x) & s.min_open(y))) return false;
  return true;
}

bool is_normal(const FiniteSpace& s) { return normal_within(s, s.all()); }

bool is_hereditarily_normal(const FiniteSpace& s) {
  for (unsigned sub = 1; sub <= s.all(); ++sub)
    if (!normal_within(s, static_cast<PointSet>(sub))) return false;
  return true;
}

// Closed sets are G-delta only if open here; every closed set open means the
// preorder is symmetric.
bool is_perfectly_normal(const FiniteSpace& s) {
  if (!is_normal(s)) return false;
  for (int x = 0; x < s.n(); ++x)
    if (s.min_open(x) != s.closure_of_point(x)) return false;
  return true;
}

SeparationAxioms separation_axioms(const FiniteSpace& s) {
  SeparationAxioms out;
  out.t0 = is_t0(s);
  out.t1 = is_t1(s);
  out.t2 = is_t2(s);
  out.regular = is_regular(s);
  out.completely_regular = is_completely_regular(s);
  out.normal = is_normal(s);
  out.hereditarily_normal = is_hereditarily_normal(s);
  out.perfectly_normal = is_perfectly_normal(s);
  return out;
}

PointSet isolated_points(const FiniteSpace& s) {
  PointSet out = 0;
  for (int x = 0; x < s.n(); ++x)
    if (s.min_open(x) == singleton(x)) out |= singleton(x);
  return out;
}

int isolated_count(const FiniteSpace& s) { return size_of(isolated_points(s)); }

int weight(const FiniteSpace& s) {
  std::vector<PointSet> distinct(s.min_opens().begin(), s.min_opens().end());
  std::sort(distinct.begin(), distinct.end());
  return static_cast<int>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
}

int density(const FiniteSpace& s) {
  std::vector<PointSet> minimal;
  for (PointSet u : s.min_opens()) {
    const bool has_smaller = std::any_of(s.min_opens().begin(), s.min_opens().end(),
                                         [&](PointSet v) { return v != u && is_subset(v, u); });
    if (!has_smaller) minimal.push_back(u);
  }
  std::sort(minimal.begin(), minimal.end());
  return static_cast<int>(std::unique(minimal.begin(), minimal.end()) - minimal.begin());
}

int cellularity(const FiniteSpace& s) {
  require_exhaustive(s);
  std::vector<PointSet> opens = s.opens();
  opens.erase(opens.begin());  // the empty set
  int best = 0;
  auto grow = [&](auto&& self, size_t from, PointSet used, int count) -> void {
    best = std::max(best, count);
    if (count + size_of(static_cast<PointSet>(s.all() & ~used)) <= best) return;
    for (size_t i = from; i < opens.size(); ++i)
      if ((opens[i] & used) == 0) self(self, i + 1, used | opens[i], count + 1);
  };
  grow(grow, 0, 0, 0);
  return best;
}

int spread(const FiniteSpace& s) {
  require_exhaustive(s);
  int best = 0;
  for (unsigned sub = 1; sub <= s.all(); ++sub) {
    const auto set = static_cast<PointSet>(sub);
    if (size_of(set) <= best) continue;
    bool discrete = true;
    for (int x = 0; x < s.n() && discrete; ++x)
      if (contains(set, x) && (s.min_open(x) & set) != singleton(x)) discrete = false;
    if (discrete) best = size_of(set);
  }
  return best;
}

std::vector<PointSet> components(const FiniteSpace& s) {
  std::vector<PointSet> out;
  PointSet seen = 0;
  for (int start = 0; start < s.n(); ++start) {
    if (contains(seen, start)) continue;
    PointSet comp = singleton(start), frontier = comp;
    while (frontier) {
      PointSet next = 0;
      for (int x = 0; x < s.n(); ++x)
        if (contains(frontier, x)) next |= s.min_open(x) | s.closure_of_point(x);
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

bool connected(const FiniteSpace& s) { return components(s).size() == 1; }

bool totally_disconnected(const FiniteSpace& s) { return static_cast<int>(components(s).size()) == s.n(); }

PointSet dispersion_points(const FiniteSpace& s) {
  if (s.n() < 2) throw TopologyError(ErrorKind::SpaceTooSmall, "dispersion points need at least two points");
  if (!connected(s)) return 0;
  PointSet out = 0;
  for (int x = 0; x < s.n(); ++x)
    if (totally_disconnected(delete_point(s, x))) out |= singleton(x);
  return out;
}

PointSet cut_points(const FiniteSpace& s) {
  if (s.n() < 2) throw TopologyError(ErrorKind::SpaceTooSmall, "cut points need at least two points");
  PointSet out = 0;
  for (int x = 0; x < s.n(); ++x)
    if (!connected(delete_point(s, x))) out |= singleton(x);
  return out;
}

bool locally(const FiniteSpace& s, const SpacePredicate& p) {
  for (int x = 0; x < s.n(); ++x)
    if (!p(s.subspace(s.min_open(x)))) return false;
  return true;
}

PropertyVector compute_properties(const FiniteSpace& s) {
  PropertyVector v;
  v.separation = separation_axioms(s);
  v.isolated_count = isolated_count(s);
  v.weight = weight(s);
  v.density = density(s);
  if (s.n() <= kExhaustiveLimit) {
    v.cellularity = cellularity(s);
    v.spread = spread(s);
  }
  const auto comps = components(s);
  v.component_count = static_cast<int>(comps.size());
  v.connected = v.component_count == 1;
  v.totally_disconnected = v.component_count == s.n();
  if (s.n() >= 2) {
    v.dispersion_points = dispersion_points(s);
    v.cut_points = cut_points(s);
  }
  return v;
}

}  // namespace topodeck
