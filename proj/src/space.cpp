#include "topodeck/space.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace topodeck {

std::vector<int> to_points(PointSet s) {
  std::vector<int> out;
  for (int x = 0; x < kMaxPoints; ++x)
    if (contains(s, x)) out.push_back(x);
  return out;
}

PointSet from_points(std::span<const int> points) {
  PointSet s = 0;
  for (int x : points) {
    if (x < 0 || x >= kMaxPoints)
      throw TopologyError(ErrorKind::PointOutOfRange, "point " + std::to_string(x) + " out of range");
    s |= singleton(x);
  }
  return s;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingEmptyOrFull: return "MissingEmptyOrFull";
    case ErrorKind::NotUnionClosed: return "NotUnionClosed";
    case ErrorKind::NotIntersectionClosed: return "NotIntersectionClosed";
    case ErrorKind::PointOutOfRange: return "PointOutOfRange";
    case ErrorKind::SpaceTooSmall: return "SpaceTooSmall";
    case ErrorKind::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorKind::ScaleUnsupported: return "ScaleUnsupported";
    case ErrorKind::InvalidPreorder: return "InvalidPreorder";
    case ErrorKind::Malformed: return "Malformed";
  }
  return "Unknown";
}

namespace {

std::string set_text(PointSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int x : to_points(s)) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << '}';
  return os.str();
}

void check_point_count(int n) {
  if (n < 1 || n > kMaxPoints)
    throw TopologyError(ErrorKind::PointOutOfRange,
                        "point count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxPoints));
}

}  // namespace

bool normalized_less(PointSet a, PointSet b) {
  const int ca = size_of(a), cb = size_of(b);
  return ca != cb ? ca < cb : a < b;
}

bool OpenFamily::is_open(PointSet s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s, normalized_less);
}

OpenFamily validate(std::vector<PointSet> family, int n) {
  check_point_count(n);
  const PointSet all = full_set(n);
  for (PointSet s : family)
    if (!is_subset(s, all))
      throw TopologyError(ErrorKind::PointOutOfRange, "set " + set_text(s) + " is not a subset of the points",
                          {s, 0});

  std::sort(family.begin(), family.end(), normalized_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::unordered_set<PointSet> members(family.begin(), family.end());

  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j)
      if (!members.count(family[i] | family[j]))
        throw TopologyError(ErrorKind::NotUnionClosed,
                            "union of " + set_text(family[i]) + " and " + set_text(family[j]) + " is not open",
                            {family[i], family[j]});
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j)
      if (!members.count(family[i] & family[j]))
        throw TopologyError(ErrorKind::NotIntersectionClosed,
                            "intersection of " + set_text(family[i]) + " and " + set_text(family[j]) +
                                " is not open",
                            {family[i], family[j]});
  if (!members.count(0) || !members.count(all))
    throw TopologyError(ErrorKind::MissingEmptyOrFull, "family must contain the empty set and the full set");

  return OpenFamily(n, std::move(family));
}

FiniteSpace FiniteSpace::from_min_open(std::span<const PointSet> min_open) {
  const int n = static_cast<int>(min_open.size());
  check_point_count(n);
  FiniteSpace s;
  s.n_ = n;
  for (int x = 0; x < n; ++x) {
    const PointSet u = min_open[x];
    if (!is_subset(u, full_set(n)))
      throw TopologyError(ErrorKind::PointOutOfRange, "minimal open set " + set_text(u) + " out of range", {u, 0});
    if (!contains(u, x))
      throw TopologyError(ErrorKind::InvalidPreorder, "relation is not reflexive at " + std::to_string(x));
    s.down_[x] = u;
  }
  // z in U_y and y in U_x must give z in U_x.
  for (int x = 0; x < n; ++x)
    for (int y : to_points(s.down_[x]))
      if (!is_subset(s.down_[y], s.down_[x]))
        throw TopologyError(ErrorKind::InvalidPreorder,
                            "relation is not transitive through " + std::to_string(y),
                            {s.down_[y], s.down_[x]});
  s.fill_up();
  return s;
}

FiniteSpace FiniteSpace::from_preorder(const std::vector<std::vector<bool>>& matrix) {
  const int n = static_cast<int>(matrix.size());
  check_point_count(n);
  std::vector<PointSet> down(n, 0);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(matrix[x].size()) != n)
      throw TopologyError(ErrorKind::Malformed, "preorder matrix must be square");
    for (int y = 0; y < n; ++y)
      if (matrix[x][y]) down[y] |= singleton(x);
  }
  return from_min_open(down);
}

void FiniteSpace::fill_up() {
  up_.fill(0);
  for (int y = 0; y < n_; ++y)
    for (int x = 0; x < n_; ++x)
      if (contains(down_[y], x)) up_[x] |= singleton(y);
}

PointSet FiniteSpace::open_hull(PointSet s) const {
  PointSet out = 0;
  for (int x = 0; x < n_; ++x)
    if (contains(s, x)) out |= down_[x];
  return out;
}

PointSet FiniteSpace::closure(PointSet s) const {
  PointSet out = 0;
  for (int x = 0; x < n_; ++x)
    if (contains(s, x)) out |= up_[x];
  return out;
}

std::vector<PointSet> FiniteSpace::opens() const {
  // Open sets are exactly the unions of minimal open sets.
  std::vector<PointSet> out{0};
  std::unordered_set<PointSet> seen{0};
  for (size_t i = 0; i < out.size(); ++i)
    for (int x = 0; x < n_; ++x) {
      const PointSet next = out[i] | down_[x];
      if (seen.insert(next).second) out.push_back(next);
    }
  std::sort(out.begin(), out.end(), normalized_less);
  return out;
}

FiniteSpace FiniteSpace::subspace(PointSet s) const {
  s &= all();
  std::array<int, kMaxPoints> index{};
  int m = 0;
  for (int x = 0; x < n_; ++x)
    if (contains(s, x)) index[x] = m++;
  if (m == 0) throw TopologyError(ErrorKind::SpaceTooSmall, "subspace must be nonempty");

  FiniteSpace out;
  out.n_ = m;
  for (int y = 0; y < n_; ++y) {
    if (!contains(s, y)) continue;
    PointSet u = 0;
    for (int x = 0; x < n_; ++x)
      if (contains(s, x) && contains(down_[y], x)) u |= singleton(index[x]);
    out.down_[index[y]] = u;
  }
  out.fill_up();
  return out;
}

FiniteSpace FiniteSpace::relabel(std::span<const int> perm) const {
  FiniteSpace out;
  out.n_ = n_;
  for (int y = 0; y < n_; ++y) {
    PointSet u = 0;
    for (int x = 0; x < n_; ++x)
      if (contains(down_[y], x)) u |= singleton(perm[x]);
    out.down_[perm[y]] = u;
  }
  out.fill_up();
  return out;
}

FiniteSpace to_space(const OpenFamily& family) {
  const int n = family.n();
  std::vector<PointSet> down(n, full_set(n));
  for (PointSet o : family.opens())
    for (int x = 0; x < n; ++x)
      if (contains(o, x)) down[x] &= o;
  return FiniteSpace::from_min_open(down);
}

OpenFamily from_space(const FiniteSpace& space) {
  return OpenFamily(space.n(), space.opens());
}

FiniteSpace delete_point(const FiniteSpace& space, int x) {
  if (x < 0 || x >= space.n())
    throw TopologyError(ErrorKind::PointOutOfRange, "point " + std::to_string(x) + " out of range");
  if (space.n() < 2) throw TopologyError(ErrorKind::SpaceTooSmall, "cannot delete the only point of a space");
  return space.subspace(space.all() & ~singleton(x));
}

FiniteSpace disjoint_sum(const FiniteSpace& a, const FiniteSpace& b) {
  const int n = a.n() + b.n();
  check_point_count(n);
  std::vector<PointSet> down;
  down.reserve(n);
  for (int x = 0; x < a.n(); ++x) down.push_back(a.min_open(x));
  for (int x = 0; x < b.n(); ++x) down.push_back(static_cast<PointSet>(b.min_open(x) << a.n()));
  return FiniteSpace::from_min_open(down);
}

namespace named {

FiniteSpace point() { return discrete(1); }

FiniteSpace discrete(int k) {
  std::vector<PointSet> down;
  for (int x = 0; x < k; ++x) down.push_back(singleton(x));
  return FiniteSpace::from_min_open(down);
}

FiniteSpace indiscrete(int k) {
  return FiniteSpace::from_min_open(std::vector<PointSet>(k, full_set(k)));
}

FiniteSpace sierpinski() { return chain(2); }

FiniteSpace chain(int k) {
  std::vector<PointSet> down;
  for (int x = 0; x < k; ++x) down.push_back(full_set(x + 1));
  return FiniteSpace::from_min_open(down);
}

}  // namespace named

}  // namespace topodeck
