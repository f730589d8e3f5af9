#include "topodeck/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>

#include "topodeck/parallel.hpp"

namespace topodeck {

int default_workers() {
  if (const char* env = std::getenv("TOPODECK_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct Child {
  CanonicalKey key;
  FiniteSpace space;
};

// The maximal point with the largest canonical label is the one canonical
// augmentation expects to have been added last.
bool is_canonical_extension(const FiniteSpace& child, int added) {
  const int n = child.n();
  const CanonicalForm form = canonical_form(child);
  int chosen = -1;
  for (int x = 0; x < n; ++x)
    if (child.closure_of_point(x) == singleton(x) && (chosen < 0 || form.position[x] > form.position[chosen]))
      chosen = x;
  if (chosen == added) return true;

  std::vector<int> mark_added(n, 0), mark_chosen(n, 0);
  mark_added[added] = 1;
  mark_chosen[chosen] = 1;
  return canonical_form(child, mark_added).key == canonical_form(child, mark_chosen).key;
}

std::vector<Child> augment(const FiniteSpace& parent) {
  const int k = parent.n();
  std::set<CanonicalKey> seen;
  std::vector<Child> out;
  std::vector<PointSet> down(parent.min_opens().begin(), parent.min_opens().end());
  down.push_back(0);
  // Any open set of the parent may sit strictly below the new maximal point.
  for (PointSet below : parent.opens()) {
    down[k] = below | singleton(k);
    const FiniteSpace child = FiniteSpace::from_min_open(down);
    if (!is_canonical_extension(child, k)) continue;
    const CanonicalForm form = canonical_form(child);
    if (!seen.insert(form.key).second) continue;
    out.push_back({form.key, child.relabel(form.position)});
  }
  return out;
}

// Compositions of `total` into `parts` positive integers, in lexicographic order.
void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> current(parts, 1);
  auto rec = [&](auto&& self, int index, int remaining) -> void {
    if (index == parts - 1) {
      current[index] = remaining;
      visit(current);
      return;
    }
    for (int m = 1; m <= remaining - (parts - 1 - index); ++m) {
      current[index] = m;
      self(self, index + 1, remaining - m);
    }
  };
  rec(rec, 0, total);
}

// Blows element i of the poset up into an indiscrete block of mult[i] points.
FiniteSpace inflate(const FiniteSpace& poset, const std::vector<int>& mult) {
  const int k = poset.n();
  std::vector<PointSet> block(k, 0);
  int next = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < mult[i]; ++j) block[i] |= singleton(next++);
  }
  std::vector<PointSet> down(next, 0);
  for (int i = 0; i < k; ++i) {
    PointSet u = 0;
    for (int j = 0; j < k; ++j)
      if (poset.rel(j, i)) u |= block[j];
    for (int x : to_points(block[i])) down[x] = u;
  }
  return FiniteSpace::from_min_open(down);
}

void check_scale(int n, int limit) {
  if (n < 1 || n > limit)
    throw TopologyError(ErrorKind::ScaleUnsupported,
                        "point count " + std::to_string(n) + " outside supported range 1.." + std::to_string(limit));
}

}  // namespace

std::vector<FiniteSpace> enumerate_posets(int k, int workers) {
  check_scale(k, kStretchCatalogPoints);
  std::vector<FiniteSpace> level{named::point()};
  for (int size = 1; size < k; ++size) {
    auto grown = parallel_map(level.size(), workers, [&](std::size_t i) { return augment(level[i]); });
    std::vector<Child> children;
    for (auto& batch : grown) children.insert(children.end(), batch.begin(), batch.end());
    std::sort(children.begin(), children.end(), [](const Child& a, const Child& b) { return a.key < b.key; });
    level.clear();
    for (auto& c : children) level.push_back(c.space);
  }
  return level;
}

Catalog enumerate_upto_homeo(int n, int workers, bool allow_stretch) {
  check_scale(n, allow_stretch ? kStretchCatalogPoints : kMaxCatalogPoints);

  std::vector<FiniteSpace> posets;
  for (int k = 1; k <= n; ++k) {
    auto level = enumerate_posets(k, workers);
    posets.insert(posets.end(), level.begin(), level.end());
  }

  // Distinct posets give non-homeomorphic preorders (the T0 quotient is an
  // invariant), so duplicates can only come from automorphisms of one poset.
  auto expanded = parallel_map(posets.size(), workers, [&](std::size_t i) {
    std::set<CanonicalKey> keys;
    for_each_composition(n, posets[i].n(),
                         [&](const std::vector<int>& mult) { keys.insert(canonical_key(inflate(posets[i], mult))); });
    return std::vector<CanonicalKey>(keys.begin(), keys.end());
  });

  std::vector<CanonicalKey> keys;
  for (auto& batch : expanded) keys.insert(keys.end(), batch.begin(), batch.end());
  std::sort(keys.begin(), keys.end());

  Catalog catalog;
  catalog.n = n;
  catalog.method = kEnumerationMethod;
  catalog.entries = parallel_map(keys.size(), workers, [&](std::size_t i) {
    CatalogEntry entry;
    entry.key = keys[i];
    entry.space = keys[i].decode();
    entry.props = compute_properties(entry.space);
    return entry;
  });
  return catalog;
}

void for_each_labeled_preorder(int n, const std::function<void(const FiniteSpace&)>& visit) {
  check_scale(n, kMaxOraclePoints);
  std::vector<std::pair<int, int>> cells;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) cells.emplace_back(x, y);

  const std::uint64_t patterns = std::uint64_t{1} << cells.size();
  for (std::uint64_t bits = 0; bits < patterns; ++bits) {
    bool r[kMaxOraclePoints][kMaxOraclePoints] = {};
    for (int x = 0; x < n; ++x) r[x][x] = true;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if ((bits >> c) & 1u) r[cells[c].first][cells[c].second] = true;

    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x)
      for (int y = 0; y < n && transitive; ++y)
        if (r[x][y])
          for (int z = 0; z < n; ++z)
            if (r[y][z] && !r[x][z]) {
              transitive = false;
              break;
            }
    if (!transitive) continue;

    std::vector<std::vector<bool>> matrix(n, std::vector<bool>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) matrix[x][y] = r[x][y];
    visit(FiniteSpace::from_preorder(matrix));
  }
}

std::int64_t oracle_labeled_count(int n) {
  std::int64_t count = 0;
  for_each_labeled_preorder(n, [&](const FiniteSpace&) { ++count; });
  return count;
}

std::int64_t oracle_class_count(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<std::uint32_t> classes;
  for_each_labeled_preorder(n, [&](const FiniteSpace& s) {
    std::uint32_t least = ~0u;
    std::vector<int> source(n);
    for (const auto& perm : perms) {
      // point perm[x] of the relabeled space is point x of s
      for (int x = 0; x < n; ++x) source[perm[x]] = x;
      std::uint32_t code = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) code = (code << 1) | (s.rel(source[i], source[j]) ? 1u : 0u);
      least = std::min(least, code);
    }
    classes.insert(least);
  });
  return static_cast<std::int64_t>(classes.size());
}

}  // namespace topodeck
