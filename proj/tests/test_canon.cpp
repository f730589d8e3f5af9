#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "topodeck/canon.hpp"
#include "topodeck/enumerate.hpp"

using namespace topodeck;

TEST_CASE("discrete(3) has one key under all labelings") {
  std::vector<int> perm{0, 1, 2};
  const CanonicalKey key = canonical_key(named::discrete(3));
  do CHECK(canonical_key(named::discrete(3).relabel(perm)) == key);
  while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("the three two-point spaces have distinct keys") {
  const std::set<CanonicalKey> keys{canonical_key(named::sierpinski()), canonical_key(named::discrete(2)),
                                    canonical_key(named::indiscrete(2))};
  CHECK(keys.size() == 3);
}

TEST_CASE("29 labeled three-point topologies collapse onto 9 keys") {
  std::set<CanonicalKey> keys;
  std::int64_t labeled = 0;
  for_each_labeled_preorder(3, [&](const FiniteSpace& s) {
    ++labeled;
    keys.insert(canonical_key(s));
  });
  CHECK(labeled == 29);
  CHECK(keys.size() == 9);
}

TEST_CASE("are_homeomorphic examples") {
  std::mt19937_64 rng(5);
  const FiniteSpace chain = named::chain(3);
  CHECK(are_homeomorphic(chain, chain.relabel(oracle::random_permutation(3, rng))));
  const FiniteSpace other = disjoint_sum(named::indiscrete(2), named::point());
  CHECK_FALSE(are_homeomorphic(chain, other));
  CHECK_FALSE(oracle::homeomorphic_by_search(chain, other));
  CHECK(are_homeomorphic(other, other));
  CHECK_FALSE(are_homeomorphic(named::discrete(2), named::discrete(3)));
}

TEST_CASE("key encoding layout") {
  // Sierpinski: rel(0,0)=1 rel(0,1)=1 rel(1,0)=0 rel(1,1)=1 -> bits 1101 0000
  const CanonicalKey raw = CanonicalKey::encode(named::sierpinski());
  CHECK(raw.hex() == "02d0");
  CHECK(raw.n() == 2);
  CHECK(CanonicalKey::from_hex("02d0") == raw);
  CHECK(CanonicalKey::from_hex("02D0") == raw);
  CHECK(raw.decode() == named::sierpinski());
  CHECK(CanonicalKey::encode(named::indiscrete(3)).hex() == "03ff80");
  CHECK_THROWS_AS(CanonicalKey::from_hex("02d"), TopologyError);
  CHECK_THROWS_AS(CanonicalKey::from_hex("02d0ff"), TopologyError);
  CHECK_THROWS_AS(CanonicalKey::from_hex("0zd0"), TopologyError);
}

TEST_CASE("canonical space encodes to its key") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const FiniteSpace s = oracle::random_space(1 + trial % 8, rng, 0.15 + 0.05 * (trial % 5));
    const CanonicalKey key = canonical_key(s);
    CHECK(CanonicalKey::encode(canonical_space(s)) == key);
    CHECK(canonical_key(key.decode()) == key);
  }
}

TEST_CASE("relabel invariance on random spaces, 1000 per size") {
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 7; ++n)
    for (int trial = 0; trial < 1000; ++trial) {
      const FiniteSpace s = oracle::random_space(n, rng, 0.1 + 0.05 * (trial % 6));
      const auto perm = oracle::random_permutation(n, rng);
      REQUIRE(canonical_key(s.relabel(perm)) == canonical_key(s));
    }
}

TEST_CASE("agrees with bijection search on all pairs up to four points") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<FiniteSpace> spaces;
    for_each_labeled_preorder(n, [&](const FiniteSpace& s) { spaces.push_back(s); });
    // All labeled spaces at n <= 3; a thinned sample at n = 4 keeps this quick.
    const std::size_t step = n <= 3 ? 1 : 7;
    for (std::size_t i = 0; i < spaces.size(); i += step)
      for (std::size_t j = i; j < spaces.size(); j += step)
        REQUIRE(are_homeomorphic(spaces[i], spaces[j]) == oracle::homeomorphic_by_search(spaces[i], spaces[j]));
  }
}

TEST_CASE("agrees with bijection search on all five-point class pairs") {
  const Catalog c = enumerate_upto_homeo(5);
  std::mt19937_64 rng(99);
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    const FiniteSpace moved = c.entries[i].space.relabel(oracle::random_permutation(5, rng));
    for (std::size_t j = 0; j < c.entries.size(); ++j) {
      if (i != j && (c.entries[i].space.opens().size() != c.entries[j].space.opens().size())) continue;
      REQUIRE(are_homeomorphic(moved, c.entries[j].space) ==
              oracle::homeomorphic_by_search(moved, c.entries[j].space));
    }
  }
}

TEST_CASE("equal keys imply equal degree sequences") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 6;
    const FiniteSpace a = oracle::random_space(n, rng);
    const FiniteSpace b = a.relabel(oracle::random_permutation(n, rng));
    REQUIRE(canonical_key(a) == canonical_key(b));
    std::vector<int> da, db, ca, cb;
    for (int x = 0; x < n; ++x) {
      da.push_back(size_of(a.min_open(x)));
      db.push_back(size_of(b.min_open(x)));
      ca.push_back(size_of(a.closure_of_point(x)));
      cb.push_back(size_of(b.closure_of_point(x)));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    CHECK(da == db);
    CHECK(ca == cb);
  }
}

TEST_CASE("colored canonical forms separate orbits") {
  // In the chain every point is its own orbit; in the indiscrete space all
  // points share one.
  auto marked = [](const FiniteSpace& s, int x) {
    std::vector<int> colors(s.n(), 0);
    colors[x] = 1;
    return canonical_form(s, colors).key;
  };
  CHECK(marked(named::chain(3), 0) != marked(named::chain(3), 2));
  CHECK(marked(named::indiscrete(3), 0) == marked(named::indiscrete(3), 2));
}

TEST_CASE("sixteen-point symmetric spaces canonicalize quickly") {
  FiniteSpace pairs = named::sierpinski();
  for (int i = 0; i < 7; ++i) pairs = disjoint_sum(pairs, named::sierpinski());
  std::mt19937_64 rng(1);
  CHECK(canonical_key(pairs) == canonical_key(pairs.relabel(oracle::random_permutation(16, rng))));
  CHECK(canonical_key(named::discrete(16)) == canonical_key(named::discrete(16)));
  CHECK(canonical_key(named::chain(16)).n() == 16);
}
