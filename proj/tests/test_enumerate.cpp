#include <doctest.h>

#include <set>
#include <sstream>

#include "topodeck/enumerate.hpp"
#include "topodeck/io.hpp"

using namespace topodeck;

TEST_CASE("class counts for small n") {
  CHECK(enumerate_upto_homeo(1).entries.size() == 1);
  CHECK(enumerate_upto_homeo(2).entries.size() == 3);
  CHECK(enumerate_upto_homeo(3).entries.size() == 9);
  CHECK(enumerate_upto_homeo(4).entries.size() == 33);
}

TEST_CASE("two-point catalog is discrete, Sierpinski and indiscrete") {
  const Catalog c = enumerate_upto_homeo(2);
  const std::set<CanonicalKey> keys{c.entries[0].key, c.entries[1].key, c.entries[2].key};
  CHECK(keys == std::set<CanonicalKey>{canonical_key(named::discrete(2)), canonical_key(named::sierpinski()),
                                       canonical_key(named::indiscrete(2))});
}

TEST_CASE("oracle labeled counts") {
  CHECK(oracle_labeled_count(1) == 1);
  CHECK(oracle_labeled_count(2) == 4);
  CHECK(oracle_labeled_count(3) == 29);
  CHECK(oracle_labeled_count(4) == 355);
  CHECK_THROWS_AS(oracle_labeled_count(6), TopologyError);
}

TEST_CASE("catalog key sets equal the oracle's canonical-key image") {
  for (int n = 1; n <= 5; ++n) {
    std::set<CanonicalKey> image;
    for_each_labeled_preorder(n, [&](const FiniteSpace& s) { image.insert(canonical_key(s)); });
    std::set<CanonicalKey> catalog;
    for (const auto& e : enumerate_upto_homeo(n).entries) catalog.insert(e.key);
    CHECK(image == catalog);
    CHECK(static_cast<std::int64_t>(catalog.size()) == oracle_class_count(n));
  }
}

TEST_CASE("catalog invariants") {
  std::size_t previous = 0;
  for (int n = 1; n <= 7; ++n) {
    const Catalog c = enumerate_upto_homeo(n);
    CHECK(c.n == n);
    CHECK(c.entries.size() > previous);
    previous = c.entries.size();
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      const auto& e = c.entries[i];
      if (i > 0) CHECK(c.entries[i - 1].key < e.key);
      CHECK(CanonicalKey::encode(e.space) == e.key);
      CHECK(canonical_key(e.space) == e.key);
      CHECK(e.props == compute_properties(e.space));
    }
  }
}

TEST_CASE("poset counts") {
  const std::vector<std::size_t> expected{1, 2, 5, 16, 63, 318, 2045};
  for (int k = 1; k <= 7; ++k) {
    const auto posets = enumerate_posets(k);
    CHECK(posets.size() == expected[k - 1]);
    std::set<CanonicalKey> keys;
    for (const auto& p : posets) {
      CHECK(is_t0(p));
      keys.insert(canonical_key(p));
    }
    CHECK(keys.size() == posets.size());
  }
}

TEST_CASE("enumeration is deterministic across worker counts") {
  for (int n : {5, 6}) {
    std::ostringstream one, four;
    io::write_catalog(one, enumerate_upto_homeo(n, 1));
    io::write_catalog(four, enumerate_upto_homeo(n, 4));
    CHECK(one.str() == four.str());
  }
}

TEST_CASE("scale limits") {
  CHECK_THROWS_AS(enumerate_upto_homeo(0), TopologyError);
  CHECK_THROWS_AS(enumerate_upto_homeo(8), TopologyError);
  CHECK_THROWS_AS(enumerate_upto_homeo(9, 1, true), TopologyError);
  try {
    enumerate_upto_homeo(9);
  } catch (const TopologyError& e) {
    CHECK(e.kind() == ErrorKind::ScaleUnsupported);
  }
}
