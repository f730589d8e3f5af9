#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "topodeck/deck.hpp"
#include "topodeck/enumerate.hpp"
#include "topodeck/properties.hpp"

using namespace topodeck;

namespace {

PointSet S(std::initializer_list<int> points) {
  PointSet s = 0;
  for (int x : points) s |= singleton(x);
  return s;
}

FiniteSpace indiscrete_plus_point() { return disjoint_sum(named::indiscrete(2), named::point()); }
FiniteSpace star() { return FiniteSpace::from_min_open(std::vector<PointSet>{S({0}), S({0, 1}), S({0, 2})}); }

PointSet image(PointSet s, const std::vector<int>& perm) {
  PointSet out = 0;
  for (int x : to_points(s)) out |= singleton(perm[x]);
  return out;
}

}  // namespace

TEST_CASE("separation axioms on named spaces") {
  const auto sierpinski = separation_axioms(named::sierpinski());
  CHECK(sierpinski.t0);
  CHECK_FALSE(sierpinski.t1);
  CHECK_FALSE(sierpinski.regular);

  const auto discrete = separation_axioms(named::discrete(3));
  CHECK(discrete.t0);
  CHECK(discrete.t1);
  CHECK(discrete.t2);
  CHECK(discrete.regular);
  CHECK(discrete.completely_regular);
  CHECK(discrete.normal);
  CHECK(discrete.hereditarily_normal);
  CHECK(discrete.perfectly_normal);

  const auto indiscrete = separation_axioms(named::indiscrete(3));
  CHECK_FALSE(indiscrete.t0);
  CHECK(indiscrete.regular);
  CHECK(indiscrete.normal);
}

TEST_CASE("isolated points") {
  CHECK(isolated_count(named::discrete(3)) == 3);
  CHECK(isolated_points(named::sierpinski()) == S({0}));
  CHECK(isolated_count(indiscrete_plus_point()) == 1);
  CHECK(isolated_count(named::indiscrete(4)) == 0);
}

TEST_CASE("weight") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(weight(named::discrete(n)) == n);
    CHECK(weight(named::indiscrete(n)) == 1);
  }
  CHECK(weight(named::chain(3)) == 3);
  CHECK(oracle::min_base_size(named::chain(3)) == 3);
}

TEST_CASE("density") {
  CHECK(density(named::chain(3)) == 1);
  for (int n = 1; n <= 6; ++n) CHECK(density(named::discrete(n)) == n);
  CHECK(density(indiscrete_plus_point()) == 2);
  CHECK(oracle::min_hitting_set(indiscrete_plus_point()) == 2);
}

TEST_CASE("cellularity and spread") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(cellularity(named::discrete(n)) == n);
    CHECK(spread(named::discrete(n)) == n);
    CHECK(cellularity(named::indiscrete(n)) == 1);
    CHECK(spread(named::indiscrete(n)) == 1);
  }
  CHECK(cellularity(named::chain(3)) == 1);
  CHECK(spread(named::chain(3)) == 1);
  CHECK_THROWS_AS(cellularity(named::discrete(9)), TopologyError);
  CHECK_THROWS_AS(spread(named::discrete(9)), TopologyError);
  CHECK_FALSE(compute_properties(named::discrete(9)).cellularity.has_value());
}

TEST_CASE("components and connectivity") {
  CHECK(connected(named::chain(3)));
  CHECK(components(named::chain(3)).size() == 1);
  CHECK(components(named::discrete(3)).size() == 3);
  CHECK(totally_disconnected(named::discrete(3)));
  const auto parts = components(indiscrete_plus_point());
  CHECK(parts == std::vector<PointSet>{S({0, 1}), S({2})});
  CHECK_FALSE(totally_disconnected(indiscrete_plus_point()));
}

TEST_CASE("dispersion and cut points") {
  CHECK(dispersion_points(named::chain(3)) == 0);
  // Removing any point of a chain leaves a chain.
  CHECK(cut_points(named::chain(3)) == 0);
  const FiniteSpace fence = FiniteSpace::from_min_open(std::vector<PointSet>{S({0}), S({0, 1, 2}), S({2})});
  CHECK(cut_points(fence) == S({1}));
  CHECK(cut_points(named::sierpinski()) == 0);
  CHECK(dispersion_points(star()) == S({0}));
  CHECK_THROWS_AS(dispersion_points(named::point()), TopologyError);
  CHECK_THROWS_AS(cut_points(named::point()), TopologyError);
}

TEST_CASE("locally") {
  auto is_connected = [](const FiniteSpace& s) { return connected(s); };
  auto is_td = [](const FiniteSpace& s) { return totally_disconnected(s); };
  CHECK(locally(named::indiscrete(3), is_connected));
  CHECK(locally(named::discrete(3), is_connected));
  CHECK_FALSE(locally(indiscrete_plus_point(), is_td));
  CHECK(locally(named::chain(4), is_connected));
}

TEST_CASE("closed-form separation checks match the definitions on all labeled spaces up to four points") {
  for (int n = 1; n <= 4; ++n)
    for_each_labeled_preorder(n, [&](const FiniteSpace& s) {
      REQUIRE(is_regular(s) == oracle::regular_by_definition(s));
      REQUIRE(is_normal(s) == oracle::normal_by_definition(s));
      bool hereditary = true;
      for (unsigned sub = 1; sub <= s.all(); ++sub)
        hereditary = hereditary && oracle::normal_by_definition(s.subspace(static_cast<PointSet>(sub)));
      REQUIRE(is_hereditarily_normal(s) == hereditary);
    });
}

TEST_CASE("partition criterion equals function separation on all labeled spaces up to four points") {
  for (int n = 1; n <= 4; ++n)
    for_each_labeled_preorder(n, [&](const FiniteSpace& s) {
      REQUIRE(is_completely_regular(s) == oracle::completely_regular_by_functions(s));
    });
}

TEST_CASE("weight and density agree with brute force up to five points") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& entry : enumerate_upto_homeo(n).entries) {
      REQUIRE(weight(entry.space) == oracle::min_base_size(entry.space));
      REQUIRE(density(entry.space) == oracle::min_hitting_set(entry.space));
    }
}

TEST_CASE("density agrees with the hitting-set oracle at six points") {
  for (const auto& entry : enumerate_upto_homeo(6).entries)
    REQUIRE(density(entry.space) == oracle::min_hitting_set(entry.space));
}

TEST_CASE("cellularity agrees with an unpruned search") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& entry : enumerate_upto_homeo(n).entries)
      REQUIRE(cellularity(entry.space) == oracle::max_disjoint_opens(entry.space));
}

TEST_CASE("connectivity agrees with the clopen definition up to five points") {
  for (int n = 1; n <= 5; ++n)
    for_each_labeled_preorder(n, [&](const FiniteSpace& s) {
      REQUIRE(connected(s) == oracle::connected_by_clopens(s));
      if (n <= 4) REQUIRE(totally_disconnected(s) == oracle::totally_disconnected_by_subsets(s));
    });
}

TEST_CASE("catalog invariants up to seven points") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& entry : enumerate_upto_homeo(n).entries) {
      const auto& p = entry.props;
      CHECK(p.density <= p.weight);
      CHECK(p.weight <= static_cast<int>(entry.space.opens().size()));
      CHECK(p.isolated_count <= n);
      CHECK(p.totally_disconnected == (p.component_count == n));
      if (p.separation.t1) {
        const auto& s = p.separation;
        CHECK(s.t2);
        CHECK(s.regular);
        CHECK(s.completely_regular);
        CHECK(s.normal);
        CHECK(s.hereditarily_normal);
        CHECK(s.perfectly_normal);
        CHECK(entry.space == named::discrete(n));
      }
      CHECK(p.separation.t2 == p.separation.t1);
      // Distinct inclusion-minimal open sets are disjoint, so they bound both.
      if (p.cellularity) CHECK(*p.cellularity == p.density);
      if (n >= 3 && p.connected) CHECK(size_of(p.dispersion_points) <= 1);
    }
}

TEST_CASE("property vectors are relabel invariant") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 7;
    const FiniteSpace s = oracle::random_space(n, rng, 0.1 + 0.05 * (trial % 5));
    const auto perm = oracle::random_permutation(n, rng);
    PropertyVector expected = compute_properties(s);
    expected.dispersion_points = image(expected.dispersion_points, perm);
    expected.cut_points = image(expected.cut_points, perm);
    CHECK(compute_properties(s.relabel(perm)) == expected);
  }
}
