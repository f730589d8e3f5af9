#pragma once

// Brute-force reference computations. Everything here works from the open
// sets or from explicit bijections and never calls the canonicalizer or the
// closed-form property routines it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "topodeck/space.hpp"

namespace topodeck::oracle {

/// Searches all n! bijections for one carrying opens onto opens.
bool homeomorphic_by_search(const FiniteSpace& a, const FiniteSpace& b);

/// Smallest k such that some k opens form a base (every open is a union of
/// base members inside it).
int min_base_size(const FiniteSpace& s);

/// Smallest set of points meeting every nonempty open set.
int min_hitting_set(const FiniteSpace& s);

/// No proper nonempty subset is clopen.
bool connected_by_clopens(const FiniteSpace& s);
/// Every component, found as a maximal connected subset, is a singleton.
bool totally_disconnected_by_subsets(const FiniteSpace& s);

/// Separation checks straight from the definitions over all open and
/// closed sets.
bool regular_by_definition(const FiniteSpace& s);
bool normal_by_definition(const FiniteSpace& s);
/// Every closed set and outside point are separated by some continuous map
/// into {0, 1/2, 1} (images of finite spaces in [0,1] are finite and
/// discrete, so a map is continuous iff each fibre is open).
bool completely_regular_by_functions(const FiniteSpace& s);

/// Largest family of pairwise disjoint nonempty open sets.
int max_disjoint_opens(const FiniteSpace& s);

/// Every labeled topology on n points as its open family (n <= 4), by
/// filtering all families of subsets that contain the empty and full set.
std::vector<std::vector<PointSet>> labeled_topologies(int n);

/// Random space: random relation closed reflexively and transitively.
FiniteSpace random_space(int n, std::mt19937_64& rng, double density = 0.3);
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

}  // namespace topodeck::oracle
