#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "topodeck/space.hpp"

namespace topodeck {

struct SeparationAxioms {
  bool t0 = false;
  bool t1 = false;
  bool t2 = false;
  bool regular = false;
  bool completely_regular = false;
  bool normal = false;
  bool hereditarily_normal = false;
  bool perfectly_normal = false;

  friend bool operator==(const SeparationAxioms&, const SeparationAxioms&) = default;
};

/// Every invariant the audit compares across deck classes.
struct PropertyVector {
  SeparationAxioms separation;
  int isolated_count = 0;
  int weight = 0;
  int density = 0;
  /// Exhaustive searches, only computed for n <= kExhaustiveLimit.
  std::optional<int> cellularity;
  std::optional<int> spread;
  bool connected = false;
  int component_count = 0;
  bool totally_disconnected = false;
  PointSet dispersion_points = 0;
  PointSet cut_points = 0;

  friend bool operator==(const PropertyVector&, const PropertyVector&) = default;
};

inline constexpr int kExhaustiveLimit = 8;

using SpacePredicate = std::function<bool(const FiniteSpace&)>;

SeparationAxioms separation_axioms(const FiniteSpace& s);
bool is_t0(const FiniteSpace& s);
bool is_t1(const FiniteSpace& s);
bool is_t2(const FiniteSpace& s);
bool is_regular(const FiniteSpace& s);
/// Uses the partition criterion: the distinct U_x are pairwise disjoint.
bool is_completely_regular(const FiniteSpace& s);
bool is_normal(const FiniteSpace& s);
bool is_hereditarily_normal(const FiniteSpace& s);
bool is_perfectly_normal(const FiniteSpace& s);

PointSet isolated_points(const FiniteSpace& s);
int isolated_count(const FiniteSpace& s);

/// Size of the minimal base {U_x}.
int weight(const FiniteSpace& s);
/// Number of distinct inclusion-minimal U_x.
int density(const FiniteSpace& s);

/// Throws SpaceTooLarge above kExhaustiveLimit points.
int cellularity(const FiniteSpace& s);
int spread(const FiniteSpace& s);

/// Connected components of the comparability graph, ordered by least point.
std::vector<PointSet> components(const FiniteSpace& s);
bool connected(const FiniteSpace& s);
bool totally_disconnected(const FiniteSpace& s);

/// Both throw SpaceTooSmall for a one-point space.
PointSet dispersion_points(const FiniteSpace& s);
PointSet cut_points(const FiniteSpace& s);

/// True iff the subspace on U_x satisfies `p` for every point x.
bool locally(const FiniteSpace& s, const SpacePredicate& p);

PropertyVector compute_properties(const FiniteSpace& s);

}  // namespace topodeck
