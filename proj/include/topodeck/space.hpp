#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace topodeck {

/// Subsets of {0..n-1} as bit masks, bit i set iff point i is a member.
using PointSet = std::uint16_t;

inline constexpr int kMaxPoints = 16;

constexpr PointSet singleton(int x) { return static_cast<PointSet>(1u << x); }
constexpr PointSet full_set(int n) {
  return static_cast<PointSet>((n >= 16) ? 0xFFFFu : ((1u << n) - 1u));
}
constexpr bool contains(PointSet s, int x) { return (s >> x) & 1u; }
constexpr int size_of(PointSet s) { return std::popcount(static_cast<unsigned>(s)); }
constexpr bool is_subset(PointSet a, PointSet b) { return (a & ~b) == 0; }

std::vector<int> to_points(PointSet s);
PointSet from_points(std::span<const int> points);

enum class ErrorKind {
  MissingEmptyOrFull,
  NotUnionClosed,
  NotIntersectionClosed,
  PointOutOfRange,
  SpaceTooSmall,
  SpaceTooLarge,
  ScaleUnsupported,
  InvalidPreorder,
  Malformed,
};

const char* to_string(ErrorKind kind);

/// Raised for every contract violation in the library. Validation failures
/// carry the offending pair of subsets in `witness`.
class TopologyError : public std::runtime_error {
 public:
  TopologyError(ErrorKind kind, const std::string& what,
                std::array<PointSet, 2> witness = {0, 0})
      : std::runtime_error(what), kind_(kind), witness_(witness) {}

  ErrorKind kind() const { return kind_; }
  const std::array<PointSet, 2>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::array<PointSet, 2> witness_;
};

class FiniteSpace;

/// A topology given by its family of open sets. Always normalized: members
/// sorted by (cardinality, numeric value) and free of duplicates.
class OpenFamily {
 public:
  int n() const { return n_; }
  const std::vector<PointSet>& opens() const { return opens_; }
  bool is_open(PointSet s) const;

  friend bool operator==(const OpenFamily&, const OpenFamily&) = default;

 private:
  friend OpenFamily validate(std::vector<PointSet> family, int n);
  friend OpenFamily from_space(const FiniteSpace& space);
  OpenFamily(int n, std::vector<PointSet> opens) : n_(n), opens_(std::move(opens)) {}

  int n_ = 0;
  std::vector<PointSet> opens_;
};

/// Checks the topology axioms and returns the normalized family.
OpenFamily validate(std::vector<PointSet> family, int n);

/// A finite topological space held as its minimal open neighbourhoods U_x.
/// The specialization preorder is rel(x, y) <=> x in U_y, so open sets are
/// exactly the down-closed sets.
class FiniteSpace {
 public:
  FiniteSpace() = default;

  /// Builds a space from U_x for each point; throws InvalidPreorder if the
  /// sets do not come from a reflexive, transitive relation.
  static FiniteSpace from_min_open(std::span<const PointSet> min_open);
  /// `matrix[x][y]` is rel(x, y).
  static FiniteSpace from_preorder(const std::vector<std::vector<bool>>& matrix);

  int n() const { return n_; }
  PointSet all() const { return full_set(n_); }

  /// U_x, the smallest open set containing x.
  PointSet min_open(int x) const { return down_[x]; }
  /// cl{x} = { y : x in U_y }.
  PointSet closure_of_point(int x) const { return up_[x]; }
  bool rel(int x, int y) const { return contains(down_[y], x); }

  std::span<const PointSet> min_opens() const { return {down_.data(), static_cast<size_t>(n_)}; }

  /// Union of U_x over x in s: the smallest open set containing s.
  PointSet open_hull(PointSet s) const;
  /// Smallest closed set containing s.
  PointSet closure(PointSet s) const;
  bool is_open(PointSet s) const { return open_hull(s) == s; }
  bool is_closed(PointSet s) const { return closure(s) == s; }

  /// All open sets, in normalized order.
  std::vector<PointSet> opens() const;

  /// Subspace on the points of `s`, relabeled preserving index order.
  FiniteSpace subspace(PointSet s) const;

  /// New space where point x becomes point perm[x].
  FiniteSpace relabel(std::span<const int> perm) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.n_ == b.n_ && a.down_ == b.down_;
  }

 private:
  void fill_up();

  int n_ = 0;
  std::array<PointSet, kMaxPoints> down_{};
  std::array<PointSet, kMaxPoints> up_{};
};

FiniteSpace to_space(const OpenFamily& family);
OpenFamily from_space(const FiniteSpace& space);

FiniteSpace delete_point(const FiniteSpace& space, int x);
FiniteSpace disjoint_sum(const FiniteSpace& a, const FiniteSpace& b);

/// Normalized order on open sets: by cardinality, then numeric value.
bool normalized_less(PointSet a, PointSet b);

namespace named {
FiniteSpace point();
FiniteSpace discrete(int k);
FiniteSpace indiscrete(int k);
/// Two points, {0} open.
FiniteSpace sierpinski();
/// Opens {} < {0} < {0,1} < ... < {0..k-1}.
FiniteSpace chain(int k);
}  // namespace named

}  // namespace topodeck
