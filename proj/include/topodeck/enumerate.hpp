#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "topodeck/canon.hpp"
#include "topodeck/properties.hpp"
#include "topodeck/space.hpp"

namespace topodeck {

inline constexpr int kMaxCatalogPoints = 7;
/// Reachable only with allow_stretch; no guarantees on run time.
inline constexpr int kStretchCatalogPoints = 8;
inline constexpr int kMaxOraclePoints = 5;

struct CatalogEntry {
  CanonicalKey key;
  /// Canonically labeled, so CanonicalKey::encode(space) == key.
  FiniteSpace space;
  PropertyVector props;
};

struct Catalog {
  int n = 0;
  std::string method;
  std::vector<CatalogEntry> entries;  // strictly increasing keys
};

inline constexpr const char* kEnumerationMethod = "poset-augmentation+multiplicities";

/// One canonically labeled representative per isomorphism class of partial
/// orders on k points, grown one maximal element at a time with canonical
/// augmentation. Sorted by key.
std::vector<FiniteSpace> enumerate_posets(int k, int workers = 1);

/// One representative per homeomorphism class of topologies on n points.
/// Throws ScaleUnsupported outside 1..7 (1..8 with allow_stretch).
Catalog enumerate_upto_homeo(int n, int workers = 1, bool allow_stretch = false);

/// Calls visit on every reflexive transitive relation on n labeled points,
/// found by filtering all 2^(n*n-n) off-diagonal patterns. n <= 5.
void for_each_labeled_preorder(int n, const std::function<void(const FiniteSpace&)>& visit);

std::int64_t oracle_labeled_count(int n);

/// Number of labeled preorders up to point permutation, computed by taking
/// the least relation matrix over all n! relabelings of each preorder.
std::int64_t oracle_class_count(int n);

}  // namespace topodeck
