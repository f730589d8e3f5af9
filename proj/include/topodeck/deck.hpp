#pragma once

#include <string>
#include <utility>
#include <vector>

#include "topodeck/canon.hpp"
#include "topodeck/space.hpp"

namespace topodeck {

/// Homeomorphism types of the one-point-deleted subspaces, as a sorted set.
struct Deck {
  std::vector<CanonicalKey> keys;

  /// Concatenated hex of the sorted keys.
  std::string fingerprint() const;
  friend bool operator==(const Deck&, const Deck&) = default;
};

/// The deck with multiplicities; counts sum to the point count.
struct MultiDeck {
  std::vector<std::pair<CanonicalKey, int>> entries;

  std::string fingerprint() const;
  Deck support() const;
  friend bool operator==(const MultiDeck&, const MultiDeck&) = default;
};

/// Entry i is the subspace with point i removed.
std::vector<FiniteSpace> cards(const FiniteSpace& space);

Deck deck(const FiniteSpace& space);
MultiDeck multideck(const FiniteSpace& space);

bool same_deck(const FiniteSpace& a, const FiniteSpace& b);
bool same_multideck(const FiniteSpace& a, const FiniteSpace& b);

}  // namespace topodeck
