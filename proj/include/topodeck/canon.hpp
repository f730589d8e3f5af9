#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "topodeck/space.hpp"

namespace topodeck {

/// Homeomorphism fingerprint: one byte holding n, then the n*n relation bits
/// rel(i, j) of the canonically relabeled space in row-major order, most
/// significant bit first, zero-padded to a whole byte.
class CanonicalKey {
 public:
  static constexpr int kMaxBytes = 1 + (kMaxPoints * kMaxPoints + 7) / 8;

  CanonicalKey() = default;
  /// Encodes the relation matrix of `space` as is, without canonicalizing.
  static CanonicalKey encode(const FiniteSpace& space);
  /// Parses lowercase or uppercase hex; throws Malformed on bad input.
  static CanonicalKey from_hex(std::string_view hex);

  int n() const { return size_ == 0 ? 0 : bytes_[0]; }
  std::span<const std::uint8_t> bytes() const { return {bytes_.data(), size_}; }
  std::string hex() const;

  /// The space whose relation matrix this key encodes.
  FiniteSpace decode() const;

  friend bool operator==(const CanonicalKey& a, const CanonicalKey& b) {
    return std::equal(a.bytes().begin(), a.bytes().end(), b.bytes().begin(), b.bytes().end());
  }
  friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    return std::lexicographical_compare_three_way(a.bytes().begin(), a.bytes().end(), b.bytes().begin(),
                                                  b.bytes().end());
  }

 private:
  std::array<std::uint8_t, kMaxBytes> bytes_{};
  std::size_t size_ = 0;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& key) const;
};

struct CanonicalForm {
  CanonicalKey key;
  /// position[x] is the canonical label of input point x.
  std::vector<int> position;
};

/// Canonical labeling by ordered partition refinement plus a search over
/// the remaining non-singleton cells for the least relation matrix.
/// Optional `colors` must be invariant data attached to points; points with
/// different colors are never mapped to each other and smaller colors get
/// smaller labels.
CanonicalForm canonical_form(const FiniteSpace& space, std::span<const int> colors = {});

CanonicalKey canonical_key(const FiniteSpace& space);

/// The canonically relabeled space; its plain encoding equals its key.
FiniteSpace canonical_space(const FiniteSpace& space);

bool are_homeomorphic(const FiniteSpace& a, const FiniteSpace& b);

}  // namespace topodeck
