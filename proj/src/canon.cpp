#include "topodeck/canon.hpp"

#include <algorithm>
#include <numeric>

namespace topodeck {

CanonicalKey CanonicalKey::encode(const FiniteSpace& space) {
  CanonicalKey key;
  const int n = space.n();
  key.size_ = 1 + static_cast<std::size_t>(n * n + 7) / 8;
  key.bytes_[0] = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (space.rel(i, j)) {
        const int bit = i * n + j;
        key.bytes_[1 + bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
      }
  return key;
}

CanonicalKey CanonicalKey::from_hex(std::string_view hex) {
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw TopologyError(ErrorKind::Malformed, "invalid hex digit in key");
  };
  if (hex.size() < 2 || hex.size() % 2 != 0) throw TopologyError(ErrorKind::Malformed, "key has odd length");
  CanonicalKey key;
  const std::size_t len = hex.size() / 2;
  const int n = nibble(hex[0]) * 16 + nibble(hex[1]);
  if (n < 1 || n > kMaxPoints || len != 1 + static_cast<std::size_t>(n * n + 7) / 8)
    throw TopologyError(ErrorKind::Malformed, "key length does not match its point count");
  key.size_ = len;
  for (std::size_t i = 0; i < len; ++i)
    key.bytes_[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) * 16 + nibble(hex[2 * i + 1]));
  return key;
}

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * size_);
  for (std::size_t i = 0; i < size_; ++i) {
    out.push_back(digits[bytes_[i] >> 4]);
    out.push_back(digits[bytes_[i] & 0xF]);
  }
  return out;
}

FiniteSpace CanonicalKey::decode() const {
  const int count = n();
  std::vector<PointSet> down(count, 0);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      const int bit = i * count + j;
      if (bytes_[1 + bit / 8] & (0x80u >> (bit % 8))) down[j] |= singleton(i);
    }
  return FiniteSpace::from_min_open(down);
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& key) const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint8_t b : key.bytes()) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

using Coloring = std::array<int, kMaxPoints>;
using Shells = std::array<std::uint32_t, kMaxPoints>;

class Canonicalizer {
 public:
  explicit Canonicalizer(const FiniteSpace& space) : space_(space), n_(space.n()) {}

  CanonicalForm run(std::span<const int> colors) {
    Coloring c{};
    std::vector<std::array<int, 3>> initial(n_);
    for (int x = 0; x < n_; ++x)
      initial[x] = {colors.empty() ? 0 : colors[x], size_of(space_.min_open(x)),
                    size_of(space_.closure_of_point(x))};
    int cells = rank_by(initial, c);
    cells = refine(c, cells);
    search(c, cells);

    CanonicalForm form;
    std::vector<int> position(n_);
    for (int k = 0; k < n_; ++k) position[best_order_[k]] = k;
    form.position = position;
    form.key = CanonicalKey::encode(space_.relabel(position));
    return form;
  }

 private:
  template <typename Sig>
  int rank_by(const std::vector<Sig>& sig, Coloring& c) const {
    std::vector<int> idx(n_);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int rank = -1;
    for (int i = 0; i < n_; ++i) {
      if (i == 0 || sig[idx[i - 1]] < sig[idx[i]]) ++rank;
      c[idx[i]] = rank;
    }
    return rank + 1;
  }

  // Splits cells by how many down- and up-neighbours each point has in every
  // cell, until stable. Cell order depends only on invariant data.
  int refine(Coloring& c, int cells) const {
    while (cells < n_) {
      std::vector<std::vector<int>> sig(n_, std::vector<int>(1 + 2 * cells, 0));
      for (int x = 0; x < n_; ++x) {
        sig[x][0] = c[x];
        for (int y = 0; y < n_; ++y) {
          if (space_.rel(y, x)) ++sig[x][1 + c[y]];
          if (space_.rel(x, y)) ++sig[x][1 + cells + c[y]];
        }
      }
      const int next = rank_by(sig, c);
      if (next == cells) break;
      cells = next;
    }
    return cells;
  }

  bool twins(int u, int v) const {
    if (space_.rel(u, v) != space_.rel(v, u)) return false;
    for (int z = 0; z < n_; ++z) {
      if (z == u || z == v) continue;
      if (space_.rel(z, u) != space_.rel(z, v) || space_.rel(u, z) != space_.rel(v, z)) return false;
    }
    return true;
  }

  // Shell k lists rel between the k-th labeled point and points 0..k.
  std::uint32_t shell(const std::array<int, kMaxPoints>& order, int k) const {
    std::uint32_t row = 0, col = 0;
    for (int j = 0; j <= k; ++j) {
      row = (row << 1) | (space_.rel(order[k], order[j]) ? 1u : 0u);
      if (j < k) col = (col << 1) | (space_.rel(order[j], order[k]) ? 1u : 0u);
    }
    return (row << 16) | col;
  }

  void search(Coloring& c, int cells) {
    // Leading singleton cells have final labels; compare that prefix.
    std::array<int, kMaxPoints> order{};
    std::array<int, kMaxPoints> cell_size{};
    for (int x = 0; x < n_; ++x) ++cell_size[c[x]];
    int prefix = 0;
    while (prefix < cells && cell_size[prefix] == 1) ++prefix;
    for (int x = 0; x < n_; ++x)
      if (c[x] < prefix) order[c[x]] = x;

    if (have_best_) {
      for (int k = 0; k < prefix; ++k) {
        const std::uint32_t s = shell(order, k);
        if (s > best_shells_[k]) return;
        if (s < best_shells_[k]) break;
        if (k + 1 == n_) return;  // identical leaf
      }
    }

    if (cells == n_) {
      Shells shells{};
      for (int k = 0; k < n_; ++k) shells[k] = shell(order, k);
      if (!have_best_ || std::lexicographical_compare(shells.begin(), shells.begin() + n_, best_shells_.begin(),
                                                      best_shells_.begin() + n_)) {
        best_shells_ = shells;
        best_order_ = order;
        have_best_ = true;
      }
      return;
    }

    const int target = prefix;
    std::vector<int> tried;
    for (int x = 0; x < n_; ++x) {
      if (c[x] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(t, x); })) continue;
      tried.push_back(x);

      Coloring child = c;
      for (int y = 0; y < n_; ++y)
        if (child[y] > target || (child[y] == target && y != x)) ++child[y];
      search(child, refine(child, cells + 1));
    }
  }

  const FiniteSpace& space_;
  int n_;
  bool have_best_ = false;
  Shells best_shells_{};
  std::array<int, kMaxPoints> best_order_{};
};

}  // namespace

CanonicalForm canonical_form(const FiniteSpace& space, std::span<const int> colors) {
  return Canonicalizer(space).run(colors);
}

CanonicalKey canonical_key(const FiniteSpace& space) { return canonical_form(space).key; }

FiniteSpace canonical_space(const FiniteSpace& space) {
  return space.relabel(canonical_form(space).position);
}

bool are_homeomorphic(const FiniteSpace& a, const FiniteSpace& b) {
  return a.n() == b.n() && canonical_key(a) == canonical_key(b);
}

}  // namespace topodeck
