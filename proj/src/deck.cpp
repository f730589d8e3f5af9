#include "topodeck/deck.hpp"

#include <algorithm>

namespace topodeck {

namespace {

std::vector<CanonicalKey> card_keys(const FiniteSpace& space) {
  if (space.n() < 2) throw TopologyError(ErrorKind::SpaceTooSmall, "a deck needs at least two points");
  std::vector<CanonicalKey> keys;
  keys.reserve(space.n());
  for (int x = 0; x < space.n(); ++x) keys.push_back(canonical_key(delete_point(space, x)));
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

std::string Deck::fingerprint() const {
  std::string out;
  for (const auto& key : keys) out += key.hex();
  return out;
}

std::string MultiDeck::fingerprint() const {
  std::string out;
  for (const auto& [key, count] : entries) {
    out += key.hex();
    out += 'x';
    out += std::to_string(count);
    out += ';';
  }
  return out;
}

Deck MultiDeck::support() const {
  Deck d;
  for (const auto& entry : entries) d.keys.push_back(entry.first);
  return d;
}

std::vector<FiniteSpace> cards(const FiniteSpace& space) {
  if (space.n() < 2) throw TopologyError(ErrorKind::SpaceTooSmall, "cards need at least two points");
  std::vector<FiniteSpace> out;
  out.reserve(space.n());
  for (int x = 0; x < space.n(); ++x) out.push_back(delete_point(space, x));
  return out;
}

Deck deck(const FiniteSpace& space) {
  Deck d{card_keys(space)};
  d.keys.erase(std::unique(d.keys.begin(), d.keys.end()), d.keys.end());
  return d;
}

MultiDeck multideck(const FiniteSpace& space) {
  MultiDeck m;
  for (const auto& key : card_keys(space)) {
    if (!m.entries.empty() && m.entries.back().first == key)
      ++m.entries.back().second;
    else
      m.entries.emplace_back(key, 1);
  }
  return m;
}

// One-point spaces have no cards; they trivially agree with each other.
bool same_deck(const FiniteSpace& a, const FiniteSpace& b) {
  if (a.n() != b.n()) return false;
  return a.n() < 2 || deck(a) == deck(b);
}

bool same_multideck(const FiniteSpace& a, const FiniteSpace& b) {
  if (a.n() != b.n()) return false;
  return a.n() < 2 || multideck(a) == multideck(b);
}

}  // namespace topodeck
