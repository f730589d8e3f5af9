#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topodeck/canon.hpp"
#include "topodeck/enumerate.hpp"

namespace topodeck {

enum class DeckMode { Set, Multi };

const char* to_string(DeckMode mode);
/// Accepts "set"/"set-deck" and "multi"/"multi-deck".
DeckMode parse_deck_mode(const std::string& text);

/// Catalog spaces sharing one deck (or multideck) fingerprint.
struct DeckClass {
  std::string fingerprint;
  std::vector<CanonicalKey> members;  // ascending
};

/// Partition of the catalog by deck, ordered by fingerprint. Needs n >= 2.
std::vector<DeckClass> group_by_deck(const Catalog& catalog, DeckMode mode, int workers = 1);

/// The classes with at least two members. At n = 2 this is the degenerate
/// class of all three spaces.
std::vector<DeckClass> find_collisions(const Catalog& catalog, DeckMode mode, int workers = 1);

struct PropertyVerdict {
  std::string property;
  /// "all", or "t1" when only T1 members of each class are compared.
  std::string scope;
  bool reconstructible = true;
  std::optional<std::string> witness;        // fingerprint of the first offending class
  std::vector<std::string> witness_members;  // hex keys
  std::vector<long> witness_values;
};

/// Names of the audited PropertyVector fields, in report order. Point sets
/// are audited by their cardinality.
const std::vector<std::string>& audited_properties();

std::vector<PropertyVerdict> property_audit(const Catalog& catalog, const std::vector<DeckClass>& classes);

enum class CheckStatus { Pass, Fail, NotApplicable };
const char* to_string(CheckStatus status);

struct TheoremCheck {
  std::string id;  // "a" .. "j"
  std::string description;
  CheckStatus status = CheckStatus::NotApplicable;
  std::optional<std::string> witness;  // hex key of the first failing space
  std::string detail;
};

/// Weight/density identities that only hold for infinite cardinals; they
/// are recorded, never failed.
struct AnalogFinding {
  std::string id;  // "e", "f"
  std::string description;
  bool applicable = false;
  long spaces_checked = 0;
  long counterexamples = 0;
  std::optional<std::string> witness;
  std::string detail;
};

struct TheoremSuite {
  int n = 0;
  std::vector<TheoremCheck> checks;  // a, b, c, d, g, h, i, j
  std::vector<AnalogFinding> analogs;  // e, f
  bool passed() const;
};

TheoremSuite theorem_suite(const Catalog& catalog, int workers = 1);

struct AuditReport {
  int n = 0;
  DeckMode mode = DeckMode::Set;
  /// n = 2: every space has the one-point deck; never counted as a finding.
  bool degenerate = false;
  std::vector<DeckClass> classes;
  std::vector<DeckClass> collisions;
  std::vector<PropertyVerdict> property_audit;
  TheoremSuite theorems;
};

AuditReport audit(const Catalog& catalog, DeckMode mode, int workers = 1);

}  // namespace topodeck
