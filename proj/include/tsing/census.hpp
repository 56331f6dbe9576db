#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsing/hj_strings.hpp"

namespace tsing {

enum class Verdict { Pending, Admitted, Excluded, Unresolved };

// Why a candidate was excluded: a stable anchor id plus the verbatim source
// phrase backing the exclusion.
struct ExclusionReason {
  std::string anchor;
  std::string quote;
  bool cited = false;  // rests on an external result rather than on this library's arithmetic
};

enum class ComponentKind { MainComponentDivisor, MainComponentCodim, NewComponent, NotApplicable };

struct Component {
  ComponentKind kind = ComponentKind::NotApplicable;
  std::int64_t codim = 0;  // meaningful for MainComponentCodim
};

enum class Smoothability { Yes, No, Conjectural };

struct SmoothabilityEntry {
  std::string variant;  // empty unless the row splits into sub-cases
  Smoothability value = Smoothability::Yes;
};

struct CensusRecord {
  std::int64_t cartier_index = 0;
  QuotientType quotient;
  TString tstring;
  std::int64_t level = 0;          // r - d
  std::int64_t k2_resolution = 0;  // 1 - (r - d + 1)
  Verdict verdict = Verdict::Pending;
  std::optional<ExclusionReason> reason;
  std::string construction;  // set for admitted records
  std::string note;
  std::optional<std::int64_t> moduli_dim;
  Component component;
  std::vector<SmoothabilityEntry> smoothable;
  std::optional<std::int64_t> family_d_max;  // theorem rows standing for a whole d-family
};

// Largest r - d for which the classification applies.
inline constexpr int kMaxCensusLevel = 2;
// Dimension of the main component of the moduli space of I-surfaces.
inline constexpr std::int64_t kMainComponentDim = 28;

// One pending record per singularity reached at `level`, mirror strings
// collapsed. Throws DomainError for level outside [0, 2].
std::vector<CensusRecord> enumerate_candidates(int level, std::int64_t d_max);

// Resolves every pending verdict. Strings matching no known pattern come
// back Unresolved, never Admitted.
std::vector<CensusRecord> apply_filters(std::vector<CensusRecord> records);

// Candidates of every level 0..max_level, filtered, sorted by
// (index, d, order, weight).
std::vector<CensusRecord> run_census(int max_level, std::int64_t d_max);

// The three admitted rows: index 2 (d-family), 3 and 5.
std::vector<CensusRecord> main_theorem_table();

struct LemmaRow {
  std::int64_t level = 0;
  std::int64_t n = 0;
  std::int64_t k2_resolution = 0;
  std::string singularity;  // "1/4d(1,2d-1)" for the index-2 family
  std::vector<TString> strings;
  std::string strings_label;
};

std::vector<LemmaRow> lemma_table();

struct Check {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  CyclicQuotient quotient;
  std::vector<Check> checks;

  bool all_passed() const;
};

// Cross-module verification of an admitted record. Throws DomainError for
// records that are not admitted.
VerificationReport verify_construction(const CensusRecord& record);

// Every exclusion reason the filters can emit.
const std::vector<ExclusionReason>& reason_table();

// Orientation used for display: the one matching a known pattern, otherwise
// the lexicographically larger of s and its reverse.
TString preferred_orientation(const TString& s);

const char* to_string(Verdict v);
const char* to_string(ComponentKind k);
const char* to_string(Smoothability s);

}  // namespace tsing
