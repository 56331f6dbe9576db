#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tsing {

// A chain of smooth rational curves, recorded by the negated
// self-intersections b_1..b_r (each >= 2). Orientation matters: a string and
// its reverse are different values.
class TString {
 public:
  explicit TString(std::vector<std::int64_t> entries);

  std::span<const std::int64_t> entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }

  TString reversed() const;
  bool all_twos() const;

  // "[4,3,2]"
  std::string to_string() const;

  friend bool operator==(const TString&, const TString&) = default;
  friend auto operator<=>(const TString& a, const TString& b) { return a.entries_ <=> b.entries_; }

 private:
  std::vector<std::int64_t> entries_;
};

// The cyclic quotient singularity 1/order (1, weight).
struct CyclicQuotient {
  std::int64_t order = 0;
  std::int64_t weight = 0;

  friend bool operator==(const CyclicQuotient&, const CyclicQuotient&) = default;
  friend auto operator<=>(const CyclicQuotient&, const CyclicQuotient&) = default;

  // weight' with weight * weight' == 1 mod order: the same singularity read
  // from the other end of its resolution chain.
  std::int64_t dual_weight() const;
  // "1/18(1,5)"
  std::string to_string() const;
};

// A non-canonical T-singularity 1/(d n^2) (1, d n a - 1).
class QuotientType {
 public:
  // Throws DomainError unless d >= 1, n >= 2, 0 < a < n and gcd(a, n) == 1.
  QuotientType(std::int64_t d, std::int64_t n, std::int64_t a);

  std::int64_t d() const { return d_; }
  std::int64_t n() const { return n_; }
  std::int64_t a() const { return a_; }

  std::int64_t order() const;   // d n^2
  std::int64_t weight() const;  // d n a - 1
  CyclicQuotient quotient() const { return {order(), weight()}; }

  friend bool operator==(const QuotientType&, const QuotientType&) = default;

 private:
  std::int64_t d_;
  std::int64_t n_;
  std::int64_t a_;
};

enum class StringKind { RationalDoublePoint, NonCanonicalT, NotT };

struct StringClass {
  StringKind kind = StringKind::NotT;
  std::optional<QuotientType> type;  // set iff kind == NonCanonicalT
};

// Hirzebruch-Jung expansion N/Q = b_1 - 1/(b_2 - 1/(... - 1/b_r)).
TString expand(std::int64_t order, std::int64_t weight);

// Inverse of expand; the result is in lowest terms.
CyclicQuotient evaluate(const TString& s);

StringClass classify_string(const TString& s);

// [2, b_1, ..., b_{r-1}, b_r + 1]; requires a non-canonical T-string.
TString iterate_left(const TString& s);
// [b_1 + 1, b_2, ..., b_r, 2]; requires a non-canonical T-string.
TString iterate_right(const TString& s);

// The index-2 T-strings [4], [3,3], [3,2,...,2,3] for d = 1..d_max.
std::vector<TString> seeds_index2(std::int64_t d_max);

// All strings reachable from seeds_index2(d_max) by exactly `level`
// iterations, deduplicated and sorted.
std::vector<TString> generate(int level, std::int64_t d_max);

}  // namespace tsing
