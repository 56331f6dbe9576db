#include "tsing/hj_strings.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tsing/checked.hpp"
#include "tsing/errors.hpp"

namespace tsing {

TString::TString(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("T-string must be nonempty");
  for (std::int64_t b : entries_) {
    if (b < 2) throw DomainError("T-string entries must be >= 2, got " + std::to_string(b));
  }
}

TString TString::reversed() const {
  std::vector<std::int64_t> r(entries_.rbegin(), entries_.rend());
  return TString(std::move(r));
}

bool TString::all_twos() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t b) { return b == 2; });
}

std::string TString::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out + "]";
}

std::int64_t CyclicQuotient::dual_weight() const {
  if (order == 1) return 0;
  // extended Euclid on (weight, order)
  __int128 old_r = weight, r = order, old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::tie(old_r, r) = std::pair<__int128, __int128>{r, old_r - q * r};
    std::tie(old_s, s) = std::pair<__int128, __int128>{s, old_s - q * s};
  }
  if (old_r != 1) throw DomainError("weight is not invertible modulo order");
  __int128 inv = old_s % order;
  if (inv < 0) inv += order;
  return static_cast<std::int64_t>(inv);
}

std::string CyclicQuotient::to_string() const {
  return "1/" + std::to_string(order) + "(1," + std::to_string(weight) + ")";
}

QuotientType::QuotientType(std::int64_t d, std::int64_t n, std::int64_t a) : d_(d), n_(n), a_(a) {
  if (d < 1) throw DomainError("quotient type needs d >= 1");
  if (n < 2) throw DomainError("quotient type needs n >= 2");
  if (a <= 0 || a >= n) throw DomainError("quotient type needs 0 < a < n");
  if (std::gcd(a, n) != 1) throw DomainError("quotient type needs gcd(a, n) = 1");
  (void)order();
}

std::int64_t QuotientType::order() const { return checked_mul(d_, checked_mul(n_, n_)); }

std::int64_t QuotientType::weight() const {
  return checked_sub(checked_mul(checked_mul(d_, n_), a_), 1);
}

TString expand(std::int64_t order, std::int64_t weight) {
  if (order <= 1) throw DomainError("N must be > 1");
  if (weight <= 0 || weight >= order) throw DomainError("Q out of range");
  if (std::gcd(order, weight) != 1) throw DomainError("gcd(N, Q) must be 1");

  std::vector<std::int64_t> out;
  std::int64_t num = order;
  std::int64_t den = weight;
  while (true) {
    // ceiling division; num, den > 0
    const std::int64_t b = num / den + (num % den != 0 ? 1 : 0);
    out.push_back(b);
    const std::int64_t rem = checked_sub(checked_mul(b, den), num);
    if (rem == 0) break;
    num = den;
    den = rem;
  }
  return TString(std::move(out));
}

CyclicQuotient evaluate(const TString& s) {
  const auto e = s.entries();
  std::int64_t num = e.back();
  std::int64_t den = 1;
  for (std::size_t i = e.size() - 1; i-- > 0;) {
    const std::int64_t next = checked_sub(checked_mul(e[i], num), den);
    den = num;
    num = next;
  }
  return {num, den};
}

StringClass classify_string(const TString& s) {
  if (s.all_twos()) return {StringKind::RationalDoublePoint, std::nullopt};

  const CyclicQuotient q = evaluate(s);
  std::optional<QuotientType> found;
  for (std::int64_t n = 2; n <= q.order / n; ++n) {
    const std::int64_t n2 = n * n;
    if (q.order % n2 != 0) continue;
    const std::int64_t d = q.order / n2;
    const std::int64_t dn = d * n;
    const std::int64_t w1 = checked_add(q.weight, 1);
    if (w1 % dn != 0) continue;
    const std::int64_t a = w1 / dn;
    if (a <= 0 || a >= n || std::gcd(a, n) != 1) continue;
    if (found) throw std::logic_error("T-singularity parameters are not unique for " + s.to_string());
    found.emplace(d, n, a);
  }
  if (!found) return {StringKind::NotT, std::nullopt};
  return {StringKind::NonCanonicalT, found};
}

namespace {

void require_t_string(const TString& s) {
  if (classify_string(s).kind != StringKind::NonCanonicalT) {
    throw DomainError(s.to_string() + " is not the string of a non-canonical T-singularity");
  }
}

TString grow_left(const TString& s) {
  const auto e = s.entries();
  std::vector<std::int64_t> out;
  out.reserve(e.size() + 1);
  out.push_back(2);
  out.insert(out.end(), e.begin(), e.end());
  out.back() = checked_add(out.back(), 1);
  return TString(std::move(out));
}

TString grow_right(const TString& s) {
  const auto e = s.entries();
  std::vector<std::int64_t> out(e.begin(), e.end());
  out.front() = checked_add(out.front(), 1);
  out.push_back(2);
  return TString(std::move(out));
}

}  // namespace

TString iterate_left(const TString& s) {
  require_t_string(s);
  return grow_left(s);
}

TString iterate_right(const TString& s) {
  require_t_string(s);
  return grow_right(s);
}

std::vector<TString> seeds_index2(std::int64_t d_max) {
  if (d_max < 1) throw DomainError("d_max must be >= 1");
  std::vector<TString> seeds;
  seeds.reserve(static_cast<std::size_t>(d_max));
  seeds.emplace_back(std::vector<std::int64_t>{4});
  for (std::int64_t d = 2; d <= d_max; ++d) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(d), 2);
    e.front() = 3;
    e.back() = 3;
    seeds.emplace_back(std::move(e));
  }
  return seeds;
}

std::vector<TString> generate(int level, std::int64_t d_max) {
  if (level < 0) throw DomainError("level must be >= 0");
  std::vector<TString> current = seeds_index2(d_max);
  for (int step = 0; step < level; ++step) {
    std::set<TString> next;
    for (const TString& s : current) {
      // inputs are T-strings by induction, so skip re-classification
      next.insert(grow_left(s));
      next.insert(grow_right(s));
    }
    current.assign(next.begin(), next.end());
  }
  std::sort(current.begin(), current.end());
  return current;
}

}  // namespace tsing
