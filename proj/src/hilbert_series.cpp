#include "tsing/hilbert_series.hpp"

#include <algorithm>

#include "tsing/checked.hpp"
#include "tsing/errors.hpp"

namespace tsing {

namespace {

Polynomial one_minus_t_to(std::int64_t k) {
  Polynomial p(static_cast<std::size_t>(k) + 1, 0);
  p[0] = 1;
  p[static_cast<std::size_t>(k)] -= 1;
  return p;
}

Polynomial product_of_factors(const std::vector<std::int64_t>& degrees) {
  Polynomial p{1};
  for (std::int64_t k : degrees) p = multiply(p, one_minus_t_to(k));
  return p;
}

void trim(Polynomial& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

}  // namespace

Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  if (p.empty() || q.empty()) return {};
  Polynomial out(p.size() + q.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (std::size_t j = 0; j < q.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(p[i], q[j]));
    }
  }
  trim(out);
  return out;
}

HilbertSeries::HilbertSeries(std::vector<std::int64_t> weights, std::vector<std::int64_t> relations) {
  for (std::int64_t w : weights) {
    if (w < 1) throw DomainError("generator weights must be >= 1");
  }
  for (std::int64_t e : relations) {
    if (e < 1) throw DomainError("relation degrees must be >= 1");
  }
  std::sort(weights.begin(), weights.end());
  std::sort(relations.begin(), relations.end());
  // multiset difference in both directions
  std::vector<std::int64_t> w_left, r_left;
  std::set_difference(weights.begin(), weights.end(), relations.begin(), relations.end(), std::back_inserter(w_left));
  std::set_difference(relations.begin(), relations.end(), weights.begin(), weights.end(), std::back_inserter(r_left));
  weights_ = std::move(w_left);
  relations_ = std::move(r_left);
}

Polynomial HilbertSeries::numerator() const { return product_of_factors(relations_); }

Polynomial HilbertSeries::denominator() const { return product_of_factors(weights_); }

std::vector<std::int64_t> HilbertSeries::coefficients(std::int64_t max_degree) const {
  if (max_degree < 0) throw DomainError("degree must be >= 0");
  const auto len = static_cast<std::size_t>(max_degree) + 1;
  std::vector<std::int64_t> c(len, 0);
  const Polynomial num = numerator();
  for (std::size_t i = 0; i < std::min(len, num.size()); ++i) c[i] = num[i];
  // multiply by 1/(1 - t^w) = 1 + t^w + t^2w + ... in place
  for (std::int64_t w : weights_) {
    const auto step = static_cast<std::size_t>(w);
    for (std::size_t i = step; i < len; ++i) c[i] = checked_add(c[i], c[i - step]);
  }
  return c;
}

std::int64_t HilbertSeries::coefficient(std::int64_t m) const {
  if (m < 0) throw DomainError("degree must be >= 0");
  return coefficients(m).back();
}

bool equal(const HilbertSeries& h1, const HilbertSeries& h2) {
  return multiply(h1.numerator(), h2.denominator()) == multiply(h2.numerator(), h1.denominator());
}

bool matches_plurigenera(const HilbertSeries& h, std::int64_t chi, const Rational& k2, std::int64_t m_max) {
  if (m_max < 2) throw DomainError("m_max must be >= 2");
  const auto c = h.coefficients(m_max);
  for (std::int64_t m = 2; m <= m_max; ++m) {
    const Rational expected = Rational(chi) + Rational(m * (m - 1) / 2) * k2;
    if (expected != Rational(c[static_cast<std::size_t>(m)])) return false;
  }
  return true;
}

}  // namespace tsing
