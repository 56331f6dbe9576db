#pragma once

#include <cstdint>
#include <vector>

#include "tsing/rational.hpp"

namespace tsing {

// Dense integer polynomial, coefficient i of t^i.
using Polynomial = std::vector<std::int64_t>;

Polynomial multiply(const Polynomial& p, const Polynomial& q);

// prod_j (1 - t^{e_j}) / prod_i (1 - t^{d_i}): the Hilbert series of a
// weighted polynomial ring with generator weights d_i, or of a complete
// intersection in it by relations of degrees e_j. The relations are assumed
// to form a regular sequence; this is not checked.
//
// Factors (1 - t^k) shared by numerator and denominator are cancelled, so
// equal rational functions built from the same cyclotomic factors compare
// equal member-wise after construction.
class HilbertSeries {
 public:
  HilbertSeries(std::vector<std::int64_t> weights, std::vector<std::int64_t> relations);

  const std::vector<std::int64_t>& weights() const { return weights_; }
  const std::vector<std::int64_t>& relations() const { return relations_; }

  Polynomial numerator() const;
  Polynomial denominator() const;

  // Power-series coefficients of degrees 0..max_degree.
  std::vector<std::int64_t> coefficients(std::int64_t max_degree) const;
  std::int64_t coefficient(std::int64_t m) const;

 private:
  std::vector<std::int64_t> weights_;
  std::vector<std::int64_t> relations_;
};

inline HilbertSeries series(std::vector<std::int64_t> weights, std::vector<std::int64_t> relations) {
  return HilbertSeries(std::move(weights), std::move(relations));
}

inline std::int64_t coefficient(const HilbertSeries& h, std::int64_t m) { return h.coefficient(m); }

// Equality as rational functions, by cross-multiplication.
bool equal(const HilbertSeries& h1, const HilbertSeries& h2);

// coefficient(h, m) == chi + m(m-1)/2 * k2 for every 2 <= m <= m_max.
bool matches_plurigenera(const HilbertSeries& h, std::int64_t chi, const Rational& k2, std::int64_t m_max);

}  // namespace tsing
