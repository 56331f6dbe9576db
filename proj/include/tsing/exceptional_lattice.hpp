#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsing/hj_strings.hpp"
#include "tsing/matrix.hpp"
#include "tsing/rational.hpp"

namespace tsing {

// Curves E_i on a smooth surface with their intersection matrix, canonical
// degrees K.E_i, and the surface's chi(O) and K^2.
struct ExceptionalConfig {
  std::vector<std::string> curve_names;
  IntMatrix gram;
  std::vector<std::int64_t> k_degrees;
  std::int64_t chi = 0;
  std::int64_t k_self = 0;

  std::size_t rank() const { return curve_names.size(); }

  // Throws DomainError on size mismatch, asymmetry, or a non-negative
  // diagonal entry.
  void validate() const;
};

// Exact Q-divisor over the curves of a config. For the discrepancy divisor
// f^*K_X = K + sum a_i E_i the coefficients a_i are stored with positive
// sign.
struct QDivisor {
  std::vector<Rational> coeffs;

  QDivisor fractional_part() const;
  friend bool operator==(const QDivisor&, const QDivisor&) = default;
  std::string to_string() const;
};

// Tridiagonal chain with self-intersections -b_i and adjunction degrees
// K.E_i = b_i - 2. Curves are named E1..Er unless names are given.
ExceptionalConfig chain_config(const TString& s, std::int64_t chi, std::int64_t k_self,
                               std::vector<std::string> names = {});

// Intersection number D1.D2 under the config's Gram matrix.
Rational pairing(const ExceptionalConfig& cfg, const QDivisor& d1, const QDivisor& d2);

// Unique solution of gram * a = -k_degrees. Throws DomainError when the
// Gram matrix is singular or not negative definite.
QDivisor discrepancies(const ExceptionalConfig& cfg);

// lcm of the coefficient denominators.
std::int64_t cartier_index(const QDivisor& delta);

// (K + Delta)^2 = K^2 + K.Delta, using (K + Delta).E_i = 0.
Rational kx_squared(const ExceptionalConfig& cfg, const QDivisor& delta);

// K^2 of the minimal resolution of a T-singular surface with a length-r
// string: K_X^2 - (r - d + 1).
Rational k2_resolution(const Rational& k2_x, std::int64_t r, std::int64_t d);

// chi(L) = chi(O) + (L^2 - K.L) / 2
Rational riemann_roch(std::int64_t chi, const Rational& l_self, const Rational& k_dot_l);

// (1/2) {m Delta} . ({m Delta} - {Delta})
Rational correction_term(const ExceptionalConfig& cfg, const QDivisor& delta, std::int64_t m);

// h^0(m K_X) for a log-terminal stable surface; valid for m >= 2 only.
Rational plurigenus(std::int64_t chi, const Rational& k2_x, const ExceptionalConfig& cfg, const QDivisor& delta,
                    std::int64_t m);

}  // namespace tsing
