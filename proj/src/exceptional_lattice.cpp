#include "tsing/exceptional_lattice.hpp"

#include "tsing/checked.hpp"
#include "tsing/errors.hpp"

namespace tsing {

void ExceptionalConfig::validate() const {
  const std::size_t r = curve_names.size();
  if (gram.rows() != r || gram.cols() != r || k_degrees.size() != r) {
    throw DomainError("exceptional config: curve names, Gram matrix and K-degrees disagree in size");
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (gram(i, i) >= 0) throw DomainError("exceptional config: diagonal entry of " + curve_names[i] + " must be negative");
    for (std::size_t j = 0; j < i; ++j) {
      if (gram(i, j) != gram(j, i)) throw DomainError("exceptional config: Gram matrix is not symmetric");
    }
  }
}

QDivisor QDivisor::fractional_part() const {
  QDivisor out;
  out.coeffs.reserve(coeffs.size());
  for (const Rational& c : coeffs) out.coeffs.push_back(c.fractional_part());
  return out;
}

std::string QDivisor::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ", ";
    s += coeffs[i].to_string();
  }
  return s + ")";
}

ExceptionalConfig chain_config(const TString& s, std::int64_t chi, std::int64_t k_self, std::vector<std::string> names) {
  const std::size_t r = s.length();
  if (names.empty()) {
    for (std::size_t i = 0; i < r; ++i) names.push_back("E" + std::to_string(i + 1));
  } else if (names.size() != r) {
    throw DomainError("chain_config: expected " + std::to_string(r) + " curve names");
  }
  ExceptionalConfig cfg;
  cfg.curve_names = std::move(names);
  cfg.gram = IntMatrix(r, r, 0);
  cfg.k_degrees.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    cfg.gram(i, i) = -s[i];
    if (i + 1 < r) {
      cfg.gram(i, i + 1) = 1;
      cfg.gram(i + 1, i) = 1;
    }
    cfg.k_degrees[i] = s[i] - 2;
  }
  cfg.chi = chi;
  cfg.k_self = k_self;
  return cfg;
}

Rational pairing(const ExceptionalConfig& cfg, const QDivisor& d1, const QDivisor& d2) {
  const std::size_t r = cfg.rank();
  if (d1.coeffs.size() != r || d2.coeffs.size() != r) throw DomainError("pairing: divisor size mismatch");
  Rational acc;
  for (std::size_t i = 0; i < r; ++i) {
    if (d1.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (cfg.gram(i, j) == 0 || d2.coeffs[j].is_zero()) continue;
      acc += d1.coeffs[i] * Rational(cfg.gram(i, j)) * d2.coeffs[j];
    }
  }
  return acc;
}

QDivisor discrepancies(const ExceptionalConfig& cfg) {
  cfg.validate();
  if (!is_negative_definite(cfg.gram)) throw DomainError("Gram matrix is not negative definite");
  std::vector<Rational> rhs;
  rhs.reserve(cfg.rank());
  for (std::int64_t k : cfg.k_degrees) rhs.emplace_back(checked_sub(0, k));
  auto solution = solve_exact(cfg.gram, rhs);
  if (!solution) throw DomainError("Gram matrix is singular");
  return QDivisor{std::move(*solution)};
}

std::int64_t cartier_index(const QDivisor& delta) {
  std::int64_t index = 1;
  for (const Rational& c : delta.coeffs) index = checked_lcm(index, c.den());
  return index;
}

Rational kx_squared(const ExceptionalConfig& cfg, const QDivisor& delta) {
  if (delta.coeffs.size() != cfg.rank()) throw DomainError("kx_squared: divisor size mismatch");
  Rational acc(cfg.k_self);
  for (std::size_t i = 0; i < cfg.rank(); ++i) acc += Rational(cfg.k_degrees[i]) * delta.coeffs[i];
  return acc;
}

Rational k2_resolution(const Rational& k2_x, std::int64_t r, std::int64_t d) {
  if (r < 1 || d < 1) throw DomainError("k2_resolution: r and d must be positive");
  return k2_x - Rational(checked_add(checked_sub(r, d), 1));
}

Rational riemann_roch(std::int64_t chi, const Rational& l_self, const Rational& k_dot_l) {
  return Rational(chi) + (l_self - k_dot_l) / Rational(2);
}

Rational correction_term(const ExceptionalConfig& cfg, const QDivisor& delta, std::int64_t m) {
  if (m < 1) throw DomainError("correction_term: m must be >= 1");
  QDivisor scaled;
  scaled.coeffs.reserve(delta.coeffs.size());
  for (const Rational& c : delta.coeffs) scaled.coeffs.push_back(c * Rational(m));
  const QDivisor frac_m = scaled.fractional_part();
  const QDivisor frac_1 = delta.fractional_part();
  QDivisor diff;
  diff.coeffs.reserve(delta.coeffs.size());
  for (std::size_t i = 0; i < delta.coeffs.size(); ++i) diff.coeffs.push_back(frac_m.coeffs[i] - frac_1.coeffs[i]);
  return pairing(cfg, frac_m, diff) / Rational(2);
}

Rational plurigenus(std::int64_t chi, const Rational& k2_x, const ExceptionalConfig& cfg, const QDivisor& delta,
                    std::int64_t m) {
  // At m = 1 the formula yields chi rather than p_g.
  if (m < 2) throw DomainError("plurigenus formula requires m >= 2");
  const Rational binom(checked_mul(m, m - 1) / 2);
  return Rational(chi) + binom * k2_x + correction_term(cfg, delta, m);
}

}  // namespace tsing
