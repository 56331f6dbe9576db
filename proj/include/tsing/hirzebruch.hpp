#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tsing {

// Divisor class a*Gamma + b*sigma_inf on the Hirzebruch surface F_n, where
// Gamma is a ruling and sigma_inf the negative section (sigma_inf^2 = -n).
// The positive section sigma_0 = sigma_inf + n*Gamma.
struct FnClass {
  std::int64_t n = 0;
  std::int64_t a = 0;  // Gamma
  std::int64_t b = 0;  // sigma_inf

  static FnClass ruling(std::int64_t n) { return {n, 1, 0}; }
  static FnClass negative_section(std::int64_t n) { return {n, 0, 1}; }
  static FnClass positive_section(std::int64_t n) { return {n, n, 1}; }
  // x*sigma_0 + y*Gamma
  static FnClass from_sigma0(std::int64_t n, std::int64_t x, std::int64_t y);

  // (x, y) with *this == x*sigma_0 + y*Gamma
  std::pair<std::int64_t, std::int64_t> sigma0_coordinates() const;

  bool is_zero() const { return a == 0 && b == 0; }
  // Effective classes on F_n are exactly a, b >= 0.
  bool is_effective() const { return a >= 0 && b >= 0; }

  FnClass operator+(const FnClass& o) const;
  FnClass operator-(const FnClass& o) const;
  FnClass operator*(std::int64_t k) const;

  friend bool operator==(const FnClass&, const FnClass&) = default;

  // "4s0+2G" style, in the sigma_0 / Gamma basis
  std::string to_string() const;
};

std::int64_t intersect(const FnClass& c1, const FnClass& c2);

// -2 sigma_inf - (n + 2) Gamma
FnClass canonical_class(std::int64_t n);

// Dimension of the space of global sections (not the projective dimension).
std::int64_t h0(const FnClass& c);

// dim Aut(F_n) = n + 5 for n >= 1
std::int64_t aut_dim(std::int64_t n);

std::int64_t arithmetic_genus(const FnClass& c);

// Largest d such that a curve in |branch| can carry an A_{d-2} point:
// p_a(branch) - floor((d - 1) / 2) >= 0.
std::int64_t d_bound(const FnClass& branch);

struct CoverInvariants {
  std::int64_t chi = 0;
  std::int64_t k_self = 0;
  std::int64_t p_g = 0;
  std::int64_t q = 0;
  FnClass adjoint;  // K + L, whose pullback is the canonical class of the cover
};

// Invariants of the double cover of F_n branched on `branch` = 2L. q = 0 is
// taken as given for these rational bases rather than computed.
CoverInvariants double_cover(const FnClass& branch);

struct Splitting {
  FnClass first;
  FnClass second;
  std::int64_t m = 0;  // first . second
  std::int64_t d = 0;  // 2m + 1
};

// Unordered decompositions total = first + second into nonzero effective
// classes, each meeting sigma_inf positively and admitting an irreducible
// member, with m >= 1. Sorted by m.
std::vector<Splitting> enumerate_splittings(const FnClass& total);

enum class ModuliCase { Generic, R1, R2, R3 };

// Moduli counts of index-2 surfaces built from the branch class
// 4 sigma_0 + 2 Gamma on F_2. `d` is read only for ModuliCase::Generic,
// where d must be 1, 2 or 3.
std::int64_t moduli_count(ModuliCase c, std::int64_t d = 1);

}  // namespace tsing
