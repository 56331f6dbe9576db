#include "tsing/hirzebruch.hpp"

#include <algorithm>

#include "tsing/checked.hpp"
#include "tsing/errors.hpp"

namespace tsing {

namespace {

void require_same_surface(const FnClass& x, const FnClass& y) {
  if (x.n != y.n) {
    throw DomainError("classes live on different Hirzebruch surfaces (F_" + std::to_string(x.n) + " vs F_" +
                      std::to_string(y.n) + ")");
  }
}

}  // namespace

FnClass FnClass::from_sigma0(std::int64_t n, std::int64_t x, std::int64_t y) {
  return {n, checked_add(checked_mul(n, x), y), x};
}

std::pair<std::int64_t, std::int64_t> FnClass::sigma0_coordinates() const {
  return {b, checked_sub(a, checked_mul(n, b))};
}

FnClass FnClass::operator+(const FnClass& o) const {
  require_same_surface(*this, o);
  return {n, checked_add(a, o.a), checked_add(b, o.b)};
}

FnClass FnClass::operator-(const FnClass& o) const {
  require_same_surface(*this, o);
  return {n, checked_sub(a, o.a), checked_sub(b, o.b)};
}

FnClass FnClass::operator*(std::int64_t k) const { return {n, checked_mul(a, k), checked_mul(b, k)}; }

std::string FnClass::to_string() const {
  const auto [x, y] = sigma0_coordinates();
  std::string s;
  if (x != 0) s += std::to_string(x) + "s0";
  if (y != 0 || x == 0) {
    if (!s.empty() && y >= 0) s += '+';
    s += std::to_string(y) + "G";
  }
  return s + " on F_" + std::to_string(n);
}

std::int64_t intersect(const FnClass& c1, const FnClass& c2) {
  require_same_surface(c1, c2);
  return checked_sub(checked_add(checked_mul(c1.a, c2.b), checked_mul(c2.a, c1.b)),
                     checked_mul(c1.n, checked_mul(c1.b, c2.b)));
}

FnClass canonical_class(std::int64_t n) {
  if (n < 0) throw DomainError("Hirzebruch parameter must be >= 0");
  return {n, -(n + 2), -2};
}

std::int64_t h0(const FnClass& c) {
  if (c.b < 0) return 0;
  // pi_* O(a Gamma + b sigma_inf) = sum_{j=0}^{b} O(a - j n) on P^1
  std::int64_t total = 0;
  for (std::int64_t j = 0; j <= c.b; ++j) {
    const std::int64_t deg = checked_sub(c.a, checked_mul(j, c.n));
    if (deg >= 0) total = checked_add(total, deg + 1);
  }
  return total;
}

std::int64_t aut_dim(std::int64_t n) {
  if (n < 1) throw DomainError("aut_dim is defined here for n >= 1");
  return n + 5;
}

std::int64_t arithmetic_genus(const FnClass& c) {
  const std::int64_t twice = checked_add(intersect(c, c), intersect(canonical_class(c.n), c));
  return 1 + twice / 2;
}

std::int64_t d_bound(const FnClass& branch) {
  if (!branch.is_effective()) throw DomainError("d_bound needs an effective branch class");
  const std::int64_t genus = arithmetic_genus(branch);
  if (genus < 0) throw DomainError("d_bound: branch class has negative arithmetic genus");
  // floor((d - 1) / 2) <= genus  <=>  d <= 2 genus + 2
  return checked_add(checked_mul(2, genus), 2);
}

CoverInvariants double_cover(const FnClass& branch) {
  if (branch.a % 2 != 0 || branch.b % 2 != 0) {
    throw DomainError("branch class " + branch.to_string() + " is not divisible by 2");
  }
  const FnClass half{branch.n, branch.a / 2, branch.b / 2};
  const FnClass k = canonical_class(branch.n);
  const FnClass adjoint = k + half;

  CoverInvariants inv;
  inv.chi = checked_add(2, intersect(half, adjoint) / 2);
  inv.k_self = checked_mul(2, intersect(adjoint, adjoint));
  inv.p_g = checked_add(h0(k), h0(adjoint));
  inv.q = 0;
  inv.adjoint = adjoint;
  return inv;
}

namespace {

bool meets_negative_section_positively(const FnClass& c) {
  return intersect(c, FnClass::negative_section(c.n)) > 0;
}

bool has_irreducible_member(const FnClass& c) {
  const auto [x, y] = c.sigma0_coordinates();
  if (x == 0) return y == 1;
  return x >= 1 && y >= 0;
}

}  // namespace

std::vector<Splitting> enumerate_splittings(const FnClass& total) {
  if (!total.is_effective()) throw DomainError("enumerate_splittings needs an effective class");
  std::vector<Splitting> out;
  for (std::int64_t a1 = 0; a1 <= total.a; ++a1) {
    for (std::int64_t b1 = 0; b1 <= total.b; ++b1) {
      const FnClass first{total.n, a1, b1};
      const FnClass second = total - first;
      // unordered: keep (first, second) with first <= second lexicographically
      if (std::pair{first.b, first.a} > std::pair{second.b, second.a}) continue;
      if (first.is_zero() || second.is_zero()) continue;
      if (!meets_negative_section_positively(first) || !meets_negative_section_positively(second)) continue;
      if (!has_irreducible_member(first) || !has_irreducible_member(second)) continue;
      const std::int64_t m = intersect(first, second);
      if (m < 1) continue;
      out.push_back({first, second, m, checked_add(checked_mul(2, m), 1)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Splitting& x, const Splitting& y) {
    return std::pair{x.m, x.first.b} < std::pair{y.m, y.first.b};
  });
  return out;
}

namespace {

constexpr std::int64_t kIndex2Base = 2;

FnClass index2_branch() { return FnClass::from_sigma0(kIndex2Base, 4, 2); }

// Parameters for a reducible branch divisor D1 + D2 meeting only at one point
// of sigma_inf: a member of |D1| plus the sections of |D2 - D1| (the members
// of |D2| cutting 2m P on D1 differ from D1 + |D2 - D1| by a fixed curve).
std::int64_t reducible_moduli(const Splitting& s) {
  const std::int64_t params = checked_add(h0(s.second - s.first), h0(s.first) - 1);
  return params - aut_dim(kIndex2Base);
}

}  // namespace

std::int64_t moduli_count(ModuliCase c, std::int64_t d) {
  switch (c) {
    case ModuliCase::Generic: {
      if (d < 1 || d > 3) throw DomainError("generic moduli count is only known for d = 1, 2, 3");
      // |4 s0 + 2 G| modulo Aut(F_2), with a codimension d - 1 condition
      return (h0(index2_branch()) - 1) - aut_dim(kIndex2Base) - (d - 1);
    }
    case ModuliCase::R1:
    case ModuliCase::R2: {
      const auto splits = enumerate_splittings(index2_branch());
      if (splits.size() != 3) throw std::logic_error("unexpected splitting list for 4s0+2G on F_2");
      return reducible_moduli(splits[c == ModuliCase::R1 ? 0 : 1]);
    }
    case ModuliCase::R3:
      // genus-2 curves in |2 s0 + G| through a Weierstrass point (3) and a
      // pencil of partners (1)
      return 3 + 1;
  }
  throw DomainError("unsupported moduli case");
}

}  // namespace tsing
