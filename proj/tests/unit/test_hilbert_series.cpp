#include <functional>
#include <random>

#include "doctest.h"
#include "tsing/errors.hpp"
#include "tsing/hilbert_series.hpp"

using namespace tsing;

namespace {

using V = std::vector<std::int64_t>;

// Basis of k[x_1..x_k]/(x_i^{e_i} for the listed i): monomials whose exponent
// at a truncated variable stays below its bound.
std::int64_t count_monomials(const V& weights, const V& bounds, std::int64_t degree) {
  std::int64_t count = 0;
  std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t left) {
    if (i == weights.size()) {
      if (left == 0) ++count;
      return;
    }
    for (std::int64_t e = 0; e * weights[i] <= left; ++e) {
      if (bounds[i] > 0 && e >= bounds[i]) break;
      walk(i + 1, left - e * weights[i]);
    }
  };
  walk(0, degree);
  return count;
}

}  // namespace

TEST_CASE("canonical ring of the hypersurface") {
  const auto hr = series({1, 1, 2, 5}, {10});
  CHECK(hr.coefficients(5) == V{1, 2, 4, 6, 9, 13});
  CHECK(coefficient(hr, 2) == 4);
  CHECK(coefficient(hr, 5) == 13);
  CHECK(coefficient(hr, 0) == 1);
}

TEST_CASE("ring without the degree-5 generator") {
  const auto hs = series({1, 1, 2}, {});
  CHECK(coefficient(hs, 4) == 9);
  CHECK(coefficient(hs, 5) == 12);
}

TEST_CASE("single variable") {
  const auto h = series({1}, {});
  CHECK(h.coefficients(6) == V{1, 1, 1, 1, 1, 1, 1});
  CHECK(h.numerator() == Polynomial{1});
  CHECK(h.denominator() == (Polynomial{1, -1}));
}

TEST_CASE("equal") {
  CHECK(equal(series({1, 1, 2, 5}, {10}), series({1, 1, 2, 3, 5}, {3, 10})));
  CHECK(equal(series({1, 1, 2}, {}), series({1, 1, 2, 3}, {3})));
  CHECK_FALSE(equal(series({1, 1, 2, 5}, {10}), series({1, 1, 2, 5}, {9})));
  CHECK_FALSE(equal(series({1, 1, 2}, {}), series({1, 1, 2, 5}, {10})));
}

TEST_CASE("cancellation gives a canonical form") {
  const auto h = series({1, 1, 2, 3, 5}, {3, 10});
  CHECK(h.weights() == V{1, 1, 2, 5});
  CHECK(h.relations() == V{10});
}

TEST_CASE("matches_plurigenera") {
  CHECK(matches_plurigenera(series({1, 1, 2, 5}, {10}), 3, Rational(1), 20));
  CHECK_FALSE(matches_plurigenera(series({1, 1, 2}, {}), 3, Rational(1), 20));
  CHECK(matches_plurigenera(series({1, 1, 2}, {}), 3, Rational(1), 4));  // agrees through m = 4
  CHECK(matches_plurigenera(series({1}, {}), 1, Rational(0), 20));
  CHECK_FALSE(matches_plurigenera(series({1, 1}, {}), 1, Rational(0), 20));
  CHECK_THROWS_AS(matches_plurigenera(series({1}, {}), 1, Rational(0), 1), DomainError);
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(series({0, 1}, {}), DomainError);
  CHECK_THROWS_AS(series({1}, {0}), DomainError);
  CHECK_THROWS_AS(series({1}, {}).coefficient(-1), DomainError);
}

TEST_CASE("complete-intersection additivity up to degree 50") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> w(1, 6), e(1, 12);
  std::uniform_int_distribution<int> nv(1, 5), nr(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    V weights(nv(rng)), relations(nr(rng));
    for (auto& x : weights) x = w(rng);
    for (auto& x : relations) x = e(rng);
    const std::int64_t k = e(rng);
    const auto base = series(weights, relations);
    V more = relations;
    more.push_back(k);
    const auto cut = series(weights, more);
    const V b = base.coefficients(50), c = cut.coefficients(50);
    for (std::int64_t m = 0; m <= 50; ++m) {
      const std::int64_t expected = b[m] - (m >= k ? b[m - k] : 0);
      REQUIRE(c[m] == expected);
    }
  }
}

TEST_CASE("equal implies equal coefficients and conversely") {
  const std::vector<std::pair<V, V>> family = {
      {{1, 1, 2, 5}, {10}}, {{1, 1, 2, 3, 5}, {3, 10}}, {{1, 1, 2}, {}},        {{1, 1, 2, 3}, {3}},
      {{1, 1, 2, 5}, {9}},  {{2, 1, 1, 5, 4}, {4, 10}}, {{1, 2, 3}, {6}},       {{1, 2}, {}},
      {{1, 1, 2}, {2}},     {{1, 1, 1}, {2}},           {{1, 1, 4, 2}, {4, 2}},
  };
  for (const auto& [w1, r1] : family) {
    const auto h1 = series(w1, r1);
    CHECK(equal(h1, h1));
    for (const auto& [w2, r2] : family) {
      const auto h2 = series(w2, r2);
      const bool same = h1.coefficients(50) == h2.coefficients(50);
      CHECK(equal(h1, h2) == same);
      CHECK(equal(h1, h2) == equal(h2, h1));
    }
  }
}

TEST_CASE("monomial-count oracle") {
  // Relations x_i^{e_i} form a regular sequence of degrees w_i e_i, so the
  // series depends only on those degrees.
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> w(1, 6), ex(1, 4);
  std::uniform_int_distribution<int> nv(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    V weights(nv(rng)), bounds(weights.size(), 0), relations;
    for (auto& x : weights) x = w(rng);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (rng() % 2) {
        bounds[i] = ex(rng);
        relations.push_back(weights[i] * bounds[i]);
      }
    }
    const auto h = series(weights, relations);
    for (std::int64_t m = 0; m <= 30; ++m) REQUIRE(h.coefficient(m) == count_monomials(weights, bounds, m));
  }
}
