#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "tsing/errors.hpp"
#include "tsing/hj_strings.hpp"

using namespace tsing;

namespace {

TString ts(std::vector<std::int64_t> v) { return TString(std::move(v)); }

// Independent T-test: search every (d, n, a) with d n^2 = N and d n a - 1 = Q.
std::optional<std::tuple<std::int64_t, std::int64_t, std::int64_t>> brute_t_type(std::int64_t N, std::int64_t Q) {
  for (std::int64_t n = 2; n * n <= N; ++n) {
    if (N % (n * n)) continue;
    const std::int64_t d = N / (n * n);
    for (std::int64_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) == 1 && d * n * a - 1 == Q) return std::tuple{d, n, a};
    }
  }
  return std::nullopt;
}

// Forward continued fraction, written out as nested fractions.
std::pair<std::int64_t, std::int64_t> fold(const std::vector<std::int64_t>& b) {
  // value = b0 - 1/(b1 - 1/(...)) as p/q
  std::int64_t p = b.back(), q = 1;
  for (std::size_t i = b.size() - 1; i-- > 0;) {
    const std::int64_t np = b[i] * p - q;
    q = p;
    p = np;
  }
  return {p, q};
}

}  // namespace

TEST_CASE("expand") {
  CHECK(expand(4, 1) == ts({4}));
  CHECK(expand(8, 3) == ts({3, 3}));
  CHECK(expand(18, 5) == ts({4, 3, 2}));
  CHECK(expand(25, 14) == ts({2, 5, 3}));
  CHECK(expand(9, 2) == ts({5, 2}));
  CHECK(expand(2, 1) == ts({2}));
  CHECK(expand(7, 6) == ts({2, 2, 2, 2, 2, 2}));
}

TEST_CASE("expand rejects bad input") {
  CHECK_THROWS_AS(expand(1, 0), DomainError);
  CHECK_THROWS_AS(expand(4, 0), DomainError);
  CHECK_THROWS_AS(expand(4, 4), DomainError);
  CHECK_THROWS_AS(expand(4, 2), DomainError);
  CHECK_THROWS_WITH(expand(4, 0), "Q out of range");
}

TEST_CASE("evaluate") {
  CHECK(evaluate(ts({3, 3})) == CyclicQuotient{8, 3});
  CHECK(evaluate(ts({4})) == CyclicQuotient{4, 1});
  CHECK(evaluate(ts({2})) == CyclicQuotient{2, 1});
  CHECK(evaluate(ts({2, 5, 3})) == CyclicQuotient{25, 14});
}

TEST_CASE("TString validation") {
  CHECK_THROWS_AS(ts({}), DomainError);
  CHECK_THROWS_AS(ts({3, 1}), DomainError);
  CHECK(ts({4, 3, 2}).to_string() == "[4,3,2]");
  CHECK(ts({4, 3, 2}).reversed() == ts({2, 3, 4}));
}

TEST_CASE("classify_string") {
  auto c = classify_string(ts({3, 3}));
  REQUIRE(c.kind == StringKind::NonCanonicalT);
  CHECK(*c.type == QuotientType(2, 2, 1));
  CHECK(classify_string(ts({2, 2})).kind == StringKind::RationalDoublePoint);
  CHECK(classify_string(ts({3})).kind == StringKind::NotT);
  c = classify_string(ts({5, 2}));
  REQUIRE(c.kind == StringKind::NonCanonicalT);
  CHECK(*c.type == QuotientType(1, 3, 1));
  c = classify_string(ts({4, 3, 2}));
  REQUIRE(c.kind == StringKind::NonCanonicalT);
  CHECK(*c.type == QuotientType(2, 3, 1));
  CHECK(c.type->quotient() == CyclicQuotient{18, 5});
}

TEST_CASE("iterate") {
  CHECK(iterate_right(ts({3, 3})) == ts({4, 3, 2}));
  CHECK(iterate_left(ts({5, 2})) == ts({2, 5, 3}));
  CHECK(iterate_right(ts({4})) == ts({5, 2}));
  CHECK(iterate_left(ts({4})) == ts({2, 5}));
  CHECK_THROWS_AS(iterate_left(ts({3})), DomainError);
  CHECK_THROWS_AS(iterate_right(ts({2, 2})), DomainError);
}

TEST_CASE("seeds_index2") {
  CHECK(seeds_index2(1) == std::vector<TString>{ts({4})});
  CHECK(seeds_index2(2) == std::vector<TString>{ts({4}), ts({3, 3})});
  const auto s4 = seeds_index2(4);
  CHECK(std::find(s4.begin(), s4.end(), ts({3, 2, 2, 3})) != s4.end());
  CHECK_THROWS_AS(seeds_index2(0), DomainError);
}

TEST_CASE("generate") {
  auto g0 = generate(0, 3);
  auto seeds = seeds_index2(3);
  std::sort(seeds.begin(), seeds.end());
  CHECK(g0 == seeds);
  CHECK(generate(1, 1) == std::vector<TString>{ts({2, 5}), ts({5, 2})});
  const auto g1 = generate(1, 4);
  CHECK(std::find(g1.begin(), g1.end(), ts({4, 2, 2, 3, 2})) != g1.end());
  const auto g2 = generate(2, 1);
  CHECK(std::find(g2.begin(), g2.end(), ts({2, 5, 3})) != g2.end());
  CHECK_THROWS_AS(generate(-1, 1), DomainError);
  CHECK_THROWS_AS(generate(0, 0), DomainError);
}

TEST_CASE("round trip for all coprime pairs up to 500") {
  for (std::int64_t N = 2; N <= 500; ++N) {
    for (std::int64_t Q = 1; Q < N; ++Q) {
      if (std::gcd(N, Q) != 1) continue;
      const TString s = expand(N, Q);
      const auto back = evaluate(s);
      REQUIRE(back == CyclicQuotient{N, Q});
      REQUIRE(fold({s.entries().begin(), s.entries().end()}) == std::pair{N, Q});
    }
  }
}

TEST_CASE("classify agrees with brute-force type search") {
  for (std::int64_t N = 2; N <= 300; ++N) {
    for (std::int64_t Q = 1; Q < N; ++Q) {
      if (std::gcd(N, Q) != 1) continue;
      const TString s = expand(N, Q);
      const auto cls = classify_string(s);
      if (s.all_twos()) {
        REQUIRE(cls.kind == StringKind::RationalDoublePoint);
        continue;
      }
      const auto oracle = brute_t_type(N, Q);
      REQUIRE((cls.kind == StringKind::NonCanonicalT) == oracle.has_value());
      if (oracle) {
        const auto [d, n, a] = *oracle;
        CHECK(*cls.type == QuotientType(d, n, a));
      }
    }
  }
}

TEST_CASE("level law, d preservation and n growth") {
  for (int k = 0; k <= 8; ++k) {
    for (const TString& s : generate(k, 3)) {
      const auto cls = classify_string(s);
      REQUIRE(cls.kind == StringKind::NonCanonicalT);
      CHECK(static_cast<std::int64_t>(s.length()) - cls.type->d() == k);
      CHECK(cls.type->n() >= k + 2);
      for (const TString& t : {iterate_left(s), iterate_right(s)}) {
        const auto next = classify_string(t);
        REQUIRE(next.kind == StringKind::NonCanonicalT);
        CHECK(next.type->d() == cls.type->d());
      }
    }
  }
}

TEST_CASE("mirror law") {
  for (int k = 0; k <= 6; ++k) {
    for (const TString& s : generate(k, 4)) {
      const auto q = evaluate(s);
      const auto m = evaluate(s.reversed());
      CHECK(m.order == q.order);
      CHECK((static_cast<__int128>(q.weight) * m.weight) % q.order == 1);
      CHECK(m.weight == q.dual_weight());
      const auto c1 = classify_string(s);
      const auto c2 = classify_string(s.reversed());
      REQUIRE(c2.kind == StringKind::NonCanonicalT);
      CHECK(c1.type->d() == c2.type->d());
      CHECK(c1.type->n() == c2.type->n());
      CHECK(c1.type->a() + c2.type->a() == c1.type->n());
    }
  }
}

TEST_CASE("generate is exhaustive up to N = 400") {
  constexpr std::int64_t kMaxN = 400;
  std::set<TString> brute;
  for (std::int64_t N = 2; N <= kMaxN; ++N) {
    for (std::int64_t Q = 1; Q < N; ++Q) {
      if (std::gcd(N, Q) != 1) continue;
      TString s = expand(N, Q);
      if (classify_string(s).kind == StringKind::NonCanonicalT) brute.insert(std::move(s));
    }
  }
  // n >= level + 2, so level k only reaches N <= 400 when d (k+2)^2 <= 400.
  std::set<TString> generated;
  for (int k = 0; (k + 2) * (k + 2) <= kMaxN; ++k) {
    for (TString& s : generate(k, kMaxN / ((k + 2) * (k + 2)))) {
      if (evaluate(s).order <= kMaxN) generated.insert(std::move(s));
    }
  }
  CHECK(brute.size() == generated.size());
  CHECK(brute == generated);
}

TEST_CASE("random round trips with large entries") {
  std::mt19937_64 rng(20240607);
  std::uniform_int_distribution<std::int64_t> entry(2, 40);
  std::uniform_int_distribution<int> len(1, 8);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::int64_t> v(len(rng));
    for (auto& x : v) x = entry(rng);
    const TString s(v);
    const auto q = evaluate(s);
    CHECK(expand(q.order, q.weight) == s);
  }
}

TEST_CASE("overflow is reported") {
  std::vector<std::int64_t> big(40, 1000);
  CHECK_THROWS_AS(evaluate(TString(big)), OverflowError);
  CHECK_THROWS_AS(QuotientType(1, 4'000'000'000LL, 1).order(), OverflowError);
}
