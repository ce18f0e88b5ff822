#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>

#include "rankmetric/bounds.hpp"
#include "rankmetric/errors.hpp"
#include "rankmetric/rankgeom.hpp"

using namespace rankmetric;

namespace {

// Max of sum rho_i (n_i - rho_i) over ordered compositions, by DP over (n, rho) left.
int mixed_gain(int m, int n, int rho) {
  std::map<std::pair<int, int>, int> memo;
  std::function<int(int, int)> go = [&](int nl, int rl) -> int {
    if (nl == 0) return rl == 0 ? 0 : -1000000;
    auto key = std::make_pair(nl, rl);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int best = -1000000;
    for (int ni = 1; ni <= nl; ++ni)
      for (int ri = 0; ri <= std::min(ni, rl); ++ri)
        if (ni + ri <= m) best = std::max(best, ri * (ni - ri) + go(nl - ni, rl - ri));
    return memo[key] = best;
  };
  return go(n, rho);
}

// Smallest K with (Q - V)^K < Q^{K-1}, scanning upward.
std::optional<BigInt> probabilistic_scan(const BigInt& Q, const BigInt& V, int limit) {
  BigInt lhs = Q - V, rhs = 1;
  for (int K = 1; K <= limit; ++K) {
    if (lhs < rhs) return BigInt(K);
    lhs *= Q - V;
    rhs *= Q;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("singleton_max_cardinality") {
  CHECK(singleton_max_cardinality(2, 2, 2, 3) == 1);
  CHECK(singleton_max_cardinality(2, 2, 2, 2) == 4);
  CHECK(singleton_max_cardinality(2, 3, 3, 3) == 8);
  CHECK(singleton_max_cardinality(2, 2, 2, 1) == 16);
  CHECK(singleton_max_cardinality(3, 4, 2, 2) == 81);
  CHECK(singleton_max_cardinality(2, 4, 2, 2) == singleton_max_cardinality(2, 2, 4, 2));
  CHECK_THROWS_AS(singleton_max_cardinality(2, 2, 2, 0), InvalidArgument);
}

TEST_CASE("packing asymptote") {
  CHECK(packing_asymptote(0, 1) == doctest::Approx(1));
  CHECK(packing_asymptote(0, 3.5) == doctest::Approx(1));
  CHECK(packing_asymptote(0.3, 1) == doctest::Approx(0.7));
  CHECK(packing_asymptote(0.3, 2) == doctest::Approx(0.4));
  CHECK_THROWS_AS(packing_asymptote(0.6, 2), InvalidArgument);
  CHECK_THROWS_AS(packing_asymptote(-0.1, 1), InvalidArgument);
  CHECK_THROWS_AS(packing_asymptote(0.1, 0), InvalidArgument);
}

TEST_CASE("lower bounds at GF(4)^2, rho = 1") {
  BoundReport r;
  r.q = 2;
  r.m = 2;
  r.n = 2;
  r.rho = 1;
  covering_lower(r);
  // Q = 16, V_1 = 10; the MRD code with d = 3 has one word; overlap 2*3 = 6.
  CHECK(*r.a == 2);
  REQUIRE(r.b);
  CHECK(*r.b == 3);  // ceil((16 - 6) / 4)
  CHECK(r.epsilon == 2);
  REQUIRE(r.c);
  CHECK(*r.c == 2);  // ceil(16 / (10 - (2/12) * 9))
  auto full = covering_bounds(2, 2, 2, 1);
  CHECK(full.best_lower == 3);
  CHECK(full.lower_tag == 'b');
  CHECK(full.best_upper <= 4);
  CHECK(*full.A == 4);
}

TEST_CASE("documented bound values") {
  auto r = covering_bounds(2, 3, 3, 1);
  CHECK(*r.b == 11);
  CHECK(*r.C == 32);
  CHECK(r.best_lower == 11);
  CHECK(r.best_upper == 32);
  CHECK(r.upper_tag == 'C');
  CHECK(r.mixed_n == std::vector<int>{2, 1});
  CHECK(r.mixed_rho == std::vector<int>{1, 0});

  r = covering_bounds(2, 4, 4, 2);
  CHECK(r.best_lower == 10);
  CHECK(r.best_upper == 64);
  CHECK(r.upper_tag == 'C');

  r = covering_bounds(2, 5, 4, 3);
  CHECK(r.best_lower == 3);
  CHECK(r.lower_tag == 'a');
  CHECK(r.best_upper == 8);
  CHECK(r.upper_tag == 'C');

  r = covering_bounds(2, 4, 4, 3);
  CHECK(r.best_lower == 2);
  CHECK(r.best_upper == 8);
  CHECK(r.upper_tag == 'C');

  r = covering_bounds(2, 7, 7, 6);
  CHECK(r.best_lower == 2);
  CHECK(r.best_upper == 16);
}

TEST_CASE("specials and argument checks") {
  auto r = covering_bounds(2, 3, 2, 0);
  CHECK(r.special);
  CHECK(r.best_lower == 64);
  CHECK(r.best_upper == 64);
  r = covering_bounds(3, 4, 3, 3);
  CHECK(r.special);
  CHECK(r.best_lower == 1);
  CHECK(r.best_upper == 1);
  CHECK_THROWS_AS(covering_bounds(2, 3, 3, 4), InvalidArgument);
  CHECK_THROWS_AS(covering_bounds(2, 3, 3, -1), InvalidArgument);
  BoundReport bad;
  bad.m = 3;
  bad.n = 3;
  bad.rho = 3;
  CHECK_THROWS_AS(covering_lower(bad), InvalidArgument);
  CHECK_THROWS_AS(covering_upper(bad), InvalidArgument);
}

TEST_CASE("bound invariants over the table grid") {
  for (int q : {2, 3}) {
    const int mmax = q == 2 ? 7 : 5;
    auto table = covering_table(q, {2, mmax}, {2, mmax}, {1, 6}, 2);
    REQUIRE(!table.empty());
    for (const auto& r : table) {
      CAPTURE(q);
      CAPTURE(r.m);
      CAPTURE(r.n);
      CAPTURE(r.rho);
      CHECK(r.n <= r.m);
      if (r.special) continue;
      // Every lower <= every upper.
      for (auto lo : {r.a, r.b, r.c})
        if (lo)
          for (auto up : {r.A, r.B, r.C, r.D, r.E})
            if (up) CHECK(*lo <= *up);
      // Best selection.
      BigInt bl = *r.a, bu = *r.A;
      for (auto lo : {r.b, r.c})
        if (lo) bl = std::max(bl, *lo);
      for (auto up : {r.B, r.C, r.D, r.E})
        if (up) bu = std::min(bu, *up);
      CHECK(r.best_lower == bl);
      CHECK(r.best_upper == bu);
      // Excess bound is at least the sphere covering bound.
      CHECK(r.c.has_value() == (r.epsilon > 0));
      if (r.c) CHECK(*r.c >= *r.a);
      // Cohen applicability forces rho(m + n - 3 rho) >= -tau(q).
      if (r.b) CHECK(r.rho * (r.m + r.n - 3 * r.rho) >= -counting::tau_q(q) - 1e-12);
      // Mixed bound against an independent DP over ordered compositions.
      int g = mixed_gain(r.m, r.n, r.rho);
      REQUIRE(r.C);
      CHECK(*r.C == ipow(q, static_cast<unsigned>(r.m * (r.n - r.rho) - g)));
      CHECK(*r.C <= *r.A);
      CHECK(*r.B <= *r.A);
    }
  }
}

TEST_CASE("probabilistic bound against an exact power scan") {
  int checked = 0;
  for (int q : {2, 3})
    for (int m = 2; m <= 7; ++m)
      for (int n = 2; n <= m; ++n)
        for (int rho = 1; rho < n; ++rho) {
          auto r = covering_bounds(q, m, n, rho);
          if (*r.D > 3000) continue;
          const BigInt Q = ipow(q, static_cast<unsigned>(m * n));
          auto K = probabilistic_scan(Q, counting::V(q, m, n, rho), 3001);
          REQUIRE(K);
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(rho);
          CHECK(*r.D == *K);
          ++checked;
        }
  CHECK(checked > 20);
}

TEST_CASE("JSL bound against double evaluation") {
  for (int m = 2; m <= 6; ++m)
    for (int n = 2; n <= m; ++n)
      for (int rho = 1; rho < n; ++rho) {
        auto r = covering_bounds(2, m, n, rho);
        double Q = std::ldexp(1.0, m * n);
        double V = static_cast<double>(counting::V(2, m, n, rho));
        double e = Q / V * (1 + std::log(V));
        if (std::abs(e - std::round(e)) < 1e-6) continue;
        CHECK(static_cast<double>(*r.E) == std::floor(e));
      }
}

TEST_CASE("transpose symmetry") {
  for (int m = 2; m <= 6; ++m)
    for (int n = 1; n < m; ++n)
      for (int rho = 0; rho <= n; ++rho) {
        auto a = covering_bounds(2, m, n, rho), b = covering_bounds(2, n, m, rho);
        CHECK(b.transposed);
        CHECK_FALSE(a.transposed);
        CHECK(a.best_lower == b.best_lower);
        CHECK(a.best_upper == b.best_upper);
        CHECK(a.lower_tag == b.lower_tag);
        CHECK(a.upper_tag == b.upper_tag);
        CHECK(b.m == n);
        CHECK(b.n == m);
      }
}

TEST_CASE("super-multiplicativity of best uppers") {
  // K(q^m, n + n', rho + rho') <= K(q^m, n, rho) K(q^m, n', rho'), checked on computed uppers.
  int violations = 0;
  for (int m = 2; m <= 7; ++m)
    for (int n1 = 1; n1 <= m; ++n1)
      for (int n2 = 1; n1 + n2 <= m; ++n2)
        for (int r1 = 0; r1 <= n1; ++r1)
          for (int r2 = 0; r2 <= n2; ++r2) {
            auto whole = covering_bounds(2, m, n1 + n2, r1 + r2);
            auto p = covering_bounds(2, m, n1, r1), s = covering_bounds(2, m, n2, r2);
            if (whole.best_upper > p.best_upper * s.best_upper) {
              ++violations;
              MESSAGE("m=" << m << " (" << n1 << "," << r1 << ")+(" << n2 << "," << r2 << ")");
            }
          }
  CHECK(violations == 0);
}

TEST_CASE("covering_table shape") {
  auto t = covering_table(2, {2, 4}, {2, 4}, {1, 6});
  int expect = 0;
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= m; ++n) expect += n;
  CHECK(static_cast<int>(t.size()) == expect);
  CHECK(t.front().m == 2);
  CHECK(t.front().n == 2);
  CHECK(t.front().rho == 1);
  auto t1 = covering_table(2, {2, 5}, {2, 5}, {1, 3}, 1), t4 = covering_table(2, {2, 5}, {2, 5}, {1, 3}, 4);
  REQUIRE(t1.size() == t4.size());
  for (size_t i = 0; i < t1.size(); ++i) {
    CHECK(t1[i].best_lower == t4[i].best_lower);
    CHECK(t1[i].best_upper == t4[i].best_upper);
  }
}

TEST_CASE("parse_range") {
  CHECK(parse_range("3").lo == 3);
  CHECK(parse_range("3").hi == 3);
  CHECK(parse_range("2..7").lo == 2);
  CHECK(parse_range("2..7").hi == 7);
  CHECK_THROWS_AS(parse_range("x..2"), InvalidArgument);
  CHECK_THROWS_AS(parse_range(""), InvalidArgument);
}

TEST_CASE("linear dimension bounds") {
  auto d = linear_dim_bounds(2, 6, 6, 2);
  CHECK(d.k_lower == 3);
  CHECK(d.k_upper == 4);
  CHECK_FALSE(d.exact);
  d = linear_dim_bounds(2, 8, 8, 4);
  CHECK(d.k_lower == 2);
  CHECK(d.k_upper == 4);
  d = linear_dim_bounds(2, 8, 8, 5);
  CHECK(d.k_lower == 1);
  CHECK(d.k_upper == 3);
  for (int n = 2; n <= 8; ++n) {
    d = linear_dim_bounds(2, 8, n, 1);
    CHECK(d.exact);
    CHECK(d.k_lower == n - 1);
    CHECK(d.k_upper == n - 1);
    d = linear_dim_bounds(2, 8, n, n);
    CHECK(d.k_lower == 0);
    CHECK(d.k_upper == 0);
  }
  // rho(n - rho) <= m - sigma(q) forces equality.
  d = linear_dim_bounds(2, 8, 4, 2);
  CHECK(d.exact);
  CHECK(d.k_lower == 2);
  CHECK_THROWS_AS(linear_dim_bounds(2, 4, 5, 1), InvalidArgument);
  CHECK_THROWS_AS(linear_dim_bounds(2, 5, 4, 5), InvalidArgument);
  for (int q : {2, 3})
    for (int m = 2; m <= 10; ++m)
      for (int n = 1; n <= m; ++n)
        for (int rho = 0; rho <= n; ++rho) {
          auto b = linear_dim_bounds(q, m, n, rho);
          CHECK(b.k_lower <= b.k_upper);
          CHECK(b.k_lower >= 0);
          // The dimension bound agrees with the cardinality bounds when rho < n.
          if (rho > 0 && rho < n)
            CHECK(ipow(q, static_cast<unsigned>(m * b.k_upper)) >= covering_bounds(q, m, n, rho).best_lower);
        }
}

TEST_CASE("covering asymptotes") {
  CHECK(covering_asymptote_v(0.5, 1) == doctest::Approx(0.75));
  CHECK(covering_asymptote_k(0.5, 1) == doctest::Approx(0.25));
  CHECK(covering_asymptote_k(0, 0.7) == doctest::Approx(1));
  CHECK(covering_asymptote_v(0, 1) == doctest::Approx(0));
  CHECK_THROWS_AS(covering_asymptote_v(1.5, 1), InvalidArgument);
  CHECK_THROWS_AS(covering_asymptote_k(0.8, 2), InvalidArgument);
  // At b = 1: k(r) = 1 - v(r).
  for (double r = 0; r <= 1.0; r += 0.125) CHECK(covering_asymptote_k(r, 1) == doctest::Approx(1 - covering_asymptote_v(r, 1)));
}
