#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rankmetric/codes.hpp"
#include "rankmetric/errors.hpp"
#include "rankmetric/oracle.hpp"
#include "rankmetric/wenum.hpp"

using namespace rankmetric;
using namespace rankmetric::wenum;
using counting::alpha_r;
using counting::beta;
using counting::gaussian;
using counting::sigma;

namespace {

Coeffs ints(std::initializer_list<long> v) {
  Coeffs c;
  for (long x : v) c.emplace_back(x);
  return c;
}

std::vector<BigInt> bigs(std::initializer_list<long> v) {
  std::vector<BigInt> c;
  for (long x : v) c.emplace_back(x);
  return c;
}

bool same(const ParametricPoly& a, const ParametricPoly& b, int mlo = -3, int mhi = 6) {
  if (a.degree() != b.degree()) return false;
  for (int m = mlo; m <= mhi; ++m)
    if (a.at(m) != b.at(m)) return false;
  return true;
}

// Coefficients c_u(m) = r0 + r1 q^m + r2 q^{-m}: the shift in the q-product
// matters and negative m stays exact.
ParametricPoly random_poly(int q, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-4, 4);
  std::vector<std::array<int, 3>> r(d + 1);
  for (auto& t : r) t = {dist(rng), dist(rng), dist(rng)};
  return ParametricPoly(q, d, [q, r](int m) {
    Coeffs c;
    for (auto& t : r) c.push_back(Rational(t[0]) + t[1] * qpow(q, m) + t[2] * qpow(q, -m));
    return c;
  });
}

ParametricPoly x_poly(int q) { return ParametricPoly::monomial(q, 1, 0); }
ParametricPoly y_poly(int q) { return ParametricPoly::monomial(q, 1, 1); }

RankEnumerator brute(const LinearCode& c) {
  return RankEnumerator{c.q(), c.m(), c.n(), rank_distribution(c)};
}

}  // namespace

TEST_CASE("q-product examples") {
  auto x = x_poly(2), y = y_poly(2);
  CHECK(q_product(x, y).at(3) == ints({0, 1, 0}));
  CHECK(q_product(y, x).at(3) == ints({0, 2, 0}));
  auto yx = ParametricPoly::monomial(2, 2, 1);
  auto ty = y.scaled([](int m) { return qpow(2, m) - 1; });
  for (int m = 0; m <= 5; ++m) {
    Coeffs want(4);
    want[2] = qpow(2, m) - 2;
    CHECK(q_product(yx, ty).at(m) == want);
  }
  std::mt19937_64 rng(7);
  auto b = random_poly(2, 3, rng);
  auto c = ParametricPoly::constant(2, 5);
  CHECK(same(q_product(c, b), b.scaled(Rational(5))));
  CHECK(same(q_product(b, c), b.scaled(Rational(5))));
}

TEST_CASE("q-product: restricted commutativity and distributivity") {
  auto x = x_poly(3), y = y_poly(3);
  CHECK_FALSE(same(q_product(x, y), q_product(y, x)));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_poly(3, 2, rng), b = random_poly(3, 2, rng), c = random_poly(3, 3, rng);
    CHECK(same(q_product(a + b, c), q_product(a, c) + q_product(b, c)));
    CHECK(same(q_product(c, a + b), q_product(c, a) + q_product(c, b)));
    auto k1 = ParametricPoly::constant(3, trial + 2);
    CHECK(same(q_product(k1, a), q_product(a, k1)));
  }
  CHECK_THROWS_AS(q_product(x_poly(2), x_poly(3)), InvalidArgument);
}

TEST_CASE("closed families") {
  CHECK(closed_family(2, Family::A, 2).at(2) == ints({1, 9, 6}));
  CHECK(closed_family(2, Family::B, 2).at(2) == ints({1, -3, 2}));
  for (int q : {2, 3})
    for (int m = 0; m <= 4; ++m)
      for (int l = 0; l <= 5; ++l)
        CHECK(closed_family(q, Family::A, l).evaluate(m, 1, 1) == qpow(q, static_cast<long>(m) * l));
  for (int q : {2, 3, 5}) {
    auto a1 = x_poly(q) + y_poly(q).scaled([q](int m) { return qpow(q, m) - 1; });
    auto b1 = x_poly(q) - y_poly(q);
    for (int l = 0; l <= 6; ++l) {
      CHECK(same(q_power(a1, l), closed_family(q, Family::A, l)));
      CHECK(same(q_power(b1, l), closed_family(q, Family::B, l)));
      CHECK(same(q_power(y_poly(q), l), closed_family(q, Family::YPow, l)));
      CHECK(same(q_power(x_poly(q), l), closed_family(q, Family::XPow, l)));
    }
  }
}

TEST_CASE("q-transform") {
  auto k = ParametricPoly::constant(2, 7);
  CHECK(same(q_transform(k), k));
  CHECK(q_transform(ParametricPoly::monomial(2, 2, 2)).at(0)[2] == 2);
  // y*x = q yx, so the mixed term also picks up q^{i(r-i)}.
  CHECK(q_transform(ParametricPoly::monomial(2, 3, 2)).at(0)[2] == 8);
  CHECK(q_transform(ParametricPoly::monomial(2, 2, 1)).at(0)[1] == 2);
  auto x3 = ParametricPoly::monomial(3, 3, 0);
  CHECK(same(q_transform(x3), x3));
  // Monomial y^i x^{r-i} goes to y^{[i]} * x^{[r-i]}.
  for (int r = 0; r <= 4; ++r)
    for (int i = 0; i <= r; ++i)
      CHECK(same(q_transform(ParametricPoly::monomial(3, r, i)),
                 q_product(closed_family(3, Family::YPow, i), closed_family(3, Family::XPow, r - i))));
}

TEST_CASE("q-derivatives: examples and family identities") {
  CHECK(q_derivative(ParametricPoly::monomial(2, 3, 0), 1).at(0) == ints({7, 0, 0}));
  for (int q : {2, 3})
    for (int l = 0; l <= 5; ++l)
      for (int nu = 0; nu <= l; ++nu) {
        Rational bt(beta(q, l, nu));
        CHECK(same(q_derivative(closed_family(q, Family::A, l), nu),
                   closed_family(q, Family::A, l - nu).scaled(bt)));
        Rational sg = (nu % 2 ? -bt : bt);
        CHECK(same(q_inv_derivative(closed_family(q, Family::B, l), nu),
                   closed_family(q, Family::B, l - nu).scaled(sg)));
        auto rhs = closed_family(q, Family::A, l - nu).shifted(-nu).scaled(
            [q, nu, bt](int m) { return bt * qpow(q, -sigma(nu)) * alpha_r(q, m, nu); });
        CHECK(same(q_inv_derivative(closed_family(q, Family::A, l), nu), rhs));
      }
  CHECK_THROWS_AS(q_derivative(ParametricPoly::monomial(2, 2, 0), 3), InvalidArgument);
}

TEST_CASE("q-derivatives agree with difference quotients") {
  std::mt19937_64 rng(3);
  const std::vector<std::pair<Rational, Rational>> points = {
      {Rational(3, 2), Rational(-2, 5)}, {Rational(7), Rational(1, 3)}, {Rational(-5, 4), Rational(9, 7)}};
  for (int q : {2, 3}) {
    for (int trial = 0; trial < 6; ++trial) {
      auto f = random_poly(q, 4, rng);
      auto fx = q_derivative(f, 1), fy = q_inv_derivative(f, 1);
      for (int m = -1; m <= 3; ++m)
        for (auto& [x, y] : points) {
          Rational dx = (f.evaluate(m, q * x, y) - f.evaluate(m, x, y)) / ((q - 1) * x);
          CHECK(fx.evaluate(m, x, y) == dx);
          Rational qi = Rational(1, q);
          Rational dy = (f.evaluate(m, x, qi * y) - f.evaluate(m, x, y)) / ((qi - 1) * y);
          CHECK(fy.evaluate(m, x, y) == dy);
        }
      // Higher orders are iterates of the first.
      for (int nu = 2; nu <= 4; ++nu) {
        CHECK(same(q_derivative(f, nu), q_derivative(q_derivative(f, nu - 1), 1)));
        CHECK(same(q_inv_derivative(f, nu), q_inv_derivative(q_inv_derivative(f, nu - 1), 1)));
      }
    }
  }
}

TEST_CASE("Leibniz rules") {
  std::mt19937_64 rng(5);
  for (int q : {2, 3}) {
    for (int trial = 0; trial < 8; ++trial) {
      int r = static_cast<int>(rng() % 5), s = static_cast<int>(rng() % 5);
      auto f = random_poly(q, r, rng), g = random_poly(q, s, rng);
      auto fg = q_product(f, g);
      for (int nu = 0; nu <= std::min(3, r + s); ++nu) {
        Coeffs zero(r + s - nu + 1);
        auto sx = ParametricPoly::table(q, zero), sy = ParametricPoly::table(q, zero);
        for (int l = 0; l <= nu; ++l) {
          if (l > r || nu - l > s) continue;
          Rational g1 = Rational(gaussian(nu, l, q));
          sx = sx + q_product(q_derivative(f, l), q_derivative(g, nu - l))
                        .scaled(g1 * qpow(q, static_cast<long>(nu - l) * (r - l)));
          sy = sy + q_product(q_inv_derivative(f, l), q_inv_derivative(g, nu - l).shifted(-l))
                        .scaled(g1 * qpow(q, static_cast<long>(l) * (s - nu + l)));
        }
        CHECK(same(q_derivative(fg, nu), sx));
        CHECK(same(q_inv_derivative(fg, nu), sy));
      }
    }
  }
}

TEST_CASE("Krawtchouk values") {
  CHECK(krawtchouk(1, 0, 2, 2, 2) == 9);
  CHECK(krawtchouk(1, 2, 2, 2, 2) == -3);
  CHECK(krawtchouk(2, 1, 2, 2, 2) == -2);
  for (int i = 0; i <= 4; ++i) CHECK(krawtchouk(0, i, 3, 4, 3) == 1);
  for (int q : {2, 3})
    for (int n = 0; n <= 5; ++n)
      for (int m = 1; m <= 6; ++m)
        for (int i = 0; i <= n; ++i)
          for (int j = 0; j <= n; ++j) CHECK(Rational(krawtchouk(j, i, m, n, q)) == krawtchouk_recurrence(j, i, m, n, q));
  CHECK_THROWS_AS(krawtchouk(3, 0, 2, 2, 2), InvalidArgument);
  auto t = krawtchouk_table(2, 3, 3);
  CHECK((*t)[2][1] == krawtchouk(2, 1, 3, 3, 2));
  CHECK(krawtchouk_table(2, 3, 3) == t);
}

TEST_CASE("MacWilliams examples") {
  RankEnumerator whole{2, 2, 2, bigs({1, 9, 6})}, line{2, 2, 2, bigs({1, 0, 3})}, zero{2, 2, 2, bigs({1, 0, 0})};
  CHECK(macwilliams(whole) == zero);
  CHECK(macwilliams(line) == line);
  CHECK(macwilliams(zero) == whole);
  CHECK(macwilliams_qproduct(line) == line);
  RankEnumerator bad{2, 2, 2, bigs({1, 1, 3})};
  CHECK_THROWS_AS(macwilliams(bad), InvalidArgument);
  RankEnumerator nonint{2, 2, 2, bigs({0, 1, 15})};
  CHECK_THROWS_AS(macwilliams(nonint), NonIntegral);
}

TEST_CASE("MacWilliams against brute-force duals") {
  std::uint64_t seed = 100;
  for (int q : {2, 3})
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= n; ++k) {
          auto c = oracle::random_linear_code(q, m, n, k, seed++);
          auto A = brute(c), B = brute(dual(c));
          CHECK(macwilliams(A) == B);
          CHECK(macwilliams_qproduct(A) == B);
          CHECK(macwilliams(B) == A);
        }
}

TEST_CASE("dual-of-vector and MRD enumerators") {
  CHECK(trivial_mrd_enumerator(2, 2, 2) == RankEnumerator{2, 2, 2, bigs({1, 0, 3})});
  for (int n = 1; n <= 4; ++n) {
    auto w = dual_vector_enumerator(0, n, 2, 3);
    auto a = closed_family(2, Family::A, n).at(3);
    for (int u = 0; u <= n; ++u) CHECK(Rational(w.A[u]) == a[u]);
  }
  CHECK(cartesian_extend(RankEnumerator{2, 2, 0, bigs({1})}, 2) == RankEnumerator{2, 2, 2, bigs({1, 9, 6})});

  // Enumerator of span(v)^perp depends only on rk(v), and matches the closed form.
  for (int mn = 1; mn <= 3; ++mn) {
    auto f = Field::make(2, mn);
    Space sp(f, mn);
    std::map<int, RankEnumerator> seen;
    for (std::uint64_t idx = 1; idx < sp.size(); ++idx) {
      auto v = sp.vector(idx);
      auto d = brute(dual(LinearCode(f, mn, {v.coords()})));
      int r = rank(v);
      auto [it, fresh] = seen.emplace(r, d);
      if (!fresh) CHECK(it->second == d);
    }
    for (auto& [r, d] : seen) CHECK(dual_vector_enumerator(r, mn, 2, mn) == d);
    CHECK(trivial_mrd_enumerator(mn, 2, mn) == seen.at(mn));
  }
}

TEST_CASE("cartesian extension matches brute force and the B_{s,u} recursion") {
  std::uint64_t seed = 900;
  for (int q : {2, 3})
    for (int m = 1; m <= 2; ++m)
      for (int n = 1; n <= 2; ++n)
        for (int k = 1; k <= n; ++k)
          for (int s = 0; s <= 2; ++s) {
            auto c = oracle::random_linear_code(q, m, n, k, seed++);
            std::vector<Row> g;
            for (const auto& row : c.generator()) {
              Row r = row;
              r.resize(n + s, 0);
              g.push_back(r);
            }
            for (int j = 0; j < s; ++j) {
              Row r(n + s, 0);
              r[n + j] = 1;
              g.push_back(r);
            }
            auto A = brute(c);
            auto ext = cartesian_extend(A, s);
            CHECK(ext == brute(LinearCode(c.field(), n + s, g)));
            for (int u = 0; u <= n + s; ++u) {
              Rational b = 0;
              for (int i = 0; i <= std::min(u, n); ++i)
                b += qpow(q, static_cast<long>(i) * s) * Rational(A.A[i] * gaussian(s, u - i, q)) *
                     alpha_r(q, m - i, u - i);
              CHECK(Rational(ext.A[u]) == b);
            }
          }
}

TEST_CASE("moment identities") {
  RankEnumerator line{2, 2, 2, bigs({1, 0, 3})};
  auto r = moments(line, line, 1, 1);
  CHECK(r.lhs37 == 3);
  CHECK(r.rhs37 == 3);
  CHECK(r.lhs38 == 9);
  CHECK(r.rhs38 == 9);
  auto r0 = moments(line, line, 1, 0);
  CHECK(r0.lhs37 == 4);
  CHECK(r0.rhs37 == 4);

  std::uint64_t seed = 5000;
  for (int q : {2, 3})
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= n; ++k) {
          auto c = oracle::random_linear_code(q, m, n, k, seed++);
          auto A = brute(c), B = brute(dual(c));
          for (int nu = 0; nu <= n; ++nu) {
            auto mo = moments(A, B, k, nu);
            CHECK(mo.lhs37 == mo.rhs37);
            CHECK(mo.lhs38 == mo.rhs38);
            CHECK(mo.corollary37.has_value() == (nu < B.min_distance()));
            if (mo.corollary37) {
              CHECK(*mo.corollary37 == mo.rhs37);
              CHECK(*mo.corollary38 == mo.rhs38);
            }
          }
        }
}

TEST_CASE("delta and theta summation identities") {
  for (int q : {2, 3})
    for (int a = 0; a <= 5; ++a)
      for (int nu = 0; nu <= 5; ++nu)
        for (int j = 0; j <= 5; ++j) {
          CHECK(delta_sum(q, a, nu, j) == alpha_r(q, nu, j) * alpha_r(q, a - j, nu - j) * qpow(q, static_cast<long>(j) * (a - j)));
          if (j <= a) {
            Rational rhs = qpow(q, sigma(j)) * Rational(gaussian(a - j, a - nu, q));
            CHECK(theta_sum(q, a, nu, j) == (j % 2 ? -rhs : rhs));
          }
        }
}
