#include "verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "rankmetric/bounds.hpp"
#include "rankmetric/codes.hpp"
#include "rankmetric/errors.hpp"
#include "rankmetric/oracle.hpp"
#include "rankmetric/rankgeom.hpp"
#include "rankmetric/wenum.hpp"

namespace rmc {

using namespace rankmetric;
using counting::gaussian;
using wenum::ParametricPoly;
using Status = oracle::Status;

namespace {

class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (!ok && failure_.empty()) failure_ = what();
  }
  long cases() const { return cases_; }
  const std::string& failure() const { return failure_; }

 private:
  long cases_ = 0;
  std::string failure_;
};

struct Ctx {
  std::uint64_t seed;
  int workers;
};

using CheckFn = std::function<void(Tally&, const Ctx&)>;

struct Check {
  const char* name;
  CheckFn fn;
};

template <class... T>
std::string fmt(const T&... parts) {
  std::ostringstream s;
  ((s << parts << ' '), ...);
  return s.str();
}

std::vector<std::uint32_t> poly_basis(int q, int n) {
  std::vector<std::uint32_t> g;
  std::uint32_t p = 1;
  for (int j = 0; j < n; ++j, p *= q) g.push_back(p);
  return g;
}

// ---------------------------------------------------------------- ffield

void frobenius_check(Tally& t, const Ctx&) {
  for (auto [q, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 4}, {2, 8}, {3, 2}, {3, 5}, {5, 3}}) {
    auto f = Field::make(q, m);
    for (std::uint32_t x = 0; x < f->order(); ++x) {
      t.expect(f->frobenius(x, m) == x, [&] { return fmt("frob^m", q, m, x); });
      for (std::uint32_t y = 0; y < f->order(); y += 5)
        for (int a : {1, 2})
          t.expect(f->frobenius(f->add(x, y), a) == f->add(f->frobenius(x, a), f->frobenius(y, a)),
                   [&] { return fmt("frob additive", q, m, x, y, a); });
    }
  }
}

void trace_check(Tally& t, const Ctx&) {
  for (auto [q, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 5}, {2, 8}, {3, 3}, {3, 5}, {5, 2}, {5, 3}}) {
    auto f = Field::make(q, m);
    std::vector<std::uint32_t> hits(q, 0);
    for (std::uint32_t x = 0; x < f->order(); ++x) {
      auto tx = f->trace(x);
      ++hits[tx];
      for (int c = 0; c < q; ++c) t.expect(f->trace(f->scale(x, c)) == (tx * c) % q, [&] { return fmt("scale", x); });
      for (std::uint32_t y = 0; y < f->order(); y += 3)
        t.expect(f->trace(f->add(x, y)) == (tx + f->trace(y)) % q, [&] { return fmt("additive", x, y); });
    }
    for (int c = 0; c < q; ++c) t.expect(hits[c] == f->order() / q, [&] { return fmt("fibre", q, m, c); });
  }
}

void expansion_check(Tally& t, const Ctx& ctx) {
  std::mt19937_64 rng(ctx.seed);
  for (auto [q, m] : std::vector<std::pair<int, int>>{{2, 3}, {2, 6}, {3, 3}, {5, 2}}) {
    auto f = Field::make(q, m);
    for (const Basis& b : {Basis::polynomial(f), dual_basis(Basis::polynomial(f))})
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint32_t> x(4), y(4), s(4), cx(4);
        int c = static_cast<int>(rng() % q);
        for (int j = 0; j < 4; ++j) {
          x[j] = rng() % f->order();
          y[j] = rng() % f->order();
          s[j] = f->add(x[j], y[j]);
          cx[j] = f->scale(x[j], c);
        }
        auto ex = expand(*f, x, b), ey = expand(*f, y, b), es = expand(*f, s, b), ec = expand(*f, cx, b);
        bool ok = true;
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < 4; ++j)
            ok = ok && es.at(i, j) == (ex.at(i, j) + ey.at(i, j)) % q && ec.at(i, j) == (ex.at(i, j) * c) % q;
        t.expect(ok, [&] { return fmt("expand linearity", q, m); });
        t.expect(reassemble(ex, b) == x, [&] { return fmt("reassemble", q, m); });
      }
  }
}

// ---------------------------------------------------------------- rankgeom

gfq::Matrix random_invertible(int q, int n, std::mt19937_64& rng) {
  for (;;) {
    gfq::Matrix a(q, n, n);
    for (auto& e : a.e) e = static_cast<std::uint8_t>(rng() % q);
    if (gfq::rank(a) == n) return a;
  }
}

void rank_invariance_check(Tally& t, const Ctx& ctx) {
  std::mt19937_64 rng(ctx.seed + 1);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      auto f = Field::make(2, m);
      Space sp(f, n);
      // A random basis of GF(2^m) over GF(2).
      std::vector<std::uint32_t> els;
      for (;;) {
        els.clear();
        for (int i = 0; i < m; ++i) els.push_back(static_cast<std::uint32_t>(rng() % f->order()));
        try {
          Basis probe(f, els);
          break;
        } catch (const InvalidArgument&) {
        }
      }
      Basis rb(f, els), db = dual_basis(Basis::polynomial(f));
      auto M = random_invertible(2, n, rng);
      for (std::uint64_t i = 0; i < sp.size(); ++i) {
        auto v = sp.vector(i);
        int r = rank(v);
        t.expect(gfq::rank(v.expand(rb)) == r && gfq::rank(v.expand(db)) == r, [&] { return fmt("basis", m, n, i); });
        t.expect(gfq::rank(v.expand() * M) == r, [&] { return fmt("column change", m, n, i); });
      }
    }
}

void gaussian_check(Tally& t, const Ctx&) {
  for (int q : {2, 3})
    for (int n = 0; n <= 8; ++n)
      for (int k = 0; k <= n; ++k) {
        auto g = gaussian(n, k, q);
        t.expect(g == gaussian(n, n - k, q), [&] { return fmt("symmetry", q, n, k); });
        if (n >= 1 && k >= 1 && k < n) {
          t.expect(g == gaussian(n - 1, k - 1, q) + ipow(q, k) * gaussian(n - 1, k, q), [&] { return fmt("pascal1", q, n, k); });
          t.expect(g == ipow(q, n - k) * gaussian(n - 1, k - 1, q) + gaussian(n - 1, k, q),
                   [&] { return fmt("pascal2", q, n, k); });
          t.expect(g * (ipow(q, k) - 1) == (ipow(q, n) - 1) * gaussian(n - 1, k - 1, q), [&] { return fmt("ratio1", q, n, k); });
          t.expect(g * (ipow(q, n - k) - 1) == (ipow(q, n) - 1) * gaussian(n - 1, k, q), [&] { return fmt("ratio2", q, n, k); });
        }
        for (int l = 0; l <= k; ++l)
          t.expect(g * gaussian(k, l, q) == gaussian(n, l, q) * gaussian(n - l, n - k, q),
                   [&] { return fmt("transitivity", q, n, k, l); });
      }
}

void beta_check(Tally& t, const Ctx&) {
  for (int q : {2, 3})
    for (int m = 0; m <= 6; ++m)
      for (int u = 0; u <= 6; ++u) {
        if (u <= m)
          t.expect(counting::beta(q, m, u) == gaussian(m, u, q) * counting::beta(q, u, u), [&] { return fmt("beta", q, m, u); });
        t.expect(counting::beta(q, m + u, m + u) ==
                     gaussian(m + u, u, q) * counting::beta(q, m, m) * counting::beta(q, u, u),
                 [&] { return fmt("beta product", q, m, u); });
      }
}

void ball_volume_check(Tally& t, const Ctx&) {
  for (int q : {2, 3})
    for (int m = 1; m <= 6; ++m)
      for (int n = 1; n <= 6; ++n)
        for (int r = 0; r <= std::min(m, n); ++r) {
          auto b = ball_volume_bounds(q, m, n, r);
          t.expect(b.holds && b.lower <= counting::V(q, m, n, r), [&] { return fmt("volume", q, m, n, r); });
        }
}

// |B_r(0) ∩ B_s(c)| for every c by a joint rank histogram; the second ball
// ranges over all centers, the first is fixed at 0 by translation invariance.
void intersection_check(Tally& t, const Ctx&) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    auto f = Field::make(2, m);
    Space sp(f, n);
    const int mn = std::min(m, n);
    std::vector<int> rk(sp.size());
    for (std::uint64_t x = 0; x < sp.size(); ++x) rk[x] = sp.rank(x);
    // inter[e][r][s] for the first center seen at distance e
    std::map<int, std::vector<std::vector<BigInt>>> seen;
    for (std::uint64_t c = 0; c < sp.size(); ++c) {
      std::vector<std::vector<long>> h(mn + 1, std::vector<long>(mn + 1, 0));
      for (std::uint64_t x = 0; x < sp.size(); ++x) ++h[rk[x]][rk[sp.sub(x, c)]];
      std::vector<std::vector<BigInt>> inter(mn + 1, std::vector<BigInt>(mn + 1, 0));
      for (int r = 0; r <= mn; ++r)
        for (int s = 0; s <= mn; ++s)
          for (int a = 0; a <= r; ++a)
            for (int b = 0; b <= s; ++b) inter[r][s] += h[a][b];
      auto [it, fresh] = seen.emplace(rk[c], inter);
      if (!fresh) t.expect(it->second == inter, [&] { return fmt("constant at distance", m, n, c); });
    }
    for (int r = 0; r <= mn; ++r)
      for (int s = 0; s <= mn; ++s) {
        BigInt prev = -1;
        for (const auto& [e, inter] : seen) {
          const BigInt& x = inter[r][s];
          if (prev >= 0) t.expect(x <= prev, [&] { return fmt("monotone", m, n, r, s, e); });
          prev = x;
          BigInt uni = counting::V(2, m, n, r) + counting::V(2, m, n, s) - x;
          t.expect(uni >= std::max(counting::V(2, m, n, r), counting::V(2, m, n, s)) && uni <= BigInt(sp.size()),
                   [&] { return fmt("union", m, n, r, s, e); });
          try {
            auto closed = intersection_volume_closed(2, m, n, r, s, e);
            t.expect(closed == x, [&] { return fmt("closed form", m, n, r, s, e); });
          } catch (const NoClosedForm&) {
          }
        }
      }
  }
}

void els_check(Tally& t, const Ctx&) {
  for (int q : {2, 3})
    for (int n = 0; n <= 4; ++n)
      for (int v = 0; v <= n; ++v)
        t.expect(BigInt(enumerate_els(q, 2, n, v).size()) == gaussian(n, v, q), [&] { return fmt("count", q, n, v); });
  for (int n = 1; n <= 4; ++n)
    for (int v = 0; v <= n; ++v) {
      const Els V0 = enumerate_els(2, 2, n, v).front();
      for (int a = 0; a <= v; ++a)
        for (const auto& A : enumerate_els(2, 2, n, a))
          if (V0.contains(A))
            t.expect(BigInt(complements(A, V0).size()) == ipow(2, a * (v - a)), [&] { return fmt("complements", n, v, a); });
    }
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    auto f = Field::make(2, m);
    Space sp(f, n);
    std::vector<std::vector<Els>> by_dim;
    for (int v = 0; v <= std::min(m, n); ++v) by_dim.push_back(enumerate_els(2, m, n, v));
    for (std::uint64_t i = 0; i < sp.size(); ++i) {
      auto v = sp.vector(i);
      auto s = support_els(v);
      int holders = 0;
      for (const auto& e : by_dim[rank(v)])
        if (e.contains(v)) holders += (e == s) ? 1 : 100;
      t.expect(holders == 1, [&] { return fmt("support", m, n, i); });
    }
  }
}

// ---------------------------------------------------------------- codes

void gabidulin_check(Tally& t, const Ctx& ctx) {
  for (int m = 1; m <= 4; ++m) {
    auto f = Field::make(2, m);
    for (int n = 1; n <= m; ++n)
      for (int k = 1; k <= n; ++k)
        for (int a = 1; a <= std::max(1, m - 1); ++a) {
          if (std::gcd(a, m) != 1) continue;
          auto g = gabidulin(RankVector(f, poly_basis(2, n)), k, a);
          int d = min_rank_distance(g, kDefaultGuard, ctx.workers);
          t.expect(d == n - k + 1, [&] { return fmt("d_R", m, n, k, a, d); });
          t.expect(d <= min_hamming_distance(g), [&] { return fmt("d_R<=d_H", m, n, k, a); });
          t.expect(mrd_els_check(g), [&] { return fmt("els check", m, n, k, a); });
        }
  }
  std::uint64_t seed = ctx.seed + 10;
  for (int trial = 0; trial < 40; ++trial) {
    int q = 2 + trial % 2, m = 1 + trial % 3, n = 1 + (trial / 3) % 3, k = trial % (n + 1);
    auto c = oracle::random_linear_code(q, m, n, k, seed++);
    if (c.k() > 0) t.expect(min_rank_distance(c) <= min_hamming_distance(c), [&] { return fmt("random d_R<=d_H", q, m, n, k); });
  }
}

void cartesian_radius_check(Tally& t, const Ctx&) {
  for (int m : {2, 3}) {
    auto f = Field::make(2, m);
    for (int k = 1; k <= m; ++k) {
      auto g = gabidulin(RankVector(f, poly_basis(2, m)), k);
      for (int l = 1; l <= 2; ++l)
        t.expect(covering_radius(cartesian_power(g, l)) == m - k, [&] { return fmt("rho(G^l)", m, k, l); });
    }
  }
  auto f = Field::make(2, 4);
  for (int n = 1; n <= 2; ++n)
    for (int k = 1; k <= n; ++k) {
      auto g = gabidulin(RankVector(f, poly_basis(2, n)), k);
      for (int l = 1; l <= 2; ++l)
        t.expect(covering_radius(cartesian_power(g, l)) >= n - k, [&] { return fmt("rho(G^l) >=", n, k, l); });
    }
}

void subspaces(const FieldPtr& f, int n, int k, const std::function<void(const LinearCode&)>& fn) {
  std::vector<int> piv(k);
  std::function<void(int, int)> pick = [&](int i, int from) {
    if (i == k) {
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r)
        for (int c = piv[r] + 1; c < n; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.push_back({r, c});
      std::vector<std::uint32_t> val(free.size(), 0);
      for (;;) {
        std::vector<Row> g(k, Row(n, 0));
        for (int r = 0; r < k; ++r) g[r][piv[r]] = 1;
        for (std::size_t s = 0; s < free.size(); ++s) g[free[s].first][free[s].second] = val[s];
        fn(LinearCode(f, n, g));
        std::size_t s = 0;
        while (s < val.size() && ++val[s] == f->order()) val[s++] = 0;
        if (s == val.size()) break;
      }
      return;
    }
    for (int c = from; c < n; ++c) {
      piv[i] = c;
      pick(i + 1, c + 1);
    }
  };
  pick(0, 0);
}

void minimal_dimension_check(Tally& t, const Ctx&) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
    auto f = Field::make(2, m);
    std::vector<int> best(n + 1, 99);
    for (int k = 0; k <= n; ++k)
      subspaces(f, n, k, [&](const LinearCode& c) { best[k] = std::min(best[k], covering_radius(c)); });
    for (int rho : {0, 1, n - 1, n}) {
      int kmin = 0;
      while (best[kmin] > rho) ++kmin;
      t.expect(kmin == n - rho, [&] { return fmt("k = n - rho", m, n, rho); });
    }
    for (int k = 1; k <= n; ++k) {
      auto e = enumerate_els(2, m, n, k).front();
      std::vector<Row> g;
      for (int r = 0; r < k; ++r) {
        auto row = e.basis().row(r);
        g.emplace_back(row.begin(), row.end());
      }
      t.expect(covering_radius(LinearCode(f, n, g)) == n - k, [&] { return fmt("ELS code", m, n, k); });
      auto gab = gabidulin(RankVector(f, poly_basis(2, n)), k);
      t.expect(covering_radius(gab) == n - k, [&] { return fmt("Gabidulin code", m, n, k); });
    }
  }
}

void maximal_code_check(Tally& t, const Ctx&) {
  for (auto [m, n, d] : std::vector<std::array<int, 3>>{{2, 2, 2}, {3, 2, 2}, {2, 3, 2}, {3, 3, 2}, {3, 3, 3}}) {
    auto f = Field::make(2, m);
    Space sp(f, n);
    std::vector<std::uint64_t> code;
    for (std::uint64_t x = 0; x < sp.size(); ++x) {
      bool ok = true;
      for (auto c : code)
        if (sp.rank(sp.sub(x, c)) < d) {
          ok = false;
          break;
        }
      if (ok) code.push_back(x);
    }
    t.expect(covering_radius(Codebook{f, n, code}) <= d - 1, [&] { return fmt("maximal", m, n, d); });
  }
}

void bridge_check(Tally& t, const Ctx& ctx) {
  std::mt19937_64 rng(ctx.seed + 2);
  for (int trial = 0; trial < 50; ++trial) {
    int m = 1 + trial % 3, n = 1 + (trial / 3) % 3, k = static_cast<int>(rng() % (n + 1));
    auto f = Field::make(2, m);
    auto c = oracle::random_linear_code(2, m, n, k, ctx.seed + 1000 + trial);
    std::vector<std::uint32_t> els;
    for (;;) {
      els.clear();
      for (int i = 0; i < m; ++i) els.push_back(static_cast<std::uint32_t>(rng() % f->order()));
      try {
        Basis probe(f, els);
        break;
      } catch (const InvalidArgument&) {
      }
    }
    Basis E(c.field(), els), P = dual_basis(E);
    t.expect(same_code(array_view(dual(c), E), dual(array_view(c, P))), [&] { return fmt("bridge", m, n, k); });
  }
}

// ---------------------------------------------------------------- bounds

void bound_grid_check(Tally& t, const Ctx& ctx) {
  for (int q : {2, 3}) {
    auto table = covering_table(q, {2, q == 2 ? 7 : 5}, {2, 7}, {1, 6}, ctx.workers);
    for (const auto& r : table) {
      if (r.special) continue;
      auto where = [&] { return fmt("q m n rho", q, r.m, r.n, r.rho); };
      for (auto lo : {r.a, r.b, r.c})
        if (lo)
          for (auto up : {r.A, r.B, r.C, r.D, r.E})
            if (up) t.expect(*lo <= *up, where);
      BigInt bl = *r.a, bu = *r.A;
      for (auto lo : {r.b, r.c})
        if (lo) bl = std::max(bl, *lo);
      for (auto up : {r.B, r.C, r.D, r.E})
        if (up) bu = std::min(bu, *up);
      t.expect(bl == r.best_lower && bu == r.best_upper, where);
      t.expect(r.c.has_value() == (r.epsilon > 0), where);
      if (r.c) t.expect(*r.c >= *r.a, where);
      if (r.b) t.expect(r.rho * (r.m + r.n - 3 * r.rho) >= -counting::tau_q(q) - 1e-12, where);
    }
  }
}

void transpose_check(Tally& t, const Ctx&) {
  for (int q : {2, 3})
    for (int m = 2; m <= 6; ++m)
      for (int n = 1; n < m; ++n)
        for (int rho = 0; rho <= n; ++rho) {
          auto a = covering_bounds(q, m, n, rho), b = covering_bounds(q, n, m, rho);
          t.expect(a.best_lower == b.best_lower && a.best_upper == b.best_upper, [&] { return fmt("transpose", q, m, n, rho); });
        }
}

void supermultiplicative_check(Tally& t, const Ctx&) {
  for (int m = 2; m <= 7; ++m)
    for (int n1 = 1; n1 <= m; ++n1)
      for (int n2 = 1; n1 + n2 <= m; ++n2)
        for (int r1 = 0; r1 <= n1; ++r1)
          for (int r2 = 0; r2 <= n2; ++r2) {
            auto whole = covering_bounds(2, m, n1 + n2, r1 + r2);
            auto p = covering_bounds(2, m, n1, r1), s = covering_bounds(2, m, n2, r2);
            t.expect(whole.best_upper <= p.best_upper * s.best_upper, [&] { return fmt("split", m, n1, r1, n2, r2); });
          }
}

// ---------------------------------------------------------------- wenum

ParametricPoly random_poly(int q, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-4, 4);
  std::vector<std::array<int, 3>> r(d + 1);
  for (auto& x : r) x = {dist(rng), dist(rng), dist(rng)};
  return ParametricPoly(q, d, [q, r](int m) {
    wenum::Coeffs c;
    for (auto& x : r) c.push_back(Rational(x[0]) + x[1] * qpow(q, m) + x[2] * qpow(q, -m));
    return c;
  });
}

bool same_poly(const ParametricPoly& a, const ParametricPoly& b) {
  if (a.degree() != b.degree()) return false;
  for (int m = -3; m <= 6; ++m)
    if (a.at(m) != b.at(m)) return false;
  return true;
}

void leibniz_check(Tally& t, const Ctx& ctx) {
  std::mt19937_64 rng(ctx.seed + 3);
  for (int q : {2, 3})
    for (int trial = 0; trial < 6; ++trial) {
      int r = static_cast<int>(rng() % 5), s = static_cast<int>(rng() % 5);
      auto f = random_poly(q, r, rng), g = random_poly(q, s, rng);
      auto fg = wenum::q_product(f, g);
      for (int nu = 0; nu <= std::min(3, r + s); ++nu) {
        wenum::Coeffs zero(r + s - nu + 1);
        auto sx = ParametricPoly::table(q, zero), sy = ParametricPoly::table(q, zero);
        for (int l = 0; l <= nu; ++l) {
          if (l > r || nu - l > s) continue;
          Rational g1 = Rational(gaussian(nu, l, q));
          sx = sx + wenum::q_product(wenum::q_derivative(f, l), wenum::q_derivative(g, nu - l))
                        .scaled(g1 * qpow(q, static_cast<long>(nu - l) * (r - l)));
          sy = sy + wenum::q_product(wenum::q_inv_derivative(f, l), wenum::q_inv_derivative(g, nu - l).shifted(-l))
                        .scaled(g1 * qpow(q, static_cast<long>(l) * (s - nu + l)));
        }
        t.expect(same_poly(wenum::q_derivative(fg, nu), sx), [&] { return fmt("x rule", q, r, s, nu); });
        t.expect(same_poly(wenum::q_inv_derivative(fg, nu), sy), [&] { return fmt("y rule", q, r, s, nu); });
      }
    }
}

void qproduct_algebra_check(Tally& t, const Ctx& ctx) {
  auto x = ParametricPoly::monomial(3, 1, 0), y = ParametricPoly::monomial(3, 1, 1);
  t.expect(!same_poly(wenum::q_product(x, y), wenum::q_product(y, x)), [] { return std::string("x*y == y*x"); });
  std::mt19937_64 rng(ctx.seed + 4);
  for (int trial = 0; trial < 8; ++trial) {
    auto a = random_poly(3, 2, rng), b = random_poly(3, 2, rng), c = random_poly(3, 3, rng);
    t.expect(same_poly(wenum::q_product(a + b, c), wenum::q_product(a, c) + wenum::q_product(b, c)),
             [] { return std::string("right distributivity"); });
    t.expect(same_poly(wenum::q_product(c, a + b), wenum::q_product(c, a) + wenum::q_product(c, b)),
             [] { return std::string("left distributivity"); });
    auto k = ParametricPoly::constant(3, trial + 2);
    t.expect(same_poly(wenum::q_product(k, a), wenum::q_product(a, k)), [] { return std::string("constants commute"); });
  }
}

void krawtchouk_check(Tally& t, const Ctx&) {
  for (int q : {2, 3})
    for (int n = 0; n <= 5; ++n)
      for (int m = 1; m <= 6; ++m)
        for (int i = 0; i <= n; ++i)
          for (int j = 0; j <= n; ++j)
            t.expect(Rational(wenum::krawtchouk(j, i, m, n, q)) == wenum::krawtchouk_recurrence(j, i, m, n, q),
                     [&] { return fmt("P_j(i;m,n)", q, j, i, m, n); });
}

void summation_check(Tally& t, const Ctx&) {
  for (int q : {2, 3})
    for (int m = 0; m <= 5; ++m)
      for (int nu = 0; nu <= 5; ++nu)
        for (int j = 0; j <= 5; ++j) {
          Rational rhs =
              counting::alpha_r(q, nu, j) * counting::alpha_r(q, m - j, nu - j) * qpow(q, static_cast<long>(j) * (m - j));
          t.expect(wenum::delta_sum(q, m, nu, j) == rhs, [&] { return fmt("delta", q, m, nu, j); });
        }
  for (int q : {2, 3})
    for (int n = 0; n <= 5; ++n)
      for (int nu = 0; nu <= n; ++nu)
        for (int j = 0; j <= n; ++j) {
          Rational rhs = (j % 2 ? -1 : 1) * qpow(q, counting::sigma(j)) * Rational(gaussian(n - j, n - nu, q));
          t.expect(wenum::theta_sum(q, n, nu, j) == rhs, [&] { return fmt("theta", q, n, nu, j); });
        }
}

wenum::RankEnumerator brute(const LinearCode& c, int workers) {
  return {c.q(), c.m(), c.n(), rank_distribution(c, kDefaultGuard, workers)};
}

void macwilliams_check(Tally& t, const Ctx& ctx) {
  std::uint64_t seed = ctx.seed + 5000;
  for (int q : {2, 3})
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n) {
        if (q == 3 && m * n > 12) continue;
        for (int k = 0; k <= n; ++k) {
          auto c = oracle::random_linear_code(q, m, n, k, seed++);
          auto A = brute(c, ctx.workers), B = brute(dual(c), ctx.workers);
          t.expect(wenum::macwilliams(A) == B, [&] { return fmt("krawtchouk path", q, m, n, k); });
          t.expect(wenum::macwilliams_qproduct(A) == B, [&] { return fmt("q-product path", q, m, n, k); });
          t.expect(wenum::macwilliams(B) == A, [&] { return fmt("involution", q, m, n, k); });
          for (int nu = 0; nu <= n; ++nu) {
            auto mo = wenum::moments(A, B, c.k(), nu);
            t.expect(mo.lhs37 == mo.rhs37 && mo.lhs38 == mo.rhs38, [&] { return fmt("moments", q, m, n, k, nu); });
            if (mo.corollary37) t.expect(*mo.corollary37 == mo.rhs37, [&] { return fmt("corollary37", q, m, n, k, nu); });
            if (mo.corollary38) t.expect(*mo.corollary38 == mo.rhs38, [&] { return fmt("corollary38", q, m, n, k, nu); });
          }
        }
      }
}

void dual_vector_check(Tally& t, const Ctx& ctx) {
  for (int mn = 1; mn <= 3; ++mn) {
    auto f = Field::make(2, mn);
    Space sp(f, mn);
    std::map<int, wenum::RankEnumerator> seen;
    for (std::uint64_t idx = 1; idx < sp.size(); ++idx) {
      auto v = sp.vector(idx);
      auto d = brute(dual(LinearCode(f, mn, {v.coords()})), ctx.workers);
      auto [it, fresh] = seen.emplace(rank(v), d);
      if (!fresh) t.expect(it->second == d, [&] { return fmt("depends on rank only", mn, idx); });
    }
    for (auto& [r, d] : seen)
      t.expect(wenum::dual_vector_enumerator(r, mn, 2, mn) == d, [&] { return fmt("closed form", mn, r); });
  }
}

// ---------------------------------------------------------------- oracle

void covering_witness_check(Tally& t, const Ctx& ctx) {
  oracle::SearchBudget budget;
  budget.seed = ctx.seed;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {4, 3}})
    for (int rho = 1; rho < std::min(m, n) + 1; ++rho) {
      auto g = oracle::greedy_covering(2, m, n, rho, budget);
      t.expect(oracle::verify_covering(g, rho), [&] { return fmt("greedy", m, n, rho); });
      auto bounds = covering_bounds(2, m, n, rho);
      t.expect(BigInt(g.size()) >= bounds.best_lower, [&] { return fmt("greedy >= lower", m, n, rho); });
    }
  Status prev = oracle::Status::NotFound;
  for (int K = 1; K <= 5; ++K) {
    auto s = oracle::exhaustive_min_covering(2, 2, 2, 1, K, budget, ctx.workers);
    t.expect(s.status != oracle::Status::Inconclusive, [&] { return fmt("settled", K); });
    if (s.witness) t.expect(oracle::verify_covering(*s.witness, 1), [&] { return fmt("witness", K); });
    if (prev == oracle::Status::Found) t.expect(s.status == oracle::Status::Found, [&] { return fmt("monotone in K", K); });
    prev = s.status;
  }
}

void max_code_check(Tally& t, const Ctx&) {
  std::uint64_t prev = ~0ull;
  for (int d = 1; d <= 3; ++d) {
    auto v = oracle::max_code_search(2, 2, 2, d);
    t.expect(BigInt(v) == singleton_max_cardinality(2, 2, 2, d), [&] { return fmt("singleton", d, v); });
    t.expect(v <= prev, [&] { return fmt("antitone", d); });
    prev = v;
  }
}

const std::vector<std::pair<std::string, std::vector<Check>>>& registry() {
  static const std::vector<std::pair<std::string, std::vector<Check>>> r = {
      {"ffield", {{"frobenius", frobenius_check}, {"trace", trace_check}, {"expansion", expansion_check}}},
      {"rankgeom",
       {{"rank-invariance", rank_invariance_check},
        {"gaussian-identities", gaussian_check},
        {"beta-identities", beta_check},
        {"ball-volume-bounds", ball_volume_check},
        {"ball-intersections", intersection_check},
        {"els", els_check}}},
      {"codes",
       {{"gabidulin-mrd", gabidulin_check},
        {"cartesian-covering-radius", cartesian_radius_check},
        {"minimal-dimension", minimal_dimension_check},
        {"maximal-code-radius", maximal_code_check},
        {"dual-basis-bridge", bridge_check}}},
      {"bounds",
       {{"grid-consistency", bound_grid_check},
        {"transpose-symmetry", transpose_check},
        {"super-multiplicativity", supermultiplicative_check}}},
      {"wenum",
       {{"leibniz", leibniz_check},
        {"q-product-algebra", qproduct_algebra_check},
        {"krawtchouk-recurrence", krawtchouk_check},
        {"delta-theta-sums", summation_check},
        {"macwilliams-moments", macwilliams_check},
        {"dual-of-vector", dual_vector_check}}},
      {"oracle", {{"covering-witnesses", covering_witness_check}, {"max-code", max_code_check}}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, checks] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed, int workers) {
  bool any = false;
  std::vector<CheckResult> out;
  Ctx ctx{seed, workers};
  for (const auto& [name, checks] : registry()) {
    if (suite != "all" && suite != name) continue;
    any = true;
    for (const auto& c : checks) {
      CheckResult res;
      res.suite = name;
      res.name = c.name;
      Tally t;
      try {
        c.fn(t, ctx);
        res.pass = t.failure().empty() && t.cases() > 0;
        res.detail = t.failure();
      } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
      }
      res.cases = t.cases();
      out.push_back(std::move(res));
    }
  }
  if (!any) throw InvalidArgument("unknown suite '" + suite + "'");
  return out;
}

}  // namespace rmc
