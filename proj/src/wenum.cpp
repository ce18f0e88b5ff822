#include "rankmetric/wenum.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "rankmetric/errors.hpp"
#include "rankmetric/rankgeom.hpp"

namespace rankmetric::wenum {

using counting::alpha_r;
using counting::gaussian;
using counting::sigma;

struct ParametricPoly::Impl {
  Family family;
  std::mutex mu;
  std::map<int, Coeffs> memo;
};

ParametricPoly::ParametricPoly(int q, int degree, Family family)
    : q_(q), degree_(degree), impl_(std::make_shared<Impl>()) {
  if (degree < 0) throw InvalidArgument("negative degree");
  impl_->family = std::move(family);
}

ParametricPoly ParametricPoly::table(int q, Coeffs c) {
  if (c.empty()) throw InvalidArgument("empty coefficient table");
  int d = static_cast<int>(c.size()) - 1;
  return ParametricPoly(q, d, [c = std::move(c)](int) { return c; });
}

ParametricPoly ParametricPoly::constant(int q, Rational c) { return table(q, Coeffs{std::move(c)}); }

ParametricPoly ParametricPoly::monomial(int q, int d, int u, Rational c) {
  if (u < 0 || u > d) throw InvalidArgument("monomial index out of range");
  Coeffs t(d + 1);
  t[u] = std::move(c);
  return table(q, std::move(t));
}

const Coeffs& ParametricPoly::at(int m) const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto it = impl_->memo.find(m);
  if (it != impl_->memo.end()) return it->second;
  Coeffs c = impl_->family(m);
  if (static_cast<int>(c.size()) != degree_ + 1)
    throw InvalidArgument("coefficient family returned wrong length");
  return impl_->memo.emplace(m, std::move(c)).first->second;
}

Rational ParametricPoly::evaluate(int m, const Rational& x, const Rational& y) const {
  const Coeffs& c = at(m);
  Rational s = 0;
  for (int u = 0; u <= degree_; ++u) {
    Rational t = c[u];
    for (int e = 0; e < u; ++e) t *= y;
    for (int e = 0; e < degree_ - u; ++e) t *= x;
    s += t;
  }
  return s;
}

ParametricPoly ParametricPoly::shifted(int s) const {
  ParametricPoly self = *this;
  return ParametricPoly(q_, degree_, [self, s](int m) { return self.at(m + s); });
}

ParametricPoly ParametricPoly::scaled(const Rational& c) const {
  return scaled([c](int) { return c; });
}

ParametricPoly ParametricPoly::scaled(std::function<Rational(int)> g) const {
  ParametricPoly self = *this;
  return ParametricPoly(q_, degree_, [self, g = std::move(g)](int m) {
    Coeffs c = self.at(m);
    Rational f = g(m);
    for (auto& v : c) v *= f;
    return c;
  });
}

ParametricPoly ParametricPoly::operator+(const ParametricPoly& o) const {
  if (q_ != o.q_) throw InvalidArgument("q mismatch");
  if (degree_ != o.degree_) throw InvalidArgument("sum of polynomials of different degree");
  ParametricPoly a = *this, b = o;
  return ParametricPoly(q_, degree_, [a, b](int m) {
    Coeffs c = a.at(m);
    const Coeffs& d = b.at(m);
    for (size_t i = 0; i < c.size(); ++i) c[i] += d[i];
    return c;
  });
}

ParametricPoly ParametricPoly::operator-(const ParametricPoly& o) const { return *this + o.scaled(Rational(-1)); }

ParametricPoly closed_family(int q, Family kind, int l) {
  if (l < 0) throw InvalidArgument("family index must be >= 0");
  switch (kind) {
    case Family::A:
      return ParametricPoly(q, l, [q, l](int m) {
        Coeffs c(l + 1);
        for (int u = 0; u <= l; ++u) c[u] = Rational(gaussian(l, u, q)) * alpha_r(q, m, u);
        return c;
      });
    case Family::B: {
      Coeffs c(l + 1);
      for (int u = 0; u <= l; ++u) {
        c[u] = Rational(gaussian(l, u, q)) * qpow(q, sigma(u));
        if (u % 2) c[u] = -c[u];
      }
      return ParametricPoly::table(q, std::move(c));
    }
    case Family::YPow:
      return ParametricPoly::monomial(q, l, l, qpow(q, sigma(l)));
    case Family::XPow:
      return ParametricPoly::monomial(q, l, 0);
  }
  throw InvalidArgument("unknown family");
}

ParametricPoly q_product(const ParametricPoly& a, const ParametricPoly& b) {
  if (a.q() != b.q()) throw InvalidArgument("q mismatch in q-product");
  int q = a.q(), r = a.degree(), s = b.degree();
  return ParametricPoly(q, r + s, [a, b, q, r, s](int m) {
    Coeffs c(r + s + 1);
    for (int i = 0; i <= r; ++i) {
      const Rational& ai = a.at(m)[i];
      if (ai == 0) continue;
      Rational f = ai * qpow(q, static_cast<long>(i) * s);
      const Coeffs& bs = b.at(m - i);
      for (int j = 0; j <= s; ++j) c[i + j] += f * bs[j];
    }
    return c;
  });
}

ParametricPoly q_power(const ParametricPoly& a, int l) {
  if (l < 0) throw InvalidArgument("q-power exponent must be >= 0");
  ParametricPoly r = ParametricPoly::constant(a.q(), 1);
  for (int i = 0; i < l; ++i) r = q_product(r, a);
  return r;
}

ParametricPoly q_transform(const ParametricPoly& a) {
  int q = a.q(), d = a.degree();
  // y^{[i]} * x^{[d-i]} = q^{sigma_i + i(d-i)} y^i x^{d-i}
  return ParametricPoly(q, d, [a, q, d](int m) {
    Coeffs c = a.at(m);
    for (int i = 0; i <= d; ++i) c[i] *= qpow(q, sigma(i) + static_cast<long>(i) * (d - i));
    return c;
  });
}

ParametricPoly q_derivative(const ParametricPoly& f, int nu) {
  int q = f.q(), r = f.degree();
  if (nu < 0 || nu > r) throw InvalidArgument("derivative order out of range");
  std::vector<Rational> w(r - nu + 1);
  for (int i = 0; i <= r - nu; ++i) w[i] = Rational(counting::beta(q, r - i, nu));
  return ParametricPoly(q, r - nu, [f, w](int m) {
    const Coeffs& c = f.at(m);
    Coeffs d(w.size());
    for (size_t i = 0; i < w.size(); ++i) d[i] = c[i] * w[i];
    return d;
  });
}

ParametricPoly q_inv_derivative(const ParametricPoly& f, int nu) {
  int q = f.q(), r = f.degree();
  if (nu < 0 || nu > r) throw InvalidArgument("derivative order out of range");
  std::vector<Rational> w(r - nu + 1);
  for (int l = nu; l <= r; ++l)
    w[l - nu] = qpow(q, static_cast<long>(nu) * (1 - l) + sigma(nu)) * Rational(counting::beta(q, l, nu));
  return ParametricPoly(q, r - nu, [f, w, nu](int m) {
    const Coeffs& c = f.at(m);
    Coeffs d(w.size());
    for (size_t i = 0; i < w.size(); ++i) d[i] = c[i + nu] * w[i];
    return d;
  });
}

BigInt RankEnumerator::total() const {
  BigInt s = 0;
  for (const auto& a : A) s += a;
  return s;
}

std::optional<int> RankEnumerator::dimension() const {
  BigInt t = total(), qm = ipow(q, static_cast<unsigned>(m)), p = 1;
  for (int k = 0; k <= n; ++k, p *= qm)
    if (p == t) return k;
  return std::nullopt;
}

int RankEnumerator::min_distance() const {
  for (int i = 1; i <= n; ++i)
    if (A[i] != 0) return i;
  return n + 1;
}

BigInt krawtchouk(int j, int i, int m, int n, int q) {
  if (i < 0 || j < 0 || i > n || j > n) throw InvalidArgument("Krawtchouk index out of range");
  Rational s = 0;
  for (int l = 0; l <= std::min(i, j); ++l) {
    Rational t = Rational(gaussian(i, l, q) * gaussian(n - i, j - l, q));
    if (t == 0) continue;
    t *= qpow(q, sigma(l) + static_cast<long>(l) * (n - i)) * alpha_r(q, m - l, j - l);
    s += (l % 2) ? -t : t;
  }
  return to_integer(s);
}

namespace {

struct RecKey {
  int q, j, i, m, n;
  bool operator<(const RecKey& o) const {
    return std::tie(q, j, i, m, n) < std::tie(o.q, o.j, o.i, o.m, o.n);
  }
};

Rational krec(int q, int j, int i, int m, int n, std::map<RecKey, Rational>& memo) {
  if (i < 0 || j < 0 || i > n || j > n) return 0;
  if (j == 0) return 1;
  if (i == 0) return Rational(gaussian(n, j, q)) * alpha_r(q, m, j);
  RecKey key{q, j, i, m, n};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Rational v = qpow(q, j) * krec(q, j, i - 1, m - 1, n - 1, memo) -
               qpow(q, j - 1) * krec(q, j - 1, i - 1, m - 1, n - 1, memo);
  memo.emplace(key, v);
  return v;
}

}  // namespace

Rational krawtchouk_recurrence(int j, int i, int m, int n, int q) {
  if (i < 0 || j < 0 || i > n || j > n) throw InvalidArgument("Krawtchouk index out of range");
  std::map<RecKey, Rational> memo;
  return krec(q, j, i, m, n, memo);
}

std::shared_ptr<const std::vector<std::vector<BigInt>>> krawtchouk_table(int q, int m, int n) {
  using Table = std::vector<std::vector<BigInt>>;
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const Table>> cache;
  auto key = std::make_tuple(q, m, n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto t = std::make_shared<Table>(n + 1, std::vector<BigInt>(n + 1));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) (*t)[j][i] = krawtchouk(j, i, m, n, q);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, t).first->second;
}

namespace {

int checked_dimension(const RankEnumerator& A) {
  if (static_cast<int>(A.A.size()) != A.n + 1) throw InvalidArgument("enumerator length must be n+1");
  auto k = A.dimension();
  if (!k) throw InvalidArgument("distribution total is not a power of q^m");
  return *k;
}

}  // namespace

RankEnumerator macwilliams(const RankEnumerator& A) {
  int k = checked_dimension(A);
  auto P = krawtchouk_table(A.q, A.m, A.n);
  BigInt size = ipow(A.q, static_cast<unsigned>(A.m * k));
  RankEnumerator B{A.q, A.m, A.n, std::vector<BigInt>(A.n + 1)};
  for (int j = 0; j <= A.n; ++j) {
    BigInt s = 0;
    for (int i = 0; i <= A.n; ++i) s += A.A[i] * (*P)[j][i];
    if (s % size != 0) throw NonIntegral("MacWilliams transform is not integral");
    B.A[j] = s / size;
  }
  return B;
}

RankEnumerator macwilliams_qproduct(const RankEnumerator& A) {
  int k = checked_dimension(A);
  int q = A.q, n = A.n;
  Coeffs sum(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (A.A[i] == 0) continue;
    auto term = q_product(closed_family(q, Family::B, i), closed_family(q, Family::A, n - i));
    const Coeffs& c = term.at(A.m);
    for (int u = 0; u <= n; ++u) sum[u] += Rational(A.A[i]) * c[u];
  }
  Rational size = qpow(q, static_cast<long>(A.m) * k);
  RankEnumerator B{q, A.m, n, std::vector<BigInt>(n + 1)};
  for (int u = 0; u <= n; ++u) B.A[u] = to_integer(sum[u] / size);
  return B;
}

namespace {

RankEnumerator integral_enumerator(int q, int m, int n, const Coeffs& c) {
  RankEnumerator E{q, m, n, std::vector<BigInt>(n + 1)};
  for (int u = 0; u <= n; ++u) E.A[u] = to_integer(c[u]);
  return E;
}

}  // namespace

RankEnumerator dual_vector_enumerator(int r, int n, int q, int m) {
  if (r < 0 || r > std::min(m, n)) throw InvalidArgument("need 0 <= r <= min(m,n)");
  auto qm1 = [q](int mm) { return qpow(q, mm) - 1; };
  auto p = closed_family(q, Family::A, n) +
           q_product(closed_family(q, Family::B, r), closed_family(q, Family::A, n - r)).scaled(qm1);
  Coeffs c = p.at(m);
  Rational inv = qpow(q, -m);
  for (auto& v : c) v *= inv;
  return integral_enumerator(q, m, n, c);
}

RankEnumerator trivial_mrd_enumerator(int r, int q, int m) {
  if (r < 1 || r > m) throw InvalidArgument("need 1 <= r <= m");
  auto qm1 = [q](int mm) { return qpow(q, mm) - 1; };
  auto p = closed_family(q, Family::A, r) + closed_family(q, Family::B, r).scaled(qm1);
  Coeffs c = p.at(m);
  Rational inv = qpow(q, -m);
  for (auto& v : c) v *= inv;
  return integral_enumerator(q, m, r, c);
}

RankEnumerator cartesian_extend(const RankEnumerator& W, int s) {
  if (s < 0) throw InvalidArgument("extension length must be >= 0");
  Coeffs w(W.A.begin(), W.A.end());
  auto p = q_product(ParametricPoly::table(W.q, std::move(w)), closed_family(W.q, Family::A, s));
  return integral_enumerator(W.q, W.m, W.n + s, p.at(W.m));
}

Moments moments(const RankEnumerator& A, const RankEnumerator& B, int k, int nu) {
  int q = A.q, m = A.m, n = A.n;
  if (B.q != q || B.m != m || B.n != n) throw InvalidArgument("enumerators disagree on (q,m,n)");
  if (nu < 0 || nu > n) throw InvalidArgument("need 0 <= nu <= n");
  Moments r;
  Rational scale = qpow(q, static_cast<long>(m) * (k - nu));
  for (int i = 0; i <= n - nu; ++i) r.lhs37 += Rational(gaussian(n - i, nu, q) * A.A[i]);
  for (int i = nu; i <= n; ++i)
    r.lhs38 += Rational(gaussian(i, nu, q) * A.A[i]) * qpow(q, static_cast<long>(nu) * (n - i));
  Rational s37 = 0, s38 = 0;
  for (int j = 0; j <= nu; ++j) {
    Rational g = Rational(gaussian(n - j, n - nu, q) * B.A[j]);
    s37 += g;
    Rational t = g * qpow(q, sigma(j) + static_cast<long>(j) * (nu - j)) * alpha_r(q, m - j, nu - j);
    s38 += (j % 2) ? -t : t;
  }
  r.rhs37 = scale * s37;
  r.rhs38 = scale * s38;
  if (nu < B.min_distance()) {
    r.corollary37 = scale * Rational(gaussian(n, nu, q));
    r.corollary38 = scale * Rational(gaussian(n, nu, q)) * alpha_r(q, m, nu);
  }
  return r;
}

Rational delta_sum(int q, int m, int nu, int j) {
  Rational s = 0;
  for (int i = 0; i <= j; ++i) {
    Rational t = Rational(gaussian(j, i, q)) * qpow(q, sigma(i)) * alpha_r(q, m - i, nu);
    s += (i % 2) ? -t : t;
  }
  return s;
}

Rational theta_sum(int q, int n, int nu, int j) {
  Rational s = 0;
  for (int l = 0; l <= j; ++l) {
    Rational t = Rational(gaussian(j, l, q) * gaussian(n - j, nu - l, q));
    if (t == 0) continue;
    t *= qpow(q, static_cast<long>(l) * (n - nu) + sigma(l)) * alpha_r(q, nu - l, j - l);
    s += (l % 2) ? -t : t;
  }
  return s;
}

}  // namespace rankmetric::wenum
