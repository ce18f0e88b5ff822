#include "rankmetric/rankgeom.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>

#include "rankmetric/errors.hpp"
#include "rankmetric/kernels.hpp"
#include "rankmetric/parallel.hpp"

namespace rankmetric {

// ---------------------------------------------------------------- vectors

RankVector::RankVector(FieldPtr f, std::vector<std::uint32_t> coords) : f_(std::move(f)), c_(std::move(coords)) {
  for (auto x : c_)
    if (x >= f_->order()) throw InvalidArgument("coordinate outside the field");
}

RankVector::RankVector(FieldPtr f, const std::vector<FieldElement>& coords) : f_(std::move(f)) {
  for (const auto& e : coords) {
    if (!e.field()->same_as(*f_)) throw FieldMismatch();
    c_.push_back(e.value());
  }
}

RankVector RankVector::zero(FieldPtr f, int n) { return {std::move(f), std::vector<std::uint32_t>(n, 0)}; }

void RankVector::check(const RankVector& o) const {
  if (f_ != o.f_ && !f_->same_as(*o.f_)) throw FieldMismatch();
  if (c_.size() != o.c_.size()) throw InvalidArgument("vector lengths differ");
}

RankVector RankVector::operator+(const RankVector& o) const {
  check(o);
  std::vector<std::uint32_t> r(c_.size());
  for (size_t j = 0; j < c_.size(); ++j) r[j] = f_->add(c_[j], o.c_[j]);
  return {f_, std::move(r)};
}

RankVector RankVector::operator-(const RankVector& o) const {
  check(o);
  std::vector<std::uint32_t> r(c_.size());
  for (size_t j = 0; j < c_.size(); ++j) r[j] = f_->sub(c_[j], o.c_[j]);
  return {f_, std::move(r)};
}

RankVector RankVector::scaled(std::uint32_t c) const {
  std::vector<std::uint32_t> r(c_.size());
  for (size_t j = 0; j < c_.size(); ++j) r[j] = f_->mul(c, c_[j]);
  return {f_, std::move(r)};
}

gfq::Matrix RankVector::expand(const Basis& b) const { return rankmetric::expand(*f_, c_, b); }

gfq::Matrix RankVector::expand() const { return expand(Basis::polynomial(f_)); }

RankVector RankVector::reassemble(FieldPtr f, const gfq::Matrix& mat, const Basis& b) {
  return {std::move(f), rankmetric::reassemble(mat, b)};
}

bool RankVector::operator==(const RankVector& o) const {
  return (f_ == o.f_ || f_->same_as(*o.f_)) && c_ == o.c_;
}

std::string RankVector::to_string() const {
  std::ostringstream os;
  for (size_t j = 0; j < c_.size(); ++j) os << (j ? " " : "") << c_[j];
  return os.str();
}

int rank_of(const Field& f, std::span<const std::uint32_t> coords) {
  const int m = f.m(), q = f.q();
  if (q == 2) {
    std::uint32_t basis[32] = {};
    int r = 0;
    for (std::uint32_t x : coords) {
      for (int b = m - 1; b >= 0 && x; --b) {
        if (!(x >> b & 1)) continue;
        if (!basis[b]) {
          basis[b] = x;
          ++r;
          break;
        }
        x ^= basis[b];
      }
      if (r == m) break;
    }
    return r;
  }
  // Rows indexed by leading digit position; each row normalized to leading 1.
  std::uint8_t basis[32][32];
  bool used[32] = {};
  std::uint8_t row[32];
  int r = 0;
  for (std::uint32_t x : coords) {
    for (int t = 0; t < m; ++t) {
      row[t] = static_cast<std::uint8_t>(x % q);
      x /= q;
    }
    for (int b = m - 1; b >= 0; --b) {
      if (!row[b]) continue;
      if (!used[b]) {
        int iv = gfq::inv_mod(row[b], q);
        for (int t = 0; t <= b; ++t) basis[b][t] = static_cast<std::uint8_t>(row[t] * iv % q);
        used[b] = true;
        ++r;
        break;
      }
      int c = row[b];
      for (int t = 0; t <= b; ++t) row[t] = static_cast<std::uint8_t>((row[t] + (q - c) * basis[b][t]) % q);
    }
    if (r == m) break;
  }
  return r;
}

int rank(const RankVector& v) { return rank_of(*v.field(), v.coords()); }

int rank_distance(const RankVector& a, const RankVector& b) { return rank(a - b); }

// ------------------------------------------------------------------ space

Space::Space(FieldPtr f, int n, std::uint64_t guard) : f_(std::move(f)), n_(n) {
  if (n < 0) throw InvalidArgument("negative length");
  BigInt sz = ipow(f_->order(), static_cast<unsigned>(n));
  if (!fits_u64(sz) || sz > BigInt(guard))
    throw GuardExceeded("space of size " + to_string(sz) + " exceeds the enumeration guard " + std::to_string(guard));
  size_ = static_cast<std::uint64_t>(sz);
  digits_ = f_->m() * n;
}

std::uint64_t Space::index(std::span<const std::uint32_t> coords) const {
  std::uint64_t idx = 0;
  for (int j = n_ - 1; j >= 0; --j) idx = idx * f_->order() + coords[j];
  return idx;
}

std::vector<std::uint32_t> Space::coords(std::uint64_t idx) const {
  std::vector<std::uint32_t> c(n_);
  for (int j = 0; j < n_; ++j) {
    c[j] = static_cast<std::uint32_t>(idx % f_->order());
    idx /= f_->order();
  }
  return c;
}

std::uint64_t Space::add(std::uint64_t a, std::uint64_t b) const {
  const int q = f_->q();
  if (q == 2) return a ^ b;
  std::uint64_t r = 0, p = 1;
  for (int i = 0; i < digits_; ++i) {
    std::uint64_t s = a % q + b % q;
    if (s >= static_cast<std::uint64_t>(q)) s -= q;
    r += s * p;
    p *= q;
    a /= q;
    b /= q;
  }
  return r;
}

std::uint64_t Space::sub(std::uint64_t a, std::uint64_t b) const {
  const int q = f_->q();
  if (q == 2) return a ^ b;
  std::uint64_t r = 0, p = 1;
  for (int i = 0; i < digits_; ++i) {
    std::uint64_t s = a % q + q - b % q;
    if (s >= static_cast<std::uint64_t>(q)) s -= q;
    r += s * p;
    p *= q;
    a /= q;
    b /= q;
  }
  return r;
}

int Space::rank(std::uint64_t idx) const {
  if (f_->q() == 2 && digits_ <= 64) return kernels::rank_gf2(idx, f_->m(), n_);
  auto c = coords(idx);
  return rank_of(*f_, c);
}

void Space::rank_batch(const std::uint64_t* idx, std::size_t count, std::uint64_t center, std::uint8_t* out) const {
  if (f_->q() == 2 && digits_ <= 64) {
    kernels::rank_gf2_batch(idx, count, center, f_->m(), n_, out);
    return;
  }
  for (std::size_t i = 0; i < count; ++i) out[i] = static_cast<std::uint8_t>(rank(sub(idx[i], center)));
}

// --------------------------------------------------------------- counting

namespace counting {

BigInt gaussian(int n, int k, int q) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow(q, static_cast<unsigned>(n - i)) - 1;
    den *= ipow(q, static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

BigInt alpha(int q, int m, int u) {
  if (m < 0) throw InvalidArgument("alpha needs m >= 0; use alpha_r");
  BigInt r = 1, qm = ipow(q, static_cast<unsigned>(m));
  for (int i = 0; i < u; ++i) r *= qm - ipow(q, static_cast<unsigned>(i));
  return r;
}

Rational alpha_r(int q, int m, int u) {
  Rational r = 1, qm = qpow(q, m);
  for (int i = 0; i < u; ++i) r *= qm - qpow(q, i);
  return r;
}

BigInt beta(int q, int m, int u) {
  BigInt r = 1;
  for (int i = 0; i < u; ++i) r *= gaussian(m - i, 1, q);
  return r;
}

long sigma(int i) { return static_cast<long>(i) * (i - 1) / 2; }

double sigma_q(int q) {
  // Terms 1/(k(q^k-1)); after K terms the tail is below 2 q^{-K} / ((K+1)(q-1)).
  long double s = 0, qk = 1;
  for (int k = 1; k < 200; ++k) {
    qk *= q;
    s += 1.0L / (k * (qk - 1));
    long double tail = 2.0L / ((k + 1) * qk * (q - 1));
    if (tail < 1e-16L) break;
  }
  return static_cast<double>(s / std::log(static_cast<long double>(q)));
}

double tau_q(int q) {
  long double q2 = static_cast<long double>(q) * q;
  return static_cast<double>(std::log(q2 / (q2 - 1)) / std::log(static_cast<long double>(q)));
}

BigInt N(int q, int m, int n, int u) { return gaussian(n, u, q) * alpha(q, m, u); }

BigInt V(int q, int m, int n, int r) {
  BigInt v = 0;
  for (int u = 0; u <= r; ++u) v += N(q, m, n, u);
  return v;
}

}  // namespace counting

BallCounts ball_counts(int q, int m, int n, int r) {
  if (r < 0 || r > std::min(m, n)) throw InvalidArgument("radius out of range");
  return {counting::N(q, m, n, r), counting::V(q, m, n, r)};
}

BallVolumeBounds ball_volume_bounds(int q, int m, int n, int r) {
  if (r < 0 || r > std::min(m, n)) throw InvalidArgument("radius out of range");
  BallVolumeBounds b;
  int e = r * (m + n - r);
  b.lower = ipow(q, static_cast<unsigned>(e));
  b.upper_exponent = e + counting::sigma_q(q);
  b.upper = std::pow(static_cast<double>(q), b.upper_exponent);
  BigInt v = counting::V(q, m, n, r);
  BigFloat logv = log(BigFloat(v)) / log(BigFloat(q));
  b.holds = b.lower <= v && logv < BigFloat(b.upper_exponent);
  return b;
}

// -------------------------------------------------------------------- ELS

Els::Els(int q, int m, int n, gfq::Matrix rows) : q_(q), m_(m), n_(n), basis_(std::move(rows)) {
  if (basis_.rows > 0 && basis_.cols != n) throw InvalidArgument("ELS rows must have length n");
  basis_.q = q;
  basis_.cols = n;
  int before = basis_.rows;
  gfq::rref(basis_, &pivots_);
  if (basis_.rows != before) throw InvalidArgument("ELS basis rows are dependent");
}

bool Els::contains_row(const std::vector<std::uint8_t>& row0) const {
  std::vector<std::uint8_t> row = row0;
  for (int i = 0; i < basis_.rows; ++i) {
    int c = row[pivots_[i]];
    if (!c) continue;
    for (int j = 0; j < n_; ++j) row[j] = static_cast<std::uint8_t>((row[j] + (q_ - c) * basis_.at(i, j)) % q_);
  }
  return std::all_of(row.begin(), row.end(), [](std::uint8_t x) { return x == 0; });
}

bool Els::contains(const RankVector& u) const {
  if (u.field()->q() != q_ || u.n() != n_) throw InvalidArgument("vector not in the ELS ambient");
  gfq::Matrix e = u.expand();
  for (int t = 0; t < e.rows; ++t)
    if (!contains_row(e.row(t))) return false;
  return true;
}

bool Els::contains(const Els& sub) const {
  for (int i = 0; i < sub.dim(); ++i)
    if (!contains_row(sub.basis().row(i))) return false;
  return true;
}

std::string Els::to_string() const { return basis_.rows ? basis_.to_string() : "0"; }

namespace {

// Calls f on every RREF v x n matrix over GF(q), pivots in lexicographic order.
template <class F>
void for_each_rref(int q, int n, int v, F&& f) {
  std::vector<int> piv(v);
  for (int i = 0; i < v; ++i) piv[i] = i;
  while (true) {
    // Free positions: (row i, col c) with c > piv[i], c not a pivot.
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < v; ++i)
      for (int c = piv[i] + 1; c < n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(i, c);
    std::vector<int> val(free.size(), 0);
    while (true) {
      gfq::Matrix mat(q, v, n);
      for (int i = 0; i < v; ++i) mat.at(i, piv[i]) = 1;
      for (size_t t = 0; t < free.size(); ++t) mat.at(free[t].first, free[t].second) = static_cast<std::uint8_t>(val[t]);
      f(mat);
      size_t t = 0;
      while (t < val.size() && ++val[t] == q) val[t++] = 0;
      if (t == val.size()) break;
    }
    int i = v - 1;
    while (i >= 0 && piv[i] == n - v + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int k = i + 1; k < v; ++k) piv[k] = piv[k - 1] + 1;
  }
}

}  // namespace

std::vector<Els> enumerate_els(int q, int m, int n, int v) {
  if (v < 0 || v > n) throw InvalidArgument("ELS dimension out of range");
  BigInt count = counting::gaussian(n, v, q);
  if (count > BigInt(kDefaultGuard)) throw GuardExceeded("too many ELS's to enumerate");
  std::vector<Els> out;
  if (v == 0) {
    out.emplace_back(q, m, n, gfq::Matrix(q, 0, n));
    return out;
  }
  for_each_rref(q, n, v, [&](const gfq::Matrix& mat) { out.emplace_back(q, m, n, mat); });
  return out;
}

Els support_els(const RankVector& v) {
  const Field& f = *v.field();
  gfq::Matrix e = v.expand();
  gfq::rref(e);
  Els s(f.q(), f.m(), v.n(), e);
  if (!s.contains(v)) throw Error("support ELS does not contain the vector");
  return s;
}

std::vector<Els> complements(const Els& A, const Els& V) {
  if (!V.contains(A)) throw InvalidArgument("A is not contained in V");
  const int a = A.dim(), v = V.dim(), q = V.q();
  std::vector<Els> out;
  auto consider = [&](const gfq::Matrix& coef) {
    gfq::Matrix rows = coef * V.basis();
    Els B(q, V.m(), V.n(), rows);
    gfq::Matrix both = A.basis();
    for (int i = 0; i < B.dim(); ++i) both.append_row(B.basis().row(i));
    if (gfq::rank(both) == v) out.push_back(B);
  };
  if (v - a == 0) {
    consider(gfq::Matrix(q, 0, v));
  } else {
    for_each_rref(q, v, v - a, consider);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<RankVector, RankVector> project(const RankVector& u, const Els& A, const Els& B) {
  const Field& f = *u.field();
  const int a = A.dim(), b = B.dim(), n = u.n();
  gfq::Matrix M = A.basis();
  if (M.rows == 0) M = gfq::Matrix(f.q(), 0, n);
  for (int i = 0; i < b; ++i) M.append_row(B.basis().row(i));
  if (gfq::rank(M) != a + b) throw InvalidArgument("A and B intersect nontrivially");
  // Expansion row t decomposes over GF(q); coefficient digit t of c_i.
  gfq::Matrix e = u.expand();
  std::vector<std::vector<int>> dig(a + b, std::vector<int>(f.m(), 0));
  for (int t = 0; t < f.m(); ++t) {
    auto x = gfq::solve_left(M, e.row(t));
    if (!x) throw InvalidArgument("vector lies outside A + B");
    for (int i = 0; i < a + b; ++i) dig[i][t] = (*x)[i];
  }
  std::vector<std::uint32_t> ua(n, 0), ub(n, 0);
  for (int i = 0; i < a + b; ++i) {
    std::uint32_t c = f.from_digits(std::span<const int>(dig[i]));
    auto& tgt = i < a ? ua : ub;
    for (int j = 0; j < n; ++j) tgt[j] = f.add(tgt[j], f.scale(c, M.at(i, j)));
  }
  return {RankVector(u.field(), ua), RankVector(u.field(), ub)};
}

BigInt intersection_volume_closed(int q, int m, int n, int r1, int r2, int e) {
  const int mn = std::min(m, n);
  if (r1 < 0 || r2 < 0 || e < 0 || r1 > mn || r2 > mn || e > mn) throw InvalidArgument("radius or distance out of range");
  if (e == r1 + r2) return ipow(q, static_cast<unsigned>(r1 * r2)) * counting::gaussian(e, r1, q);
  int r = -1;
  if (r2 == 1 && e == r1) r = r1;
  if (r1 == 1 && e == r2) r = r2;
  if (r >= 0)
    return 1 + (ipow(q, m) - ipow(q, r)) * counting::gaussian(r, 1, q) + (ipow(q, r) - 1) * counting::gaussian(n, 1, q);
  throw NoClosedForm("no closed form for radii (" + std::to_string(r1) + ", " + std::to_string(r2) + ") at distance " +
                     std::to_string(e));
}

namespace {

template <class F>
void scan_balls(const std::vector<Ball>& balls, std::uint64_t guard, int workers, F&& on_point) {
  if (balls.empty()) throw InvalidArgument("no balls given");
  const FieldPtr& f = balls.front().center.field();
  const int n = balls.front().center.n();
  for (const auto& b : balls) {
    if (!b.center.field()->same_as(*f)) throw FieldMismatch();
    if (b.center.n() != n) throw InvalidArgument("centers have different lengths");
  }
  Space sp(f, n, guard);
  std::vector<std::uint64_t> centers;
  for (const auto& b : balls) centers.push_back(sp.index(b.center));
  parallel_ranges(sp.size(), workers, [&](std::uint64_t begin, std::uint64_t end, int worker) {
    constexpr std::size_t kChunk = 1024;
    std::uint64_t idx[kChunk];
    std::uint8_t rk[kChunk];
    bool alive[kChunk];
    for (std::uint64_t s = begin; s < end; s += kChunk) {
      std::size_t cnt = static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, end - s));
      for (std::size_t i = 0; i < cnt; ++i) {
        idx[i] = s + i;
        alive[i] = true;
      }
      for (size_t b = 0; b < balls.size(); ++b) {
        sp.rank_batch(idx, cnt, centers[b], rk);
        for (std::size_t i = 0; i < cnt; ++i) alive[i] = alive[i] && rk[i] <= balls[b].radius;
      }
      for (std::size_t i = 0; i < cnt; ++i)
        if (alive[i]) on_point(idx[i], worker);
    }
  });
}

}  // namespace

BigInt intersection_volume_brute(const std::vector<Ball>& balls, std::uint64_t guard, int workers) {
  if (workers <= 0) workers = default_workers();
  std::vector<std::uint64_t> counts(static_cast<size_t>(workers), 0);
  scan_balls(balls, guard, workers, [&](std::uint64_t, int w) { ++counts[w]; });
  BigInt total = 0;
  for (auto c : counts) total += c;
  return total;
}

std::vector<RankVector> intersection_points(const std::vector<Ball>& balls, std::uint64_t guard) {
  std::vector<std::uint64_t> pts;
  scan_balls(balls, guard, 1, [&](std::uint64_t idx, int) { pts.push_back(idx); });
  Space sp(balls.front().center.field(), balls.front().center.n(), guard);
  std::vector<RankVector> out;
  for (auto p : pts) out.push_back(sp.vector(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RankVector> large_diameter_set(int q, int m, int n, int r) {
  if (!(3 <= n && n <= m && 2 <= 2 * r && 2 * r < n))
    throw InvalidArgument("large_diameter_set needs 3 <= n <= m and 2 <= 2r < n");
  FieldPtr f = Field::make(q, m);
  Space sp(f, n);
  BigInt size = ipow(q, static_cast<unsigned>(2 * m * r));
  if (size > BigInt(kDefaultGuard)) throw GuardExceeded("diameter set too large");
  std::vector<RankVector> out;
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(size); ++i) out.push_back(sp.vector(i));
  return out;
}

}  // namespace rankmetric
