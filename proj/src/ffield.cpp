#include "rankmetric/ffield.hpp"

#include <sstream>

#include "rankmetric/errors.hpp"
#include "rankmetric/numeric.hpp"

namespace rankmetric {

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo monic-or-not b over GF(q).
Poly poly_mod(Poly a, const Poly& b, int q) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = gfq::inv_mod(b.back(), q);
  while (static_cast<int>(a.size()) - 1 >= db) {
    int shift = static_cast<int>(a.size()) - 1 - db;
    int c = a.back() * lead_inv % q;
    for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % q + q) % q;
    trim(a);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

bool is_irreducible(const Poly& f0, int q) {
  Poly f = f0;
  trim(f);
  const int m = static_cast<int>(f.size()) - 1;
  if (m < 1) return false;
  if (m == 1) return true;
  for (int d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly g(d + 1, 0);
      std::uint64_t x = t;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(x % q);
        x /= q;
      }
      g[d] = 1;
      if (poly_mod(f, g, q).empty()) return false;
    }
  }
  return true;
}

Poly default_modulus(int q, int m) {
  std::uint64_t count = 1;
  for (int i = 0; i < m; ++i) count *= q;
  for (std::uint64_t t = 0; t < count; ++t) {
    Poly f(m + 1, 0);
    std::uint64_t x = t;
    for (int i = 0; i < m; ++i) {
      f[i] = static_cast<int>(x % q);
      x /= q;
    }
    f[m] = 1;
    if (is_irreducible(f, q)) return f;
  }
  throw InvalidArgument("no irreducible polynomial found");
}

FieldPtr Field::make(int q, int m, std::optional<Poly> modulus) {
  if (!is_prime(q)) throw InvalidArgument("q = " + std::to_string(q) + " is not prime");
  if (q != 2 && q != 3 && q != 5) throw InvalidArgument("supported base fields are q in {2, 3, 5}");
  if (m < 1) throw InvalidArgument("extension degree must be >= 1");
  std::uint64_t order = 1;
  for (int i = 0; i < m; ++i) {
    order *= static_cast<std::uint64_t>(q);
    if (order > kMaxOrder) throw InvalidArgument("q^m exceeds 2^20");
  }
  Poly mod;
  if (modulus) {
    mod = *modulus;
    if (static_cast<int>(mod.size()) != m + 1) throw InvalidArgument("modulus degree does not match m");
    for (int c : mod)
      if (c < 0 || c >= q) throw InvalidArgument("modulus coefficient outside GF(q)");
    if (mod[m] != 1) throw InvalidArgument("modulus is not monic");
    if (!is_irreducible(mod, q)) throw InvalidArgument("modulus is reducible");
  } else {
    mod = default_modulus(q, m);
  }
  return FieldPtr(new Field(q, m, std::move(mod)));
}

FieldPtr Field::parse(std::string_view descriptor) {
  std::istringstream is{std::string(descriptor)};
  int q = 0, m = 0;
  if (!(is >> q >> m)) throw InvalidArgument("field descriptor must start with 'q m'");
  Poly mod;
  int c;
  while (is >> c) mod.push_back(c);
  if (mod.empty()) return make(q, m);
  return make(q, m, mod);
}

Field::Field(int q, int m, Poly modulus) : q_(q), m_(m), modulus_(std::move(modulus)) {
  qpow_.resize(m_ + 1);
  qpow_[0] = 1;
  for (int i = 1; i <= m_; ++i) qpow_[i] = qpow_[i - 1] * q_;
  order_ = qpow_[m_];
  if (order_ <= kTableOrder) build_tables();
}

void Field::build_tables() {
  const std::uint64_t n = order_ - 1;
  auto ps = prime_factors(n);
  auto pw = [&](std::uint32_t a, std::uint64_t k) {
    std::uint32_t r = 1;
    while (k) {
      if (k & 1) r = mul_schoolbook(r, a);
      a = mul_schoolbook(a, a);
      k >>= 1;
    }
    return r;
  };
  for (std::uint32_t g = 1; g < order_; ++g) {
    bool ok = true;
    for (auto p : ps)
      if (pw(g, n / p) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen_ = g;
      break;
    }
  }
  exp_.assign(2 * n, 0);
  log_.assign(order_, 0);
  std::uint32_t x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = exp_[i + n] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_schoolbook(x, gen_);
  }
}

std::string Field::descriptor() const {
  std::ostringstream os;
  os << q_ << ' ' << m_;
  for (int c : modulus_) os << ' ' << c;
  return os.str();
}

int Field::digit(std::uint32_t a, int i) const { return static_cast<int>(a / qpow_[i] % q_); }

std::vector<int> Field::digits(std::uint32_t a) const {
  std::vector<int> d(m_);
  for (int i = 0; i < m_; ++i) {
    d[i] = static_cast<int>(a % q_);
    a /= q_;
  }
  return d;
}

std::uint32_t Field::from_digits(std::span<const int> d) const {
  std::uint32_t v = 0;
  for (int i = m_ - 1; i >= 0; --i) v = v * q_ + static_cast<std::uint32_t>(((d[i] % q_) + q_) % q_);
  return v;
}

std::uint32_t Field::from_digits(std::span<const std::uint8_t> d) const {
  std::uint32_t v = 0;
  for (int i = m_ - 1; i >= 0; --i) v = v * q_ + d[i] % q_;
  return v;
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (q_ == 2) return a ^ b;
  std::uint32_t r = 0;
  for (int i = 0; i < m_; ++i) {
    std::uint32_t s = a % q_ + b % q_;
    if (s >= static_cast<std::uint32_t>(q_)) s -= q_;
    r += s * qpow_[i];
    a /= q_;
    b /= q_;
  }
  return r;
}

std::uint32_t Field::neg(std::uint32_t a) const {
  if (q_ == 2) return a;
  std::uint32_t r = 0;
  for (int i = 0; i < m_; ++i) {
    std::uint32_t d = a % q_;
    r += (d ? q_ - d : 0) * qpow_[i];
    a /= q_;
  }
  return r;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::scale(std::uint32_t a, int c) const {
  c %= q_;
  if (c < 0) c += q_;
  if (c == 0) return 0;
  if (c == 1) return a;
  std::uint32_t r = 0;
  for (int i = 0; i < m_; ++i) {
    r += (a % q_ * c % q_) * qpow_[i];
    a /= q_;
  }
  return r;
}

std::uint32_t Field::mul_schoolbook(std::uint32_t a, std::uint32_t b) const {
  if (q_ == 2) {
    std::uint64_t p = 0;
    for (int i = 0; i < m_; ++i)
      if (b >> i & 1) p ^= static_cast<std::uint64_t>(a) << i;
    std::uint64_t mod = 0;
    for (int i = 0; i <= m_; ++i)
      if (modulus_[i]) mod |= 1ull << i;
    for (int d = 2 * m_ - 2; d >= m_; --d)
      if (p >> d & 1) p ^= mod << (d - m_);
    return static_cast<std::uint32_t>(p);
  }
  auto da = digits(a), db = digits(b);
  std::vector<int> p(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    if (!da[i]) continue;
    for (int j = 0; j < m_; ++j) p[i + j] = (p[i + j] + da[i] * db[j]) % q_;
  }
  for (int d = 2 * m_ - 2; d >= m_; --d) {
    int c = p[d];
    if (!c) continue;
    for (int i = 0; i <= m_; ++i) p[d - m_ + i] = ((p[d - m_ + i] - c * modulus_[i]) % q_ + q_) % q_;
  }
  p.resize(m_);
  return from_digits(std::span<const int>(p));
}

std::uint32_t Field::mul_table(std::uint32_t a, std::uint32_t b) const {
  if (log_.empty()) throw InvalidArgument("field has no log tables");
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (!log_.empty()) {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  return mul_schoolbook(a, b);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t r = 1;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw DivisionByZero();
  if (!log_.empty()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
  return pow(a, order_ - 2);
}

std::uint32_t Field::div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

std::uint32_t Field::frobenius(std::uint32_t a, int times) const {
  times %= m_;
  for (int i = 0; i < times; ++i) a = pow(a, static_cast<std::uint64_t>(q_));
  return a;
}

std::uint32_t Field::trace(std::uint32_t a) const {
  std::uint32_t t = 0, x = a;
  for (int i = 0; i < m_; ++i) {
    t = add(t, x);
    x = pow(x, static_cast<std::uint64_t>(q_));
  }
  return t;
}

FieldElement::FieldElement(FieldPtr f, std::uint32_t v) : f_(std::move(f)), v_(v) {
  if (v_ >= f_->order()) throw InvalidArgument("element encoding out of range");
}

const Field& FieldElement::same(const FieldElement& o) const {
  if (f_ != o.f_ && !f_->same_as(*o.f_)) throw FieldMismatch();
  return *f_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return {f_, same(o).add(v_, o.v_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { return {f_, same(o).sub(v_, o.v_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { return {f_, same(o).mul(v_, o.v_)}; }
FieldElement FieldElement::operator/(const FieldElement& o) const { return {f_, same(o).div(v_, o.v_)}; }
FieldElement FieldElement::operator-() const { return {f_, f_->neg(v_)}; }
FieldElement FieldElement::inv() const { return {f_, f_->inv(v_)}; }
FieldElement FieldElement::pow(std::uint64_t k) const { return {f_, f_->pow(v_, k)}; }
FieldElement FieldElement::frobenius(int a) const {
  if (a < 0) throw InvalidArgument("frobenius exponent must be >= 0");
  return {f_, f_->frobenius(v_, a)};
}
FieldElement FieldElement::trace() const { return {f_, f_->trace(v_)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  same(o);
  return v_ == o.v_;
}

Basis::Basis(FieldPtr f, std::vector<std::uint32_t> elems) : f_(std::move(f)), elems_(std::move(elems)) {
  const int m = f_->m();
  if (static_cast<int>(elems_.size()) != m) throw InvalidArgument("basis must have m elements");
  gfq::Matrix b(f_->q(), m, m);
  for (int i = 0; i < m; ++i) {
    if (elems_[i] >= f_->order()) throw InvalidArgument("basis element out of range");
    auto d = f_->digits(elems_[i]);
    for (int j = 0; j < m; ++j) b.at(i, j) = static_cast<std::uint8_t>(d[j]);
  }
  auto inv = gfq::inverse(b);
  if (!inv) throw InvalidArgument("basis elements are linearly dependent");
  to_basis_ = *inv;
}

Basis Basis::polynomial(FieldPtr f) {
  std::vector<std::uint32_t> e(f->m());
  std::uint32_t x = 1;
  for (int i = 0; i < f->m(); ++i, x *= f->q()) e[i] = x;
  return Basis(std::move(f), std::move(e));
}

std::vector<std::uint8_t> Basis::coords(std::uint32_t x) const {
  const int m = f_->m(), q = f_->q();
  auto d = f_->digits(x);
  std::vector<std::uint8_t> c(m, 0);
  for (int k = 0; k < m; ++k) {
    if (!d[k]) continue;
    for (int j = 0; j < m; ++j) c[j] = static_cast<std::uint8_t>((c[j] + d[k] * to_basis_.at(k, j)) % q);
  }
  return c;
}

std::uint32_t Basis::element(std::span<const std::uint8_t> c) const {
  std::uint32_t x = 0;
  for (int i = 0; i < f_->m(); ++i) x = f_->add(x, f_->scale(elems_[i], c[i]));
  return x;
}

Basis dual_basis(const Basis& b) {
  const Field& f = *b.field();
  const int m = f.m(), q = f.q();
  // t(i,k) = Tr(E_i x^k); the dual element P_j = sum_k c(j,k) x^k with c = (t^T)^{-1}.
  gfq::Matrix t(q, m, m);
  std::uint32_t xk = 1;
  for (int k = 0; k < m; ++k, xk *= q)
    for (int i = 0; i < m; ++i) t.at(i, k) = static_cast<std::uint8_t>(f.trace(f.mul(b.elements()[i], xk)));
  auto c = gfq::inverse(t.transpose());
  if (!c) throw InvalidArgument("basis elements are linearly dependent");
  std::vector<std::uint32_t> p(m);
  for (int j = 0; j < m; ++j) {
    auto row = c->row(j);
    p[j] = f.from_digits(std::span<const std::uint8_t>(row));
  }
  return Basis(b.field(), std::move(p));
}

std::vector<FieldElement> dual_basis(const std::vector<FieldElement>& basis) {
  if (basis.empty()) throw InvalidArgument("empty basis");
  const FieldPtr& f = basis.front().field();
  std::vector<std::uint32_t> v;
  for (const auto& e : basis) {
    if (e.field() != f && !e.field()->same_as(*f)) throw FieldMismatch();
    v.push_back(e.value());
  }
  Basis d = dual_basis(Basis(f, v));
  std::vector<FieldElement> out;
  for (auto x : d.elements()) out.emplace_back(f, x);
  return out;
}

gfq::Matrix expand(const Field& f, std::span<const std::uint32_t> coords, const Basis& basis) {
  if (!basis.field()->same_as(f)) throw FieldMismatch();
  const int n = static_cast<int>(coords.size());
  gfq::Matrix mat(f.q(), f.m(), n);
  for (int j = 0; j < n; ++j) {
    auto c = basis.coords(coords[j]);
    for (int i = 0; i < f.m(); ++i) mat.at(i, j) = c[i];
  }
  return mat;
}

std::vector<std::uint32_t> reassemble(const gfq::Matrix& mat, const Basis& basis) {
  const int m = basis.field()->m();
  if (mat.rows != m) throw InvalidArgument("matrix row count must equal m");
  std::vector<std::uint32_t> v(mat.cols);
  std::vector<std::uint8_t> col(m);
  for (int j = 0; j < mat.cols; ++j) {
    for (int i = 0; i < m; ++i) col[i] = mat.at(i, j);
    v[j] = basis.element(col);
  }
  return v;
}

}  // namespace rankmetric
