#include "rankmetric/gfq.hpp"

#include <sstream>

#include "rankmetric/errors.hpp"

namespace rankmetric::gfq {

int inv_mod(int a, int q) {
  a %= q;
  if (a < 0) a += q;
  if (a == 0) throw DivisionByZero();
  for (int x = 1; x < q; ++x)
    if (a * x % q == 1) return x;
  throw InvalidArgument("modulus is not prime");
}

std::vector<std::uint8_t> Matrix::row(int r) const {
  return {e.begin() + static_cast<long>(r) * cols, e.begin() + static_cast<long>(r + 1) * cols};
}

void Matrix::append_row(const std::vector<std::uint8_t>& v) {
  if (rows == 0 && cols == 0) cols = static_cast<int>(v.size());
  if (static_cast<int>(v.size()) != cols) throw InvalidArgument("row length mismatch");
  e.insert(e.end(), v.begin(), v.end());
  ++rows;
}

Matrix Matrix::transpose() const {
  Matrix t(q, cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols != o.rows) throw InvalidArgument("matrix shape mismatch");
  Matrix p(q, rows, o.cols);
  for (int r = 0; r < rows; ++r)
    for (int k = 0; k < cols; ++k) {
      int a = at(r, k);
      if (!a) continue;
      for (int c = 0; c < o.cols; ++c) p.at(r, c) = static_cast<std::uint8_t>((p.at(r, c) + a * o.at(k, c)) % q);
    }
  return p;
}

bool Matrix::operator<(const Matrix& o) const {
  if (rows != o.rows) return rows < o.rows;
  if (cols != o.cols) return cols < o.cols;
  return e < o.e;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows; ++r) {
    if (r) os << ';';
    for (int c = 0; c < cols; ++c) {
      if (c) os << ' ';
      os << int(at(r, c));
    }
  }
  return os.str();
}

Matrix identity(int q, int n) {
  Matrix m(q, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

int rref(Matrix& m, std::vector<int>* pivots) {
  const int q = m.q;
  int r = 0;
  if (pivots) pivots->clear();
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    int iv = inv_mod(m.at(r, c), q);
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = static_cast<std::uint8_t>(m.at(r, j) * iv % q);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      int f = q - m.at(i, c);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = static_cast<std::uint8_t>((m.at(i, j) + f * m.at(r, j)) % q);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  m.rows = r;
  m.e.resize(static_cast<size_t>(r) * m.cols);
  return r;
}

int rank(Matrix m) { return rref(m); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows != m.cols) throw InvalidArgument("inverse of non-square matrix");
  const int n = m.rows;
  Matrix aug(m.q, n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  std::vector<int> piv;
  rref(aug, &piv);
  if (aug.rows < n || piv.size() < static_cast<size_t>(n) || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.q, n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

Matrix nullspace(const Matrix& m) {
  Matrix a = m;
  std::vector<int> piv;
  rref(a, &piv);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  Matrix ns(m.q, 0, m.cols);
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<std::uint8_t> v(m.cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r)
      v[piv[r]] = static_cast<std::uint8_t>((m.q - a.at(static_cast<int>(r), f)) % m.q);
    ns.append_row(v);
  }
  rref(ns);
  return ns;
}

std::optional<std::vector<std::uint8_t>> solve_left(const Matrix& m, const std::vector<std::uint8_t>& b) {
  // x * m = b  <=>  m^T x^T = b^T; eliminate on [m^T | b^T].
  const int q = m.q;
  Matrix aug(q, m.cols, m.rows + 1);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) aug.at(c, r) = m.at(r, c);
  for (int c = 0; c < m.cols; ++c) aug.at(c, m.rows) = b[c];
  std::vector<int> piv;
  rref(aug, &piv);
  if (!piv.empty() && piv.back() == m.rows) return std::nullopt;
  std::vector<std::uint8_t> x(m.rows, 0);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(static_cast<int>(r), m.rows);
  return x;
}

}  // namespace rankmetric::gfq
