#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Dense linear algebra over a prime field GF(q), q small.

namespace rankmetric::gfq {

int inv_mod(int a, int q);

struct Matrix {
  int q = 2;
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> e;

  Matrix() = default;
  Matrix(int q_, int r, int c) : q(q_), rows(r), cols(c), e(static_cast<size_t>(r) * c, 0) {}

  std::uint8_t& at(int r, int c) { return e[static_cast<size_t>(r) * cols + c]; }
  std::uint8_t at(int r, int c) const { return e[static_cast<size_t>(r) * cols + c]; }

  std::vector<std::uint8_t> row(int r) const;
  void append_row(const std::vector<std::uint8_t>& v);
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const = default;
  bool operator<(const Matrix& o) const;
  std::string to_string() const;  // rows separated by ';'
};

Matrix identity(int q, int n);

// In-place reduced row echelon form; zero rows are dropped. Returns the rank.
int rref(Matrix& m, std::vector<int>* pivots = nullptr);
int rank(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

// Basis (as rows, in RREF) of {x : m x^T = 0}.
Matrix nullspace(const Matrix& m);

// Solve x * m = b for row vector x (m has independent rows). Empty when b is
// outside the row space.
std::optional<std::vector<std::uint8_t>> solve_left(const Matrix& m, const std::vector<std::uint8_t>& b);

}  // namespace rankmetric::gfq
