#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rankmetric/ffield.hpp"
#include "rankmetric/gfq.hpp"
#include "rankmetric/numeric.hpp"

namespace rankmetric {

inline constexpr std::uint64_t kDefaultGuard = 1ull << 24;

class RankVector {
 public:
  RankVector(FieldPtr f, std::vector<std::uint32_t> coords);
  RankVector(FieldPtr f, const std::vector<FieldElement>& coords);
  static RankVector zero(FieldPtr f, int n);

  const FieldPtr& field() const { return f_; }
  int n() const { return static_cast<int>(c_.size()); }
  const std::vector<std::uint32_t>& coords() const { return c_; }
  FieldElement operator[](int j) const { return {f_, c_[j]}; }

  RankVector operator+(const RankVector& o) const;
  RankVector operator-(const RankVector& o) const;
  RankVector scaled(std::uint32_t c) const;

  gfq::Matrix expand(const Basis& b) const;
  gfq::Matrix expand() const;  // polynomial basis
  static RankVector reassemble(FieldPtr f, const gfq::Matrix& mat, const Basis& b);

  bool operator==(const RankVector& o) const;
  bool operator<(const RankVector& o) const { return c_ < o.c_; }
  std::string to_string() const;

 private:
  void check(const RankVector& o) const;
  FieldPtr f_;
  std::vector<std::uint32_t> c_;
};

// Rank of coordinates given as encoded elements of f.
int rank_of(const Field& f, std::span<const std::uint32_t> coords);
int rank(const RankVector& v);
int rank_distance(const RankVector& a, const RankVector& b);

// GF(q^m)^n with vectors indexed by sum_j coords[j] * (q^m)^j. For q = 2 the
// index is the packed layout used by the GF(2) kernels.
class Space {
 public:
  Space(FieldPtr f, int n, std::uint64_t guard = kDefaultGuard);

  const FieldPtr& field() const { return f_; }
  int n() const { return n_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t index(std::span<const std::uint32_t> coords) const;
  std::uint64_t index(const RankVector& v) const { return index(v.coords()); }
  std::vector<std::uint32_t> coords(std::uint64_t idx) const;
  RankVector vector(std::uint64_t idx) const { return {f_, coords(idx)}; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  int rank(std::uint64_t idx) const;
  // out[i] = rank(idx[i] - center)
  void rank_batch(const std::uint64_t* idx, std::size_t count, std::uint64_t center, std::uint8_t* out) const;

 private:
  FieldPtr f_;
  int n_;
  std::uint64_t size_;
  int digits_;  // m*n base-q digits
};

namespace counting {

BigInt gaussian(int n, int k, int q);
BigInt alpha(int q, int m, int u);       // m >= 0
Rational alpha_r(int q, int m, int u);   // any integer m
BigInt beta(int q, int m, int u);
long sigma(int i);
double sigma_q(int q);
double tau_q(int q);
BigInt N(int q, int m, int n, int u);
BigInt V(int q, int m, int n, int r);

}  // namespace counting

struct BallCounts {
  BigInt N;
  BigInt V;
};
BallCounts ball_counts(int q, int m, int n, int r);

struct BallVolumeBounds {
  BigInt lower;             // q^{r(m+n-r)}
  double upper_exponent;    // r(m+n-r) + sigma(q)
  double upper;             // q^{upper_exponent}
  bool holds;               // lower <= V_r < upper
};
BallVolumeBounds ball_volume_bounds(int q, int m, int n, int r);

// Elementary linear subspace, stored by its RREF basis over GF(q)^n.
class Els {
 public:
  Els(int q, int m, int n, gfq::Matrix rows);

  int q() const { return q_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int dim() const { return basis_.rows; }
  const gfq::Matrix& basis() const { return basis_; }

  bool contains(const RankVector& u) const;
  bool contains(const Els& sub) const;
  bool contains_row(const std::vector<std::uint8_t>& row) const;

  bool operator==(const Els& o) const { return q_ == o.q_ && n_ == o.n_ && basis_ == o.basis_; }
  bool operator<(const Els& o) const { return basis_ < o.basis_; }
  std::string to_string() const;

 private:
  int q_, m_, n_;
  gfq::Matrix basis_;
  std::vector<int> pivots_;
};

std::vector<Els> enumerate_els(int q, int m, int n, int v);
Els support_els(const RankVector& v);
std::vector<Els> complements(const Els& A, const Els& V);
std::pair<RankVector, RankVector> project(const RankVector& u, const Els& A, const Els& B);

// Closed forms: radii (s, r-s) at distance r, and radii (r, 1) or (1, r) at
// distance r. Other combinations throw NoClosedForm.
BigInt intersection_volume_closed(int q, int m, int n, int r1, int r2, int e);

struct Ball {
  RankVector center;
  int radius;
};
BigInt intersection_volume_brute(const std::vector<Ball>& balls, std::uint64_t guard = kDefaultGuard,
                                 int workers = 0);
std::vector<RankVector> intersection_points(const std::vector<Ball>& balls, std::uint64_t guard = kDefaultGuard);

std::vector<RankVector> large_diameter_set(int q, int m, int n, int r);

}  // namespace rankmetric
