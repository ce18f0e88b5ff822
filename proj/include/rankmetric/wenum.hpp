#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "rankmetric/numeric.hpp"

namespace rankmetric::wenum {

using Coeffs = std::vector<Rational>;

// Homogeneous polynomial sum_u c_u(m) y^u x^{d-u} whose coefficients are
// functions of an integer parameter m. Families are total on all integers
// (negative m occurs through the parameter shift of the q-product).
// Evaluations are memoized per m; copies share the memo.
class ParametricPoly {
 public:
  using Family = std::function<Coeffs(int m)>;

  ParametricPoly(int q, int degree, Family family);

  // Coefficients that do not depend on m.
  static ParametricPoly table(int q, Coeffs c);
  static ParametricPoly constant(int q, Rational c);
  // c * y^u x^{d-u}
  static ParametricPoly monomial(int q, int d, int u, Rational c = 1);

  int q() const { return q_; }
  int degree() const { return degree_; }

  const Coeffs& at(int m) const;
  Rational evaluate(int m, const Rational& x, const Rational& y) const;

  // m -> f(m + s)
  ParametricPoly shifted(int s) const;
  ParametricPoly scaled(const Rational& c) const;
  // Multiply every coefficient by g(m).
  ParametricPoly scaled(std::function<Rational(int)> g) const;

  // Sum of equal-degree polynomials.
  ParametricPoly operator+(const ParametricPoly& o) const;
  ParametricPoly operator-(const ParametricPoly& o) const;

 private:
  struct Impl;
  int q_;
  int degree_;
  std::shared_ptr<Impl> impl_;
};

enum class Family { A, B, YPow, XPow };

// A: [x + (q^m-1)y]^{[l]}, B: (x-y)^{[l]}, YPow: y^{[l]}, XPow: x^{[l]}.
ParametricPoly closed_family(int q, Family kind, int l);

// c_u(m) = sum_i q^{is} a_i(m) b_{u-i}(m-i), s = deg b.
ParametricPoly q_product(const ParametricPoly& a, const ParametricPoly& b);
// a^{[l]} = a^{[l-1]} * a, a^{[0]} = 1.
ParametricPoly q_power(const ParametricPoly& a, int l);
// y^i x^{r-i} -> y^{[i]} * x^{[r-i]}
ParametricPoly q_transform(const ParametricPoly& a);

// nu-th q-derivative in x; y^i x^{r-i} -> beta(r-i,nu) y^i x^{r-i-nu}.
ParametricPoly q_derivative(const ParametricPoly& f, int nu);
// nu-th q^{-1}-derivative in y; y^l x^{r-l} -> q^{nu(1-l)+sigma_nu} beta(l,nu) y^{l-nu} x^{r-l}.
ParametricPoly q_inv_derivative(const ParametricPoly& f, int nu);

struct RankEnumerator {
  int q = 2, m = 1, n = 0;
  std::vector<BigInt> A;  // A_0..A_n

  BigInt total() const;
  // k with total() = q^{mk}, if any.
  std::optional<int> dimension() const;
  // Smallest i >= 1 with A_i != 0, or n+1.
  int min_distance() const;
  bool operator==(const RankEnumerator& o) const {
    return q == o.q && m == o.m && n == o.n && A == o.A;
  }
};

// Generalized Krawtchouk polynomial P_j(i;m,n) from its closed form.
BigInt krawtchouk(int j, int i, int m, int n, int q);
// Same quantity from the three-term recurrence on (i,m,n) with initial values
// P_j(0;m,n) = [n j] alpha(m,j). Rational because m may go negative.
Rational krawtchouk_recurrence(int j, int i, int m, int n, int q);
// (n+1)x(n+1) table T[j][i] = P_j(i;m,n), cached per (q,m,n).
std::shared_ptr<const std::vector<std::vector<BigInt>>> krawtchouk_table(int q, int m, int n);

// Rank distribution of the dual code. Throws InvalidArgument if the total is
// not a power of q^m, NonIntegral if some B_j is not an integer.
RankEnumerator macwilliams(const RankEnumerator& A);
// Same transform through sum_i A_i (x-y)^{[i]} * [x+(q^m-1)y]^{[n-i]}.
RankEnumerator macwilliams_qproduct(const RankEnumerator& A);

// Rank distribution of span(v)^perp in GF(q^m)^n for rk(v) = r.
RankEnumerator dual_vector_enumerator(int r, int n, int q, int m);
// Rank distribution of the (r, r-1) MRD code dual to one rank-r vector.
RankEnumerator trivial_mrd_enumerator(int r, int q, int m);
// Rank distribution of C x GF(q^m)^s.
RankEnumerator cartesian_extend(const RankEnumerator& W, int s);

struct Moments {
  Rational lhs37, rhs37, lhs38, rhs38;
  // Closed values of the right-hand sides, present when nu < d'_R.
  std::optional<Rational> corollary37, corollary38;
};
// A: distribution of an (n,k) code, B: of its dual.
Moments moments(const RankEnumerator& A, const RankEnumerator& B, int k, int nu);

// sum_i [j i] (-1)^i q^{sigma_i} alpha(m-i, nu)
Rational delta_sum(int q, int m, int nu, int j);
// sum_l [j l] [n-j nu-l] q^{l(n-nu)} (-1)^l q^{sigma_l} alpha(nu-l, j-l)
Rational theta_sum(int q, int n, int nu, int j);

}  // namespace rankmetric::wenum
