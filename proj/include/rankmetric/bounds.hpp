#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rankmetric/numeric.hpp"

namespace rankmetric {

// A_R(q^m, n, d)
BigInt singleton_max_cardinality(int q, int m, int n, int d);
double packing_asymptote(double delta, double b);

struct BoundReport {
  int q = 2, m = 0, n = 0, rho = 0;
  bool transposed = false;  // evaluated at (n, m) and reported for (m, n)
  bool special = false;     // rho = 0 or rho = n: value known exactly
  // Lower bounds: sphere covering, Cohen-style, excess.
  std::optional<BigInt> a, b, c;
  // Upper bounds: trivial linear, MRD embedding, mixed, probabilistic, JSL.
  std::optional<BigInt> A, B, C, D, E;
  BigInt best_lower;
  BigInt best_upper;
  char lower_tag = '-';
  char upper_tag = '-';
  // Diagnostics.
  BigInt epsilon;
  std::vector<int> mixed_n, mixed_rho;  // an optimal composition for C
};

// Lower bounds a, b, c (requires 0 < rho < n after canonicalization).
void covering_lower(BoundReport& r);
// Upper bounds A..E.
void covering_upper(BoundReport& r);
// All bounds plus best selection; canonicalizes to n <= m.
BoundReport covering_bounds(int q, int m, int n, int rho);

struct Range {
  int lo, hi;
};
Range parse_range(const std::string& s);  // "a..b" or "a"

// Cells with n <= m, 1 <= rho <= min(n, rho_hi) in the given ranges.
std::vector<BoundReport> covering_table(int q, Range m, Range n, Range rho, int workers = 0);

struct DimBounds {
  int k_lower;
  int k_upper;
  bool exact;
};
DimBounds linear_dim_bounds(int q, int m, int n, int rho);

double covering_asymptote_v(double delta, double b);
double covering_asymptote_k(double r, double b);

}  // namespace rankmetric
