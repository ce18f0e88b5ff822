#include "rankmetric/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "rankmetric/errors.hpp"
#include "rankmetric/parallel.hpp"
#include "rankmetric/rankgeom.hpp"

namespace rankmetric {

using counting::gaussian;

BigInt singleton_max_cardinality(int q, int m, int n, int d) {
  if (d < 1) throw InvalidArgument("minimum distance must be >= 1");
  if (d > std::min(m, n)) return 1;
  return std::min(ipow(q, static_cast<unsigned>(m * (n - d + 1))), ipow(q, static_cast<unsigned>(n * (m - d + 1))));
}

double packing_asymptote(double delta, double b) {
  if (b <= 0 || delta < 0 || delta > std::min(1.0, 1.0 / b)) throw InvalidArgument("delta outside [0, min(1, 1/b)]");
  return std::min(1 - delta, 1 - b * delta);
}

void covering_lower(BoundReport& r) {
  const int q = r.q, m = r.m, n = r.n, rho = r.rho;
  if (rho <= 0 || rho >= n) throw InvalidArgument("lower bounds need 0 < rho < n");
  const BigInt Q = ipow(q, static_cast<unsigned>(m * n));
  const BigInt V = counting::V(q, m, n, rho);

  r.a = Q / V + 1;

  const BigInt overlap = ipow(q, static_cast<unsigned>(rho * rho)) * gaussian(2 * rho, rho, q);
  const BigInt den = V - overlap;
  if (den > 0) {
    BigInt num = Q - singleton_max_cardinality(q, m, n, 2 * rho + 1) * overlap;
    r.b = ceil_div(Rational(num, den));
  } else {
    r.b.reset();
  }

  const BigInt qm = ipow(q, static_cast<unsigned>(m)), qr = ipow(q, static_cast<unsigned>(rho));
  const BigInt X = (qm - qr) * (gaussian(n, 1, q) - gaussian(rho, 1, q));
  const BigInt Y = qr * gaussian(rho + 1, 1, q);
  const BigInt eps = ceil_div(Rational(X, Y)) * Y - X;
  r.epsilon = eps;
  if (eps > 0) {
    const BigInt V1 = counting::V(q, m, n, 1);
    const BigInt delta = V1 - ipow(q, static_cast<unsigned>(rho - 1)) * gaussian(rho, 1, q) - 1 + 2 * eps;
    Rational denom = Rational(V) - Rational(eps, delta) * Rational(counting::N(q, m, n, rho));
    r.c = ceil_div(Rational(Q) / denom);
  } else {
    r.c.reset();
  }
}

namespace {

// Max of sum rho_i (n_i - rho_i) over admissible compositions.
void best_split(int m, int n_left, int rho_left, int acc, std::vector<int>& ns, std::vector<int>& rs, int& best,
                std::vector<int>& bn, std::vector<int>& br) {
  if (n_left == 0) {
    if (rho_left == 0 && acc > best) {
      best = acc;
      bn = ns;
      br = rs;
    }
    return;
  }
  // Non-increasing n_i keeps the enumeration to partitions; rho_i is free.
  int cap = ns.empty() ? n_left : std::min(n_left, ns.back());
  for (int ni = cap; ni >= 1; --ni)
    for (int ri = std::min(ni, rho_left); ri >= 0; --ri) {
      if (ni + ri > m) continue;
      ns.push_back(ni);
      rs.push_back(ri);
      best_split(m, n_left - ni, rho_left - ri, acc + ri * (ni - ri), ns, rs, best, bn, br);
      ns.pop_back();
      rs.pop_back();
    }
}

BigFloat bf_log(const BigInt& x) { return log(BigFloat(x)); }

BigInt bf_floor(const BigFloat& x) { return BigInt(floor(x)); }

}  // namespace

void covering_upper(BoundReport& r) {
  const int q = r.q, m = r.m, n = r.n, rho = r.rho;
  if (rho <= 0 || rho >= n) throw InvalidArgument("upper bounds need 0 < rho < n");
  const BigInt Q = ipow(q, static_cast<unsigned>(m * n));
  const BigInt V = counting::V(q, m, n, rho);

  r.A = ipow(q, static_cast<unsigned>(m * (n - rho)));
  r.B = ipow(q, static_cast<unsigned>(std::max(m - rho, n) * (n - rho)));

  int best = -1;
  std::vector<int> ns, rs;
  r.mixed_n.clear();
  r.mixed_rho.clear();
  best_split(m, n, rho, 0, ns, rs, best, r.mixed_n, r.mixed_rho);
  if (best >= 0)
    r.C = ipow(q, static_cast<unsigned>(m * (n - rho) - best));
  else
    r.C.reset();

  // D = floor(ln Q / ln(Q / (Q - V))) + 1.
  const BigInt rest = Q - V;
  BigFloat x = bf_log(Q) / (bf_log(Q) - bf_log(rest));
  BigInt k0 = BigInt(round(x));
  if (abs(x - BigFloat(k0)) < BigFloat("1e-60") && k0 <= 100000) {
    // Possible exact tie: Q^{k0-1} = rest^{k0} means x is the integer k0.
    BigInt lhs = boost::multiprecision::pow(Q, static_cast<unsigned>(k0 - 1));
    BigInt rhs = boost::multiprecision::pow(rest, static_cast<unsigned>(k0));
    r.D = (lhs == rhs || lhs < rhs) ? k0 + 1 : k0;
  } else {
    r.D = bf_floor(x) + 1;
  }

  BigFloat e = BigFloat(Q) / BigFloat(V) * (1 + bf_log(V));
  r.E = bf_floor(e);
}

namespace {

void select_best(BoundReport& r) {
  r.lower_tag = '-';
  r.upper_tag = '-';
  const std::optional<BigInt>* lows[] = {&r.a, &r.b, &r.c};
  const char lt[] = {'a', 'b', 'c'};
  for (int i = 0; i < 3; ++i)
    if (*lows[i] && (r.lower_tag == '-' || **lows[i] > r.best_lower)) {
      r.best_lower = **lows[i];
      r.lower_tag = lt[i];
    }
  const std::optional<BigInt>* ups[] = {&r.A, &r.B, &r.C, &r.D, &r.E};
  const char ut[] = {'A', 'B', 'C', 'D', 'E'};
  for (int i = 0; i < 5; ++i)
    if (*ups[i] && (r.upper_tag == '-' || **ups[i] < r.best_upper)) {
      r.best_upper = **ups[i];
      r.upper_tag = ut[i];
    }
}

}  // namespace

BoundReport covering_bounds(int q, int m, int n, int rho) {
  BoundReport r;
  r.q = q;
  r.m = m;
  r.n = n;
  r.rho = rho;
  if (q < 2 || m < 1 || n < 1) throw InvalidArgument("invalid parameters");
  if (rho < 0 || rho > std::min(m, n)) throw InvalidArgument("rho out of range");
  // K_R(q^m, n, rho) = K_R(q^n, m, rho).
  if (n > m) {
    BoundReport t = covering_bounds(q, n, m, rho);
    t.m = m;
    t.n = n;
    t.transposed = true;
    return t;
  }
  if (rho == 0 || rho == n) {
    r.special = true;
    r.best_lower = r.best_upper = rho == 0 ? ipow(q, static_cast<unsigned>(m * n)) : BigInt(1);
    return r;
  }
  covering_lower(r);
  covering_upper(r);
  select_best(r);
  return r;
}

Range parse_range(const std::string& s) {
  auto p = s.find("..");
  try {
    if (p == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, p)), std::stoi(s.substr(p + 2))};
  } catch (const std::exception&) {
    throw InvalidArgument("bad range '" + s + "' (expected a or a..b)");
  }
}

std::vector<BoundReport> covering_table(int q, Range mr, Range nr, Range rr, int workers) {
  struct Cell {
    int m, n, rho;
  };
  std::vector<Cell> cells;
  for (int m = mr.lo; m <= mr.hi; ++m)
    for (int n = std::max(nr.lo, 1); n <= std::min(nr.hi, m); ++n)
      for (int rho = std::max(rr.lo, 1); rho <= std::min(rr.hi, n); ++rho) cells.push_back({m, n, rho});
  std::vector<BoundReport> out(cells.size());
  parallel_ranges(cells.size(), workers, [&](std::uint64_t b, std::uint64_t e, int) {
    for (auto i = b; i < e; ++i) out[i] = covering_bounds(q, cells[i].m, cells[i].n, cells[i].rho);
  });
  return out;
}

DimBounds linear_dim_bounds(int q, int m, int n, int rho) {
  if (n > m || rho < 0 || rho > n) throw InvalidArgument("linear_dim_bounds needs n <= m and 0 <= rho <= n");
  const double s = counting::sigma_q(q);
  DimBounds d;
  d.k_upper = n - rho;
  d.k_lower = static_cast<int>(std::floor(n - rho - (rho * (n - rho) + s) / m)) + 1;
  d.exact = rho == 0 || rho == 1 || rho == n - 1 || rho == n || rho * (n - rho) <= m - s;
  if (d.exact) d.k_lower = d.k_upper;
  d.k_lower = std::max(d.k_lower, 0);
  return d;
}

double covering_asymptote_v(double delta, double b) {
  if (b <= 0 || delta < 0 || delta > std::min(1.0, 1.0 / b)) throw InvalidArgument("delta outside [0, min(1, 1/b)]");
  return delta * (1 + b - b * delta);
}

double covering_asymptote_k(double r, double b) {
  if (b <= 0 || r < 0 || r > std::min(1.0, 1.0 / b)) throw InvalidArgument("r outside [0, min(1, 1/b)]");
  return (1 - r) * (1 - b * r);
}

}  // namespace rankmetric
