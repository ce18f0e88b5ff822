#include "rankmetric/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <climits>
#include <random>

#include "rankmetric/errors.hpp"
#include "rankmetric/parallel.hpp"

namespace rankmetric::oracle {

const char* status_name(Status s) {
  switch (s) {
    case Status::Found: return "found";
    case Status::NotFound: return "not-found";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Space plus the list of vectors of rank <= rho (the ball around zero).
struct Geometry {
  Space sp;
  std::vector<std::uint64_t> low;

  Geometry(int q, int m, int n, int rho, std::uint64_t max_space)
      : sp(Field::make(q, m), n, max_space) {
    if (rho < 0) throw InvalidArgument("covering radius must be >= 0");
    for (std::uint64_t v = 0; v < sp.size(); ++v)
      if (sp.rank(v) <= rho) low.push_back(v);
  }
};

class CoverSearch {
 public:
  CoverSearch(const Geometry& g, int K, std::uint64_t limit, int branch, const std::atomic<int>& best)
      : g_(g), K_(K), limit_(limit), branch_(branch), best_(best), count_(g.sp.size(), 0),
        uncovered_(g.sp.size()) {}

  // Outcome for the subtree below the root word 0 and the first word `first`.
  Status run(std::uint64_t first) {
    add(0);
    if (uncovered_ == 0) return finish();
    if (first != 0) add(first);
    return dfs();
  }

  std::vector<std::uint64_t> code;
  std::uint64_t nodes = 0;
  bool cancelled = false;

 private:
  void add(std::uint64_t c) {
    code.push_back(c);
    for (auto w : g_.low)
      if (count_[g_.sp.add(c, w)]++ == 0) --uncovered_;
  }
  void remove() {
    std::uint64_t c = code.back();
    code.pop_back();
    for (auto w : g_.low)
      if (--count_[g_.sp.add(c, w)] == 0) ++uncovered_;
  }
  Status finish() { return Status::Found; }

  Status dfs() {
    if (uncovered_ == 0) return Status::Found;
    if (++nodes > limit_) return Status::Inconclusive;
    if (best_.load(std::memory_order_relaxed) < branch_) {
      cancelled = true;
      return Status::Inconclusive;
    }
    int left = K_ - static_cast<int>(code.size());
    if (left <= 0) return Status::NotFound;
    if (uncovered_ > static_cast<std::uint64_t>(left) * g_.low.size()) return Status::NotFound;
    std::uint64_t u = 0;
    while (count_[u]) ++u;
    bool inconclusive = false;
    for (auto w : g_.low) {
      std::uint64_t v = g_.sp.sub(u, w);
      if (std::find(code.begin(), code.end(), v) != code.end()) continue;
      add(v);
      Status s = dfs();
      if (s == Status::Found) return s;
      remove();
      if (s == Status::Inconclusive) {
        if (cancelled) return s;
        inconclusive = true;
      }
    }
    return inconclusive ? Status::Inconclusive : Status::NotFound;
  }

  const Geometry& g_;
  int K_;
  std::uint64_t limit_;
  int branch_;
  const std::atomic<int>& best_;
  std::vector<std::uint32_t> count_;
  std::uint64_t uncovered_;
};

Codebook pad_to(const Geometry& g, std::vector<std::uint64_t> code, int K) {
  std::sort(code.begin(), code.end());
  for (std::uint64_t v = 0; static_cast<int>(code.size()) < K; ++v)
    if (!std::binary_search(code.begin(), code.end(), v)) {
      code.push_back(v);
      std::sort(code.begin(), code.end());
    }
  return Codebook{g.sp.field(), g.sp.n(), std::move(code)};
}

}  // namespace

CoveringSearch exhaustive_min_covering(int q, int m, int n, int rho, int K, const SearchBudget& budget,
                                       int workers) {
  Geometry g(q, m, n, rho, budget.max_space);
  CoveringSearch out;
  if (K < 1) {
    out.status = Status::NotFound;
    return out;
  }
  if (static_cast<std::uint64_t>(K) > g.sp.size()) K = static_cast<int>(g.sp.size());

  // Branch on the codeword covering the smallest vector left uncovered by 0.
  std::vector<std::uint64_t> firsts;
  {
    std::vector<char> cov(g.sp.size(), 0);
    for (auto w : g.low) cov[w] = 1;
    std::uint64_t u = 0;
    while (u < g.sp.size() && cov[u]) ++u;
    if (u == g.sp.size()) {
      out.status = Status::Found;
      out.witness = pad_to(g, {0}, K);
      return out;
    }
    if (K == 1) {
      out.status = Status::NotFound;
      return out;
    }
    for (auto w : g.low) firsts.push_back(g.sp.sub(u, w));
  }

  const std::size_t B = firsts.size();
  const std::uint64_t per = std::max<std::uint64_t>(1, budget.max_nodes / B);
  std::vector<Status> status(B, Status::NotFound);
  std::vector<std::vector<std::uint64_t>> codes(B);
  std::vector<std::uint64_t> nodes(B, 0);
  std::vector<char> cancelled(B, 0);
  std::atomic<int> best{INT_MAX};
  parallel_tasks(B, workers, [&](std::size_t b) {
    CoverSearch s(g, K, per, static_cast<int>(b), best);
    status[b] = s.run(firsts[b]);
    nodes[b] = s.nodes;
    cancelled[b] = s.cancelled;
    if (status[b] == Status::Found) {
      codes[b] = s.code;
      int cur = best.load();
      while (static_cast<int>(b) < cur && !best.compare_exchange_weak(cur, static_cast<int>(b))) {
      }
    }
  });

  // The lowest branch that found a covering decides, provided every earlier
  // branch was searched to completion.
  out.status = Status::NotFound;
  for (std::size_t b = 0; b < B; ++b) {
    out.nodes += nodes[b];
    if (status[b] == Status::Found) {
      out.status = Status::Found;
      out.witness = pad_to(g, codes[b], K);
      break;
    }
    if (status[b] == Status::Inconclusive && !cancelled[b]) {
      out.status = Status::Inconclusive;
      break;
    }
  }
  if (out.witness && !verify_covering(*out.witness, rho, budget.max_space))
    throw Error("internal: covering witness failed verification");
  return out;
}

MinimumCovering minimum_covering(int q, int m, int n, int rho, int lo, int hi, const SearchBudget& budget,
                                 int workers) {
  MinimumCovering out;
  for (int K = std::max(lo, 1); K <= hi; ++K) {
    auto r = exhaustive_min_covering(q, m, n, rho, K, budget, workers);
    if (r.status == Status::Inconclusive) {
      out.value = K;
      return out;
    }
    if (r.status == Status::Found) {
      out.status = Status::Found;
      out.value = K;
      out.witness = r.witness;
      return out;
    }
  }
  out.status = Status::NotFound;
  return out;
}

Codebook greedy_covering(int q, int m, int n, int rho, const SearchBudget& budget) {
  Geometry g(q, m, n, rho, budget.max_space);
  const std::uint64_t N = g.sp.size(), V = g.low.size();
  if (BigInt(N) * V > BigInt(budget.max_space) * 4096) throw GuardExceeded("greedy covering work exceeds budget");
  std::vector<std::uint64_t> gain(N, V);
  std::vector<char> covered(N, 0);
  std::vector<std::uint64_t> code;
  std::uint64_t left = N;
  while (left) {
    std::uint64_t c = static_cast<std::uint64_t>(std::max_element(gain.begin(), gain.end()) - gain.begin());
    code.push_back(c);
    for (auto w : g.low) {
      std::uint64_t s = g.sp.add(c, w);
      if (covered[s]) continue;
      covered[s] = 1;
      --left;
      for (auto w2 : g.low) --gain[g.sp.sub(s, w2)];
    }
  }
  std::sort(code.begin(), code.end());
  Codebook cb{g.sp.field(), n, std::move(code)};
  if (!verify_covering(cb, rho, budget.max_space)) throw Error("internal: greedy covering failed verification");
  return cb;
}

bool verify_covering(const Codebook& c, int rho, std::uint64_t guard) {
  if (c.words.empty()) return false;
  return covering_radius(c, guard) <= rho;
}

namespace {

using Bits = std::array<std::uint64_t, 4>;

bool test(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }
void set(Bits& b, int i) { b[i >> 6] |= 1ull << (i & 63); }
void clear(Bits& b, int i) { b[i >> 6] &= ~(1ull << (i & 63)); }
bool empty(const Bits& b) { return !(b[0] | b[1] | b[2] | b[3]); }
Bits meet(const Bits& a, const Bits& b) { return {a[0] & b[0], a[1] & b[1], a[2] & b[2], a[3] & b[3]}; }

class Clique {
 public:
  Clique(std::vector<Bits> adj, int n, std::uint64_t limit) : adj_(std::move(adj)), n_(n), limit_(limit) {}

  int solve(Bits start) {
    expand(start, 1);
    return best_;
  }

 private:
  void expand(Bits R, int size) {
    if (++nodes_ > limit_) throw GuardExceeded("max_code_search node budget exceeded");
    // Greedy colouring: vertices listed with nondecreasing colour bound.
    std::vector<int> order, colour;
    Bits U = R;
    int k = 0;
    while (!empty(U)) {
      ++k;
      Bits Q = U;
      while (!empty(Q)) {
        int v = 0;
        while (!test(Q, v)) ++v;
        clear(Q, v);
        clear(U, v);
        for (int w = 0; w < 4; ++w) Q[w] &= ~adj_[v][w];
        order.push_back(v);
        colour.push_back(k);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + colour[i] <= best_) return;
      int v = order[i];
      Bits next = meet(R, adj_[v]);
      if (empty(next)) best_ = std::max(best_, size + 1);
      else expand(next, size + 1);
      clear(R, v);
    }
  }

  std::vector<Bits> adj_;
  int n_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  int best_ = 1;
};

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t lim = ~0ull - (~0ull % bound);
  std::uint64_t x;
  do x = rng();
  while (x >= lim);
  return x % bound;
}

}  // namespace

std::uint64_t max_code_search(int q, int m, int n, int d, const SearchBudget& budget) {
  if (d < 1) throw InvalidArgument("minimum distance must be >= 1");
  Space sp(Field::make(q, m), n, 256);
  const int N = static_cast<int>(sp.size());
  if (d > std::min(m, n)) return 1;
  std::vector<Bits> adj(N, Bits{});
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (a != b && sp.rank(sp.sub(a, b)) >= d) set(adj[a], b);
  // Any code translates to one containing 0.
  Clique c(adj, N, budget.max_nodes);
  if (empty(adj[0])) return 1;
  return static_cast<std::uint64_t>(c.solve(adj[0]));
}

LinearCode random_linear_code(int q, int m, int n, int k, std::uint64_t seed) {
  if (k < 0 || k > n) throw InvalidArgument("need 0 <= k <= n");
  auto f = Field::make(q, m);
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<Row> g(k, Row(n));
    for (auto& row : g)
      for (auto& x : row) x = static_cast<std::uint32_t>(uniform_below(rng, f->order()));
    if (field_rank(*f, g) == k) return LinearCode(f, n, std::move(g));
  }
}

}  // namespace rankmetric::oracle
