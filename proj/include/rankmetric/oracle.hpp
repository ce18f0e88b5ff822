#pragma once

#include <cstdint>
#include <optional>

#include "rankmetric/codes.hpp"

namespace rankmetric::oracle {

struct SearchBudget {
  std::uint64_t max_space = 1ull << 20;  // q^{mn} limit for scans
  std::uint64_t max_nodes = 50'000'000;  // search-tree nodes for subset/clique search
  std::uint64_t seed = 0;
};

enum class Status { Found, NotFound, Inconclusive };
const char* status_name(Status s);

struct CoveringSearch {
  Status status = Status::Inconclusive;
  std::optional<Codebook> witness;
  std::uint64_t nodes = 0;
};

// Does a K-word code of covering radius rho exist in GF(q^m)^n? The zero
// vector is fixed as a codeword (translation invariance). Branches on the
// codewords able to cover the smallest uncovered vector.
CoveringSearch exhaustive_min_covering(int q, int m, int n, int rho, int K, const SearchBudget& budget = {},
                                       int workers = 0);

struct MinimumCovering {
  Status status = Status::Inconclusive;  // Found once settled
  int value = 0;                         // the answer, or the first K left unsettled
  std::optional<Codebook> witness;
};
// Smallest K in [lo, hi] for which a covering exists, scanning upward.
MinimumCovering minimum_covering(int q, int m, int n, int rho, int lo, int hi, const SearchBudget& budget = {},
                                 int workers = 0);

// Greedy set cover; ties broken by smallest vector index. Throws GuardExceeded.
Codebook greedy_covering(int q, int m, int n, int rho, const SearchBudget& budget = {});

// Independent check by breadth-first distance scan from the codewords.
bool verify_covering(const Codebook& c, int rho, std::uint64_t guard = kDefaultGuard);

// Maximum size of a code with minimum rank distance >= d (max clique).
// Needs q^{mn} <= 256; throws GuardExceeded otherwise or on node budget.
std::uint64_t max_code_search(int q, int m, int n, int d, const SearchBudget& budget = {});

// Uniform full-rank k x n generator over GF(q^m), rejection sampled.
LinearCode random_linear_code(int q, int m, int n, int k, std::uint64_t seed);

}  // namespace rankmetric::oracle
