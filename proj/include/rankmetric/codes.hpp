#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "rankmetric/ffield.hpp"
#include "rankmetric/numeric.hpp"
#include "rankmetric/rankgeom.hpp"

namespace rankmetric {

using Row = std::vector<std::uint32_t>;
using RankDistribution = std::vector<BigInt>;  // A_0..A_n

class LinearCode {
 public:
  // Rows must be independent over GF(q^m).
  LinearCode(FieldPtr f, int n, std::vector<Row> generator);
  static LinearCode zero(FieldPtr f, int n) { return {std::move(f), n, {}}; }
  static LinearCode whole(FieldPtr f, int n);

  const FieldPtr& field() const { return f_; }
  int q() const { return f_->q(); }
  int m() const { return f_->m(); }
  int n() const { return n_; }
  int k() const { return static_cast<int>(g_.size()); }
  const std::vector<Row>& generator() const { return g_; }

  RankVector encode(std::span<const std::uint32_t> msg) const;
  // Message t read as a base-q^m odometer, symbol 0 least significant.
  RankVector codeword(std::uint64_t t) const;
  std::uint64_t size(std::uint64_t guard = kDefaultGuard) const;  // q^{mk}
  void for_each_codeword(const std::function<void(const RankVector&)>& fn, std::uint64_t guard = kDefaultGuard) const;

 private:
  FieldPtr f_;
  int n_;
  std::vector<Row> g_;
};

// Explicit (possibly nonlinear) set of vectors, stored as sorted space indices.
struct Codebook {
  FieldPtr field;
  int n = 0;
  std::vector<std::uint64_t> words;

  std::size_t size() const { return words.size(); }
  std::vector<RankVector> vectors() const;
  static Codebook from_vectors(FieldPtr f, int n, const std::vector<RankVector>& vs);
};

// Rank over GF(q^m) of a matrix with entries in f.
int field_rank(const Field& f, std::vector<Row> rows);

LinearCode make_code(FieldPtr f, std::vector<Row> generator);
Codebook codebook(const LinearCode& c, std::uint64_t guard = kDefaultGuard, int workers = 0);
LinearCode dual(const LinearCode& c);
std::vector<Row> parity_check(const LinearCode& c);
bool same_code(const LinearCode& a, const LinearCode& b);

RankDistribution rank_distribution(const LinearCode& c, std::uint64_t guard = kDefaultGuard, int workers = 0);
RankDistribution rank_distribution(const Codebook& c);
// Minimum rank of a nonzero codeword; n+1 for the zero code.
int min_rank_distance(const LinearCode& c, std::uint64_t guard = kDefaultGuard, int workers = 0);
int min_rank_distance(const Codebook& c);
int min_hamming_distance(const LinearCode& c, std::uint64_t guard = kDefaultGuard);

// Distance from every vector of the ambient space to the codebook.
std::vector<std::uint8_t> distance_map(const Codebook& c, std::uint64_t guard = kDefaultGuard);
int covering_radius(const Codebook& c, std::uint64_t guard = kDefaultGuard);
// Linear codes: BFS over syndromes. The guard applies to q^{mn}.
int covering_radius(const LinearCode& c, std::uint64_t guard = kDefaultGuard);

LinearCode gabidulin(const RankVector& g, int k, int a = 1);
LinearCode cartesian_power(const LinearCode& c, int l);
Codebook transpose_code(const Codebook& c, std::uint64_t guard = kDefaultGuard);
Codebook embed_code(const LinearCode& c, int target_m);
bool mrd_els_check(const LinearCode& c);
// GF(q)-linear array code of length m*n: entry (i, j) of the expansion at i*n+j.
LinearCode array_view(const LinearCode& c, const Basis& basis);

// Text format: "q m n k c_0 .. c_m" then k rows of n element integers.
// Codebooks are marked by a leading "# codebook" line and list all words.
LinearCode read_code(std::istream& in);
void write_code(std::ostream& out, const LinearCode& c);
Codebook read_codebook(std::istream& in);
void write_codebook(std::ostream& out, const Codebook& c);

}  // namespace rankmetric
