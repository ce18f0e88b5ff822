#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rankmetric/bounds.hpp"
#include "rankmetric/errors.hpp"
#include "rankmetric/oracle.hpp"

using namespace rankmetric;
using namespace rankmetric::oracle;

TEST_CASE("exhaustive covering search") {
  auto four = exhaustive_min_covering(2, 2, 2, 1, 4);
  REQUIRE(four.status == Status::Found);
  CHECK(four.witness->size() == 4);
  CHECK(verify_covering(*four.witness, 1));
  CHECK(exhaustive_min_covering(2, 2, 2, 1, 2).status == Status::NotFound);
  CHECK(exhaustive_min_covering(2, 2, 2, 1, 1).status == Status::NotFound);
  for (int n = 1; n <= 2; ++n) {
    auto one = exhaustive_min_covering(2, 2, n, n, 1);
    REQUIRE(one.status == Status::Found);
    CHECK(one.witness->words == std::vector<std::uint64_t>{0});
  }
}

TEST_CASE("exhaustive covering is monotone in K") {
  for (auto [m, n, rho] : std::vector<std::array<int, 3>>{{2, 2, 1}, {3, 2, 1}, {2, 3, 1}, {3, 3, 2}}) {
    bool seen = false;
    for (int K = 1; K <= 8; ++K) {
      auto r = exhaustive_min_covering(2, m, n, rho, K);
      REQUIRE(r.status != Status::Inconclusive);
      bool ok = r.status == Status::Found;
      if (seen) CHECK(ok);
      seen = seen || ok;
      if (ok) CHECK(verify_covering(*r.witness, rho));
    }
  }
}

TEST_CASE("budget exhaustion is inconclusive, never a wrong answer") {
  SearchBudget tiny;
  tiny.max_nodes = 1;
  auto r = exhaustive_min_covering(2, 3, 3, 1, 12, tiny);
  CHECK(r.status == Status::Inconclusive);
  CHECK_FALSE(r.witness.has_value());
  SearchBudget small_space;
  small_space.max_space = 16;
  CHECK_THROWS_AS(exhaustive_min_covering(2, 3, 3, 1, 6, small_space), GuardExceeded);
}

TEST_CASE("search result does not depend on worker count") {
  auto a = exhaustive_min_covering(2, 3, 2, 1, 4, {}, 1);
  auto b = exhaustive_min_covering(2, 3, 2, 1, 4, {}, 8);
  CHECK(a.status == b.status);
  if (a.witness && b.witness) CHECK(a.witness->words == b.witness->words);
}

TEST_CASE("greedy covering") {
  auto g = greedy_covering(2, 2, 2, 1);
  CHECK(g.size() <= 4);
  CHECK(verify_covering(g, 1));
  CHECK(greedy_covering(2, 3, 3, 3).size() == 1);
  CHECK(greedy_covering(2, 3, 3, 1).words == greedy_covering(2, 3, 3, 1).words);
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= m; ++n)
      for (int rho = 1; rho < n; ++rho) {
        if (m * n > 12) continue;
        auto c = greedy_covering(2, m, n, rho);
        auto b = covering_bounds(2, m, n, rho);
        CHECK(verify_covering(c, rho));
        CHECK(BigInt(c.size()) >= b.best_lower);
      }
}

TEST_CASE("maximum code search") {
  CHECK(max_code_search(2, 2, 2, 1) == 16);
  CHECK(max_code_search(2, 2, 2, 2) == 4);
  CHECK(max_code_search(2, 2, 2, 3) == 1);
  std::uint64_t prev = ~0ull;
  for (int d = 1; d <= 3; ++d) {
    auto v = max_code_search(2, 2, 3, d);
    CHECK(v <= prev);
    CHECK(BigInt(v) == singleton_max_cardinality(2, 2, 3, d));
    prev = v;
  }
  CHECK_THROWS_AS(max_code_search(2, 3, 3, 2), GuardExceeded);
}

TEST_CASE("random linear codes") {
  auto z = random_linear_code(2, 3, 3, 0, 1);
  CHECK(z.k() == 0);
  auto w = random_linear_code(3, 2, 3, 3, 1);
  CHECK(same_code(w, LinearCode::whole(w.field(), 3)));
  auto a = random_linear_code(2, 4, 3, 2, 42), b = random_linear_code(2, 4, 3, 2, 42);
  CHECK(a.generator() == b.generator());
  CHECK(random_linear_code(2, 4, 3, 2, 43).generator() != a.generator());
  CHECK_THROWS_AS(random_linear_code(2, 2, 2, 3, 0), InvalidArgument);
}
