#include <doctest.h>

#include "dichro/degree_split.hpp"
#include "dichro/generators.hpp"
#include "test_util.hpp"

using namespace dichro;

namespace {

// Independent counter: number of arcs between v and same-block vertices.
// A digon whose ends share a block contributes 2.
int intra_block_degree(const Digraph& d, const Partition& part, int v) {
  int count = 0;
  for (int u : d.out(v)) count += part.assignment[u] == part.assignment[v];
  for (int u : d.in(v)) count += part.assignment[u] == part.assignment[v];
  return count;
}

bool satisfies_split_bound(const Digraph& d, const Partition& part, int k) {
  for (int v = 0; v < d.n(); ++v)
    if (intra_block_degree(d, part, v) > d.degree(v) / k) return false;
  return true;
}

}  // namespace

TEST_CASE("k = 1 keeps everything in one block") {
  const Digraph d = gen_circulant(7, {1, 2});
  const Partition part = degree_split(d, 1);
  CHECK(part.k == 1);
  for (int v = 0; v < 7; ++v) CHECK(part.assignment[v] == 0);
  CHECK(satisfies_split_bound(d, part, 1));
}

TEST_CASE("directed triangle splits into 2 blocks") {
  // Brute force: some 2-partition qualifies, and the search lands on one.
  const Digraph d(3, {{0, 1}, {1, 2}, {2, 0}});
  bool some_qualifies = false;
  for (int mask = 0; mask < 8; ++mask) {
    Partition trial;
    trial.k = 2;
    trial.assignment = {mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
    some_qualifies = some_qualifies || satisfies_split_bound(d, trial, 2);
  }
  CHECK(some_qualifies);
  const Partition part = degree_split(d, 2);
  CHECK(satisfies_split_bound(d, part, 2));
}

TEST_CASE("directed 6-cycle with k = 3 ends with independent blocks") {
  const Digraph d = gen_directed_cycle(6);
  const Partition part = degree_split(d, 3);
  for (int v = 0; v < 6; ++v) CHECK(intra_block_degree(d, part, v) == 0);
}

TEST_CASE("digon endpoints must be separated when k = 2") {
  const Digraph d(2, {{0, 1}, {1, 0}});
  const Partition part = degree_split(d, 2);
  CHECK(part.assignment[0] != part.assignment[1]);
}

TEST_CASE("k = 0 is rejected") {
  try {
    degree_split(Digraph(2, {{0, 1}}), 0);
    FAIL("expected Error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_k);
  }
}

TEST_CASE("split bound and move cap hold over random instances") {
  std::mt19937 rng(31);
  for (int rep = 0; rep < 150; ++rep) {
    const int n = 1 + static_cast<int>(bounded_uniform(rng, 40));
    const double p = 0.05 + 0.4 * unit_real(rng);
    const Digraph d = testing::random_digraph(n, p, rng);
    const int k = 1 + static_cast<int>(bounded_uniform(rng, 6));
    int moves = -1;
    DegreeSplitOptions options;
    options.moves_out = &moves;
    const Partition part = degree_split(d, k, options);
    CHECK(satisfies_split_bound(d, part, k));
    CHECK(moves >= 0);
    CHECK(moves <= d.m());
  }
}

TEST_CASE("deterministic for a fixed input and seed") {
  std::mt19937 rng(32);
  const Digraph d = testing::random_digraph(25, 0.3, rng);
  CHECK(degree_split(d, 3).assignment == degree_split(d, 3).assignment);

  DegreeSplitOptions seeded;
  seeded.random_init_seed = 99;
  const Partition a = degree_split(d, 3, seeded);
  const Partition b = degree_split(d, 3, seeded);
  CHECK(a.assignment == b.assignment);
  CHECK(satisfies_split_bound(d, a, 3));
}

TEST_CASE("blocks() groups vertices by assignment") {
  Partition part;
  part.k = 3;
  part.assignment = {0, 2, 0, 1};
  const auto blocks = part.blocks();
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0] == std::vector<int>{0, 2});
  CHECK(blocks[1] == std::vector<int>{3});
  CHECK(blocks[2] == std::vector<int>{1});
}
