#include <doctest.h>

#include <random>

#include "graphcode/codes.hpp"
#include "graphcode/construct.hpp"
#include "graphcode/generators.hpp"
#include "oracles.hpp"

using namespace graphcode;

namespace {

EdgeAssignment random_total(const Graph& h, std::size_t dim, std::mt19937_64& rng, int bias) {
  EdgeAssignment a(static_cast<std::size_t>(h.m()), dim);
  const std::uint64_t mask = (std::uint64_t{1} << dim) - 1;
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    std::uint64_t w = rng() & mask;
    if (bias == 1 && dim > 1) w |= 1;      // avoid zero vectors
    if (bias == 2) w = std::uint64_t{1} << (rng() % dim);
    a.set(e, BitVec::from_word(dim, w));
  }
  return a;
}

ConnectivityCode code_of(const Graph& h, std::vector<std::uint64_t> masks) {
  ConnectivityCode c;
  c.n = h.n();
  c.edge_count = static_cast<std::size_t>(h.m());
  for (auto m : masks) c.members.push_back(EdgeSubset::from_word(c.edge_count, m));
  return c;
}

}  // namespace

TEST_CASE("codewords") {
  const auto k3 = complete_graph(3);
  const auto a = clique_assignment(3);
  CHECK(codeword(a, BitVec(2)).none());
  // u = e_0: the two edges at vertex 0, ids 0 (01) and 1 (02)
  CHECK(codeword(a, BitVec::from_word(2, 1)) == EdgeSubset::from_word(3, 0b011));
  EdgeAssignment partial(3, 2);
  CHECK_THROWS_AS(codeword(partial, BitVec(2)), PreconditionError);
  CHECK_THROWS_AS(codeword(a, BitVec(3)), HostMismatch);
  (void)k3;

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 1 + rng() % 16;
    const auto h = oracle::random_connected(8, 10, rng);
    const auto as = random_total(h, dim, rng, 0);
    const std::uint64_t mask = (std::uint64_t{1} << dim) - 1;
    const auto u = BitVec::from_word(dim, rng() & mask);
    const auto w = BitVec::from_word(dim, rng() & mask);
    CHECK((codeword(as, u) ^ codeword(as, w)) == codeword(as, u ^ w));
  }
  // multi-word dimension path
  const auto big = random_total(cycle(9), 70, rng, 0);
  BitVec u(70), w(70);
  for (std::size_t i = 0; i < 70; ++i) {
    if (rng() & 1) u.set(i);
    if (rng() & 1) w.set(i);
  }
  CHECK((codeword(big, u) ^ codeword(big, w)) == codeword(big, u ^ w));
}

TEST_CASE("code from assignment") {
  const auto c = code_from_assignment(complete_graph(3), clique_assignment(3));
  CHECK(c.size() == 4);
  CHECK(c.members.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) CHECK_FALSE(c.members[i] == c.members[j]);

  EdgeAssignment zero(3, 1);
  for (std::size_t e = 0; e < 3; ++e) zero.set(e, BitVec(1));
  CHECK_THROWS_AS(code_from_assignment(complete_graph(3), zero), CodewordCollision);

  auto big = clique_assignment(22);
  const auto lazy = code_from_assignment(complete_graph(22), big);
  CHECK(lazy.lazy());
  CHECK(lazy.size() == (std::uint64_t{1} << 21));
  CHECK(lazy.member(5) == codeword(big, BitVec::from_word(21, 5)));
}

TEST_CASE("pairwise verification") {
  const auto c5 = cycle(5);
  CHECK(verify_pairwise(c5, code_of(c5, {0, 0x1f})).ok);
  const auto h5 = three_matching_cubic(5);
  CHECK(verify_pairwise(h5, code_of(h5, {0, 0x3ff})).ok);
  const auto k3 = complete_graph(3);
  const auto bad = verify_pairwise(k3, code_of(k3, {0, 1}));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.counterexample);
  CHECK(bad.counterexample->pair == std::pair<std::uint64_t, std::uint64_t>{0, 1});
  CHECK(bad.counterexample->cut.side == std::vector<int>{2});
  // first failing pair in lexicographic order
  const auto c4 = cycle(4);
  const auto r = verify_pairwise(c4, code_of(c4, {0, 0xf, 0x7, 0x3}));
  CHECK_FALSE(r.ok);
  CHECK(r.counterexample->pair == std::pair<std::uint64_t, std::uint64_t>{0, 3});
}

TEST_CASE("translation invariance of validity") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const auto h = oracle::random_connected(5, 4, rng);
    const auto a = random_total(h, 2, rng, 1);
    std::vector<std::uint64_t> masks;
    for (std::uint64_t u = 0; u < 4; ++u) masks.push_back(codeword(a, BitVec::from_word(2, u)).low_word());
    const auto base = code_of(h, masks);
    const auto shift = masks[rng() % 4] ^ (rng() & ((1ULL << h.m()) - 1));
    for (auto& m : masks) m ^= shift;
    CHECK(verify_pairwise(h, base).ok == verify_pairwise(h, code_of(h, masks)).ok);
  }
}

TEST_CASE("linear verification examples") {
  const auto r6 = verify_linear(complete_graph(6), clique_assignment(6));
  CHECK(r6.ok);
  CHECK(r6.checked == 31);
  EdgeAssignment zero(6, 3);
  for (std::size_t e = 0; e < 6; ++e) zero.set(e, BitVec(3));
  const auto rz = verify_linear(complete_graph(4), zero);
  CHECK_FALSE(rz.ok);
  CHECK(rz.counterexample->z == BitVec::from_word(3, 1));
  CHECK(rz.checked == 1);
  const auto tp = tree_packing_code(complete_graph(5));
  REQUIRE(tp.generator);
  const auto rt = verify_linear(complete_graph(5), *tp.generator);
  CHECK(rt.ok);
  CHECK(rt.checked == 3);
}

TEST_CASE("violating cuts") {
  CHECK_FALSE(find_violating_cut(complete_graph(5), clique_assignment(5)));
  const auto k3 = complete_graph(3);
  EdgeAssignment zero(3, 2);
  for (std::size_t e = 0; e < 3; ++e) zero.set(e, BitVec(2));
  const auto v = find_violating_cut(k3, zero);
  REQUIRE(v);
  CHECK(v->z.any());
  CHECK(v->cut.side == std::vector<int>{0});

  // Star of vertex 2 in K_4 confined to the hyperplane x_0 = 0.
  std::mt19937_64 rng(1);
  const auto k4 = complete_graph(4);
  auto a = clique_assignment(4);
  for (int e = 0; e < k4.m(); ++e) {
    const auto& ed = k4.edge(e);
    if (ed.u == 2 || ed.v == 2) {
      auto x = a.at(static_cast<std::size_t>(e));
      x.reset(0);
      a.set(static_cast<std::size_t>(e), x);
    }
  }
  const auto w = find_violating_cut(k4, a);
  REQUIRE(w);
  const auto oracle_r = assignment_cut_condition_oracle(k4, a);
  CHECK_FALSE(oracle_r.ok);
  CHECK(oracle_r.counterexample->cut.side == std::vector<int>{2});
  CHECK(codeword(a, w->z).count() > 0);
  CHECK_FALSE(is_connected_spanning(k4, codeword(a, w->z)));
  CHECK(2 * w->cut.side.size() <= 4);
}

TEST_CASE("verification paths agree on random assignments") {
  std::mt19937_64 rng(2024);
  int accepted = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const auto h = oracle::random_connected(n, static_cast<int>(rng() % 14), rng);
    const std::size_t dim = 1 + rng() % 4;
    const auto a = random_total(h, dim, rng, static_cast<int>(trial % 3));
    const auto lin = verify_linear(h, a);
    const auto cut = assignment_cut_condition_oracle(h, a);
    CHECK(lin.ok == cut.ok);
    // Pairwise check over all 2^dim codewords, collisions included.
    ConnectivityCode all;
    all.n = h.n();
    all.edge_count = static_cast<std::size_t>(h.m());
    for (std::uint64_t u = 0; u < (1ULL << dim); ++u) all.members.push_back(codeword(a, BitVec::from_word(dim, u)));
    CHECK(verify_pairwise(h, all).ok == lin.ok);
    // And the oracle that never calls the library's connectivity test.
    bool brute = true;
    for (std::uint64_t z = 1; z < (1ULL << dim); ++z)
      brute = brute && oracle::connected_mask(h, codeword(a, BitVec::from_word(dim, z)).low_word());
    CHECK(brute == lin.ok);
    accepted += lin.ok;
  }
  CHECK(accepted > 0);
  CHECK(accepted < 100);
}

TEST_CASE("verify_linear is deterministic across thread counts") {
  std::mt19937_64 rng(77);
  const auto h = random_regular(30, 8, 5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_total(h, 14, rng, 0);
    const auto r1 = verify_linear(h, a, {1});
    const auto r4 = verify_linear(h, a, {4});
    CHECK(r1.ok == r4.ok);
    CHECK(r1.checked == r4.checked);
    if (!r1.ok) {
      CHECK(*r1.counterexample->z == *r4.counterexample->z);
      CHECK(r1.counterexample->cut.side == r4.counterexample->cut.side);
    }
  }
  const auto good = clique_assignment(16);
  const auto k16 = complete_graph(16);
  const auto g1 = verify_linear(k16, good, {1});
  const auto g8 = verify_linear(k16, good, {8});
  CHECK(g1.ok);
  CHECK(g8.ok);
  CHECK(g1.checked == g8.checked);
}
