#include <doctest.h>

#include <random>

#include "graphcode/bounds.hpp"
#include "graphcode/construct.hpp"
#include "graphcode/exact.hpp"
#include "graphcode/generators.hpp"
#include "oracles.hpp"

using namespace graphcode;

TEST_CASE("edge connectivity bound") {
  CHECK(upper_from_edge_connectivity(cartesian_product(cycle(3), cycle(3))) == 4);
  CHECK(upper_from_edge_connectivity(complete_graph(6)) == 5);
  CHECK(upper_from_edge_connectivity(cycle(9)) == 2);
  CHECK(upper_from_edge_connectivity(Graph(4, {{0, 1}, {2, 3}})) == 0);
}

TEST_CASE("disconnecting families") {
  const auto r337 = rung_family(3, 37);
  CHECK(r337.sets.size() == 37);
  for (const auto& s : r337.sets) CHECK(s.count() == 3);
  CHECK(lemma31_upper(r337.host, r337) == 3);

  const auto c5 = rung_family(1, 5);
  CHECK(c5.host == cycle(5));
  CHECK(lemma31_upper(c5.host, c5) == 1);
  const auto c3 = rung_family(1, 3);
  CHECK_FALSE(lemma31_upper(c3.host, c3).has_value());

  const auto r212 = rung_family(2, 12);
  CHECK(lemma31_upper(r212.host, r212) == 2);
  // t = 3 needs more than 9 * 4 = 36 sets.
  for (int s : {7, 12, 25, 36, 37, 40}) {
    const auto f = squared_cycle_family(s);
    CHECK(f.host == cycle_power(s, 2));
    for (const auto& e : f.sets) CHECK(e.count() == 3);
    if (s <= 36)
      CHECK_FALSE(lemma31_upper(f.host, f).has_value());
    else
      CHECK(lemma31_upper(f.host, f) == 3);
  }
  CHECK_THROWS_AS(squared_cycle_family(6), PreconditionError);

  const auto h112 = clique_chain_family(11, 2);
  CHECK(lemma31_upper(h112.host, h112) == 2);
  const auto h102 = clique_chain_family(10, 2);
  CHECK_FALSE(lemma31_upper(h102.host, h102).has_value());
  const auto h51 = clique_chain_family(5, 1);
  CHECK(lemma31_upper(h51.host, h51) == 1);

  // Validity across parameter samples.
  for (int s = 7; s <= 40; s += 3) {
    CHECK_NOTHROW(lemma31_upper(cycle_power(s, 2), squared_cycle_family(s)));
    CHECK_NOTHROW(lemma31_upper(cartesian_product(complete_graph(2), cycle(s)), rung_family(2, s)));
  }
  for (int s = 3; s <= 12; ++s)
    for (int k = 1; k <= 3; ++k) CHECK_NOTHROW(lemma31_upper(clique_chain(s, k), clique_chain_family(s, k)));
}

TEST_CASE("invalid families are rejected with the offending pair") {
  auto fam = rung_family(1, 6);
  // Sets 0 and 4 now both hold edge 0, whose removal leaves C_6 connected.
  fam.sets[4] = fam.sets[0];
  try {
    lemma31_upper(fam.host, fam);
    CHECK(false);
  } catch (const InvalidFamily& e) {
    REQUIRE(e.pair.has_value());
    CHECK(*e.pair == std::pair<std::size_t, std::size_t>{0, 4});
  }
  auto big = rung_family(1, 6);
  big.sets[2].set(3);
  CHECK_THROWS_AS(lemma31_upper(big.host, big), InvalidFamily);
  CHECK_THROWS_AS(lemma31_upper(cycle(7), rung_family(1, 6)), HostMismatch);
}

TEST_CASE("plotkin bound for cubic graphs") {
  CHECK(plotkin_cubic_upper(8) == 4);
  CHECK(plotkin_cubic_upper(6) == 6);
  CHECK(plotkin_cubic_upper(4) == 8);
  for (int n = 8; n <= 100; n += 2) CHECK(plotkin_cubic_upper(n) == 4);
  CHECK_THROWS_AS(plotkin_cubic_upper(7), PreconditionError);
}

TEST_CASE("tree packing lower bound") {
  CHECK(lower_from_tree_packing(complete_graph(5)).log2_bound == 2);
  CHECK(lower_from_tree_packing(complete_graph(5)).code.size() == 4);
  CHECK(lower_from_tree_packing(cycle(10)).log2_bound == 1);
  CHECK(lower_from_tree_packing(clique_chain(11, 2)).log2_bound == 2);
}

TEST_CASE("spectral expansion condition") {
  const auto torus = cartesian_product(cycle(3), cycle(3));
  const auto t = spectral_expansion_check(torus, 0.5);
  CHECK(t.lambda == doctest::Approx(1.0));
  CHECK(t.threshold == doctest::Approx(2.0));
  CHECK(t.holds);
  CHECK_FALSE(spectral_expansion_lower(cycle(20), 0.5));
  CHECK(spectral_expansion_lower(cycle(20), 0.01));
  CHECK(spectral_expansion_lower(complete_graph(8), 1.0));
  CHECK_THROWS_AS(spectral_expansion_lower(Graph(3, {{0, 1}, {1, 2}}), 1.0), PreconditionError);
}

TEST_CASE("family detection") {
  CHECK(detect_family(cycle(8))->sets.size() == 8);
  CHECK(detect_family(cycle_power(9, 2))->t == 3);
  CHECK(detect_family(cartesian_product(complete_graph(3), cycle(37)))->sets.size() == 37);
  CHECK(detect_family(clique_chain(11, 2))->t == 2);
  CHECK_FALSE(detect_family(complete_graph(6)).has_value());
}

TEST_CASE("bound reports") {
  const auto torus = cartesian_product(cycle(3), cycle(3));
  BoundOptions o;
  o.assignment = repair_construct(torus, 4, {}).assignment;
  const auto rt = bound_report(torus, o);
  CHECK(rt.exact == 16u);
  CHECK(rt.lower_log2 == 4);
  CHECK(rt.upper_log2 == 4);

  const auto rh = bound_report(clique_chain(11, 2));
  CHECK(rh.exact == 4u);

  BoundOptions none;
  none.family_mode = FamilyMode::none;
  const auto c8 = bound_report(cycle(8), none);
  CHECK(c8.lower == 2u);
  CHECK(c8.upper == 4u);
  CHECK(c8.lower_log2 == 1);
  CHECK(c8.upper_log2 == 2);
  CHECK_FALSE(c8.exact.has_value());
  none.run_exact = true;
  CHECK(bound_report(cycle(8), none).exact == 2u);

  const auto cubic = bound_report(three_matching_cubic(5));
  CHECK(cubic.upper == 4u);

  // lower <= exact <= upper on small hosts
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const auto h = oracle::random_connected(n, static_cast<int>(rng() % 5), rng);
    if (h.m() > 10) continue;
    const auto ex = exact_m(h).value;
    const auto r = bound_report(h);
    REQUIRE(r.lower);
    REQUIRE(r.upper);
    CHECK(*r.lower <= static_cast<std::uint64_t>(ex));
    CHECK(static_cast<std::uint64_t>(ex) <= *r.upper);
    CHECK(*r.lower_log2 <= *r.upper_log2);
  }
}
