#include "graphcode/construct.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "graphcode/generators.hpp"
#include "graphcode/matching.hpp"

namespace graphcode {

BitVec random_bitvec(std::size_t dim, std::mt19937_64& rng) {
  BitVec v(dim);
  auto words = v.mutable_words();
  for (auto& w : words) w = rng();
  if (dim % 64 != 0 && !words.empty()) words.back() &= (std::uint64_t{1} << (dim % 64)) - 1;
  return v;
}

EdgeAssignment clique_assignment(int n) {
  if (n < 2) throw PreconditionError("clique_assignment needs n >= 2");
  const auto dim = static_cast<std::size_t>(n - 1);
  const Graph k = complete_graph(n);
  EdgeAssignment a(static_cast<std::size_t>(k.m()), dim);
  for (int e = 0; e < k.m(); ++e) {
    const auto [i, j] = k.edge(e);
    BitVec v(dim);
    v.set(static_cast<std::size_t>(i));
    if (j != n - 1) v.set(static_cast<std::size_t>(j));
    a.set(static_cast<std::size_t>(e), std::move(v));
  }
  return a;
}

EdgeSubset two_factor(const Graph& h) { return two_factor_within(h, h.all_edges()); }

namespace {

void check_degrees(const Graph& h, const EdgeSubset& s, int lo, int hi, const char* what) {
  for (int v = 0; v < h.n(); ++v) {
    int deg = 0;
    for (const auto& inc : h.incident(v))
      if (s.test(static_cast<std::size_t>(inc.edge))) ++deg;
    if (deg < lo || deg > hi)
      throw std::logic_error(std::string(what) + ": vertex " + std::to_string(v) + " has degree " +
                             std::to_string(deg));
  }
}

// Removes (top - k) / 2 successive 2-factors from a top-regular multigraph.
EdgeSubset thin_even(const Graph& g, int top, int k) {
  EdgeSubset current = g.all_edges();
  for (int r = 0; r < (top - k) / 2; ++r) current ^= two_factor_within(g, current);
  return current;
}

}  // namespace

EdgeSubset petersen_spanning_subgraph(const Graph& h, int k) {
  const auto st = graph_stats(h);
  const int d = st.min_degree;
  if (!st.is_regular) throw PreconditionError("petersen_spanning_subgraph needs a regular graph");
  if (k < 2 || k % 2 != 0 || k > d) throw PreconditionError("petersen_spanning_subgraph needs even k with 2 <= k <= d");

  if (d % 2 == 0) {
    auto s = thin_even(h, d, k);
    check_degrees(h, s, k, k, "petersen_spanning_subgraph");
    return s;
  }

  // Odd d: add a perfect pairing of the vertices to reach even degree d+1.
  // Matching edges of h are used where available (as parallel copies);
  // vertices left unmatched are paired with auxiliary edges.
  std::vector<Edge> edges(h.edges().begin(), h.edges().end());
  const auto mate = maximum_matching(h);
  std::vector<int> unmatched;
  for (int v = 0; v < h.n(); ++v) {
    const int u = mate[static_cast<std::size_t>(v)];
    if (u == -1) unmatched.push_back(v);
    else if (v < u) edges.push_back({v, u});
  }
  for (std::size_t i = 0; i + 1 < unmatched.size(); i += 2) edges.push_back({unmatched[i], unmatched[i + 1]});
  const Graph g(h.n(), std::move(edges), true);
  const auto thinned = thin_even(g, d + 1, k);
  EdgeSubset s = h.empty_subset();
  for (int e = 0; e < h.m(); ++e)
    if (thinned.test(static_cast<std::size_t>(e))) s.set(static_cast<std::size_t>(e));
  check_degrees(h, s, k - 1, k, "petersen_spanning_subgraph");
  return s;
}

std::optional<int> choose_k(int d) {
  if (d < 2) throw PreconditionError("choose_k needs d >= 2");
  const double x = d - 3.0 * std::log2(static_cast<double>(d)) - 1.0;
  auto k = static_cast<int>(std::ceil(x));
  if (k % 2 != 0) ++k;
  if (k <= 2 || k > d) return std::nullopt;
  return k;
}

EdgeAssignment random_assignment(const Graph& h, const EdgeSubset& support, std::size_t dim,
                                 std::uint64_t seed) {
  if (support.size() != static_cast<std::size_t>(h.m())) throw HostMismatch("support does not match host");
  std::mt19937_64 rng(seed);
  EdgeAssignment a(static_cast<std::size_t>(h.m()), dim);
  support.for_each_set([&](std::size_t e) { a.set(e, random_bitvec(dim, rng)); });
  return a;
}

DependentStar::DependentStar(int v)
    : PreconditionError("assigned vectors at vertex " + std::to_string(v) + " are dependent"), vertex(v) {}

EdgeAssignment greedy_complete(const Graph& h, EdgeAssignment a) {
  if (a.edge_count() != static_cast<std::size_t>(h.m())) throw HostMismatch("assignment does not match host");
  const auto st = graph_stats(h);
  if (!st.is_regular || static_cast<std::size_t>(st.min_degree) != a.dim())
    throw PreconditionError("greedy_complete needs a regular host whose degree equals the dimension");
  std::vector<Eliminator> star(static_cast<std::size_t>(h.n()), Eliminator(a.dim()));
  for (int v = 0; v < h.n(); ++v)
    for (const auto& inc : h.incident(v))
      if (a.assigned(static_cast<std::size_t>(inc.edge)) &&
          !star[static_cast<std::size_t>(v)].insert(a.at(static_cast<std::size_t>(inc.edge))))
        throw DependentStar(v);
  for (int e = 0; e < h.m(); ++e) {
    if (a.assigned(static_cast<std::size_t>(e))) continue;
    auto& su = star[static_cast<std::size_t>(h.edge(e).u)];
    auto& sv = star[static_cast<std::size_t>(h.edge(e).v)];
    BitVec v = vector_outside_two_spans(su, sv);
    if (!su.insert(v) || !sv.insert(v)) throw std::logic_error("greedy_complete broke an independent star");
    a.set(static_cast<std::size_t>(e), std::move(v));
  }
  return a;
}

std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
  // splitmix64 finalizer over (seed, attempt); attempt 0 keeps the seed.
  if (attempt == 0) return seed;
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

// Edges of the lexicographically first vertex whose support-star is
// dependent, restricted to those in the span of earlier star edges.
std::vector<int> first_dependent_star(const Graph& h, const std::vector<std::vector<int>>& star_edges,
                                      const EdgeAssignment& a) {
  for (int v = 0; v < h.n(); ++v) {
    Eliminator el(a.dim());
    std::vector<int> dependent;
    for (int e : star_edges[static_cast<std::size_t>(v)])
      if (!el.insert(a.at(static_cast<std::size_t>(e)))) dependent.push_back(e);
    if (!dependent.empty()) return dependent;
  }
  return {};
}

}  // namespace

ConstructResult repair_construct(const Graph& h, int d, const ConstructParams& params) {
  const auto st = graph_stats(h);
  if (!st.is_regular || st.min_degree != d) throw PreconditionError("repair_construct needs a d-regular host");
  if (d < 1) throw PreconditionError("repair_construct needs d >= 1");
  if (d > 62) throw CapExceeded("repair_construct supports d <= 62");
  if (!is_connected(h)) throw PreconditionError("repair_construct needs a connected host");
  if (params.max_outer_retries < 1) throw PreconditionError("max_outer_retries must be positive");

  const auto dim = static_cast<std::size_t>(d);
  const long budget = params.max_repair_rounds > 0 ? params.max_repair_rounds : 10L * h.m();
  ConstructResult res;
  auto& trace = res.trace;

  if (params.thinning_override) trace.chosen_k = *params.thinning_override;
  else if (d >= 2) trace.chosen_k = choose_k(d);
  const EdgeSubset support =
      trace.chosen_k ? petersen_spanning_subgraph(h, *trace.chosen_k) : h.all_edges();

  std::vector<std::vector<int>> star_edges(static_cast<std::size_t>(h.n()));
  trace.thinned_min_degree = h.m();
  for (int v = 0; v < h.n(); ++v) {
    for (const auto& inc : h.incident(v))
      if (support.test(static_cast<std::size_t>(inc.edge))) star_edges[static_cast<std::size_t>(v)].push_back(inc.edge);
    const int deg = static_cast<int>(star_edges[static_cast<std::size_t>(v)].size());
    trace.thinned_min_degree = std::min(trace.thinned_min_degree, deg);
    trace.thinned_max_degree = std::max(trace.thinned_max_degree, deg);
  }

  const VerifyOptions vopt{params.threads};
  std::optional<EdgeAssignment> last_total;
  EdgeAssignment partial;

  for (int attempt = 0; attempt < params.max_outer_retries; ++attempt) {
    trace.attempts_used = attempt + 1;
    trace.attempt_seed = attempt_seed(params.seed, attempt);
    std::mt19937_64 rng(trace.attempt_seed);
    partial = EdgeAssignment(static_cast<std::size_t>(h.m()), dim);
    support.for_each_set([&](std::size_t e) { partial.set(e, random_bitvec(dim, rng)); });

    long rounds = 0;
    for (;;) {
      const auto dependent = first_dependent_star(h, star_edges, partial);
      if (!dependent.empty()) {
        if (rounds >= budget) break;
        for (int e : dependent) partial.set(static_cast<std::size_t>(e), random_bitvec(dim, rng));
        ++rounds;
        ++trace.star_resamples;
        trace.resampled_edge_count += static_cast<long>(dependent.size());
        continue;
      }
      EdgeAssignment full = greedy_complete(h, partial);
      auto violation = find_violating_cut(h, full, vopt);
      last_total = std::move(full);
      if (!violation) {
        trace.repair_rounds_used += rounds;
        trace.outcome = "verified";
        res.success = true;
        res.assignment = std::move(*last_total);
        return res;
      }
      if (rounds >= budget) break;
      long resampled = 0;
      violation->cut.crossing.for_each_set([&](std::size_t e) {
        if (!support.test(e)) return;
        partial.set(e, random_bitvec(dim, rng));
        ++resampled;
      });
      ++rounds;
      ++trace.cut_resamples;
      trace.resampled_edge_count += resampled;
    }
    trace.repair_rounds_used += rounds;
  }

  trace.outcome = "budget_exhausted";
  if (last_total) {
    res.assignment = std::move(*last_total);
  } else {
    // Stars never became independent; fill the rest with zero vectors so
    // the certificate below refers to a total assignment.
    for (int e = 0; e < h.m(); ++e)
      if (!partial.assigned(static_cast<std::size_t>(e))) partial.set(static_cast<std::size_t>(e), BitVec(dim));
    res.assignment = std::move(partial);
  }
  res.failure = find_violating_cut(h, res.assignment, vopt);
  return res;
}

std::vector<EdgeSubset> spanning_tree_packing(const Graph& h) {
  const int k = edge_connectivity(h) / 2;
  auto trees = pack_forests(h, k);
  EdgeSubset seen = h.empty_subset();
  for (const auto& t : trees) {
    if (static_cast<int>(t.count()) != h.n() - 1 || !is_connected_spanning(h, t))
      throw std::logic_error("tree packing produced a non-spanning forest");
    if ((seen & t).any()) throw std::logic_error("tree packing produced overlapping trees");
    seen |= t;
  }
  return trees;
}

ConnectivityCode tree_packing_code(const Graph& h) {
  if (!is_connected(h)) throw PreconditionError("tree_packing_code needs a connected host");
  const auto trees = spanning_tree_packing(h);
  const std::size_t k = trees.size();
  EdgeAssignment gen(static_cast<std::size_t>(h.m()), k);
  for (int e = 0; e < h.m(); ++e) {
    BitVec v(k);
    for (std::size_t i = 0; i < k; ++i)
      if (trees[i].test(static_cast<std::size_t>(e))) v.set(i);
    gen.set(static_cast<std::size_t>(e), std::move(v));
  }
  ConnectivityCode c;
  c.n = h.n();
  c.edge_count = static_cast<std::size_t>(h.m());
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << k); ++u) {
    EdgeSubset s = h.empty_subset();
    for (std::size_t i = 0; i < k; ++i)
      if ((u >> i) & 1U) s |= trees[i];
    c.members.push_back(std::move(s));
  }
  c.generator = std::move(gen);
  if (!verify_pairwise(h, c).ok) throw std::logic_error("tree packing code failed verification");
  return c;
}

EdgeAssignment h_n_assignment(int n) {
  if (n < 3 || n % 2 == 0) throw PreconditionError("h_n_code needs odd n >= 3");
  // M0 -> 11, M1 -> 01, M2 -> 10: u=1 gives M0+M1, u=2 gives M0+M2, u=3 gives M1+M2.
  const std::uint64_t labels[3] = {3, 1, 2};
  EdgeAssignment a(static_cast<std::size_t>(3 * n), 2);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < n; ++i) a.set(static_cast<std::size_t>(j * n + i), BitVec::from_word(2, labels[j]));
  return a;
}

ConnectivityCode h_n_code(int n) {
  auto a = h_n_assignment(n);
  const Graph h = three_matching_cubic(n);
  auto c = code_from_assignment(h, a);
  if (!verify_pairwise(h, c).ok) throw std::logic_error("h_n_code failed verification");
  return c;
}

}  // namespace graphcode
