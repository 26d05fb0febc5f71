#pragma once

// Graph families used throughout: cliques, cycles, products, cycle powers,
// the three-matching cubic graphs, clique chains, random regular graphs.
//
// Edge-id layouts are part of the contract; bounds code recovers matchings
// and layers from id ranges.

#include <cstdint>

#include "graphcode/graph.hpp"

namespace graphcode {

/// K_n, edges (i, j), i < j, in lexicographic order.
Graph complete_graph(int n);
/// C_s, edge i = (i, i+1 mod s). Requires s >= 3.
Graph cycle(int s);

/// Vertex (a, b) is a * n2 + b. Edges: for every vertex a of h1 a copy of
/// h2's edges (in h2 order), then for every vertex b of h2 a copy of h1's
/// edges.
Graph cartesian_product(const Graph& h1, const Graph& h2);

/// Circulant on s vertices with connection set {+-1, ..., +-k}. Edge
/// (j - 1) * s + i joins i and i + j mod s. Requires s > 2k.
Graph cycle_power(int s, int k);

/// H_n: bipartite cubic graph on a_0..a_{n-1} (ids 0..n-1) and b_0..b_{n-1}
/// (ids n..2n-1). Edge j * n + i is a_i b_{i+j}, so matching M_j occupies
/// ids [j n, (j + 1) n). Requires n >= 3.
Graph three_matching_cubic(int n);

/// H(s, k): s cliques of size 2k+1 (clique i on vertices i(2k+1) ..), then
/// s matchings of k edges, M_i joining clique i to clique i+1 mod s and
/// occupying the last s*k edge ids (k per matching, in order). Edge j of
/// M_i joins local vertex k + j of clique i to local vertex j of clique
/// i+1, so local vertices 0..2k-1 have degree 2k+1 and local 2k has 2k.
Graph clique_chain(int s, int k);
/// Edge-id range [first, first + k) of matching M_i in clique_chain(s, k).
int clique_chain_matching_start(int s, int k, int i);

/// Simple d-regular graph on n vertices from the pairing model, pairing
/// points one edge at a time and rejecting only the loop or repeated pair
/// just drawn (Steger-Wormald). Deterministic in `seed`. Throws
/// PreconditionError for infeasible (n, d) and BudgetExhausted after
/// `max_attempts` restarts from a dead end.
Graph random_regular(int n, int d, std::uint64_t seed, int max_attempts = 100000);

}  // namespace graphcode
