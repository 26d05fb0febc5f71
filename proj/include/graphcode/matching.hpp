#pragma once

// Matching and decomposition routines used by the constructions.

#include <vector>

#include "graphcode/graph.hpp"

namespace graphcode {

/// Maximum matching of a general graph (Edmonds' blossom algorithm).
/// Returns mate[v] or -1. Parallel edges are treated as one.
std::vector<int> maximum_matching(const Graph& h);

/// Orients every edge of `support` so that each vertex has equal in- and
/// out-degree. Requires every vertex to have even degree in `support`.
/// Returns tail[e] (head is the other endpoint); -1 for edges off support.
std::vector<int> balanced_orientation(const Graph& h, const EdgeSubset& support);

/// 2-factor of the subgraph `support`, whose degrees must all be even and
/// >= 2. Obtained from a balanced orientation and a perfect matching
/// between out-copies and in-copies of the vertices.
EdgeSubset two_factor_within(const Graph& h, const EdgeSubset& support);

/// Maximum family of k pairwise edge-disjoint forests (matroid union with
/// shortest augmenting paths). Forest i is returned as an edge subset.
std::vector<EdgeSubset> pack_forests(const Graph& h, int k);

}  // namespace graphcode
