#pragma once

// Exact m(H) for tiny hosts.
//
// Any code can be translated by one of its members (XOR with a fixed
// member preserves pairwise differences), so some maximum code contains
// the empty subgraph. Every other member then differs from it by itself and
// must be connected spanning. The search is a maximum clique over the
// connected spanning subsets, adjacent when their symmetric difference is
// connected spanning.

#include <cstddef>
#include <cstdint>

#include "graphcode/codes.hpp"

namespace graphcode {

struct ExactResult {
  int value = 1;
  /// Lexicographically smallest maximum code by ascending member masks;
  /// the first member is always the empty subgraph.
  ConnectivityCode witness;
  std::size_t pool_size = 0;
  std::uint64_t nodes = 0;
};

inline constexpr int kDefaultExactEdgeCap = 16;
inline constexpr std::size_t kDefaultExactPoolCap = std::size_t{1} << 14;

/// Throws CapExceeded when m > edge_cap or the candidate pool exceeds
/// pool_cap.
ExactResult exact_m(const Graph& h, int edge_cap = kDefaultExactEdgeCap,
                    std::size_t pool_cap = kDefaultExactPoolCap);

/// lower <= exact_m(h) <= upper for the default bound_report of h.
bool exact_matches_bounds(const Graph& h, int edge_cap = kDefaultExactEdgeCap);

}  // namespace graphcode
