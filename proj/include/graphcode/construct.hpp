#pragma once

// Code constructions: clique codes, Petersen thinning, randomized
// assignment with resampling, greedy completion, tree-packing codes and the
// three-matching code on H_n.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "graphcode/codes.hpp"

namespace graphcode {

/// Assignment on complete_graph(n) of dimension n-1: edge {i, j} maps to
/// e_i + e_j written in the basis b_t = e_t + e_{n-1} of the even-weight
/// subspace of Z_2^n. Codeword u is the complete bipartite cut between
/// supp(u) and its complement.
EdgeAssignment clique_assignment(int n);

/// Spanning 2-regular subgraph. Requires every degree even and >= 2.
EdgeSubset two_factor(const Graph& h);

/// Spanning subgraph of a d-regular graph with all degrees in {k-1, k}
/// (exactly k when d is even). Requires 2 <= k <= d, k even.
EdgeSubset petersen_spanning_subgraph(const Graph& h, int k);

/// Smallest even k >= d - 3 log2 d - 1, or nullopt when that k is <= 2 or
/// exceeds d (no thinning: the full graph is used).
std::optional<int> choose_k(int d);

/// Uniform i.i.d. vectors in Z_2^dim on the support edges, drawn in edge-id
/// order from std::mt19937_64(seed); other edges stay unassigned.
EdgeAssignment random_assignment(const Graph& h, const EdgeSubset& support, std::size_t dim,
                                 std::uint64_t seed);

/// A vertex whose assigned incident vectors are dependent.
struct DependentStar : PreconditionError {
  explicit DependentStar(int v);
  int vertex;
};

/// Fills every unassigned edge, in id order, with a vector outside the
/// current spans at both endpoints, so that every star becomes a basis.
/// Requires h regular of degree a.dim() and independent partial stars.
EdgeAssignment greedy_complete(const Graph& h, EdgeAssignment a);

struct ConstructParams {
  std::uint64_t seed = 0;
  /// Resampling rounds per attempt; 0 means 10 * m.
  long max_repair_rounds = 0;
  int max_outer_retries = 64;
  std::optional<int> thinning_override;
  unsigned threads = 1;
};

struct ConstructTrace {
  std::optional<int> chosen_k;  // absent: no thinning
  int thinned_min_degree = 0;
  int thinned_max_degree = 0;
  int attempts_used = 0;
  std::uint64_t attempt_seed = 0;  // seed of the last attempt
  long repair_rounds_used = 0;     // summed over attempts
  long star_resamples = 0;
  long cut_resamples = 0;
  long resampled_edge_count = 0;
  std::string outcome;  // "verified" or "budget_exhausted"
};

struct ConstructResult {
  bool success = false;
  EdgeAssignment assignment;  // total; best effort on failure
  ConstructTrace trace;
  std::optional<ViolatingCut> failure;
};

/// Thinning, random assignment on the thinned subgraph, resampling of
/// dependent stars and violated cuts, greedy completion; repeated with
/// fresh seeds until the assignment passes verify_linear or budgets run
/// out. Requires h connected and d-regular.
ConstructResult repair_construct(const Graph& h, int d, const ConstructParams& params = {});

/// Seed of attempt i of repair_construct.
std::uint64_t attempt_seed(std::uint64_t seed, int attempt);

/// floor(k'/2) edge-disjoint spanning trees of h.
std::vector<EdgeSubset> spanning_tree_packing(const Graph& h);

/// All unions of floor(k'(h)/2) edge-disjoint spanning trees. The generator
/// maps edges of tree i to e_i (other edges to 0), so member u is the union
/// of the trees in supp(u).
ConnectivityCode tree_packing_code(const Graph& h);

/// {0, M0+M1, M0+M2, M1+M2} on three_matching_cubic(n). Requires odd n >= 3.
ConnectivityCode h_n_code(int n);
/// Dimension-2 generator of h_n_code.
EdgeAssignment h_n_assignment(int n);

BitVec random_bitvec(std::size_t dim, std::mt19937_64& rng);

}  // namespace graphcode
