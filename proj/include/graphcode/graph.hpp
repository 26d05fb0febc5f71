#pragma once

// Host graphs, edge subsets and the cut/connectivity primitives everything
// else is built on.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "graphcode/bits.hpp"

namespace graphcode {

struct Edge {
  int u = 0;
  int v = 0;
  bool operator==(const Edge&) const = default;
};

/// Membership vector over the edge ids of a host graph.
using EdgeSubset = BasicBits<struct EdgeSubsetTag>;

/// Undirected graph on vertices 0..n-1. Edge ids are positions in the edge
/// list. Immutable after construction.
class Graph {
 public:
  struct Incidence {
    int neighbor;
    int edge;
  };

  Graph() : Graph(1, {}) {}
  /// Throws PreconditionError on n < 1, out-of-range endpoints, self-loops,
  /// or (unless multigraph_allowed) duplicate pairs.
  Graph(int n, std::vector<Edge> edges, bool multigraph_allowed = false);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  bool multigraph_allowed() const { return multigraph_; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Incidence> incident(int v) const {
    const auto b = offsets_[static_cast<std::size_t>(v)];
    const auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return std::span<const Incidence>(incidence_).subspan(b, e - b);
  }
  int degree(int v) const { return static_cast<int>(incident(v).size()); }

  /// Lowest edge id joining u and v, if any.
  std::optional<int> find_edge(int u, int v) const;

  EdgeSubset empty_subset() const { return EdgeSubset(edges_.size()); }
  EdgeSubset all_edges() const { return EdgeSubset::full(edges_.size()); }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && multigraph_ == o.multigraph_ && edges_ == o.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  bool multigraph_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> incidence_;
};

/// W witnessing a cut together with the edges leaving it.
struct CutCertificate {
  std::vector<int> side;  // sorted
  EdgeSubset crossing;
  bool connected_side = false;
};

struct GraphStats {
  int min_degree = 0;
  int max_degree = 0;
  bool is_regular = false;
  int m = 0;
  int n = 0;
  bool operator==(const GraphStats&) const = default;
};

struct MinCut {
  int value = 0;
  std::vector<int> side;  // sorted, 1 <= |side| <= n/2
};

struct ExpansionResult {
  bool ok = true;
  double worst_ratio = 0.0;  // |crossing| / (|W| log2 d) at the worst W
  std::optional<CutCertificate> worst;
  std::size_t sets_checked = 0;
};

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

EdgeSubset symmetric_difference(const EdgeSubset& a, const EdgeSubset& b);

/// True iff (V, s) is connected on all host vertices. n = 1 is connected.
bool is_connected_spanning(const Graph& h, const EdgeSubset& s);
/// Same test on raw membership words (length ceil(m/64)).
bool is_connected_spanning(const Graph& h, std::span<const std::uint64_t> words);
bool is_connected(const Graph& h);

/// Component index per vertex of (V, s); components are numbered in order
/// of their smallest vertex.
std::vector<int> component_labels(const Graph& h, const EdgeSubset& s, int* count = nullptr);

/// The component of (V, s) with smallest minimum vertex among those with at
/// most n/2 vertices. Requires (V, s) disconnected.
std::vector<int> small_component(const Graph& h, const EdgeSubset& s);

/// Stoer-Wagner global minimum cut; value 0 with a component as side for
/// disconnected inputs. Requires n >= 2.
MinCut global_min_cut(const Graph& h);
/// k'(H). Disconnected graphs (and n = 1) give 0.
int edge_connectivity(const Graph& h);

GraphStats graph_stats(const Graph& h);

/// Throws PreconditionError unless W is a proper nonempty vertex subset.
CutCertificate cut_edges(const Graph& h, std::span<const int> side);

/// Calls `visit` once per vertex set W (sorted) inducing a connected
/// subgraph with 1 <= |W| <= max_size; each set is grown from its minimum
/// vertex. `visit` returns false to stop early. Throws CapExceeded once more
/// than `cap` sets have been produced. Returns the number visited.
std::size_t for_each_connected_subset(const Graph& h, int max_size,
                                      const std::function<bool(std::span<const int>)>& visit,
                                      std::size_t cap = kDefaultEnumerationCap);
std::vector<std::vector<int>> enumerate_connected_subsets(const Graph& h, int max_size,
                                                          std::size_t cap = kDefaultEnumerationCap);

/// Checks |crossing(W)| >= c |W| log2 d over connected W with |W| <= n/2.
/// Requires h regular with d >= 2.
ExpansionResult expansion_profile(const Graph& h, double c,
                                  std::size_t cap = kDefaultEnumerationCap);

/// Absolute tolerance declared for second_eigenvalue results.
inline constexpr double kEigenTolerance = 1e-9;
/// Second largest adjacency eigenvalue (with multiplicity). Requires n >= 2.
double second_eigenvalue(const Graph& h);

}  // namespace graphcode
