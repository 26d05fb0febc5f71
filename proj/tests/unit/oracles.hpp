#pragma once

// Independent reference implementations used only by the tests. None of
// them calls into the library beyond reading a Graph's vertex count and
// edge list.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "graphcode/graph.hpp"

namespace oracle {

using graphcode::Graph;

// Depth-first search over an adjacency matrix restricted to the edges
// selected by `keep`.
inline bool connected(int n, const std::vector<graphcode::Edge>& edges, const std::vector<bool>& keep) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (keep[e]) {
      adj[static_cast<std::size_t>(edges[e].u)].push_back(edges[e].v);
      adj[static_cast<std::size_t>(edges[e].v)].push_back(edges[e].u);
    }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

inline bool connected_mask(const Graph& h, std::uint64_t mask) {
  std::vector<bool> keep(static_cast<std::size_t>(h.m()));
  for (int e = 0; e < h.m(); ++e) keep[static_cast<std::size_t>(e)] = (mask >> e) & 1U;
  return connected(h.n(), {h.edges().begin(), h.edges().end()}, keep);
}

// Minimum number of crossing edges over all nonempty proper vertex sets.
inline int edge_connectivity(const Graph& h) {
  const int n = h.n();
  if (n < 2) return 0;
  int best = h.m() + 1;
  for (std::uint32_t s = 1; s + 1 < (1U << n); ++s) {
    if (!(s & 1U)) continue;  // count each cut once: vertex 0 inside
    int c = 0;
    for (const auto& e : h.edges()) c += (((s >> e.u) ^ (s >> e.v)) & 1U);
    best = std::min(best, c);
  }
  return best;
}

// Number of vertex sets of size 1..max_size inducing a connected subgraph.
inline std::size_t connected_subset_count(const Graph& h, int max_size) {
  const int n = h.n();
  std::size_t count = 0;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    if (std::popcount(s) > max_size) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if ((s >> v) & 1U) verts.push_back(v);
    std::uint32_t reach = 1U << verts.front();
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& e : h.edges()) {
        if (!((s >> e.u) & 1U) || !((s >> e.v) & 1U)) continue;
        const bool a = (reach >> e.u) & 1U;
        const bool b = (reach >> e.v) & 1U;
        if (a != b) {
          reach |= (1U << e.u) | (1U << e.v);
          grew = true;
        }
      }
    }
    if (reach == s) ++count;
  }
  return count;
}

// Rank as log2 of the number of distinct subset sums.
inline std::size_t span_rank(const std::vector<std::uint64_t>& vecs) {
  std::set<std::uint64_t> span{0};
  for (auto v : vecs) {
    std::set<std::uint64_t> next = span;
    for (auto x : span) next.insert(x ^ v);
    span = std::move(next);
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < span.size()) ++r;
  return r;
}

// Cyclic Jacobi rotations on a dense symmetric matrix; eigenvalues sorted
// descending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-22) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

inline std::vector<std::vector<double>> adjacency(const Graph& h) {
  const auto n = static_cast<std::size_t>(h.n());
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const auto& e : h.edges()) {
    a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] += 1;
    a[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] += 1;
  }
  return a;
}

// Largest family of edge masks (any masks, no anchoring) whose pairwise
// differences are connected spanning, by plain backtracking over all 2^m
// masks. Usable for m <= 8.
inline int naive_max_code(const Graph& h) {
  const std::uint32_t total = 1U << h.m();
  std::vector<char> conn(total);
  for (std::uint32_t x = 0; x < total; ++x) conn[x] = connected_mask(h, x);
  int best = 0;
  std::vector<std::uint32_t> chosen;
  auto rec = [&](auto&& self, std::uint32_t from) -> void {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (std::uint32_t x = from; x < total; ++x) {
      if (static_cast<int>(chosen.size() + (total - x)) <= best) return;
      bool ok = true;
      for (auto c : chosen)
        if (!conn[c ^ x]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(x);
      self(self, x + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

// Random connected simple graph: a random spanning tree plus extra edges.
inline Graph random_connected(int n, int extra, std::mt19937_64& rng) {
  std::set<std::pair<int, int>> es;
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
    es.emplace(u, v);
  }
  const int max_edges = n * (n - 1) / 2;
  for (int i = 0; i < extra && static_cast<int>(es.size()) < max_edges;) {
    int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (es.emplace(a, b).second) ++i;
  }
  std::vector<graphcode::Edge> edges;
  for (auto [a, b] : es) edges.push_back({a, b});
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(n, edges);
}

}  // namespace oracle
