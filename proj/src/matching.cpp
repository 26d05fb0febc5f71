#include "graphcode/matching.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace graphcode {

namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& h) : n_(h.n()), adj_(static_cast<std::size_t>(h.n())) {
    for (const auto& e : h.edges()) {
      adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& a : adj_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
  }

  std::vector<int> solve() {
    mate_.assign(static_cast<std::size_t>(n_), -1);
    for (int v = 0; v < n_; ++v) {
      if (mate_[at(v)] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        const int pv = parent_[at(u)];
        const int ppv = mate_[at(pv)];
        mate_[at(u)] = pv;
        mate_[at(pv)] = u;
        u = ppv;
      }
    }
    return mate_;
  }

 private:
  static std::size_t at(int v) { return static_cast<std::size_t>(v); }

  int lca(int a, int b) {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (;;) {
      a = base_[at(a)];
      seen[at(a)] = 1;
      if (mate_[at(a)] == -1) break;
      a = parent_[at(mate_[at(a)])];
    }
    for (;;) {
      b = base_[at(b)];
      if (seen[at(b)]) return b;
      b = parent_[at(mate_[at(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[at(v)] != b) {
      in_blossom_[at(base_[at(v)])] = 1;
      in_blossom_[at(base_[at(mate_[at(v)])])] = 1;
      parent_[at(v)] = child;
      child = mate_[at(v)];
      v = parent_[at(mate_[at(v)])];
    }
  }

  int find_path(int root) {
    used_.assign(at(n_), 0);
    parent_.assign(at(n_), -1);
    base_.resize(at(n_));
    for (int i = 0; i < n_; ++i) base_[at(i)] = i;
    used_[at(root)] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int to : adj_[at(v)]) {
        if (base_[at(v)] == base_[at(to)] || mate_[at(v)] == to) continue;
        if (to == root || (mate_[at(to)] != -1 && parent_[at(mate_[at(to)])] != -1)) {
          const int cur = lca(v, to);
          in_blossom_.assign(at(n_), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[at(base_[at(i)])]) continue;
            base_[at(i)] = cur;
            if (!used_[at(i)]) {
              used_[at(i)] = 1;
              queue.push_back(i);
            }
          }
        } else if (parent_[at(to)] == -1) {
          parent_[at(to)] = v;
          if (mate_[at(to)] == -1) return to;
          used_[at(mate_[at(to)])] = 1;
          queue.push_back(mate_[at(to)]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

// Kuhn's augmenting-path matching on a bipartite multigraph given as
// left -> list of (right, edge id).
struct Bipartite {
  std::vector<std::vector<std::pair<int, int>>> adj;
  std::vector<int> right_edge;  // edge matched at right vertex, -1
  std::vector<int> right_left;  // left partner of right vertex
  std::vector<char> seen;

  bool augment(int l) {
    for (const auto& [r, e] : adj[static_cast<std::size_t>(l)]) {
      if (seen[static_cast<std::size_t>(r)]) continue;
      seen[static_cast<std::size_t>(r)] = 1;
      if (right_left[static_cast<std::size_t>(r)] == -1 || augment(right_left[static_cast<std::size_t>(r)])) {
        right_left[static_cast<std::size_t>(r)] = l;
        right_edge[static_cast<std::size_t>(r)] = e;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::vector<int> maximum_matching(const Graph& h) { return Blossom(h).solve(); }

std::vector<int> balanced_orientation(const Graph& h, const EdgeSubset& support) {
  const auto n = static_cast<std::size_t>(h.n());
  std::vector<int> tail(static_cast<std::size_t>(h.m()), -1);
  std::vector<char> used(static_cast<std::size_t>(h.m()), 0);
  std::vector<std::size_t> cursor(n, 0);
  for (int v = 0; v < h.n(); ++v) {
    int deg = 0;
    for (const auto& inc : h.incident(v))
      if (support.test(static_cast<std::size_t>(inc.edge))) ++deg;
    if (deg % 2) throw PreconditionError("vertex " + std::to_string(v) + " has odd degree");
  }
  auto next_unused = [&](int v) -> int {
    auto inc = h.incident(v);
    auto& c = cursor[static_cast<std::size_t>(v)];
    while (c < inc.size()) {
      const int e = inc[c].edge;
      if (support.test(static_cast<std::size_t>(e)) && !used[static_cast<std::size_t>(e)]) return e;
      ++c;
    }
    return -1;
  };
  // With all degrees even, a walk along unused edges can only get stuck
  // where it started, so each walk is a closed trail.
  for (int s = 0; s < h.n(); ++s) {
    while (next_unused(s) != -1) {
      int cur = s;
      for (int e; (e = next_unused(cur)) != -1;) {
        used[static_cast<std::size_t>(e)] = 1;
        tail[static_cast<std::size_t>(e)] = cur;
        cur = h.edge(e).u == cur ? h.edge(e).v : h.edge(e).u;
      }
    }
  }
  return tail;
}

EdgeSubset two_factor_within(const Graph& h, const EdgeSubset& support) {
  const auto tail = balanced_orientation(h, support);
  Bipartite bp;
  bp.adj.resize(static_cast<std::size_t>(h.n()));
  for (int e = 0; e < h.m(); ++e) {
    const int t = tail[static_cast<std::size_t>(e)];
    if (t < 0) continue;
    const int head = h.edge(e).u == t ? h.edge(e).v : h.edge(e).u;
    bp.adj[static_cast<std::size_t>(t)].push_back({head, e});
  }
  for (int v = 0; v < h.n(); ++v)
    if (bp.adj[static_cast<std::size_t>(v)].empty())
      throw PreconditionError("vertex " + std::to_string(v) + " has degree 0; no 2-factor");
  bp.right_edge.assign(static_cast<std::size_t>(h.n()), -1);
  bp.right_left.assign(static_cast<std::size_t>(h.n()), -1);
  for (int l = 0; l < h.n(); ++l) {
    bp.seen.assign(static_cast<std::size_t>(h.n()), 0);
    // A regular bipartite multigraph always has a perfect matching.
    if (!bp.augment(l)) throw std::logic_error("no perfect matching in a regular bipartite graph");
  }
  EdgeSubset f = h.empty_subset();
  for (int e : bp.right_edge) f.set(static_cast<std::size_t>(e));
  return f;
}

std::vector<EdgeSubset> pack_forests(const Graph& h, int k) {
  const int m = h.m();
  const int n = h.n();
  std::vector<int> owner(static_cast<std::size_t>(m), -1);
  std::vector<int> forest_size(static_cast<std::size_t>(k), 0);
  if (k <= 0) return {};

  // Adjacency of each forest: vertex -> (neighbor, edge).
  std::vector<std::vector<std::vector<Graph::Incidence>>> fadj(
      static_cast<std::size_t>(k), std::vector<std::vector<Graph::Incidence>>(static_cast<std::size_t>(n)));
  auto rebuild = [&] {
    for (auto& f : fadj)
      for (auto& l : f) l.clear();
    for (int e = 0; e < m; ++e) {
      const int i = owner[static_cast<std::size_t>(e)];
      if (i < 0) continue;
      const auto& ed = h.edge(e);
      fadj[static_cast<std::size_t>(i)][static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
      fadj[static_cast<std::size_t>(i)][static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
    }
  };
  // Edge ids on the path between a and b in forest i; nullopt if none.
  std::vector<int> prev_edge(static_cast<std::size_t>(n));
  std::vector<int> prev_vertex(static_cast<std::size_t>(n));
  auto forest_path = [&](int i, int a, int b) -> std::optional<std::vector<int>> {
    std::fill(prev_edge.begin(), prev_edge.end(), -2);
    prev_edge[static_cast<std::size_t>(a)] = -1;
    std::deque<int> q{a};
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      if (x == b) break;
      for (const auto& inc : fadj[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]) {
        if (prev_edge[static_cast<std::size_t>(inc.neighbor)] != -2) continue;
        prev_edge[static_cast<std::size_t>(inc.neighbor)] = inc.edge;
        prev_vertex[static_cast<std::size_t>(inc.neighbor)] = x;
        q.push_back(inc.neighbor);
      }
    }
    if (prev_edge[static_cast<std::size_t>(b)] == -2) return std::nullopt;
    std::vector<int> path;
    for (int x = b; x != a; x = prev_vertex[static_cast<std::size_t>(x)]) path.push_back(prev_edge[static_cast<std::size_t>(x)]);
    return path;
  };

  const int target = k * (n - 1);
  int total = 0;
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::vector<char> labeled(static_cast<std::size_t>(m));
  for (int e0 = 0; e0 < m && total < target; ++e0) {
    rebuild();
    std::fill(labeled.begin(), labeled.end(), 0);
    labeled[static_cast<std::size_t>(e0)] = 1;
    parent[static_cast<std::size_t>(e0)] = -1;
    std::deque<int> q{e0};
    bool done = false;
    while (!q.empty() && !done) {
      const int x = q.front();
      q.pop_front();
      for (int i = 0; i < k && !done; ++i) {
        if (owner[static_cast<std::size_t>(x)] == i) continue;
        const auto& ed = h.edge(x);
        auto path = forest_path(i, ed.u, ed.v);
        if (!path) {
          // x fits into forest i; shift every edge along the label chain.
          int cur = x;
          int dest = i;
          while (cur != -1) {
            const int old = owner[static_cast<std::size_t>(cur)];
            owner[static_cast<std::size_t>(cur)] = dest;
            dest = old;
            cur = parent[static_cast<std::size_t>(cur)];
          }
          ++forest_size[static_cast<std::size_t>(i)];
          ++total;
          done = true;
          break;
        }
        for (int f : *path) {
          if (labeled[static_cast<std::size_t>(f)]) continue;
          labeled[static_cast<std::size_t>(f)] = 1;
          parent[static_cast<std::size_t>(f)] = x;
          q.push_back(f);
        }
      }
    }
  }

  std::vector<EdgeSubset> forests(static_cast<std::size_t>(k), h.empty_subset());
  for (int e = 0; e < m; ++e)
    if (owner[static_cast<std::size_t>(e)] >= 0) forests[static_cast<std::size_t>(owner[static_cast<std::size_t>(e)])].set(static_cast<std::size_t>(e));
  return forests;
}

}  // namespace graphcode
