#include "graphcode/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace graphcode {

namespace {

class DisjointSets {
 public:
  void reset(int n) {
    parent_.resize(static_cast<std::size_t>(n));
    std::iota(parent_.begin(), parent_.end(), 0);
    components_ = n;
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[static_cast<std::size_t>(a)] = b;
    --components_;
  }
  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  int components_ = 0;
};

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges, bool multigraph_allowed)
    : n_(n), edges_(std::move(edges)), multigraph_(multigraph_allowed) {
  if (n_ < 1) throw PreconditionError("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  std::vector<std::size_t> deg(static_cast<std::size_t>(n_), 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw PreconditionError("edge " + std::to_string(i) + " has an endpoint out of range");
    if (e.u == e.v) throw PreconditionError("edge " + std::to_string(i) + " is a self-loop");
    if (!multigraph_ && !seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
      throw PreconditionError("edge " + std::to_string(i) + " duplicates an earlier edge");
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (int v = 0; v < n_; ++v)
    offsets_[static_cast<std::size_t>(v) + 1] = offsets_[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v)];
  incidence_.resize(offsets_.back());
  auto fill = offsets_;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    incidence_[fill[static_cast<std::size_t>(e.u)]++] = {e.v, static_cast<int>(i)};
    incidence_[fill[static_cast<std::size_t>(e.v)]++] = {e.u, static_cast<int>(i)};
  }
}

std::optional<int> Graph::find_edge(int u, int v) const {
  std::optional<int> best;
  for (const auto& inc : incident(u))
    if (inc.neighbor == v && (!best || inc.edge < *best)) best = inc.edge;
  return best;
}

EdgeSubset symmetric_difference(const EdgeSubset& a, const EdgeSubset& b) { return a ^ b; }

bool is_connected_spanning(const Graph& h, std::span<const std::uint64_t> words) {
  if (h.n() == 1) return true;
  thread_local DisjointSets ds;
  ds.reset(h.n());
  const auto edges = h.edges();
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint64_t w = words[i];
    while (w) {
      const auto e = i * 64 + static_cast<std::size_t>(std::countr_zero(w));
      w &= w - 1;
      ds.unite(edges[e].u, edges[e].v);
      if (ds.components() == 1) return true;
    }
  }
  return false;
}

bool is_connected_spanning(const Graph& h, const EdgeSubset& s) {
  if (s.size() != static_cast<std::size_t>(h.m()))
    throw HostMismatch("edge subset length does not match host edge count");
  return is_connected_spanning(h, s.words());
}

bool is_connected(const Graph& h) { return is_connected_spanning(h, h.all_edges()); }

std::vector<int> component_labels(const Graph& h, const EdgeSubset& s, int* count) {
  if (s.size() != static_cast<std::size_t>(h.m()))
    throw HostMismatch("edge subset length does not match host edge count");
  DisjointSets ds;
  ds.reset(h.n());
  s.for_each_set([&](std::size_t e) { ds.unite(h.edge(static_cast<int>(e)).u, h.edge(static_cast<int>(e)).v); });
  // Roots are the smallest vertex of each component, so numbering roots in
  // vertex order numbers components by minimum vertex.
  std::vector<int> label(static_cast<std::size_t>(h.n()), -1);
  int next = 0;
  for (int v = 0; v < h.n(); ++v) {
    const int r = ds.find(v);
    if (label[static_cast<std::size_t>(r)] < 0) label[static_cast<std::size_t>(r)] = next++;
    label[static_cast<std::size_t>(v)] = label[static_cast<std::size_t>(r)];
  }
  if (count) *count = next;
  return label;
}

std::vector<int> small_component(const Graph& h, const EdgeSubset& s) {
  int count = 0;
  const auto label = component_labels(h, s, &count);
  if (count < 2) throw PreconditionError("subgraph is connected; no cut side exists");
  std::vector<std::vector<int>> comps(static_cast<std::size_t>(count));
  for (int v = 0; v < h.n(); ++v) comps[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].push_back(v);
  for (auto& c : comps)
    if (2 * static_cast<int>(c.size()) <= h.n()) return c;
  return comps.front();  // unreachable: two or more parts always include one of size <= n/2
}

MinCut global_min_cut(const Graph& h) {
  const int n = h.n();
  if (n < 2) throw PreconditionError("minimum cut needs at least two vertices");
  if (!is_connected(h)) return {0, small_component(h, h.all_edges())};

  const auto N = static_cast<std::size_t>(n);
  std::vector<long long> w(N * N, 0);
  for (const auto& e : h.edges()) {
    ++w[static_cast<std::size_t>(e.u) * N + static_cast<std::size_t>(e.v)];
    ++w[static_cast<std::size_t>(e.v) * N + static_cast<std::size_t>(e.u)];
  }
  std::vector<std::vector<int>> groups(N);
  for (int v = 0; v < n; ++v) groups[static_cast<std::size_t>(v)] = {v};
  std::vector<int> active(N);
  std::iota(active.begin(), active.end(), 0);

  long long best = std::numeric_limits<long long>::max();
  std::vector<int> best_side;
  std::vector<long long> key(N);
  std::vector<char> added(N);
  while (active.size() > 1) {
    for (int v : active) {
      key[static_cast<std::size_t>(v)] = 0;
      added[static_cast<std::size_t>(v)] = 0;
    }
    int prev = -1;
    for (std::size_t step = 0; step < active.size(); ++step) {
      int sel = -1;
      for (int v : active)
        if (!added[static_cast<std::size_t>(v)] &&
            (sel < 0 || key[static_cast<std::size_t>(v)] > key[static_cast<std::size_t>(sel)]))
          sel = v;
      if (sel < 0) break;
      const auto S = static_cast<std::size_t>(sel);
      if (step + 1 == active.size()) {
        if (key[S] < best) {
          best = key[S];
          best_side = groups[S];
        }
        const auto P = static_cast<std::size_t>(prev);
        for (int x : active) {
          const auto X = static_cast<std::size_t>(x);
          w[P * N + X] += w[S * N + X];
          w[X * N + P] = w[P * N + X];
        }
        w[P * N + P] = 0;
        groups[P].insert(groups[P].end(), groups[S].begin(), groups[S].end());
        active.erase(std::find(active.begin(), active.end(), sel));
        break;
      }
      added[S] = 1;
      for (int x : active) key[static_cast<std::size_t>(x)] += w[S * N + static_cast<std::size_t>(x)];
      prev = sel;
    }
  }

  std::sort(best_side.begin(), best_side.end());
  if (2 * best_side.size() > N) {
    std::vector<int> other;
    std::size_t j = 0;
    for (int v = 0; v < n; ++v) {
      if (j < best_side.size() && best_side[j] == v) ++j;
      else other.push_back(v);
    }
    best_side = std::move(other);
  }
  return {static_cast<int>(best), std::move(best_side)};
}

int edge_connectivity(const Graph& h) {
  if (h.n() < 2) return 0;
  return global_min_cut(h).value;
}

GraphStats graph_stats(const Graph& h) {
  GraphStats s;
  s.n = h.n();
  s.m = h.m();
  s.min_degree = std::numeric_limits<int>::max();
  for (int v = 0; v < h.n(); ++v) {
    s.min_degree = std::min(s.min_degree, h.degree(v));
    s.max_degree = std::max(s.max_degree, h.degree(v));
  }
  s.is_regular = s.min_degree == s.max_degree;
  return s;
}

CutCertificate cut_edges(const Graph& h, std::span<const int> side) {
  std::vector<char> in(static_cast<std::size_t>(h.n()), 0);
  for (int v : side) {
    if (v < 0 || v >= h.n()) throw PreconditionError("cut side contains an out-of-range vertex");
    in[static_cast<std::size_t>(v)] = 1;
  }
  const auto w = static_cast<int>(std::count(in.begin(), in.end(), 1));
  if (w == 0 || w == h.n()) throw PreconditionError("cut side must be a proper nonempty subset");

  CutCertificate cert;
  for (int v = 0; v < h.n(); ++v)
    if (in[static_cast<std::size_t>(v)]) cert.side.push_back(v);
  cert.crossing = h.empty_subset();
  EdgeSubset inside = h.empty_subset();
  for (int e = 0; e < h.m(); ++e) {
    const bool a = in[static_cast<std::size_t>(h.edge(e).u)];
    const bool b = in[static_cast<std::size_t>(h.edge(e).v)];
    if (a != b) cert.crossing.set(static_cast<std::size_t>(e));
    if (a && b) inside.set(static_cast<std::size_t>(e));
  }
  int comps = 0;
  const auto label = component_labels(h, inside, &comps);
  // Vertices outside W are singletons in `inside`; W is connected iff all
  // its vertices share one label.
  const int first = label[static_cast<std::size_t>(cert.side.front())];
  cert.connected_side = std::all_of(cert.side.begin(), cert.side.end(),
                                    [&](int v) { return label[static_cast<std::size_t>(v)] == first; });
  return cert;
}

namespace {

struct SubsetEnumerator {
  const Graph& h;
  int max_size;
  const std::function<bool(std::span<const int>)>& visit;
  std::size_t cap;
  std::size_t produced = 0;
  bool stopped = false;
  std::vector<int> sub;
  std::vector<int> sorted;
  std::vector<int> blocked;  // #members of sub that v is in or adjacent to

  void block(int w, int delta) {
    blocked[static_cast<std::size_t>(w)] += delta;
    for (const auto& inc : h.incident(w)) blocked[static_cast<std::size_t>(inc.neighbor)] += delta;
  }

  void emit() {
    if (++produced > cap)
      throw CapExceeded("connected subset enumeration exceeded cap of " + std::to_string(cap));
    sorted = sub;
    std::sort(sorted.begin(), sorted.end());
    if (!visit(sorted)) stopped = true;
  }

  // Extension step of the ESU scheme: every connected set is reached from
  // its minimum vertex `root` along exactly one path of insertions.
  void extend(std::vector<int> ext, int root) {
    emit();
    if (stopped || static_cast<int>(sub.size()) == max_size) return;
    while (!ext.empty() && !stopped) {
      const int w = ext.back();
      ext.pop_back();
      std::vector<int> next = ext;
      for (const auto& inc : h.incident(w)) {
        const int u = inc.neighbor;
        if (u > root && blocked[static_cast<std::size_t>(u)] == 0 &&
            std::find(next.begin(), next.end(), u) == next.end())
          next.push_back(u);
      }
      sub.push_back(w);
      block(w, 1);
      extend(std::move(next), root);
      block(w, -1);
      sub.pop_back();
    }
  }
};

}  // namespace

std::size_t for_each_connected_subset(const Graph& h, int max_size,
                                      const std::function<bool(std::span<const int>)>& visit,
                                      std::size_t cap) {
  if (max_size < 1) return 0;
  SubsetEnumerator en{h, max_size, visit, cap, 0, false, {}, {}, {}};
  en.blocked.assign(static_cast<std::size_t>(h.n()), 0);
  for (int v = 0; v < h.n() && !en.stopped; ++v) {
    en.sub = {v};
    en.block(v, 1);
    std::vector<int> ext;
    for (const auto& inc : h.incident(v))
      if (inc.neighbor > v && std::find(ext.begin(), ext.end(), inc.neighbor) == ext.end())
        ext.push_back(inc.neighbor);
    en.extend(std::move(ext), v);
    en.block(v, -1);
  }
  return en.produced;
}

std::vector<std::vector<int>> enumerate_connected_subsets(const Graph& h, int max_size, std::size_t cap) {
  std::vector<std::vector<int>> out;
  for_each_connected_subset(
      h, max_size,
      [&](std::span<const int> w) {
        out.emplace_back(w.begin(), w.end());
        return true;
      },
      cap);
  return out;
}

ExpansionResult expansion_profile(const Graph& h, double c, std::size_t cap) {
  const auto st = graph_stats(h);
  if (!st.is_regular || st.min_degree < 2)
    throw PreconditionError("expansion profile needs a regular graph of degree >= 2");
  const double logd = std::log2(static_cast<double>(st.min_degree));
  ExpansionResult res;
  res.worst_ratio = std::numeric_limits<double>::infinity();
  std::vector<char> in(static_cast<std::size_t>(h.n()), 0);
  res.sets_checked = for_each_connected_subset(
      h, h.n() / 2,
      [&](std::span<const int> w) {
        for (int v : w) in[static_cast<std::size_t>(v)] = 1;
        int crossing = 0;
        for (int v : w)
          for (const auto& inc : h.incident(v))
            if (!in[static_cast<std::size_t>(inc.neighbor)]) ++crossing;
        for (int v : w) in[static_cast<std::size_t>(v)] = 0;
        const double ratio = crossing / (static_cast<double>(w.size()) * logd);
        if (ratio < res.worst_ratio) {
          res.worst_ratio = ratio;
          res.worst = cut_edges(h, w);
        }
        return true;
      },
      cap);
  res.ok = !res.worst || res.worst_ratio >= c;
  return res;
}

double second_eigenvalue(const Graph& h) {
  if (h.n() < 2) throw PreconditionError("second eigenvalue needs at least two vertices");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(h.n(), h.n());
  for (const auto& e : h.edges()) {
    a(e.u, e.v) += 1.0;
    a(e.v, e.u) += 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();  // ascending
  return ev(h.n() - 2);
}

}  // namespace graphcode
