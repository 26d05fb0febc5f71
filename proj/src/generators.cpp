#include "graphcode/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace graphcode {

Graph complete_graph(int n) {
  if (n < 1) throw PreconditionError("complete_graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph cycle(int s) {
  if (s < 3) throw PreconditionError("cycle needs s >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < s; ++i) edges.push_back({i, (i + 1) % s});
  return Graph(s, std::move(edges));
}

Graph cartesian_product(const Graph& h1, const Graph& h2) {
  const int n1 = h1.n();
  const int n2 = h2.n();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n1 * h2.m() + n2 * h1.m()));
  for (int a = 0; a < n1; ++a)
    for (const auto& e : h2.edges()) edges.push_back({a * n2 + e.u, a * n2 + e.v});
  for (int b = 0; b < n2; ++b)
    for (const auto& e : h1.edges()) edges.push_back({e.u * n2 + b, e.v * n2 + b});
  return Graph(n1 * n2, std::move(edges), h1.multigraph_allowed() || h2.multigraph_allowed());
}

Graph cycle_power(int s, int k) {
  if (k < 1 || s <= 2 * k) throw PreconditionError("cycle_power needs k >= 1 and s > 2k");
  std::vector<Edge> edges;
  for (int j = 1; j <= k; ++j)
    for (int i = 0; i < s; ++i) edges.push_back({i, (i + j) % s});
  return Graph(s, std::move(edges));
}

Graph three_matching_cubic(int n) {
  if (n < 3) throw PreconditionError("three_matching_cubic needs n >= 3");
  std::vector<Edge> edges;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < n; ++i) edges.push_back({i, n + (i + j) % n});
  return Graph(2 * n, std::move(edges));
}

int clique_chain_matching_start(int s, int k, int i) {
  const int q = 2 * k + 1;
  return s * (q * (q - 1) / 2) + i * k;
}

Graph clique_chain(int s, int k) {
  if (s < 3 || k < 1) throw PreconditionError("clique_chain needs s >= 3 and k >= 1");
  const int q = 2 * k + 1;
  std::vector<Edge> edges;
  for (int c = 0; c < s; ++c)
    for (int a = 0; a < q; ++a)
      for (int b = a + 1; b < q; ++b) edges.push_back({c * q + a, c * q + b});
  for (int i = 0; i < s; ++i) {
    const int next = (i + 1) % s;
    for (int j = 0; j < k; ++j) edges.push_back({i * q + k + j, next * q + j});
  }
  return Graph(s * q, std::move(edges));
}

Graph random_regular(int n, int d, std::uint64_t seed, int max_attempts) {
  if (n < 1 || d < 0 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
    throw PreconditionError("random_regular needs d < n and n*d even");
  std::mt19937_64 rng(seed);
  const auto N = static_cast<std::size_t>(n);
  std::vector<int> points;
  std::vector<char> adjacent(N * N);
  // Steger-Wormald: pair two uniformly drawn free points whenever they form
  // a new non-loop edge; restart when no suitable pair is left.
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    points.clear();
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < d; ++i) points.push_back(v);
    std::fill(adjacent.begin(), adjacent.end(), 0);
    std::set<std::pair<int, int>> edges;
    auto suitable = [&](int a, int b) { return a != b && !adjacent[static_cast<std::size_t>(a) * N + static_cast<std::size_t>(b)]; };
    bool stuck = false;
    while (!points.empty()) {
      const std::size_t p = points.size();
      std::size_t i = 0, j = 0;
      bool found = false;
      for (int tries = 0; tries < 64 && !found; ++tries) {
        i = static_cast<std::size_t>(rng() % p);
        j = static_cast<std::size_t>(rng() % (p - 1));
        if (j >= i) ++j;
        found = suitable(points[i], points[j]);
      }
      if (!found) {
        bool any = false;
        for (std::size_t x = 0; x < p && !any; ++x)
          for (std::size_t y = x + 1; y < p && !any; ++y) any = suitable(points[x], points[y]);
        if (!any) {
          stuck = true;
          break;
        }
        continue;
      }
      const int a = points[i];
      const int b = points[j];
      adjacent[static_cast<std::size_t>(a) * N + static_cast<std::size_t>(b)] = 1;
      adjacent[static_cast<std::size_t>(b) * N + static_cast<std::size_t>(a)] = 1;
      edges.emplace(std::min(a, b), std::max(a, b));
      if (i < j) std::swap(i, j);
      points[i] = points.back();
      points.pop_back();
      points[j] = points.back();
      points.pop_back();
    }
    if (stuck) continue;
    std::vector<Edge> out;
    for (const auto& [a, b] : edges) out.push_back({a, b});
    return Graph(n, std::move(out));
  }
  throw BudgetExhausted("random_regular: pairing got stuck in all " + std::to_string(max_attempts) +
                        " attempts");
}

}  // namespace graphcode
