#include "graphcode/exact.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "graphcode/bounds.hpp"

namespace graphcode {

namespace {

using Row = std::vector<std::uint64_t>;

class CliqueSearch {
 public:
  CliqueSearch(std::size_t n, std::vector<Row> adj) : n_(n), words_((n + 63) / 64), adj_(std::move(adj)) {}

  std::uint64_t nodes() const { return nodes_; }

  int max_clique_size() {
    best_ = 0;
    Row all(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    if (n_ > 0) expand(0, all);
    return best_;
  }

  // Ascending vertex list of the lexicographically first clique of the
  // given size (which must be the maximum).
  std::vector<std::size_t> first_clique(int size) {
    target_ = size;
    chosen_.clear();
    Row all(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    if (size == 0) return {};
    if (!lex(all)) throw std::logic_error("clique of maximum size not found on second pass");
    return chosen_;
  }

 private:
  static bool empty(const Row& r) {
    return std::all_of(r.begin(), r.end(), [](auto w) { return w == 0; });
  }

  // Greedy sequential coloring of P. Returns vertices in color order with
  // their color numbers (1-based).
  void color_sort(const Row& p, std::vector<std::size_t>& order, std::vector<int>& colors) const {
    order.clear();
    colors.clear();
    Row uncolored = p;
    int color = 0;
    while (!empty(uncolored)) {
      ++color;
      Row avail = uncolored;
      while (!empty(avail)) {
        std::size_t v = 0;
        for (std::size_t i = 0; i < words_; ++i)
          if (avail[i]) {
            v = i * 64 + static_cast<std::size_t>(std::countr_zero(avail[i]));
            break;
          }
        avail[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        uncolored[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        for (std::size_t i = 0; i < words_; ++i) avail[i] &= ~adj_[v][i];
        order.push_back(v);
        colors.push_back(color);
      }
    }
  }

  int color_bound(const Row& p) const {
    std::vector<std::size_t> order;
    std::vector<int> colors;
    color_sort(p, order, colors);
    return colors.empty() ? 0 : colors.back();
  }

  void expand(int size, Row p) {
    ++nodes_;
    std::vector<std::size_t> order;
    std::vector<int> colors;
    color_sort(p, order, colors);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (size + colors[idx] <= best_) return;
      const std::size_t v = order[idx];
      Row next(words_);
      for (std::size_t i = 0; i < words_; ++i) next[i] = p[i] & adj_[v][i];
      if (empty(next)) best_ = std::max(best_, size + 1);
      else expand(size + 1, std::move(next));
      p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }

  bool lex(Row p) {
    ++nodes_;
    if (static_cast<int>(chosen_.size()) == target_) return true;
    while (!empty(p)) {
      if (static_cast<int>(chosen_.size()) + color_bound(p) < target_) return false;
      std::size_t v = 0;
      for (std::size_t i = 0; i < words_; ++i)
        if (p[i]) {
          v = i * 64 + static_cast<std::size_t>(std::countr_zero(p[i]));
          break;
        }
      p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
      Row next(words_);
      for (std::size_t i = 0; i < words_; ++i) next[i] = p[i] & adj_[v][i];
      chosen_.push_back(v);
      if (lex(std::move(next))) return true;
      chosen_.pop_back();
    }
    return static_cast<int>(chosen_.size()) == target_;
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<Row> adj_;
  int best_ = 0;
  int target_ = 0;
  std::vector<std::size_t> chosen_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ExactResult exact_m(const Graph& h, int edge_cap, std::size_t pool_cap) {
  if (h.m() > edge_cap)
    throw CapExceeded("exact search: host has " + std::to_string(h.m()) + " edges, cap is " +
                      std::to_string(edge_cap));
  if (h.m() > 30) throw CapExceeded("exact search supports at most 30 edges");
  const std::uint64_t total = std::uint64_t{1} << h.m();

  std::vector<char> connected(static_cast<std::size_t>(total), 0);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const std::uint64_t w[1] = {mask};
    connected[static_cast<std::size_t>(mask)] = is_connected_spanning(h, std::span<const std::uint64_t>(w, h.m() ? 1 : 0));
  }

  std::vector<std::uint64_t> pool;
  for (std::uint64_t mask = 1; mask < total; ++mask)
    if (connected[static_cast<std::size_t>(mask)]) pool.push_back(mask);
  if (pool.size() > pool_cap)
    throw CapExceeded("exact search: " + std::to_string(pool.size()) + " candidates exceed pool cap " +
                      std::to_string(pool_cap));

  const std::size_t p = pool.size();
  const std::size_t words = (p + 63) / 64;
  std::vector<Row> adj(p, Row(words, 0));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      if (connected[static_cast<std::size_t>(pool[i] ^ pool[j])]) {
        adj[i][j >> 6] |= std::uint64_t{1} << (j & 63);
        adj[j][i >> 6] |= std::uint64_t{1} << (i & 63);
      }

  CliqueSearch search(p, std::move(adj));
  const int omega = search.max_clique_size();
  const auto clique = search.first_clique(omega);

  ExactResult res;
  res.value = omega + 1;
  res.pool_size = p;
  res.nodes = search.nodes();
  res.witness.n = h.n();
  res.witness.edge_count = static_cast<std::size_t>(h.m());
  res.witness.members.push_back(h.empty_subset());
  for (auto idx : clique) res.witness.members.push_back(EdgeSubset::from_word(static_cast<std::size_t>(h.m()), pool[idx]));
  if (!verify_pairwise(h, res.witness).ok) throw std::logic_error("exact search witness failed verification");
  return res;
}

bool exact_matches_bounds(const Graph& h, int edge_cap) {
  const auto ex = exact_m(h, edge_cap);
  const auto rep = bound_report(h);
  const auto v = static_cast<std::uint64_t>(ex.value);
  if (rep.lower && v < *rep.lower) return false;
  if (rep.upper && v > *rep.upper) return false;
  return true;
}

}  // namespace graphcode
