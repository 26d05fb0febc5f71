#include "graphcode/bounds.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "graphcode/construct.hpp"
#include "graphcode/exact.hpp"
#include "graphcode/generators.hpp"

namespace graphcode {

InvalidFamily::InvalidFamily(const std::string& what, std::optional<std::pair<std::size_t, std::size_t>> p)
    : std::invalid_argument(what), pair(p) {}

int upper_from_edge_connectivity(const Graph& h) { return edge_connectivity(h); }

std::optional<int> lemma31_upper(const Graph& h, const DisconnectingFamily& fam) {
  const int t = fam.t;
  if (t < 0 || t > 30) throw InvalidFamily("family size bound t out of range", std::nullopt);
  for (std::size_t i = 0; i < fam.sets.size(); ++i) {
    if (fam.sets[i].size() != static_cast<std::size_t>(h.m()))
      throw HostMismatch("family set does not match host edge count");
    if (fam.sets[i].count() > static_cast<std::size_t>(t))
      throw InvalidFamily("set " + std::to_string(i) + " has more than t edges", std::nullopt);
  }
  EdgeSubset keep = h.empty_subset();
  for (std::size_t i = 0; i < fam.sets.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.sets.size(); ++j) {
      keep = (fam.sets[i] | fam.sets[j]).complement();
      if (is_connected_spanning(h, keep))
        throw InvalidFamily("union of sets " + std::to_string(i) + " and " + std::to_string(j) +
                                " does not disconnect the host",
                            std::pair{i, j});
    }
  }
  const auto s = static_cast<long long>(fam.sets.size());
  const long long threshold = ((1LL << t) + 1) * (1LL << t) / 2;  // (2^t + 1) 2^{t-1}
  if (s > threshold) return t;
  return std::nullopt;
}

DisconnectingFamily rung_family(int t, int s) {
  if (t < 1 || s < 3) throw PreconditionError("rung_family needs t >= 1 and s >= 3");
  DisconnectingFamily fam{cartesian_product(complete_graph(t), cycle(s)), {}, t};
  // Layer edges come from the first t * s ids: copy a of C_s, edge i joins
  // (a, i) and (a, i+1).
  for (int i = 0; i < s; ++i) {
    EdgeSubset e = fam.host.empty_subset();
    for (int a = 0; a < t; ++a) e.set(static_cast<std::size_t>(a * s + i));
    fam.sets.push_back(std::move(e));
  }
  return fam;
}

DisconnectingFamily squared_cycle_family(int s) {
  if (s < 7) throw PreconditionError("squared_cycle_family needs s >= 7");
  DisconnectingFamily fam{cycle_power(s, 2), {}, 3};
  // cycle_power: edge i joins (i, i+1), edge s + i joins (i, i+2).
  for (int i = 0; i < s; ++i) {
    EdgeSubset e = fam.host.empty_subset();
    e.set(static_cast<std::size_t>(i));
    e.set(static_cast<std::size_t>(s + (i - 1 + s) % s));
    e.set(static_cast<std::size_t>(s + i));
    fam.sets.push_back(std::move(e));
  }
  return fam;
}

DisconnectingFamily clique_chain_family(int s, int k) {
  DisconnectingFamily fam{clique_chain(s, k), {}, k};
  for (int i = 0; i < s; ++i) {
    EdgeSubset e = fam.host.empty_subset();
    const int start = clique_chain_matching_start(s, k, i);
    for (int j = 0; j < k; ++j) e.set(static_cast<std::size_t>(start + j));
    fam.sets.push_back(std::move(e));
  }
  return fam;
}

int plotkin_cubic_upper(int n) {
  if (n < 4 || n % 2 != 0) throw PreconditionError("plotkin_cubic_upper needs even n >= 4");
  // 2(n-1) + 1 - 3n/2 = n/2 - 1 for even n.
  const int denom = 2 * (n - 1) + 1 - 3 * n / 2;
  return 2 * (n / denom);
}

TreePackingBound lower_from_tree_packing(const Graph& h) {
  auto code = tree_packing_code(h);
  const int k = code.generator ? static_cast<int>(code.generator->dim()) : 0;
  return {k, std::move(code)};
}

SpectralCheck spectral_expansion_check(const Graph& h, double c) {
  const auto st = graph_stats(h);
  if (!st.is_regular) throw PreconditionError("spectral check needs a regular host");
  const double d = st.min_degree;
  SpectralCheck r;
  r.lambda = second_eigenvalue(h);
  r.threshold = d - 2.0 * c * std::log2(d);
  r.holds = r.lambda <= r.threshold + kEigenTolerance;
  return r;
}

bool spectral_expansion_lower(const Graph& h, double c) { return spectral_expansion_check(h, c).holds; }

std::optional<DisconnectingFamily> detect_family(const Graph& h) {
  const int n = h.n();
  if (n >= 3 && h.m() == n && h == cycle(n)) return rung_family(1, n);
  if (n >= 7 && h.m() == 2 * n && h == cycle_power(n, 2)) return squared_cycle_family(n);
  for (int t = 2; t <= n / 3; ++t) {
    if (n % t != 0) continue;
    const int s = n / t;
    if (h.m() != t * s + s * t * (t - 1) / 2) continue;
    if (h == cartesian_product(complete_graph(t), cycle(s))) return rung_family(t, s);
  }
  for (int k = 1; 2 * k + 1 <= n / 3; ++k) {
    const int q = 2 * k + 1;
    if (n % q != 0) continue;
    const int s = n / q;
    if (h.m() != s * q * (q - 1) / 2 + s * k) continue;
    if (h == clique_chain(s, k)) return clique_chain_family(s, k);
  }
  return std::nullopt;
}

namespace {

std::optional<std::uint64_t> pow2(int e) {
  if (e < 0 || e >= 64) return std::nullopt;
  return std::uint64_t{1} << e;
}

int floor_log2(std::uint64_t v) { return 63 - std::countl_zero(v); }
int ceil_log2(std::uint64_t v) { return v <= 1 ? 0 : 64 - std::countl_zero(v - 1); }

}  // namespace

BoundReport bound_report(const Graph& h, const BoundOptions& opt) {
  BoundReport rep;
  auto add = [&](BoundEntry e) { rep.entries.push_back(std::move(e)); };

  const int kp = edge_connectivity(h);
  {
    std::ostringstream cert;
    const auto cut = h.n() >= 2 ? global_min_cut(h) : MinCut{};
    cert << "min cut of size " << kp << " with side of " << cut.side.size() << " vertices";
    add({"edge_connectivity", true, kp, pow2(kp), cert.str()});
  }

  std::optional<DisconnectingFamily> fam;
  if (opt.family_mode == FamilyMode::auto_detect) fam = detect_family(h);
  else if (opt.family_mode == FamilyMode::given) fam = opt.family;
  if (fam) {
    const auto t = lemma31_upper(h, *fam);
    std::ostringstream cert;
    cert << "disconnecting family: s=" << fam->sets.size() << " sets of <= " << fam->t
         << " edges, all pairwise unions disconnect";
    if (!t) cert << "; s does not exceed (2^t+1)2^(t-1)";
    add({"disconnecting_family", true, t, t ? pow2(*t) : std::nullopt, cert.str()});
  }

  const auto st = graph_stats(h);
  if (opt.plotkin && st.is_regular && st.min_degree == 3 && h.n() >= 4) {
    const int p = plotkin_cubic_upper(h.n());
    add({"plotkin_cubic", true, std::nullopt, static_cast<std::uint64_t>(p),
         "codewords of a cubic graph differ in >= n-1 of 3n/2 edges"});
  }

  if (opt.tree_packing && is_connected(h)) {
    const auto tp = lower_from_tree_packing(h);
    add({"tree_packing", false, tp.log2_bound, pow2(tp.log2_bound),
         std::to_string(tp.log2_bound) + " edge-disjoint spanning trees; union code verified"});
  }

  if (opt.assignment) {
    const auto vr = verify_linear(h, *opt.assignment, {opt.threads});
    const int dim = static_cast<int>(opt.assignment->dim());
    if (vr.ok)
      add({"linear_assignment", false, dim, pow2(dim),
           "verify_linear accepted all " + std::to_string(vr.checked) + " nonzero codewords"});
    else
      add({"linear_assignment", false, std::nullopt, std::nullopt,
           "rejected: codeword z=" + vr.counterexample->z->to_hex() + " is disconnected"});
  }

  if (opt.run_exact && h.m() <= opt.exact_edge_cap) {
    const auto ex = exact_m(h, opt.exact_edge_cap);
    const auto v = static_cast<std::uint64_t>(ex.value);
    const std::optional<int> lg = std::has_single_bit(v) ? std::optional<int>(floor_log2(v)) : std::nullopt;
    add({"exact_search", true, lg, v, "exhaustive clique search; witness verified"});
    add({"exact_search", false, lg, v, "exhaustive clique search; witness verified"});
  }

  if (opt.spectral_c && st.is_regular && h.n() >= 2 && st.min_degree >= 2) {
    const auto sc = spectral_expansion_check(h, *opt.spectral_c);
    std::ostringstream cert;
    cert.precision(12);
    cert << "lambda2=" << sc.lambda << (sc.holds ? " <= " : " > ") << sc.threshold << " (advisory)";
    add({"spectral_expansion", false, std::nullopt, std::nullopt, cert.str()});
  }

  for (const auto& e : rep.entries) {
    if (!e.value) continue;
    if (e.is_upper) {
      if (!rep.upper || *e.value < *rep.upper) rep.upper = e.value;
    } else if (!rep.lower || *e.value > *rep.lower) {
      rep.lower = e.value;
    }
  }
  if (rep.lower) rep.lower_log2 = floor_log2(*rep.lower);
  if (rep.upper) rep.upper_log2 = ceil_log2(*rep.upper);
  if (rep.lower && rep.upper && *rep.lower == *rep.upper) rep.exact = *rep.lower;
  return rep;
}

}  // namespace graphcode
