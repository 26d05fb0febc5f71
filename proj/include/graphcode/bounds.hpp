#pragma once

// Upper and lower bounds on m(H), each with a checkable certificate.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphcode/codes.hpp"

namespace graphcode {

/// Edge sets E_1..E_s of at most t edges each, claimed to disconnect the
/// host pairwise. Validity is checked by lemma31_upper, never assumed.
struct DisconnectingFamily {
  Graph host;
  std::vector<EdgeSubset> sets;
  int t = 0;
};

/// A family whose certificate failed to validate.
struct InvalidFamily : std::invalid_argument {
  InvalidFamily(const std::string& what, std::optional<std::pair<std::size_t, std::size_t>> pair);
  std::optional<std::pair<std::size_t, std::size_t>> pair;
};

/// log2 of the bound m(H) <= 2^{k'(H)}; 0 for disconnected hosts.
int upper_from_edge_connectivity(const Graph& h);

/// Validates (i) every |E_i| <= t, (ii) H - (E_i u E_j) disconnected for all
/// i < j, and returns t if s > (2^t + 1) 2^{t-1}, nullopt otherwise. Throws
/// InvalidFamily on a failed certificate.
std::optional<int> lemma31_upper(const Graph& h, const DisconnectingFamily& fam);

/// On K_t x C_s: E_i = the t edges between cycle layers i and i+1.
DisconnectingFamily rung_family(int t, int s);
/// On C_s^(2): for cycle edge f = {i, i+1} the three edges {i, i+1},
/// {i-1, i+1}, {i, i+2}. Requires s >= 7.
DisconnectingFamily squared_cycle_family(int s);
/// On H(s, k): the s connecting matchings, t = k.
DisconnectingFamily clique_chain_family(int s, int k);

/// 2 floor(n / (2(n-1) + 1 - 3n/2)) for a cubic graph on n vertices.
/// Requires n even, n >= 4.
int plotkin_cubic_upper(int n);

struct TreePackingBound {
  int log2_bound = 0;
  ConnectivityCode code;
};
/// floor(k'(h)/2), certified by the verified tree-packing code.
TreePackingBound lower_from_tree_packing(const Graph& h);

struct SpectralCheck {
  bool holds = false;
  double lambda = 0.0;
  double threshold = 0.0;  // d - 2 c log2 d
};
/// lambda_2 <= d - 2 c log2 d for a d-regular host. Advisory only.
SpectralCheck spectral_expansion_check(const Graph& h, double c);
bool spectral_expansion_lower(const Graph& h, double c);

struct BoundEntry {
  std::string kind;
  bool is_upper = true;
  std::optional<int> value_log2;       // bound on log2 m(H), when a power of two
  std::optional<std::uint64_t> value;  // bound on m(H) itself
  std::string certificate;
};

struct BoundReport {
  std::optional<int> lower_log2;
  std::optional<int> upper_log2;
  std::optional<std::uint64_t> lower;  // m(H) >= lower
  std::optional<std::uint64_t> upper;  // m(H) <= upper
  std::vector<BoundEntry> entries;
  std::optional<std::uint64_t> exact;
};

enum class FamilyMode { none, auto_detect, given };

struct BoundOptions {
  FamilyMode family_mode = FamilyMode::auto_detect;
  std::optional<DisconnectingFamily> family;  // for FamilyMode::given
  /// A constructed assignment; contributes 2^dim if verify_linear accepts.
  std::optional<EdgeAssignment> assignment;
  bool tree_packing = true;
  bool plotkin = true;
  /// Run the exact search when m <= exact_edge_cap.
  bool run_exact = false;
  int exact_edge_cap = 16;
  std::optional<double> spectral_c;
  unsigned threads = 1;
};

/// Recognizes hosts produced verbatim by cycle, rung_family,
/// squared_cycle_family or clique_chain_family and returns that family.
std::optional<DisconnectingFamily> detect_family(const Graph& h);

BoundReport bound_report(const Graph& h, const BoundOptions& options = {});

}  // namespace graphcode
