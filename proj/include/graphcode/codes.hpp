#pragma once

// Connectivity codes: edge-to-vector assignments, the linear codes they
// generate, and the verification paths (pairwise, via nonzero codewords,
// and via the cut-spanning condition).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graphcode/gf2.hpp"
#include "graphcode/graph.hpp"

namespace graphcode {

/// Per-edge vectors in Z_2^dim; edges may be unassigned.
class EdgeAssignment {
 public:
  EdgeAssignment() = default;
  EdgeAssignment(std::size_t edge_count, std::size_t dim) : dim_(dim), vectors_(edge_count) {}

  std::size_t dim() const { return dim_; }
  std::size_t edge_count() const { return vectors_.size(); }
  bool assigned(std::size_t e) const { return vectors_[e].has_value(); }
  const BitVec& at(std::size_t e) const { return *vectors_[e]; }
  const std::optional<BitVec>& slot(std::size_t e) const { return vectors_[e]; }
  void set(std::size_t e, BitVec v) {
    if (v.size() != dim_) throw HostMismatch("assigned vector has the wrong dimension");
    vectors_[e] = std::move(v);
  }
  void clear(std::size_t e) { vectors_[e].reset(); }
  bool total() const;
  std::size_t assigned_count() const;

  bool operator==(const EdgeAssignment&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::optional<BitVec>> vectors_;
};

/// Codes above this dimension are not materialized by code_from_assignment.
inline constexpr std::size_t kMaterializeDimCap = 20;

/// A family of edge subsets of one host. When `generator` is present the
/// code is {codeword(generator, u) : u in Z_2^dim}, with member i being
/// codeword(u = i); `members` may then be left empty (lazy).
struct ConnectivityCode {
  int n = 1;
  std::size_t edge_count = 0;
  std::vector<EdgeSubset> members;
  std::optional<EdgeAssignment> generator;

  bool lazy() const { return generator && members.empty(); }
  std::uint64_t size() const;
  EdgeSubset member(std::uint64_t i) const;
};

struct Counterexample {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> pair;  // member indices, first < second
  std::optional<BitVec> z;                                       // nonzero codeword index
  CutCertificate cut;
};

struct VerifyReport {
  bool ok = true;
  std::optional<Counterexample> counterexample;
  std::uint64_t checked = 0;
};

struct VerifyOptions {
  unsigned threads = 1;
};

/// Two u values generating the same member.
struct CodewordCollision : std::runtime_error {
  CodewordCollision(BitVec first, BitVec second);
  BitVec first;
  BitVec second;
};

/// Edges e with <u, v(e)> = 1. Requires a total assignment.
EdgeSubset codeword(const EdgeAssignment& a, const BitVec& u);

/// The linear code generated by `a` (materialized up to kMaterializeDimCap).
/// Throws CodewordCollision when two u give the same member, i.e. when the
/// assigned vectors do not span Z_2^dim.
ConnectivityCode code_from_assignment(const Graph& h, const EdgeAssignment& a);

/// Checks every pair of distinct members; the first failing pair in
/// (i, j) lexicographic order is reported with a component of the
/// difference as certificate.
VerifyReport verify_pairwise(const Graph& h, const ConnectivityCode& c);

/// Checks codeword(z) for z = 1 .. 2^dim - 1; the smallest failing z is
/// reported regardless of thread count. `checked` counts codewords up to
/// and including the failure. Requires dim <= 62.
VerifyReport verify_linear(const Graph& h, const EdgeAssignment& a, VerifyOptions opt = {});

/// Checks that the crossing vectors of every connected W, |W| <= n/2, span
/// Z_2^dim. Independent of codeword evaluation.
VerifyReport assignment_cut_condition_oracle(const Graph& h, const EdgeAssignment& a,
                                             std::size_t cap = kDefaultEnumerationCap);

struct ViolatingCut {
  BitVec z;
  CutCertificate cut;
};
/// Smallest z whose codeword is disconnected, with a component of size
/// <= n/2 of that codeword as W.
std::optional<ViolatingCut> find_violating_cut(const Graph& h, const EdgeAssignment& a,
                                               VerifyOptions opt = {});

}  // namespace graphcode
