#include "graphcode/codes.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "graphcode/kernels.hpp"

namespace graphcode {

bool EdgeAssignment::total() const {
  return std::all_of(vectors_.begin(), vectors_.end(), [](const auto& v) { return v.has_value(); });
}

std::size_t EdgeAssignment::assigned_count() const {
  return static_cast<std::size_t>(
      std::count_if(vectors_.begin(), vectors_.end(), [](const auto& v) { return v.has_value(); }));
}

CodewordCollision::CodewordCollision(BitVec a, BitVec b)
    : std::runtime_error("codeword collision between u=" + a.to_hex() + " and u=" + b.to_hex()),
      first(std::move(a)),
      second(std::move(b)) {}

std::uint64_t ConnectivityCode::size() const {
  if (lazy()) return std::uint64_t{1} << generator->dim();
  return members.size();
}

EdgeSubset ConnectivityCode::member(std::uint64_t i) const {
  if (!lazy()) return members.at(static_cast<std::size_t>(i));
  return codeword(*generator, BitVec::from_word(generator->dim(), i));
}

namespace {

void require_total(const EdgeAssignment& a) {
  if (!a.total()) throw PreconditionError("operation needs a total assignment");
}

void require_host(const Graph& h, const EdgeAssignment& a) {
  if (a.edge_count() != static_cast<std::size_t>(h.m()))
    throw HostMismatch("assignment edge count does not match host");
}

// Evaluates codewords of a total assignment with dim <= 64 using the
// packed-word kernels.
class CodewordEvaluator {
 public:
  explicit CodewordEvaluator(const EdgeAssignment& a) : dim_(a.dim()), words_((a.edge_count() + 63) / 64) {
    packed_.reserve(a.edge_count());
    for (std::size_t e = 0; e < a.edge_count(); ++e) packed_.push_back(a.at(e).low_word());
    // step_[t] = codeword(2^{t+1} - 1) = codeword(z) ^ codeword(z + 1) when
    // t is the number of trailing zeros of z + 1.
    step_.resize(dim_);
    for (std::size_t t = 0; t < dim_; ++t) {
      step_[t].resize(words_);
      const std::uint64_t u = t + 1 >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (t + 1)) - 1;
      kernels::parity_mask(u, packed_, step_[t]);
    }
  }

  std::size_t words() const { return words_; }
  void evaluate(std::uint64_t z, std::span<std::uint64_t> out) const { kernels::parity_mask(z, packed_, out); }
  // Advances out from codeword(z) to codeword(z + 1).
  void advance(std::uint64_t z, std::span<std::uint64_t> out) const {
    kernels::xor_into(out, step_[static_cast<std::size_t>(std::countr_zero(z + 1))]);
  }

 private:
  std::size_t dim_;
  std::size_t words_;
  std::vector<std::uint64_t> packed_;
  std::vector<std::vector<std::uint64_t>> step_;
};

CutCertificate certificate_for(const Graph& h, const EdgeSubset& disconnected) {
  return cut_edges(h, small_component(h, disconnected));
}

// Smallest z in [1, limit) whose codeword is disconnected, or 0.
std::uint64_t first_bad_codeword(const Graph& h, const EdgeAssignment& a, unsigned threads) {
  const std::uint64_t limit = std::uint64_t{1} << a.dim();
  if (a.dim() > 64) throw CapExceeded("codeword enumeration beyond dimension 64");
  const CodewordEvaluator ev(a);
  constexpr std::uint64_t kChunk = 4096;
  std::atomic<std::uint64_t> next_chunk{1};
  std::atomic<std::uint64_t> best{0};

  auto worker = [&] {
    std::vector<std::uint64_t> buf(ev.words());
    for (;;) {
      const std::uint64_t start = next_chunk.fetch_add(kChunk);
      if (start >= limit) return;
      const std::uint64_t b = best.load();
      if (b != 0 && start > b) return;
      const std::uint64_t end = std::min(limit, start + kChunk);
      ev.evaluate(start, buf);
      for (std::uint64_t z = start; z < end; ++z) {
        if (z != start) ev.advance(z - 1, buf);
        if (!is_connected_spanning(h, buf)) {
          std::uint64_t cur = best.load();
          while ((cur == 0 || z < cur) && !best.compare_exchange_weak(cur, z)) {
          }
          return;
        }
      }
    }
  };

  const unsigned t = std::max(1U, threads);
  if (t == 1 || limit <= kChunk) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < t; ++i) pool.emplace_back(worker);
  }
  return best.load();
}

}  // namespace

EdgeSubset codeword(const EdgeAssignment& a, const BitVec& u) {
  require_total(a);
  if (u.size() != a.dim()) throw HostMismatch("u has the wrong dimension");
  EdgeSubset out(a.edge_count());
  if (a.dim() <= 64) {
    std::vector<std::uint64_t> packed;
    packed.reserve(a.edge_count());
    for (std::size_t e = 0; e < a.edge_count(); ++e) packed.push_back(a.at(e).low_word());
    kernels::parity_mask(u.low_word(), packed, out.mutable_words());
    return out;
  }
  for (std::size_t e = 0; e < a.edge_count(); ++e)
    if (u.dot(a.at(e))) out.set(e);
  return out;
}

ConnectivityCode code_from_assignment(const Graph& h, const EdgeAssignment& a) {
  require_host(h, a);
  require_total(a);
  Eliminator el(a.dim());
  for (std::size_t e = 0; e < a.edge_count(); ++e) el.insert(a.at(e));
  // codeword(u) = codeword(u') iff u + u' is orthogonal to every v(e).
  if (auto z = el.null_vector()) throw CodewordCollision(BitVec(a.dim()), *z);

  ConnectivityCode c;
  c.n = h.n();
  c.edge_count = a.edge_count();
  c.generator = a;
  if (a.dim() <= kMaterializeDimCap) {
    const std::uint64_t count = std::uint64_t{1} << a.dim();
    c.members.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t u = 0; u < count; ++u) c.members.push_back(codeword(a, BitVec::from_word(a.dim(), u)));
  }
  return c;
}

VerifyReport verify_pairwise(const Graph& h, const ConnectivityCode& c) {
  if (c.edge_count != static_cast<std::size_t>(h.m()))
    throw HostMismatch("code edge count does not match host");
  VerifyReport rep;
  const std::uint64_t count = c.size();
  std::vector<EdgeSubset> cache;
  if (c.lazy()) {
    cache.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t i = 0; i < count; ++i) cache.push_back(c.member(i));
  }
  const auto& mem = c.lazy() ? cache : c.members;
  EdgeSubset diff(c.edge_count);
  for (std::size_t i = 0; i < mem.size(); ++i) {
    for (std::size_t j = i + 1; j < mem.size(); ++j) {
      ++rep.checked;
      kernels::xor_to(diff.mutable_words(), mem[i].words(), mem[j].words());
      if (!is_connected_spanning(h, diff)) {
        rep.ok = false;
        rep.counterexample = Counterexample{std::pair{std::uint64_t{i}, std::uint64_t{j}}, std::nullopt,
                                            certificate_for(h, diff)};
        return rep;
      }
    }
  }
  return rep;
}

VerifyReport verify_linear(const Graph& h, const EdgeAssignment& a, VerifyOptions opt) {
  require_host(h, a);
  require_total(a);
  if (a.dim() > 62) throw CapExceeded("verify_linear supports dimension <= 62");
  VerifyReport rep;
  const std::uint64_t bad = first_bad_codeword(h, a, opt.threads);
  if (bad == 0) {
    rep.checked = (std::uint64_t{1} << a.dim()) - 1;
    return rep;
  }
  rep.ok = false;
  rep.checked = bad;
  BitVec z = BitVec::from_word(a.dim(), bad);
  auto cw = codeword(a, z);
  rep.counterexample = Counterexample{std::nullopt, std::move(z), certificate_for(h, cw)};
  return rep;
}

VerifyReport assignment_cut_condition_oracle(const Graph& h, const EdgeAssignment& a, std::size_t cap) {
  require_host(h, a);
  require_total(a);
  VerifyReport rep;
  std::vector<char> in(static_cast<std::size_t>(h.n()), 0);
  rep.checked = for_each_connected_subset(
      h, h.n() / 2,
      [&](std::span<const int> w) {
        for (int v : w) in[static_cast<std::size_t>(v)] = 1;
        Eliminator el(a.dim());
        for (int v : w)
          for (const auto& inc : h.incident(v))
            if (!in[static_cast<std::size_t>(inc.neighbor)]) el.insert(a.at(static_cast<std::size_t>(inc.edge)));
        for (int v : w) in[static_cast<std::size_t>(v)] = 0;
        if (el.full()) return true;
        rep.ok = false;
        rep.counterexample = Counterexample{std::nullopt, el.null_vector(), cut_edges(h, w)};
        return false;
      },
      cap);
  return rep;
}

std::optional<ViolatingCut> find_violating_cut(const Graph& h, const EdgeAssignment& a, VerifyOptions opt) {
  auto rep = verify_linear(h, a, opt);
  if (rep.ok) return std::nullopt;
  return ViolatingCut{std::move(*rep.counterexample->z), std::move(rep.counterexample->cut)};
}

}  // namespace graphcode
