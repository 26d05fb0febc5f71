#pragma once

// Linear algebra over GF(2) on packed bit vectors.

#include <cstddef>
#include <optional>
#include <vector>

#include "graphcode/bits.hpp"

namespace graphcode {

/// Vector in Z_2^dim; bit i is coordinate i.
using BitVec = BasicBits<struct BitVecTag>;

struct VecFamily {
  std::size_t dim = 0;
  std::vector<BitVec> vectors;

  VecFamily() = default;
  explicit VecFamily(std::size_t d, std::vector<BitVec> v = {});
  void push_back(BitVec v);
  std::size_t size() const { return vectors.size(); }
};

/// Incremental Gaussian elimination. Rows are kept fully reduced: every
/// pivot column (the row's lowest set bit) is zero in all other rows, so
/// reduction and span membership cost one pass over the rows.
class Eliminator {
 public:
  explicit Eliminator(std::size_t dim) : dim_(dim), pivot_row_(dim, -1) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }

  /// Adds v to the spanning set; true iff the rank grew.
  bool insert(const BitVec& v);
  bool in_span(const BitVec& v) const { return reduce(v).none(); }
  BitVec reduce(BitVec v) const;

  /// Smallest coordinate vector e_i outside the span, if any.
  std::optional<BitVec> unit_outside() const;
  /// Nonzero z orthogonal to every row, built from the smallest free
  /// column; absent iff the span is full.
  std::optional<BitVec> null_vector() const;

 private:
  std::size_t dim_;
  std::vector<BitVec> rows_;
  std::vector<int> pivot_row_;  // column -> row index or -1
};

std::size_t rank(const VecFamily& f);
bool is_independent(const VecFamily& f);
bool spans_full(const VecFamily& f);
std::optional<BitVec> nullspace_witness(const VecFamily& f);

/// v outside span(a) and outside span(b). Requires both spans proper.
/// Tries the smallest unit vector outside span(a), then the smallest unit
/// vector outside span(b), then their sum.
BitVec vector_outside_two_spans(const Eliminator& a, const Eliminator& b);
BitVec vector_outside_two_spans(const VecFamily& a, const VecFamily& b);

}  // namespace graphcode
