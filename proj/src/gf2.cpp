#include "graphcode/gf2.hpp"

#include <stdexcept>
#include <string>

namespace graphcode {

VecFamily::VecFamily(std::size_t d, std::vector<BitVec> v) : dim(d), vectors(std::move(v)) {
  for (const auto& x : vectors)
    if (x.size() != dim) throw HostMismatch("vector dimension does not match family dimension");
}

void VecFamily::push_back(BitVec v) {
  if (v.size() != dim) throw HostMismatch("vector dimension does not match family dimension");
  vectors.push_back(std::move(v));
}

BitVec Eliminator::reduce(BitVec v) const {
  if (v.size() != dim_) throw HostMismatch("vector dimension does not match eliminator");
  for (const auto& row : rows_)
    if (v.test(row.lowest())) v ^= row;
  return v;
}

bool Eliminator::insert(const BitVec& v) {
  BitVec r = reduce(v);
  if (r.none()) return false;
  const std::size_t p = r.lowest();
  for (auto& row : rows_)
    if (row.test(p)) row ^= r;
  pivot_row_[p] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::optional<BitVec> Eliminator::unit_outside() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    auto e = BitVec::unit(dim_, i);
    if (!in_span(e)) return e;
  }
  return std::nullopt;
}

std::optional<BitVec> Eliminator::null_vector() const {
  for (std::size_t j = 0; j < dim_; ++j) {
    if (pivot_row_[j] >= 0) continue;
    BitVec z = BitVec::unit(dim_, j);
    for (const auto& row : rows_)
      if (row.test(j)) z.set(row.lowest());
    return z;
  }
  return std::nullopt;
}

namespace {

Eliminator eliminate(const VecFamily& f) {
  Eliminator el(f.dim);
  for (const auto& v : f.vectors) el.insert(v);
  return el;
}

}  // namespace

std::size_t rank(const VecFamily& f) { return eliminate(f).rank(); }

bool is_independent(const VecFamily& f) { return rank(f) == f.size(); }

bool spans_full(const VecFamily& f) { return rank(f) == f.dim; }

std::optional<BitVec> nullspace_witness(const VecFamily& f) { return eliminate(f).null_vector(); }

BitVec vector_outside_two_spans(const Eliminator& a, const Eliminator& b) {
  if (a.dim() != b.dim()) throw HostMismatch("eliminators have different dimensions");
  const auto x = a.unit_outside();
  const auto y = b.unit_outside();
  if (!x || !y) throw PreconditionError("vector_outside_two_spans: a span is already full");
  BitVec v;
  if (!b.in_span(*x)) v = *x;
  else if (!a.in_span(*y)) v = *y;
  else v = *x ^ *y;  // x in span(b) and y notin span(b), so x+y notin span(b); symmetric for a
  if (a.in_span(v) || b.in_span(v)) throw std::logic_error("vector_outside_two_spans post-check failed");
  return v;
}

BitVec vector_outside_two_spans(const VecFamily& a, const VecFamily& b) {
  return vector_outside_two_spans(eliminate(a), eliminate(b));
}

}  // namespace graphcode
