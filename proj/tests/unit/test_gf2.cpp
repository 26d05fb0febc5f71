#include <doctest.h>

#include <random>

#include "graphcode/gf2.hpp"
#include "oracles.hpp"

using namespace graphcode;

namespace {

BitVec v(std::size_t dim, std::uint64_t w) { return BitVec::from_word(dim, w); }

VecFamily family(std::size_t dim, std::initializer_list<std::uint64_t> ws) {
  VecFamily f(dim);
  for (auto w : ws) f.push_back(v(dim, w));
  return f;
}

}  // namespace

TEST_CASE("rank examples") {
  CHECK(rank(VecFamily(3)) == 0);
  CHECK(rank(family(3, {1, 2, 3})) == 2);
  CHECK(rank(family(3, {1, 2, 3, 4, 5, 6, 7})) == 3);
  CHECK(is_independent(family(4, {1, 2, 4, 8})));
  CHECK(spans_full(family(4, {1, 2, 4, 8})));
  CHECK_FALSE(is_independent(family(3, {1, 0})));
  CHECK_FALSE(is_independent(family(2, {1, 2, 3})));
  CHECK_THROWS_AS(family(3, {1}).push_back(v(4, 1)), HostMismatch);
}

TEST_CASE("rank agrees with span enumeration") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t dim = 1 + rng() % 12;
    const std::size_t count = rng() % 16;
    VecFamily f(dim);
    std::vector<std::uint64_t> raw;
    for (std::size_t i = 0; i < count; ++i) {
      // bias towards dependent families
      std::uint64_t w = rng() & ((std::uint64_t{1} << dim) - 1);
      if (trial % 3 == 0) w &= 0x15;
      raw.push_back(w);
      f.push_back(v(dim, w));
    }
    const auto r = oracle::span_rank(raw);
    CHECK(rank(f) == r);
    CHECK(is_independent(f) == (r == count));
    CHECK(spans_full(f) == (r == dim));
  }
}

TEST_CASE("nullspace witness") {
  const auto z0 = nullspace_witness(VecFamily(3));
  REQUIRE(z0);
  CHECK(z0->any());
  CHECK_FALSE(nullspace_witness(family(3, {1, 2, 4})));
  const auto z = nullspace_witness(family(3, {1, 2}));
  REQUIRE(z);
  CHECK(*z == v(3, 4));

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 1 + rng() % 10;
    VecFamily f(dim);
    for (std::size_t i = 0, c = rng() % 12; i < c; ++i) f.push_back(v(dim, rng() & ((1ULL << dim) - 1)));
    const auto w = nullspace_witness(f);
    CHECK(w.has_value() != spans_full(f));
    if (w) {
      CHECK(w->any());
      for (const auto& x : f.vectors) CHECK_FALSE(w->dot(x));
    }
  }
}

TEST_CASE("eliminator") {
  Eliminator el(5);
  CHECK(el.insert(v(5, 0b00110)));
  CHECK(el.insert(v(5, 0b00011)));
  CHECK_FALSE(el.insert(v(5, 0b00101)));
  CHECK(el.rank() == 2);
  CHECK(el.in_span(v(5, 0b00101)));
  CHECK_FALSE(el.in_span(v(5, 0b01000)));
  CHECK(el.unit_outside() == v(5, 0b00001));
  CHECK_FALSE(el.insert(v(5, 0)));
}

TEST_CASE("vector outside two spans") {
  CHECK(vector_outside_two_spans(VecFamily(2), VecFamily(2)) == v(2, 1));
  CHECK(vector_outside_two_spans(family(2, {1}), family(2, {2})) == v(2, 3));
  CHECK_THROWS_AS(vector_outside_two_spans(family(2, {1, 2}), VecFamily(2)), PreconditionError);

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t dim = 1 + rng() % 10;
    const std::uint64_t mask = (1ULL << dim) - 1;
    VecFamily a(dim), b(dim);
    Eliminator ea(dim), eb(dim);
    const std::size_t target_a = rng() % dim, target_b = rng() % dim;
    while (ea.rank() < target_a) {
      const auto x = v(dim, rng() & mask);
      if (ea.insert(x)) a.push_back(x);
    }
    if (trial % 4 == 0) {
      b = a;
      eb = ea;
    } else {
      while (eb.rank() < target_b) {
        const auto x = v(dim, rng() & mask);
        if (eb.insert(x)) b.push_back(x);
      }
    }
    const auto out = vector_outside_two_spans(a, b);
    auto ra = a, rb = b;
    ra.push_back(out);
    rb.push_back(out);
    CHECK(rank(ra) == rank(a) + 1);
    CHECK(rank(rb) == rank(b) + 1);
  }
}
