#include <doctest.h>

#include <random>
#include <vector>

#include "graphcode/bits.hpp"
#include "graphcode/kernels.hpp"

using namespace graphcode;

namespace {

std::vector<std::uint64_t> random_words(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) x = rng();
  return w;
}

struct BackendGuard {
  kernels::Backend saved = kernels::active_backend();
  ~BackendGuard() { kernels::set_backend(saved); }
};

}  // namespace

TEST_CASE("scalar and avx2 kernels agree bit for bit") {
  if (!kernels::avx2_available()) {
    MESSAGE("AVX2 not available; equivalence is vacuous on this CPU");
    return;
  }
  std::mt19937_64 rng(7);
  for (std::size_t n = 0; n < 70; ++n) {
    const auto a = random_words(n, rng);
    const auto b = random_words(n, rng);

    auto d1 = a, d2 = a;
    kernels::scalar::xor_into(d1, b);
    kernels::avx2::xor_into(d2, b);
    CHECK(d1 == d2);

    std::vector<std::uint64_t> t1(n), t2(n);
    kernels::scalar::xor_to(t1, a, b);
    kernels::avx2::xor_to(t2, a, b);
    CHECK(t1 == t2);

    CHECK(kernels::scalar::popcount(a) == kernels::avx2::popcount(a));

    for (int trial = 0; trial < 4; ++trial) {
      const std::uint64_t z = rng() >> (rng() % 64);
      const std::size_t out_words = (n + 63) / 64;
      std::vector<std::uint64_t> p1(out_words, ~0ULL), p2(out_words, 0x5555ULL);
      kernels::scalar::parity_mask(z, a, p1);
      kernels::avx2::parity_mask(z, a, p2);
      CHECK(p1 == p2);
    }
  }
}

TEST_CASE("parity_mask matches the definition") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 5u, 63u, 64u, 65u, 200u}) {
    const auto vecs = random_words(n, rng);
    const std::uint64_t z = rng();
    std::vector<std::uint64_t> out((n + 63) / 64);
    kernels::parity_mask(z, vecs, out);
    for (std::size_t e = 0; e < n; ++e)
      CHECK(((out[e / 64] >> (e % 64)) & 1U) == static_cast<unsigned>(std::popcount(z & vecs[e]) & 1));
    if (n % 64) CHECK((out.back() >> (n % 64)) == 0);
  }
}

TEST_CASE("backend selection") {
  BackendGuard guard;
  CHECK(kernels::set_backend(kernels::Backend::scalar) == kernels::Backend::scalar);
  CHECK(kernels::active_backend() == kernels::Backend::scalar);
  const auto got = kernels::set_backend(kernels::Backend::avx2);
  CHECK(got == (kernels::avx2_available() ? kernels::Backend::avx2 : kernels::Backend::scalar));
  CHECK(kernels::backend_name(kernels::Backend::scalar) == "scalar");
  CHECK(kernels::backend_name(kernels::Backend::avx2) == "avx2");
}

TEST_CASE("bit vector results do not depend on the backend") {
  BackendGuard guard;
  std::mt19937_64 rng(3);
  using Bits = BasicBits<struct TestTag>;
  for (std::size_t size : {1u, 64u, 130u, 1000u}) {
    Bits a(size), b(size);
    for (std::size_t i = 0; i < size; ++i) {
      if (rng() & 1) a.set(i);
      if (rng() & 1) b.set(i);
    }
    kernels::set_backend(kernels::Backend::scalar);
    const auto x1 = a ^ b;
    const auto c1 = x1.count();
    kernels::set_backend(kernels::Backend::avx2);
    const auto x2 = a ^ b;
    CHECK(x1 == x2);
    CHECK(c1 == x2.count());
  }
}
