#include "graphcode/kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <string>

namespace graphcode::kernels {

namespace scalar {

void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

void xor_to(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a,
            std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] ^ b[i];
}

std::size_t popcount(std::span<const std::uint64_t> words) {
  std::size_t total = 0;
  for (auto w : words) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void parity_mask(std::uint64_t z, std::span<const std::uint64_t> vecs,
                 std::span<std::uint64_t> out) {
  for (auto& w : out) w = 0;
  for (std::size_t e = 0; e < vecs.size(); ++e) {
    const auto bit = static_cast<std::uint64_t>(std::popcount(z & vecs[e]) & 1);
    out[e >> 6] |= bit << (e & 63);
  }
}

}  // namespace scalar

namespace {

Backend detect() {
  if (const char* env = std::getenv("GRAPHCODE_SIMD")) {
    if (std::string(env) == "scalar") return Backend::scalar;
  }
  return avx2_available() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

bool avx2_available() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

Backend set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_available()) b = Backend::scalar;
  current().store(b, std::memory_order_relaxed);
  return b;
}

std::string_view backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  if (active_backend() == Backend::avx2) return avx2::xor_into(dst, src);
  scalar::xor_into(dst, src);
}

void xor_to(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a,
            std::span<const std::uint64_t> b) {
  if (active_backend() == Backend::avx2) return avx2::xor_to(dst, a, b);
  scalar::xor_to(dst, a, b);
}

std::size_t popcount(std::span<const std::uint64_t> words) {
  if (active_backend() == Backend::avx2) return avx2::popcount(words);
  return scalar::popcount(words);
}

void parity_mask(std::uint64_t z, std::span<const std::uint64_t> vecs,
                 std::span<std::uint64_t> out) {
  if (active_backend() == Backend::avx2) return avx2::parity_mask(z, vecs, out);
  scalar::parity_mask(z, vecs, out);
}

}  // namespace graphcode::kernels
