#include "graphcode/kernels.hpp"

#include <bit>

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#include <immintrin.h>
#define GRAPHCODE_HAVE_AVX2_TARGET 1
#define GRAPHCODE_AVX2 __attribute__((target("avx2")))
#else
#define GRAPHCODE_HAVE_AVX2_TARGET 0
#endif

namespace graphcode::kernels::avx2 {

#if GRAPHCODE_HAVE_AVX2_TARGET

GRAPHCODE_AVX2 void xor_into(std::span<std::uint64_t> dst,
                             std::span<const std::uint64_t> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
    _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

GRAPHCODE_AVX2 void xor_to(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a,
                           std::span<const std::uint64_t> b) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const auto va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const auto vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), _mm256_xor_si256(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] ^ b[i];
}

namespace {

// Per-byte popcount via nibble lookup, summed into 64-bit lanes.
GRAPHCODE_AVX2 inline __m256i popcount_lanes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

// Moves the parity of each 64-bit lane into bit 63 of that lane.
GRAPHCODE_AVX2 inline __m256i fold_parity_high(__m256i x) {
  x = _mm256_xor_si256(x, _mm256_slli_epi64(x, 32));
  x = _mm256_xor_si256(x, _mm256_slli_epi64(x, 16));
  x = _mm256_xor_si256(x, _mm256_slli_epi64(x, 8));
  x = _mm256_xor_si256(x, _mm256_slli_epi64(x, 4));
  x = _mm256_xor_si256(x, _mm256_slli_epi64(x, 2));
  x = _mm256_xor_si256(x, _mm256_slli_epi64(x, 1));
  return x;
}

}  // namespace

GRAPHCODE_AVX2 std::size_t popcount(std::span<const std::uint64_t> words) {
  const std::size_t n = words.size();
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    const auto v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words.data() + i));
    acc = _mm256_add_epi64(acc, popcount_lanes(v));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(words[i]));
  return total;
}

GRAPHCODE_AVX2 void parity_mask(std::uint64_t z, std::span<const std::uint64_t> vecs,
                                std::span<std::uint64_t> out) {
  for (auto& w : out) w = 0;
  const std::size_t n = vecs.size();
  const __m256i zz = _mm256_set1_epi64x(static_cast<long long>(z));
  std::size_t e = 0;
  for (; e + 4 <= n; e += 4) {
    const auto v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(vecs.data() + e));
    const auto p = fold_parity_high(_mm256_and_si256(v, zz));
    const auto bits = static_cast<std::uint64_t>(_mm256_movemask_pd(_mm256_castsi256_pd(p)));
    // e is a multiple of 4, so the nibble never straddles a word.
    out[e >> 6] |= bits << (e & 63);
  }
  for (; e < n; ++e) {
    const auto bit = static_cast<std::uint64_t>(std::popcount(z & vecs[e]) & 1);
    out[e >> 6] |= bit << (e & 63);
  }
}

#else

void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  scalar::xor_into(dst, src);
}
void xor_to(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a,
            std::span<const std::uint64_t> b) {
  scalar::xor_to(dst, a, b);
}
std::size_t popcount(std::span<const std::uint64_t> words) { return scalar::popcount(words); }
void parity_mask(std::uint64_t z, std::span<const std::uint64_t> vecs,
                 std::span<std::uint64_t> out) {
  scalar::parity_mask(z, vecs, out);
}

#endif

}  // namespace graphcode::kernels::avx2
