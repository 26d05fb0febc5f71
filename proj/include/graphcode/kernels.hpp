#pragma once

// Word-level kernels behind bit-vector arithmetic and codeword evaluation.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant compiled with a function-level target attribute. The backend is
// picked once at first use from CPUID; GRAPHCODE_SIMD=scalar forces the
// reference path. All variants must produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace graphcode::kernels {

enum class Backend { scalar, avx2 };

/// Backend currently used by the dispatching entry points.
Backend active_backend();
/// Overrides the dispatch choice. Requesting avx2 on a CPU without it
/// falls back to scalar; the return value is the backend actually set.
Backend set_backend(Backend b);
bool avx2_available();
std::string_view backend_name(Backend b);

// dst[i] ^= src[i]
void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
// dst[i] = a[i] ^ b[i]
void xor_to(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a,
            std::span<const std::uint64_t> b);
std::size_t popcount(std::span<const std::uint64_t> words);

/// Bit e of `out` is the parity of popcount(z & vecs[e]); `out` must hold
/// ceil(vecs.size() / 64) words. Trailing bits of the last word are zeroed.
void parity_mask(std::uint64_t z, std::span<const std::uint64_t> vecs,
                 std::span<std::uint64_t> out);

namespace scalar {
void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void xor_to(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a,
            std::span<const std::uint64_t> b);
std::size_t popcount(std::span<const std::uint64_t> words);
void parity_mask(std::uint64_t z, std::span<const std::uint64_t> vecs,
                 std::span<std::uint64_t> out);
}  // namespace scalar

namespace avx2 {
void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void xor_to(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a,
            std::span<const std::uint64_t> b);
std::size_t popcount(std::span<const std::uint64_t> words);
void parity_mask(std::uint64_t z, std::span<const std::uint64_t> vecs,
                 std::span<std::uint64_t> out);
}  // namespace avx2

}  // namespace graphcode::kernels
