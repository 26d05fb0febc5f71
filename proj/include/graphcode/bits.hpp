#pragma once

// Fixed-length bit vectors shared by GF(2) vectors and edge subsets.
//
// BasicBits is tagged so that a GF(2) vector and an edge set are distinct
// types even though they share storage and word-level kernels. Bits beyond
// size() are always zero.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphcode/errors.hpp"
#include "graphcode/kernels.hpp"

namespace graphcode {

template <class Tag>
class BasicBits {
 public:
  BasicBits() = default;
  explicit BasicBits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BasicBits from_word(std::size_t size, std::uint64_t word) {
    BasicBits b(size);
    if (!b.words_.empty()) {
      b.words_[0] = word;
      b.trim();
    }
    return b;
  }

  static BasicBits unit(std::size_t size, std::size_t index) {
    BasicBits b(size);
    b.set(index);
    return b;
  }

  static BasicBits full(std::size_t size) {
    BasicBits b(size);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }
  /// Low 64 bits; convenient when size() <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

  std::size_t count() const { return kernels::popcount(words_); }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t lowest() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return size_;
  }

  BasicBits& operator^=(const BasicBits& o) {
    require_same_size(o);
    kernels::xor_into(words_, o.words_);
    return *this;
  }
  BasicBits& operator&=(const BasicBits& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BasicBits& operator|=(const BasicBits& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend BasicBits operator^(BasicBits a, const BasicBits& b) { return a ^= b; }
  friend BasicBits operator&(BasicBits a, const BasicBits& b) { return a &= b; }
  friend BasicBits operator|(BasicBits a, const BasicBits& b) { return a |= b; }

  BasicBits complement() const {
    BasicBits c(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  /// Parity of the bitwise AND, i.e. the GF(2) inner product.
  bool dot(const BasicBits& o) const {
    require_same_size(o);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
    return std::popcount(acc) & 1;
  }

  bool operator==(const BasicBits& o) const = default;

  /// Orders by numeric value, reading the vector as a little-endian integer.
  std::strong_ordering numeric_compare(const BasicBits& o) const {
    if (auto c = size_ <=> o.size_; c != 0) return c;
    for (std::size_t i = words_.size(); i-- > 0;)
      if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  /// Lowercase hex, most significant digit first, exactly ceil(size/4)
  /// digits ("0" for size 0). Bit 0 is the low bit of the last digit.
  std::string to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    const std::size_t nd = size_ == 0 ? 1 : (size_ + 3) / 4;
    std::string s(nd, '0');
    for (std::size_t d = 0; d < nd && d * 4 < size_; ++d) {
      const std::size_t bit = d * 4;
      unsigned v = static_cast<unsigned>((words_[bit >> 6] >> (bit & 63)) & 0xF);
      s[nd - 1 - d] = digits[v];
    }
    return s;
  }

  /// Parses lowercase or uppercase hex; leading zeros are allowed, but a
  /// set bit at or beyond `size` is rejected.
  static BasicBits from_hex(std::size_t size, std::string_view hex) {
    if (hex.empty()) throw ParseError("empty hex string");
    BasicBits b(size);
    const std::size_t nd = hex.size();
    for (std::size_t d = 0; d < nd; ++d) {
      const char c = hex[nd - 1 - d];
      unsigned v;
      if (c >= '0' && c <= '9') v = static_cast<unsigned>(c - '0');
      else if (c >= 'a' && c <= 'f') v = static_cast<unsigned>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') v = static_cast<unsigned>(c - 'A' + 10);
      else throw ParseError("invalid hex digit '" + std::string(1, c) + "'");
      for (unsigned k = 0; k < 4; ++k) {
        if (!((v >> k) & 1U)) continue;
        const std::size_t bit = d * 4 + k;
        if (bit >= size) throw ParseError("hex value has bits beyond length " + std::to_string(size));
        b.set(bit);
      }
    }
    return b;
  }

 private:
  void trim() {
    if (size_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }
  void require_same_size(const BasicBits& o) const {
    if (o.size_ != size_)
      throw HostMismatch("bit length mismatch: " + std::to_string(size_) + " vs " +
                         std::to_string(o.size_));
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace graphcode
