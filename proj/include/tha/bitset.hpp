#ifndef THA_BITSET_HPP
#define THA_BITSET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace tha {

/// Fixed-size set of indices 0..size()-1 stored as 64-bit words.
///
/// Every binary operation requires both operands to have the same size.
/// Sets of up to 128 elements live inline, so the per-frame work in the
/// enumeration sweeps never touches the heap. Ordering compares the sets as
/// unsigned integers (bit i has weight 2^i), which is the canonical
/// "ascending bitmask" order used throughout the library.
class Bitset {
 public:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  static Bitset full(std::size_t size);
  /// Throws std::out_of_range if an index is >= size.
  static Bitset of(std::size_t size, std::initializer_list<std::size_t> indices);
  static Bitset of(std::size_t size, const std::vector<std::size_t>& indices);
  /// Low `size` bits of `mask`; size must be <= 64.
  static Bitset from_mask(std::size_t size, std::uint64_t mask);

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  Bitset& set(std::size_t i) {
    words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
    return *this;
  }
  Bitset& set(std::size_t i, bool value) { return value ? set(i) : reset(i); }
  Bitset& reset(std::size_t i) {
    words_[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
    return *this;
  }

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }
  bool all() const { return count() == size_; }

  /// Index of the first member at or after `from`, or npos.
  std::size_t next(std::size_t from) const;
  std::size_t first() const { return next(0); }

  bool is_subset_of(const Bitset& other) const;
  bool intersects(const Bitset& other) const;

  Bitset& operator&=(const Bitset& other);
  Bitset& operator|=(const Bitset& other);
  Bitset& operator^=(const Bitset& other);
  /// Set difference.
  Bitset& operator-=(const Bitset& other);
  Bitset complement() const;

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }
  Bitset operator~() const { return complement(); }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b);

  std::vector<std::size_t> to_vector() const;
  /// Low 64 bits; the remaining words are ignored.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }
  /// "{0,2,5}"
  std::string to_string() const;

  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const;

 private:
  static std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }
  void check_same_size(const Bitset& other) const;
  void trim();

  std::size_t size_ = 0;
  boost::container::small_vector<std::uint64_t, 2> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace tha

#endif
