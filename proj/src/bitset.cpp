#include "tha/bitset.hpp"

#include <stdexcept>

namespace tha {

Bitset Bitset::full(std::size_t size) {
  Bitset b(size);
  for (auto& w : b.words_) w = ~std::uint64_t{0};
  b.trim();
  return b;
}

Bitset Bitset::of(std::size_t size, std::initializer_list<std::size_t> indices) {
  return of(size, std::vector<std::size_t>(indices));
}

Bitset Bitset::of(std::size_t size, const std::vector<std::size_t>& indices) {
  Bitset b(size);
  for (auto i : indices) {
    if (i >= size) {
      throw std::out_of_range("element " + std::to_string(i) + " outside carrier of size " +
                              std::to_string(size));
    }
    b.set(i);
  }
  return b;
}

Bitset Bitset::from_mask(std::size_t size, std::uint64_t mask) {
  if (size > kWordBits) throw std::invalid_argument("from_mask: size exceeds 64");
  Bitset b(size);
  if (size > 0) {
    b.words_[0] = mask;
    b.trim();
  }
  return b;
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t Bitset::next(std::size_t from) const {
  if (from >= size_) return npos;
  std::size_t w = from / kWordBits;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from % kWordBits));
  while (true) {
    if (bits != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w >= words_.size()) return npos;
    bits = words_[w];
  }
}

bool Bitset::is_subset_of(const Bitset& other) const {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool Bitset::intersects(const Bitset& other) const {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

Bitset& Bitset::operator&=(const Bitset& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Bitset& Bitset::operator^=(const Bitset& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

Bitset& Bitset::operator-=(const Bitset& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

Bitset Bitset::complement() const {
  Bitset b = *this;
  for (auto& w : b.words_) w = ~w;
  b.trim();
  return b;
}

std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<std::size_t> Bitset::to_vector() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::string Bitset::to_string() const {
  std::string s = "{";
  bool first_item = true;
  for_each([&](std::size_t i) {
    if (!first_item) s += ',';
    s += std::to_string(i);
    first_item = false;
  });
  return s + "}";
}

std::size_t Bitset::hash() const {
  std::size_t h = std::hash<std::size_t>{}(size_);
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

void Bitset::check_same_size(const Bitset& other) const {
  if (size_ != other.size_) {
    throw std::invalid_argument("bitset size mismatch: " + std::to_string(size_) + " vs " +
                                std::to_string(other.size_));
  }
}

void Bitset::trim() {
  if (size_ % kWordBits != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (size_ % kWordBits)) - 1;
  }
}

}  // namespace tha
