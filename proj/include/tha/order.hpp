#ifndef THA_ORDER_HPP
#define THA_ORDER_HPP

// Finite binary relations and posets on carriers 0..n-1.

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "tha/bitset.hpp"

namespace tha {

/// Square boolean relation on 0..size()-1. Row i holds the successors of i.
class BinRel {
 public:
  BinRel() = default;
  explicit BinRel(std::size_t size) : rows_(size, Bitset(size)) {}

  /// Throws std::out_of_range if a pair leaves the carrier.
  static BinRel from_pairs(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  /// The diagonal relation.
  static BinRel identity(std::size_t size);
  /// The all relation.
  static BinRel full(std::size_t size);

  std::size_t size() const { return rows_.size(); }

  bool test(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  BinRel& set(std::size_t i, std::size_t j, bool value = true) {
    rows_[i].set(j, value);
    return *this;
  }

  /// R[i]
  const Bitset& row(std::size_t i) const { return rows_[i]; }
  Bitset& row(std::size_t i) { return rows_[i]; }
  /// R[S] = {y : exists x in S, x R y}
  Bitset image(const Bitset& s) const;
  /// R^-1[S] = {x : exists y in S, x R y}
  Bitset preimage(const Bitset& s) const;

  /// Pairs in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  std::size_t count() const;

  bool is_subset_of(const BinRel& other) const;
  BinRel& operator|=(const BinRel& other);
  BinRel& operator&=(const BinRel& other);
  friend BinRel operator|(BinRel a, const BinRel& b) { return a |= b; }
  friend BinRel operator&(BinRel a, const BinRel& b) { return a &= b; }

  friend bool operator==(const BinRel&, const BinRel&) = default;
  /// Canonical order: the relation read as a bitmask with bit i*n+j weighted 2^(i*n+j).
  friend std::strong_ordering operator<=>(const BinRel& a, const BinRel& b);

 private:
  void check_size(const BinRel& other) const;
  std::vector<Bitset> rows_;
};

BinRel reflexivisation(const BinRel& r);
BinRel inverse(const BinRel& r);
/// r;s = {(x,z) : exists y, x r y and y s z}. Throws std::invalid_argument on size mismatch.
BinRel compose(const BinRel& r, const BinRel& s);
/// Least transitive superset (Warshall).
BinRel transitive_closure(const BinRel& r);

bool is_reflexive(const BinRel& r);
bool is_irreflexive(const BinRel& r);
bool is_antisymmetric(const BinRel& r);
bool is_transitive(const BinRel& r);
bool is_partial_order(const BinRel& r);

/// A partial order on 0..size()-1.
class FinPoset {
 public:
  FinPoset() = default;
  /// Throws StructureError unless `leq` is reflexive, antisymmetric and transitive.
  explicit FinPoset(BinRel leq);

  std::size_t size() const { return leq_.size(); }
  const BinRel& leq() const { return leq_; }
  const BinRel& geq() const { return geq_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_.test(a, b); }

  Bitset up(const Bitset& s) const { return leq_.image(s); }
  Bitset down(const Bitset& s) const { return geq_.image(s); }

 private:
  BinRel leq_;
  BinRel geq_;
};

enum class Direction { Up, Down };

/// Up- or down-closure of `s`. Throws std::invalid_argument if `s` is not a subset of the carrier.
Bitset up_down(const FinPoset& p, const Bitset& s, Direction direction);

bool is_upset(const BinRel& leq, const Bitset& s);

/// Every upset of `leq` in ascending bitmask order.
std::vector<Bitset> all_upsets(const BinRel& leq);

}  // namespace tha

#endif
