#include "tha/order.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tha/error.hpp"

namespace tha {

BinRel BinRel::from_pairs(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  BinRel r(size);
  for (const auto& [i, j] : pairs) {
    if (i >= size || j >= size) {
      throw std::out_of_range("pair (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside carrier of size " + std::to_string(size));
    }
    r.set(i, j);
  }
  return r;
}

BinRel BinRel::identity(std::size_t size) {
  BinRel r(size);
  for (std::size_t i = 0; i < size; ++i) r.set(i, i);
  return r;
}

BinRel BinRel::full(std::size_t size) {
  BinRel r(size);
  for (auto& row : r.rows_) row = Bitset::full(size);
  return r;
}

Bitset BinRel::image(const Bitset& s) const {
  if (s.size() != size()) throw std::invalid_argument("image: set/relation size mismatch");
  Bitset out(size());
  s.for_each([&](std::size_t i) { out |= rows_[i]; });
  return out;
}

Bitset BinRel::preimage(const Bitset& s) const {
  if (s.size() != size()) throw std::invalid_argument("preimage: set/relation size mismatch");
  Bitset out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (rows_[i].intersects(s)) out.set(i);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> BinRel::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    rows_[i].for_each([&](std::size_t j) { out.emplace_back(i, j); });
  }
  return out;
}

std::size_t BinRel::count() const {
  std::size_t c = 0;
  for (const auto& row : rows_) c += row.count();
  return c;
}

bool BinRel::is_subset_of(const BinRel& other) const {
  check_size(other);
  for (std::size_t i = 0; i < size(); ++i) {
    if (!rows_[i].is_subset_of(other.rows_[i])) return false;
  }
  return true;
}

BinRel& BinRel::operator|=(const BinRel& other) {
  check_size(other);
  for (std::size_t i = 0; i < size(); ++i) rows_[i] |= other.rows_[i];
  return *this;
}

BinRel& BinRel::operator&=(const BinRel& other) {
  check_size(other);
  for (std::size_t i = 0; i < size(); ++i) rows_[i] &= other.rows_[i];
  return *this;
}

std::strong_ordering operator<=>(const BinRel& a, const BinRel& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (auto c = a.rows_[i] <=> b.rows_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void BinRel::check_size(const BinRel& other) const {
  if (size() != other.size()) {
    throw std::invalid_argument("relation size mismatch: " + std::to_string(size()) + " vs " +
                                std::to_string(other.size()));
  }
}

BinRel reflexivisation(const BinRel& r) { return r | BinRel::identity(r.size()); }

BinRel inverse(const BinRel& r) {
  BinRel out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r.row(i).for_each([&](std::size_t j) { out.set(j, i); });
  }
  return out;
}

BinRel compose(const BinRel& r, const BinRel& s) {
  if (r.size() != s.size()) {
    throw std::invalid_argument("compose: size mismatch " + std::to_string(r.size()) + " vs " +
                                std::to_string(s.size()));
  }
  BinRel out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out.row(i) = s.image(r.row(i));
  return out;
}

BinRel transitive_closure(const BinRel& r) {
  BinRel out = r;
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Bitset via = out.row(k);
    for (std::size_t i = 0; i < n; ++i) {
      if (out.test(i, k)) out.row(i) |= via;
    }
  }
  return out;
}

bool is_reflexive(const BinRel& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!r.test(i, i)) return false;
  }
  return true;
}

bool is_irreflexive(const BinRel& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.test(i, i)) return false;
  }
  return true;
}

bool is_antisymmetric(const BinRel& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (r.test(i, j) && r.test(j, i)) return false;
    }
  }
  return true;
}

bool is_transitive(const BinRel& r) { return compose(r, r).is_subset_of(r); }

bool is_partial_order(const BinRel& r) {
  return is_reflexive(r) && is_antisymmetric(r) && is_transitive(r);
}

FinPoset::FinPoset(BinRel leq) : leq_(std::move(leq)) {
  if (!is_partial_order(leq_)) throw StructureError("relation is not a partial order");
  geq_ = inverse(leq_);
}

Bitset up_down(const FinPoset& p, const Bitset& s, Direction direction) {
  if (s.size() != p.size()) {
    throw std::invalid_argument("up_down: set of size " + std::to_string(s.size()) +
                                " over poset of size " + std::to_string(p.size()));
  }
  return direction == Direction::Up ? p.up(s) : p.down(s);
}

bool is_upset(const BinRel& leq, const Bitset& s) { return leq.image(s).is_subset_of(s); }

namespace {

// Decides points in index order; choosing a point forces its up-closure in,
// rejecting it forces its down-closure out.
void collect_upsets(const BinRel& leq, const BinRel& geq, std::size_t i, const Bitset& in,
                    const Bitset& out, std::vector<Bitset>& acc) {
  const std::size_t n = leq.size();
  while (i < n && (in.test(i) || out.test(i))) ++i;
  if (i == n) {
    acc.push_back(in);
    return;
  }
  const Bitset& above = leq.row(i);
  if (!above.intersects(out)) collect_upsets(leq, geq, i + 1, in | above, out, acc);
  const Bitset& below = geq.row(i);
  if (!below.intersects(in)) collect_upsets(leq, geq, i + 1, in, out | below, acc);
}

}  // namespace

std::vector<Bitset> all_upsets(const BinRel& leq) {
  std::vector<Bitset> acc;
  const BinRel geq = inverse(leq);
  collect_upsets(leq, geq, 0, Bitset(leq.size()), Bitset(leq.size()), acc);
  std::sort(acc.begin(), acc.end());
  return acc;
}

}  // namespace tha
