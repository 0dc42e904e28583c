#include "tha/enumerate.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <stdexcept>

namespace tha {

namespace {

// Adds point n-1 to a poset on n-1 points, below the upset `above` and above
// the downset `below`.
BinRel extend(const BinRel& p, const Bitset& below, const Bitset& above) {
  const std::size_t m = p.size();
  BinRel out(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    p.row(i).for_each([&](std::size_t j) { out.set(i, j); });
  }
  out.set(m, m);
  below.for_each([&](std::size_t i) { out.set(i, m); });
  above.for_each([&](std::size_t j) { out.set(m, j); });
  return out;
}

}  // namespace

std::vector<BinRel> labeled_posets(std::size_t n) {
  std::vector<BinRel> level{BinRel(0)};
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<BinRel> next;
    for (const auto& p : level) {
      const BinRel geq = inverse(p);
      const auto ups = all_upsets(p);
      const auto downs = all_upsets(geq);
      for (const auto& below : downs) {
        for (const auto& above : ups) {
          if (below.intersects(above)) continue;
          // transitivity through the new point: every d in below must be under every u in above
          bool ok = true;
          below.for_each([&](std::size_t d) {
            if (!above.is_subset_of(p.row(d))) ok = false;
          });
          if (ok) next.push_back(extend(p, below, above));
        }
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

TransitEnumerator::TransitEnumerator(std::size_t n) : n_(n) {
  if (n > kMaxPoints) throw std::invalid_argument("transit enumeration supports at most 6 points");
  posets_ = labeled_posets(n);
}

TemporalTransit TransitEnumerator::at(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("transit index out of range");
  BinRel r = posets_[i >> n_];
  const std::size_t loops = i & ((std::size_t{1} << n_) - 1);
  for (std::size_t x = 0; x < n_; ++x) r.set(x, x, (loops >> x) & 1U);
  return TemporalTransit(std::move(r));
}

const std::vector<std::size_t>& TransitEnumerator::rooted() const {
  std::call_once(rooted_once_, [this] {
    for (std::size_t i = 0; i < size(); ++i) {
      if (is_z_rooted(at(i))) rooted_.push_back(i);
    }
  });
  return rooted_;
}

const TransitEnumerator& transit_enumerator(std::size_t n) {
  static std::mutex mutex;
  static std::array<std::unique_ptr<TransitEnumerator>, TransitEnumerator::kMaxPoints + 1> cache;
  if (n > TransitEnumerator::kMaxPoints) throw std::invalid_argument("transit enumeration supports at most 6 points");
  std::lock_guard lock(mutex);
  if (!cache[n]) cache[n] = std::make_unique<TransitEnumerator>(n);
  return *cache[n];
}

std::vector<TemporalTransit> enumerate_transits(std::size_t n, bool rooted_only) {
  const TransitEnumerator& e = transit_enumerator(n);
  std::vector<TemporalTransit> out;
  if (rooted_only) {
    for (std::size_t i : e.rooted()) out.push_back(e.at(i));
  } else {
    for (std::size_t i = 0; i < e.size(); ++i) out.push_back(e.at(i));
  }
  return out;
}

}  // namespace tha
