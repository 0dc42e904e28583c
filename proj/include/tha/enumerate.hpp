#ifndef THA_ENUMERATE_HPP
#define THA_ENUMERATE_HPP

#include <cstddef>
#include <mutex>
#include <vector>

#include "tha/frames.hpp"
#include "tha/order.hpp"

namespace tha {

/// Every partial order on 0..n-1 (as <=), in canonical BinRel order.
std::vector<BinRel> labeled_posets(std::size_t n);

/// Random access to all transits on n points: transit i is poset i / 2^n with
/// loops at the points of the bitmask i % 2^n.
class TransitEnumerator {
 public:
  static constexpr std::size_t kMaxPoints = 6;

  /// Throws std::invalid_argument if n > kMaxPoints.
  explicit TransitEnumerator(std::size_t n);

  std::size_t points() const { return n_; }
  std::size_t size() const { return posets_.size() << n_; }
  TemporalTransit at(std::size_t i) const;
  /// Indices of the Z-rooted transits, computed on first use.
  const std::vector<std::size_t>& rooted() const;

 private:
  std::size_t n_;
  std::vector<BinRel> posets_;
  mutable std::once_flag rooted_once_;
  mutable std::vector<std::size_t> rooted_;
};

/// Shared enumerator for n points, built once per process.
const TransitEnumerator& transit_enumerator(std::size_t n);

/// All transits on n points (Z-rooted ones only if asked), in enumerator order.
std::vector<TemporalTransit> enumerate_transits(std::size_t n, bool rooted_only = false);

}  // namespace tha

#endif
