#ifndef THA_CLASSIFY_HPP
#define THA_CLASSIFY_HPP

// Simple / subdirectly irreducible classification by every available route:
// dia-filters, dia-compatible elements, brute-force congruences and the
// Z-structure of the dual frame.

#include <cstddef>

#include "tha/algebra.hpp"
#include "tha/frames.hpp"

namespace tha {

struct Classification {
  AlgebraicClassification algebraic;
  std::size_t dual_points = 0;
  bool z_connected = false;
  bool z_rooted = false;

  bool simple_routes_agree() const;
  bool si_routes_agree() const;
  bool agree() const { return simple_routes_agree() && si_routes_agree(); }
  /// Verdicts taken from the congruence route.
  bool simple() const { return algebraic.simple_by_congruences; }
  bool si() const { return algebraic.si_by_congruences; }
};

/// Frame routes use the spectrum of a.
Classification classify(const FiniteTHA& a);
/// Algebraic routes use Clop(f); frame routes use f itself.
Classification classify(const TemporalTransit& f);

}  // namespace tha

#endif
