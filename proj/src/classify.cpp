#include "tha/classify.hpp"

#include "tha/duality.hpp"

namespace tha {

bool Classification::simple_routes_agree() const {
  // the empty frame is Z-connected vacuously but its algebra is trivial
  const bool frame_route = z_connected && dual_points > 0;
  return algebraic.simple_routes_agree() && frame_route == algebraic.simple_by_congruences;
}

bool Classification::si_routes_agree() const {
  return algebraic.si_routes_agree() && z_rooted == algebraic.si_by_congruences;
}

namespace {

Classification from_parts(const FiniteTHA& a, const TemporalTransit& f) {
  Classification c;
  c.algebraic = classify_algebraic(a);
  c.dual_points = f.size();
  c.z_connected = is_z_connected(f);
  c.z_rooted = is_z_rooted(f);
  return c;
}

}  // namespace

Classification classify(const FiniteTHA& a) { return from_parts(a, spec_algebra(a).frame); }

Classification classify(const TemporalTransit& f) { return from_parts(clop_frame(f).algebra, f); }

}  // namespace tha
