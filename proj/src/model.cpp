#include "tha/model.hpp"

namespace tha {

Report check_model(const AlgebraicModel& m) {
  Report r;
  for (const auto& [atom, value] : m.valuation) {
    if (value >= m.algebra.size()) r.add("val.range:" + atom, {value}, "element outside the carrier");
  }
  return r;
}

Report check_model(const RelationalModel& m) {
  Report r;
  r.merge(validate_transit(m.frame), "frame.");
  for (const auto& [atom, set] : m.valuation) {
    if (set.size() != m.frame.size()) {
      r.add("val.size:" + atom, {set.size(), m.frame.size()}, "valuation on a different carrier");
    } else if (!is_upset(m.frame.leq(), set)) {
      r.add("val.upset:" + atom, {}, "valuation is not an upset");
    }
  }
  return r;
}

}  // namespace tha
