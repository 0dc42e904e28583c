#ifndef THA_MODEL_HPP
#define THA_MODEL_HPP

#include <cstddef>
#include <map>
#include <string>

#include "tha/algebra.hpp"
#include "tha/frames.hpp"
#include "tha/report.hpp"

namespace tha {

/// Algebra plus an assignment of elements to atoms.
struct AlgebraicModel {
  FiniteTHA algebra;
  std::map<std::string, std::size_t> valuation;
};

/// Transit plus an assignment of upsets to atoms.
struct RelationalModel {
  TemporalTransit frame;
  std::map<std::string, Bitset> valuation;
};

/// Checks that every valued element lies in the carrier.
Report check_model(const AlgebraicModel& m);
/// Checks the frame and that every valuation is an upset of the right size.
Report check_model(const RelationalModel& m);

}  // namespace tha

#endif
