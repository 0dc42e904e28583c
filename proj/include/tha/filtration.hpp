#ifndef THA_FILTRATION_HPP
#define THA_FILTRATION_HPP

#include <cstddef>
#include <vector>

#include "tha/formula.hpp"
#include "tha/model.hpp"
#include "tha/report.hpp"

namespace tha {

struct FiltrationResult {
  /// Frame built from the closure of the lifted R>; valuation on the atoms of sigma.
  RelationalModel model;
  /// class_of[x] = [x]; classes numbered by their least point.
  std::vector<std::size_t> class_of;
  std::vector<Formula> sigma;
  /// Transitive closure of the lifted R<, kept to compare with the frame's R<.
  BinRel r_back;
  /// Transitive closure of the lifted <=, kept to compare with the frame's <=.
  BinRel leq;
};

/// Quotient of m by agreement on sigma. Throws StructureError if sigma is not
/// subformula-closed.
FiltrationResult filtrate(const RelationalModel& m, const std::vector<Formula>& sigma);

/// Frame validity, the closures matching the frame, the 2^|sigma| bound and
/// the six transfer conditions between m and its filtration.
Report check_filtration(const RelationalModel& m, const FiltrationResult& r);

/// For sigma = closure(f): every point x and every member of sigma agree
/// between x and [x].
bool filtration_lemma_check(const RelationalModel& m, const Formula& f);

}  // namespace tha

#endif
