#ifndef THA_SEMANTICS_HPP
#define THA_SEMANTICS_HPP

#include <cstddef>

#include "tha/formula.hpp"
#include "tha/model.hpp"

namespace tha {

/// Value of f under the homomorphic extension of the valuation.
/// Throws tha::Error on an unbound atom.
std::size_t eval_algebraic(const AlgebraicModel& m, const Formula& f);

/// {x : x forces f}. Clauses:
///   a -> b  : every y >= x forcing a forces b
///   box a   : every y with x R> y forces a
///   dia a   : some w with x R< w forces a
/// Throws tha::Error on an unbound atom.
Bitset truth_set(const RelationalModel& m, const Formula& f);
bool forces(const RelationalModel& m, std::size_t x, const Formula& f);
/// Forced at every point.
bool validates(const RelationalModel& m, const Formula& f);

/// Valid on the frame under every upset valuation of the atoms of f.
bool frame_validates(const TemporalTransit& frame, const Formula& f);

/// For every prime filter x: eval(f) in x iff Spec(m), x forces f.
bool truth_lemma_check(const AlgebraicModel& m, const Formula& f);

}  // namespace tha

#endif
