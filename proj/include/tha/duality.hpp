#ifndef THA_DUALITY_HPP
#define THA_DUALITY_HPP

// Finite duality between temporal Heyting algebras and temporal transits.

#include <cstddef>
#include <vector>

#include "tha/algebra.hpp"
#include "tha/frames.hpp"
#include "tha/model.hpp"
#include "tha/report.hpp"

namespace tha {

struct SpectrumResult {
  /// Points are the prime filters in ascending bitmask order.
  TemporalTransit frame;
  /// point_filters[x] is the prime filter that point x denotes.
  std::vector<Bitset> point_filters;
  /// x R< w computed from dia ("a in w implies dia a in x"), independently of R>.
  BinRel r_back_from_dia;
};

/// The dual frame of an algebra. R> comes from box ("box a in x implies a in
/// y"); the relation computed from dia is kept for comparison.
SpectrumResult spec_algebra(const FiniteTHA& a);

struct ClopResult {
  FiniteTHA algebra;
  /// element_upsets[i] is the upset element i denotes; ascending bitmask order.
  std::vector<Bitset> element_upsets;

  /// Index of an upset in the carrier; throws std::out_of_range if absent.
  std::size_t index_of(const Bitset& upset) const;
};

/// The algebra of upsets of a frame.
ClopResult clop_frame(const TemporalTransit& f);

/// a -> {x : a in x}, as indices into clop_frame(spec_algebra(a).frame).
std::vector<std::size_t> pi_map(const FiniteTHA& a);
/// Empty report iff pi is a bijective homomorphism onto Clop(Spec a).
Report pi_check(const FiniteTHA& a);

/// x -> {K : x in K}, as indices into spec_algebra(clop_frame(f).algebra).
std::vector<std::size_t> gamma_map(const TemporalTransit& f);
/// Empty report iff gamma is a bijective temporal p-morphism whose inverse is
/// also one.
Report gamma_check(const TemporalTransit& f);

/// Intersection of pi[F]: the points of Spec a containing F. Throws
/// StructureError if F is not a dia-filter.
Bitset filter_to_arcup(const FiniteTHA& a, const Filter& f);
/// Intersection of the prime filters in C. Throws StructureError if C is not
/// an archival upset of Spec a.
Filter arcup_to_filter(const FiniteTHA& a, const Bitset& c);

/// Spec(h) : Spec(b) -> Spec(a), y -> h^-1[y]. Throws StructureError if h is
/// not a homomorphism.
PMorphism spec_hom(const std::vector<std::size_t>& h, const FiniteTHA& a, const FiniteTHA& b);
/// Clop(f) : Clop(target) -> Clop(source), K -> f^-1[K]. Throws StructureError
/// if m is not a temporal p-morphism.
std::vector<std::size_t> clop_hom(const PMorphism& m);

/// <fram A, pi . nu>
RelationalModel spec_model(const AlgebraicModel& m);

}  // namespace tha

#endif
