#ifndef THA_FRAMES_HPP
#define THA_FRAMES_HPP

// Temporal transits: finite frames <X, R<, R>, <=> where <= is the
// reflexive closure of R> and R< is its converse.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tha/bitset.hpp"
#include "tha/order.hpp"
#include "tha/report.hpp"

namespace tha {

/// A frame stored by its forward relation R>; <=, >= and R< are derived on
/// construction. Construction never fails: use validate_transit to find out
/// whether the result is actually a transit.
class TemporalTransit {
 public:
  TemporalTransit() = default;
  explicit TemporalTransit(BinRel r_fwd, std::vector<std::string> labels = {});

  std::size_t size() const { return r_fwd_.size(); }
  const BinRel& r_fwd() const { return r_fwd_; }
  const BinRel& r_back() const { return r_back_; }
  const BinRel& leq() const { return leq_; }
  const BinRel& geq() const { return geq_; }

  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of point i, or its index when the frame is unlabelled.
  std::string label(std::size_t i) const;

  Bitset up(const Bitset& s) const { return leq_.image(s); }
  Bitset down(const Bitset& s) const { return geq_.image(s); }
  Bitset none() const { return Bitset(size()); }
  Bitset all() const { return Bitset::full(size()); }

  /// Labels are ignored.
  friend bool operator==(const TemporalTransit& a, const TemporalTransit& b) {
    return a.r_fwd_ == b.r_fwd_;
  }

 private:
  BinRel r_fwd_;
  BinRel r_back_;
  BinRel leq_;
  BinRel geq_;
  std::vector<std::string> labels_;
};

/// Empty report iff the frame is a temporal transit.
Report validate_transit(const TemporalTransit& f);

/// {p : p R> p}
Bitset refl_points(const TemporalTransit& f);

/// x B w iff w <= x and no reflexive point lies in (w, x]. Row x holds B[x].
BinRel b_relation(const TemporalTransit& f);

/// Least fixpoint of S -> Delta u S;B;<=. Row x holds Z[x], the points Z-reachable from x.
BinRel z_relation(const TemporalTransit& f);

/// {x : Z[x] = X}
Bitset z_roots(const TemporalTransit& f);
bool is_z_rooted(const TemporalTransit& f);
bool is_z_connected(const TemporalTransit& f);

/// Z[S]
Bitset z_closure(const TemporalTransit& f, const Bitset& s);

enum class ArchivalMode {
  /// z in S, x not in S, z R< x  =>  R<[z] n up(x) n S nonempty
  General,
  /// z in S, x not in S, z R< x  =>  down(z) n up(x) n Refl n S nonempty
  Finite,
};

bool is_archival(const TemporalTransit& f, const Bitset& s, ArchivalMode mode = ArchivalMode::General);

/// Archival upsets in ascending bitmask order.
std::vector<Bitset> archival_upsets(const TemporalTransit& f);

/// y lies in every archival upset containing x.
bool topo_reachable(const TemporalTransit& f, std::size_t x, std::size_t y);
/// The whole topo-reachability relation; row x = points topo-reachable from x.
BinRel topo_reachability(const TemporalTransit& f);

/// A point map between two frames.
struct PMorphism {
  TemporalTransit source;
  TemporalTransit target;
  std::vector<std::size_t> map;
};

/// Checks totality, monotonicity, the <= back condition, R> forth/back and
/// the R< clauses tES.m.1/tES.m.2. Empty report iff all hold.
Report is_temporal_p_morphism(const PMorphism& m);

/// A bijection preserving and reflecting R> (hence <= and R<), or nullopt.
std::optional<std::vector<std::size_t>> find_isomorphism(const TemporalTransit& a, const TemporalTransit& b);

}  // namespace tha

#endif
