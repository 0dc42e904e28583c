#ifndef THA_ALGEBRA_HPP
#define THA_ALGEBRA_HPP

// Finite temporal Heyting algebras <A, meet, join, ->, dia, box, 0, 1>,
// their filters, congruences, quotients and products.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tha/bitset.hpp"
#include "tha/order.hpp"
#include "tha/report.hpp"

namespace tha {

/// Row-major n*n operation table.
using OpTable = std::vector<std::size_t>;

struct LatticeOps {
  OpTable meet;
  OpTable join;
  std::size_t bot = 0;
  std::size_t top = 0;
};

/// Meets, joins and bounds of a finite partial order.
/// Throws StructureError (naming the offending pair) if `leq` is not a bounded lattice.
LatticeOps derive_lattice(const BinRel& leq);

/// impl(a,b) = greatest c with a meet c <= b.
/// Throws StructureError if the lattice is not distributive.
OpTable derive_heyting_implication(const BinRel& leq, const OpTable& meet, const OpTable& join);

/// A finite algebra with explicit tables. Nothing is checked beyond table
/// shapes; validate_tha reports whether it is a temporal Heyting algebra.
class FiniteTHA {
 public:
  FiniteTHA() = default;

  /// Derives meet/join/impl from the order. Throws StructureError if the order
  /// is not a distributive lattice or a modal table leaves the carrier.
  static FiniteTHA from_order(BinRel leq, std::vector<std::size_t> box, std::vector<std::size_t> dia,
                              std::vector<std::string> labels = {});

  /// Uses the given tables verbatim (shapes are checked).
  static FiniteTHA from_tables(BinRel leq, OpTable meet, OpTable join, OpTable impl,
                               std::vector<std::size_t> box, std::vector<std::size_t> dia, std::size_t bot,
                               std::size_t top, std::vector<std::string> labels = {});

  std::size_t size() const { return leq_.size(); }
  const BinRel& leq() const { return leq_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_.test(a, b); }

  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t impl(std::size_t a, std::size_t b) const { return impl_[a * size() + b]; }
  /// (a -> b) meet (b -> a)
  std::size_t bi_impl(std::size_t a, std::size_t b) const { return meet(impl(a, b), impl(b, a)); }
  std::size_t box(std::size_t a) const { return box_[a]; }
  std::size_t dia(std::size_t a) const { return dia_[a]; }
  std::size_t bot() const { return bot_; }
  std::size_t top() const { return top_; }

  const OpTable& meet_table() const { return meet_; }
  const OpTable& join_table() const { return join_; }
  const OpTable& impl_table() const { return impl_; }
  const std::vector<std::size_t>& box_table() const { return box_; }
  const std::vector<std::size_t>& dia_table() const { return dia_; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t a) const;

  /// up(a) as an element set.
  Bitset up(std::size_t a) const { return leq_.row(a); }
  /// Meet of a set (top for the empty set).
  std::size_t meet_of(const Bitset& s) const;

 private:
  BinRel leq_;
  OpTable meet_, join_, impl_;
  std::vector<std::size_t> box_, dia_;
  std::size_t bot_ = 0, top_ = 0;
  std::vector<std::string> labels_;
};

/// Checks the lattice, Heyting, frontal and temporal axioms (adjunction form and
/// equational form). If the two temporal forms disagree while box preserves
/// meets, the clause "temporal.forms-disagree" is added.
Report validate_tha(const FiniteTHA& a);

/// Adjunction dia a <= b <=> a <= box b over all pairs.
bool satisfies_adjunction(const FiniteTHA& a);
/// dia 0 = 0, dia(a v b) = dia a v dia b, a <= box dia a, dia box a <= a.
bool satisfies_temporal_equations(const FiniteTHA& a);

/// An element set of an algebra; used for filters.
struct Filter {
  Bitset elements;

  bool contains(std::size_t a) const { return elements.test(a); }
  friend bool operator==(const Filter&, const Filter&) = default;
  friend auto operator<=>(const Filter&, const Filter&) = default;
};

bool is_filter(const FiniteTHA& a, const Bitset& s);
/// Every filter including the improper one, ascending bitmask order.
std::vector<Filter> filters(const FiniteTHA& a);
/// Proper prime filters, ascending bitmask order.
std::vector<Filter> prime_filters(const FiniteTHA& a);
/// Least filter containing s.
Filter filter_generated(const FiniteTHA& a, const Bitset& s);

/// (a, b) with a -> b in F but dia a -> dia b not in F, or nullopt if F is closed.
std::optional<std::pair<std::size_t, std::size_t>> dia_filter_violation(const FiniteTHA& a, const Filter& f);
bool is_dia_filter(const FiniteTHA& a, const Filter& f);
/// Dia-filters including the improper filter, ascending bitmask order.
std::vector<Filter> dia_filters(const FiniteTHA& a);

/// Elements a with a meet dia b <= dia(a meet b) for every b.
Bitset dia_compatible(const FiniteTHA& a);
/// Greatest dia-compatible element strictly below the top, when it exists.
std::optional<std::size_t> dia_opremum(const FiniteTHA& a);

/// An equivalence relation given as a class index per element, classes
/// numbered in order of their least element.
class Congruence {
 public:
  Congruence() = default;
  /// Renumbers the classes canonically.
  explicit Congruence(std::vector<std::size_t> class_of);

  static Congruence identity(std::size_t n);
  static Congruence full(std::size_t n);

  std::size_t size() const { return class_of_.size(); }
  std::size_t class_count() const { return class_count_; }
  std::size_t class_of(std::size_t a) const { return class_of_[a]; }
  const std::vector<std::size_t>& class_map() const { return class_of_; }
  bool related(std::size_t a, std::size_t b) const { return class_of_[a] == class_of_[b]; }
  std::vector<Bitset> classes() const;
  /// Every pair related here is related in `other`.
  bool is_finer_than(const Congruence& other) const;

  friend bool operator==(const Congruence& a, const Congruence& b) { return a.class_of_ == b.class_of_; }
  friend auto operator<=>(const Congruence& a, const Congruence& b) { return a.class_of_ <=> b.class_of_; }

 private:
  std::vector<std::size_t> class_of_;
  std::size_t class_count_ = 0;
};

/// Empty report iff the partition is compatible with all operations.
Report check_congruence(const FiniteTHA& a, const Congruence& theta);

/// All congruences, found by a search over partitions of the carrier that
/// decides one pair at a time (merge with compatibility closure, or keep
/// apart). Independent of the filter correspondence. Sorted canonically.
std::vector<Congruence> congruences_bruteforce(const FiniteTHA& a);

/// [1]_theta
Filter cong_to_filter(const FiniteTHA& a, const Congruence& theta);
/// a ~ b iff a <-> b in F. Throws StructureError with the failed closure
/// witness if F is not a dia-filter.
Congruence filter_to_cong(const FiniteTHA& a, const Filter& f);

/// A/theta; class i is represented by its least element.
FiniteTHA quotient(const FiniteTHA& a, const Congruence& theta);
/// Componentwise product; element (i, j) has index i * |b| + j.
FiniteTHA product(const FiniteTHA& a, const FiniteTHA& b);

/// Empty report iff h preserves meet, join, ->, box, dia, 0 and 1.
Report check_homomorphism(const std::vector<std::size_t>& h, const FiniteTHA& a, const FiniteTHA& b);
bool is_homomorphism(const std::vector<std::size_t>& h, const FiniteTHA& a, const FiniteTHA& b);

/// A bijection preserving the order and both modalities, or nullopt.
std::optional<std::vector<std::size_t>> find_algebra_isomorphism(const FiniteTHA& a, const FiniteTHA& b);

/// The three algebraic routes to simplicity and subdirect irreducibility.
struct AlgebraicClassification {
  std::size_t dia_filter_count = 0;
  std::size_t congruence_count = 0;
  bool simple_by_dia_filters = false;    // dia-filters are exactly {1} and A
  bool simple_by_compatibles = false;    // dia-compatible elements are exactly 0 and 1
  bool simple_by_congruences = false;    // exactly two congruences
  bool si_by_dia_filters = false;        // a second-least dia-filter exists
  bool si_by_opremum = false;            // a dia-opremum exists
  bool si_by_congruences = false;        // a least non-identity congruence exists
  std::optional<std::size_t> opremum;

  bool simple_routes_agree() const;
  bool si_routes_agree() const;
};

AlgebraicClassification classify_algebraic(const FiniteTHA& a);

/// Throws std::logic_error if the routes disagree.
bool is_simple(const FiniteTHA& a);
bool is_subdirectly_irreducible(const FiniteTHA& a);

/// Congruences other than the full one with exactly one upper cover.
std::vector<Congruence> meet_irreducible_congruences(const FiniteTHA& a);

/// Checks that the quotients by the meet-irreducible congruences are SI, the
/// projections are homomorphisms and the joint map is injective. When the
/// product has at most `product_limit` elements it is built and the joint map
/// is checked to be a homomorphism into it.
Report check_subdirect_decomposition(const FiniteTHA& a, std::size_t product_limit = 4096);

}  // namespace tha

#endif
