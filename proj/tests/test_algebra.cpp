#include <set>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "tha/algebra.hpp"
#include "tha/classify.hpp"
#include "tha/duality.hpp"
#include "tha/error.hpp"

using tha::BinRel;
using tha::Bitset;
using tha::Congruence;
using tha::Filter;
using tha::FiniteTHA;

namespace {

Filter filt(std::size_t n, std::initializer_list<std::size_t> xs) { return Filter{Bitset::of(n, xs)}; }

FiniteTHA four_chain() { return testing::load_algebra("chain4.json"); }

// algebras of upsets of every transit on at most `points` points
std::vector<FiniteTHA> corpus(std::size_t points) {
  std::vector<FiniteTHA> out;
  for (const auto& f : testing::small_transits(points)) out.push_back(tha::clop_frame(f).algebra);
  return out;
}

}  // namespace

TEST_CASE("lattice derivation") {
  const auto l = tha::derive_lattice(BinRel::from_pairs(3, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}));
  CHECK(l.bot == 0);
  CHECK(l.top == 2);
  CHECK(l.meet[1 * 3 + 2] == 1);
  CHECK(l.join[0 * 3 + 1] == 1);
  // no top
  CHECK_THROWS_AS(tha::derive_lattice(BinRel::from_pairs(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}})),
                  tha::StructureError);
  CHECK_THROWS_AS(tha::derive_lattice(BinRel::from_pairs(2, {{0, 1}})), tha::StructureError);
}

TEST_CASE("heyting implication") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const FiniteTHA c = testing::chain_with(n, std::vector<std::size_t>(n, n - 1), std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) CHECK(c.impl(a, b) == (a <= b ? n - 1 : b));
    for (std::size_t b = 0; b < n; ++b) CHECK(c.impl(c.bot(), b) == c.top());
  }
  // M3: 0 < a, b, c < 1
  BinRel m3 = BinRel::identity(5);
  for (std::size_t i = 1; i <= 3; ++i) m3.set(0, i).set(i, 4);
  m3.set(0, 4);
  const auto l = tha::derive_lattice(m3);
  CHECK_THROWS_AS(tha::derive_heyting_implication(m3, l.meet, l.join), tha::StructureError);
  CHECK_THROWS_AS(FiniteTHA::from_order(m3, {4, 4, 4, 4, 4}, {0, 0, 0, 0, 0}), tha::StructureError);
}

TEST_CASE("derived tables match the naive lattice") {
  for (const auto& a : corpus(3)) {
    const auto l = oracle::naive_lattice(a);
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < a.size(); ++y) {
        CHECK(a.meet(x, y) == l.meet[x][y]);
        CHECK(a.join(x, y) == l.join[x][y]);
        CHECK(a.impl(x, y) == l.impl[x][y]);
      }
  }
}

TEST_CASE("validate_tha") {
  CHECK(tha::validate_tha(testing::chain3()).ok());
  CHECK(tha::validate_tha(testing::two_element()).ok());
  CHECK(tha::validate_tha(testing::one_element()).ok());
  CHECK(tha::validate_tha(four_chain()).ok());
  const FiniteTHA bad = testing::chain_with(3, {1, 2, 2}, {0, 0, 2});
  const auto rep = tha::validate_tha(bad);
  REQUIRE(rep.has("temporal.adjunction"));
  CHECK(rep.get("temporal.adjunction").witness == std::vector<std::size_t>{2, 1});
  CHECK_FALSE(tha::satisfies_adjunction(bad));
  // box not inflationary
  CHECK(tha::validate_tha(testing::chain_with(2, {0, 0}, {0, 0})).has("frontal.inflationary"));
  for (const auto& a : corpus(3)) {
    CHECK(tha::validate_tha(a).ok());
    CHECK(tha::satisfies_adjunction(a) == tha::satisfies_temporal_equations(a));
  }
}

TEST_CASE("the two temporal forms agree on random tables") {
  testing::Rng rng(5);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 2 + testing::pick(rng, 3);
    std::vector<std::size_t> box(n), dia(n);
    for (std::size_t i = 0; i < n; ++i) {
      box[i] = i + testing::pick(rng, n - i);  // inflationary
      dia[i] = testing::pick(rng, n);
    }
    // monotone box preserves meets on a chain
    for (std::size_t i = 1; i < n; ++i) box[i] = std::max(box[i], box[i - 1]);
    const FiniteTHA a = testing::chain_with(n, box, dia);
    CHECK(tha::satisfies_adjunction(a) == tha::satisfies_temporal_equations(a));
  }
}

TEST_CASE("filters and prime filters") {
  const FiniteTHA c = testing::chain3();
  CHECK(tha::prime_filters(c) == std::vector<Filter>{filt(3, {2}), filt(3, {1, 2})});
  CHECK(tha::prime_filters(testing::two_element()) == std::vector<Filter>{filt(2, {1})});
  CHECK(tha::prime_filters(four_chain()).size() == 3);
  CHECK(tha::filter_generated(c, Bitset(3)) == filt(3, {2}));
  CHECK(tha::filter_generated(c, Bitset::of(3, {0})) == filt(3, {0, 1, 2}));
  CHECK(tha::filter_generated(c, Bitset::of(3, {1})) == filt(3, {1, 2}));
  CHECK(tha::filters(c).size() == 3);
  for (const auto& a : corpus(3)) {
    const auto naive = oracle::prime_filters(a);
    const auto got = tha::prime_filters(a);
    REQUIRE(naive.size() == got.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(oracle::set_of(got[i].elements) == naive[i]);
  }
}

TEST_CASE("dia filters and compatible elements") {
  const FiniteTHA c = testing::chain3();
  CHECK(tha::dia_filters(c) == std::vector<Filter>{filt(3, {2}), filt(3, {0, 1, 2})});
  CHECK(tha::dia_filter_violation(c, filt(3, {1, 2})));
  CHECK(tha::dia_compatible(c) == Bitset::of(3, {0, 2}));
  CHECK(tha::dia_opremum(c) == 0);
  const FiniteTHA d = four_chain();
  CHECK(d.label(2) == "{y,z}");
  CHECK(tha::dia_filters(d) == std::vector<Filter>{filt(4, {3}), filt(4, {2, 3}), filt(4, {0, 1, 2, 3})});
  CHECK(tha::dia_compatible(d) == Bitset::of(4, {0, 2, 3}));
  CHECK(tha::dia_opremum(d) == 2);
  for (const auto& a : corpus(3)) {
    const Bitset comp = tha::dia_compatible(a);
    CHECK(comp.test(a.bot()));
    CHECK(comp.test(a.top()));
    const auto df = tha::dia_filters(a);
    CHECK(std::find(df.begin(), df.end(), Filter{a.up(a.top())}) != df.end());
    CHECK(std::find(df.begin(), df.end(), Filter{Bitset::full(a.size())}) != df.end());
  }
}

TEST_CASE("congruences") {
  CHECK(tha::congruences_bruteforce(testing::two_element()) ==
        std::vector<Congruence>{Congruence({0, 0}), Congruence({0, 1})});
  CHECK(tha::congruences_bruteforce(testing::chain3()).size() == 2);
  const FiniteTHA d = four_chain();
  const auto cs = tha::congruences_bruteforce(d);
  CHECK(cs.size() == 3);
  std::set<Filter> images;
  for (const auto& c : cs) images.insert(tha::cong_to_filter(d, c));
  const auto df = tha::dia_filters(d);
  CHECK(images == std::set<Filter>(df.begin(), df.end()));
  CHECK(tha::cong_to_filter(d, Congruence::identity(4)) == filt(4, {3}));
  CHECK(tha::cong_to_filter(d, Congruence::full(4)) == filt(4, {0, 1, 2, 3}));
  CHECK(Congruence({3, 3, 1}).class_map() == std::vector<std::size_t>{0, 0, 1});
  CHECK(tha::check_congruence(d, Congruence({0, 1, 1, 1})).has("cong.dia"));
}

TEST_CASE("congruences match the partition oracle") {
  for (const auto& a : corpus(3)) {
    if (a.size() > 8) continue;
    std::set<std::vector<std::size_t>> got;
    for (const auto& c : tha::congruences_bruteforce(a)) {
      CHECK(tha::check_congruence(a, c).ok());
      got.insert(c.class_map());
    }
    CHECK(got == oracle::congruences(a));
  }
}

TEST_CASE("filter and congruence round trips") {
  for (const auto& a : corpus(3)) {
    for (const auto& c : tha::congruences_bruteforce(a)) CHECK(tha::filter_to_cong(a, tha::cong_to_filter(a, c)) == c);
    for (const auto& f : tha::dia_filters(a)) CHECK(tha::cong_to_filter(a, tha::filter_to_cong(a, f)) == f);
  }
  CHECK_THROWS_AS(tha::filter_to_cong(testing::chain3(), filt(3, {1, 2})), tha::StructureError);
}

TEST_CASE("quotients") {
  const FiniteTHA d = four_chain();
  CHECK(tha::find_algebra_isomorphism(tha::quotient(d, Congruence::identity(4)), d));
  CHECK(tha::quotient(d, Congruence::full(4)).size() == 1);
  const Congruence theta = tha::filter_to_cong(d, filt(4, {2, 3}));
  const FiniteTHA q = tha::quotient(d, theta);
  CHECK(q.size() == 3);
  CHECK(tha::validate_tha(q).ok());
  // the upset algebra of the subframe {y,z}, not the 3-chain of the irreflexive 2-chain
  CHECK(q.box_table() == std::vector<std::size_t>{1, 1, 2});
  CHECK(q.dia_table() == std::vector<std::size_t>{0, 0, 2});
  CHECK(tha::find_algebra_isomorphism(q, tha::clop_frame(testing::frame_of(2, {{0, 0}, {0, 1}})).algebra));
  CHECK_FALSE(tha::find_algebra_isomorphism(q, testing::chain3()));
  CHECK(tha::is_homomorphism(theta.class_map(), d, q));
}

TEST_CASE("products") {
  const FiniteTHA c = testing::chain3();
  CHECK(tha::find_algebra_isomorphism(tha::product(c, testing::one_element()), c));
  const FiniteTHA b2 = testing::two_element();
  const FiniteTHA p = tha::product(b2, b2);
  CHECK(p.size() == 4);
  CHECK(tha::validate_tha(p).ok());
  CHECK(p.box_table() == std::vector<std::size_t>{0, 1, 2, 3});
  std::vector<std::size_t> pi1(4), pi2(4);
  for (std::size_t i = 0; i < 4; ++i) {
    pi1[i] = i / 2;
    pi2[i] = i % 2;
  }
  CHECK(tha::is_homomorphism(pi1, p, b2));
  CHECK(tha::is_homomorphism(pi2, p, b2));
}

TEST_CASE("homomorphisms") {
  const FiniteTHA c = testing::chain3();
  CHECK(tha::is_homomorphism({0, 1, 2}, c, c));
  const auto rep = tha::check_homomorphism({0, 1, 1}, c, testing::two_element());
  CHECK_FALSE(rep.ok());
  CHECK(rep.has("hom.box"));
  CHECK(tha::check_homomorphism({0, 1}, c, c).has("hom.total"));
}

TEST_CASE("classification") {
  CHECK(tha::is_simple(testing::chain3()));
  CHECK(tha::is_subdirectly_irreducible(testing::chain3()));
  const FiniteTHA d = four_chain();
  CHECK_FALSE(tha::is_simple(d));
  CHECK(tha::is_subdirectly_irreducible(d));
  CHECK(tha::classify_algebraic(d).opremum == 2);
  CHECK_FALSE(tha::is_simple(testing::one_element()));
  CHECK_FALSE(tha::is_subdirectly_irreducible(testing::one_element()));
  CHECK(tha::classify(d).agree());
  const auto b2 = testing::two_element();
  CHECK_FALSE(tha::is_subdirectly_irreducible(tha::product(b2, b2)));
}

TEST_CASE("subdirect decomposition") {
  const FiniteTHA b2 = testing::two_element();
  const FiniteTHA p = tha::product(b2, b2);
  CHECK(tha::meet_irreducible_congruences(p).size() == 2);
  CHECK(tha::check_subdirect_decomposition(p).ok());
  CHECK(tha::meet_irreducible_congruences(testing::chain3()) == std::vector<Congruence>{Congruence::identity(3)});
  for (const auto& a : corpus(3)) CHECK(tha::check_subdirect_decomposition(a).ok());
}
