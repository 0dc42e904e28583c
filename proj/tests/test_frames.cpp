#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "tha/frames.hpp"

using tha::BinRel;
using tha::Bitset;
using testing::frame_of;

namespace {

// indices in frame10.json
enum S4 : std::size_t { W, W1, X, X1, Y, Y1, Z, Z1, Y2, Y3 };

}  // namespace

TEST_CASE("three-point example frame") {
  const auto f = testing::load_frame("frame3.json");
  CHECK(tha::validate_transit(f).ok());
  CHECK(tha::refl_points(f) == Bitset::of(3, {1}));
  CHECK(f.label(1) == "y");
  CHECK(tha::b_relation(f) == (BinRel::identity(3) | BinRel::from_pairs(3, {{2, 1}})));
  const BinRel z = tha::z_relation(f);
  CHECK(z.row(0) == Bitset::of(3, {0, 1, 2}));
  CHECK(z.row(2) == Bitset::of(3, {1, 2}));
  CHECK(tha::z_roots(f) == Bitset::of(3, {0}));
  CHECK(tha::z_closure(f, Bitset::of(3, {0})) == Bitset::of(3, {0, 1, 2}));
  CHECK(tha::z_closure(f, Bitset(3)) == Bitset(3));
  CHECK(tha::is_z_rooted(f));
  CHECK_FALSE(tha::is_z_connected(f));
}

TEST_CASE("ten-point example frame") {
  const auto f = testing::load_frame("frame10.json");
  REQUIRE(f.size() == 10);
  CHECK(tha::validate_transit(f).ok());
  CHECK(tha::refl_points(f) == Bitset::of(10, {X}));
  const BinRel b = tha::b_relation(f);
  CHECK(b.test(Z, X));
  CHECK_FALSE(b.test(Z, W));
  const Bitset expect = Bitset::of(10, {Z, X, Y, X1, Y1, Z1, Y2, Y3});
  CHECK(tha::z_relation(f).row(Z) == expect);
  CHECK(tha::z_closure(f, Bitset::of(10, {Z})) == expect);
  CHECK(tha::z_roots(f) == Bitset::of(10, {W, W1}));
}

TEST_CASE("validation witnesses") {
  const auto cycle = frame_of(2, {{0, 1}, {1, 0}});
  const auto rep = tha::validate_transit(cycle);
  REQUIRE(rep.has("leq.antisymmetric"));
  CHECK(rep.get("leq.antisymmetric").witness == std::vector<std::size_t>{0, 1});
  CHECK(tha::validate_transit(testing::load_frame("two_cycle.json")).has("leq.antisymmetric"));
}

TEST_CASE("transit validity agrees with the reflexivisation criterion") {
  // every 3-point relation
  for (std::uint64_t m = 0; m < (1U << 9); ++m) {
    BinRel r(3);
    for (std::size_t k = 0; k < 9; ++k)
      if ((m >> k) & 1U) r.set(k / 3, k % 3);
    CHECK(tha::validate_transit(tha::TemporalTransit(r)).ok() == oracle::is_transit(oracle::matrix(r)));
  }
  for (const auto& f : testing::small_transits(4)) {
    CHECK(tha::validate_transit(f).ok());
    // dropping any loop keeps it a transit
    for (std::size_t i = 0; i < f.size(); ++i) {
      BinRel r = f.r_fwd();
      r.set(i, i, false);
      CHECK(tha::validate_transit(tha::TemporalTransit(r)).ok());
    }
  }
}

TEST_CASE("refl points") {
  CHECK(tha::refl_points(frame_of(3, {})).none());
  CHECK(tha::refl_points(frame_of(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}})).all());
}

TEST_CASE("B and Z against oracles") {
  CHECK(tha::b_relation(frame_of(3, {})) == BinRel::identity(3));
  CHECK(tha::z_relation(frame_of(1, {})) == BinRel::identity(1));
  for (const auto& f : testing::small_transits(4)) {
    const auto r = oracle::matrix(f.r_fwd());
    CHECK(oracle::matrix(tha::b_relation(f)) == oracle::b_relation(r));
    CHECK(oracle::matrix(tha::z_relation(f)) == oracle::z_relation(r));
  }
  testing::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto f = testing::random_transit(rng, 5 + testing::pick(rng, 8));
    CHECK(oracle::matrix(tha::z_relation(f)) == oracle::z_relation(oracle::matrix(f.r_fwd())));
  }
}

TEST_CASE("z roots of the irreflexive 2-chain") {
  const auto f = frame_of(2, {{0, 1}});
  CHECK(tha::z_roots(f) == Bitset::of(2, {0, 1}));
  CHECK(tha::is_z_connected(f));
}

TEST_CASE("archival sets") {
  const auto f = testing::load_frame("frame3.json");
  CHECK(tha::is_archival(f, Bitset(3)));
  CHECK(tha::is_archival(f, Bitset::full(3)));
  CHECK(tha::is_archival(f, Bitset::of(3, {1, 2})));
  CHECK_FALSE(tha::is_archival(f, Bitset::of(3, {2})));
  CHECK_FALSE(tha::is_archival(f, Bitset::of(3, {2}), tha::ArchivalMode::Finite));
  CHECK(tha::archival_upsets(f) == std::vector<Bitset>{Bitset(3), Bitset::of(3, {1, 2}), Bitset::full(3)});
  CHECK(tha::archival_upsets(frame_of(2, {{0, 0}, {1, 1}})).size() == 4);
  CHECK(tha::archival_upsets(frame_of(1, {})).size() == 2);
}

TEST_CASE("archival modes agree and match the oracle") {
  for (const auto& f : testing::small_transits(3)) {
    const auto r = oracle::matrix(f.r_fwd());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.size()); ++m) {
      const Bitset s = Bitset::from_mask(f.size(), m);
      const bool g = tha::is_archival(f, s, tha::ArchivalMode::General);
      CHECK(g == oracle::is_archival(r, oracle::set_of(s), false));
      CHECK(g == tha::is_archival(f, s, tha::ArchivalMode::Finite));
    }
  }
}

TEST_CASE("topo reachability") {
  const auto f = testing::load_frame("frame3.json");
  CHECK(tha::topo_reachable(f, 0, 2));
  CHECK_FALSE(tha::topo_reachable(f, 2, 0));
  for (std::size_t x = 0; x < 3; ++x) CHECK(tha::topo_reachable(f, x, x));
  for (const auto& g : testing::small_transits(3))
    CHECK(oracle::matrix(tha::topo_reachability(g)) == oracle::topo_reachability(oracle::matrix(g.r_fwd())));
}

TEST_CASE("p-morphisms") {
  const auto f = testing::load_frame("frame3.json");
  CHECK(tha::is_temporal_p_morphism({f, f, {0, 1, 2}}).ok());
  // constant map onto one point; needs a reflexive target and a reflexive source
  const auto refl2 = frame_of(2, {{0, 0}, {0, 1}, {1, 1}});
  CHECK(tha::is_temporal_p_morphism({refl2, frame_of(1, {{0, 0}}), {0, 0}}).ok());
  // the irreflexive 2-chain has no such map
  CHECK_FALSE(tha::is_temporal_p_morphism({frame_of(2, {{0, 1}}), frame_of(1, {}), {0, 0}}).ok());
  const auto rep = tha::is_temporal_p_morphism({frame_of(2, {{0, 1}}), frame_of(2, {}), {0, 1}});
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.has("monotone"));
  CHECK(rep.get("monotone").witness == std::vector<std::size_t>{0, 1});
  CHECK(tha::is_temporal_p_morphism({f, f, {0, 1}}).has("map.total"));
}

TEST_CASE("isomorphism search") {
  const auto a = frame_of(3, {{0, 1}, {0, 2}, {1, 1}, {1, 2}});
  const auto b = frame_of(3, {{2, 1}, {2, 0}, {1, 1}, {1, 0}});
  const auto iso = tha::find_isomorphism(a, b);
  REQUIRE(iso);
  CHECK(*iso == std::vector<std::size_t>{2, 1, 0});
  CHECK_FALSE(tha::find_isomorphism(a, frame_of(3, {{0, 1}, {0, 2}, {1, 2}})));
}
