#ifndef THA_TESTS_SUPPORT_HPP
#define THA_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "tha/algebra.hpp"
#include "tha/enumerate.hpp"
#include "tha/formula.hpp"
#include "tha/frames.hpp"
#include "tha/io.hpp"
#include "tha/model.hpp"

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(THA_DATA_DIR) + "/" + name; }

inline tha::TemporalTransit load_frame(const std::string& name) {
  return tha::frame_from_json(tha::read_json_file(data_path(name)));
}

inline tha::FiniteTHA load_algebra(const std::string& name) {
  return tha::algebra_from_json(tha::read_json_file(data_path(name)));
}

inline tha::TemporalTransit frame_of(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& r,
                                     std::vector<std::string> labels = {}) {
  return tha::TemporalTransit(tha::BinRel::from_pairs(n, r), std::move(labels));
}

/// 0 < m < 1 with box = (m,1,1), dia = (0,0,m).
inline tha::FiniteTHA chain3() {
  return tha::FiniteTHA::from_order(tha::BinRel::from_pairs(3, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}),
                                    {1, 2, 2}, {0, 0, 1}, {"0", "m", "1"});
}

inline tha::FiniteTHA chain_with(std::size_t n, std::vector<std::size_t> box, std::vector<std::size_t> dia) {
  tha::BinRel leq(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) leq.set(i, j);
  return tha::FiniteTHA::from_order(leq, std::move(box), std::move(dia));
}

inline tha::FiniteTHA one_element() { return chain_with(1, {0}, {0}); }
inline tha::FiniteTHA two_element() { return chain_with(2, {0, 1}, {0, 1}); }

/// Every transit on 0..max_points points.
inline std::vector<tha::TemporalTransit> small_transits(std::size_t max_points) {
  std::vector<tha::TemporalTransit> out;
  for (std::size_t n = 0; n <= max_points; ++n) {
    const auto& e = tha::transit_enumerator(n);
    for (std::size_t i = 0; i < e.size(); ++i) out.push_back(e.at(i));
  }
  return out;
}

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Random transit: a random DAG on a shuffled carrier, transitively closed,
/// with random loops.
inline tha::TemporalTransit random_transit(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  const double density = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
  tha::BinRel lt(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng, density)) lt.set(perm[i], perm[j]);
  tha::BinRel r = tha::transitive_closure(lt);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng)) r.set(i, i);
  return tha::TemporalTransit(r);
}

inline tha::Bitset random_upset(Rng& rng, const tha::TemporalTransit& f) {
  tha::Bitset s(f.size());
  const double p = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (coin(rng, p)) s.set(i);
  return f.up(s);
}

inline tha::Formula random_formula(Rng& rng, std::size_t depth, const std::vector<std::string>& atoms) {
  if (depth == 0 || coin(rng, 0.25)) {
    const std::size_t k = pick(rng, atoms.size() + 2);
    if (k == atoms.size()) return tha::Formula::bot();
    if (k == atoms.size() + 1) return tha::Formula::top();
    return tha::Formula::atom(atoms[k]);
  }
  const std::size_t k = pick(rng, 5);
  // children drawn in a fixed order so a seed gives the same formula everywhere
  tha::Formula a = random_formula(rng, depth - 1, atoms);
  if (k == 3) return tha::Formula::box(a);
  if (k == 4) return tha::Formula::dia(a);
  tha::Formula b = random_formula(rng, depth - 1, atoms);
  if (k == 0) return tha::Formula::conj(a, b);
  if (k == 1) return tha::Formula::disj(a, b);
  return tha::Formula::imp(a, b);
}

inline tha::RelationalModel random_model(Rng& rng, const tha::TemporalTransit& f,
                                         const std::vector<std::string>& atoms) {
  tha::RelationalModel m{f, {}};
  for (const auto& a : atoms) m.valuation[a] = random_upset(rng, f);
  return m;
}

}  // namespace testing

#endif
