// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "support.hpp"
#include "tha/classify.hpp"
#include "tha/duality.hpp"
#include "tha/filtration.hpp"
#include "tha/search.hpp"
#include "tha/semantics.hpp"

using tha::Bitset;
using tha::Filter;
using tha::FiniteTHA;
using tha::Formula;
using tha::TemporalTransit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

const std::vector<TemporalTransit>& corpus() {
  static const std::vector<TemporalTransit> frames = testing::small_transits(4);
  return frames;
}

std::string frame_text(const TemporalTransit& f) { return tha::dump(tha::frame_to_json(f)); }

oracle::Valuation naive_val(const tha::RelationalModel& m) {
  oracle::Valuation v;
  for (const auto& [k, s] : m.valuation) v[k] = oracle::set_of(s);
  return v;
}

Outcome three_point_frame() {
  Outcome o;
  const TemporalTransit f = testing::load_frame("frame3.json");
  if (!tha::validate_transit(f).ok()) o.fail("rejected: " + tha::validate_transit(f).to_string());
  if (f.label(1) != "y" || tha::refl_points(f) != Bitset::of(3, {1})) o.fail("Refl = " + tha::refl_points(f).to_string());
  // x <= y <= z
  const tha::BinRel leq = tha::BinRel::from_pairs(3, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});
  if (tha::reflexivisation(f.r_fwd()) != leq || f.leq() != leq) o.fail("reflexivisation differs from <=");
  return o;
}

Outcome ten_point_frame() {
  Outcome o;
  const TemporalTransit f = testing::load_frame("frame10.json");
  if (!tha::validate_transit(f).ok()) o.fail("rejected");
  std::size_t z = 0;
  std::set<std::string> got;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.label(i) == "z") z = i;
  const Bitset cl = tha::z_closure(f, Bitset::of(f.size(), {z}));
  cl.for_each([&](std::size_t i) { got.insert(f.label(i)); });
  const std::set<std::string> expect{"z", "x", "y", "x'", "y'", "z'", "y''", "y'''"};
  if (got != expect) o.fail("Z[z] = " + cl.to_string());
  if (got.count("w") || got.count("w'")) o.fail("w or w' reached");
  return o;
}

Outcome duality() {
  Outcome o;
  for (const auto& f : corpus()) {
    const auto g = tha::gamma_check(f);
    if (!g.ok()) o.fail("gamma " + frame_text(f) + ": " + g.to_string());
    const auto p = tha::pi_check(tha::clop_frame(f).algebra);
    if (!p.ok()) o.fail("pi " + frame_text(f) + ": " + p.to_string());
  }
  return o;
}

Outcome correspondence() {
  Outcome o;
  for (const auto& f : corpus()) {
    const FiniteTHA a = tha::clop_frame(f).algebra;
    const auto cs = tha::congruences_bruteforce(a);
    const auto dfs = tha::dia_filters(a);
    const auto arcs = tha::archival_upsets(tha::spec_algebra(a).frame);
    const std::string where = frame_text(f);
    if (cs.size() != dfs.size() || dfs.size() != arcs.size()) {
      o.fail(where + ": counts differ");
      continue;
    }
    if (a.size() <= 7) {
      std::set<std::vector<std::size_t>> got;
      for (const auto& c : cs) got.insert(c.class_map());
      if (got != oracle::congruences(a)) o.fail(where + ": partition oracle disagrees");
    }
    std::vector<Filter> fs;
    std::vector<Bitset> us;
    for (const auto& c : cs) {
      fs.push_back(tha::cong_to_filter(a, c));
      us.push_back(tha::filter_to_arcup(a, fs.back()));
      if (!(tha::filter_to_cong(a, fs.back()) == c)) o.fail(where + ": filter_to_cong does not invert");
      if (tha::arcup_to_filter(a, us.back()) != fs.back()) o.fail(where + ": arcup_to_filter does not invert");
    }
    if (std::set<Filter>(fs.begin(), fs.end()) != std::set<Filter>(dfs.begin(), dfs.end()))
      o.fail(where + ": congruences do not map onto dia-filters");
    if (std::set<Bitset>(us.begin(), us.end()) != std::set<Bitset>(arcs.begin(), arcs.end()))
      o.fail(where + ": dia-filters do not map onto archival upsets");
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) {
        const bool le = cs[i].is_finer_than(cs[j]);
        if (le != fs[i].elements.is_subset_of(fs[j].elements) || le != us[j].is_subset_of(us[i]))
          o.fail(where + ": bijections not order compatible");
      }
    const Bitset comp = tha::dia_compatible(a);
    comp.for_each([&](std::size_t x) {
      const Filter up{a.up(x)};
      if (!tha::is_dia_filter(a, up) || a.meet_of(up.elements) != x) o.fail(where + ": up/meet fail on an element");
    });
    for (const auto& df : dfs) {
      const std::size_t m = a.meet_of(df.elements);
      if (!comp.test(m) || a.up(m) != df.elements) o.fail(where + ": up/meet fail on a filter");
    }
  }
  return o;
}

Outcome reachability() {
  Outcome o;
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto& e = tha::transit_enumerator(n);
    for (std::size_t i = 0; i < e.size(); ++i) {
      const TemporalTransit f = e.at(i);
      if (tha::topo_reachability(f) != tha::z_relation(f)) o.fail("topo != Z on " + frame_text(f));
    }
  }
  for (const auto& f : corpus())
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.size()); ++m) {
      const Bitset s = Bitset::from_mask(f.size(), m);
      if (tha::is_archival(f, s, tha::ArchivalMode::General) != tha::is_archival(f, s, tha::ArchivalMode::Finite))
        o.fail("archival modes differ on " + frame_text(f) + " " + s.to_string());
    }
  return o;
}

Outcome characterizations() {
  Outcome o;
  for (const auto& f : corpus()) {
    const tha::Classification c = tha::classify(f);
    if (!c.agree()) o.fail("routes disagree on " + frame_text(f));
    const bool simple = c.algebraic.congruence_count == 2;
    if (simple != (tha::is_z_connected(f) && f.size() > 0)) o.fail("simple vs Z-connected on " + frame_text(f));
    if (c.algebraic.opremum.has_value() != tha::is_z_rooted(f)) o.fail("opremum vs Z-rooted on " + frame_text(f));
  }
  return o;
}

Outcome soundness() {
  Outcome o;
  const auto axioms = tha::thc_axioms();
  for (const auto& f : corpus())
    for (const auto& ax : axioms)
      if (!tha::frame_validates(f, ax)) o.fail(tha::print_formula(ax) + " fails on " + frame_text(f));
  // phi -> chi valid gives dia phi -> dia chi valid
  testing::Rng rng(2024);
  std::size_t checked = 0;
  const std::vector<std::string> atoms{"p", "q"};
  while (checked < 100) {
    const TemporalTransit& f = corpus()[testing::pick(rng, corpus().size())];
    Formula phi = testing::random_formula(rng, 3, atoms);
    Formula chi = testing::random_formula(rng, 3, atoms);
    switch (testing::pick(rng, 3)) {
      case 0: chi = Formula::disj(phi, chi); break;
      case 1: phi = Formula::conj(chi, phi); break;
      default: break;
    }
    if (!tha::frame_validates(f, Formula::imp(phi, chi))) continue;
    ++checked;
    if (!tha::frame_validates(f, Formula::imp(Formula::dia(phi), Formula::dia(chi))))
      o.fail("dia rule fails for " + tha::print_formula(phi) + " / " + tha::print_formula(chi));
  }
  return o;
}

Outcome truth_lemma() {
  Outcome o;
  testing::Rng rng(99);
  for (int t = 0; t < 1000; ++t) {
    const FiniteTHA a = tha::clop_frame(corpus()[testing::pick(rng, corpus().size())]).algebra;
    const tha::AlgebraicModel m{a, {{"p", testing::pick(rng, a.size())}, {"q", testing::pick(rng, a.size())}}};
    const Formula f = testing::random_formula(rng, 4, {"p", "q"});
    const std::size_t v = tha::eval_algebraic(m, f);
    if (v != oracle::eval(a, oracle::naive_lattice(a), m.valuation, f)) o.fail("eval differs on " + tha::print_formula(f));
    if (!tha::truth_lemma_check(m, f)) o.fail("truth lemma fails on " + tha::print_formula(f));
    const tha::RelationalModel sm = tha::spec_model(m);
    if ((v == a.top()) != tha::validates(sm, f)) o.fail("validity transfer fails on " + tha::print_formula(f));
  }
  return o;
}

Outcome filtration() {
  Outcome o;
  testing::Rng rng(777);
  for (int t = 0; t < 500; ++t) {
    const TemporalTransit fr = testing::random_transit(rng, 1 + testing::pick(rng, 12));
    const auto m = testing::random_model(rng, fr, {"p", "q", "r"});
    const Formula f = testing::random_formula(rng, 4, {"p", "q", "r"});
    const auto res = tha::filtrate(m, tha::subformula_closure(f));
    const std::string where = tha::print_formula(f) + " on " + frame_text(fr);
    if (!tha::validate_transit(res.model.frame).ok()) o.fail("not a transit: " + where);
    if (res.sigma.size() < 64 && res.model.frame.size() > (std::size_t{1} << res.sigma.size()))
      o.fail("too many classes: " + where);
    const auto rep = tha::check_filtration(m, res);
    if (!rep.ok()) o.fail(rep.to_string() + where);
    const auto vm = naive_val(m), vr = naive_val(res.model);
    for (const auto& s : res.sigma) {
      const auto big = oracle::truth(oracle::matrix(fr.r_fwd()), vm, s);
      const auto small = oracle::truth(oracle::matrix(res.model.frame.r_fwd()), vr, s);
      for (std::size_t x = 0; x < fr.size(); ++x)
        if (big[x] != small[res.class_of[x]]) o.fail("truth not preserved: " + tha::print_formula(s) + " " + where);
    }
  }
  return o;
}

std::string search_text(const tha::SearchResult& r) {
  std::ostringstream s;
  s << r.max_points << ' ' << r.closure_size << ' ' << r.certified;
  if (r.countermodel)
    s << ' ' << r.countermodel->frame_index << ' ' << r.countermodel->point << ' '
      << tha::dump(tha::model_to_json(r.countermodel->model));
  return s.str();
}

Outcome fmp() {
  Outcome o;
  const auto run = [&](const Formula& f, std::size_t max) {
    const auto one = tha::countermodel_search(f, {max, false, 1});
    const auto eight = tha::countermodel_search(f, {max, false, 8});
    if (search_text(one) != search_text(eight)) o.fail("1 vs 8 workers differ on " + tha::print_formula(f));
    return one;
  };
  for (const char* text : {"box p -> p", "p | (p -> bot)"}) {
    const Formula f = tha::parse_formula(text);
    const auto r = run(f, 2);
    if (!r.countermodel) {
      o.fail(std::string("no countermodel for ") + text);
      continue;
    }
    const auto& cm = *r.countermodel;
    const auto t = oracle::truth(oracle::matrix(cm.model.frame.r_fwd()), naive_val(cm.model), f);
    if (t[cm.point]) o.fail(std::string("reported model does not refute ") + text);
  }
  std::vector<Formula> valid = tha::thc_axioms();
  valid.push_back(tha::parse_formula("dia p -> p"));
  for (const auto& f : valid)
    if (run(f, 5).countermodel) o.fail("countermodel found for " + tha::print_formula(f));
  return o;
}

Outcome subdirect() {
  Outcome o;
  for (const auto& f : corpus()) {
    const auto rep = tha::check_subdirect_decomposition(tha::clop_frame(f).algebra);
    if (!rep.ok()) o.fail(frame_text(f) + ": " + rep.to_string());
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0: none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "3-point example frame loads; Refl = {y}; reflexivised R is <=", 1, three_point_frame},
      {2, "10-point example frame: Z[z] excludes exactly w and w'", 1, ten_point_frame},
      {3, "duality: gamma and pi on every transit with <= 4 points", 60, duality},
      {4, "congruences, dia-filters, archival upsets and dia-compatibles correspond", 120, correspondence},
      {5, "topo-reachability equals Z on <= 5 points; archival modes agree", 0, reachability},
      {6, "simple and SI routes agree", 0, characterizations},
      {7, "axioms valid on every <= 4-point transit; dia rule preserves validity", 0, soundness},
      {8, "truth lemma and validity transfer on 1000 samples", 0, truth_lemma},
      {9, "filtration on 500 random models", 0, filtration},
      {10, "countermodel search refutes, certifies bounds, ignores worker count", 60, fmp},
      {11, "subdirect decomposition of every corpus algebra", 0, subdirect},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.budget_s > 0 && secs >= c.budget_s) o.fail("over time budget");
    if (!o.ok) ++failures;
    std::printf("%s %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.ok ? "" : " -- ",
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
