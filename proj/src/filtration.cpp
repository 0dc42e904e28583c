#include "tha/filtration.hpp"

#include <algorithm>
#include <map>

#include "tha/error.hpp"
#include "tha/semantics.hpp"

namespace tha {

FiltrationResult filtrate(const RelationalModel& m, const std::vector<Formula>& sigma) {
  if (!is_subformula_closed(sigma)) throw StructureError("formula set is not subformula-closed");
  const std::size_t n = m.frame.size();
  std::vector<Bitset> truth;
  for (const auto& s : sigma) truth.push_back(truth_set(m, s));

  FiltrationResult out;
  out.sigma = sigma;
  out.class_of.assign(n, 0);
  std::map<std::vector<bool>, std::size_t> theory_class;
  std::vector<std::size_t> rep;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<bool> theory(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) theory[i] = truth[i].test(x);
    auto [it, fresh] = theory_class.emplace(std::move(theory), rep.size());
    if (fresh) rep.push_back(x);
    out.class_of[x] = it->second;
  }
  const std::size_t k = rep.size();

  // lift each relation through the classes, then close transitively
  auto lift = [&](const BinRel& r) {
    BinRel lifted(k);
    for (std::size_t x = 0; x < n; ++x) {
      r.row(x).for_each([&](std::size_t y) { lifted.set(out.class_of[x], out.class_of[y]); });
    }
    return transitive_closure(lifted);
  };
  BinRel r_fwd = lift(m.frame.r_fwd());
  out.r_back = lift(m.frame.r_back());
  out.leq = lift(m.frame.leq());

  std::vector<std::string> labels;
  if (!m.frame.labels().empty()) {
    for (std::size_t c = 0; c < k; ++c) labels.push_back("[" + m.frame.label(rep[c]) + "]");
  }
  out.model.frame = TemporalTransit(std::move(r_fwd), std::move(labels));
  for (const auto& s : sigma) {
    if (s.op() != Op::Atom) continue;
    Bitset val(k);
    m.valuation.at(s.name()).for_each([&](std::size_t x) { val.set(out.class_of[x]); });
    out.model.valuation.emplace(s.name(), std::move(val));
  }
  return out;
}

Report check_filtration(const RelationalModel& m, const FiltrationResult& r) {
  Report rep;
  const TemporalTransit& src = m.frame;
  const TemporalTransit& dst = r.model.frame;
  const auto& c = r.class_of;
  rep.merge(validate_transit(dst), "frame.");
  if (r.r_back != dst.r_back()) rep.add("closure.r-back", {}, "closure of lifted R< is not the inverse of R>");
  if (r.leq != dst.leq()) rep.add("closure.leq", {}, "closure of lifted <= is not the reflexivisation of R>");
  if (r.sigma.size() < 63 && dst.size() > (std::size_t{1} << r.sigma.size())) {
    rep.add("bound", {dst.size(), r.sigma.size()}, "more classes than 2^|sigma|");
  }

  std::vector<Bitset> truth;
  for (const auto& s : r.sigma) truth.push_back(truth_set(m, s));
  const std::size_t n = src.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (src.r_fwd().test(x, y) && !dst.r_fwd().test(c[x], c[y])) rep.add("transfer.1", {x, y}, "R> not lifted");
      if (src.r_back().test(x, y) && !dst.r_back().test(c[x], c[y])) rep.add("transfer.3", {x, y}, "R< not lifted");
      if (src.leq().test(x, y) && !dst.leq().test(c[x], c[y])) rep.add("transfer.5", {x, y}, "<= not lifted");
      for (std::size_t i = 0; i < r.sigma.size(); ++i) {
        const Formula& s = r.sigma[i];
        if (dst.r_fwd().test(c[x], c[y]) && s.op() == Op::Box) {
          const std::size_t body = static_cast<std::size_t>(
              std::find(r.sigma.begin(), r.sigma.end(), s.left()) - r.sigma.begin());
          if (truth[i].test(x) && !truth[body].test(y)) rep.add("transfer.2", {x, y, i}, "box formula not transferred");
        }
        if (dst.r_back().test(c[x], c[y]) && s.op() == Op::Dia) {
          const std::size_t body = static_cast<std::size_t>(
              std::find(r.sigma.begin(), r.sigma.end(), s.left()) - r.sigma.begin());
          if (truth[body].test(y) && !truth[i].test(x)) rep.add("transfer.4", {x, y, i}, "dia formula not transferred");
        }
        if (dst.leq().test(c[x], c[y]) && truth[i].test(x) && !truth[i].test(y)) {
          rep.add("transfer.6", {x, y, i}, "formula not persistent across the lifted order");
        }
      }
    }
  }
  for (std::size_t i = 0; i < r.sigma.size(); ++i) {
    const Bitset lifted = truth_set(r.model, r.sigma[i]);
    for (std::size_t x = 0; x < n; ++x) {
      if (truth[i].test(x) != lifted.test(c[x])) rep.add("truth", {x, i}, "truth differs between x and [x]");
    }
  }
  return rep;
}

bool filtration_lemma_check(const RelationalModel& m, const Formula& f) {
  const auto sigma = subformula_closure(f);
  const FiltrationResult r = filtrate(m, sigma);
  for (const auto& s : sigma) {
    const Bitset before = truth_set(m, s);
    const Bitset after = truth_set(r.model, s);
    for (std::size_t x = 0; x < m.frame.size(); ++x) {
      if (before.test(x) != after.test(r.class_of[x])) return false;
    }
  }
  return true;
}

}  // namespace tha
