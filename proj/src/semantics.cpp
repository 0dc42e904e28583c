#include "tha/semantics.hpp"

#include "tha/duality.hpp"
#include "tha/error.hpp"

namespace tha {

std::size_t eval_algebraic(const AlgebraicModel& m, const Formula& f) {
  const FiniteTHA& a = m.algebra;
  switch (f.op()) {
    case Op::Atom: {
      auto it = m.valuation.find(f.name());
      if (it == m.valuation.end()) throw Error("unbound atom: " + f.name());
      return it->second;
    }
    case Op::Bot: return a.bot();
    case Op::Top: return a.top();
    case Op::And: return a.meet(eval_algebraic(m, f.left()), eval_algebraic(m, f.right()));
    case Op::Or: return a.join(eval_algebraic(m, f.left()), eval_algebraic(m, f.right()));
    case Op::Imp: return a.impl(eval_algebraic(m, f.left()), eval_algebraic(m, f.right()));
    case Op::Box: return a.box(eval_algebraic(m, f.left()));
    case Op::Dia: return a.dia(eval_algebraic(m, f.left()));
  }
  throw std::logic_error("unknown connective");
}

Bitset truth_set(const RelationalModel& m, const Formula& f) {
  const TemporalTransit& x = m.frame;
  switch (f.op()) {
    case Op::Atom: {
      auto it = m.valuation.find(f.name());
      if (it == m.valuation.end()) throw Error("unbound atom: " + f.name());
      return it->second;
    }
    case Op::Bot: return x.none();
    case Op::Top: return x.all();
    case Op::And: return truth_set(m, f.left()) & truth_set(m, f.right());
    case Op::Or: return truth_set(m, f.left()) | truth_set(m, f.right());
    case Op::Imp: return ~x.down(truth_set(m, f.left()) - truth_set(m, f.right()));
    case Op::Box: return ~x.r_fwd().preimage(~truth_set(m, f.left()));
    case Op::Dia: return x.r_fwd().image(truth_set(m, f.left()));
  }
  throw std::logic_error("unknown connective");
}

bool forces(const RelationalModel& m, std::size_t x, const Formula& f) {
  if (x >= m.frame.size()) throw std::out_of_range("forces: point outside frame");
  return truth_set(m, f).test(x);
}

bool validates(const RelationalModel& m, const Formula& f) { return truth_set(m, f).all(); }

bool frame_validates(const TemporalTransit& frame, const Formula& f) {
  const auto ups = all_upsets(frame.leq());
  const auto atoms = f.atoms();
  const std::vector<std::string> names(atoms.begin(), atoms.end());
  std::vector<std::size_t> choice(names.size(), 0);
  RelationalModel m{frame, {}};
  while (true) {
    for (std::size_t i = 0; i < names.size(); ++i) m.valuation[names[i]] = ups[choice[i]];
    if (!validates(m, f)) return false;
    std::size_t i = names.size();
    while (i > 0 && ++choice[i - 1] == ups.size()) choice[--i] = 0;
    if (i == 0) return true;
  }
}

bool truth_lemma_check(const AlgebraicModel& m, const Formula& f) {
  const std::size_t value = eval_algebraic(m, f);
  const SpectrumResult spec = spec_algebra(m.algebra);
  const RelationalModel rel = spec_model(m);
  const Bitset forced = truth_set(rel, f);
  for (std::size_t x = 0; x < spec.point_filters.size(); ++x) {
    if (spec.point_filters[x].test(value) != forced.test(x)) return false;
  }
  return true;
}

}  // namespace tha
