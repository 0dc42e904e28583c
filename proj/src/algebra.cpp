#include "tha/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tha/error.hpp"

namespace tha {

namespace {

std::string pair_text(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Greatest element of s under leq, or npos.
std::size_t greatest_in(const BinRel& geq, const Bitset& s) {
  std::size_t found = Bitset::npos;
  s.for_each([&](std::size_t g) {
    if (found == Bitset::npos && s.is_subset_of(geq.row(g))) found = g;
  });
  return found;
}

}  // namespace

LatticeOps derive_lattice(const BinRel& leq) {
  if (!is_partial_order(leq)) throw StructureError("order is not a partial order");
  const std::size_t n = leq.size();
  if (n == 0) throw StructureError("empty carrier has no bounds");
  const BinRel geq = inverse(leq);
  LatticeOps ops;
  ops.meet.assign(n * n, 0);
  ops.join.assign(n * n, 0);
  ops.bot = Bitset::npos;
  ops.top = Bitset::npos;
  for (std::size_t a = 0; a < n; ++a) {
    if (leq.row(a).all()) ops.bot = a;
    if (geq.row(a).all()) ops.top = a;
  }
  if (ops.bot == Bitset::npos) throw StructureError("order has no least element");
  if (ops.top == Bitset::npos) throw StructureError("order has no greatest element");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t m = greatest_in(geq, geq.row(a) & geq.row(b));
      if (m == Bitset::npos) throw StructureError("no meet for pair " + pair_text(a, b));
      // least upper bound: greatest under the reversed order
      const std::size_t j = greatest_in(leq, leq.row(a) & leq.row(b));
      if (j == Bitset::npos) throw StructureError("no join for pair " + pair_text(a, b));
      ops.meet[a * n + b] = m;
      ops.join[a * n + b] = j;
    }
  }
  return ops;
}

OpTable derive_heyting_implication(const BinRel& leq, const OpTable& meet, const OpTable& join) {
  const std::size_t n = leq.size();
  if (meet.size() != n * n || join.size() != n * n) throw std::invalid_argument("table size mismatch");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (meet[a * n + join[b * n + c]] != join[meet[a * n + b] * n + meet[a * n + c]]) {
          throw StructureError("lattice is not distributive at (" + std::to_string(a) + "," + std::to_string(b) +
                               "," + std::to_string(c) + ")");
        }
      }
    }
  }
  const BinRel geq = inverse(leq);
  OpTable impl(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Bitset candidates(n);
      for (std::size_t c = 0; c < n; ++c) {
        if (leq.test(meet[a * n + c], b)) candidates.set(c);
      }
      const std::size_t g = greatest_in(geq, candidates);
      if (g == Bitset::npos) throw StructureError("no relative pseudo-complement for " + pair_text(a, b));
      impl[a * n + b] = g;
    }
  }
  return impl;
}

FiniteTHA FiniteTHA::from_order(BinRel leq, std::vector<std::size_t> box, std::vector<std::size_t> dia,
                                std::vector<std::string> labels) {
  LatticeOps ops = derive_lattice(leq);
  OpTable impl = derive_heyting_implication(leq, ops.meet, ops.join);
  return from_tables(std::move(leq), std::move(ops.meet), std::move(ops.join), std::move(impl), std::move(box),
                     std::move(dia), ops.bot, ops.top, std::move(labels));
}

FiniteTHA FiniteTHA::from_tables(BinRel leq, OpTable meet, OpTable join, OpTable impl, std::vector<std::size_t> box,
                                 std::vector<std::size_t> dia, std::size_t bot, std::size_t top,
                                 std::vector<std::string> labels) {
  const std::size_t n = leq.size();
  if (meet.size() != n * n || join.size() != n * n || impl.size() != n * n) {
    throw StructureError("binary tables must have n*n entries");
  }
  if (box.size() != n) throw StructureError("box table must have n entries");
  if (dia.size() != n) throw StructureError("dia table must have n entries");
  auto in_range = [n](const std::vector<std::size_t>& t) {
    return std::all_of(t.begin(), t.end(), [n](std::size_t v) { return v < n; });
  };
  if (!in_range(meet) || !in_range(join) || !in_range(impl)) throw StructureError("table entry outside carrier");
  if (!in_range(box)) throw StructureError("box maps outside the carrier");
  if (!in_range(dia)) throw StructureError("dia maps outside the carrier");
  if (n > 0 && (bot >= n || top >= n)) throw StructureError("bounds outside carrier");
  FiniteTHA a;
  a.leq_ = std::move(leq);
  a.meet_ = std::move(meet);
  a.join_ = std::move(join);
  a.impl_ = std::move(impl);
  a.box_ = std::move(box);
  a.dia_ = std::move(dia);
  a.bot_ = bot;
  a.top_ = top;
  a.labels_ = std::move(labels);
  return a;
}

std::string FiniteTHA::label(std::size_t a) const {
  return a < labels_.size() ? labels_[a] : std::to_string(a);
}

std::size_t FiniteTHA::meet_of(const Bitset& s) const {
  std::size_t m = top_;
  s.for_each([&](std::size_t a) { m = meet(m, a); });
  return m;
}

bool satisfies_adjunction(const FiniteTHA& a) {
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (a.leq(a.dia(x), y) != a.leq(x, a.box(y))) return false;
    }
  }
  return true;
}

bool satisfies_temporal_equations(const FiniteTHA& a) {
  const std::size_t n = a.size();
  if (n > 0 && a.dia(a.bot()) != a.bot()) return false;
  for (std::size_t x = 0; x < n; ++x) {
    if (!a.leq(x, a.box(a.dia(x))) || !a.leq(a.dia(a.box(x)), x)) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (a.dia(a.join(x, y)) != a.join(a.dia(x), a.dia(y))) return false;
    }
  }
  return true;
}

Report validate_tha(const FiniteTHA& a) {
  Report r;
  const std::size_t n = a.size();
  if (n == 0) {
    r.add("carrier.empty", {}, "an algebra needs at least one element");
    return r;
  }
  const BinRel& leq = a.leq();
  if (!is_partial_order(leq)) {
    r.add("leq.partial-order", {}, "order is not reflexive, antisymmetric and transitive");
    return r;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!a.leq(a.bot(), x)) r.add("lattice.bot", {a.bot(), x}, "bot is not below every element");
    if (!a.leq(x, a.top())) r.add("lattice.top", {x, a.top()}, "top is not above every element");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t m = a.meet(x, y), j = a.join(x, y);
      bool meet_ok = a.leq(m, x) && a.leq(m, y);
      bool join_ok = a.leq(x, j) && a.leq(y, j);
      for (std::size_t c = 0; c < n; ++c) {
        if (a.leq(c, x) && a.leq(c, y) && !a.leq(c, m)) meet_ok = false;
        if (a.leq(x, c) && a.leq(y, c) && !a.leq(j, c)) join_ok = false;
      }
      if (!meet_ok) r.add("lattice.meet", {x, y}, "meet is not the greatest lower bound");
      if (!join_ok) r.add("lattice.join", {x, y}, "join is not the least upper bound");
    }
  }
  if (!r.ok()) return r;

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z))) {
          r.add("lattice.distributive", {x, y, z}, "x meet (y join z) differs from (x meet y) join (x meet z)");
        }
        if (a.leq(a.meet(x, z), y) != a.leq(z, a.impl(x, y))) {
          r.add("heyting.residuation", {x, y, z}, "x meet z <= y does not match z <= x -> y");
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!a.leq(x, a.box(x))) r.add("frontal.inflationary", {x}, "a <= box a fails");
    for (std::size_t y = 0; y < n; ++y) {
      if (a.box(a.meet(x, y)) != a.meet(a.box(x), a.box(y))) {
        r.add("frontal.box-meet", {x, y}, "box does not preserve this meet");
      }
      if (!a.leq(a.box(x), a.join(y, a.impl(y, x)))) {
        r.add("frontal.box-le", {x, y}, "box a <= b join (b -> a) fails");
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (a.leq(a.dia(x), y) != a.leq(x, a.box(y))) {
        r.add("temporal.adjunction", {x, y}, "dia a <= b does not match a <= box b");
      }
    }
  }
  if (a.dia(a.bot()) != a.bot()) r.add("temporal.dia-bot", {a.bot()}, "dia 0 != 0");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (a.dia(a.join(x, y)) != a.join(a.dia(x), a.dia(y))) {
        r.add("temporal.dia-join", {x, y}, "dia does not preserve this join");
      }
    }
    if (!a.leq(x, a.box(a.dia(x)))) r.add("temporal.unit", {x}, "a <= box dia a fails");
    if (!a.leq(a.dia(a.box(x)), x)) r.add("temporal.counit", {x}, "dia box a <= a fails");
  }
  const bool box_meets = !r.has("frontal.box-meet");
  if (box_meets && satisfies_adjunction(a) != satisfies_temporal_equations(a)) {
    r.add("temporal.forms-disagree", {}, "adjunction and equational forms disagree although box preserves meets");
  }
  return r;
}

bool is_filter(const FiniteTHA& a, const Bitset& s) {
  if (s.size() != a.size() || a.size() == 0 || !s.test(a.top())) return false;
  bool ok = true;
  s.for_each([&](std::size_t x) {
    if (!a.up(x).is_subset_of(s)) ok = false;
    s.for_each([&](std::size_t y) {
      if (!s.test(a.meet(x, y))) ok = false;
    });
  });
  return ok;
}

std::vector<Filter> filters(const FiniteTHA& a) {
  std::vector<Filter> out;
  // every filter of a finite lattice is the up-set of its meet
  for (std::size_t x = 0; x < a.size(); ++x) out.push_back({a.up(x)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Filter> prime_filters(const FiniteTHA& a) {
  std::vector<Filter> out;
  for (auto& f : filters(a)) {
    if (f.contains(a.bot())) continue;
    bool prime = true;
    for (std::size_t x = 0; x < a.size() && prime; ++x) {
      for (std::size_t y = 0; y < a.size() && prime; ++y) {
        if (f.contains(a.join(x, y)) && !f.contains(x) && !f.contains(y)) prime = false;
      }
    }
    if (prime) out.push_back(std::move(f));
  }
  return out;
}

Filter filter_generated(const FiniteTHA& a, const Bitset& s) { return {a.up(a.meet_of(s))}; }

std::optional<std::pair<std::size_t, std::size_t>> dia_filter_violation(const FiniteTHA& a, const Filter& f) {
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (f.contains(a.impl(x, y)) && !f.contains(a.impl(a.dia(x), a.dia(y)))) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

bool is_dia_filter(const FiniteTHA& a, const Filter& f) {
  return is_filter(a, f.elements) && !dia_filter_violation(a, f);
}

std::vector<Filter> dia_filters(const FiniteTHA& a) {
  std::vector<Filter> out;
  for (auto& f : filters(a)) {
    if (!dia_filter_violation(a, f)) out.push_back(std::move(f));
  }
  return out;
}

Bitset dia_compatible(const FiniteTHA& a) {
  Bitset out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    bool ok = true;
    for (std::size_t y = 0; y < a.size() && ok; ++y) {
      ok = a.leq(a.meet(x, a.dia(y)), a.dia(a.meet(x, y)));
    }
    if (ok) out.set(x);
  }
  return out;
}

std::optional<std::size_t> dia_opremum(const FiniteTHA& a) {
  if (a.size() == 0) return std::nullopt;
  Bitset below_top = dia_compatible(a);
  below_top.reset(a.top());
  const std::size_t g = greatest_in(inverse(a.leq()), below_top);
  if (g == Bitset::npos) return std::nullopt;
  return g;
}

Congruence::Congruence(std::vector<std::size_t> class_of) : class_of_(std::move(class_of)) {
  std::vector<std::size_t> seen;
  for (auto& c : class_of_) {
    auto it = std::find(seen.begin(), seen.end(), c);
    if (it == seen.end()) {
      seen.push_back(c);
      c = seen.size() - 1;
    } else {
      c = static_cast<std::size_t>(it - seen.begin());
    }
  }
  class_count_ = seen.size();
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), 0);
  return Congruence(std::move(m));
}

Congruence Congruence::full(std::size_t n) { return Congruence(std::vector<std::size_t>(n, 0)); }

std::vector<Bitset> Congruence::classes() const {
  std::vector<Bitset> out(class_count_, Bitset(size()));
  for (std::size_t a = 0; a < size(); ++a) out[class_of_[a]].set(a);
  return out;
}

bool Congruence::is_finer_than(const Congruence& other) const {
  if (other.size() != size()) throw std::invalid_argument("congruences on different carriers");
  // each class maps into a single class of other
  std::vector<std::size_t> target(class_count_, Bitset::npos);
  for (std::size_t a = 0; a < size(); ++a) {
    auto& t = target[class_of_[a]];
    if (t == Bitset::npos) {
      t = other.class_of(a);
    } else if (t != other.class_of(a)) {
      return false;
    }
  }
  return true;
}

Report check_congruence(const FiniteTHA& a, const Congruence& theta) {
  Report r;
  const std::size_t n = a.size();
  if (theta.size() != n) {
    r.add("cong.size", {theta.size(), n}, "partition is on a different carrier");
    return r;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!theta.related(x, y)) continue;
      if (!theta.related(a.box(x), a.box(y))) r.add("cong.box", {x, y}, "box images fall in different classes");
      if (!theta.related(a.dia(x), a.dia(y))) r.add("cong.dia", {x, y}, "dia images fall in different classes");
      for (std::size_t c = 0; c < n; ++c) {
        if (!theta.related(a.meet(x, c), a.meet(y, c))) r.add("cong.meet", {x, y, c}, "meet not compatible");
        if (!theta.related(a.join(x, c), a.join(y, c))) r.add("cong.join", {x, y, c}, "join not compatible");
        if (!theta.related(a.impl(x, c), a.impl(y, c)) || !theta.related(a.impl(c, x), a.impl(c, y))) {
          r.add("cong.impl", {x, y, c}, "implication not compatible");
        }
      }
    }
  }
  return r;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    parent_[y] = x;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Closes the partition under compatibility with every operation.
void close_under_operations(const FiniteTHA& a, UnionFind& uf) {
  const std::size_t n = a.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t y = uf.find(x);
      if (y == x) continue;
      changed |= uf.unite(a.box(x), a.box(y));
      changed |= uf.unite(a.dia(x), a.dia(y));
      for (std::size_t c = 0; c < n; ++c) {
        changed |= uf.unite(a.meet(x, c), a.meet(y, c));
        changed |= uf.unite(a.join(x, c), a.join(y, c));
        changed |= uf.unite(a.impl(x, c), a.impl(y, c));
        changed |= uf.unite(a.impl(c, x), a.impl(c, y));
      }
    }
  }
}

struct PairSearch {
  const FiniteTHA& a;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::pair<std::size_t, std::size_t>> apart;
  std::vector<Congruence> found;

  void run(std::size_t i, UnionFind uf) {
    while (i < pairs.size() && uf.find(pairs[i].first) == uf.find(pairs[i].second)) ++i;
    if (i == pairs.size()) {
      std::vector<std::size_t> m(a.size());
      for (std::size_t x = 0; x < a.size(); ++x) m[x] = uf.find(x);
      found.emplace_back(std::move(m));
      return;
    }
    const auto [x, y] = pairs[i];
    UnionFind merged = uf;
    merged.unite(x, y);
    close_under_operations(a, merged);
    const bool consistent = std::none_of(apart.begin(), apart.end(), [&](const auto& p) {
      return merged.find(p.first) == merged.find(p.second);
    });
    if (consistent) run(i + 1, std::move(merged));
    apart.push_back(pairs[i]);
    run(i + 1, std::move(uf));
    apart.pop_back();
  }
};

}  // namespace

std::vector<Congruence> congruences_bruteforce(const FiniteTHA& a) {
  PairSearch search{a, {}, {}, {}};
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = x + 1; y < a.size(); ++y) search.pairs.emplace_back(x, y);
  }
  search.run(0, UnionFind(a.size()));
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

Filter cong_to_filter(const FiniteTHA& a, const Congruence& theta) {
  Filter f{Bitset(a.size())};
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (theta.related(x, a.top())) f.elements.set(x);
  }
  return f;
}

Congruence filter_to_cong(const FiniteTHA& a, const Filter& f) {
  if (!is_filter(a, f.elements)) throw StructureError("not a filter: " + f.elements.to_string());
  if (auto v = dia_filter_violation(a, f)) {
    throw StructureError("not a dia-filter: " + std::to_string(v->first) + " -> " + std::to_string(v->second) +
                         " is in the filter but its dia image is not");
  }
  std::vector<std::size_t> m(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    m[x] = x;
    for (std::size_t y = 0; y < x; ++y) {
      if (f.contains(a.bi_impl(x, y))) {
        m[x] = m[y];
        break;
      }
    }
  }
  return Congruence(std::move(m));
}

FiniteTHA quotient(const FiniteTHA& a, const Congruence& theta) {
  if (theta.size() != a.size()) throw std::invalid_argument("quotient: congruence on a different carrier");
  const std::size_t k = theta.class_count();
  std::vector<std::size_t> rep(k, Bitset::npos);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (rep[theta.class_of(x)] == Bitset::npos) rep[theta.class_of(x)] = x;
  }
  BinRel leq(k);
  OpTable meet(k * k), join(k * k), impl(k * k);
  std::vector<std::size_t> box(k), dia(k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    box[i] = theta.class_of(a.box(rep[i]));
    dia[i] = theta.class_of(a.dia(rep[i]));
    if (!a.labels().empty()) labels.push_back(a.label(rep[i]));
    for (std::size_t j = 0; j < k; ++j) {
      meet[i * k + j] = theta.class_of(a.meet(rep[i], rep[j]));
      join[i * k + j] = theta.class_of(a.join(rep[i], rep[j]));
      impl[i * k + j] = theta.class_of(a.impl(rep[i], rep[j]));
      if (meet[i * k + j] == i) leq.set(i, j);
    }
  }
  return FiniteTHA::from_tables(std::move(leq), std::move(meet), std::move(join), std::move(impl), std::move(box),
                                std::move(dia), theta.class_of(a.bot()), theta.class_of(a.top()),
                                std::move(labels));
}

FiniteTHA product(const FiniteTHA& a, const FiniteTHA& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  auto idx = [nb](std::size_t i, std::size_t j) { return i * nb + j; };
  BinRel leq(n);
  OpTable meet(n * n), join(n * n), impl(n * n);
  std::vector<std::size_t> box(n), dia(n);
  std::vector<std::string> labels;
  const bool labelled = !a.labels().empty() || !b.labels().empty();
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      const std::size_t x = idx(i, j);
      box[x] = idx(a.box(i), b.box(j));
      dia[x] = idx(a.dia(i), b.dia(j));
      if (labelled) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
      for (std::size_t k = 0; k < na; ++k) {
        for (std::size_t l = 0; l < nb; ++l) {
          const std::size_t y = idx(k, l);
          if (a.leq(i, k) && b.leq(j, l)) leq.set(x, y);
          meet[x * n + y] = idx(a.meet(i, k), b.meet(j, l));
          join[x * n + y] = idx(a.join(i, k), b.join(j, l));
          impl[x * n + y] = idx(a.impl(i, k), b.impl(j, l));
        }
      }
    }
  }
  return FiniteTHA::from_tables(std::move(leq), std::move(meet), std::move(join), std::move(impl), std::move(box),
                                std::move(dia), idx(a.bot(), b.bot()), idx(a.top(), b.top()), std::move(labels));
}

Report check_homomorphism(const std::vector<std::size_t>& h, const FiniteTHA& a, const FiniteTHA& b) {
  Report r;
  if (h.size() != a.size()) {
    r.add("hom.total", {h.size(), a.size()}, "map must assign every element");
    return r;
  }
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (h[x] >= b.size()) {
      r.add("hom.codomain", {x, h[x]}, "image outside target carrier");
      return r;
    }
  }
  if (h[a.bot()] != b.bot()) r.add("hom.bot", {a.bot()}, "0 not preserved");
  if (h[a.top()] != b.top()) r.add("hom.top", {a.top()}, "1 not preserved");
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (h[a.box(x)] != b.box(h[x])) r.add("hom.box", {x}, "box not preserved");
    if (h[a.dia(x)] != b.dia(h[x])) r.add("hom.dia", {x}, "dia not preserved");
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (h[a.meet(x, y)] != b.meet(h[x], h[y])) r.add("hom.meet", {x, y}, "meet not preserved");
      if (h[a.join(x, y)] != b.join(h[x], h[y])) r.add("hom.join", {x, y}, "join not preserved");
      if (h[a.impl(x, y)] != b.impl(h[x], h[y])) r.add("hom.impl", {x, y}, "implication not preserved");
    }
  }
  return r;
}

bool is_homomorphism(const std::vector<std::size_t>& h, const FiniteTHA& a, const FiniteTHA& b) {
  return check_homomorphism(h, a, b).ok();
}

namespace {

bool extend_algebra_iso(const FiniteTHA& a, const FiniteTHA& b, std::vector<std::size_t>& map,
                        std::vector<bool>& used, std::size_t i) {
  const std::size_t n = a.size();
  if (i == n) {
    for (std::size_t x = 0; x < n; ++x) {
      if (map[a.box(x)] != b.box(map[x]) || map[a.dia(x)] != b.dia(map[x])) return false;
    }
    return true;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j] || a.up(i).count() != b.up(j).count()) continue;
    bool consistent = true;
    for (std::size_t k = 0; k < i && consistent; ++k) {
      consistent = a.leq(i, k) == b.leq(j, map[k]) && a.leq(k, i) == b.leq(map[k], j);
    }
    if (!consistent) continue;
    map[i] = j;
    used[j] = true;
    if (extend_algebra_iso(a, b, map, used, i + 1)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_algebra_isomorphism(const FiniteTHA& a, const FiniteTHA& b) {
  if (a.size() != b.size() || a.leq().count() != b.leq().count()) return std::nullopt;
  std::vector<std::size_t> map(a.size());
  std::vector<bool> used(a.size(), false);
  if (!extend_algebra_iso(a, b, map, used, 0)) return std::nullopt;
  return map;
}

bool AlgebraicClassification::simple_routes_agree() const {
  return simple_by_dia_filters == simple_by_compatibles && simple_by_compatibles == simple_by_congruences;
}

bool AlgebraicClassification::si_routes_agree() const {
  return si_by_dia_filters == si_by_opremum && si_by_opremum == si_by_congruences;
}

AlgebraicClassification classify_algebraic(const FiniteTHA& a) {
  AlgebraicClassification c;
  const std::size_t n = a.size();
  const auto dfs = dia_filters(a);
  const auto congs = congruences_bruteforce(a);
  const Bitset compat = dia_compatible(a);
  c.dia_filter_count = dfs.size();
  c.congruence_count = congs.size();
  c.opremum = dia_opremum(a);

  const Bitset top_only = Bitset::of(n, {a.top()});
  c.simple_by_dia_filters = n >= 2 && dfs.size() == 2 &&
                            std::any_of(dfs.begin(), dfs.end(), [&](const Filter& f) { return f.elements == top_only; }) &&
                            std::any_of(dfs.begin(), dfs.end(), [](const Filter& f) { return f.elements.all(); });
  c.simple_by_compatibles = n >= 2 && compat == Bitset::of(n, {a.bot(), a.top()});
  c.simple_by_congruences = congs.size() == 2;

  // second-least dia-filter: least among those other than {1}
  std::vector<const Filter*> nontrivial;
  for (const auto& f : dfs) {
    if (f.elements != top_only) nontrivial.push_back(&f);
  }
  c.si_by_dia_filters = std::any_of(nontrivial.begin(), nontrivial.end(), [&](const Filter* f) {
    return std::all_of(nontrivial.begin(), nontrivial.end(),
                       [&](const Filter* g) { return f->elements.is_subset_of(g->elements); });
  });
  c.si_by_opremum = c.opremum.has_value();

  const Congruence id = Congruence::identity(n);
  std::vector<const Congruence*> above_id;
  for (const auto& t : congs) {
    if (t != id) above_id.push_back(&t);
  }
  c.si_by_congruences = std::any_of(above_id.begin(), above_id.end(), [&](const Congruence* t) {
    return std::all_of(above_id.begin(), above_id.end(), [&](const Congruence* u) { return t->is_finer_than(*u); });
  });
  return c;
}

bool is_simple(const FiniteTHA& a) {
  const auto c = classify_algebraic(a);
  if (!c.simple_routes_agree()) throw std::logic_error("simplicity routes disagree");
  return c.simple_by_congruences;
}

bool is_subdirectly_irreducible(const FiniteTHA& a) {
  const auto c = classify_algebraic(a);
  if (!c.si_routes_agree()) throw std::logic_error("subdirect irreducibility routes disagree");
  return c.si_by_congruences;
}

std::vector<Congruence> meet_irreducible_congruences(const FiniteTHA& a) {
  const auto congs = congruences_bruteforce(a);
  const Congruence all = Congruence::full(a.size());
  std::vector<Congruence> out;
  for (const auto& t : congs) {
    if (t == all) continue;
    std::size_t covers = 0;
    for (const auto& u : congs) {
      if (u == t || !t.is_finer_than(u)) continue;
      const bool between = std::any_of(congs.begin(), congs.end(), [&](const Congruence& v) {
        return v != t && v != u && t.is_finer_than(v) && v.is_finer_than(u);
      });
      if (!between) ++covers;
    }
    if (covers == 1) out.push_back(t);
  }
  return out;
}

Report check_subdirect_decomposition(const FiniteTHA& a, std::size_t product_limit) {
  Report r;
  const auto factors = meet_irreducible_congruences(a);
  std::vector<FiniteTHA> quotients;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    quotients.push_back(quotient(a, factors[i]));
    if (auto h = check_homomorphism(factors[i].class_map(), a, quotients.back()); !h.ok()) {
      r.merge(h, "factor" + std::to_string(i) + ".");
    }
    if (!is_subdirectly_irreducible(quotients.back())) r.add("factor.si", {i}, "quotient is not SI");
  }
  // the joint map is injective iff the factors intersect to the identity
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = x + 1; y < a.size(); ++y) {
      const bool separated = std::any_of(factors.begin(), factors.end(),
                                         [&](const Congruence& t) { return !t.related(x, y); });
      if (!separated) r.add("joint.injective", {x, y}, "no factor separates these elements");
    }
  }
  std::size_t size = 1;
  for (const auto& q : quotients) {
    size *= q.size();
    if (size > product_limit) return r;
  }
  // build the product and check the joint map into it
  FiniteTHA prod = quotient(a, Congruence::full(a.size()));
  std::vector<std::size_t> joint(a.size(), 0);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    prod = product(prod, quotients[i]);
    for (std::size_t x = 0; x < a.size(); ++x) joint[x] = joint[x] * quotients[i].size() + factors[i].class_of(x);
  }
  r.merge(check_homomorphism(joint, a, prod), "joint.");
  return r;
}

}  // namespace tha
