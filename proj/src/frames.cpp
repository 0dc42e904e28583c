#include "tha/frames.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace tha {

TemporalTransit::TemporalTransit(BinRel r_fwd, std::vector<std::string> labels)
    : r_fwd_(std::move(r_fwd)), labels_(std::move(labels)) {
  r_back_ = inverse(r_fwd_);
  leq_ = reflexivisation(r_fwd_);
  geq_ = inverse(leq_);
}

std::string TemporalTransit::label(std::size_t i) const {
  return i < labels_.size() ? labels_[i] : std::to_string(i);
}

Report validate_transit(const TemporalTransit& f) {
  Report report;
  const std::size_t n = f.size();
  const BinRel& leq = f.leq();
  const BinRel& r = f.r_fwd();

  if (!f.labels().empty() && f.labels().size() != n) {
    report.add("labels.count", {f.labels().size()}, "expected one label per point");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq.test(i, j) && leq.test(j, i)) {
        report.add("leq.antisymmetric", {i, j}, "i <= j and j <= i with i != j");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    leq.row(i).for_each([&](std::size_t j) {
      const Bitset missing = leq.row(j) - leq.row(i);
      if (auto k = missing.first(); k != Bitset::npos) {
        report.add("leq.transitive", {i, j, k}, "i <= j <= k but not i <= k");
      }
    });
  }
  for (std::size_t i = 0; i < n; ++i) {
    r.row(i).for_each([&](std::size_t j) {
      const Bitset missing = r.row(j) - r.row(i);
      if (auto k = missing.first(); k != Bitset::npos) {
        report.add("r.transitive", {i, j, k}, "i R j R k but not i R k");
      }
    });
  }
  const BinRel mixed = compose(compose(leq, r), leq);
  for (std::size_t i = 0; i < n; ++i) {
    const Bitset extra = mixed.row(i) - r.row(i);
    if (auto j = extra.first(); j != Bitset::npos) {
      report.add("r.mix", {i, j}, "(i,j) in <=;R;<= but not in R");
    }
  }
  if (f.r_back() != inverse(r)) report.add("r.converse", {}, "R< is not the inverse of R>");
  return report;
}

Bitset refl_points(const TemporalTransit& f) {
  Bitset out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.r_fwd().test(i, i)) out.set(i);
  }
  return out;
}

BinRel b_relation(const TemporalTransit& f) {
  const std::size_t n = f.size();
  const Bitset refl = refl_points(f);
  BinRel b(n);
  for (std::size_t x = 0; x < n; ++x) {
    f.geq().row(x).for_each([&](std::size_t w) {
      Bitset interval = f.leq().row(w) & f.geq().row(x);
      interval.reset(w);
      if (!interval.intersects(refl)) b.set(x, w);
    });
  }
  return b;
}

BinRel z_relation(const TemporalTransit& f) {
  const std::size_t n = f.size();
  const BinRel b = b_relation(f);
  BinRel z = BinRel::identity(n);
  for (std::size_t step = 0;; ++step) {
    if (step > n + 1) throw std::logic_error("z_relation: fixpoint not reached within the carrier size");
    BinRel next = compose(compose(z, b), f.leq()) | BinRel::identity(n);
    if (next == z) return z;
    z = std::move(next);
  }
}

Bitset z_roots(const TemporalTransit& f) {
  const BinRel z = z_relation(f);
  Bitset out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (z.row(x).all()) out.set(x);
  }
  return out;
}

bool is_z_rooted(const TemporalTransit& f) { return z_roots(f).any(); }

bool is_z_connected(const TemporalTransit& f) { return z_roots(f).all(); }

Bitset z_closure(const TemporalTransit& f, const Bitset& s) { return z_relation(f).image(s); }

bool is_archival(const TemporalTransit& f, const Bitset& s, ArchivalMode mode) {
  if (s.size() != f.size()) throw std::invalid_argument("is_archival: set/frame size mismatch");
  const Bitset outside = s.complement();
  const Bitset refl = refl_points(f);
  bool ok = true;
  s.for_each([&](std::size_t z) {
    if (!ok) return;
    // x ranges over R<[z] - S
    (f.r_back().row(z) & outside).for_each([&](std::size_t x) {
      if (!ok) return;
      const Bitset witnesses = mode == ArchivalMode::General
                                   ? f.r_back().row(z) & f.leq().row(x) & s
                                   : f.geq().row(z) & f.leq().row(x) & refl & s;
      if (witnesses.none()) ok = false;
    });
  });
  return ok;
}

std::vector<Bitset> archival_upsets(const TemporalTransit& f) {
  std::vector<Bitset> out;
  for (auto& u : all_upsets(f.leq())) {
    if (is_archival(f, u)) out.push_back(std::move(u));
  }
  return out;
}

BinRel topo_reachability(const TemporalTransit& f) {
  const std::size_t n = f.size();
  BinRel out = BinRel::full(n);
  for (const auto& c : archival_upsets(f)) {
    c.for_each([&](std::size_t x) { out.row(x) &= c; });
  }
  return out;
}

bool topo_reachable(const TemporalTransit& f, std::size_t x, std::size_t y) {
  if (x >= f.size() || y >= f.size()) throw std::out_of_range("topo_reachable: point outside frame");
  Bitset reach = f.all();
  for (const auto& c : archival_upsets(f)) {
    if (c.test(x)) reach &= c;
  }
  return reach.test(y);
}

Report is_temporal_p_morphism(const PMorphism& m) {
  Report report;
  const TemporalTransit& src = m.source;
  const TemporalTransit& dst = m.target;
  const std::size_t n = src.size();
  if (m.map.size() != n) {
    report.add("map.total", {m.map.size(), n}, "map must assign every source point");
    return report;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (m.map[x] >= dst.size()) {
      report.add("map.codomain", {x, m.map[x]}, "image outside target carrier");
      return report;
    }
  }
  const auto& f = m.map;
  // Image of a set of source points.
  auto image = [&](const Bitset& s) {
    Bitset out(dst.size());
    s.for_each([&](std::size_t x) { out.set(f[x]); });
    return out;
  };

  for (std::size_t x = 0; x < n; ++x) {
    src.leq().row(x).for_each([&](std::size_t y) {
      if (!dst.leq().test(f[x], f[y])) report.add("monotone", {x, y}, "x <= y but not f(x) <= f(y)");
    });
  }
  for (std::size_t x = 0; x < n; ++x) {
    const Bitset missing = dst.leq().row(f[x]) - image(src.leq().row(x));
    if (auto y = missing.first(); y != Bitset::npos) {
      report.add("leq.back", {x, y}, "f(x) <= y but no x' >= x with f(x') = y");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    src.r_fwd().row(x).for_each([&](std::size_t y) {
      if (!dst.r_fwd().test(f[x], f[y])) report.add("r.forth", {x, y}, "x R> y but not f(x) R> f(y)");
    });
  }
  for (std::size_t x = 0; x < n; ++x) {
    const Bitset missing = dst.r_fwd().row(f[x]) - image(src.r_fwd().row(x));
    if (auto y = missing.first(); y != Bitset::npos) {
      report.add("r.back", {x, y}, "f(x) R> y but no x R> x' with f(x') = y");
    }
  }
  for (std::size_t x3 = 0; x3 < n; ++x3) {
    src.r_back().row(x3).for_each([&](std::size_t x2) {
      if (!dst.r_back().test(f[x3], f[x2])) {
        report.add("tES.m.1", {x3, x2}, "x3 R< x2 but not f(x3) R< f(x2)");
      }
    });
  }
  for (std::size_t x2 = 0; x2 < n; ++x2) {
    // targets y with f(x2) R< y must lie below f(x1) for some x2 R< x1
    const Bitset covered = dst.down(image(src.r_back().row(x2)));
    const Bitset missing = dst.r_back().row(f[x2]) - covered;
    if (auto y = missing.first(); y != Bitset::npos) {
      report.add("tES.m.2", {x2, y}, "f(x2) R< y but no x2 R< x1 with y <= f(x1)");
    }
  }
  return report;
}

namespace {

using Signature = std::array<std::size_t, 5>;

Signature point_signature(const TemporalTransit& f, std::size_t x) {
  return {f.r_fwd().row(x).count(), f.r_back().row(x).count(), f.leq().row(x).count(),
          f.geq().row(x).count(), f.r_fwd().test(x, x) ? 1U : 0U};
}

bool extend_isomorphism(const TemporalTransit& a, const TemporalTransit& b,
                        const std::vector<Signature>& sa, const std::vector<Signature>& sb,
                        std::vector<std::size_t>& map, std::vector<bool>& used, std::size_t i) {
  const std::size_t n = a.size();
  if (i == n) return true;
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j] || sa[i] != sb[j]) continue;
    bool consistent = a.r_fwd().test(i, i) == b.r_fwd().test(j, j);
    for (std::size_t k = 0; k < i && consistent; ++k) {
      consistent = a.r_fwd().test(i, k) == b.r_fwd().test(j, map[k]) &&
                   a.r_fwd().test(k, i) == b.r_fwd().test(map[k], j);
    }
    if (!consistent) continue;
    map[i] = j;
    used[j] = true;
    if (extend_isomorphism(a, b, sa, sb, map, used, i + 1)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const TemporalTransit& a, const TemporalTransit& b) {
  const std::size_t n = a.size();
  if (b.size() != n || a.r_fwd().count() != b.r_fwd().count()) return std::nullopt;
  std::vector<Signature> sa(n), sb(n);
  for (std::size_t i = 0; i < n; ++i) {
    sa[i] = point_signature(a, i);
    sb[i] = point_signature(b, i);
  }
  auto sorted_a = sa, sorted_b = sb;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return std::nullopt;

  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  if (!extend_isomorphism(a, b, sa, sb, map, used, 0)) return std::nullopt;
  return map;
}

}  // namespace tha
