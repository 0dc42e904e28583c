#include "tha/duality.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "tha/error.hpp"

namespace tha {

namespace {

std::string set_label(const Bitset& s, const std::function<std::string(std::size_t)>& name) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += name(i);
    first = false;
  });
  return out + "}";
}

std::size_t find_sorted(const std::vector<Bitset>& sorted, const Bitset& s) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
  if (it == sorted.end() || *it != s) return Bitset::npos;
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

SpectrumResult spec_algebra(const FiniteTHA& a) {
  SpectrumResult out;
  for (auto& f : prime_filters(a)) out.point_filters.push_back(std::move(f.elements));
  const std::size_t n = out.point_filters.size();
  const auto& pf = out.point_filters;

  BinRel r(n);
  out.r_back_from_dia = BinRel(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      bool fwd = true, back = true;
      for (std::size_t e = 0; e < a.size(); ++e) {
        if (pf[x].test(a.box(e)) && !pf[y].test(e)) fwd = false;
        if (pf[y].test(e) && !pf[x].test(a.dia(e))) back = false;
      }
      if (fwd) r.set(x, y);
      if (back) out.r_back_from_dia.set(x, y);
    }
  }
  std::vector<std::string> labels;
  for (const auto& f : pf) labels.push_back(set_label(f, [&](std::size_t e) { return a.label(e); }));
  out.frame = TemporalTransit(std::move(r), std::move(labels));
  return out;
}

std::size_t ClopResult::index_of(const Bitset& upset) const {
  const std::size_t i = find_sorted(element_upsets, upset);
  if (i == Bitset::npos) throw std::out_of_range("not an element: " + upset.to_string());
  return i;
}

ClopResult clop_frame(const TemporalTransit& f) {
  ClopResult out;
  out.element_upsets = all_upsets(f.leq());
  const auto& ups = out.element_upsets;
  const std::size_t n = ups.size();
  auto idx = [&](const Bitset& s) { return out.index_of(s); };

  BinRel leq(n);
  OpTable meet(n * n), join(n * n), impl(n * n);
  std::vector<std::size_t> box(n), dia(n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    // box K = -R^-1[-K], dia K = R>[K]
    box[i] = idx(~f.r_fwd().preimage(~ups[i]));
    dia[i] = idx(f.r_fwd().image(ups[i]));
    labels.push_back(set_label(ups[i], [&](std::size_t p) { return f.label(p); }));
    for (std::size_t j = 0; j < n; ++j) {
      if (ups[i].is_subset_of(ups[j])) leq.set(i, j);
      meet[i * n + j] = idx(ups[i] & ups[j]);
      join[i * n + j] = idx(ups[i] | ups[j]);
      impl[i * n + j] = idx(~f.down(ups[i] - ups[j]));
    }
  }
  out.algebra = FiniteTHA::from_tables(std::move(leq), std::move(meet), std::move(join), std::move(impl),
                                       std::move(box), std::move(dia), idx(f.none()), idx(f.all()),
                                       std::move(labels));
  return out;
}

std::vector<std::size_t> pi_map(const FiniteTHA& a) {
  const SpectrumResult spec = spec_algebra(a);
  const ClopResult clop = clop_frame(spec.frame);
  std::vector<std::size_t> pi(a.size());
  for (std::size_t e = 0; e < a.size(); ++e) {
    Bitset points(spec.point_filters.size());
    for (std::size_t x = 0; x < points.size(); ++x) {
      if (spec.point_filters[x].test(e)) points.set(x);
    }
    // pi(e) need not be an upset when a is not a valid algebra
    const std::size_t i = find_sorted(clop.element_upsets, points);
    pi[e] = i == Bitset::npos ? clop.algebra.size() : i;
  }
  return pi;
}

Report pi_check(const FiniteTHA& a) {
  Report r;
  const SpectrumResult spec = spec_algebra(a);
  r.merge(validate_transit(spec.frame), "spec.");
  if (spec.r_back_from_dia != spec.frame.r_back()) {
    r.add("spec.r-back", {}, "relation from dia is not the inverse of the relation from box");
  }
  const ClopResult clop = clop_frame(spec.frame);
  const auto pi = pi_map(a);
  std::vector<std::size_t> preimage(clop.algebra.size(), Bitset::npos);
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (pi[e] >= clop.algebra.size()) {
      r.add("pi.codomain", {e}, "image is not an upset of the spectrum");
      return r;
    }
    if (preimage[pi[e]] != Bitset::npos) r.add("pi.injective", {preimage[pi[e]], e}, "two elements share an image");
    preimage[pi[e]] = e;
  }
  for (std::size_t k = 0; k < preimage.size(); ++k) {
    if (preimage[k] == Bitset::npos) r.add("pi.surjective", {k}, "upset not in the image");
  }
  r.merge(check_homomorphism(pi, a, clop.algebra), "pi.");
  return r;
}

std::vector<std::size_t> gamma_map(const TemporalTransit& f) {
  const ClopResult clop = clop_frame(f);
  const SpectrumResult spec = spec_algebra(clop.algebra);
  std::vector<std::size_t> gamma(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    Bitset elems(clop.algebra.size());
    for (std::size_t k = 0; k < elems.size(); ++k) {
      if (clop.element_upsets[k].test(x)) elems.set(k);
    }
    const std::size_t i = find_sorted(spec.point_filters, elems);
    gamma[x] = i == Bitset::npos ? spec.frame.size() : i;
  }
  return gamma;
}

Report gamma_check(const TemporalTransit& f) {
  Report r;
  const ClopResult clop = clop_frame(f);
  r.merge(validate_tha(clop.algebra), "clop.");
  const SpectrumResult spec = spec_algebra(clop.algebra);
  const auto gamma = gamma_map(f);
  std::vector<std::size_t> inverse_map(spec.frame.size(), Bitset::npos);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (gamma[x] >= spec.frame.size()) {
      r.add("gamma.codomain", {x}, "image is not a prime filter");
      return r;
    }
    if (inverse_map[gamma[x]] != Bitset::npos) r.add("gamma.injective", {inverse_map[gamma[x]], x}, "two points share an image");
    inverse_map[gamma[x]] = x;
  }
  for (std::size_t y = 0; y < inverse_map.size(); ++y) {
    if (inverse_map[y] == Bitset::npos) r.add("gamma.surjective", {y}, "prime filter not in the image");
  }
  if (!r.ok()) return r;
  r.merge(is_temporal_p_morphism({f, spec.frame, gamma}), "gamma.");
  r.merge(is_temporal_p_morphism({spec.frame, f, inverse_map}), "gamma-inverse.");
  return r;
}

Bitset filter_to_arcup(const FiniteTHA& a, const Filter& f) {
  if (!is_filter(a, f.elements)) throw StructureError("not a filter: " + f.elements.to_string());
  if (auto v = dia_filter_violation(a, f)) {
    throw StructureError("not a dia-filter: witness (" + std::to_string(v->first) + "," + std::to_string(v->second) +
                         ")");
  }
  const SpectrumResult spec = spec_algebra(a);
  Bitset out(spec.frame.size());
  for (std::size_t x = 0; x < out.size(); ++x) {
    if (f.elements.is_subset_of(spec.point_filters[x])) out.set(x);
  }
  return out;
}

Filter arcup_to_filter(const FiniteTHA& a, const Bitset& c) {
  const SpectrumResult spec = spec_algebra(a);
  if (c.size() != spec.frame.size()) throw StructureError("point set is on a different carrier");
  if (!is_upset(spec.frame.leq(), c)) throw StructureError("not an upset: " + c.to_string());
  if (!is_archival(spec.frame, c)) throw StructureError("not archival: " + c.to_string());
  Bitset elems = Bitset::full(a.size());
  c.for_each([&](std::size_t x) { elems &= spec.point_filters[x]; });
  return {elems};
}

PMorphism spec_hom(const std::vector<std::size_t>& h, const FiniteTHA& a, const FiniteTHA& b) {
  if (auto rep = check_homomorphism(h, a, b); !rep.ok()) {
    throw StructureError("not a homomorphism: " + rep.violations().front().clause);
  }
  SpectrumResult sa = spec_algebra(a);
  SpectrumResult sb = spec_algebra(b);
  std::vector<std::size_t> map(sb.frame.size());
  for (std::size_t y = 0; y < map.size(); ++y) {
    Bitset pre(a.size());
    for (std::size_t e = 0; e < a.size(); ++e) {
      if (sb.point_filters[y].test(h[e])) pre.set(e);
    }
    map[y] = find_sorted(sa.point_filters, pre);
    if (map[y] == Bitset::npos) throw std::logic_error("preimage of a prime filter is not prime");
  }
  return {std::move(sb.frame), std::move(sa.frame), std::move(map)};
}

std::vector<std::size_t> clop_hom(const PMorphism& m) {
  if (auto rep = is_temporal_p_morphism(m); !rep.ok()) {
    throw StructureError("not a temporal p-morphism: " + rep.violations().front().clause);
  }
  const ClopResult src = clop_frame(m.source);
  const ClopResult dst = clop_frame(m.target);
  std::vector<std::size_t> out(dst.algebra.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    Bitset pre(m.source.size());
    for (std::size_t x = 0; x < pre.size(); ++x) {
      if (dst.element_upsets[k].test(m.map[x])) pre.set(x);
    }
    out[k] = src.index_of(pre);
  }
  return out;
}

RelationalModel spec_model(const AlgebraicModel& m) {
  SpectrumResult spec = spec_algebra(m.algebra);
  RelationalModel out;
  for (const auto& [atom, value] : m.valuation) {
    Bitset points(spec.frame.size());
    for (std::size_t x = 0; x < points.size(); ++x) {
      if (spec.point_filters[x].test(value)) points.set(x);
    }
    out.valuation.emplace(atom, std::move(points));
  }
  out.frame = std::move(spec.frame);
  return out;
}

}  // namespace tha
