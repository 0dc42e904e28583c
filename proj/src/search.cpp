#include "tha/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "tha/enumerate.hpp"

namespace tha {

namespace {

using Mask = std::uint64_t;

// Closure of the formula as a straight-line program; children precede parents.
struct Program {
  struct Step {
    Op op;
    std::size_t a = 0, b = 0;  // operand steps, or atom index
  };
  std::vector<Step> steps;
  std::vector<std::string> atoms;
};

Program compile(const Formula& f) {
  Program p;
  const auto atoms = f.atoms();
  p.atoms.assign(atoms.begin(), atoms.end());
  const auto closure = subformula_closure(f);
  auto index = [&](const Formula& g) {
    return static_cast<std::size_t>(std::lower_bound(closure.begin(), closure.end(), g) - closure.begin());
  };
  for (const auto& g : closure) {
    Program::Step s{g.op()};
    if (g.op() == Op::Atom) {
      s.a = static_cast<std::size_t>(std::lower_bound(p.atoms.begin(), p.atoms.end(), g.name()) - p.atoms.begin());
    } else if (g.is_unary()) {
      s.a = index(g.left());
    } else if (g.is_binary()) {
      s.a = index(g.left());
      s.b = index(g.right());
    }
    p.steps.push_back(s);
  }
  return p;
}

struct MaskFrame {
  std::size_t n;
  Mask all;
  std::vector<Mask> r_fwd;  // successors
  std::vector<Mask> below;  // {z : z <= x}
  std::vector<Mask> upsets;

  explicit MaskFrame(const TemporalTransit& f) : n(f.size()), all(n == 64 ? ~Mask{0} : (Mask{1} << n) - 1) {
    for (std::size_t x = 0; x < n; ++x) {
      r_fwd.push_back(f.r_fwd().row(x).low_word());
      below.push_back(f.geq().row(x).low_word());
    }
    for (const auto& u : all_upsets(f.leq())) upsets.push_back(u.low_word());
  }

  Mask image(Mask s) const {
    Mask out = 0;
    for (; s; s &= s - 1) out |= r_fwd[static_cast<std::size_t>(std::countr_zero(s))];
    return out;
  }
  Mask down(Mask s) const {
    Mask out = 0;
    for (; s; s &= s - 1) out |= below[static_cast<std::size_t>(std::countr_zero(s))];
    return out;
  }
  Mask preimage(Mask s) const {
    Mask out = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (r_fwd[x] & s) out |= Mask{1} << x;
    }
    return out;
  }
};

struct Refutation {
  std::vector<std::size_t> choice;  // upset index per atom
  std::size_t point;
};

std::optional<Refutation> refute_on_frame(const Program& prog, const MaskFrame& frame) {
  std::vector<std::size_t> choice(prog.atoms.size(), 0);
  std::vector<Mask> value(prog.steps.size());
  const std::size_t k = frame.upsets.size();
  while (true) {
    for (std::size_t i = 0; i < prog.steps.size(); ++i) {
      const auto& s = prog.steps[i];
      Mask v = 0;
      switch (s.op) {
        case Op::Atom: v = frame.upsets[choice[s.a]]; break;
        case Op::Bot: v = 0; break;
        case Op::Top: v = frame.all; break;
        case Op::And: v = value[s.a] & value[s.b]; break;
        case Op::Or: v = value[s.a] | value[s.b]; break;
        case Op::Imp: v = frame.all & ~frame.down(value[s.a] & ~value[s.b]); break;
        case Op::Box: v = frame.all & ~frame.preimage(frame.all & ~value[s.a]); break;
        case Op::Dia: v = frame.image(value[s.a]); break;
      }
      value[i] = v;
    }
    const Mask failing = frame.all & ~value.back();
    if (failing) return Refutation{choice, static_cast<std::size_t>(std::countr_zero(failing))};
    std::size_t i = choice.size();
    while (i > 0 && ++choice[i - 1] == k) choice[--i] = 0;
    if (i == 0) return std::nullopt;
  }
}

}  // namespace

std::size_t default_jobs() {
  if (const char* env = std::getenv("THA_JOBS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1;
}

SearchResult countermodel_search(const Formula& f, const SearchOptions& options) {
  if (options.max_points == 0) throw std::invalid_argument("max_points must be at least 1");
  if (options.max_points > TransitEnumerator::kMaxPoints) {
    throw std::invalid_argument("max_points above " + std::to_string(TransitEnumerator::kMaxPoints) +
                                " is not supported");
  }
  const Program prog = compile(f);
  SearchResult result;
  result.max_points = options.max_points;
  result.closure_size = prog.steps.size();
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);

  for (std::size_t n = 1; n <= options.max_points; ++n) {
    const TransitEnumerator& e = transit_enumerator(n);
    std::vector<std::size_t> all_indices;
    if (options.all_frames) {
      all_indices.resize(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) all_indices[i] = i;
    }
    const std::vector<std::size_t>& candidates = options.all_frames ? all_indices : e.rooted();
    const std::size_t total = candidates.size();

    constexpr std::size_t kChunk = 64;
    std::atomic<std::size_t> next_chunk{0};
    std::atomic<std::size_t> best{total};
    auto worker = [&] {
      while (true) {
        const std::size_t start = next_chunk.fetch_add(1) * kChunk;
        if (start >= total || start > best.load()) return;
        const std::size_t stop = std::min(total, start + kChunk);
        for (std::size_t pos = start; pos < stop && pos < best.load(); ++pos) {
          if (refute_on_frame(prog, MaskFrame(e.at(candidates[pos])))) {
            std::size_t cur = best.load();
            while (pos < cur && !best.compare_exchange_weak(cur, pos)) {
            }
            break;
          }
        }
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> threads;
      for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(worker);
      for (auto& t : threads) t.join();
    }

    if (best.load() < total) {
      const std::size_t index = candidates[best.load()];
      TemporalTransit frame = e.at(index);
      const MaskFrame mf(frame);
      const auto ref = refute_on_frame(prog, mf);
      Countermodel cm;
      for (std::size_t i = 0; i < prog.atoms.size(); ++i) {
        cm.model.valuation.emplace(prog.atoms[i], Bitset::from_mask(n, mf.upsets[ref->choice[i]]));
      }
      cm.model.frame = std::move(frame);
      cm.point = ref->point;
      cm.frame_index = index;
      result.countermodel = std::move(cm);
      return result;
    }
  }
  result.certified = result.closure_size < 64 && options.max_points >= (std::size_t{1} << std::min<std::size_t>(
                                                                             result.closure_size, 63));
  return result;
}

}  // namespace tha
