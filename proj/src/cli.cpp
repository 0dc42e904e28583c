#include "tha/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

#include "tha/classify.hpp"
#include "tha/duality.hpp"
#include "tha/enumerate.hpp"
#include "tha/error.hpp"
#include "tha/filtration.hpp"
#include "tha/io.hpp"
#include "tha/search.hpp"
#include "tha/semantics.hpp"

namespace tha {

namespace {

struct Context {
  bool json = false;
};

Json report_json(const Report& r) {
  Json out = Json::array();
  for (const auto& v : r.violations()) {
    out.push_back({{"clause", v.clause}, {"witness", v.witness}, {"message", v.message}});
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

CommandResult emit(const Context& ctx, int code, const Json& j, const std::string& text) {
  return {code, ctx.json ? dump(j) + "\n" : text, {}};
}

CommandResult check_frame(const Context& ctx, const std::string& path) {
  const TemporalTransit f = frame_from_json(read_json_file(path));
  const Report r = validate_transit(f);
  const Json j = {{"valid", r.ok()}, {"points", f.size()}, {"violations", report_json(r)}};
  std::string text;
  if (r.ok()) {
    text = "valid transit: " + std::to_string(f.size()) + " points, Refl = " + refl_points(f).to_string() + "\n";
  } else {
    text = "invalid transit\n" + r.to_string();
  }
  return emit(ctx, r.ok() ? 0 : 1, j, text);
}

CommandResult check_algebra(const Context& ctx, const std::string& path) {
  const FiniteTHA a = algebra_from_json(read_json_file(path));
  const Report r = validate_tha(a);
  const Json j = {{"valid", r.ok()}, {"n", a.size()}, {"violations", report_json(r)}};
  const std::string text =
      r.ok() ? "valid temporal Heyting algebra: " + std::to_string(a.size()) + " elements\n"
             : "invalid temporal Heyting algebra\n" + r.to_string();
  return emit(ctx, r.ok() ? 0 : 1, j, text);
}

CommandResult spec_cmd(const std::string& path) {
  const FiniteTHA a = algebra_from_json(read_json_file(path));
  if (const Report r = validate_tha(a); !r.ok()) return {1, {}, "invalid temporal Heyting algebra\n" + r.to_string()};
  return {0, dump(frame_to_json(spec_algebra(a).frame)) + "\n", {}};
}

CommandResult clop_cmd(const std::string& path) {
  const TemporalTransit f = frame_from_json(read_json_file(path));
  if (const Report r = validate_transit(f); !r.ok()) return {1, {}, "invalid transit\n" + r.to_string()};
  return {0, dump(algebra_to_json(clop_frame(f).algebra)) + "\n", {}};
}

// An algebra file, or the Clop of a frame file.
FiniteTHA load_algebra_like(const Json& doc) {
  if (file_kind(doc) == FileKind::Algebra) return algebra_from_json(doc);
  const TemporalTransit f = frame_from_json(doc);
  if (const Report r = validate_transit(f); !r.ok()) throw FormatError("r", "not a transit: " + r.to_string());
  return clop_frame(f).algebra;
}

std::string classes_text(const Congruence& t) {
  std::string out;
  for (const auto& c : t.classes()) out += c.to_string();
  return out;
}

CommandResult congruences_cmd(const Context& ctx, const std::string& path) {
  const FiniteTHA a = load_algebra_like(read_json_file(path));
  const auto congs = congruences_bruteforce(a);
  const auto dfs = dia_filters(a);
  Json jc = Json::array();
  std::string text = "congruences: " + std::to_string(congs.size()) + "\n";
  for (const auto& t : congs) {
    Json classes = Json::array();
    for (const auto& c : t.classes()) classes.push_back(c.to_vector());
    const Filter f = cong_to_filter(a, t);
    jc.push_back({{"classes", classes}, {"filter", f.elements.to_vector()}});
    text += "  " + classes_text(t) + "  [1] = " + f.elements.to_string() + "\n";
  }
  Json jf = Json::array();
  text += "dia-filters: " + std::to_string(dfs.size()) + "\n";
  for (const auto& f : dfs) {
    jf.push_back(f.elements.to_vector());
    text += "  " + f.elements.to_string() + "\n";
  }
  const Json j = {{"count", congs.size()}, {"congruences", jc}, {"dia_filters", jf}};
  return emit(ctx, congs.size() == dfs.size() ? 0 : 1, j, text);
}

CommandResult classify_cmd(const Context& ctx, const std::string& path) {
  const Json doc = read_json_file(path);
  Classification c;
  FiniteTHA a;
  if (file_kind(doc) == FileKind::Algebra) {
    a = algebra_from_json(doc);
    if (const Report r = validate_tha(a); !r.ok()) {
      return {1, {}, "invalid temporal Heyting algebra\n" + r.to_string()};
    }
    c = classify(a);
  } else {
    const TemporalTransit f = frame_from_json(doc);
    if (const Report r = validate_transit(f); !r.ok()) return {1, {}, "invalid transit\n" + r.to_string()};
    a = clop_frame(f).algebra;
    c = classify(f);
  }
  const auto& g = c.algebraic;
  const std::string opremum = g.opremum ? "element " + std::to_string(*g.opremum) : "none";
  std::ostringstream text;
  text << "simple: " << yes_no(c.simple()) << ", SI: " << yes_no(c.si()) << ", opremum: " << opremum << "\n";
  text << "dia-filters: " << g.dia_filter_count << " (simple: " << yes_no(g.simple_by_dia_filters)
       << ", second-least: " << yes_no(g.si_by_dia_filters) << ")\n";
  text << "dia-compatible: " << dia_compatible(a).to_string() << " (simple: " << yes_no(g.simple_by_compatibles)
       << ", opremum: " << yes_no(g.si_by_opremum) << ")\n";
  text << "congruences: " << g.congruence_count << " (simple: " << yes_no(g.simple_by_congruences)
       << ", least nontrivial: " << yes_no(g.si_by_congruences) << ")\n";
  text << "dual frame: " << c.dual_points << " points (Z-connected: " << yes_no(c.z_connected)
       << ", Z-rooted: " << yes_no(c.z_rooted) << ")\n";
  if (!c.agree()) text << "routes disagree\n";

  Json j = {{"simple", c.simple()},
            {"si", c.si()},
            {"opremum", g.opremum ? Json(*g.opremum) : Json(nullptr)},
            {"agree", c.agree()},
            {"routes",
             {{"dia_filters", {{"count", g.dia_filter_count}, {"simple", g.simple_by_dia_filters},
                               {"si", g.si_by_dia_filters}}},
              {"dia_compatible", {{"elements", dia_compatible(a).to_vector()}, {"simple", g.simple_by_compatibles},
                                  {"si", g.si_by_opremum}}},
              {"congruences", {{"count", g.congruence_count}, {"simple", g.simple_by_congruences},
                               {"si", g.si_by_congruences}}},
              {"dual_frame", {{"points", c.dual_points}, {"simple", c.z_connected && c.dual_points > 0},
                              {"si", c.z_rooted}}}}}};
  return emit(ctx, c.agree() ? 0 : 1, j, text.str());
}

CommandResult eval_cmd(const Context& ctx, const std::string& path, const std::string& formula) {
  const Formula f = parse_formula(formula);
  const Json doc = read_json_file(path);
  if (file_kind(doc) == FileKind::Algebra) {
    const AlgebraicModel m = algebraic_model_from_json(doc);
    if (const Report r = check_model(m); !r.ok()) return {2, {}, path + ": " + r.to_string()};
    const std::size_t v = eval_algebraic(m, f);
    const bool valid = v == m.algebra.top();
    const Json j = {{"value", v}, {"valid", valid}};
    return emit(ctx, valid ? 0 : 1, j,
                "value: element " + std::to_string(v) + " (" + m.algebra.label(v) + ")\nvalid: " + yes_no(valid) + "\n");
  }
  const RelationalModel m = relational_model_from_json(doc);
  if (const Report r = check_model(m); !r.ok()) return {2, {}, path + ": " + r.to_string()};
  const Bitset t = truth_set(m, f);
  const Json j = {{"truth_set", t.to_vector()}, {"valid", t.all()}};
  return emit(ctx, t.all() ? 0 : 1, j, "truth set: " + t.to_string() + "\nvalid: " + yes_no(t.all()) + "\n");
}

CommandResult countermodel_cmd(const Context& ctx, const std::string& formula, std::size_t max_size, bool all_frames,
                               std::size_t jobs) {
  const Formula f = parse_formula(formula);
  const SearchResult r = countermodel_search(f, {max_size, all_frames, jobs});
  Json j = {{"formula", print_formula(f)},
            {"max_size", r.max_points},
            {"closure_size", r.closure_size},
            {"found", r.countermodel.has_value()},
            {"certified", r.certified}};
  std::string text;
  if (r.countermodel) {
    const auto& cm = *r.countermodel;
    j["point"] = cm.point;
    j["model"] = model_to_json(cm.model);
    const std::size_t n = cm.model.frame.size();
    text = "countermodel: " + std::to_string(n) + (n == 1 ? " point" : " points") + ", refuted at point " +
           std::to_string(cm.point) + "\nmodel: " + dump(model_to_json(cm.model)) + "\n";
  } else {
    text = "no countermodel up to " + std::to_string(r.max_points) + " points" +
           (r.certified ? " (certified valid: bound 2^" + std::to_string(r.closure_size) + " reached)"
                        : " (valid up to this bound only)") +
           "\n";
  }
  return emit(ctx, r.countermodel ? 0 : 1, j, text);
}

CommandResult filtrate_cmd(const Context& ctx, const std::string& path, const std::string& formula) {
  const Formula f = parse_formula(formula);
  const RelationalModel m = relational_model_from_json(read_json_file(path));
  if (const Report r = check_model(m); !r.ok()) return {2, {}, path + ": " + r.to_string()};
  const FiltrationResult fr = filtrate(m, subformula_closure(f));
  const Report check = check_filtration(m, fr);
  Json sigma = Json::array();
  for (const auto& s : fr.sigma) sigma.push_back(print_formula(s));
  const Json j = {{"model", model_to_json(fr.model)},
                  {"class_of", fr.class_of},
                  {"sigma", sigma},
                  {"classes", fr.model.frame.size()},
                  {"ok", check.ok()},
                  {"violations", report_json(check)}};
  std::string text = "classes: " + std::to_string(fr.model.frame.size()) + " (|sigma| = " +
                     std::to_string(fr.sigma.size()) + ")\nclass_of: " + Json(fr.class_of).dump() +
                     "\nmodel: " + dump(model_to_json(fr.model)) + "\n";
  text += check.ok() ? "filtration checks: pass\n" : "filtration checks: FAIL\n" + check.to_string();
  return emit(ctx, check.ok() ? 0 : 1, j, text);
}

CommandResult enum_cmd(const Context& ctx, std::size_t n, bool rooted) {
  const auto frames = enumerate_transits(n, rooted);
  Json list = Json::array();
  std::string text = "count: " + std::to_string(frames.size()) + "\n";
  for (const auto& f : frames) {
    const Json fj = frame_to_json(f);
    text += dump(fj) + "\n";
    if (ctx.json) list.push_back(fj);
  }
  return emit(ctx, 0, {{"count", frames.size()}, {"frames", list}}, text);
}

CommandResult roundtrip_cmd(const Context& ctx, const std::string& path) {
  const Json doc = read_json_file(path);
  Json checks = Json::array();
  std::string text;
  bool all_ok = true;
  auto add = [&](const std::string& name, const Report& r) {
    all_ok = all_ok && r.ok();
    Json c = {{"name", name}, {"pass", r.ok()}};
    if (!r.ok()) c["witness"] = report_json(r);
    checks.push_back(c);
    text += name + ": " + (r.ok() ? "pass" : "FAIL") + "\n";
    if (!r.ok()) text += r.to_string();
  };
  std::string kind;
  if (file_kind(doc) == FileKind::Algebra) {
    kind = "algebra";
    const FiniteTHA a = algebra_from_json(doc);
    const Report valid = validate_tha(a);
    add("validate", valid);
    if (valid.ok()) {
      add("pi", pi_check(a));
      Report iso;
      if (!find_algebra_isomorphism(a, clop_frame(spec_algebra(a).frame).algebra)) {
        iso.add("iso", {}, "Clop(Spec A) is not isomorphic to A");
      }
      add("clop-spec-iso", iso);
    }
    Report file;
    if (dump(algebra_to_json(algebra_from_json(algebra_to_json(a)))) != dump(algebra_to_json(a))) {
      file.add("file", {}, "emit/parse changed the canonical form");
    }
    add("file", file);
  } else {
    kind = "frame";
    const TemporalTransit f = frame_from_json(doc);
    const Report valid = validate_transit(f);
    add("validate", valid);
    if (valid.ok()) {
      add("gamma", gamma_check(f));
      add("pi-of-clop", pi_check(clop_frame(f).algebra));
    }
    Report file;
    if (dump(frame_to_json(frame_from_json(frame_to_json(f)))) != dump(frame_to_json(f))) {
      file.add("file", {}, "emit/parse changed the canonical form");
    }
    add("file", file);
  }
  const Json j = {{"object", path}, {"kind", kind}, {"pass", all_ok}, {"checks", checks}};
  return emit(ctx, all_ok ? 0 : 1, j, "object: " + path + " (" + kind + ")\n" + text);
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Finite temporal Heyting algebras and transits", "tha"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string file, model, formula;
  std::size_t max_size = 0, n = 0, jobs = default_jobs();
  bool all_frames = false, rooted = false;

  auto* c_frame = app.add_subcommand("check-frame", "Validate a frame file");
  c_frame->add_option("FILE", file)->required();
  auto* c_alg = app.add_subcommand("check-algebra", "Validate an algebra file");
  c_alg->add_option("FILE", file)->required();
  auto* c_spec = app.add_subcommand("spec", "Dual frame of an algebra");
  c_spec->add_option("FILE", file)->required();
  auto* c_clop = app.add_subcommand("clop", "Upset algebra of a frame");
  c_clop->add_option("FILE", file)->required();
  auto* c_cong = app.add_subcommand("congruences", "Congruences and dia-filters");
  c_cong->add_option("FILE", file)->required();
  auto* c_class = app.add_subcommand("classify", "Simple / SI classification by every route");
  c_class->add_option("FILE", file)->required();
  auto* c_eval = app.add_subcommand("eval", "Evaluate a formula in a model");
  c_eval->add_option("--model", model)->required();
  c_eval->add_option("--formula", formula)->required();
  auto* c_cm = app.add_subcommand("countermodel", "Search for a refuting transit model");
  c_cm->add_option("--formula", formula)->required();
  c_cm->add_option("--max-size", max_size)->required()->check(CLI::Range(1, 6));
  c_cm->add_flag("--all-frames", all_frames, "Search all transits, not only Z-rooted ones");
  c_cm->add_option("--jobs", jobs, "Worker threads (default: THA_JOBS or 1)")->check(CLI::PositiveNumber);
  auto* c_filt = app.add_subcommand("filtrate", "Filtrate a model through the closure of a formula");
  c_filt->add_option("--model", model)->required();
  c_filt->add_option("--formula", formula)->required();
  auto* c_enum = app.add_subcommand("enum-frames", "List every transit on N points");
  c_enum->add_option("N", n)->required()->check(CLI::Range(0, 6));
  c_enum->add_flag("--rooted", rooted, "Only Z-rooted transits");
  auto* c_round = app.add_subcommand("roundtrip", "Duality round trip checks");
  c_round->add_option("FILE", file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help(), {}};
  } catch (const CLI::ParseError& e) {
    return {2, {}, std::string(e.what()) + "\n"};
  }

  const Context ctx{format == "json"};
  try {
    if (c_frame->parsed()) return check_frame(ctx, file);
    if (c_alg->parsed()) return check_algebra(ctx, file);
    if (c_spec->parsed()) return spec_cmd(file);
    if (c_clop->parsed()) return clop_cmd(file);
    if (c_cong->parsed()) return congruences_cmd(ctx, file);
    if (c_class->parsed()) return classify_cmd(ctx, file);
    if (c_eval->parsed()) return eval_cmd(ctx, model, formula);
    if (c_cm->parsed()) return countermodel_cmd(ctx, formula, max_size, all_frames, jobs);
    if (c_filt->parsed()) return filtrate_cmd(ctx, model, formula);
    if (c_enum->parsed()) return enum_cmd(ctx, n, rooted);
    if (c_round->parsed()) return roundtrip_cmd(ctx, file);
  } catch (const FormatError& e) {
    const std::string& source = file.empty() ? model : file;
    std::string message = e.what();
    if (message.rfind(source, 0) != 0) message = source + ": " + message;
    return {2, {}, message + "\n"};
  } catch (const ParseError& e) {
    return {2, {}, std::string("formula: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {2, {}, std::string(e.what()) + "\n"};
  } catch (const std::invalid_argument& e) {
    return {2, {}, std::string(e.what()) + "\n"};
  }
  return {2, {}, "no command\n"};
}

}  // namespace tha
