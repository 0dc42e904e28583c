#include "tha/io.hpp"

#include <fstream>
#include <sstream>

#include "tha/error.hpp"

namespace tha {

namespace {

const Json& field(const Json& j, const std::string& key) {
  if (!j.is_object()) throw FormatError("document", "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(key, "missing field");
  return *it;
}

std::size_t as_index(const Json& v, const std::string& where, std::size_t bound) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw FormatError(where, "expected a non-negative integer");
  const auto i = v.get<std::size_t>();
  if (i >= bound) throw FormatError(where, "index " + std::to_string(i) + " outside [0," + std::to_string(bound) + ")");
  return i;
}

std::size_t as_count(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw FormatError(where, "expected a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<std::pair<std::size_t, std::size_t>> pair_list(const Json& v, const std::string& where, std::size_t n) {
  if (!v.is_array()) throw FormatError(where, "expected a list of pairs");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    if (!v[k].is_array() || v[k].size() != 2) throw FormatError(at, "expected [i,j]");
    out.emplace_back(as_index(v[k][0], at, n), as_index(v[k][1], at, n));
  }
  return out;
}

std::vector<std::string> labels_of(const Json& j, std::size_t n) {
  auto it = j.find("labels");
  if (it == j.end()) return {};
  if (!it->is_array() || it->size() != n) throw FormatError("labels", "expected one string per entry");
  std::vector<std::string> out;
  for (const auto& l : *it) {
    if (!l.is_string()) throw FormatError("labels", "expected strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

Json pairs_json(const BinRel& r) {
  Json out = Json::array();
  for (const auto& [i, j] : r.pairs()) out.push_back({i, j});
  return out;
}

std::vector<std::size_t> table(const Json& j, const std::string& key, std::size_t n) {
  const Json& v = field(j, key);
  if (!v.is_array() || v.size() != n) throw FormatError(key, "expected " + std::to_string(n) + " entries");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(as_index(v[k], key + "[" + std::to_string(k) + "]", n));
  return out;
}

}  // namespace

Json frame_to_json(const TemporalTransit& f) {
  Json j = {{"points", f.size()}, {"r", pairs_json(f.r_fwd())}};
  if (!f.labels().empty()) j["labels"] = f.labels();
  return j;
}

TemporalTransit frame_from_json(const Json& j) {
  const std::size_t n = as_count(field(j, "points"), "points");
  const auto pairs = pair_list(field(j, "r"), "r", n);
  return TemporalTransit(BinRel::from_pairs(n, pairs), labels_of(j, n));
}

Json algebra_to_json(const FiniteTHA& a) {
  Json j = {{"n", a.size()}, {"leq", pairs_json(a.leq())}, {"box", a.box_table()}, {"dia", a.dia_table()}};
  if (!a.labels().empty()) j["labels"] = a.labels();
  return j;
}

FiniteTHA algebra_from_json(const Json& j) {
  const std::size_t n = as_count(field(j, "n"), "n");
  if (n == 0) throw FormatError("n", "an algebra needs at least one element");
  BinRel leq = reflexivisation(BinRel::from_pairs(n, pair_list(field(j, "leq"), "leq", n)));
  auto box = table(j, "box", n);
  auto dia = table(j, "dia", n);
  try {
    return FiniteTHA::from_order(std::move(leq), std::move(box), std::move(dia), labels_of(j, n));
  } catch (const StructureError& e) {
    throw FormatError("leq", e.what());
  }
}

Json model_to_json(const RelationalModel& m) {
  Json j = frame_to_json(m.frame);
  Json val = Json::object();
  for (const auto& [atom, set] : m.valuation) val[atom] = set.to_vector();
  j["val"] = val;
  return j;
}

Json model_to_json(const AlgebraicModel& m) {
  Json j = algebra_to_json(m.algebra);
  Json val = Json::object();
  for (const auto& [atom, e] : m.valuation) val[atom] = e;
  j["val"] = val;
  return j;
}

RelationalModel relational_model_from_json(const Json& j) {
  RelationalModel m;
  m.frame = frame_from_json(j);
  const Json& val = field(j, "val");
  if (!val.is_object()) throw FormatError("val", "expected an object");
  for (const auto& [atom, points] : val.items()) {
    const std::string where = "val." + atom;
    if (!points.is_array()) throw FormatError(where, "expected a list of points");
    Bitset s(m.frame.size());
    for (const auto& p : points) s.set(as_index(p, where, m.frame.size()));
    m.valuation.emplace(atom, std::move(s));
  }
  return m;
}

AlgebraicModel algebraic_model_from_json(const Json& j) {
  AlgebraicModel m;
  m.algebra = algebra_from_json(j);
  const Json& val = field(j, "val");
  if (!val.is_object()) throw FormatError("val", "expected an object");
  for (const auto& [atom, e] : val.items()) m.valuation.emplace(atom, as_index(e, "val." + atom, m.algebra.size()));
  return m;
}

FileKind file_kind(const Json& j) {
  if (!j.is_object()) throw FormatError("document", "expected an object");
  if (j.contains("points")) return FileKind::Frame;
  if (j.contains("n")) return FileKind::Algebra;
  throw FormatError("document", "neither a frame (\"points\") nor an algebra (\"n\")");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ":byte " + std::to_string(e.byte), "malformed JSON");
  }
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace tha
