#ifndef THA_IO_HPP
#define THA_IO_HPP

// Canonical JSON files. Keys are sorted and output is compact, so equal
// objects serialize to identical bytes.
//
//   frame     {"labels"?: [str], "points": n, "r": [[i,j], ...]}
//   algebra   {"box": [..], "dia": [..], "labels"?: [str], "leq": [[i,j], ...], "n": n}
//   model     frame fields + "val": {atom: [points]}   (relational)
//             algebra fields + "val": {atom: element}  (algebraic)

#include <string>
#include <variant>

#include <json.hpp>

#include "tha/algebra.hpp"
#include "tha/frames.hpp"
#include "tha/model.hpp"

namespace tha {

using Json = nlohmann::json;

Json frame_to_json(const TemporalTransit& f);
/// Throws FormatError naming the offending field.
TemporalTransit frame_from_json(const Json& j);

Json algebra_to_json(const FiniteTHA& a);
/// Throws FormatError; a non-lattice or non-distributive order is reported under "leq".
FiniteTHA algebra_from_json(const Json& j);

Json model_to_json(const RelationalModel& m);
Json model_to_json(const AlgebraicModel& m);
RelationalModel relational_model_from_json(const Json& j);
AlgebraicModel algebraic_model_from_json(const Json& j);

enum class FileKind { Frame, Algebra };
/// "points" marks a frame, "n" an algebra.
FileKind file_kind(const Json& j);

/// Reads and parses a file. Throws FormatError with the byte offset on bad JSON.
Json read_json_file(const std::string& path);

/// Canonical text of a document.
std::string dump(const Json& j);

}  // namespace tha

#endif
