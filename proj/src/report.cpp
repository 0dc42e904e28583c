#include "tha/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace tha {

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& v : other.violations_) {
    violations_.push_back({prefix + v.clause, v.witness, v.message});
  }
}

bool Report::has(const std::string& clause) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [&](const Violation& v) { return v.clause == clause; });
}

const Violation& Report::get(const std::string& clause) const {
  for (const auto& v : violations_) {
    if (v.clause == clause) return v;
  }
  throw std::out_of_range("no violation of " + clause);
}

std::string Report::to_string() const {
  std::string out;
  for (const auto& v : violations_) {
    out += v.clause + " (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(v.witness[i]);
    }
    out += ")";
    if (!v.message.empty()) out += ": " + v.message;
    out += '\n';
  }
  return out;
}

}  // namespace tha
