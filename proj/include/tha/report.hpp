#ifndef THA_REPORT_HPP
#define THA_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace tha {

/// One failed clause of a structural check, with the elements that witness it.
struct Violation {
  std::string clause;
  std::vector<std::size_t> witness;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of a validation: empty means valid.
class Report {
 public:
  void add(std::string clause, std::vector<std::size_t> witness, std::string message = {}) {
    violations_.push_back({std::move(clause), std::move(witness), std::move(message)});
  }
  void merge(const Report& other, const std::string& prefix = {});

  bool ok() const { return violations_.empty(); }
  explicit operator bool() const { return ok(); }
  bool has(const std::string& clause) const;
  /// First violation of `clause`; throws std::out_of_range if absent.
  const Violation& get(const std::string& clause) const;
  const std::vector<Violation>& violations() const { return violations_; }

  /// One line per violation: "clause (w1,w2): message".
  std::string to_string() const;

 private:
  std::vector<Violation> violations_;
};

}  // namespace tha

#endif
