#ifndef THA_SEARCH_HPP
#define THA_SEARCH_HPP

#include <cstddef>
#include <optional>

#include "tha/formula.hpp"
#include "tha/model.hpp"

namespace tha {

struct SearchOptions {
  std::size_t max_points = 3;
  /// Search every transit, not only the Z-rooted ones.
  bool all_frames = false;
  std::size_t jobs = 1;
};

struct Countermodel {
  RelationalModel model;
  /// Least point at which the formula fails.
  std::size_t point = 0;
  /// Position of the frame in the enumeration for its size.
  std::size_t frame_index = 0;
};

struct SearchResult {
  std::optional<Countermodel> countermodel;
  std::size_t max_points = 0;
  std::size_t closure_size = 0;
  /// No countermodel and max_points >= 2^closure_size, so the formula is valid.
  bool certified = false;
};

/// First refuting model in the order: size, frame, valuation (atoms in name
/// order, first atom slowest, upsets ascending). The result does not depend
/// on `jobs`. Throws std::invalid_argument if max_points is 0 or too large.
SearchResult countermodel_search(const Formula& f, const SearchOptions& options);

/// THA_JOBS from the environment, or 1.
std::size_t default_jobs();

}  // namespace tha

#endif
