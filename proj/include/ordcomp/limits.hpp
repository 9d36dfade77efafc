#pragma once

#include <cstddef>

namespace ordcomp {

/// Resource caps applied before any exponential work starts.
struct Limits {
  std::size_t max_arity = 20;
  std::size_t max_cuts = 4096;

  /// Throws Error(BadSpec) unless both caps are positive and max_arity <= 64.
  void validate() const;
};

}  // namespace ordcomp
