#pragma once

#include <optional>
#include <string>
#include <vector>

namespace weyltab {

// p[a] + gap <= p[b], gap in {0, 1}.
struct DepthConstraint {
  int a, b, gap;
};

// Minimal nonnegative integer depths satisfying all constraints (longest-path
// relaxation), or nullopt when the system has a positive cycle.  `err` gets a
// description of an offending constraint on failure.
std::optional<std::vector<int>> solve_depths(int nboxes,
                                             const std::vector<DepthConstraint>& cs,
                                             std::string* err = nullptr);

}  // namespace weyltab
