#include "weyltab/placement.hpp"

namespace weyltab {

std::optional<std::vector<int>> solve_depths(int nboxes,
                                             const std::vector<DepthConstraint>& cs,
                                             std::string* err) {
  std::vector<int> p(nboxes, 0);
  for (int round = 0; round <= nboxes; ++round) {
    bool relaxed = false;
    const DepthConstraint* last = nullptr;
    for (const auto& c : cs) {
      if (p[c.a] + c.gap > p[c.b]) {
        p[c.b] = p[c.a] + c.gap;
        relaxed = true;
        last = &c;
      }
    }
    if (!relaxed) return p;
    if (round == nboxes) {
      if (err && last)
        *err = "cyclic placement constraints involving boxes " +
               std::to_string(last->a) + " and " + std::to_string(last->b);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace weyltab
