#pragma once

#include "weyltab/rational.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace weyltab {

// Error taxonomy shared by the library and the CLI exit codes.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

Family family_from_char(char c);

// Root coordinates in the epsilon-basis (always integers).
using Coords = std::vector<int>;

Rat dot(const Weight& x, const Coords& a);
Rat dot(const Weight& x, const Weight& y);
int dot(const Coords& a, const Coords& b);

// A classical root system realized in explicit epsilon-coordinates.
//
//   A_r : ambient R^{r+1}, R+ = { e_j - e_i | i < j },
//         simple roots a_i = e_{i+1} - e_i.
//   B_n : ambient R^n, R+ = { e_i } u { e_j +- e_i | i < j },
//         a_1 = e_1, a_i = e_i - e_{i-1}.
//   C_n : ambient R^n, R+ = { 2e_i } u { e_j +- e_i | i < j },
//         a_1 = 2e_1, a_i = e_i - e_{i-1}.
//   D_n : ambient R^n, R+ = { e_j +- e_i | i < j },
//         a_1 = e_2 + e_1, a_2 = e_2 - e_1, a_i = e_i - e_{i-1}.
//
// Positive roots are stored in lexicographic coordinate order; a RootSet is
// a bitset over that ordering.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(Family f, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int ambient() const { return ambient_; }

  int num_positive() const { return static_cast<int>(positive_.size()); }
  const Coords& positive(int idx) const { return positive_[idx]; }
  const std::vector<Coords>& positive_roots() const { return positive_; }

  int num_simple() const { return static_cast<int>(simple_idx_.size()); }
  int simple_index(int i) const { return simple_idx_[i]; }
  const Coords& simple(int i) const { return positive_[simple_idx_[i]]; }

  // Coordinates of positive root #idx in the simple-root basis.
  const std::vector<int>& simple_coords(int idx) const {
    return simple_coords_[idx];
  }

  // +(idx+1) if c is positive root #idx, -(idx+1) if c is its negative,
  // 0 if c is not a root.
  int lookup(const Coords& c) const;
  bool is_root(const Coords& c) const { return lookup(c) != 0; }
  bool is_positive_root(const Coords& c) const { return lookup(c) > 0; }

  long long weyl_order() const;

  std::string name() const;  // e.g. "C2"

 private:
  Family family_;
  int rank_;
  int ambient_;
  std::vector<Coords> positive_;
  std::vector<int> simple_idx_;
  std::vector<std::vector<int>> simple_coords_;
  std::map<Coords, int> index_;  // positive root -> idx
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace weyltab
