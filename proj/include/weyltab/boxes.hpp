#pragma once

#include "weyltab/root_system.hpp"
#include "weyltab/weyl.hpp"

#include <optional>
#include <vector>

namespace weyltab {

// One cell of a placed configuration.  Matrix conventions: rows grow
// downward, columns rightward, content = col - row up to a fixed per-page
// shift.  Boxes may slide along their diagonal, so positions are canonical
// representatives, not invariants; the invariant data is (index, content)
// plus the relative northwest/southeast order.
struct Box {
  int index;    // signed; mirrored pages carry box_{-i} partners
  Rat content;  // diagonal
  int row, col;
};

struct BoxConfig {
  Rat page{0};             // page label beta in [0,1)
  std::vector<Box> boxes;  // sorted by (content, row)

  const Box* by_index(int idx) const;
  const Box* at(int row, int col) const;
};

// Validates that col - row - content is constant, that no position repeats,
// and that within each diagonal the signed indices increase to the southeast.
BoxConfig make_config(const Rat& page, std::vector<Box> boxes);

// b strictly north and weakly west of a / weakly south and strictly east.
inline bool northwest(const Box& b, const Box& a) {
  return b.row < a.row && b.col <= a.col;
}
inline bool southeast(const Box& b, const Box& a) {
  return b.row >= a.row && b.col > a.col;
}

// A book of placed configurations.  Type A books hold entries 1..n; type C
// books hold signed entries with the mirrored-page symmetry.
struct Book {
  Family family{Family::A};
  int n{0};          // number of positive box indices = entries of gamma
  Weight arranged;   // the rearranged weight the book realizes
  std::vector<BoxConfig> pages;

  const Box* by_index(int idx) const;
  int total_boxes() const;
};

// t(box_i) for i = 1..n; entries of mirrored boxes are the forced negатives.
using Filling = std::vector<int>;

std::vector<Filling> enumerate_fillings(const Book& book,
                                        long long max_results = 2'000'000);

// Would the backtracking enumerator emit this filling?  (Guided descent:
// replays the enumeration restricted to the branch containing `t`.)
bool filling_in_enumeration(const Book& book, const Filling& t);

// Direct validation of the standardness conditions, independent of the
// enumerator: injectivity with signs, mirrored-page symmetry, positivity on
// the unpaired zero diagonal, and the per-page order conditions.
bool is_standard_filling(const Book& book, const Filling& t);

// Same placed shape modulo sliding along diagonals: same (index, content)
// data, same within-diagonal order, same NW/SE relation on every
// adjacent-diagonal pair.
bool config_equivalent(const BoxConfig& a, const BoxConfig& b);

}  // namespace weyltab
