#pragma once

#include "weyltab/boxes.hpp"
#include "weyltab/shape.hpp"

#include <utility>
#include <vector>

namespace weyltab::boxes_a {

// Shared low-level placement: boxes given as (signed index, content) with
// indices increasing inside each diagonal, plus one relation per
// adjacent-diagonal pair: (higher box, lower box, northwest?).  Solves the
// integer offsets and returns the canonical (smallest nonnegative) placement.
struct PairRelation {
  int hi, lo;  // box indices; content(hi) = content(lo) + 1
  bool nw;
};
BoxConfig place_boxes(const Rat& page_label,
                      const std::vector<std::pair<int, Rat>>& idx_content,
                      const std::vector<PairRelation>& rels);

struct PlacedSkew {
  RootSystemPtr rs;  // A_{n-1} for n boxes
  Weight gamma;
  RootSet J;
  BoxConfig config;
};

// Places lambda/mu on graph paper with the top-left corner box of lambda at
// content `offset`, numbers boxes along diagonals, and reads off (gamma, J).
PlacedSkew skew_to_placed_shape(const std::vector<int>& lambda,
                                const std::vector<int>& mu, int offset);

// Placed configuration of an integral dominant gamma (weakly increasing) and
// J: solves the relative-placement constraints.  Requires the closure
// condition `b in J, a in Z, b-a in R+ => b-a in J`.
BoxConfig shape_to_configuration(const RootSystem& rs, const Weight& gamma,
                                 const RootSet& J);

Weight config_gamma(const BoxConfig& c);
RootSet config_J(const RootSystem& rs, const BoxConfig& c);

// w_t = (t(box_1), ..., t(box_n)) in one-line notation.
WeylElement tableau_word(const Filling& t);

// Independent oracle: classical standard tableaux of lambda/mu enumerated by
// row/column backtracking, reported in box-index order.
std::vector<Filling> classical_standard_tableaux(const std::vector<int>& lambda,
                                                 const std::vector<int>& mu);

// All standard fillings of one integral configuration (entries 1..n).
std::vector<Filling> enumerate_config_fillings(const BoxConfig& c,
                                               int box_limit = 8);
Book as_book(const BoxConfig& c);

// No 2x2 pattern with a southeast neighbor but a missing east or south one.
bool detect_skew(const BoxConfig& c);

// At most one box per diagonal.
bool is_border_strip(const BoxConfig& c);

// Transpose across the content-0 diagonal: (r,c) -> (c,r), contents negate,
// boxes renumbered.
BoxConfig transpose_configuration(const BoxConfig& c);

// Column reading filling t_min (iterated minimal box) and row reading t_max
// (whose conjugate is the column reading filling of the conjugate shape).
std::pair<Filling, Filling> reading_fillings(const RootSystem& rs,
                                             const BoxConfig& c);

// Book of placed configurations for arbitrary rational gamma: pages indexed
// by the Z-coset representatives in [0,1), ascending; entries sorted within
// each page.  J refers to the rearranged weight (book.arranged).
Book build_book(const Weight& gamma, const RootSet& J);

struct WordBijectionReport {
  long long classical_count = 0;
  long long tableau_count = 0;
  bool bijective = false;
  std::string witness;
  bool ok() const { return bijective && classical_count == tableau_count; }
};

WordBijectionReport word_bijection_check(const WeylGroup& W, const std::vector<int>& lambda,
                                  const std::vector<int>& mu, int offset);

}  // namespace weyltab::boxes_a
