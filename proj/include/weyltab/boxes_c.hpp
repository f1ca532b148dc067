#pragma once

#include "weyltab/boxes.hpp"
#include "weyltab/shape.hpp"

#include <vector>

namespace weyltab::boxes_c {

struct NormalizedGamma {
  Weight arranged;  // entries grouped by Z-coset: 0, 1/2, then (1/2,1) cosets
  WeylElement w;    // arranged = w . gamma
  struct Group {
    Rat beta;                  // coset representative in [0,1)
    std::vector<int> indices;  // 1-based positions in `arranged`
  };
  std::vector<Group> groups;
};

// The type C rearrangement: sort entries nonnegative ascending, negate those
// with fractional part in (0,1/2), group by Z-coset.  The returned Weyl
// element witnesses that the calibration graph is unchanged.
NormalizedGamma normalize_gamma_c(const RootSystem& rs, const Weight& gamma);

// Pages of the book for an already-arranged weight.  Generic pages place
// box_i on diagonal gamma_i - beta; pages 1/2 and 0 add the mirrored boxes
// box_{-i} and the epsilon_j + epsilon_i placement rules.
Book build_book(const RootSystem& rs, const Weight& arranged, const RootSet& J);

// Convenience: single page built in isolation (indices 1..k).
BoxConfig build_page_generic(const Rat& beta, const std::vector<Rat>& contents,
                             const std::vector<std::pair<std::pair<int, int>, bool>>& diff_in_j);

std::vector<Filling> enumerate_signed_fillings(const Book& book, int limit = 6);

WeylElement signed_word(const Filling& t);

struct SignedBijectionReport {
  long long filling_count = 0;
  long long tableau_count = 0;
  bool bijective = false;
  std::string witness;
  bool ok() const { return bijective && filling_count == tableau_count; }
};

SignedBijectionReport signed_word_bijection_check(const WeylGroup& W, const Book& book,
                                  const RootSet& J);

}  // namespace weyltab::boxes_c
