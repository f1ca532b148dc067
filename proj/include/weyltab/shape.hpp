#pragma once

#include "weyltab/weyl.hpp"

#include <optional>
#include <vector>

namespace weyltab {

// Weight utilities -----------------------------------------------------------

// Unique weight with the given pairings against the simple roots (type A is
// pinned down by gamma_1 = 0, so integral pairings give integral contents).
Weight weight_from_pairings(const RootSystem& rs, const std::vector<Rat>& c);

bool is_dominant(const RootSystem& rs, const Weight& gamma);
bool is_integral(const RootSystem& rs, const Weight& gamma);
bool is_regular(const RootSystem& rs, const Weight& gamma);

// Z(gamma) = { a in R+ | <gamma,a> = 0 } (a subset of R+ by definition).
RootSet zero_set(const RootSystem& rs, const Weight& gamma);
// P(gamma) intersected with R+ (all of P(gamma) when gamma is dominant).
RootSet one_set_positive(const RootSystem& rs, const Weight& gamma);
// All roots pairing to 1, including negative ones (non-dominant gamma).
std::vector<Coords> one_set_all(const RootSystem& rs, const Weight& gamma);

// rho = 1/2 sum of positive coroots; satisfies <rho, a_i> = 1 for simple a_i.
Weight rho(const RootSystem& rs);

// W-translate of gamma lying in the closed fundamental chamber, plus the
// element achieving it.
std::pair<Weight, WeylElement> dominant_representative(const RootSystem& rs,
                                                       const Weight& gamma);

// Placed shapes and standard tableaux ----------------------------------------

struct PlacedShape {
  RootSystemPtr rs;
  Weight gamma;  // dominant
  RootSet Z, P, J;

  static PlacedShape make(RootSystemPtr rs, Weight gamma, RootSet J);
};

// Minimal-length representative u of the coset w0 W_gamma; asserts the
// identity R(u) = R+ \ Z(gamma) after construction.
WeylElement minimal_coset_representative(const RootSystem& rs, const Weight& gamma);

// Elements w with R(w) n Z = {} and R(w) n P = J, for arbitrary gamma
// (dominance not required; P is cut down to R+, which is where R(w) lives).
std::vector<WeylElement> standard_tableaux(const WeylGroup& W, const Weight& gamma,
                                           const RootSet& J);

struct TableauSet {
  PlacedShape shape;
  std::vector<WeylElement> elements;  // sorted by (length, one-line notation)
};

TableauSet enumerate_standard_tableaux(const WeylGroup& W, const PlacedShape& shape);

// One pass over W: bucket the elements with R(w) n Z(gamma) = {} by
// J = R(w) n P(gamma).  The buckets are exactly the nonempty F^(gamma,J).
std::map<RootSet, std::vector<int>> tableau_buckets(const WeylGroup& W,
                                                    const Weight& gamma);

// Right descent set D(w) = { a_i | w s_i < w }, as a set of simple indices.
std::vector<int> descent_set(const RootSystem& rs, const WeylElement& w);

// Closure condition of the nonemptiness conjecture: if b in J, a in Z and
// b - a in R+ then b - a in J.
bool nonemptiness_condition(const RootSystem& rs, const RootSet& Z, const RootSet& J);

bool is_ribbon(const RootSystem& rs, const Weight& gamma);

struct SkewDetail {
  bool f_empty = false;
  // In simply-laced rank-2 pairs "long"/"short" is vacuous; set when the two
  // tau assignments give different answers somewhere.
  bool tau_assignment_disagreement = false;
};

// Rank-1 regularity plus the rank-2 regular-or-tau-orbit condition, checked
// for every w in F^(gamma,J).
bool is_skew(const WeylGroup& W, const PlacedShape& shape, SkewDetail* detail = nullptr);

struct ConjugateShape {
  PlacedShape shape;  // (-u gamma, -u(P \ J))
  WeylElement u;
};

ConjugateShape conjugate_shape(const PlacedShape& shape);

// w -> w u^{-1}; requires w in F^(gamma,J).
WeylElement conjugate_tableau(const WeylElement& w, const PlacedShape& shape);

Rat axial_distance(const WeylElement& w, const Coords& alpha, const Weight& gamma);

struct ReadingTableaux {
  std::vector<WeylElement> minima;
  std::vector<WeylElement> maxima;
};

// Minimal and maximal elements of F^(gamma,J) in the weak Bruhat order.
// Uniqueness outside integral type A is exactly the interval conjecture and
// is not assumed here.
ReadingTableaux reading_tableaux(const WeylGroup& W, const TableauSet& ts);

struct IntervalReport {
  bool f_empty = false;
  bool unique_min = false, unique_max = false;
  bool rmin_is_closure = false;
  bool rmax_is_complement = false;
  bool interval_equals_f = false;
  std::string witness;  // filled when some check fails

  bool ok() const {
    return !f_empty && unique_min && unique_max && rmin_is_closure &&
           rmax_is_complement && interval_equals_f;
  }
};

IntervalReport interval_conjecture_check(const WeylGroup& W, const PlacedShape& shape);

}  // namespace weyltab
