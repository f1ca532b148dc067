#pragma once

#include "weyltab/shape.hpp"

#include <utility>
#include <vector>

namespace weyltab {

// Graph on the orbit W.gamma with an edge w.gamma -- s_i w.gamma whenever
// <w.gamma, a_i> != +-1 (and the two vertices differ).
struct CalibrationGraph {
  RootSystemPtr rs;
  Weight gamma;
  std::vector<Weight> vertices;      // orbit, BFS discovery order from gamma
  std::vector<WeylElement> reps;     // minimal coset representative per vertex
  std::vector<std::pair<int, int>> edges;

  // Filled by label_components (requires dominant gamma):
  std::vector<int> component;        // vertex -> component id
  std::vector<int> component_sizes;
  std::vector<RootSet> component_labels;  // J per component
  int num_components() const { return static_cast<int>(component_sizes.size()); }
};

CalibrationGraph build_calibration_graph(RootSystemPtr rs, const Weight& gamma,
                                         long long cap = kDefaultGroupCap);

// Connected components with their J-labels (Theorem: components are the
// nonempty F^(gamma,J)).  Throws StructuralError if members of one component
// disagree on J = R(w) n P(gamma).
void label_components(CalibrationGraph& g);

// Sign of <x, w a> per positive root a, for a fixed interior point x of the
// fundamental chamber; this is the chamber signature of w^{-1}C.
std::vector<int> chamber_signature(const RootSystem& rs, const WeylElement& w);

struct ChamberReport {
  bool vertex_bijection = false;   // orbit <-> chambers positive on Z(gamma)
  bool edge_criterion = false;     // edges <-> shared face not inside P-walls
  bool tableau_chambers = false;   // F^(gamma,J) <-> three-condition chambers
  bool inversion_signature = false;  // R(w) = hyperplanes with negative sign
  bool ok() const {
    return vertex_bijection && edge_criterion && tableau_chambers &&
           inversion_signature;
  }
};

ChamberReport chamber_view_check(const WeylGroup& W, const Weight& gamma);

// True iff some w in W satisfies Z(w g1) = Z(g2), P(w g1) = P(g2), w J1 = J2.
// When true, |F| of the two shapes is asserted equal.
bool same_shape(const WeylGroup& W, const PlacedShape& s1, const PlacedShape& s2);

// Intersection-lattice counts for the triple arrangement {H_{a-d}, H_a,
// H_{a+d}} and the Shi arrangement {H_a, H_{a+d}}.
long long count_calibration_classes(const WeylGroup& W);
long long count_shi_dominant_intersections(int n);  // type A, ambient R^n
long long shi_dominant_formula(int n);              // binomial x odd Fibonacci

// Coefficients q^1..q^N of prod_k (1-q^k)^(2^(k-1)) or its reciprocal.
std::vector<long long> calibration_class_series(int N, bool reciprocal);

}  // namespace weyltab
