#include "weyltab/shape.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace weyltab {

Weight weight_from_pairings(const RootSystem& rs, const std::vector<Rat>& c) {
  if (static_cast<int>(c.size()) != rs.num_simple())
    throw InvalidInput("expected one pairing per simple root");
  int m = rs.ambient();
  Weight g(m, Rat(0));
  switch (rs.family()) {
    case Family::A:
      for (int i = 1; i < m; ++i) g[i] = g[i - 1] + c[i - 1];
      break;
    case Family::B:
      g[0] = c[0];
      for (int i = 1; i < m; ++i) g[i] = g[i - 1] + c[i];
      break;
    case Family::C:
      g[0] = c[0] / 2;
      for (int i = 1; i < m; ++i) g[i] = g[i - 1] + c[i];
      break;
    case Family::D:
      g[0] = (c[0] - c[1]) / 2;
      g[1] = (c[0] + c[1]) / 2;
      for (int i = 2; i < m; ++i) g[i] = g[i - 1] + c[i];
      break;
  }
  for (int i = 0; i < rs.num_simple(); ++i)
    if (dot(g, rs.simple(i)) != c[i])
      throw StructuralError("pairing reconstruction failed");
  return g;
}

bool is_dominant(const RootSystem& rs, const Weight& gamma) {
  for (int i = 0; i < rs.num_simple(); ++i)
    if (dot(gamma, rs.simple(i)) < Rat(0)) return false;
  return true;
}

bool is_integral(const RootSystem& rs, const Weight& gamma) {
  for (int i = 0; i < rs.num_simple(); ++i)
    if (!is_integer(dot(gamma, rs.simple(i)))) return false;
  return true;
}

bool is_regular(const RootSystem& rs, const Weight& gamma) {
  for (int p = 0; p < rs.num_positive(); ++p)
    if (dot(gamma, rs.positive(p)) == Rat(0)) return false;
  return true;
}

RootSet zero_set(const RootSystem& rs, const Weight& gamma) {
  RootSet z;
  for (int p = 0; p < rs.num_positive(); ++p)
    if (dot(gamma, rs.positive(p)) == Rat(0)) z.set(p);
  return z;
}

RootSet one_set_positive(const RootSystem& rs, const Weight& gamma) {
  RootSet s;
  for (int p = 0; p < rs.num_positive(); ++p)
    if (dot(gamma, rs.positive(p)) == Rat(1)) s.set(p);
  return s;
}

std::vector<Coords> one_set_all(const RootSystem& rs, const Weight& gamma) {
  std::vector<Coords> out;
  for (int p = 0; p < rs.num_positive(); ++p) {
    const Coords& a = rs.positive(p);
    Rat v = dot(gamma, a);
    if (v == Rat(1)) out.push_back(a);
    if (v == Rat(-1)) {
      Coords neg(a.size());
      for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
      out.push_back(std::move(neg));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Weight rho(const RootSystem& rs) {
  Weight r(rs.ambient(), Rat(0));
  for (int p = 0; p < rs.num_positive(); ++p) {
    const Coords& a = rs.positive(p);
    Rat inv_norm(1, dot(a, a));  // alpha^vee / 2 = alpha / <alpha,alpha>
    for (int i = 0; i < rs.ambient(); ++i) r[i] += inv_norm * a[i];
  }
  return r;
}

std::pair<Weight, WeylElement> dominant_representative(const RootSystem& rs,
                                                       const Weight& gamma) {
  Weight x = gamma;
  WeylElement w = WeylElement::identity(rs.ambient());
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.num_simple(); ++i) {
      if (dot(x, rs.simple(i)) < Rat(0)) {
        WeylElement s = simple_reflection(rs, i);
        x = s.act(x);
        w = s * w;
        moved = true;
      }
    }
  }
  return {x, w};
}

PlacedShape PlacedShape::make(RootSystemPtr rs, Weight gamma, RootSet J) {
  if (static_cast<int>(gamma.size()) != rs->ambient())
    throw InvalidInput("gamma has wrong dimension");
  if (!is_dominant(*rs, gamma))
    throw InvalidInput("gamma is not dominant; use dominant_representative first");
  PlacedShape s;
  s.rs = std::move(rs);
  s.Z = zero_set(*s.rs, gamma);
  s.P = one_set_positive(*s.rs, gamma);
  if (!J.subset_of(s.P)) throw InvalidInput("J is not a subset of P(gamma)");
  s.gamma = std::move(gamma);
  s.J = J;
  return s;
}

WeylElement minimal_coset_representative(const RootSystem& rs, const Weight& gamma) {
  if (!is_dominant(rs, gamma)) throw InvalidInput("gamma is not dominant");
  RootSet z = zero_set(rs, gamma);
  WeylElement v = parabolic_longest(rs, z);
  WeylElement u = longest_element(rs) * v;  // w0 = u v and v^2 = 1
  if (!(inversion_set(rs, u) == z.complement(rs.num_positive())))
    throw StructuralError("R(u) != R+ \\ Z(gamma)");
  return u;
}

std::vector<WeylElement> standard_tableaux(const WeylGroup& W, const Weight& gamma,
                                           const RootSet& J) {
  RootSet Z = zero_set(W.rs(), gamma);
  RootSet P = one_set_positive(W.rs(), gamma);
  std::vector<WeylElement> out;
  for (int k = 0; k < W.size(); ++k) {
    const RootSet& R = W.inversions(k);
    if ((R & Z).empty() && (R & P) == J) out.push_back(W.element(k));
  }
  return out;  // W is ordered by (length, one-line), so out is too
}

TableauSet enumerate_standard_tableaux(const WeylGroup& W, const PlacedShape& shape) {
  TableauSet ts;
  ts.shape = shape;
  ts.elements = standard_tableaux(W, shape.gamma, shape.J);
  return ts;
}

std::map<RootSet, std::vector<int>> tableau_buckets(const WeylGroup& W,
                                                    const Weight& gamma) {
  RootSet Z = zero_set(W.rs(), gamma);
  RootSet P = one_set_positive(W.rs(), gamma);
  std::map<RootSet, std::vector<int>> buckets;
  for (int k = 0; k < W.size(); ++k) {
    const RootSet& R = W.inversions(k);
    if ((R & Z).empty()) buckets[R & P].push_back(k);
  }
  return buckets;
}

std::vector<int> descent_set(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> out;
  for (int i = 0; i < rs.num_simple(); ++i)
    if (rs.lookup(w.act(rs.simple(i))) < 0) out.push_back(i);
  return out;
}

bool nonemptiness_condition(const RootSystem& rs, const RootSet& Z, const RootSet& J) {
  for (int b : J.indices()) {
    const Coords& beta = rs.positive(b);
    for (int a : Z.indices()) {
      const Coords& alpha = rs.positive(a);
      Coords d(beta.size());
      for (size_t i = 0; i < beta.size(); ++i) d[i] = beta[i] - alpha[i];
      int id = rs.lookup(d);
      if (id > 0 && !J.test(id - 1)) return false;
    }
  }
  return true;
}

bool is_ribbon(const RootSystem& rs, const Weight& gamma) {
  return zero_set(rs, gamma).empty();
}

namespace {

// Restriction of a weight to the rank <= 2 subsystem generated by simple
// roots i (and j), encoded by its pairings with those simples.
struct PairFn {
  Rat fi, fj;
  bool operator<(const PairFn& o) const {
    return fi != o.fi ? fi < o.fi : fj < o.fj;
  }
  bool operator==(const PairFn& o) const { return fi == o.fi && fj == o.fj; }
};

// Positive roots of the subsystem, as (a,b) coefficients over (a_i, a_j).
std::vector<std::pair<int, int>> pair_subsystem(const RootSystem& rs, int i, int j) {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < rs.num_positive(); ++p) {
    const auto& sc = rs.simple_coords(p);
    bool inside = true;
    for (int k = 0; k < rs.num_simple(); ++k)
      if (sc[k] != 0 && k != i && k != j) { inside = false; break; }
    if (inside && (sc[i] != 0 || sc[j] != 0)) out.emplace_back(sc[i], sc[j]);
  }
  return out;
}

// Orbit of the function f under the dihedral group <s_i, s_j>, acting by
// (s.f)(a) = f(s a).
std::set<PairFn> dihedral_orbit(const RootSystem& rs, int i, int j, PairFn f) {
  // s_i a_i = -a_i; s_i a_j = a_j - <a_j, a_i^vee> a_i, all inside the pair
  // subsystem, so the action closes on (fi, fj).
  auto cartan = [&](int a, int b) {  // <a_a, a_b^vee>
    const Coords& x = rs.simple(a);
    const Coords& y = rs.simple(b);
    return Rat(2 * dot(x, y), dot(y, y));
  };
  Rat cij = cartan(i, j), cji = cartan(j, i);
  auto apply_si = [&](PairFn g) {
    // (s_i.g)(a_i) = g(-a_i); (s_i.g)(a_j) = g(a_j - cji... )
    // s_i a_j = a_j - <a_j,a_i^vee> a_i
    return PairFn{-g.fi, g.fj - cji * g.fi};
  };
  auto apply_sj = [&](PairFn g) {
    return PairFn{g.fi - cij * g.fj, -g.fj};
  };
  std::set<PairFn> orbit{f};
  std::vector<PairFn> todo{f};
  while (!todo.empty()) {
    PairFn g = todo.back();
    todo.pop_back();
    for (PairFn h : {apply_si(g), apply_sj(g)}) {
      if (orbit.insert(h).second) todo.push_back(h);
    }
  }
  return orbit;
}

bool vanishes_somewhere(const std::vector<std::pair<int, int>>& roots, PairFn f) {
  for (auto [a, b] : roots)
    if (Rat(a) * f.fi + Rat(b) * f.fj == Rat(0)) return true;
  return false;
}

}  // namespace

bool is_skew(const WeylGroup& W, const PlacedShape& shape, SkewDetail* detail) {
  const RootSystem& rs = W.rs();
  auto F = standard_tableaux(W, shape.gamma, shape.J);
  if (detail) *detail = SkewDetail{};
  if (F.empty()) {
    if (detail) detail->f_empty = true;
    return true;  // vacuous
  }

  int ns = rs.num_simple();
  // Precompute pair subsystems and tau orbits.
  struct PairData {
    std::vector<std::pair<int, int>> roots;
    std::set<PairFn> orbit_a;  // tau with 1 at a_i
    std::set<PairFn> orbit_b;  // tau with 1 at a_j
    bool i_long = false, j_long = false, equal_len = false;
  };
  std::vector<std::vector<PairData>> pd(ns, std::vector<PairData>(ns));
  for (int i = 0; i < ns; ++i)
    for (int j = i + 1; j < ns; ++j) {
      PairData& d = pd[i][j];
      d.roots = pair_subsystem(rs, i, j);
      int ni = dot(rs.simple(i), rs.simple(i));
      int nj = dot(rs.simple(j), rs.simple(j));
      d.i_long = ni > nj;
      d.j_long = nj > ni;
      d.equal_len = ni == nj;
      d.orbit_a = dihedral_orbit(rs, i, j, PairFn{Rat(1), Rat(0)});
      d.orbit_b = dihedral_orbit(rs, i, j, PairFn{Rat(0), Rat(1)});
    }

  bool ok = true;
  for (const auto& w : F) {
    Weight wg = w.act(shape.gamma);
    std::vector<Rat> f(ns);
    for (int i = 0; i < ns; ++i) f[i] = dot(wg, rs.simple(i));
    for (int i = 0; i < ns; ++i)
      if (f[i] == Rat(0)) ok = false;  // (a) rank-1 regularity
    if (!ok) break;
    for (int i = 0; i < ns && ok; ++i)
      for (int j = i + 1; j < ns && ok; ++j) {
        const PairData& d = pd[i][j];
        PairFn g{f[i], f[j]};
        if (!vanishes_somewhere(d.roots, g)) continue;  // regular pair
        bool in_a = d.orbit_a.count(g) > 0;
        bool in_b = d.orbit_b.count(g) > 0;
        bool accept;
        if (d.i_long)
          accept = in_a;
        else if (d.j_long)
          accept = in_b;
        else {
          // Equal lengths: no root is long, so the tau option does not
          // apply.  (Reading it as "either assignment" breaks the
          // equivalence with the box-pattern test on type A shapes.)
          accept = false;
          if (detail && in_a != in_b) detail->tau_assignment_disagreement = true;
        }
        if (!accept) ok = false;
      }
    if (!ok) break;
  }
  return ok;
}

ConjugateShape conjugate_shape(const PlacedShape& shape) {
  const RootSystem& rs = *shape.rs;
  WeylElement u = minimal_coset_representative(rs, shape.gamma);
  Weight ng = u.act(shape.gamma);
  for (auto& x : ng) x = -x;

  RootSet nJ;
  for (int p : (shape.P - shape.J).indices()) {
    Coords img = u.act(rs.positive(p));
    for (auto& v : img) v = -v;
    int id = rs.lookup(img);
    if (id <= 0) throw StructuralError("-u(P\\J) left the positive roots");
    nJ.set(id - 1);
  }
  ConjugateShape out{PlacedShape::make(shape.rs, std::move(ng), nJ), u};
  return out;
}

WeylElement conjugate_tableau(const WeylElement& w, const PlacedShape& shape) {
  const RootSystem& rs = *shape.rs;
  RootSet R = inversion_set(rs, w);
  if (!(R & shape.Z).empty() || (R & shape.P) != shape.J)
    throw InvalidInput("element is not a standard tableau of the given shape");
  return w * minimal_coset_representative(rs, shape.gamma).inverse();
}

Rat axial_distance(const WeylElement& w, const Coords& alpha, const Weight& gamma) {
  return dot(w.act(gamma), alpha);
}

ReadingTableaux reading_tableaux(const WeylGroup& W, const TableauSet& ts) {
  if (ts.elements.empty()) throw InvalidInput("empty tableau set");
  const RootSystem& rs = W.rs();
  std::vector<RootSet> inv;
  inv.reserve(ts.elements.size());
  for (const auto& w : ts.elements) inv.push_back(inversion_set(rs, w));

  ReadingTableaux out;
  for (size_t a = 0; a < ts.elements.size(); ++a) {
    bool minimal = true, maximal = true;
    for (size_t b = 0; b < ts.elements.size(); ++b) {
      if (a == b) continue;
      if (inv[b].subset_of(inv[a]) && inv[b] != inv[a]) minimal = false;
      if (inv[a].subset_of(inv[b]) && inv[a] != inv[b]) maximal = false;
    }
    if (minimal) out.minima.push_back(ts.elements[a]);
    if (maximal) out.maxima.push_back(ts.elements[a]);
  }
  return out;
}

IntervalReport interval_conjecture_check(const WeylGroup& W, const PlacedShape& shape) {
  IntervalReport rep;
  const RootSystem& rs = W.rs();
  TableauSet ts = enumerate_standard_tableaux(W, shape);
  if (ts.elements.empty()) {
    rep.f_empty = true;
    rep.witness = "F is empty";
    return rep;
  }
  ReadingTableaux rt = reading_tableaux(W, ts);
  rep.unique_min = rt.minima.size() == 1;
  rep.unique_max = rt.maxima.size() == 1;
  if (!rep.unique_min || !rep.unique_max) {
    std::ostringstream os;
    os << rt.minima.size() << " minima, " << rt.maxima.size() << " maxima";
    rep.witness = os.str();
    return rep;
  }
  RootSet rmin = inversion_set(rs, rt.minima[0]);
  RootSet rmax = inversion_set(rs, rt.maxima[0]);
  RootSet cj = closure(rs, shape.J);
  RootSet cc = closure(rs, (shape.P - shape.J) | shape.Z).complement(rs.num_positive());
  rep.rmin_is_closure = rmin == cj;
  rep.rmax_is_complement = rmax == cc;

  // F must equal the weak Bruhat interval [w_min, w_max] inside W.
  std::set<std::vector<int>> in_f;
  for (const auto& w : ts.elements) in_f.insert(w.one_line());
  rep.interval_equals_f = true;
  for (int k = 0; k < W.size(); ++k) {
    const RootSet& R = W.inversions(k);
    bool in_interval = rmin.subset_of(R) && R.subset_of(rmax);
    if (in_interval != (in_f.count(W.element(k).one_line()) > 0)) {
      rep.interval_equals_f = false;
      rep.witness = "interval mismatch at " + W.element(k).to_string();
      break;
    }
  }
  if (!rep.rmin_is_closure && rep.witness.empty()) rep.witness = "R(w_min) != closure(J)";
  if (!rep.rmax_is_complement && rep.witness.empty())
    rep.witness = "R(w_max) != complement of closure((P\\J) u Z)";
  return rep;
}

}  // namespace weyltab
