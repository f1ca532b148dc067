#include "weyltab/calibration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace weyltab {

CalibrationGraph build_calibration_graph(RootSystemPtr rs, const Weight& gamma,
                                         long long cap) {
  if (static_cast<int>(gamma.size()) != rs->ambient())
    throw InvalidInput("gamma has wrong dimension");
  CalibrationGraph g;
  g.rs = rs;
  g.gamma = gamma;

  std::map<Weight, int> seen;
  std::vector<WeylElement> simples;
  for (int i = 0; i < rs->num_simple(); ++i)
    simples.push_back(simple_reflection(*rs, i));

  g.vertices.push_back(gamma);
  g.reps.push_back(WeylElement::identity(rs->ambient()));
  seen[gamma] = 0;
  std::set<std::pair<int, int>> edges;

  for (size_t head = 0; head < g.vertices.size(); ++head) {
    if (static_cast<long long>(g.vertices.size()) > cap)
      throw CapExceeded("orbit exceeds cap " + std::to_string(cap));
    Weight x = g.vertices[head];
    for (int i = 0; i < rs->num_simple(); ++i) {
      Weight y = simples[i].act(x);
      if (y == x) continue;
      auto [it, fresh] = seen.emplace(y, static_cast<int>(g.vertices.size()));
      if (fresh) {
        g.vertices.push_back(y);
        // BFS level = length of the minimal coset representative, and that
        // representative is unique, so s_i * rep(x) is it.
        g.reps.push_back(simples[i] * g.reps[head]);
      }
      Rat pr = dot(x, rs->simple(i));
      if (pr != Rat(1) && pr != Rat(-1)) {
        int a = static_cast<int>(head), b = it->second;
        edges.insert({std::min(a, b), std::max(a, b)});
      }
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

void label_components(CalibrationGraph& g) {
  const RootSystem& rs = *g.rs;
  if (!is_dominant(rs, g.gamma))
    throw InvalidInput("component labels need dominant gamma");
  int n = static_cast<int>(g.vertices.size());
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (auto [a, b] : g.edges) uf[find(a)] = find(b);

  RootSet P = one_set_positive(rs, g.gamma);
  std::map<int, int> comp_id;
  g.component.assign(n, -1);
  g.component_sizes.clear();
  g.component_labels.clear();
  for (int v = 0; v < n; ++v) {
    int root = find(v);
    auto [it, fresh] = comp_id.emplace(root, static_cast<int>(g.component_sizes.size()));
    if (fresh) {
      g.component_sizes.push_back(0);
      g.component_labels.push_back(inversion_set(rs, g.reps[v]) & P);
    }
    int c = it->second;
    g.component[v] = c;
    g.component_sizes[c]++;
    RootSet J = inversion_set(rs, g.reps[v]) & P;
    if (J != g.component_labels[c])
      throw StructuralError("component members disagree on J at vertex " +
                            weight_to_string(g.vertices[v]));
  }
}

std::vector<int> chamber_signature(const RootSystem& rs, const WeylElement& w) {
  std::vector<Rat> ones(rs.num_simple(), Rat(1));
  Weight x = weight_from_pairings(rs, ones);
  std::vector<int> sig(rs.num_positive());
  for (int p = 0; p < rs.num_positive(); ++p) {
    Rat v = dot(x, w.act(rs.positive(p)));
    if (v == Rat(0)) throw StructuralError("interior point landed on a wall");
    sig[p] = v > Rat(0) ? 1 : -1;
  }
  return sig;
}

ChamberReport chamber_view_check(const WeylGroup& W, const Weight& gamma) {
  const RootSystem& rs = W.rs();
  ChamberReport rep;
  RootSet Z = zero_set(rs, gamma);
  RootSet P = one_set_positive(rs, gamma);

  std::vector<std::vector<int>> sig(W.size());
  for (int k = 0; k < W.size(); ++k) sig[k] = chamber_signature(rs, W.element(k));

  // R(w) = { a | w^{-1}C on the negative side of H_a }.
  rep.inversion_signature = true;
  for (int k = 0; k < W.size(); ++k) {
    RootSet neg;
    for (int p = 0; p < rs.num_positive(); ++p)
      if (sig[k][p] < 0) neg.set(p);
    if (neg != W.inversions(k)) rep.inversion_signature = false;
  }

  auto positive_on = [&](const std::vector<int>& s, const RootSet& set) {
    for (int p : set.indices())
      if (s[p] < 0) return false;
    return true;
  };

  CalibrationGraph g = build_calibration_graph(W.rs_ptr(), gamma);
  std::set<std::vector<int>> vertex_sigs;
  for (const auto& r : g.reps) vertex_sigs.insert(chamber_signature(rs, r));
  std::set<std::vector<int>> expected;
  for (int k = 0; k < W.size(); ++k)
    if (positive_on(sig[k], Z)) expected.insert(sig[k]);
  rep.vertex_bijection =
      vertex_sigs.size() == g.vertices.size() && vertex_sigs == expected;

  // Edge criterion: chambers share a face iff the signatures differ in
  // exactly one position; that wall must avoid the P(gamma) hyperplanes.
  rep.edge_criterion = true;
  std::set<std::pair<int, int>> edge_set(g.edges.begin(), g.edges.end());
  std::vector<std::vector<int>> vsig;
  for (const auto& r : g.reps) vsig.push_back(chamber_signature(rs, r));
  for (size_t a = 0; a < g.vertices.size(); ++a)
    for (size_t b = a + 1; b < g.vertices.size(); ++b) {
      int diff = -1, ndiff = 0;
      for (int p = 0; p < rs.num_positive(); ++p)
        if (vsig[a][p] != vsig[b][p]) { diff = p; ++ndiff; }
      bool chamber_edge = ndiff == 1 && !P.test(diff);
      bool graph_edge = edge_set.count({static_cast<int>(std::min(a, b)),
                                        static_cast<int>(std::max(a, b))}) > 0;
      if (chamber_edge != graph_edge) rep.edge_criterion = false;
    }

  // Prop (c): F^(gamma,J) <-> chambers positive on Z and P\J, negative on J.
  rep.tableau_chambers = true;
  auto buckets = tableau_buckets(W, gamma);
  for (const auto& [J, members] : buckets) {
    std::set<std::vector<int>> fs;
    for (int k : members) fs.insert(sig[k]);
    std::set<std::vector<int>> cs;
    for (int k = 0; k < W.size(); ++k) {
      bool okz = positive_on(sig[k], Z);
      bool okpj = positive_on(sig[k], P - J);
      bool okj = true;
      for (int p : J.indices())
        if (sig[k][p] > 0) okj = false;
      if (okz && okpj && okj) cs.insert(sig[k]);
    }
    if (fs != cs) rep.tableau_chambers = false;
  }
  return rep;
}

bool same_shape(const WeylGroup& W, const PlacedShape& s1, const PlacedShape& s2) {
  const RootSystem& rs = W.rs();
  if (s1.rs->name() != s2.rs->name())
    throw InvalidInput("shapes live in different root systems");

  auto signed_set = [&](const RootSet& s, const WeylElement& w) {
    std::vector<Coords> out;
    for (int p : s.indices()) out.push_back(w.act(rs.positive(p)));
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<Coords> J2;
  for (int p : s2.J.indices()) J2.push_back(rs.positive(p));
  std::sort(J2.begin(), J2.end());

  for (int k = 0; k < W.size(); ++k) {
    const WeylElement& w = W.element(k);
    Weight wg = w.act(s1.gamma);
    if (zero_set(rs, wg) != s2.Z) continue;
    if (one_set_all(rs, wg) != one_set_all(rs, s2.gamma)) continue;
    if (signed_set(s1.J, w) != J2) continue;
    // Same underlying shape forces equinumerous tableau sets.
    auto f1 = standard_tableaux(W, s1.gamma, s1.J);
    auto f2 = standard_tableaux(W, s2.gamma, s2.J);
    if (f1.size() != f2.size())
      throw StructuralError("same shape but |F| differs");
    return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Intersection lattices of the triple and Shi arrangements.

namespace {

using Equation = std::pair<int, int>;  // (positive root index, level)

// Reduced row-echelon form of the system <x, a> = level; empty optional when
// inconsistent.  The matrix itself is the canonical key of the intersection.
std::optional<std::vector<std::vector<Rat>>> rref_of(
    const RootSystem& rs, const std::vector<Equation>& eqs) {
  int m = rs.ambient();
  std::vector<std::vector<Rat>> rows;
  for (auto [p, level] : eqs) {
    std::vector<Rat> r(m + 1, Rat(0));
    for (int i = 0; i < m; ++i) r[i] = Rat(rs.positive(p)[i]);
    r[m] = Rat(level);
    rows.push_back(std::move(r));
  }
  int rank = 0;
  for (int col = 0; col < m && rank < static_cast<int>(rows.size()); ++col) {
    int pr = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != Rat(0)) { pr = r; break; }
    if (pr < 0) continue;
    std::swap(rows[rank], rows[pr]);
    Rat lead = rows[rank][col];
    for (auto& x : rows[rank]) x /= lead;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == Rat(0)) continue;
      Rat f = rows[r][col];
      for (int k = col; k <= m; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  for (int r = rank; r < static_cast<int>(rows.size()); ++r)
    if (rows[r][m] != Rat(0)) return std::nullopt;  // 0 = nonzero
  rows.resize(rank);
  std::sort(rows.begin(), rows.end());
  return rows;
}

using Key = std::vector<std::vector<Rat>>;

// All nonempty intersections of subsets of the arrangement, grown one
// hyperplane at a time (the empty subset contributes the ambient space).
std::map<Key, std::vector<Equation>> grow_intersections(
    const RootSystem& rs, const std::vector<int>& levels) {
  std::vector<Equation> hyperplanes;
  for (int p = 0; p < rs.num_positive(); ++p)
    for (int l : levels) hyperplanes.push_back({p, l});

  std::map<Key, std::vector<Equation>> lattice;
  lattice[Key{}] = {};
  std::vector<std::vector<Equation>> frontier{{}};
  while (!frontier.empty()) {
    std::vector<std::vector<Equation>> next;
    for (const auto& gen : frontier) {
      for (const auto& h : hyperplanes) {
        auto eqs = gen;
        eqs.push_back(h);
        auto key = rref_of(rs, eqs);
        if (!key) continue;
        if (lattice.emplace(*key, eqs).second) next.push_back(std::move(eqs));
      }
    }
    frontier = std::move(next);
  }
  return lattice;
}

// w maps H_{a,l} to H_{wa,l}; negative images flip to (positive root, -l).
std::vector<Equation> apply_w(const RootSystem& rs, const WeylElement& w,
                              const std::vector<Equation>& eqs) {
  std::vector<Equation> out;
  out.reserve(eqs.size());
  for (auto [p, l] : eqs) {
    int id = rs.lookup(w.act(rs.positive(p)));
    if (id == 0) throw StructuralError("root left the root system");
    out.push_back(id > 0 ? Equation{id - 1, l} : Equation{-id - 1, -l});
  }
  return out;
}

}  // namespace

long long count_calibration_classes(const WeylGroup& W) {
  const RootSystem& rs = W.rs();
  auto lattice = grow_intersections(rs, {-1, 0, 1});
  std::set<Key> orbit_min;
  for (const auto& [key, gens] : lattice) {
    Key best = key;
    for (int k = 0; k < W.size(); ++k) {
      auto moved = rref_of(rs, apply_w(rs, W.element(k), gens));
      if (moved && *moved < best) best = *moved;
    }
    orbit_min.insert(best);
  }
  return static_cast<long long>(orbit_min.size());
}

long long count_shi_dominant_intersections(int n) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  if (n == 1) return 1;  // A_0: no hyperplanes, only the ambient space
  auto rs = RootSystem::build(Family::A, n - 1);
  auto lattice = grow_intersections(*rs, {0, 1});

  long long count = 0;
  for (const auto& [key, gens] : lattice) {
    // Equations are x_j - x_i = l: union-find with offsets, then test for a
    // point with x_1 <= ... <= x_n via difference constraints on clusters.
    std::vector<int> parent(n), offset(n, 0);  // x_i = x_root + offset_i
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
      if (parent[v] == v) return v;
      int r = find(parent[v]);
      offset[v] += offset[parent[v]];
      parent[v] = r;
      return r;
    };
    bool consistent = true;
    for (auto [p, l] : gens) {
      const Coords& a = rs->positive(p);
      int i = -1, j = -1;
      for (int k = 0; k < n; ++k) {
        if (a[k] == -1) i = k;
        if (a[k] == 1) j = k;
      }
      int ri = find(i), rj = find(j);
      if (ri == rj) {
        if (offset[j] - offset[i] != l) { consistent = false; break; }
      } else {
        // x_j - x_i = l  =>  offset: root_j joins root_i
        parent[rj] = ri;
        offset[rj] = offset[i] + l - offset[j];
      }
    }
    if (!consistent) throw StructuralError("inconsistent intersection survived rref");

    // The formula counts intersections whose dominant part is
    // full-dimensional (a dominant point generic in the subspace), so the
    // cross-cluster inequalities base[c(i+1)] - base[c(i)] >= off_i -
    // off_{i+1} must admit a strictly feasible point.  Scale weights by K
    // and add 1 to turn strictness into positive-cycle detection.
    std::vector<int> cluster(n), off(n);
    for (int i = 0; i < n; ++i) { cluster[i] = find(i); off[i] = offset[i]; }
    std::map<int, int> cid;
    for (int i = 0; i < n; ++i) cid.emplace(cluster[i], static_cast<int>(cid.size()));
    int nc = static_cast<int>(cid.size());
    long long K = n + 1;
    struct E { int from, to; long long w; };
    std::vector<E> es;
    bool feasible = true;
    for (int i = 0; i + 1 < n; ++i) {
      int ci = cid[cluster[i]], cj = cid[cluster[i + 1]];
      long long w = off[i] - off[i + 1];
      if (ci == cj) {
        if (w > 0) { feasible = false; break; }
      } else {
        es.push_back({ci, cj, w * K + 1});
      }
    }
    if (feasible) {
      std::vector<long long> pot(nc, 0);
      for (int it = 0; it <= nc && feasible; ++it) {
        bool relaxed = false;
        for (const auto& e : es)
          if (pot[e.from] + e.w > pot[e.to]) { pot[e.to] = pot[e.from] + e.w; relaxed = true; }
        if (relaxed && it == nc) feasible = false;  // positive cycle
        if (!relaxed) break;
      }
    }
    if (feasible) ++count;
  }
  return count;
}

long long shi_dominant_formula(int n) {
  // sum_{k=1}^n binom(n-1, k-1) F_{2k-1}, F_1 = 1, F_3 = 2, F_5 = 5, ...
  std::vector<long long> fib{0, 1};
  for (int i = 2; i <= 2 * n; ++i) fib.push_back(fib[i - 1] + fib[i - 2]);
  auto binom = [](int a, int b) {
    long long r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  long long total = 0;
  for (int k = 1; k <= n; ++k) total += binom(n - 1, k - 1) * fib[2 * k - 1];
  return total;
}

std::vector<long long> calibration_class_series(int N, bool reciprocal) {
  // prod_{k>=1} (1 - q^k)^(+-2^(k-1)) truncated at q^N.
  std::vector<long long> coeff(N + 1, 0);
  coeff[0] = 1;
  for (int k = 1; k <= N; ++k) {
    long long e = 1LL << (k - 1);
    std::vector<long long> factor(N + 1, 0);
    if (!reciprocal) {
      // (1 - q^k)^e, binomial expansion
      long long c = 1;
      for (int j = 0; j <= e && k * j <= N; ++j) {
        factor[k * j] = (j % 2 ? -c : c);
        c = c * (e - j) / (j + 1);
      }
    } else {
      // (1 - q^k)^(-e) = sum_j binom(e-1+j, j) q^(kj)
      long long c = 1;
      for (int j = 0; k * j <= N; ++j) {
        factor[k * j] = c;
        c = c * (e + j) / (j + 1);
      }
    }
    std::vector<long long> next(N + 1, 0);
    for (int a = 0; a <= N; ++a) {
      if (coeff[a] == 0) continue;
      for (int b = 0; a + b <= N; ++b) next[a + b] += coeff[a] * factor[b];
    }
    coeff = std::move(next);
  }
  return std::vector<long long>(coeff.begin() + 1, coeff.end());
}

}  // namespace weyltab
