#include "weyltab/boxes_a.hpp"

#include "weyltab/placement.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace weyltab::boxes_a {

BoxConfig place_boxes(const Rat& page_label,
                      const std::vector<std::pair<int, Rat>>& idx_content,
                      const std::vector<PairRelation>& rels) {
  int m = static_cast<int>(idx_content.size());
  std::map<int, int> slot;  // box index -> variable
  for (int v = 0; v < m; ++v) slot[idx_content[v].first] = v;

  std::vector<DepthConstraint> cs;
  // Within a diagonal, indices increase from northwest to southeast.
  std::map<Rat, std::vector<int>> diag;  // content -> box indices
  for (const auto& [idx, c] : idx_content) diag[c].push_back(idx);
  for (auto& [c, idxs] : diag) {
    std::sort(idxs.begin(), idxs.end());
    for (size_t k = 0; k + 1 < idxs.size(); ++k)
      cs.push_back({slot[idxs[k]], slot[idxs[k + 1]], 1});
  }
  for (const auto& r : rels) {
    if (r.nw)
      cs.push_back({slot[r.hi], slot[r.lo], 1});  // p_hi + 1 <= p_lo
    else
      cs.push_back({slot[r.lo], slot[r.hi], 0});  // p_lo <= p_hi
  }
  // The nw constraint above is reversed: fix orientation here.
  // p_hi <= p_lo - 1 means p_hi + 1 <= p_lo, i.e. a->b with a=hi, b=lo.
  std::string err;
  auto depths = solve_depths(m, cs, &err);
  if (!depths) throw InvalidInput("inconsistent placement: " + err);

  // dint = content - page fractional shift, an integer column offset.
  std::vector<Box> boxes;
  long long min_row = 0, min_col = 0;
  bool first = true;
  for (int v = 0; v < m; ++v) {
    const auto& [idx, c] = idx_content[v];
    Rat dint = c - frac_part(c);
    int row = (*depths)[v];
    int col = row + static_cast<int>(dint.numerator());
    if (first || row < min_row) min_row = row;
    if (first || col < min_col) min_col = col;
    first = false;
    boxes.push_back(Box{idx, c, row, col});
  }
  int k = static_cast<int>(std::max(1 - min_row, 1 - min_col));
  if (k < 0) k = 0;
  for (auto& b : boxes) {
    b.row += k;
    b.col += k;
  }
  return make_config(page_label, std::move(boxes));
}

PlacedSkew skew_to_placed_shape(const std::vector<int>& lambda,
                                const std::vector<int>& mu, int offset) {
  for (size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1]) throw InvalidInput("lambda is not a partition");
  for (size_t i = 0; i + 1 < mu.size(); ++i)
    if (mu[i] < mu[i + 1]) throw InvalidInput("mu is not a partition");
  std::vector<Box> boxes;
  for (size_t r = 0; r < lambda.size(); ++r) {
    int m = r < mu.size() ? mu[r] : 0;
    if (m > lambda[r]) throw InvalidInput("mu is not contained in lambda");
    for (int c = m + 1; c <= lambda[r]; ++c) {
      int row = static_cast<int>(r) + 1;
      boxes.push_back(Box{0, Rat(c - row + offset), row, c});
    }
  }
  if (boxes.empty()) throw InvalidInput("empty skew shape");
  std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
    if (a.content != b.content) return a.content < b.content;
    return a.row < b.row;
  });
  for (size_t i = 0; i < boxes.size(); ++i) boxes[i].index = static_cast<int>(i) + 1;

  PlacedSkew out;
  int n = static_cast<int>(boxes.size());
  out.rs = RootSystem::build(Family::A, n - 1);
  out.config = make_config(Rat(0), boxes);
  out.gamma = config_gamma(out.config);
  out.J = config_J(*out.rs, out.config);
  return out;
}

Weight config_gamma(const BoxConfig& c) {
  Weight g(c.boxes.size(), Rat(0));
  for (const auto& b : c.boxes) g[b.index - 1] = b.content;
  return g;
}

RootSet config_J(const RootSystem& rs, const BoxConfig& c) {
  RootSet J;
  for (const auto& bi : c.boxes)
    for (const auto& bj : c.boxes) {
      if (bj.index <= bi.index) continue;
      if (bj.content - bi.content != Rat(1) && bi.content - bj.content != Rat(1))
        continue;
      if (northwest(bj, bi)) {
        Coords root(rs.ambient(), 0);
        root[bj.index - 1] = 1;
        root[bi.index - 1] = -1;
        int id = rs.lookup(root);
        if (id <= 0) throw StructuralError("J rule hit a non-root");
        J.set(id - 1);
      }
    }
  return J;
}

BoxConfig shape_to_configuration(const RootSystem& rs, const Weight& gamma,
                                 const RootSet& J) {
  int n = static_cast<int>(gamma.size());
  for (int i = 0; i + 1 < n; ++i)
    if (gamma[i] > gamma[i + 1])
      throw InvalidInput("gamma must be weakly increasing");
  for (const auto& g : gamma)
    if (!is_integer(g)) throw InvalidInput("gamma must be integral");
  if (!nonemptiness_condition(rs, zero_set(rs, gamma), J))
    throw InvalidInput("J violates the nonemptiness condition; no placement exists");

  std::vector<std::pair<int, Rat>> idx_content;
  for (int i = 0; i < n; ++i) idx_content.emplace_back(i + 1, gamma[i]);
  std::vector<PairRelation> rels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (gamma[j] - gamma[i] != Rat(1)) continue;
      Coords root(rs.ambient(), 0);
      root[j] = 1;
      root[i] = -1;
      int id = rs.lookup(root);
      if (id <= 0) throw StructuralError("adjacent pair is not a root");
      rels.push_back({j + 1, i + 1, J.test(id - 1)});
    }
  return place_boxes(Rat(0), idx_content, rels);
}

WeylElement tableau_word(const Filling& t) { return WeylElement(t); }

Book as_book(const BoxConfig& c) {
  Book b;
  b.family = Family::A;
  b.n = static_cast<int>(c.boxes.size());
  b.arranged = config_gamma(c);
  b.pages.push_back(c);
  return b;
}

std::vector<Filling> enumerate_config_fillings(const BoxConfig& c, int box_limit) {
  if (static_cast<int>(c.boxes.size()) > box_limit)
    throw CapExceeded("configuration has " + std::to_string(c.boxes.size()) +
                      " boxes (limit " + std::to_string(box_limit) + ")");
  return enumerate_fillings(as_book(c));
}

std::vector<Filling> classical_standard_tableaux(const std::vector<int>& lambda,
                                                 const std::vector<int>& mu) {
  PlacedSkew ps = skew_to_placed_shape(lambda, mu, 0);
  const auto& boxes = ps.config.boxes;
  int n = static_cast<int>(boxes.size());

  // Left and top neighbours inside the shape, by box position.
  std::map<std::pair<int, int>, int> at;
  for (int v = 0; v < n; ++v) at[{boxes[v].row, boxes[v].col}] = v;
  std::vector<std::vector<int>> preds(n);
  for (int v = 0; v < n; ++v) {
    auto it = at.find({boxes[v].row, boxes[v].col - 1});
    if (it != at.end()) preds[v].push_back(it->second);
    it = at.find({boxes[v].row - 1, boxes[v].col});
    if (it != at.end()) preds[v].push_back(it->second);
  }

  std::vector<Filling> out;
  Filling entry(n, 0);
  std::vector<char> filled(n, 0);
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      Filling byindex(n, 0);
      for (int v = 0; v < n; ++v) byindex[boxes[v].index - 1] = entry[v];
      out.push_back(std::move(byindex));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (filled[v]) continue;
      bool ok = true;
      for (int p : preds[v])
        if (!filled[p]) { ok = false; break; }
      if (!ok) continue;
      filled[v] = 1;
      entry[v] = next;
      rec(next + 1);
      filled[v] = 0;
    }
  };
  rec(1);
  return out;
}

namespace {

// A finite cell set is a translate of some lambda/mu exactly when every row
// is a contiguous interval [a_r, b_r], both endpoints weakly decrease down
// consecutive nonempty rows, and whenever empty rows separate two nonempty
// ones the lower interval ends strictly left of where the upper starts.
bool cells_are_skew(const std::map<int, std::pair<int, int>>& rows) {
  const std::pair<int, int>* prev = nullptr;
  int prev_row = 0;
  for (const auto& [r, ab] : rows) {
    if (prev) {
      if (r == prev_row + 1) {
        if (ab.first > prev->first || ab.second > prev->second) return false;
      } else {
        if (ab.second >= prev->first) return false;
      }
    }
    prev = &ab;
    prev_row = r;
  }
  return true;
}

struct SkewSearch {
  std::vector<long long> dint;        // ascending integer diagonals
  std::vector<std::vector<int>> idx;  // box indices per diagonal, NW..SE
  std::vector<int> start;
  const BoxConfig* cfg = nullptr;

  int msize(size_t j) const { return static_cast<int>(idx[j].size()); }

  bool leaf_check() const {
    std::map<int, std::pair<int, int>> rows;
    for (size_t j = 0; j < dint.size(); ++j)
      for (int k = 0; k < msize(j); ++k) {
        int r = start[j] + k;
        int col = r + static_cast<int>(dint[j]);
        auto it = rows.find(r);
        if (it == rows.end())
          rows[r] = {col, col};
        else if (col == it->second.second + 1)
          it->second.second = col;
        else
          return false;
      }
    return cells_are_skew(rows);
  }

  bool dfs(size_t j) {
    if (j == dint.size()) return leaf_check();
    std::vector<int> options;
    if (j == 0) {
      options.push_back(0);
    } else if (dint[j] == dint[j - 1] + 1) {
      // Inside a run of consecutive diagonals both row-interval endpoints
      // move northwest by 0 or 1, and the configuration's own relative data
      // bounds the shift as well.
      int lo = -1, hi = 0;
      int dm = msize(j - 1) - msize(j);
      lo = std::max(lo, dm - 1);
      hi = std::min(hi, dm);
      for (int k = 0; k < msize(j); ++k)
        for (int l = 0; l < msize(j - 1); ++l) {
          const Box& bj = cfg->boxes[idx[j][k]];
          const Box& bi = cfg->boxes[idx[j - 1][l]];
          if (northwest(bj, bi))
            hi = std::min(hi, l - k - 1);
          else
            lo = std::max(lo, l - k);
        }
      for (int d = lo; d <= hi; ++d) options.push_back(start[j - 1] + d);
    } else {
      // A content gap splits the shape into column-separated pieces; the new
      // (eastern) piece sits strictly north of everything placed so far.
      int top = start[0];
      for (size_t i = 0; i < j; ++i) top = std::min(top, start[i]);
      long long top_b = std::numeric_limits<long long>::min();
      for (size_t i = 0; i < j; ++i)
        if (start[i] == top) top_b = std::max(top_b, top + dint[i]);
      int m = msize(j);
      // last row of the new piece: adjacent to the old top, or higher with
      // the separation bound  b_top <= (s + m - 1) + d - 1.
      int hi_last = top - 1;
      int lo_last = static_cast<int>(top_b - dint[j] + 1);
      for (int last = lo_last; last <= hi_last; ++last)
        options.push_back(last - m + 1);
    }
    for (int s : options) {
      start[j] = s;
      if (dfs(j + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool detect_skew(const BoxConfig& c) {
  // Is some sliding of this configuration a placed lambda/mu shape?  Boxes on
  // one diagonal occupy consecutive rows in any such placement, so a
  // placement is a choice of starting row per diagonal, constrained by the
  // configuration's relative NW/SE data and the lambda/mu row structure.
  for (const auto& b : c.boxes)
    if (!is_integer(b.content))
      throw InvalidInput("skew detection expects integral contents");
  SkewSearch ss;
  ss.cfg = &c;
  std::map<Rat, std::vector<int>> by_diag;
  for (size_t v = 0; v < c.boxes.size(); ++v)
    by_diag[c.boxes[v].content].push_back(static_cast<int>(v));
  for (auto& [d, vs] : by_diag) {
    ss.dint.push_back(d.numerator());
    ss.idx.push_back(vs);  // already NW..SE (boxes sorted by content, row)
  }
  ss.start.assign(ss.dint.size(), 0);
  return ss.dfs(0);
}

bool is_border_strip(const BoxConfig& c) {
  std::map<Rat, int> per_diag;
  for (const auto& b : c.boxes)
    if (++per_diag[b.content] > 1) return false;
  return true;
}

BoxConfig transpose_configuration(const BoxConfig& c) {
  std::vector<Box> boxes;
  for (const auto& b : c.boxes) boxes.push_back(Box{0, -b.content, b.col, b.row});
  std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
    if (a.content != b.content) return a.content < b.content;
    return a.row < b.row;
  });
  for (size_t i = 0; i < boxes.size(); ++i) boxes[i].index = static_cast<int>(i) + 1;
  return make_config(c.page, std::move(boxes));
}

namespace {

// Minimal box of the sub-configuration formed by the unfilled boxes: nothing
// unfilled may be forced to carry a smaller entry (northwest in the same
// diagonal, northwest on the diagonal above, or with this box to its
// southeast from the diagonal below -- the sliding-invariant version of the
// no-box-above / no-box-left / no-box-northwest conditions), and of minimal
// content among the remaining candidates.
int minimal_box(const BoxConfig& c, const std::vector<char>& filled) {
  int best = -1;
  for (size_t v = 0; v < c.boxes.size(); ++v) {
    if (filled[v]) continue;
    const Box& b = c.boxes[v];
    bool ok = true;
    for (size_t u = 0; u < c.boxes.size() && ok; ++u) {
      if (filled[u] || u == v) continue;
      const Box& o = c.boxes[u];
      if (o.content == b.content && o.row < b.row) ok = false;
      if (o.content - b.content == Rat(1) && northwest(o, b)) ok = false;
      if (b.content - o.content == Rat(1) && southeast(b, o)) ok = false;
    }
    if (!ok) continue;
    if (best < 0 || b.content < c.boxes[best].content) best = static_cast<int>(v);
  }
  return best;
}

}  // namespace

std::pair<Filling, Filling> reading_fillings(const RootSystem& rs,
                                             const BoxConfig& c) {
  int n = static_cast<int>(c.boxes.size());
  Filling tmin(n, 0);
  std::vector<char> filled(n, 0);
  for (int next = 1; next <= n; ++next) {
    int v = minimal_box(c, filled);
    if (v < 0) throw StructuralError("no minimal box found");
    filled[v] = 1;
    tmin[c.boxes[v].index - 1] = next;
  }

  // t_max via conjugation: its conjugate is the column reading filling of the
  // conjugate shape, so w_max = w(t'_min) u.
  Weight gamma = config_gamma(c);
  PlacedShape shape = PlacedShape::make(
      RootSystem::build(rs.family(), rs.rank()), gamma, config_J(rs, c));
  ConjugateShape conj = conjugate_shape(shape);
  BoxConfig cc = shape_to_configuration(rs, conj.shape.gamma, conj.shape.J);
  std::vector<char> f2(n, 0);
  Filling tcmin(n, 0);
  for (int next = 1; next <= n; ++next) {
    int v = minimal_box(cc, f2);
    if (v < 0) throw StructuralError("no minimal box found");
    f2[v] = 1;
    tcmin[cc.boxes[v].index - 1] = next;
  }
  WeylElement wmax = tableau_word(tcmin) * conj.u;
  Filling tmax(n, 0);
  for (int i = 0; i < n; ++i) tmax[i] = wmax.one_line()[i];
  return {tmin, tmax};
}

Book build_book(const Weight& gamma, const RootSet& J) {
  int n = static_cast<int>(gamma.size());
  auto rs = RootSystem::build(Family::A, n - 1);

  // Stable rearrangement: pages by coset representative ascending, entries
  // ascending within a page.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    Rat fa = frac_part(gamma[a]), fb = frac_part(gamma[b]);
    if (fa != fb) return fa < fb;
    return gamma[a] < gamma[b];
  });
  Weight arranged(n);
  for (int i = 0; i < n; ++i) arranged[i] = gamma[order[i]];

  if (!J.subset_of(one_set_positive(*rs, arranged)))
    throw InvalidInput("J is not a subset of P of the rearranged weight");

  Book book;
  book.family = Family::A;
  book.n = n;
  book.arranged = arranged;

  std::map<Rat, std::vector<int>> pages;  // beta -> global indices (1-based)
  for (int i = 0; i < n; ++i) pages[frac_part(arranged[i])].push_back(i + 1);
  for (const auto& [beta, idxs] : pages) {
    std::vector<std::pair<int, Rat>> idx_content;
    for (int i : idxs) idx_content.emplace_back(i, arranged[i - 1] - beta);
    std::vector<PairRelation> rels;
    for (size_t a = 0; a < idxs.size(); ++a)
      for (size_t b = a + 1; b < idxs.size(); ++b) {
        int i = idxs[a], j = idxs[b];
        if (arranged[j - 1] - arranged[i - 1] != Rat(1)) continue;
        Coords root(n, 0);
        root[j - 1] = 1;
        root[i - 1] = -1;
        int id = rs->lookup(root);
        rels.push_back({j, i, id > 0 && J.test(id - 1)});
      }
    book.pages.push_back(place_boxes(beta, idx_content, rels));
  }
  return book;
}

WordBijectionReport word_bijection_check(const WeylGroup& W, const std::vector<int>& lambda,
                                  const std::vector<int>& mu, int offset) {
  WordBijectionReport rep;
  PlacedSkew ps = skew_to_placed_shape(lambda, mu, offset);
  auto classical = classical_standard_tableaux(lambda, mu);
  rep.classical_count = static_cast<long long>(classical.size());

  auto F = standard_tableaux(W, ps.gamma, ps.J);
  rep.tableau_count = static_cast<long long>(F.size());

  std::set<std::vector<int>> fset;
  for (const auto& w : F) fset.insert(w.one_line());
  std::set<std::vector<int>> words;
  for (const auto& t : classical) words.insert(tableau_word(t).one_line());
  rep.bijective = words.size() == classical.size() && words == fset;
  if (!rep.bijective) rep.witness = "word map is not a bijection onto F";
  return rep;
}

}  // namespace weyltab::boxes_a
