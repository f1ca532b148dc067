#include "weyltab/boxes_c.hpp"

#include "weyltab/boxes_a.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace weyltab::boxes_c {

NormalizedGamma normalize_gamma_c(const RootSystem& rs, const Weight& gamma) {
  if (rs.family() != Family::C) throw InvalidInput("type C rearrangement needs a C root system");
  int n = static_cast<int>(gamma.size());
  if (n != rs.ambient()) throw InvalidInput("gamma has wrong dimension");

  // Step 1: make entries nonnegative and ascending.  Step 2: negate entries
  // with fractional part in (0,1/2).  Step 3: group by Z-coset, pages
  // ascending by coset representative, entries ascending within a page.
  std::vector<Rat> vals;
  for (const auto& g : gamma) vals.push_back(g < Rat(0) ? -g : g);
  for (auto& v : vals) {
    Rat f = frac_part(v);
    if (f > Rat(0) && f < Rat(1, 2)) v = -v;
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    Rat fa = frac_part(vals[a]), fb = frac_part(vals[b]);
    if (fa != fb) return fa < fb;
    return vals[a] < vals[b];
  });

  NormalizedGamma out;
  out.arranged.resize(n);
  for (int i = 0; i < n; ++i) out.arranged[i] = vals[order[i]];

  // Witnessing signed permutation: arranged = w . gamma, i.e. entry j of the
  // result is +-gamma_i with w(i) = +-j.
  std::vector<int> img(n, 0);
  std::vector<char> used(n, 0);
  for (int j = 0; j < n; ++j) {
    int src = -1, sign = 0;
    for (int i = 0; i < n && src < 0; ++i) {
      if (used[i]) continue;
      if (gamma[i] == out.arranged[j]) { src = i; sign = 1; }
    }
    for (int i = 0; i < n && src < 0; ++i) {
      if (used[i]) continue;
      if (-gamma[i] == out.arranged[j]) { src = i; sign = -1; }
    }
    if (src < 0) throw StructuralError("rearrangement lost an entry");
    used[src] = 1;
    img[src] = sign * (j + 1);
  }
  out.w = WeylElement(img);
  if (out.w.act(gamma) != out.arranged)
    throw StructuralError("rearrangement witness is wrong");

  std::map<Rat, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[frac_part(out.arranged[i])].push_back(i + 1);
  for (const auto& [beta, idxs] : groups) {
    if (beta > Rat(0) && beta < Rat(1, 2))
      throw StructuralError("coset in (0,1/2) survived normalization");
    out.groups.push_back({beta, idxs});
  }
  return out;
}

namespace {

Coords diff_root(int n, int j, int i) {  // e_j - e_i, 1-based
  Coords r(n, 0);
  r[j - 1] += 1;
  r[i - 1] -= 1;
  return r;
}

Coords sum_root(int n, int j, int i) {  // e_j + e_i (2e_i when i = j)
  Coords r(n, 0);
  r[j - 1] += 1;
  r[i - 1] += 1;
  return r;
}

bool in_set(const RootSystem& rs, const RootSet& J, const Coords& root) {
  int id = rs.lookup(root);
  return id > 0 && J.test(id - 1);
}

}  // namespace

Book build_book(const RootSystem& rs, const Weight& arranged, const RootSet& J) {
  int n = static_cast<int>(arranged.size());
  if (rs.family() != Family::C || rs.ambient() != n)
    throw InvalidInput("book construction needs C_n with matching gamma");
  if (!J.subset_of(one_set_positive(rs, arranged)))
    throw InvalidInput("J is not a subset of P of the arranged weight");

  Book book;
  book.family = Family::C;
  book.n = n;
  book.arranged = arranged;

  std::map<Rat, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[frac_part(arranged[i])].push_back(i + 1);

  for (const auto& [beta, idxs] : groups) {
    std::vector<std::pair<int, Rat>> idx_content;
    std::vector<boxes_a::PairRelation> rels;

    if (beta != Rat(0) && beta != Rat(1, 2)) {
      // Page beta: box_i on diagonal gamma_i - beta.
      for (int i : idxs) idx_content.emplace_back(i, arranged[i - 1] - beta);
      for (size_t a = 0; a < idxs.size(); ++a)
        for (size_t b = a + 1; b < idxs.size(); ++b) {
          int i = idxs[a], j = idxs[b];
          if (arranged[j - 1] - arranged[i - 1] != Rat(1)) continue;
          rels.push_back({j, i, in_set(rs, J, diff_root(n, j, i))});
        }
    } else if (beta == Rat(1, 2)) {
      // Page 1/2: box_i on diagonal gamma_i, box_{-i} on -gamma_i.
      for (int i : idxs) {
        idx_content.emplace_back(i, arranged[i - 1]);
        idx_content.emplace_back(-i, -arranged[i - 1]);
      }
      for (size_t a = 0; a < idxs.size(); ++a)
        for (size_t b = a; b < idxs.size(); ++b) {
          int i = idxs[a], j = idxs[b];
          if (j > i && arranged[j - 1] - arranged[i - 1] == Rat(1)) {
            bool nw = in_set(rs, J, diff_root(n, j, i));
            rels.push_back({j, i, nw});
            rels.push_back({-i, -j, nw});
          }
          if (arranged[i - 1] == Rat(1, 2) && arranged[j - 1] == Rat(1, 2)) {
            // e_j + e_i (2e_i when i = j): box_j vs box_{-i}, box_i vs box_{-j}
            bool nw = in_set(rs, J, sum_root(n, j, i));
            rels.push_back({j, -i, nw});
            if (j != i) rels.push_back({i, -j, nw});
          }
        }
    } else {
      // Page 0: zero entries unpaired on diagonal 0, others mirrored.
      for (int i : idxs) {
        idx_content.emplace_back(i, arranged[i - 1]);
        if (arranged[i - 1] != Rat(0)) idx_content.emplace_back(-i, -arranged[i - 1]);
      }
      for (size_t a = 0; a < idxs.size(); ++a)
        for (size_t b = a + 1; b < idxs.size(); ++b) {
          int i = idxs[a], j = idxs[b];
          if (arranged[j - 1] - arranged[i - 1] == Rat(1)) {
            bool nw = in_set(rs, J, diff_root(n, j, i));
            rels.push_back({j, i, nw});
            if (arranged[i - 1] != Rat(0)) rels.push_back({-i, -j, nw});
          }
          if (arranged[j - 1] == Rat(1) && arranged[i - 1] == Rat(0)) {
            // e_j + e_i: box_i (diagonal 0) vs box_{-j} (diagonal -1)
            rels.push_back({i, -j, in_set(rs, J, sum_root(n, j, i))});
          }
        }
    }
    std::sort(idx_content.begin(), idx_content.end(),
              [](const auto& a, const auto& b) {
                if (a.second != b.second) return a.second < b.second;
                return a.first < b.first;
              });
    book.pages.push_back(boxes_a::place_boxes(beta, idx_content, rels));
  }
  return book;
}

BoxConfig build_page_generic(
    const Rat& beta, const std::vector<Rat>& contents,
    const std::vector<std::pair<std::pair<int, int>, bool>>& diff_in_j) {
  std::vector<std::pair<int, Rat>> idx_content;
  for (size_t i = 0; i < contents.size(); ++i)
    idx_content.emplace_back(static_cast<int>(i) + 1, contents[i]);
  std::vector<boxes_a::PairRelation> rels;
  for (const auto& [pair, nw] : diff_in_j) rels.push_back({pair.first, pair.second, nw});
  return boxes_a::place_boxes(beta, idx_content, rels);
}

std::vector<Filling> enumerate_signed_fillings(const Book& book, int limit) {
  if (book.n > limit)
    throw CapExceeded("book has " + std::to_string(book.n) + " entries (limit " +
                      std::to_string(limit) + ")");
  return enumerate_fillings(book);
}

WeylElement signed_word(const Filling& t) { return WeylElement(t); }

SignedBijectionReport signed_word_bijection_check(const WeylGroup& W, const Book& book,
                                  const RootSet& J) {
  SignedBijectionReport rep;
  auto fillings = enumerate_fillings(book);
  rep.filling_count = static_cast<long long>(fillings.size());

  auto F = standard_tableaux(W, book.arranged, J);
  rep.tableau_count = static_cast<long long>(F.size());

  std::set<std::vector<int>> fset;
  for (const auto& w : F) fset.insert(w.one_line());
  std::set<std::vector<int>> words;
  for (const auto& t : fillings) words.insert(signed_word(t).one_line());
  rep.bijective = words.size() == fillings.size() && words == fset;
  if (!rep.bijective) {
    for (const auto& t : fillings)
      if (!fset.count(signed_word(t).one_line())) {
        rep.witness = "filling word " + signed_word(t).to_string() + " is not in F";
        break;
      }
    if (rep.witness.empty()) rep.witness = "F has elements missed by the fillings";
  }
  return rep;
}

}  // namespace weyltab::boxes_c
