// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// Each criterion pins golden values from the worked examples plus the
// exhaustive grid properties, at the tolerances fixed below (all checks are
// exact integer/rational comparisons; there are no numeric tolerances).

#include "weyltab/boxes_a.hpp"
#include "weyltab/boxes_c.hpp"
#include "weyltab/json_io.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace weyltab;

namespace {

struct Checker {
  int failures = 0;
  std::ostringstream log;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      log << "    FAILED: " << what << "\n";
    }
  }
};

std::vector<std::vector<Rat>> pairing_grid(int rank, const std::vector<Rat>& values) {
  std::vector<std::vector<Rat>> grid{{}};
  for (int i = 0; i < rank; ++i) {
    std::vector<std::vector<Rat>> next;
    for (const auto& g : grid)
      for (const auto& v : values) {
        auto h = g;
        h.push_back(v);
        next.push_back(h);
      }
    grid = std::move(next);
  }
  return grid;
}

RootSet simple_named(const RootSystem& rs, std::initializer_list<std::vector<int>> sc) {
  RootSet s;
  for (const auto& c : sc) s.set(root_from_simple_coords(rs, c));
  return s;
}

Coords diff_root(int n, int j, int i) {
  Coords r(n, 0);
  r[j - 1] = 1;
  r[i - 1] = -1;
  return r;
}

std::map<Family, std::map<int, std::shared_ptr<WeylGroup>>> group_cache;

const WeylGroup& group(Family f, int rank) {
  auto& slot = group_cache[f][rank];
  if (!slot) slot = std::make_shared<WeylGroup>(RootSystem::build(f, rank));
  return *slot;
}

// ---------------------------------------------------------------------- 1
void criterion1(Checker& c) {
  auto rs = RootSystem::build(Family::C, 2);
  Weight gamma{Rat(0), Rat(1)};
  c.check(zero_set(*rs, gamma) == simple_named(*rs, {{1, 0}}), "Z(gamma) = {a1}");
  c.check(one_set_positive(*rs, gamma) == simple_named(*rs, {{0, 1}, {1, 1}}),
          "P(gamma) = {a2, a1+a2}");
  auto g = build_calibration_graph(rs, gamma);
  label_components(g);
  c.check(g.vertices.size() == 4, "4 vertices");
  c.check(g.edges.size() == 1, "exactly 1 edge");
  std::multiset<int> sizes(g.component_sizes.begin(), g.component_sizes.end());
  c.check(sizes == std::multiset<int>{1, 1, 2}, "component sizes (1,2,1)");
  std::set<RootSet> labels(g.component_labels.begin(), g.component_labels.end());
  std::set<RootSet> expect{RootSet{}, simple_named(*rs, {{0, 1}}),
                           simple_named(*rs, {{0, 1}, {1, 1}})};
  c.check(labels == expect, "component labels");
}

// ---------------------------------------------------------------------- 2
void criterion2(Checker& c) {
  struct Spec {
    Family f;
    int rank;
    std::vector<Rat> values;
  };
  std::vector<Spec> specs = {
      {Family::A, 3, {Rat(0), Rat(1), Rat(2)}},
      {Family::B, 3, {Rat(0), Rat(1), Rat(2)}},
      {Family::C, 3, {Rat(0), Rat(1), Rat(2)}},
      {Family::C, 2, {Rat(0), Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)}},
  };
  for (const auto& spec : specs) {
    const WeylGroup& W = group(spec.f, spec.rank);
    for (const auto& cs : pairing_grid(spec.rank, spec.values)) {
      Weight gamma = weight_from_pairings(W.rs(), cs);
      auto g = build_calibration_graph(W.rs_ptr(), gamma);
      label_components(g);
      std::map<RootSet, std::set<std::vector<int>>> parts;
      for (size_t v = 0; v < g.vertices.size(); ++v)
        parts[g.component_labels[g.component[v]]].insert(g.reps[v].one_line());
      auto buckets = tableau_buckets(W, gamma);
      bool ok = parts.size() == buckets.size();
      for (const auto& [J, members] : buckets) {
        std::set<std::vector<int>> expect;
        for (int k : members) expect.insert(W.element(k).one_line());
        ok = ok && parts.count(J) && parts.at(J) == expect;
      }
      c.check(ok, "component partition = tableau partition at " +
                      W.rs().name() + " gamma=" + weight_to_string(gamma));
      if (!ok) return;
    }
  }
}

// ---------------------------------------------------------------------- 3
std::vector<std::pair<std::vector<int>, std::vector<int>>> skew_shapes_leq7() {
  std::vector<std::vector<int>> lambdas;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= a; ++b)
      for (int cc = 0; cc <= b; ++cc)
        for (int d = 0; d <= cc; ++d) {
          std::vector<int> l{a, b, cc, d};
          while (!l.empty() && l.back() == 0) l.pop_back();
          if (!l.empty()) lambdas.push_back(l);
        }
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& l : lambdas) {
    // all mu inside lambda
    std::vector<std::vector<int>> mus{{}};
    for (size_t r = 0; r < l.size(); ++r) {
      std::vector<std::vector<int>> next;
      for (const auto& m : mus) {
        int upper = r == 0 ? l[0] : std::min(l[r], m[r - 1]);
        for (int v = 0; v <= upper; ++v) {
          auto mm = m;
          mm.push_back(v);
          next.push_back(mm);
        }
      }
      mus = std::move(next);
    }
    int total = 0;
    for (int x : l) total += x;
    for (const auto& m : mus) {
      int inner = 0;
      for (int x : m) inner += x;
      int boxes = total - inner;
      if (boxes >= 1 && boxes <= 7) out.push_back({l, m});
    }
  }
  return out;
}

void criterion3(Checker& c) {
  auto shapes = skew_shapes_leq7();
  long long checked = 0;
  for (const auto& [l, m] : shapes) {
    int n = 0;
    for (size_t i = 0; i < l.size(); ++i)
      n += l[i] - (i < m.size() ? m[i] : 0);
    const WeylGroup& W = group(Family::A, n - 1);
    for (int off = -3; off <= 3; ++off) {
      auto rep = boxes_a::word_bijection_check(W, l, m, off);
      ++checked;
      if (!rep.ok()) {
        c.check(false, "classical/generalized word bijection failed at lambda/mu offset " +
                           std::to_string(off));
        return;
      }
    }
  }
  c.check(checked > 0, "swept the skew shapes");
  c.log << "    (" << checked << " shape/offset pairs)\n";

  // the 14-box golden word
  auto ps = boxes_a::skew_to_placed_shape({9, 7, 7, 4, 2, 1}, {5, 4, 4, 3, 0, 0}, -2);
  Weight expect_gamma;
  for (int x : {-7, -6, -5, -2, 0, 1, 1, 2, 2, 3, 3, 4, 5, 6})
    expect_gamma.push_back(Rat(x));
  c.check(ps.gamma == expect_gamma, "14-box gamma");
  Filling t{11, 6, 8, 2, 7, 1, 13, 5, 14, 3, 10, 4, 9, 12};
  WeylElement w = boxes_a::tableau_word(t);
  RootSet R = inversion_set(*ps.rs, w);
  c.check((R & zero_set(*ps.rs, ps.gamma)).empty() &&
              (R & one_set_positive(*ps.rs, ps.gamma)) == ps.J,
          "golden word (11,6,8,2,7,1,13,5,14,3,10,4,9,12) lies in F");
}

// ---------------------------------------------------------------------- 4
void criterion4(Checker& c) {
  struct Spec {
    Family f;
    int rank;
    std::vector<Rat> values;
  };
  std::vector<Spec> specs = {
      {Family::A, 3, {Rat(0), Rat(1), Rat(2)}},
      {Family::B, 3, {Rat(0), Rat(1), Rat(2)}},
      {Family::C, 3, {Rat(0), Rat(1), Rat(2)}},
      {Family::C, 2, {Rat(0), Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)}},
  };
  for (const auto& spec : specs) {
    const WeylGroup& W = group(spec.f, spec.rank);
    auto rs = W.rs_ptr();
    for (const auto& cs : pairing_grid(spec.rank, spec.values)) {
      Weight gamma = weight_from_pairings(*rs, cs);
      RootSet P = one_set_positive(*rs, gamma);
      auto pidx = P.indices();
      for (long long mask = 0; mask < (1LL << pidx.size()); ++mask) {
        RootSet J;
        for (size_t i = 0; i < pidx.size(); ++i)
          if (mask & (1LL << i)) J.set(pidx[i]);
        auto shape = PlacedShape::make(rs, gamma, J);
        auto conj = conjugate_shape(shape);
        auto back = conjugate_shape(conj.shape);
        if (!(back.shape.gamma == gamma && back.shape.J == J)) {
          c.check(false, "conjugation is not an involution at " + rs->name());
          return;
        }
        auto F = standard_tableaux(W, gamma, J);
        auto Fc = standard_tableaux(W, conj.shape.gamma, conj.shape.J);
        std::set<std::vector<int>> fcset;
        for (const auto& w : Fc) fcset.insert(w.one_line());
        bool ok = F.size() == Fc.size();
        std::set<std::vector<int>> image;
        for (const auto& w : F)
          image.insert(conjugate_tableau(w, shape).one_line());
        ok = ok && image == fcset;
        if (!ok) {
          c.check(false, "conjugation bijection failed at " + rs->name() +
                             " gamma=" + weight_to_string(gamma));
          return;
        }
      }
    }
  }
  // goldens of the 7-entry example
  auto a6 = RootSystem::build(Family::A, 6);
  Weight g{Rat(-1), Rat(-1), Rat(-1), Rat(0), Rat(0), Rat(1), Rat(1)};
  RootSet J;
  for (auto [j, i] : {std::pair{4, 2}, {4, 3}, {6, 5}, {7, 5}})
    J.set(a6->lookup(diff_root(7, j, i)) - 1);
  auto conj = conjugate_shape(PlacedShape::make(a6, g, J));
  c.check(conj.u.one_line() == std::vector<int>{5, 6, 7, 3, 4, 1, 2},
          "u = (5,6,7,3,4,1,2)");
  c.check(conj.shape.gamma ==
              Weight{Rat(-1), Rat(-1), Rat(0), Rat(0), Rat(1), Rat(1), Rat(1)},
          "-u gamma = (-1,-1,0,0,1,1,1)");
  RootSet Jp;
  for (auto [j, i] :
       {std::pair{5, 3}, {5, 4}, {6, 4}, {7, 4}, {3, 1}, {3, 2}})
    Jp.set(a6->lookup(diff_root(7, j, i)) - 1);
  c.check(conj.shape.J == Jp, "J' as displayed");
}

// ---------------------------------------------------------------------- 5
void criterion5(Checker& c) {
  long long shapes = 0;
  for (int n = 2; n <= 7; ++n) {
    const WeylGroup& W = group(Family::A, n - 1);
    auto rs = W.rs_ptr();
    for (const auto& cs : pairing_grid(n - 1, {Rat(0), Rat(1), Rat(2)})) {
      Weight gamma = weight_from_pairings(*rs, cs);
      for (const auto& [J, members] : tableau_buckets(W, gamma)) {
        ++shapes;
        auto shape = PlacedShape::make(rs, gamma, J);
        auto rep = interval_conjecture_check(W, shape);
        if (!rep.ok()) {
          c.check(false, "reading-tableaux identities failed at A" + std::to_string(n - 1) +
                             " gamma=" + weight_to_string(gamma) + ": " +
                             rep.witness);
          return;
        }
        // box side: reading fillings realize the minimum and maximum
        BoxConfig cfg = boxes_a::shape_to_configuration(*rs, gamma, J);
        auto [tmin, tmax] = boxes_a::reading_fillings(*rs, cfg);
        auto ts = enumerate_standard_tableaux(W, shape);
        auto rt = reading_tableaux(W, ts);
        bool ok = rt.minima.size() == 1 && rt.maxima.size() == 1 &&
                  rt.minima[0] == boxes_a::tableau_word(tmin) &&
                  rt.maxima[0] == boxes_a::tableau_word(tmax) &&
                  inversion_set(*rs, rt.minima[0]) == closure(*rs, J) &&
                  inversion_set(*rs, rt.maxima[0]) ==
                      closure(*rs, (shape.P - J) | shape.Z)
                          .complement(rs->num_positive());
        if (!ok) {
          c.check(false, "reading fillings mismatch at gamma=" +
                             weight_to_string(gamma));
          return;
        }
      }
    }
  }
  c.log << "    (" << shapes << " nonempty shapes)\n";

  auto a6 = RootSystem::build(Family::A, 6);
  Weight g{Rat(-1), Rat(-1), Rat(-1), Rat(0), Rat(0), Rat(1), Rat(1)};
  RootSet J;
  for (auto [j, i] : {std::pair{4, 2}, {4, 3}, {6, 5}, {7, 5}})
    J.set(a6->lookup(diff_root(7, j, i)) - 1);
  auto [tmin, tmax] =
      boxes_a::reading_fillings(*a6, boxes_a::shape_to_configuration(*a6, g, J));
  c.check(boxes_a::tableau_word(tmin).one_line() ==
              std::vector<int>{1, 3, 4, 2, 7, 5, 6},
          "w_min = (1,3,4,2,7,5,6)");
  c.check(boxes_a::tableau_word(tmax).one_line() ==
              std::vector<int>{1, 5, 6, 2, 7, 3, 4},
          "w_max = (1,5,6,2,7,3,4)");
}

// ---------------------------------------------------------------------- 6
void criterion6(Checker& c) {
  std::filesystem::create_directories("acceptance_reports");
  struct Spec {
    Family f;
    int rank;
    bool expect_clean;  // theorem-backed in type A
  };
  for (const auto& spec :
       {Spec{Family::A, 3, true}, Spec{Family::B, 3, false}, Spec{Family::C, 3, false}}) {
    const WeylGroup& W = group(spec.f, spec.rank);
    auto rs = W.rs_ptr();
    Json nonempty_ces = Json::array(), interval_ces = Json::array();
    long long nonempty_checked = 0, interval_checked = 0;
    for (const auto& cs : pairing_grid(spec.rank, {Rat(0), Rat(1), Rat(2)})) {
      Weight gamma = weight_from_pairings(*rs, cs);
      RootSet Z = zero_set(*rs, gamma);
      auto buckets = tableau_buckets(W, gamma);
      RootSet P = one_set_positive(*rs, gamma);
      auto pidx = P.indices();
      for (long long mask = 0; mask < (1LL << pidx.size()); ++mask) {
        RootSet J;
        for (size_t i = 0; i < pidx.size(); ++i)
          if (mask & (1LL << i)) J.set(pidx[i]);
        ++nonempty_checked;
        bool ne = buckets.count(J) > 0;
        bool cond = nonemptiness_condition(*rs, Z, J);
        if (ne != cond) {
          Json ce;
          ce["gamma"] = weight_to_string(gamma);
          ce["nonempty"] = ne;
          ce["condition"] = cond;
          nonempty_ces.push_back(ce);
        }
      }
      if (is_integral(*rs, gamma)) {
        for (const auto& [J, members] : buckets) {
          ++interval_checked;
          auto rep = interval_conjecture_check(W, PlacedShape::make(rs, gamma, J));
          if (!rep.ok()) {
            Json ce;
            ce["gamma"] = weight_to_string(gamma);
            ce["witness"] = rep.witness;
            interval_ces.push_back(ce);
          }
        }
      }
    }
    Json report;
    report["root_system"] = rs->name();
    report["nonempty"] = {{"checked", nonempty_checked}, {"counterexamples", nonempty_ces}};
    report["interval"] = {{"checked", interval_checked}, {"counterexamples", interval_ces}};
    std::ofstream out("acceptance_reports/conjectures_" + rs->name() + ".json");
    out << report.dump(2) << "\n";
    c.check(out.good(), "report written for " + rs->name());
    if (spec.expect_clean) {
      c.check(nonempty_ces.empty(), "nonemptiness clean on " + rs->name());
      c.check(interval_ces.empty(), "interval clean on " + rs->name());
    } else {
      c.log << "    " << rs->name() << ": nonempty " << nonempty_ces.size()
            << " ce, interval " << interval_ces.size() << " ce (recorded)\n";
    }
  }
}

// ---------------------------------------------------------------------- 7
void criterion7(Checker& c) {
  // grids
  for (int rank : {2, 3}) {
    const WeylGroup& W = group(Family::C, rank);
    auto rs = W.rs_ptr();
    std::vector<Rat> values{Rat(0), Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)};
    for (const auto& cs : pairing_grid(rank, values)) {
      Weight gamma = weight_from_pairings(*rs, cs);
      auto norm = boxes_c::normalize_gamma_c(*rs, gamma);
      RootSet P = one_set_positive(*rs, norm.arranged);
      auto pidx = P.indices();
      for (long long mask = 0; mask < (1LL << pidx.size()); ++mask) {
        RootSet J;
        for (size_t i = 0; i < pidx.size(); ++i)
          if (mask & (1LL << i)) J.set(pidx[i]);
        Book book;
        try {
          book = boxes_c::build_book(*rs, norm.arranged, J);
        } catch (const InvalidInput&) {
          if (!standard_tableaux(W, norm.arranged, J).empty()) {
            c.check(false, "book build failed but F nonempty at gamma=" +
                               weight_to_string(gamma));
            return;
          }
          continue;
        }
        auto rep = boxes_c::signed_word_bijection_check(W, book, J);
        if (!rep.ok()) {
          c.check(false, "signed word bijection failed at gamma=" +
                             weight_to_string(gamma) + ": " + rep.witness);
          return;
        }
      }
    }
  }

  // the 12-box generic page: configuration golden
  {
    auto rs = RootSystem::build(Family::C, 12);
    Rat beta(3, 4);
    Weight arranged;
    for (int z : {0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3}) arranged.push_back(beta + z);
    RootSet J;
    for (auto [j, i] : {std::pair{4, 1}, {4, 2}, {4, 3}, {5, 2}, {5, 3},
                        {7, 5}, {7, 6}, {8, 6}, {10, 9}, {10, 8}, {10, 7},
                        {11, 9}, {11, 8}, {11, 7}, {12, 9}})
      J.set(rs->lookup(diff_root(12, j, i)) - 1);
    Book book = boxes_c::build_book(*rs, arranged, J);
    std::vector<Box> golden;
    int data[12][3] = {{0, 4, 1}, {0, 5, 2}, {0, 6, 3}, {1, 3, 1},
                       {1, 4, 2}, {1, 6, 4}, {2, 3, 2}, {2, 5, 4},
                       {2, 6, 5}, {3, 1, 1}, {3, 2, 2}, {3, 5, 5}};
    for (int k = 0; k < 12; ++k)
      golden.push_back(Box{k + 1, Rat(data[k][0]), data[k][1], data[k][2]});
    c.check(config_equivalent(book.pages[0], make_config(beta, golden)),
            "12-box configuration reproduced");

    // The reference filling for this page is inconsistent with its companion
    // J: its word meets P in J minus {e7-e5, e12-e9} (entries -8 vs -2 and
    // 4 vs 6 break the northwest rule of the same construction).  The check
    // below runs the criterion as stated and is expected to stay red; the
    // corrected-J validation that follows passes.
    Filling t{-9, -7, -5, -12, -8, 3, -2, 1, 4, -11, -10, 6};
    c.check(is_standard_filling(book, t),
            "reference 12-box filling standard as printed (defective reference "
            "data: violates its own J at two pairs; see notes)");
    RootSet J2 = J;
    J2.reset(rs->lookup(diff_root(12, 7, 5)) - 1);
    J2.reset(rs->lookup(diff_root(12, 12, 9)) - 1);
    Book book2 = boxes_c::build_book(*rs, arranged, J2);
    c.check(is_standard_filling(book2, t) && filling_in_enumeration(book2, t),
            "12-box filling standard and enumerated for the corrected J");
  }

  // page 1/2 golden filling
  {
    auto rs = RootSystem::build(Family::C, 11);
    Weight arranged;
    for (const char* s : {"1/2", "1/2", "1/2", "1/2", "3/2", "3/2", "3/2",
                          "3/2", "5/2", "5/2", "7/2"})
      arranged.push_back(rat_from_string(s));
    RootSet J;
    auto sum_root = [&](int j, int i) {
      Coords r(11, 0);
      r[j - 1] += 1;
      r[i - 1] += 1;
      return r;
    };
    for (auto [j, i] : {std::pair{11, 10}, {10, 8}, {9, 7}, {9, 8}, {7, 3},
                        {7, 4}, {6, 2}, {6, 3}, {6, 4}, {5, 4}, {5, 3}, {5, 2}})
      J.set(rs->lookup(diff_root(11, j, i)) - 1);
    for (auto [j, i] : {std::pair{1, 2}, {1, 3}, {1, 4}, {1, 1}})
      J.set(rs->lookup(sum_root(j, i)) - 1);
    Book book = boxes_c::build_book(*rs, arranged, J);
    c.check(book.pages.size() == 1 && book.pages[0].boxes.size() == 22,
            "22-box symmetric configuration");
    Filling t{-11, 1, 4, 6, -10, -9, 2, 7, -8, 5, 3};
    c.check(is_standard_filling(book, t) && filling_in_enumeration(book, t),
            "page-1/2 filling standard and enumerated");
  }

  // page 0 golden filling
  {
    auto rs = RootSystem::build(Family::C, 7);
    Weight arranged;
    for (int x : {0, 0, 0, 1, 1, 1, 2}) arranged.push_back(Rat(x));
    RootSet J;
    auto sum_root = [&](int j, int i) {
      Coords r(7, 0);
      r[j - 1] += 1;
      r[i - 1] += 1;
      return r;
    };
    for (auto [j, i] : {std::pair{4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2},
                        {5, 3}, {6, 1}, {6, 2}, {6, 3}, {7, 6}})
      J.set(rs->lookup(diff_root(7, j, i)) - 1);
    for (auto [j, i] : {std::pair{6, 1}, {5, 1}, {5, 2}, {4, 1}, {4, 2}})
      J.set(rs->lookup(sum_root(j, i)) - 1);
    Book book = boxes_c::build_book(*rs, arranged, J);
    c.check(book.pages.size() == 1 && book.pages[0].boxes.size() == 11,
            "11-box page-0 configuration");
    Filling t{1, 3, 7, -6, -5, -2, -4};
    c.check(is_standard_filling(book, t) && filling_in_enumeration(book, t),
            "page-0 filling standard and enumerated");
  }
}

// ---------------------------------------------------------------------- 8
void criterion8(Checker& c) {
  long long expect[4] = {0, 1, 3, 10};
  for (int n = 1; n <= 3; ++n) {
    long long brute = count_shi_dominant_intersections(n);
    c.check(brute == expect[n],
            "shi-dominant brute n=" + std::to_string(n) + " equals " +
                std::to_string(expect[n]));
    c.check(brute == shi_dominant_formula(n),
            "shi-dominant formula agrees at n=" + std::to_string(n));
  }

  std::map<int, long long> brute;
  for (int n = 2; n <= 4; ++n)
    brute[n] = count_calibration_classes(group(Family::A, n - 1));
  auto printed = calibration_class_series(4, false);
  auto reciprocal = calibration_class_series(4, true);
  bool printed_all = true, reciprocal_all = true;
  for (int n = 2; n <= 4; ++n) {
    printed_all = printed_all && printed[n - 1] == brute[n];
    reciprocal_all = reciprocal_all && reciprocal[n - 1] == brute[n];
  }
  c.check(printed_all || reciprocal_all,
          "calibration classes match a series convention");
  c.log << "    calib classes n=2,3,4: " << brute[2] << "," << brute[3] << ","
        << brute[4] << "; printed-product match: " << (printed_all ? "yes" : "no")
        << ", reciprocal match: " << (reciprocal_all ? "yes" : "no") << "\n";
}

// ---------------------------------------------------------------------- 9
void criterion9(Checker& c) {
  auto shapes = skew_shapes_leq7();
  long long fillings_checked = 0;
  for (const auto& [l, m] : shapes) {
    auto ps = boxes_a::skew_to_placed_shape(l, m, 0);
    int n = static_cast<int>(ps.gamma.size());
    const WeylGroup& W = group(Family::A, n - 1);

    Book book;
    book.family = Family::A;
    book.n = n;
    book.arranged = ps.gamma;
    book.pages.push_back(ps.config);
    auto fillings = enumerate_fillings(book);

    auto F = standard_tableaux(W, ps.gamma, ps.J);
    std::set<std::vector<int>> fset, words;
    for (const auto& w : F) fset.insert(w.one_line());
    for (const auto& t : fillings) words.insert(boxes_a::tableau_word(t).one_line());
    if (!(words.size() == fillings.size() && words == fset)) {
      c.check(false, "fillings <-> F mismatch");
      return;
    }

    // axial distance = content difference, for every filling and pair
    for (const auto& t : fillings) {
      ++fillings_checked;
      WeylElement w = boxes_a::tableau_word(t);
      Weight wg = w.act(ps.gamma);
      std::vector<int> box_of(n + 1);
      for (int i = 1; i <= n; ++i) box_of[t[i - 1]] = i;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          Rat d = wg[j - 1] - wg[i - 1];  // <w gamma, e_j - e_i>
          if (d != ps.gamma[box_of[j] - 1] - ps.gamma[box_of[i] - 1]) {
            c.check(false, "axial distance identity failed");
            return;
          }
        }
    }
  }
  c.check(fillings_checked > 0, "swept fillings");
  c.log << "    (" << fillings_checked << " fillings)\n";
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    std::function<void(Checker&)> run;
  };
  std::vector<Entry> entries = {
      {1, "C2 worked example: Z, P, graph, components", criterion1},
      {2, "graph components equal tableau sets on the grids", criterion2},
      {3, "classical tableaux <-> generalized tableaux (<= 7 boxes)", criterion3},
      {4, "conjugation involution and bijection, with goldens", criterion4},
      {5, "reading tableaux: closure identities and intervals", criterion5},
      {6, "conjecture harnesses (A clean; B3/C3 reports emitted)", criterion6},
      {7, "signed books: bijection, goldens, reference fillings", criterion7},
      {8, "intersection-lattice counts vs closed forms", criterion8},
      {9, "cross-module fillings and axial distances", criterion9},
  };
  int failures = 0;
  for (auto& e : entries) {
    Checker c;
    auto start = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.check(false, std::string("exception: ") + ex.what());
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (c.failures ? "[FAIL]" : "[PASS]") << " " << e.id << ". " << e.name
         << " (" << secs << "s)";
    std::cout << line.str() << "\n" << c.log.str();
    failures += c.failures;
  }
  if (failures) std::cout << failures << " check(s) failed\n";
  return failures ? 1 : 0;
}
