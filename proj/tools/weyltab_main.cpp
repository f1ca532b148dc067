#include "weyltab/boxes_a.hpp"
#include "weyltab/boxes_c.hpp"
#include "weyltab/json_io.hpp"
#include "weyltab/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace weyltab;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitCap = 3;
constexpr int kExitCounterexample = 4;

struct ShapeArgs {
  std::string type;
  int rank = 0;
  std::string gamma;      // comma-separated rationals, epsilon coordinates
  std::string j;          // semicolon-separated simple-root coordinate vectors
  std::string shape_file;

  void add_to(CLI::App* cmd, bool need_gamma) {
    cmd->add_option("-t,--type", type, "root system family (A, B, C, D)");
    cmd->add_option("-r,--rank", rank, "rank");
    if (need_gamma) {
      cmd->add_option("--gamma", gamma, "weight, e.g. 0,1");
      cmd->add_option("--j", j, "J in simple-root coordinates, e.g. 0,1;1,1");
      cmd->add_option("--shape-file", shape_file, "shape JSON file");
    }
  }

  PlacedShape parse() const {
    if (!shape_file.empty()) {
      std::ifstream in(shape_file);
      if (!in) throw InvalidInput("cannot open " + shape_file);
      Json j0 = Json::parse(in, nullptr, true);
      return shape_from_json(j0);
    }
    if (type.empty() || gamma.empty())
      throw InvalidInput("need --shape-file or --type/--rank/--gamma");
    auto rs = RootSystem::build(family_from_char(type[0]), rank);
    Weight g;
    for (const auto& part : split(gamma, ',')) g.push_back(rat_from_string(part));
    RootSet J;
    if (!j.empty())
      for (const auto& root : split(j, ';')) {
        std::vector<int> sc;
        for (const auto& x : split(root, ','))
          sc.push_back(static_cast<int>(std::stol(x)));
        J.set(root_from_simple_coords(*rs, sc));
      }
    return PlacedShape::make(rs, std::move(g), J);
  }

  static std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == sep) {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
  }
};

std::string root_name(const RootSystem& rs, int idx) {
  const auto& sc = rs.simple_coords(idx);
  std::string out = "[";
  for (size_t i = 0; i < sc.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sc[i]);
  }
  return out + "]";
}

std::string coords_str(const Coords& c) {
  std::string out = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + ")";
}

std::string rootset_str(const RootSystem& rs, const RootSet& s) {
  std::string out = "{";
  bool first = true;
  for (int p : s.indices()) {
    if (!first) out += ", ";
    out += root_name(rs, p);
    first = false;
  }
  return out + "}";
}

int cmd_roots(const ShapeArgs& args) {
  auto rs = RootSystem::build(family_from_char(args.type.at(0)), args.rank);
  std::cout << rs->name() << ": " << rs->num_positive()
            << " positive roots, |W| = " << rs->weyl_order() << "\n";
  std::cout << "simple roots:\n";
  for (int i = 0; i < rs->num_simple(); ++i)
    std::cout << "  a" << (i + 1) << " = " << coords_str(rs->simple(i)) << "\n";
  std::cout << "positive roots (simple-root coordinates):\n";
  for (int p = 0; p < rs->num_positive(); ++p)
    std::cout << "  " << coords_str(rs->positive(p)) << " = " << root_name(*rs, p)
              << "\n";
  return 0;
}

int cmd_shape(const ShapeArgs& args, const std::string& format) {
  PlacedShape shape = args.parse();
  const RootSystem& rs = *shape.rs;
  if (format == "json") {
    std::cout << shape_to_json(shape).dump(2) << "\n";
    return 0;
  }
  std::cout << "shape over " << rs.name() << ", gamma = "
            << weight_to_string(shape.gamma) << "\n";
  std::cout << "Z(gamma) = " << rootset_str(rs, shape.Z) << "\n";
  std::cout << "P(gamma) = " << rootset_str(rs, shape.P) << "\n";
  std::cout << "J        = " << rootset_str(rs, shape.J) << "\n";
  std::cout << "nonemptiness condition: "
            << (nonemptiness_condition(rs, shape.Z, shape.J) ? "holds" : "fails")
            << "\n";
  std::cout << "ribbon: " << (is_ribbon(rs, shape.gamma) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_tableaux(const ShapeArgs& args, const std::string& format, bool render,
                 long long cap, int boxes_limit) {
  PlacedShape shape = args.parse();
  WeylGroup W(shape.rs, cap);
  TableauSet ts = enumerate_standard_tableaux(W, shape);
  if (format == "json") {
    std::cout << tableau_set_to_json(ts).dump(2) << "\n";
    return 0;
  }
  std::cout << ts.elements.size() << " standard tableaux of shape (gamma="
            << weight_to_string(shape.gamma) << ", J="
            << rootset_str(*shape.rs, shape.J) << ")\n";
  for (const auto& w : ts.elements) std::cout << "  " << w.to_string() << "\n";
  if (render && !ts.elements.empty()) {
    const RootSystem& rs = *shape.rs;
    if (rs.ambient() > boxes_limit)
      throw CapExceeded("rendering limited to --boxes " + std::to_string(boxes_limit));
    if (rs.family() == Family::A && is_integral(rs, shape.gamma)) {
      BoxConfig c = boxes_a::shape_to_configuration(rs, shape.gamma, shape.J);
      std::cout << "\nconfiguration (contents):\n"
                << render_config(c, LabelMode::Content);
      for (const auto& w : ts.elements) {
        Filling t(w.one_line());
        std::cout << "\n" << render_config(c, LabelMode::Entry, &t);
      }
    } else if (rs.family() == Family::C) {
      auto norm = boxes_c::normalize_gamma_c(rs, shape.gamma);
      RootSet J2;
      for (int p : shape.J.indices()) {
        Coords img = norm.w.act(rs.positive(p));
        int id = rs.lookup(img);
        J2.set(std::abs(id) - 1);
      }
      Book book = boxes_c::build_book(rs, norm.arranged, J2);
      std::cout << "\nbook (contents):\n" << render_book(book, LabelMode::Content);
      auto F2 = standard_tableaux(W, norm.arranged, J2);
      for (const auto& w : F2) {
        Filling t(w.one_line());
        std::cout << "\n" << render_book(book, LabelMode::Entry, &t);
      }
    } else {
      std::cout << "\n(no box model for this type)\n";
    }
  }
  return 0;
}

int cmd_calib(const ShapeArgs& args, const std::string& format, long long cap) {
  PlacedShape shape = args.parse();
  auto g = build_calibration_graph(shape.rs, shape.gamma, cap);
  label_components(g);
  if (format == "dot") {
    std::cout << graph_to_dot(g);
    return 0;
  }
  if (format == "json") {
    std::cout << graph_to_json(g).dump(2) << "\n";
    return 0;
  }
  std::cout << "calibration graph of gamma = " << weight_to_string(g.gamma)
            << " in " << shape.rs->name() << "\n";
  std::cout << g.vertices.size() << " vertices, " << g.edges.size()
            << " edges, " << g.num_components() << " components\n";
  for (int c = 0; c < g.num_components(); ++c)
    std::cout << "  component " << c << ": size " << g.component_sizes[c]
              << ", J = " << rootset_str(*shape.rs, g.component_labels[c]) << "\n";
  return 0;
}

std::vector<Weight> grid_weights(const RootSystem& rs, const std::vector<Rat>& values) {
  std::vector<std::vector<Rat>> grid{{}};
  for (int i = 0; i < rs.num_simple(); ++i) {
    std::vector<std::vector<Rat>> next;
    for (const auto& g : grid)
      for (const auto& v : values) {
        auto h = g;
        h.push_back(v);
        next.push_back(h);
      }
    grid = std::move(next);
  }
  std::vector<Weight> out;
  for (const auto& cs : grid) out.push_back(weight_from_pairings(rs, cs));
  return out;
}

int cmd_conjecture(const std::string& which, const ShapeArgs& args,
                   const std::string& values_str, const std::string& format,
                   long long cap) {
  auto rs = RootSystem::build(family_from_char(args.type.at(0)), args.rank);
  std::vector<Rat> values{Rat(0), Rat(1), Rat(2)};
  if (!values_str.empty()) {
    values.clear();
    for (const auto& part : ShapeArgs::split(values_str, ','))
      values.push_back(rat_from_string(part));
  }
  WeylGroup W(rs, cap);
  long long shapes_checked = 0;
  Json counterexamples = Json::array();

  for (const Weight& gamma : grid_weights(*rs, values)) {
    RootSet Z = zero_set(*rs, gamma);
    auto buckets = tableau_buckets(W, gamma);
    if (which == "nonempty") {
      RootSet P = one_set_positive(*rs, gamma);
      auto pidx = P.indices();
      if (pidx.size() > 20) throw CapExceeded("P too large to sweep");
      for (long long mask = 0; mask < (1LL << pidx.size()); ++mask) {
        RootSet J;
        for (size_t i = 0; i < pidx.size(); ++i)
          if (mask & (1LL << i)) J.set(pidx[i]);
        ++shapes_checked;
        bool nonempty = buckets.count(J) > 0;
        bool cond = nonemptiness_condition(*rs, Z, J);
        if (nonempty != cond) {
          Json ce;
          ce["gamma"] = weight_to_string(gamma);
          ce["J"] = rootset_str(*rs, J);
          ce["nonempty"] = nonempty;
          ce["condition"] = cond;
          counterexamples.push_back(ce);
        }
      }
    } else if (which == "interval") {
      if (!is_integral(*rs, gamma)) continue;
      for (const auto& [J, members] : buckets) {
        ++shapes_checked;
        auto rep = interval_conjecture_check(W, PlacedShape::make(rs, gamma, J));
        if (!rep.ok()) {
          Json ce;
          ce["gamma"] = weight_to_string(gamma);
          ce["J"] = rootset_str(*rs, J);
          ce["witness"] = rep.witness;
          counterexamples.push_back(ce);
        }
      }
    } else {
      throw InvalidInput("unknown conjecture: " + which);
    }
  }

  if (format == "json") {
    Json out;
    out["conjecture"] = which;
    out["type"] = args.type;
    out["rank"] = args.rank;
    out["shapes_checked"] = shapes_checked;
    out["counterexamples"] = counterexamples;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "conjecture " << which << " on " << rs->name() << ": "
              << shapes_checked << " shapes checked, ";
    if (counterexamples.empty())
      std::cout << "no counterexample\n";
    else
      std::cout << counterexamples.size() << " counterexample(s):\n"
                << counterexamples.dump(2) << "\n";
  }
  return counterexamples.empty() ? 0 : kExitCounterexample;
}

int cmd_count(const std::string& which, const ShapeArgs& args, int n) {
  if (which == "shi-dominant") {
    long long brute = count_shi_dominant_intersections(n);
    long long formula = shi_dominant_formula(n);
    std::cout << "shi-dominant n=" << n << ": lattice count " << brute
              << ", binomial-Fibonacci formula " << formula
              << (brute == formula ? " (agree)" : " (DISAGREE)") << "\n";
    return 0;
  }
  if (which == "calib-classes") {
    if (args.type.empty() || family_from_char(args.type.at(0)) != Family::A)
      throw InvalidInput("calib-classes is implemented for type A");
    WeylGroup W(RootSystem::build(Family::A, n - 1));
    long long brute = count_calibration_classes(W);
    auto printed = calibration_class_series(n, false);
    auto reciprocal = calibration_class_series(n, true);
    std::cout << "calibration graph classes, ambient n=" << n << ": " << brute
              << "\n";
    std::cout << "  product (1-q^k)^(2^(k-1)) coefficient of q^" << n << ": "
              << printed[n - 1]
              << (printed[n - 1] == brute ? " (matches)" : " (differs)") << "\n";
    std::cout << "  reciprocal product coefficient of q^" << n << ": "
              << reciprocal[n - 1]
              << (reciprocal[n - 1] == brute ? " (matches)" : " (differs)")
              << "\n";
    return 0;
  }
  throw InvalidInput("unknown count: " + which);
}

int cmd_render(const ShapeArgs& args, const std::string& labels, int boxes_limit) {
  (void)boxes_limit;
  PlacedShape shape = args.parse();
  const RootSystem& rs = *shape.rs;
  if (rs.ambient() > boxes_limit)
    throw CapExceeded("rendering limited to --boxes " + std::to_string(boxes_limit));
  LabelMode mode = labels == "index" ? LabelMode::Index : LabelMode::Content;
  if (rs.family() == Family::A) {
    Book book = boxes_a::build_book(shape.gamma, shape.J);
    std::cout << render_book(book, mode);
  } else if (rs.family() == Family::C) {
    auto norm = boxes_c::normalize_gamma_c(rs, shape.gamma);
    RootSet J2;
    for (int p : shape.J.indices())
      J2.set(std::abs(rs.lookup(norm.w.act(rs.positive(p)))) - 1);
    Book book = boxes_c::build_book(rs, norm.arranged, J2);
    std::cout << render_book(book, mode);
  } else {
    throw InvalidInput("no box model for type " +
                       std::string(1, static_cast<char>(rs.family())));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of placed shapes, standard tableaux and "
               "calibration graphs for classical root systems"};
  app.require_subcommand(1);
  app.fallthrough();  // let global flags appear after the subcommand too

  long long cap = kDefaultGroupCap;
  app.add_option("--cap", cap, "Weyl group / orbit size cap");
  std::string format = "text";
  app.add_option("--format", format, "output format: text, json, dot");
  int boxes_limit = 24;
  app.add_option("--boxes", boxes_limit, "box-count limit for rendering");

  ShapeArgs roots_args;
  auto* roots = app.add_subcommand("roots", "list a root system");
  roots_args.add_to(roots, false);

  ShapeArgs shape_args;
  auto* shape = app.add_subcommand("shape", "inspect a placed shape");
  shape_args.add_to(shape, true);

  ShapeArgs tab_args;
  bool do_render = false;
  auto* tableaux = app.add_subcommand("tableaux", "enumerate standard tableaux");
  tab_args.add_to(tableaux, true);
  tableaux->add_flag("--render", do_render, "draw box diagrams");

  ShapeArgs calib_args;
  auto* calib = app.add_subcommand("calib", "calibration graph and components");
  calib_args.add_to(calib, true);

  ShapeArgs conj_args;
  std::string conj_name, conj_values;
  auto* conjecture = app.add_subcommand("conjecture", "run a conjecture harness");
  conjecture->add_option("name", conj_name, "nonempty or interval")->required();
  conj_args.add_to(conjecture, false);
  conjecture->add_option("--values", conj_values, "pairing grid values, e.g. 0,1/2,1");

  ShapeArgs count_args;
  std::string count_name;
  int count_n = 1;
  auto* count = app.add_subcommand("count", "intersection-lattice counts");
  count->add_option("name", count_name, "shi-dominant or calib-classes")->required();
  count_args.add_to(count, false);
  count->add_option("-n", count_n, "ambient dimension");

  ShapeArgs render_args;
  std::string labels = "content";
  auto* render = app.add_subcommand("render", "draw the box configuration");
  render_args.add_to(render, true);
  render->add_option("--labels", labels, "content or index");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*roots) return cmd_roots(roots_args);
    if (*shape) return cmd_shape(shape_args, format);
    if (*tableaux) return cmd_tableaux(tab_args, format, do_render, cap, boxes_limit);
    if (*calib) return cmd_calib(calib_args, format, cap);
    if (*conjecture) return cmd_conjecture(conj_name, conj_args, conj_values, format, cap);
    if (*count) return cmd_count(count_name, count_args, count_n);
    if (*render) return cmd_render(render_args, labels, boxes_limit);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
