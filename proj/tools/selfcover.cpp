// selfcover: command-line front end.
//
// Exit codes: 0 certified, 1 bad input, 2 degenerate input, 3 certification
// failure.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "selfcover/errors.hpp"
#include "selfcover/io.hpp"
#include "selfcover/verification.hpp"

using namespace selfcover;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kInput = 1, kDegenerate = 2, kCertification = 3;

struct Options {
  std::string in, out, shape = "triangle", method = "inductive", format = "json", family = "triangle";
  std::string c = "3", resolution, coloring, threshold;
  int k = 1, m = 12;
  std::optional<std::uint64_t> seed;
  bool symbolic = false;
};

void print_report(const CertReport& rep) {
  std::cout << "covers_exactly=" << rep.covers_exactly << " contained=" << rep.contained_in_container
            << " avoids_interiors=" << rep.avoids_interiors << " bound_ok=" << rep.bound_ok
            << " deficit=" << to_string(rep.deficit) << "\n";
  for (const auto& v : rep.violations) std::cout << "violation: " << v.message << "\n";
}

int sampled_precheck(const Options& o, const ConvexPolygon& C, const std::vector<Point2>& P,
                     const std::vector<Homothet>& hs) {
  if (o.resolution.empty()) return kOk;
  const auto rep = check_cover_sampled(C, P, hs, parse_rational(o.resolution));
  std::cout << "sampled: " << (rep.violations.empty() ? "no counterexample" : "FAILED") << "\n";
  for (const auto& v : rep.violations) std::cout << "violation: " << v.message << "\n";
  return rep.violations.empty() ? kOk : kCertification;
}

// Bound function of the container, used for the m_k threshold.
BoundFunction bound_function(const ConvexPolygon& C) {
  if (C.size() == 3) return [](const Integer& t) { return Integer(2 * t + 1); };
  const AxisRect box{C.min_x(), C.min_y(), C.max_x(), C.max_y()};
  if (box.polygon() == C && box.width() == box.height()) return [](const Integer& t) { return Integer(2 * t + 2); };
  Integer per_point = 0;
  for (const auto& e : edge_constants(C)) per_point += Integer(static_cast<unsigned long>(e.n_points + 2));
  return [per_point](const Integer& t) { return Integer(t * per_point + 8); };
}

int cmd_cover(const Options& o) {
  InstanceFile inst = parse_instance(read_text_file(o.in));
  if (o.seed) {
    inst.points = perturb(inst.points, *o.seed, frac(1, 1 << 20));
    inst.metadata["perturbed_seed"] = std::to_string(*o.seed);
  }
  const ConvexPolygon& C = inst.shape;
  const bool delaunay = o.method == "delaunay";
  if (!delaunay && o.method != "inductive") throw ParseError("unknown method '" + o.method + "'");

  if (o.shape == "rect") {
    const AxisRect R{C.min_x(), C.min_y(), C.max_x(), C.max_y()};
    if (!(R.polygon() == C)) throw GeometryError("shape is not an axis-parallel rectangle");
    const RectCover rc = cover_rectangle_axis(R, inst.points);
    std::cout << "count=" << rc.strips.size() << " bound=" << rc.bound_claimed << "\n";
    std::vector<ConvexPolygon> pieces;
    for (const auto& s : rc.strips) pieces.push_back(s.polygon());
    if (!o.out.empty()) {
      if (o.format == "svg") {
        write_text_file(o.out, render_cover(C, pieces, rc.pts));
      } else {
        json j = json::parse(emit_instance(inst));
        json strips = json::array();
        for (const auto& s : rc.strips)
          strips.push_back({to_string(s.x0), to_string(s.y0), to_string(s.x1), to_string(s.y1)});
        write_text_file(o.out, json{{"instance", j}, {"strips", strips}, {"bound", rc.bound_claimed}}.dump(2) + "\n");
      }
    }
    if (!rc.report.ok()) print_report(rc.report);
    return rc.report.ok() ? kOk : kCertification;
  }

  CoverSolution sol = [&] {
    if (o.shape == "triangle") return delaunay ? cover_triangle_delaunay(C, inst.points) : cover_triangle(C, inst.points);
    if (o.shape == "square") return delaunay ? cover_square_delaunay(C, inst.points) : cover_square(C, inst.points);
    if (o.shape == "polygon") return cover_convex_polygon(C, inst.points);
    throw ParseError("unknown shape kind '" + o.shape + "'");
  }();
  std::cout << "count=" << sol.homothets.size() << " bound=" << sol.bound_claimed << "\n";
  if (!o.out.empty()) {
    if (o.format == "svg") {
      std::vector<ConvexPolygon> pieces;
      for (const auto& h : sol.homothets) pieces.push_back(h.realize());
      write_text_file(o.out, render_cover(C, pieces, inst.points));
    } else {
      write_text_file(o.out, emit_cover({inst, sol.homothets, sol.bound_claimed}));
    }
  }
  if (const int pre = sampled_precheck(o, C, sol.pts, sol.homothets); pre != kOk) return pre;
  if (!sol.report.ok()) print_report(sol.report);
  return sol.report.ok() ? kOk : kCertification;
}

int cmd_lowerbound(const Options& o) {
  LBInstance inst = [&] {
    if (o.family == "triangle") return lb_triangle(o.k);
    if (o.family == "square") return lb_square(o.k);
    if (o.family == "trapezoid") return lb_trapezoid(parse_rational(o.c), o.k).inst;
    throw ParseError("unknown family '" + o.family + "'");
  }();
  InstanceFile file{inst.container, inst.pts, inst.dummies,
                    {{"family", o.family}, {"k", std::to_string(o.k)}, {"bound", std::to_string(inst.bound)},
                     {"eps", to_string(inst.eps)}}};
  if (o.family == "trapezoid") file.metadata["c"] = to_string(parse_rational(o.c));
  if (!o.out.empty()) {
    write_text_file(o.out + ".json", emit_instance(file));
    write_text_file(o.out + ".svg", render_lower_bound(inst));
  }
  std::cout << "bound=" << inst.bound << " eps=" << to_string(inst.eps);
  if (inst.dummies.empty()) {
    std::cout << "\n";
    return kOk;
  }
  const auto rep = verify_dummy_separation(inst);
  std::cout << " pairs=" << rep.pairs_checked << " violations=" << rep.violations.size() << "\n";
  for (const auto& v : rep.violations)
    std::cout << "violation: dummies " << v.first << " and " << v.second << " share homothet scale="
              << to_string(v.homothet.scale()) << " offset=" << v.homothet.offset() << "\n";
  return rep.ok() ? kOk : kCertification;
}

Coloring coloring_from(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.contains("k") || !j.contains("assignment")) throw ParseError("coloring needs 'k' and 'assignment'");
  return {j["assignment"].get<std::vector<int>>(), j["k"].get<int>()};
}

int report_coloring(const ColoringReport& rep, const Integer& threshold) {
  std::cout << "threshold=" << threshold.get_str() << " ranges_checked=" << rep.ranges_checked
            << " violations=" << rep.violations.size() << "\n";
  for (const auto& v : rep.violations) {
    std::cout << "violation: range of " << v.range.size() << " points misses color";
    for (int c : v.missing) std::cout << " " << c;
    std::cout << "\n";
  }
  return rep.ok() ? kOk : kCertification;
}

int cmd_color(const Options& o) {
  const InstanceFile inst = parse_instance(read_text_file(o.in));
  const ConvexPolygon& C = inst.shape;
  const BoundFunction f = bound_function(C);
  const Oracle2 oracle = [&](const std::vector<Point2>& sub) { return oracle2_bruteforce(sub, C, o.m); };
  const Composition comp = compose_k_coloring(inst.points, o.k, oracle, f, o.m);
  const Integer threshold = mk_value(o.m, o.k, f);
  if (!o.out.empty()) {
    if (o.format == "svg") {
      write_text_file(o.out, render_coloring(C, inst.points, comp.coloring));
    } else {
      json audit = json::array();
      for (const auto& n : comp.audit)
        audit.push_back({{"k", n.k}, {"points", n.points}, {"threshold", n.threshold.get_str()}, {"parent", n.parent}});
      write_text_file(o.out, json{{"k", comp.coloring.k}, {"assignment", comp.coloring.assignment}, {"audit", audit}}
                                     .dump(2) + "\n");
    }
  }
  return report_coloring(verify_coloring(inst.points, C, comp.coloring, threshold), threshold);
}

int cmd_verify_coloring(const Options& o) {
  const InstanceFile inst = parse_instance(read_text_file(o.in));
  const Coloring col = coloring_from(read_text_file(o.coloring));
  const Integer threshold = o.threshold.empty() ? mk_value(o.m, col.k, bound_function(inst.shape))
                                                : Integer(o.threshold);
  return report_coloring(verify_coloring(inst.points, inst.shape, col, threshold), threshold);
}

int cmd_delaunay(const Options& o) {
  const InstanceFile inst = parse_instance(read_text_file(o.in));
  GDOptions opts;
  if (o.symbolic) opts.policy = DegeneracyPolicy::Symbolic;
  const GDTriangulation tri = gdt_build(inst.points, make_shape(inst.shape), opts);
  const ValidationReport rep = gdt_validate(tri, inst.shape);
  std::cout << "faces=" << tri.faces.size() << " valid=" << rep.ok() << "\n";
  for (const auto& f : rep.failures) std::cout << "failure: " << f << "\n";
  if (!o.out.empty()) {
    if (o.format == "svg") {
      write_text_file(o.out, render_triangulation(inst.shape, tri));
    } else {
      json faces = json::array(), witnesses = json::array();
      for (const auto& f : tri.faces) faces.push_back({f[0], f[1], f[2]});
      for (const auto& h : tri.witnesses)
        witnesses.push_back({{"scale", to_string(h.scale())},
                             {"offset", {to_string(h.offset().x), to_string(h.offset().y)}}});
      write_text_file(o.out, json{{"faces", faces}, {"witnesses", witnesses}}.dump(2) + "\n");
    }
  }
  return rep.ok() ? kOk : kCertification;
}

int cmd_verify(const Options& o) {
  const CoverFile cover = parse_cover(read_text_file(o.in));
  const auto& C = cover.instance.shape;
  const auto P = interior_points(C, cover.instance.points);
  if (const int pre = sampled_precheck(o, C, P, cover.homothets); pre != kOk) return pre;
  const CertReport rep = check_cover(C, P, cover.homothets, cover.bound);
  std::cout << "count=" << rep.count << " bound=" << cover.bound << " ";
  print_report(rep);
  return rep.ok() ? kOk : kCertification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-covers of convex polygons by homothets, with exact certification"};
  app.require_subcommand(1);
  Options o;

  auto* cover = app.add_subcommand("cover", "Cover a container without covering the instance points");
  cover->add_option("input", o.in, "Instance JSON")->required();
  cover->add_option("--shape", o.shape, "triangle, square, rect or polygon")
      ->check(CLI::IsMember({"triangle", "square", "rect", "polygon"}));
  cover->add_option("--method", o.method, "inductive or delaunay")->check(CLI::IsMember({"inductive", "delaunay"}));
  cover->add_option("--seed", o.seed, "Perturb the points with this seed first");
  cover->add_option("--resolution", o.resolution, "Run the sampled pre-check at this resolution");

  auto* lower = app.add_subcommand("lowerbound", "Write a lower-bound construction and certify its dummies");
  lower->add_option("--family", o.family, "triangle, square or trapezoid")
      ->check(CLI::IsMember({"triangle", "square", "trapezoid"}));
  lower->add_option("--k", o.k, "Number of points")->check(CLI::NonNegativeNumber);
  lower->add_option("--c", o.c, "Trapezoid ratio (rational, > 1)");
  lower->add_option("--out", o.out, "Output prefix: writes PREFIX.json and PREFIX.svg");

  auto* color = app.add_subcommand("color", "Compose a polychromatic k-coloring from the 2-coloring oracle");
  color->add_option("input", o.in, "Instance JSON")->required();
  color->add_option("--k", o.k, "Number of colors")->check(CLI::PositiveNumber);
  color->add_option("--m", o.m, "2-coloring threshold")->check(CLI::PositiveNumber);

  auto* vcol = app.add_subcommand("verify-coloring", "Check a coloring against every range");
  vcol->add_option("input", o.in, "Instance JSON")->required();
  vcol->add_option("--coloring", o.coloring, "Coloring JSON with k and assignment")->required();
  vcol->add_option("--threshold", o.threshold, "Range size threshold (default m_k)");
  vcol->add_option("--m", o.m, "2-coloring threshold used for the default");

  auto* del = app.add_subcommand("delaunay", "Generalized Delaunay triangulation");
  del->add_option("input", o.in, "Instance JSON")->required();
  del->add_flag("--symbolic", o.symbolic, "Resolve ties by symbolic perturbation");

  auto* verify = app.add_subcommand("verify", "Certify a cover file");
  verify->add_option("input", o.in, "Cover JSON")->required();
  verify->add_option("--resolution", o.resolution, "Run the sampled pre-check at this resolution");

  for (auto* sub : {cover, color, del}) {
    sub->add_option("--out", o.out, "Output file");
    sub->add_option("--format", o.format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*cover) return cmd_cover(o);
    if (*lower) return cmd_lowerbound(o);
    if (*color) return cmd_color(o);
    if (*vcol) return cmd_verify_coloring(o);
    if (*del) return cmd_delaunay(o);
    if (*verify) return cmd_verify(o);
  } catch (const DegeneracyError& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kDegenerate;
  } catch (const CertificationError& e) {
    std::cerr << "certification failed: " << e.what() << "\n";
    return kCertification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
