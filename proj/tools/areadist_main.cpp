#include <chrono>
#include <cmath>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "areadist/charts.hpp"
#include "areadist/chord_oracle.hpp"
#include "areadist/curves.hpp"
#include "areadist/inner_grid.hpp"
#include "areadist/io.hpp"
#include "areadist/outer_grid.hpp"

namespace {

using namespace areadist;

constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitLevels = 3;
constexpr int kExitVerify = 4;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::TooFewVertices:
    case ErrorCode::ZeroLengthSide:
    case ErrorCode::NonConvex:
      return kExitValidation;
    case ErrorCode::LevelOutOfRange:
    case ErrorCode::WindowTurningExceeded:
    case ErrorCode::LevelsOutOfRange:
      return kExitLevels;
    case ErrorCode::PlanarityAuditFailed:
      return kExitVerify;
    default:
      return kExitParse;
  }
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("range must look like '<a>:<b>', got '" + text + "'");
  try {
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ParseError("range must look like '<a>:<b>', got '" + text + "'");
  }
}

struct Options {
  std::string input;
  std::string out;
  std::string format = "csv";
  std::string curve;
  std::string range;
  long levels = -1;
  int samples = 0;
  double tol = 1e-9;
  bool tol_given = false;
  bool closed = false;
};

int run_inner(const Options& opt) {
  const ConvexPolyline poly = load_polyline(opt.input);
  const std::size_t levels =
      opt.levels < 0 ? max_buildable_level(poly) : static_cast<std::size_t>(opt.levels);

  const auto t0 = std::chrono::steady_clock::now();
  const InnerGrid grid = build_inner_grid(poly, levels);
  const auto t1 = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  if (opt.format == "obj")
    write_inner_obj(opt.out, grid);
  else
    write_inner_csv(opt.out, grid);

  std::cout << "inner grid: N=" << poly.size() << (poly.closed() ? " (closed)" : " (open)")
            << " levels=" << levels << " max f=" << grid.max_f() << " build " << ms << " ms\n"
            << "wrote " << opt.out << "\n";
  return 0;
}

int run_outer(const Options& opt) {
  const ConvexPolyline poly = load_polyline(opt.input);
  const std::size_t levels = opt.levels < 0
                                 ? std::max<std::size_t>(1, (poly.size() - 1) / 2)
                                 : static_cast<std::size_t>(opt.levels);
  const OuterGrid grid = propagate_outer(poly, levels);

  const double integ = integrability_residual(grid);
  const SphereCheckReport sphere = verify_definite_sphere(grid, opt.tol);
  const double conormal = conormal_identity_residual(grid);
  std::cout << "outer grid: N=" << poly.size() << (poly.closed() ? " (closed)" : " (open)")
            << " levels=" << levels << "\n"
            << "integrability residual      " << integ << "\n"
            << "quad planarity residual     " << sphere.max_coplanarity_residual << "\n"
            << "laplacian(X,Y) residual     " << sphere.max_cross_difference_xy_residual << "\n"
            << "laplacian(F)-area residual  " << sphere.max_cross_difference_z_error << "\n"
            << "conormal identity residual  " << conormal << "\n";

  if (opt.format == "obj") {
    write_outer_obj(opt.out, grid, opt.tol);
    std::cout << "planarity audit pass (tol " << opt.tol << ")\n";
  } else {
    write_outer_csv(opt.out, grid);
  }
  std::cout << "wrote " << opt.out << "\n";
  return 0;
}

int run_verify(const std::string& which, const Options& opt) {
  VerificationReport rep;
  if (which == "smooth") {
    if (opt.curve.empty()) throw ParseError("verify smooth needs --curve");
    const double tol = opt.tol_given ? opt.tol : 1e-4;
    rep = verify_smooth(parse_curve(opt.curve), tol);
  } else if (which == "inner") {
    if (opt.input.empty()) throw ParseError("verify inner needs --input");
    const ConvexPolyline poly = load_polyline(opt.input);
    const std::size_t levels =
        opt.levels < 0 ? max_buildable_level(poly) : static_cast<std::size_t>(opt.levels);
    const InnerGrid grid = build_inner_grid(poly, levels);
    const SphereCheckReport sphere = verify_indefinite_sphere(grid, opt.tol);
    rep.add("cross coplanarity", sphere.max_coplanarity_residual, opt.tol);
    rep.add("cross-difference xy", sphere.max_cross_difference_xy_residual, opt.tol);
    rep.add("cross-difference z vs -a_ij", sphere.max_cross_difference_z_error, opt.tol);
    if (poly.size() <= 64) {
      double worst = 0.0;
      for (std::size_t k = 0; k <= grid.max_level(); ++k) {
        const std::size_t count = poly.closed() ? poly.size() : grid.level_size(k);
        for (std::size_t i = 0; i < count; ++i)
          worst = std::max(worst, std::abs(grid.f(i, i + k) - inner_f_direct(poly, i, i + k)));
      }
      rep.add("recurrence vs direct sum", worst / std::max(grid.max_f(), 1e-300), opt.tol);
    }
  } else if (which == "outer") {
    if (opt.input.empty()) throw ParseError("verify outer needs --input");
    const ConvexPolyline poly = load_polyline(opt.input);
    const std::size_t levels = opt.levels < 0
                                   ? std::max<std::size_t>(1, (poly.size() - 1) / 2)
                                   : static_cast<std::size_t>(opt.levels);
    const OuterGrid grid = propagate_outer(poly, levels);
    const SphereCheckReport sphere = verify_definite_sphere(grid, opt.tol);
    rep.add("integrability", integrability_residual(grid), opt.tol);
    rep.add("quad planarity", sphere.max_coplanarity_residual, opt.tol);
    rep.add("laplacian(X,Y)", sphere.max_cross_difference_xy_residual, opt.tol);
    rep.add("laplacian(F) vs area", sphere.max_cross_difference_z_error, opt.tol);
    rep.add("conormal cross-product identity", conormal_identity_residual(grid), opt.tol);
  } else {
    throw ParseError("verify target must be inner, outer or smooth");
  }
  rep.print(std::cout);
  return rep.all_pass() ? 0 : kExitVerify;
}

int run_sample_curve(const Options& opt) {
  if (opt.samples < 3) throw ParseError("--samples must be >= 3");
  const AnalyticCurve curve = parse_curve(opt.curve);

  PolygonFile pf;
  if (curve.kind() == CurveKind::Circle && opt.range.empty()) {
    pf.closed = true;
    for (int k = 0; k < opt.samples; ++k)
      pf.vertices.push_back(curve.point(2.0 * M_PI * k / opt.samples));
  } else {
    const auto [a, b] = opt.range.empty() ? std::pair<double, double>{-1.0, 1.0}
                                          : parse_range(opt.range);
    pf.closed = opt.closed;
    for (int k = 0; k < opt.samples; ++k)
      pf.vertices.push_back(curve.point(a + (b - a) * k / (opt.samples - 1)));
  }
  write_polygon_file(opt.out, pf);
  std::cout << "wrote " << pf.vertices.size() << (pf.closed ? " closed" : " open")
            << " samples of " << curve.name() << " to " << opt.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"area distances of convex plane curves and their discrete affine spheres"};
  app.require_subcommand(1);

  Options opt;
  std::string verify_which;

  auto add_common = [&](CLI::App* cmd, bool needs_input, bool needs_out) {
    if (needs_input) cmd->add_option("--input", opt.input, "polygon JSON file")->required();
    if (needs_out) cmd->add_option("--out", opt.out, "output path")->required();
    cmd->add_option("--levels", opt.levels, "grid levels (default: maximum)");
    cmd->add_option("--tol", opt.tol, "residual tolerance")->each([&](const std::string&) {
      opt.tol_given = true;
    });
  };

  CLI::App* inner = app.add_subcommand("inner", "build the inner area-distance grid");
  add_common(inner, true, true);
  inner->add_option("--format", opt.format, "csv|obj")->check(CLI::IsMember({"csv", "obj"}));

  CLI::App* outer = app.add_subcommand("outer", "build the outer area-distance grid");
  add_common(outer, true, true);
  outer->add_option("--format", opt.format, "csv|obj")->check(CLI::IsMember({"csv", "obj"}));

  CLI::App* verify = app.add_subcommand("verify", "verify the construction identities");
  verify->add_option("target", verify_which, "inner|outer|smooth")->required();
  verify->add_option("--input", opt.input, "polygon JSON file");
  verify->add_option("--curve", opt.curve, "catalog curve or poly:<x coeffs>;<y coeffs>");
  verify->add_option("--levels", opt.levels, "grid levels (default: maximum)");
  verify->add_option("--tol", opt.tol, "residual tolerance")->each([&](const std::string&) {
    opt.tol_given = true;
  });

  CLI::App* sample = app.add_subcommand("sample-curve", "sample a catalog curve to a polygon file");
  sample->add_option("--curve", opt.curve, "curve name")->required();
  sample->add_option("--samples", opt.samples, "number of samples (>= 3)")->required();
  sample->add_option("--range", opt.range, "parameter range '<a>:<b>'");
  sample->add_flag("--closed", opt.closed, "emit a closed polygon");
  sample->add_option("--out", opt.out, "output polygon file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (inner->parsed()) return run_inner(opt);
    if (outer->parsed()) return run_outer(opt);
    if (verify->parsed()) return run_verify(verify_which, opt);
    if (sample->parsed()) return run_sample_curve(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
