#include "sliceq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "CLI11.hpp"
#include "sliceq/errors.hpp"
#include "sliceq/expr.hpp"
#include "sliceq/report.hpp"

namespace sliceq {

namespace {

struct Options {
  std::string expr;
  std::string at;
  std::string center = "0";
  int nmax = 80;
  double tol = std::nan("");

  std::string kind;
  std::string p;
  double radius = std::nan("");
  double r1 = std::nan("");
  double r2 = std::nan("");
  std::string emit = "json";
  int count = 64;

  std::string identity;
  int trials = 1000;
  std::uint64_t seed = 0;

  std::string rule = "reciprocal_factorial";
  double cw_radius = 0.5;
  double eps = 0.1;
  int targets = 100;
  int trunc = 40;
  int budget = 10000;
};

void print_json(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int cmd_eval(const Options& o, std::ostream& out) {
  const Value v = lower(*parse_expr(o.expr));
  const Quaternion q = parse_quaternion(o.at);
  print_json(out, Json{{"value", format_quaternion(eval(v, q))}});
  return kExitOk;
}

QPolynomial require_polynomial(const Value& v) {
  if (const auto* p = std::get_if<QPolynomial>(&v)) return *p;
  const auto& r = std::get<QRational>(v);
  if (r.is_polynomial()) return r.numerator();
  throw NotPolynomial("expression has a nonconstant denominator");
}

int cmd_zeros(const Options& o, std::ostream& out) {
  const QPolynomial f = require_polynomial(lower(*parse_expr(o.expr)));
  ZeroOptions zo;
  if (!std::isnan(o.tol)) zo.verify_tolerance = o.tol;
  print_json(out, to_json(analyze_zeros(f, zo)));
  return kExitOk;
}

int cmd_poles(const Options& o, std::ostream& out) {
  print_json(out, to_json(analyze_poles(as_rational(lower(*parse_expr(o.expr))))));
  return kExitOk;
}

int cmd_laurent(const Options& o, std::ostream& out) {
  const QRational a = as_rational(lower(*parse_expr(o.expr)));
  print_json(out, to_json(expand_rational(a, parse_quaternion(o.center), o.nmax)));
  return kExitOk;
}

struct Surface {
  const char* name;
  RegionSpec spec;
  double level;
};

double gauge(const RegionSpec& spec, const Quaternion& q) {
  return spec.kind == RegionKind::TauSet ? tau(q, spec.center) : sigma(q, spec.center);
}

int cmd_region(const Options& o, std::ostream& out) {
  const RegionKind kind = parse_region_kind(o.kind);
  const Quaternion p = parse_quaternion(o.p);
  RegionSpec region{kind, p, 0.0, kInfinity};
  const bool shell = kind == RegionKind::Shell || kind == RegionKind::OpenShell;
  if (shell) {
    if (std::isnan(o.r1) || std::isnan(o.r2)) throw InvalidArgument("shell regions need --R1 and --R2");
    region.inner = o.r1;
    region.outer = o.r2;
  } else {
    if (std::isnan(o.radius)) throw InvalidArgument("ball regions need --R");
    region.outer = o.radius;
  }
  region.validate();

  if (!o.at.empty()) {
    const Quaternion q = parse_quaternion(o.at);
    print_json(out, Json{{"kind", std::string(to_string(kind))},
                         {"point", format_quaternion(q)},
                         {"contains", region_contains(region, q)},
                         {"sigma", sigma(q, p)},
                         {"tau", tau(q, p)},
                         {"omega", omega(q, p)}});
    return kExitOk;
  }

  std::vector<Surface> surfaces;
  switch (kind) {
    case RegionKind::SigmaBall: surfaces.push_back({"outer", {RegionKind::SigmaBall, p, 0.0, region.outer}, region.outer}); break;
    case RegionKind::TauSet: surfaces.push_back({"outer", {RegionKind::TauSet, p, 0.0, region.outer}, region.outer}); break;
    case RegionKind::Shell:
      surfaces.push_back({"outer", {RegionKind::SigmaBall, p, 0.0, region.outer}, region.outer});
      if (region.inner > 0.0) surfaces.push_back({"inner", {RegionKind::TauSet, p, 0.0, region.inner}, region.inner});
      break;
    default: throw UnsupportedRegionKind("boundary sampling is available for sigma_ball, tau_set and shell");
  }
  const double tol = std::isnan(o.tol) ? 1e-6 : o.tol;
  double worst = 0.0;
  struct Row {
    const char* surface;
    Quaternion q;
    double value;
    double residual;
  };
  std::vector<Row> rows;
  for (const auto& s : surfaces) {
    for (const auto& q : ball_boundary_points(s.spec, o.count)) {
      const double value = gauge(s.spec, q);
      const double residual = std::abs(value - s.level);
      worst = std::max(worst, residual);
      rows.push_back({s.name, q, value, residual});
    }
  }
  Json regime = nullptr;
  if (kind != RegionKind::TauSet) regime = std::string(to_string(ball_regime(p, region.outer)));

  if (o.emit == "csv") {
    out << "x0,x1,x2,x3\n";
    for (const auto& r : rows) {
      out << Json(r.q.x0).dump() << ',' << Json(r.q.x1).dump() << ',' << Json(r.q.x2).dump() << ','
          << Json(r.q.x3).dump() << '\n';
    }
    return kExitOk;
  }
  if (o.emit != "json") throw InvalidArgument("--emit must be json or csv");
  Json samples = Json::array();
  for (const auto& r : rows) {
    samples.push_back({{"surface", r.surface}, {"point", format_quaternion(r.q)}, {"value", r.value}, {"residual", r.residual}});
  }
  Json j = {{"kind", std::string(to_string(kind))}, {"center", format_quaternion(p)}};
  if (shell) {
    j["R1"] = region.inner;
    j["R2"] = region.outer;
  } else {
    j["R"] = region.outer;
  }
  j["regime"] = regime;
  j["max_residual"] = worst;
  j["within_tol"] = worst <= tol;
  j["samples"] = samples;
  print_json(out, j);
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const SweepReport report = identity_sweep(o.identity, o.trials, o.seed);
  print_json(out, to_json(report));
  return report.passed ? kExitOk : kExitDomain;
}

int cmd_cw(const Options& o, std::ostream& out) {
  ScanOptions so;
  so.budget = o.budget;
  const auto result = casorati_scan(parse_generator(o.rule), parse_quaternion(o.center), o.cw_radius, o.eps, o.targets,
                                    o.seed, o.trunc, so);
  print_json(out, to_json(result));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Slice-regular quaternionic functions: evaluation, zeros, poles, Laurent expansions"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--tol", o.tol, "verification tolerance (zeros: 1e-8, region: 1e-6)");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression at a point");
  eval_cmd->add_option("expr", o.expr, "expression in q")->required();
  eval_cmd->add_option("--at", o.at, "quaternion, e.g. 1+2i-j")->required();

  auto* zeros_cmd = app.add_subcommand("zeros", "zero set of a polynomial");
  zeros_cmd->add_option("expr", o.expr, "polynomial expression in q")->required();
  zeros_cmd->add_option("--tol", o.tol, "zero verification tolerance (default 1e-8)");

  auto* poles_cmd = app.add_subcommand("poles", "pole spheres and orders of a rational expression");
  poles_cmd->add_option("expr", o.expr, "expression in q")->required();

  auto* laurent_cmd = app.add_subcommand("laurent", "Laurent expansion about a center");
  laurent_cmd->add_option("expr", o.expr, "expression in q")->required();
  laurent_cmd->add_option("--center", o.center, "expansion center")->required();
  laurent_cmd->add_option("--nmax", o.nmax, "highest coefficient index (default 80)")->check(CLI::NonNegativeNumber);

  auto* region_cmd = app.add_subcommand("region", "membership and boundary samples of sigma/tau regions");
  region_cmd->add_option("--kind", o.kind, "sigma_ball, omega_ball, tau_set, shell or open_shell")->required();
  region_cmd->add_option("--p", o.p, "center")->required();
  region_cmd->add_option("--R", o.radius, "radius of a ball or tau-set");
  region_cmd->add_option("--R1", o.r1, "inner radius of a shell");
  region_cmd->add_option("--R2", o.r2, "outer radius of a shell");
  region_cmd->add_option("--emit", o.emit, "json (default) or csv");
  region_cmd->add_option("--count", o.count, "boundary samples per surface (default 64)");
  region_cmd->add_option("--at", o.at, "report membership of this point instead of sampling");
  region_cmd->add_option("--tol", o.tol, "boundary residual tolerance (default 1e-6)");

  auto* check_cmd = app.add_subcommand("check", "randomized identity sweep");
  check_cmd->add_option("identity", o.identity, "identity name")->required();
  check_cmd->add_option("--trials", o.trials, "number of random instances (default 1000)")->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--seed", o.seed, "random seed (default 0)");

  auto* cw_cmd = app.add_subcommand("cw", "Casorati-Weierstrass density scan");
  cw_cmd->add_option("--rule", o.rule, "reciprocal_factorial or geometric:<r>");
  cw_cmd->add_option("--center", o.center, "singular point p (default 0)");
  cw_cmd->add_option("--radius", o.cw_radius, "search radius r (default 0.5)");
  cw_cmd->add_option("--eps", o.eps, "hit threshold (default 0.1)");
  cw_cmd->add_option("--targets", o.targets, "number of targets (default 100)")->check(CLI::NonNegativeNumber);
  cw_cmd->add_option("--seed", o.seed, "random seed (default 0)");
  cw_cmd->add_option("--trunc", o.trunc, "truncation depth m (default 40)")->check(CLI::NonNegativeNumber);
  cw_cmd->add_option("--budget", o.budget, "evaluations per target (default 10000)")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    print_json(out, error_json("UsageError", e.what()));
    return kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(o, out);
    if (zeros_cmd->parsed()) return cmd_zeros(o, out);
    if (poles_cmd->parsed()) return cmd_poles(o, out);
    if (laurent_cmd->parsed()) return cmd_laurent(o, out);
    if (region_cmd->parsed()) return cmd_region(o, out);
    if (check_cmd->parsed()) return cmd_check(o, out);
    if (cw_cmd->parsed()) return cmd_cw(o, out);
  } catch (const SyntaxError& e) {
    print_json(out, error_json(e.kind(), e.message(), e.offset()));
    return kExitUsage;
  } catch (const Error& e) {
    print_json(out, error_json(e.kind(), e.what()));
    return kExitDomain;
  }
  print_json(out, error_json("UsageError", "no command given"));
  return kExitUsage;
}

}  // namespace sliceq
