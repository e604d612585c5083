#include "sliceq/report.hpp"

#include <cmath>

namespace sliceq {

namespace {

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

std::string format_quaternion(const Quaternion& q) { return to_string(q, 15, 1e-14 * norm(q)); }

Json to_json(const ZeroReport& report) {
  Json spherical = Json::array();
  for (const auto& s : report.spherical) {
    spherical.push_back({{"x", s.sphere.x}, {"y", s.sphere.y}, {"mult", s.multiplicity}});
  }
  Json isolated = Json::array();
  for (const auto& z : report.isolated) {
    Json chain = Json::array();
    for (const auto& p : z.chain) chain.push_back(format_quaternion(p));
    isolated.push_back({{"point", format_quaternion(z.point)},
                        {"classical", z.classical},
                        {"isolated", z.isolated},
                        {"chain", chain}});
  }
  return {{"spherical", spherical}, {"isolated", isolated}};
}

Json to_json(const SingularityReport& report) {
  Json spheres = Json::array();
  for (const auto& s : report.spheres) {
    Json exceptional = nullptr;
    if (s.exceptional) {
      exceptional = {{"point", format_quaternion(s.exceptional->point)},
                     {"order", s.exceptional->order},
                     {"flag", s.exceptional->order > 0 ? "pole" : "order0_nonremovable"}};
    }
    Json isolated = nullptr;
    if (s.isolated) {
      isolated = {{"point", format_quaternion(s.isolated->point)}, {"multiplicity", s.isolated->multiplicity}};
    }
    spheres.push_back({{"x", s.sphere.x},
                       {"y", s.sphere.y},
                       {"generic_order", s.generic_order},
                       {"exceptional", exceptional},
                       {"spherical_order", s.spherical_order},
                       {"isolated", isolated}});
  }
  return {{"spheres", spheres}};
}

Json to_json(const LaurentExpansion& e) {
  Json coeffs = Json::array();
  for (const auto& a : e.coeffs) coeffs.push_back(format_quaternion(a));
  const Radii r = radii(e);
  return {{"center", format_quaternion(e.center)},
          {"nmin", e.n_min},
          {"nmax", e.n_max},
          {"coeffs", coeffs},
          {"R1", number_or_null(r.inner)},
          {"R2", number_or_null(r.outer)},
          {"classification", to_string(classify(e))}};
}

Json to_json(const DensityScanResult& result) {
  Json witnesses = Json::array();
  for (const auto& w : result.witnesses) {
    witnesses.push_back({{"target", format_quaternion(w.target)},
                         {"witness", format_quaternion(w.point)},
                         {"residual", number_or_null(w.residual)},
                         {"hit", w.hit}});
  }
  const auto& p = result.parameters;
  return {{"targets", result.targets},
          {"hits", result.hits},
          {"hit_fraction", result.hit_fraction()},
          {"witnesses", witnesses},
          {"parameters",
           {{"p", format_quaternion(p.center)},
            {"r", p.radius},
            {"eps", number_or_null(p.eps)},
            {"truncation", p.truncation},
            {"seed", p.seed},
            {"budget", p.budget},
            {"rule", p.rule}}}};
}

Json to_json(const SweepReport& report) {
  return {{"identity", report.identity},
          {"trials", report.trials},
          {"seed", report.seed},
          {"passed", report.passed},
          {"worst_residual", number_or_null(report.worst_residual)},
          {"tolerance", report.tolerance},
          {"failing_instance", report.failing_instance ? Json(*report.failing_instance) : Json(nullptr)}};
}

Json error_json(const std::string& kind, const std::string& detail, std::optional<std::size_t> offset) {
  Json body = {{"kind", kind}, {"detail", detail}};
  if (offset) body["offset"] = *offset;
  return {{"error", body}};
}

}  // namespace sliceq
