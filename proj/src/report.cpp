#include "elliptica/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace elliptica {

double VerificationReport::max_residual() const {
  double m = 0.0;
  for (double r : residuals) {
    if (!std::isfinite(r)) return std::numeric_limits<double>::infinity();
    m = std::max(m, r);
  }
  return m;
}

VerificationReport& VerificationReport::finalize() {
  passed = max_residual() <= tolerance;
  return *this;
}

nlohmann::json to_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

std::string format(cplx z) {
  std::ostringstream o;
  o.precision(12);
  o << z.real() << std::showpos << z.imag() << "i";
  return o.str();
}

nlohmann::json to_json(const VerificationReport& r) {
  using nlohmann::json;
  json samples = json::array();
  for (const auto& s : r.samples) {
    json o = json::object();
    for (const auto& [k, v] : s.values) o[k] = to_json(v);
    samples.push_back(std::move(o));
  }
  json residuals = json::array();
  for (double x : r.residuals) residuals.push_back(std::isfinite(x) ? json(x) : json("inf"));
  double mr = r.max_residual();
  json j = {
      {"check_name", r.check_name},
      {"samples", std::move(samples)},
      {"residuals", std::move(residuals)},
      {"max_residual", std::isfinite(mr) ? json(mr) : json("inf")},
      {"tolerance", r.tolerance},
      {"passed", r.passed},
      {"seed", r.seed ? json(*r.seed) : json(nullptr)},
  };
  if (r.informational) j["informational"] = true;
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (!r.extra.empty()) j["extra"] = r.extra;
  return j;
}

bool all_passed(const std::vector<VerificationReport>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const auto& r) { return r.passed || r.informational; });
}

}  // namespace elliptica
