#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "elliptica/specfun.hpp"

namespace elliptica {

struct SamplePoint {
  std::vector<std::pair<std::string, cplx>> values;
};

struct VerificationReport {
  std::string check_name;
  std::vector<SamplePoint> samples;
  std::vector<double> residuals;
  double tolerance = 0.0;
  bool passed = false;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> notes;
  // reported but excluded from all_passed / exit codes
  bool informational = false;
  nlohmann::json extra = nlohmann::json::object();

  VerificationReport() = default;
  VerificationReport(std::string name, double tol) : check_name(std::move(name)), tolerance(tol) {}

  void add(SamplePoint pt, double residual) {
    samples.push_back(std::move(pt));
    residuals.push_back(residual);
  }
  double max_residual() const;  // +inf if any residual is not finite
  // passed <=> max(residuals) <= tolerance
  VerificationReport& finalize();
};

nlohmann::json to_json(cplx z);
std::string format(cplx z);  // "a+bi"
nlohmann::json to_json(const VerificationReport& r);

bool all_passed(const std::vector<VerificationReport>& rs);

}  // namespace elliptica
