#include "scp/report.hpp"

#include <algorithm>
#include <cmath>

namespace scp {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Warn: return "warn";
  }
  return "fail";
}

CheckRecord make_check(std::string name, std::string anchor, int sample, double residual, double tolerance) {
  CheckRecord c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.sample = sample;
  c.residual = residual;
  c.tolerance = tolerance;
  c.status = (std::isfinite(residual) && residual <= tolerance) ? Status::Pass : Status::Fail;
  return c;
}

void RunReport::finalize() {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) {
    return a.name != b.name ? a.name < b.name : a.sample < b.sample;
  });
}

bool RunReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == Status::Fail; });
}

ojson RunReport::to_json(std::uint64_t seed) const {
  ojson j;
  j["config"] = config;
  j["config"]["command"] = command;
  j["drinfeld"] = drinfeld;
  ojson arr = ojson::array();
  for (const auto& c : checks) {
    ojson e;
    e["name"] = c.name;
    e["anchor"] = c.anchor;
    e["sample"] = c.sample;
    // non-finite residuals are not representable in JSON
    if (std::isfinite(c.residual)) e["max_residual"] = c.residual;
    else e["max_residual"] = nullptr;
    e["tolerance"] = c.tolerance;
    e["status"] = status_name(c.status);
    if (!c.note.empty()) e["note"] = c.note;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["spectrum"] = spectrum;
  j["timing"] = timing;
  j["version"] = kVersion;
  j["seed"] = seed;
  return j;
}

}  // namespace scp
