#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "scp/curve.hpp"

namespace scp {

using ojson = nlohmann::ordered_json;

enum class Status { Pass, Fail, Warn };

const char* status_name(Status s);

struct CheckRecord {
  std::string name;    // "<suite>.<check>"
  std::string anchor;  // the identity being checked, as a formula
  int sample = -1;     // q-sample index, -1 when q-independent
  double residual = 0.0;
  double tolerance = 0.0;
  Status status = Status::Pass;
  std::string note;
};

/// Pass if residual <= tolerance (NaN fails).
CheckRecord make_check(std::string name, std::string anchor, int sample, double residual, double tolerance);

inline constexpr const char* kVersion = "1.0.0";

struct RunReport {
  std::string command;
  ojson config;
  ojson drinfeld;
  std::vector<CheckRecord> checks;
  ojson spectrum = ojson::array();
  ojson timing;

  /// Sorts checks by (name, sample).
  void finalize();
  bool any_failed() const;
  int exit_code() const { return any_failed() ? 1 : 0; }
  ojson to_json(std::uint64_t seed) const;
};

}  // namespace scp
