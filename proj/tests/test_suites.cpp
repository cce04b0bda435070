#include "doctest.h"
#include "scp/suites.hpp"

using namespace scp;

namespace {

RunOptions options(int N, int L, int jobs = 1) {
  RunOptions o;
  o.cfg.N = N;
  o.cfg.L = L;
  o.jobs = jobs;
  return o;
}

}  // namespace

TEST_CASE("reports are deterministic across thread counts") {
  const std::string a = run_suite(Suite::Verify, options(3, 3, 1)).to_json(42).dump();
  const std::string b = run_suite(Suite::Verify, options(3, 3, 4)).to_json(42).dump();
  CHECK(a == b);
}

TEST_CASE("report layout") {
  const RunReport rep = run_suite(Suite::Spectrum, options(4, 4));
  const ojson j = rep.to_json(42);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"config", "drinfeld", "checks", "spectrum", "timing", "version", "seed"});
  CHECK(j["spectrum"].size() == 5);
  CHECK(j["spectrum"][0]["patterns"].size() == 8);
  CHECK(j["timing"]["enabled"] == false);
  CHECK(rep.exit_code() == 0);
  for (size_t i = 1; i < rep.checks.size(); ++i) {
    const auto& p = rep.checks[i - 1];
    const auto& c = rep.checks[i];
    CHECK((p.name < c.name || (p.name == c.name && p.sample < c.sample)));
  }
}

TEST_CASE("suites pass at N = 3, L = 3") {
  for (Suite s : {Suite::Drinfeld, Suite::Elements, Suite::Spectrum, Suite::Rotations})
    CHECK_MESSAGE(run_suite(s, options(3, 3)).exit_code() == 0, suite_name(s));
}

TEST_CASE("charged elements") {
  RunOptions o = options(3, 6);
  o.cfg.Q = 1;
  const RunReport rep = run_suite(Suite::Elements, o);
  CHECK(rep.exit_code() == 0);
  CHECK(rep.checks.size() == 10);
  CHECK_THROWS_AS(run_suite(Suite::Spectrum, o), Error);
}

TEST_CASE("invalid configurations") {
  CHECK_THROWS_AS(run_suite(Suite::Verify, options(3, 4)), Error);
  RunOptions o = options(3, 3);
  o.samples = 0;
  CHECK_THROWS_AS(run_suite(Suite::Verify, o), Error);
}

TEST_CASE("failed checks and warnings") {
  CheckRecord c = make_check("x", "a = b", 0, std::nan(""), 1.0);
  CHECK(c.status == Status::Fail);
  RunReport rep;
  rep.checks.push_back(make_check("y", "a = b", 0, 0.5, 1.0));
  CHECK(rep.exit_code() == 0);
  rep.checks.back().status = Status::Warn;
  CHECK(rep.exit_code() == 0);
  rep.checks.push_back(c);
  CHECK(rep.exit_code() == 1);
  CHECK(rep.to_json(1)["checks"][1]["max_residual"].is_null());
}
