// One pass/fail line per acceptance criterion. With an argument k only
// criterion k runs. Exit status is nonzero if any executed criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "scp/suites.hpp"

using namespace scp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
  bool pass = true;
  std::string detail;
};

const std::vector<std::pair<int, int>> kConfigs = {{3, 3}, {4, 4}, {3, 6}};

ModelConfig config(int N, int L, int Q = 0) {
  ModelConfig c;
  c.N = N;
  c.L = L;
  c.Q = Q;
  return c;
}

std::string tag(int N, int L) { return "(" + std::to_string(N) + "," + std::to_string(L) + ")"; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// worst residual among records whose name starts with one of the prefixes
double worst(const RunReport& rep, const std::vector<std::string>& prefixes, bool& any_fail, int& count) {
  double w = 0.0;
  for (const auto& c : rep.checks)
    for (const auto& p : prefixes)
      if (c.name.rfind(p, 0) == 0) {
        w = std::max(w, c.residual);
        any_fail = any_fail || c.status == Status::Fail;
        ++count;
      }
  return w;
}

Line c01() {
  Line l;
  for (auto [N, L] : kConfigs) {
    const auto t0 = Clock::now();
    const auto lam = compute_P(N, L);
    const double dt = seconds_since(t0);
    bool sym = true;
    for (size_t n = 0; n < lam.size(); ++n) sym = sym && lam[n] == lam[lam.size() - 1 - n];
    bool ok = sym && dt < 0.1;
    if (N == 3 && L == 3) ok = ok && lam == std::vector<std::int64_t>{1, 7, 1};
    l.pass = l.pass && ok;
    l.detail += tag(N, L) + (ok ? " exact" : " WRONG") + " " + num(dt) + "s; ";
  }
  return l;
}

Line drinfeld_line(double DrinfeldChecks::*field, double tol, const char* what) {
  Line l;
  for (auto [N, L] : kConfigs) {
    const DrinfeldChecks c = drinfeld_checks(build_drinfeld(config(N, L)));
    const double v = c.*field;
    l.pass = l.pass && v <= tol;
    l.detail += tag(N, L) + " " + what + " " + num(v) + "; ";
  }
  return l;
}

Line c02() {
  Line a = drinfeld_line(&DrinfeldChecks::pairing, 1e-10, "pairing");
  Line b = drinfeld_line(&DrinfeldChecks::product, 1e-10, "product");
  return {a.pass && b.pass, a.detail + b.detail};
}

Line c03() { return drinfeld_line(&DrinfeldChecks::newton, 1e-10, "newton"); }

Line c04() {
  Line l;
  for (auto [N, L] : {std::pair{3, 3}, std::pair{4, 4}}) {
    const auto t0 = Clock::now();
    const DrinfeldData dd = build_drinfeld(config(N, L));
    const double v = gram_check(dd, build_charge_n_table(N, L));
    const double dt = seconds_since(t0);
    l.pass = l.pass && v <= 1e-8 && dt < 1.0;
    l.detail += tag(N, L) + " gram " + num(v) + " in " + num(dt) + "s; ";
  }
  return l;
}

Line c05() {
  Line l;
  for (auto [N, L] : kConfigs) {
    const DrinfeldData dd = build_drinfeld(config(N, L));
    const ChargeNTable tab = build_charge_n_table(N, L);
    const double h = h_identity_residual(dd, tab);
    const LeadingCoeffResidual lc = leading_coeff_check(dd, tab);
    const double lim = std::max(lc.polynomial, lc.direct);
    l.pass = l.pass && h <= 1e-8 && lim <= 1e-10;
    l.detail += tag(N, L) + " h " + num(h) + " lim " + num(lim) + "; ";
  }
  return l;
}

Line suite_line(Suite s, const std::vector<std::string>& prefixes, std::vector<ModelConfig> cfgs) {
  Line l;
  for (const ModelConfig& c : cfgs) {
    RunOptions o;
    o.cfg = c;
    o.jobs = 4;
    const RunReport rep = run_suite(s, o);
    bool fail = false;
    int n = 0;
    const double w = worst(rep, prefixes, fail, n);
    l.pass = l.pass && !fail && n > 0;
    l.detail += tag(c.N, c.L) + (c.Q ? " Q=" + std::to_string(c.Q) : "") + " " + std::to_string(n) + " checks max " +
                num(w) + "; ";
  }
  return l;
}

Line c06() {
  return suite_line(Suite::Elements,
                    {"elements.omega", "elements.column", "elements.hat_row", "elements.lowered", "elements.raised",
                     "elements.charged"},
                    {config(3, 3), config(4, 4), config(3, 6), config(3, 6, 1), config(4, 4, 2)});
}

Line c07() { return suite_line(Suite::Elements, {"elements.ratio_"}, {config(3, 3), config(4, 4), config(3, 6)}); }

Line c08() {
  return suite_line(Suite::Drinfeld, {"drinfeld.functional_relation", "drinfeld.pattern_independence"},
                    {config(3, 3), config(4, 4), config(3, 6)});
}

Line c09() {
  Line l;
  const auto t0 = Clock::now();
  for (auto [N, L] : kConfigs) {
    RunOptions o;
    o.cfg = config(N, L);
    o.jobs = 4;
    const RunReport rep = run_suite(Suite::Spectrum, o);
    bool fail = false;
    int n = 0;
    const double w = worst(rep, {"spectrum.inclusion"}, fail, n);
    const size_t patterns = rep.spectrum[0]["patterns"].size();
    l.pass = l.pass && !fail && patterns == (1u << (L * (N - 1) / N));
    l.detail += tag(N, L) + " " + std::to_string(patterns) + " values, max rel " + num(w) + "; ";
  }
  const double dt = seconds_since(t0);
  l.pass = l.pass && dt < 10.0;
  l.detail += "total " + num(dt) + "s";
  return l;
}

Line c10() { return suite_line(Suite::Rotations, {"rotations."}, {config(3, 3), config(4, 4), config(3, 6)}); }

Line c11() {
  return suite_line(Suite::Verify, {"intertwine.forward", "intertwine.hat_xy", "intertwine.hat_yx"},
                    {config(3, 3), config(4, 4)});
}

Line c11b() {
  return suite_line(Suite::Verify, {"intertwine.twisted"}, {config(3, 3), config(4, 4)});
}

Line c12() {
  Line l;
  for (auto [N, L] : {std::pair{3, 3}, std::pair{4, 4}}) {
    RunOptions a;
    a.cfg = config(N, L);
    RunOptions b = a;
    b.jobs = 4;
    const std::string ja = run_suite(Suite::Verify, a).to_json(a.cfg.seed).dump(2);
    const std::string ja2 = run_suite(Suite::Verify, a).to_json(a.cfg.seed).dump(2);
    const std::string jb = run_suite(Suite::Verify, b).to_json(b.cfg.seed).dump(2);
    const bool same = ja == ja2 && ja == jb;
    l.pass = l.pass && same;
    l.detail += tag(N, L) + (same ? " identical " : " DIFFER ") + std::to_string(ja.size()) + " bytes; ";
  }
  return l;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Line()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "Drinfeld coefficients exact and palindromic", c01},
      {2, "root pairing and product", c02},
      {3, "Newton identities", c03},
      {4, "Gram orthogonality", c04},
      {5, "h identity and leading coefficient", c05},
      {6, "closed-form matrix elements", c06},
      {7, "ratio identities", c07},
      {8, "functional relation", c08},
      {9, "spectral inclusion", c09},
      {10, "rotation suite", c10},
      {11, "intertwining relations as stated", c11},
      {12, "byte-identical reports", c12},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failed = 0;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    Line l;
    try {
      l = c.run();
    } catch (const std::exception& e) {
      l = {false, std::string("exception: ") + e.what()};
    }
    if (!l.pass) ++failed;
    std::printf("criterion %02d %s  %s: %s\n", c.id, l.pass ? "PASS" : "FAIL", c.title, l.detail.c_str());
    if (c.id == 11) {
      // diagnostic only, does not affect the exit status
      const Line d = c11b();
      std::printf("criterion 11b %s  intertwining with the K twist and constant c (diagnostic): %s\n",
                  d.pass ? "PASS" : "FAIL", d.detail.c_str());
    }
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
