#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "scp/suites.hpp"

namespace {

// "re,im" or a bare real
scp::cplx parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  std::size_t used = 0;
  try {
    if (comma == std::string::npos) {
      const double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {re, 0.0};
    }
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    const double re = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    const double im = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    return {re, im};
  } catch (const std::exception&) {
    throw scp::Error(scp::ErrorKind::Config, "cannot parse complex value '" + s + "' (expected re or re,im)");
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(const scp::RunReport& rep, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw scp::Error(scp::ErrorKind::Config, "cannot open " + path);
  f << "name,anchor,sample,max_residual,tolerance,status\n";
  char buf[64];
  for (const auto& c : rep.checks) {
    std::snprintf(buf, sizeof buf, "%.17g", c.residual);
    f << csv_escape(c.name) << ',' << csv_escape(c.anchor) << ',' << c.sample << ',' << buf << ',';
    std::snprintf(buf, sizeof buf, "%.17g", c.tolerance);
    f << buf << ',' << scp::status_name(c.status) << '\n';
  }
  if (rep.spectrum.empty()) return;
  std::ofstream s(path + ".spectrum.csv");
  if (!s) throw scp::Error(scp::ErrorKind::Config, "cannot open " + path + ".spectrum.csv");
  s << "sample,xi,analytic_re,analytic_im,matched_re,matched_im,rel_error\n";
  for (const auto& t : rep.spectrum)
    for (const auto& p : t["patterns"]) {
      std::snprintf(buf, sizeof buf, "%d,", t["sample"].get<int>());
      s << buf << p["xi"].get<std::string>();
      for (const char* k : {"analytic", "matched"})
        for (int i = 0; i < 2; ++i) {
          std::snprintf(buf, sizeof buf, ",%.17g", p[k][i].get<double>());
          s << buf;
        }
      std::snprintf(buf, sizeof buf, ",%.17g\n", p["rel_error"].get<double>());
      s << buf;
    }
}

void print_summary(const scp::RunReport& rep) {
  if (rep.command == "drinfeld") {
    std::cout << "Lambda = [";
    const auto& lam = rep.drinfeld["Lambda"];
    for (std::size_t i = 0; i < lam.size(); ++i) std::cout << (i ? ", " : "") << lam[i].get<long long>();
    std::cout << "]\n";
  }
  if (!rep.spectrum.empty()) {
    const auto& first = rep.spectrum[0]["patterns"];
    const double tol = rep.config["tolerances"]["spec"].get<double>();
    int matched = 0;
    for (const auto& p : first)
      if (p["rel_error"].get<double>() <= tol) ++matched;
    std::cout << matched << " of " << first.size() << " patterns matched (sample 0), " << rep.spectrum.size()
              << " samples\n";
  }
  int pass = 0, warn = 0, fail = 0;
  for (const auto& c : rep.checks) {
    if (c.status == scp::Status::Pass) ++pass;
    else if (c.status == scp::Status::Warn) ++warn;
    else {
      ++fail;
      std::cout << "FAIL " << c.name << " [sample " << c.sample << "] residual " << c.residual << " > "
                << c.tolerance << "\n";
    }
  }
  std::cout << rep.command << ": " << pass << " pass, " << warn << " warn, " << fail << " fail\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superintegrable chiral Potts eigenvector verification"};
  app.require_subcommand(1);

  scp::RunOptions opts;
  std::string kprime = "0.3", lambda_p = "1", out, format = "json";
  int N = 3, L = 3, Q = 0;
  std::uint64_t seed = 42;
  double tol_spec = opts.cfg.tol.spec, tol_linalg = opts.cfg.tol.linalg;

  const std::vector<std::pair<std::string, scp::Suite>> subs = {
      {"drinfeld", scp::Suite::Drinfeld},   {"spectrum", scp::Suite::Spectrum}, {"elements", scp::Suite::Elements},
      {"rotations", scp::Suite::Rotations}, {"verify", scp::Suite::Verify}};
  const std::map<std::string, std::string> help = {
      {"drinfeld", "Drinfeld polynomial, roots and generating-function identities"},
      {"spectrum", "match analytic eigenvalue squares against the dense spectrum"},
      {"elements", "closed-form transfer-matrix elements and ratio identities"},
      {"rotations", "mode rotations and their assembly"},
      {"verify", "every suite plus the intertwining relations"}};
  for (const auto& [name, suite] : subs) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--N", N, "number of spin states")->capture_default_str();
    sub->add_option("--L", L, "chain length, a multiple of N")->capture_default_str();
    sub->add_option("--Q", Q, "charge sector")->capture_default_str();
    sub->add_option("--kprime", kprime, "k', as re or re,im")->capture_default_str();
    sub->add_option("--lambda-p", lambda_p, "vertical rapidity lambda_p, as re or re,im")->capture_default_str();
    sub->add_option("--samples", opts.samples, "number of seeded q samples")->capture_default_str();
    sub->add_option("--seed", seed, "sampling seed")->capture_default_str();
    sub->add_option("--tol-spec", tol_spec, "relative tolerance for eigenvalue matching")->capture_default_str();
    sub->add_option("--tol-linalg", tol_linalg, "linear algebra tolerance")->capture_default_str();
    sub->add_option("--out", out, "report path");
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_flag("--timing", opts.timing, "record wall-clock timings (breaks byte-identical reports)");
    sub->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  scp::Suite suite = scp::Suite::Verify;
  for (const auto& [name, s] : subs)
    if (app.got_subcommand(name)) suite = s;

  try {
    opts.cfg.N = N;
    opts.cfg.L = L;
    opts.cfg.Q = Q;
    opts.cfg.kprime = parse_complex(kprime);
    opts.cfg.lambda_p = parse_complex(lambda_p);
    opts.cfg.seed = seed;
    opts.cfg.tol.spec = tol_spec;
    opts.cfg.tol.linalg = tol_linalg;
    if (Q < 0 || Q >= N) throw scp::Error(scp::ErrorKind::Config, "Q must lie in [0, N-1]");
    opts.cfg.validate();
  } catch (const scp::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  try {
    const scp::RunReport rep = scp::run_suite(suite, opts);
    if (!out.empty()) {
      if (format == "csv") {
        write_csv(rep, out);
      } else {
        std::ofstream f(out);
        if (!f) throw scp::Error(scp::ErrorKind::Config, "cannot open " + out);
        f << rep.to_json(seed).dump(2) << "\n";
      }
    }
    print_summary(rep);
    return rep.exit_code();
  } catch (const scp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == scp::ErrorKind::Config || e.kind() == scp::ErrorKind::Unsupported ? 2 : 1;
  }
}
