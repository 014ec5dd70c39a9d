// Command-line front end: metrics, extremal constructions, verification
// suites, distortion constants and the counterexample tables.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vangle/counterexamples.hpp"
#include "vangle/harness.hpp"
#include "vangle/io.hpp"
#include "vangle/svg.hpp"

namespace {

using namespace vangle;

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

Point parse_point(const std::string& text, const char* flag) {
  std::istringstream in(text);
  double a = 0.0, b = 0.0;
  char comma = 0;
  if (!(in >> a >> comma >> b) || comma != ',' || !(in >> std::ws).eof())
    throw ConfigError(std::string(flag) + ": expected 'a,b', got '" + text + "'");
  return {a, b};
}

Domain parse_domain(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ConfigError(std::string("--domain: invalid JSON: ") + e.what());
    }
    return domain_from_json(j, "--domain");
  }
  return domain_from_json(Json(text), "--domain");
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Visual angle and triangular ratio metrics: evaluation and verification"};
  app.require_subcommand(1);

  // metric
  auto* metric = app.add_subcommand("metric", "Evaluate v, s, j or rho for a pair of points");
  std::string m_domain, m_kind, m_x, m_y;
  bool m_oracle = false;
  metric->add_option("--domain", m_domain, "Preset name or domain JSON")->required();
  metric->add_option("--metric", m_kind, "v | s | j | rho")->required()->check(CLI::IsMember({"v", "s", "j", "rho"}));
  metric->add_option("--x", m_x, "First point a,b")->required();
  metric->add_option("--y", m_y, "Second point c,d")->required();
  metric->add_flag("--oracle", m_oracle, "Add the brute-force boundary supremum (v and s only)");

  // extremal
  auto* ext = app.add_subcommand("extremal", "Extremal point of v in the half-plane or the disk");
  std::string e_model, e_x, e_y, e_svg;
  ext->add_option("--model", e_model, "halfplane | disk")->required()->check(CLI::IsMember({"halfplane", "disk"}));
  ext->add_option("--x", e_x, "First point a,b")->required();
  ext->add_option("--y", e_y, "Second point c,d")->required();
  ext->add_option("--svg", e_svg, "Write the construction figure to this file");

  // verify
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> v_suites, v_domains;
  std::size_t v_samples = 10000;
  std::optional<std::uint64_t> v_seed;
  double v_tol = 1e-9;
  unsigned v_threads = 0;
  std::string v_json;
  ver->add_option("--suite", v_suites, "Suite name (repeatable); default all")
      ->check(CLI::IsMember(suite_names()));
  ver->add_option("--samples", v_samples, "Pairs per sampled suite");
  ver->add_option("--seed", v_seed, "Random seed (overrides ANGLES_SEED)");
  ver->add_option("--tolerance", v_tol, "Scale-free violation tolerance");
  ver->add_option("--threads", v_threads, "Worker threads, 0 for all cores");
  ver->add_option("--domain", v_domains, "Domain for convex-comparison (repeatable)");
  ver->add_option("--json", v_json, "Write the JSON report to this file");

  // constants
  auto* con = app.add_subcommand("constants", "Table of distortion constants");
  std::vector<double> c_k{1.0, 1.25, 1.5, 2.0, 4.0};
  std::vector<int> c_n{2, 3};
  bool c_json = false;
  con->add_option("--K", c_k, "Dilatations k1,k2,...")->delimiter(',');
  con->add_option("--n", c_n, "Dimensions n1,n2,...")->delimiter(',');
  con->add_flag("--json", c_json, "Print JSON instead of a table");

  // counterexample
  auto* cex = app.add_subcommand("counterexample", "Counterexample tables");
  std::string x_which;
  int x_kmax = 10;
  bool x_json = false;
  cex->add_option("which", x_which, "punctured | analytic")->required()->check(CLI::IsMember({"punctured", "analytic"}));
  cex->add_option("--kmax", x_kmax, "Largest k");
  cex->add_flag("--json", x_json, "Print JSON instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*metric) {
      const Domain d = parse_domain(m_domain);
      const Point x = parse_point(m_x, "--x");
      const Point y = parse_point(m_y, "--y");
      Json out{{"metric", m_kind}, {"domain", to_json(d)}, {"x", to_json(x)}, {"y", to_json(y)}};
      if (m_kind == "v" || m_kind == "s") {
        const MetricReport r = m_kind == "v" ? v_metric(d, x, y) : s_metric(d, x, y);
        out.update(to_json(r));
        if (m_oracle) {
          const MetricReport b =
              brute_force_sup(d, x, y, m_kind == "v" ? Functional::Angle : Functional::Ratio, 4096);
          out["oracle"] = b.value;
          out["difference"] = b.value - r.value;
        }
      } else {
        if (m_oracle) throw ConfigError("--oracle: only available for v and s");
        if (m_kind == "j") {
          require_inside(d, x, "j_metric");
          require_inside(d, y, "j_metric");
          out["value"] = j_metric(d, x, y);
        } else if (std::holds_alternative<HalfPlane>(d)) {
          out["value"] = rho(x, y, Model::HalfPlane);
        } else if (std::holds_alternative<UnitDisk>(d)) {
          out["value"] = rho(x, y, Model::Disk);
        } else {
          throw ConfigError("--metric rho: needs the disk or the half-plane");
        }
        out["method"] = "closed-form";
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*ext) {
      const Model model = e_model == "disk" ? Model::Disk : Model::HalfPlane;
      const Point x = parse_point(e_x, "--x");
      const Point y = parse_point(e_y, "--y");
      const ExtremalResult r = extremal(x, y, model);
      std::cout << to_json(r).dump(2) << "\n";
      if (!e_svg.empty()) {
        std::ofstream f(e_svg);
        if (!f) throw ConfigError("--svg: cannot open '" + e_svg + "'");
        f << construction_svg(x, y, r);
      }
      return 0;
    }

    if (*ver) {
      SuiteConfig cfg;
      cfg.seed = v_seed ? *v_seed : seed_from_environment();
      cfg.samples = v_samples;
      cfg.tolerance = v_tol;
      cfg.threads = v_threads;
      cfg.suites = v_suites;
      for (std::size_t i = 0; i < v_domains.size(); ++i) {
        try {
          cfg.domains.push_back(parse_domain(v_domains[i]));
        } catch (const ConfigError& e) {
          throw ConfigError("--domain #" + std::to_string(i + 1) + ": " + e.what());
        }
      }
      const VerificationReport rep = run_suite(cfg);
      std::printf("%-26s %10s %10s %14s\n", "suite", "checked", "violations", "worst_margin");
      for (const auto& [name, s] : rep.suites)
        std::printf("%-26s %10zu %10zu %14.6e\n", name.c_str(), s.checked, s.violations, s.worst_margin);
      std::printf("seed %llu, wall time %.2f s, %s\n", static_cast<unsigned long long>(rep.seed), rep.wall_seconds,
                  rep.passed() ? "all checks passed" : "VIOLATIONS FOUND");
      if (!v_json.empty()) {
        std::ofstream f(v_json);
        if (!f) throw ConfigError("--json: cannot open '" + v_json + "'");
        f << to_json(rep).dump(2) << "\n";
      }
      return rep.passed() ? 0 : kExitViolations;
    }

    if (*con) {
      Json rows = Json::array();
      if (!c_json) std::printf("%6s %3s %10s %8s %22s %22s %14s %14s\n", "K", "n", "alpha", "lambda", "t0", "t1", "C1", "C2");
      for (double k : c_k) {
        for (int n : c_n) {
          const DistortionConstants c = constants(k, n);
          rows.push_back(to_json(c));
          if (!c_json)
            std::printf("%6.3g %3d %10.6f %8.4f %22.15e %22.15e %14.8g %14.8g\n", c.K, c.n, c.alpha, c.lambda, c.t0, c.t1,
                        c.C1, c.C2);
        }
      }
      if (c_json) std::cout << rows.dump(2) << "\n";
      return 0;
    }

    if (*cex) {
      Json rows = Json::array();
      if (x_which == "punctured") {
        if (!x_json) std::printf("%5s %20s %20s %16s\n", "k", "s", "v", "s/v");
        for (const PuncturedRow& r : punctured_table(x_kmax)) {
          rows.push_back({{"k", r.k}, {"s", r.s}, {"v", r.v}, {"ratio", r.ratio}, {"s_closed", r.s_closed},
                          {"v_closed", r.v_closed}});
          if (!x_json)
            std::cout << fmt("%5.0f", r.k) << fmt(" %20.15f", r.s) << fmt(" %20.15f", r.v) << fmt(" %16.8f", r.ratio)
                      << "\n";
        }
      } else {
        if (!x_json) std::printf("%5s %20s %20s\n", "k", "s_before", "s_after");
        for (const AnalyticRow& r : analytic_table(x_kmax)) {
          rows.push_back({{"k", r.k}, {"r_k", r.r_k}, {"r_next", r.r_next}, {"s_before", r.s_before},
                          {"s_after", r.s_after}, {"s_before_closed", r.s_before_closed},
                          {"s_after_closed", r.s_after_closed}});
          if (!x_json)
            std::cout << fmt("%5.0f", r.k) << fmt(" %20.15f", r.s_before) << fmt(" %20.15f", r.s_after) << "\n";
        }
      }
      if (x_json) std::cout << rows.dump(2) << "\n";
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
