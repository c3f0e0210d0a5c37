// Command-line front end: classification queries, domain tables, density and
// divergence grids to CSV, maximum likelihood fits from observation files,
// cumulant reports, numeric normalization, and the verification suites.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kled/divergence.hpp"
#include "kled/io.hpp"
#include "kled/kled.hpp"
#include "kled/logistic.hpp"
#include "kled/verify.hpp"

namespace {

using nlohmann::json;

struct GridArg {
  double lo = -6.0;
  double hi = 6.0;
  int count = 241;
};

GridArg parse_grid(const std::string& text) {
  GridArg g;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d", &g.lo, &g.hi, &g.count) != 3) {
    throw CLI::ValidationError("--grid", "expected MIN:MAX:N");
  }
  if (g.count < 2) throw CLI::ValidationError("--grid", "N must be >= 2");
  if (!(g.lo < g.hi)) throw CLI::ValidationError("--grid", "MIN must be < MAX");
  return g;
}

std::vector<double> grid_points(const GridArg& g) {
  std::vector<double> xs(g.count);
  for (int i = 0; i < g.count; ++i) {
    xs[i] = g.lo + (g.hi - g.lo) * i / double(g.count - 1);
  }
  return xs;
}

kled::Branch parse_branch(const std::string& s) {
  if (s == "pos") return kled::Branch::Positive;
  if (s == "neg") return kled::Branch::Negative;
  throw CLI::ValidationError("--branch", "expected pos or neg");
}

// Every value cell uses 17 significant digits so identical runs produce
// byte-identical files.
std::string cell(double v) { return kled::format_real(v); }

struct OutputSink {
  std::unique_ptr<std::ofstream> file;
  std::ostream* out = &std::cout;

  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file = std::make_unique<std::ofstream>(path);
      if (!*file) throw std::runtime_error("cannot open output file " + path);
      out = file.get();
    }
  }
  std::ostream& stream() { return *out; }
};

struct CurveSeries {
  std::string name;
  std::function<double(double)> value;  // throws DomainError outside domain
};

void emit_csv(std::ostream& os, const std::string& xname, const std::vector<double>& xs,
              const std::vector<CurveSeries>& series) {
  os << xname;
  for (const auto& s : series) os << "," << s.name;
  os << "\n";
  for (double x : xs) {
    os << cell(x);
    for (const auto& s : series) {
      os << ",";
      try {
        os << cell(s.value(x));
      } catch (const kled::DomainError&) {
        // outside the effective domain: empty cell
      }
    }
    os << "\n";
  }
}

int cmd_classify(const std::string& beta_text, std::ostream& os) {
  kled::Exponent beta = kled::parse_exponent(beta_text);
  os << "beta = " << beta.str() << "\n";
  kled::KledRow row = kled::kled_classification(beta);
  os << "distribution = " << row.distribution << "\n";
  os << "condition = " << row.beta_condition << "\n";
  os << "K = " << row.order.str() << "\n";
  os << "support = " << row.support << "\n";
  os << "dom Phi = " << row.dom_phi << "\n";
  os << "dom Psi = " << row.dom_psi << "\n";
  os << "dom grad Psi = " << row.dom_grad1 << "\n";
  os << "dom grad^2 Psi = " << row.dom_grad2 << "\n";
  os << "dom grad^K Psi = " << row.dom_gradK << "\n";
  os << "classic Tweedie dom Psi = " << row.tweedie_dom_psi << "\n";
  return 0;
}

int cmd_domains(const std::string& beta_text, kled::Branch branch, std::ostream& os) {
  kled::Exponent beta = kled::parse_exponent(beta_text);
  os << "beta = " << beta.str() << "\n";
  os << "dom exp_{2-beta} = " << kled::domain_exp(beta, branch).str() << "\n";
  os << "dom ln_{2-beta} = " << kled::domain_log(beta, branch).str() << "\n";
  os << "dom Phi = " << kled::domain_phi(beta, branch).str() << "\n";
  os << "dom Psi = " << kled::domain_psi(beta, branch).str() << "\n";
  kled::QuasiDomain q = kled::quasi_domain(beta, branch);
  os << "quasi Omega_L = " << q.omega_l.str() << "\n";
  os << "quasi Omega_R = " << q.omega_r.str() << "\n";
  for (int k = 1; k <= 5; ++k) {
    os << "dom grad^" << k << " Psi = ";
    try {
      os << kled::cumulant_domain(beta, k, branch).str();
    } catch (const kled::DomainError&) {
      os << "-";
    }
    os << "\n";
  }
  return 0;
}

int cmd_eval(const std::string& family, const std::string& beta_text,
             const std::string& alpha_text, double c, kled::Branch branch, double sigma2,
             double second, const GridArg& grid, std::ostream& os) {
  kled::Exponent beta = kled::parse_exponent(beta_text);
  std::vector<CurveSeries> series;
  std::string name = family;
  if (family == "logdensity") {
    kled::KledModel model = kled::make_model(beta, sigma2, branch);
    series.push_back({"logdensity", [model, second](double b) {
                        return kled::log_density_unnormalized(b, second, model);
                      }});
  } else if (family == "logistic-loss") {
    kled::LogisticParams params =
        kled::make_logistic_params(kled::parse_exponent(alpha_text), beta, c);
    series.push_back(
        {"logistic-loss", [params](double t) { return kled::loss(t, params); }});
  } else {
    kled::DivergenceSpec spec;
    spec.pair = kled::make_legendre_pair(beta, branch);
    spec.sigma2 = sigma2;
    if (family == "bregman") spec.family = kled::DivergenceFamily::GenericBregman;
    else if (family == "canonical") spec.family = kled::DivergenceFamily::CanonicalForm;
    else if (family == "bregman-beta") spec.family = kled::DivergenceFamily::BregmanBeta;
    else if (family == "bregman-tweedie") spec.family = kled::DivergenceFamily::BregmanTweedie;
    else if (family == "beta-divergence") spec.family = kled::DivergenceFamily::BetaDivergence;
    else if (family == "quasi-likelihood") spec.family = kled::DivergenceFamily::QuasiLikelihood;
    else throw CLI::ValidationError("--family", "unknown family " + family);
    series.push_back(
        {family, [spec, second](double x) { return kled::evaluate(spec, x, second); }});
  }
  emit_csv(os, "x", grid_points(grid), series);
  return 0;
}

std::vector<CurveSeries> figure1_series(double b_fixed, const std::vector<kled::Rational>& betas,
                                        double sigma2) {
  std::vector<CurveSeries> series;
  for (const auto& r : betas) {
    kled::LegendrePair pair = kled::make_legendre_pair(kled::exponent_from(r));
    series.push_back({"beta=" + r.str(), [pair, b_fixed, sigma2](double mu) {
                        return std::exp(-kled::bregman(pair, b_fixed, mu, kled::Side::Psi) /
                                        sigma2);
                      }});
  }
  return series;
}

std::vector<CurveSeries> figure2_series(bool alpha_sweep, double c) {
  std::vector<CurveSeries> series;
  kled::LogisticParams green =
      kled::make_logistic_params(kled::exponent_from(1), kled::exponent_from(1), c);
  series.push_back({"logistic", [green](double t) { return kled::loss(t, green); }});
  if (alpha_sweep) {
    for (int ai = 19; ai >= 11; ai -= 1) {
      kled::LogisticParams p = kled::make_logistic_params(
          kled::exponent_from(kled::Rational(ai, 10)), kled::exponent_from(kled::Rational(7, 10)),
          c);
      series.push_back({"alpha=" + kled::Rational(ai, 10).str(),
                        [p](double t) { return kled::loss(t, p); }});
    }
  } else {
    for (int bi = 7; bi >= -1; bi -= 1) {
      kled::LogisticParams p = kled::make_logistic_params(
          kled::exponent_from(kled::Rational(11, 10)), kled::exponent_from(kled::Rational(bi, 10)),
          c);
      series.push_back({"beta=" + kled::Rational(bi, 10).str(),
                        [p](double t) { return kled::loss(t, p); }});
    }
  }
  return series;
}

int cmd_curves(const std::string& figure, const GridArg& grid, std::ostream& os) {
  using kled::Rational;
  const std::vector<Rational> low = {{2, 1}, {16, 9}, {14, 9}, {12, 9}, {10, 9}};
  const std::vector<Rational> high = {{2, 1}, {20, 9}, {22, 9}, {24, 9}, {26, 9}, {28, 9}, {30, 9}};
  std::vector<CurveSeries> series;
  std::string xname = "mu";
  if (figure == "1a") series = figure1_series(0.0, low, 3.0);
  else if (figure == "1b") series = figure1_series(2.0, low, 3.0);
  else if (figure == "1c") series = figure1_series(0.0, high, 3.0);
  else if (figure == "1d") series = figure1_series(2.0, high, 3.0);
  else if (figure == "2a") { series = figure2_series(true, 1.0); xname = "theta"; }
  else if (figure == "2b") { series = figure2_series(false, 1.0); xname = "theta"; }
  else if (figure == "2c") { series = figure2_series(true, 4.0); xname = "theta"; }
  else if (figure == "2d") { series = figure2_series(false, 4.0); xname = "theta"; }
  else throw CLI::ValidationError("--figure", "expected one of 1a,1b,1c,1d,2a,2b,2c,2d");
  emit_csv(os, xname, grid_points(grid), series);
  return 0;
}

int cmd_fit(const std::string& input, const std::string& beta_text, double sigma2,
            kled::Branch branch, std::ostream& os) {
  kled::Exponent beta = kled::parse_exponent(beta_text);
  kled::KledModel model = kled::make_model(beta, sigma2, branch);
  std::ifstream in(input);
  if (!in) throw std::runtime_error("cannot open " + input);
  std::vector<kled::Observation> rows = kled::read_observations_rows(in);
  if (rows.empty()) throw std::runtime_error("no observations in " + input);
  std::vector<double> values;
  values.reserve(rows.size());
  for (const auto& obs : rows) {
    if (!model.contains_observation(obs.value)) {
      throw std::runtime_error("row " + std::to_string(obs.row) + ": observation " +
                               cell(obs.value) + " outside the model support " +
                               model.support.str());
    }
    values.push_back(obs.value);
  }
  kled::MleResult r = kled::mle_theta(values, model);
  os << "theta_hat = " << r.theta_hat.str() << "\n";
  os << "mu_hat = " << cell(r.b_avg) << "\n";
  os << "variance = ";
  if (r.theta_hat.finite()) {
    try {
      os << cell(kled::variance(model, r.theta_hat.value()));
    } catch (const kled::DomainError&) {
      os << "-";
    }
  } else {
    os << "-";
  }
  os << "\n";
  os << "boundary = " << (r.boundary ? "true" : "false") << "\n";
  return 0;
}

int cmd_cumulants(const std::string& beta_text, double sigma2, double theta, int kmax,
                  kled::Branch branch, std::ostream& os) {
  kled::Exponent beta = kled::parse_exponent(beta_text);
  kled::KledModel model = kled::make_model(beta, sigma2, branch);
  os << "K = " << model.order.str() << "\n";
  os << "k,value\n";
  for (int k = 1; k <= kmax; ++k) {
    os << k << ",";
    try {
      os << cell(kled::kth_cumulant(theta, k, model));
    } catch (const kled::DomainError&) {
      os << "-";
    }
    os << "\n";
  }
  try {
    os << "variance = " << cell(kled::variance(model, theta)) << "\n";
  } catch (const kled::DomainError&) {
    os << "variance = -\n";
  }
  return 0;
}

int cmd_normalize(const std::string& beta_text, double sigma2, double theta,
                  const std::string& weight, kled::Branch branch, std::ostream& os) {
  kled::Exponent beta = kled::parse_exponent(beta_text);
  kled::KledModel model = kled::make_model(beta, sigma2, branch);
  kled::BaseWeightKind kind = kled::BaseWeightKind::Trivial;
  if (weight == "trivial") kind = kled::BaseWeightKind::Trivial;
  else if (weight == "poisson") kind = kled::BaseWeightKind::PoissonFactorial;
  else if (weight == "gamma") kind = kled::BaseWeightKind::GammaShape;
  else if (weight == "invgauss") kind = kled::BaseWeightKind::InverseGaussian;
  else throw CLI::ValidationError("--weight", "expected trivial, poisson, gamma or invgauss");
  kled::NormalizationResult z = kled::normalize(model, theta, kind);
  switch (z.status) {
    case kled::NormalizationResult::Status::Ok:
      os << "Z = " << cell(z.value) << "\n";
      return 0;
    case kled::NormalizationResult::Status::NotNormalizable:
      os << "not normalizable: " << z.note << "\n";
      return 0;
    case kled::NormalizationResult::Status::Failure: break;
  }
  os << "quadrature failure: " << z.note << "\n";
  return 3;
}

int cmd_verify(const std::string& suite, double tol, const std::vector<std::string>& betas,
               bool as_json, std::ostream& os) {
  kled::VerifyOptions opt;
  if (tol > 0) {
    opt.duality_tol = tol;
    opt.gradient_tol = tol;
    opt.normalization_tol = tol;
    opt.mle_tol = tol;
  }
  for (const auto& b : betas) opt.betas.push_back(kled::parse_exponent(b));
  std::vector<kled::SuiteReport> reports;
  if (suite == "all") {
    reports = kled::run_all_suites(opt);
  } else {
    reports.push_back(kled::run_suite(suite, opt));
  }
  bool all_ok = true;
  if (as_json) {
    json doc;
    doc["suites"] = json::array();
    for (const auto& rep : reports) {
      json js;
      js["name"] = rep.suite;
      js["passed"] = rep.passed();
      js["checks"] = json::array();
      for (const auto& c : rep.checks) {
        js["checks"].push_back({{"name", c.name},
                                {"passed", c.passed},
                                {"worst", c.worst},
                                {"tolerance", c.tolerance},
                                {"detail", c.detail}});
      }
      doc["suites"].push_back(js);
      all_ok = all_ok && rep.passed();
    }
    doc["passed"] = all_ok;
    os << doc.dump(2) << "\n";
  } else {
    for (const auto& rep : reports) {
      os << "suite " << rep.suite << "\n";
      for (const auto& c : rep.checks) {
        os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << " (worst "
           << kled::format_real(c.worst) << ", tol " << kled::format_real(c.tolerance) << ")\n";
        if (!c.passed && !c.detail.empty()) os << "         " << c.detail << "\n";
      }
      all_ok = all_ok && rep.passed();
    }
    os << (all_ok ? "all checks passed" : "FAILURES present") << "\n";
  }
  return all_ok ? 0 : 1;
}

// Flat key=value configuration: values fill in any option not already given
// on the command line, preserving the flags > config > defaults precedence.
std::vector<std::string> apply_config_file(const std::vector<std::string>& args) {
  std::string path;
  std::vector<std::string> out;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      ++i;
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
    }
  }
  if (path.empty()) return out;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r\n");
    if (a == std::string::npos || line[a] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config line is not key=value: " + line);
    }
    size_t b = line.find_last_not_of(" \t\r\n");
    std::string key = line.substr(a, eq - a);
    std::string value = line.substr(eq + 1, b - eq);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    while (!value.empty() && (value.front() == ' ' || value.front() == '\t')) value.erase(0, 1);
    std::string flag = "--" + key;
    bool given = false;
    for (const auto& arg : out) {
      if (arg == flag || arg.rfind(flag + "=", 0) == 0) given = true;
    }
    if (given) continue;
    out.push_back(flag);
    if (!(value == "true" && (key == "json"))) out.push_back(value);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K-LED toolkit: Legendre exponential dispersion models with power variance"};
  app.require_subcommand(1);

  std::string beta = "2", alpha = "1", weight = "trivial", branch_s = "pos";
  std::string input, output, suite = "all", family = "bregman", figure = "1a", grid_s;
  std::string config_path;
  double c = 1.0, sigma2 = 1.0, theta = 0.0, second = 0.0, tol = 0.0;
  int kmax = 4;
  bool as_json = false;
  std::vector<std::string> verify_betas;

  auto add_common = [&](CLI::App* sub, bool needs_beta) {
    sub->add_option("--config", config_path,
                    "flat key=value configuration file (flags take precedence)");
    if (needs_beta) sub->add_option("--beta", beta, "exponent, as p/q or a decimal");
    sub->add_option("--branch", branch_s, "dual-region selector: pos or neg")
        ->check(CLI::IsMember({"pos", "neg"}));
    sub->add_option("--output", output, "output path (default stdout)");
    return sub;
  };

  auto* sc_classify = add_common(app.add_subcommand("classify", "family characterization row"),
                                 true);
  auto* sc_domains = add_common(app.add_subcommand("domains", "effective domains for beta"), true);

  auto* sc_eval = add_common(app.add_subcommand("eval", "divergence/density grid to CSV"), true);
  sc_eval->add_option("--family", family,
                      "bregman, canonical, bregman-beta, bregman-tweedie, beta-divergence, "
                      "quasi-likelihood, logdensity, logistic-loss");
  sc_eval->add_option("--second", second, "fixed second argument (theta for logdensity)");
  sc_eval->add_option("--sigma2", sigma2, "dispersion")->check(CLI::PositiveNumber);
  sc_eval->add_option("--alpha", alpha, "outer exponent of the extended logistic loss");
  sc_eval->add_option("--c", c, "raw-form constant of the extended logistic loss")
      ->check(CLI::PositiveNumber);
  sc_eval->add_option("--grid", grid_s, "grid MIN:MAX:N over the first argument");

  auto* sc_curves = add_common(app.add_subcommand("curves", "figure sweeps to CSV"), false);
  sc_curves->add_option("--figure", figure, "1a,1b,1c,1d (densities) or 2a,2b,2c,2d (losses)");
  sc_curves->add_option("--grid", grid_s, "grid MIN:MAX:N");

  auto* sc_fit = add_common(app.add_subcommand("fit", "maximum likelihood from a CSV column"),
                            true);
  sc_fit->add_option("--input", input, "observations CSV (single column, optional header 'b')")
      ->required();
  sc_fit->add_option("--sigma2", sigma2, "dispersion")->check(CLI::PositiveNumber);

  auto* sc_cumulants = add_common(app.add_subcommand("cumulants", "cumulant report at theta"),
                                  true);
  sc_cumulants->add_option("--sigma2", sigma2, "dispersion")->check(CLI::PositiveNumber);
  sc_cumulants->add_option("--theta", theta, "canonical parameter");
  sc_cumulants->add_option("--kmax", kmax, "highest order to report")->check(CLI::PositiveNumber);

  auto* sc_normalize = add_common(app.add_subcommand("normalize", "numeric partition value"),
                                  true);
  sc_normalize->add_option("--sigma2", sigma2, "dispersion")->check(CLI::PositiveNumber);
  sc_normalize->add_option("--theta", theta, "canonical parameter");
  sc_normalize->add_option("--weight", weight, "trivial, poisson, gamma or invgauss");

  auto* sc_verify = add_common(app.add_subcommand("verify", "run the verification suites"),
                               false);
  sc_verify->add_option("--suite", suite, "all, duality, gradient, tables, normalization, mle");
  sc_verify->add_option("--tol", tol, "tolerance override")->check(CLI::PositiveNumber);
  sc_verify->add_option("--beta", verify_betas, "restrict beta-parameterized suites");
  sc_verify->add_flag("--json", as_json, "machine-readable summary");

  std::vector<std::string> raw_args(argv + 1, argv + argc);
  std::vector<std::string> args;
  try {
    args = apply_config_file(raw_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::vector<const char*> cargv;
  cargv.push_back(argv[0]);
  for (const auto& s : args) cargv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    OutputSink sink(output);
    std::ostream& os = sink.stream();
    kled::Branch branch = parse_branch(branch_s);
    GridArg grid;
    if (!grid_s.empty()) grid = parse_grid(grid_s);

    if (sc_classify->parsed()) return cmd_classify(beta, os);
    if (sc_domains->parsed()) return cmd_domains(beta, branch, os);
    if (sc_eval->parsed()) {
      return cmd_eval(family, beta, alpha, c, branch, sigma2, second, grid, os);
    }
    if (sc_curves->parsed()) return cmd_curves(figure, grid, os);
    if (sc_fit->parsed()) return cmd_fit(input, beta, sigma2, branch, os);
    if (sc_cumulants->parsed()) return cmd_cumulants(beta, sigma2, theta, kmax, branch, os);
    if (sc_normalize->parsed()) return cmd_normalize(beta, sigma2, theta, weight, branch, os);
    if (sc_verify->parsed()) return cmd_verify(suite, tol, verify_betas, as_json, os);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
