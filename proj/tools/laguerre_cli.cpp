// laguerre: command-line front end for transforms, operator calculus,
// weighted norms, membership classification and the verification suite.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "laguerre/coefficient_field.hpp"
#include "laguerre/decay_fit.hpp"
#include "laguerre/error.hpp"
#include "laguerre/fields.hpp"
#include "laguerre/io.hpp"
#include "laguerre/operator.hpp"
#include "laguerre/parallel.hpp"
#include "laguerre/quadrature.hpp"
#include "laguerre/seminorms.hpp"
#include "laguerre/sequence_norms.hpp"
#include "laguerre/transform.hpp"
#include "laguerre/verify.hpp"

namespace {

using namespace laguerre;

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kVerifyFailed = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::size_t dim = 1;
  std::string truncation_kind = "total";
  std::uint32_t degree = 10;
  std::size_t nodes = 0;  // 0 selects default_rule_size(degree)
  bool allow_small_rule = false;
  double alpha = 1.0;
  double h = 1.0;
  std::string p = "2";
  std::uint32_t power = 1;
  std::uint32_t nmax = 60;
  double time = 0.0;
  double floor = kDefaultFitFloor;
  std::string fn;
  std::string in;
  std::string out;
  std::string points;
  std::string suite = "all";
  unsigned threads = 0;
  bool verbose = false;

  std::size_t rule_size() const { return nodes == 0 ? default_rule_size(degree) : nodes; }

  void validate() const {
    if (subcommand == "analyze" && !allow_small_rule && rule_size() < std::size_t{degree} + 1) {
      throw DomainError("--nodes " + std::to_string(rule_size()) + " is below degree+1 = " +
                        std::to_string(degree + 1) + "; pass --allow-small-rule to override");
    }
  }
};

std::string num(double v) { return io::format_double(v); }

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + cfg.out + "' for writing");
  file << text;
  if (!file) throw std::runtime_error("write to '" + cfg.out + "' failed");
}

CoefficientField load(const std::string& path) {
  if (path.empty()) throw UsageError("--in is required");
  if (path == "-") return io::read_coefficients(std::cin);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return io::read_coefficients(file);
}

std::string coefficients_text(const CoefficientField& a) {
  std::ostringstream os;
  io::write_coefficients(os, a);
  return os.str();
}

double norm_index(const std::string& p) {
  if (p == "inf") return std::numeric_limits<double>::infinity();
  return io::parse_double(p);
}

int run_quad(const RunConfig& cfg) {
  const auto rule = gauss_laguerre_rule(cfg.nodes == 0 ? 16 : cfg.nodes);
  std::ostringstream os;
  if (cfg.dim == 1) {
    io::write_rule_csv(os, rule);
  } else {
    for (std::size_t a = 1; a <= cfg.dim; ++a) os << 'x' << a << ',';
    os << "weight,log_modified_weight\n";
    const std::size_t K = rule.size();
    std::vector<std::size_t> digit(cfg.dim, 0);
    bool done = false;
    while (!done) {
      double log_w = 0.0;
      double log_mw = 0.0;
      for (std::size_t a = 0; a < cfg.dim; ++a) {
        os << num(rule.nodes[digit[a]]) << ',';
        log_mw += rule.log_modified_weights[digit[a]];
        log_w += rule.log_modified_weights[digit[a]] - rule.nodes[digit[a]];
      }
      os << num(std::exp(log_w)) << ',' << num(log_mw) << '\n';
      done = true;
      for (std::size_t a = cfg.dim; a-- > 0;) {
        if (++digit[a] < K) {
          done = false;
          break;
        }
        digit[a] = 0;
      }
    }
  }
  emit(cfg, os.str());
  return kOk;
}

int run_analyze(const RunConfig& cfg) {
  const Truncation truncation{parse_truncation_kind(cfg.truncation_kind), cfg.degree};
  std::optional<ScalarField> field;
  if (!cfg.in.empty()) {
    field = series_field(load(cfg.in));
  } else if (!cfg.fn.empty()) {
    field = builtin_field(cfg.fn, cfg.dim);
  } else {
    throw UsageError("analyze needs --fn or --in");
  }
  const auto rule = gauss_laguerre_rule(cfg.rule_size());
  AnalyzeOptions options;
  options.allow_small_rule = cfg.allow_small_rule;
  emit(cfg, coefficients_text(analyze(*field, truncation, rule, options)));
  return kOk;
}

int run_synthesize(const RunConfig& cfg) {
  const auto a = load(cfg.in);
  if (cfg.points.empty()) throw UsageError("--points is required");
  std::ifstream file(cfg.points);
  if (!file) throw UsageError("cannot open '" + cfg.points + "'");
  const auto points = io::read_points_csv(file, a.dim());
  std::ostringstream os;
  io::write_values_csv(os, points, synthesize(a, points));
  emit(cfg, os.str());
  return kOk;
}

int run_operator_apply(const RunConfig& cfg) {
  emit(cfg, coefficients_text(apply_E_spectral(load(cfg.in), cfg.power)));
  return kOk;
}

int run_propagate(const RunConfig& cfg) {
  emit(cfg, coefficients_text(semigroup_propagate(load(cfg.in), cfg.time)));
  return kOk;
}

int run_norms(const RunConfig& cfg) {
  const auto a = load(cfg.in);
  const SpaceParams params{cfg.alpha, cfg.h, SpaceKind::Roumieu};
  params.validate();
  const double p = norm_index(cfg.p);
  std::ostringstream os;
  os << "alpha " << num(cfg.alpha) << '\n'
     << "h " << num(cfg.h) << '\n'
     << "p " << cfg.p << '\n'
     << "norm " << num(weighted_seq_norm(a, params, p)) << '\n'
     << "log_norm " << num(log_weighted_seq_norm(a, params, p)) << '\n'
     << "l2_norm " << num(parseval_l2_norm(a)) << '\n';
  emit(cfg, os.str());
  return kOk;
}

int run_eta(const RunConfig& cfg) {
  const auto a = load(cfg.in);
  const auto report = eta_seminorm(a, cfg.alpha, cfg.h, cfg.nmax);
  std::ostringstream os;
  os << "alpha " << num(cfg.alpha) << '\n'
     << "h " << num(cfg.h) << '\n'
     << "nmax " << cfg.nmax << '\n'
     << "value " << num(report.value) << '\n'
     << "log_value " << num(report.log_value) << '\n'
     << "argmax " << report.argmax << '\n'
     << "growth " << (report.growth ? "true" : "false") << '\n';
  if (cfg.verbose) {
    for (std::size_t i = 0; i < report.log_ratios.size(); ++i) {
      os << "log_ratio " << i + 1 << ' ' << num(report.log_ratios[i]) << '\n';
    }
  }
  emit(cfg, os.str());
  return kOk;
}

int run_classify(const RunConfig& cfg) {
  const auto a = load(cfg.in);
  ClassifyOptions options;
  options.floor = cfg.floor;
  const auto report = classify_pilipovic(a, cfg.alpha, options);
  std::ostringstream os;
  os << "alpha " << num(report.alpha) << '\n'
     << "critical_exponent " << num(report.critical_exponent) << '\n'
     << "finitely_supported " << (report.finitely_supported ? "true" : "false") << '\n';
  if (report.fit) {
    os << "alpha_hat " << num(report.fit->alpha_hat) << '\n'
       << "t_hat " << num(report.fit->t_hat) << '\n'
       << "c_hat " << num(report.fit->c_hat) << '\n'
       << "residual " << num(report.fit->residual) << '\n'
       << "support_size " << report.fit->support_size << '\n'
       << "power_law_residual " << num(report.power_law_residual) << '\n';
  } else {
    os << "alpha_hat none\nc_hat none\nresidual none\n";
  }
  for (std::size_t i = 0; i < report.boundary_rates.size(); ++i) {
    os << "boundary_rate " << i << ' ' << num(report.boundary_rates[i]) << '\n';
  }
  os << "verdict " << to_string(report.verdict) << '\n'
     << "confidence " << num(report.confidence) << '\n'
     << "detail " << report.detail << '\n';
  emit(cfg, os.str());
  return kOk;
}

int run_verify(const RunConfig& cfg) {
  const auto checks = verify::run_suite(cfg.suite);
  emit(cfg, verify::format_report(checks));
  return verify::all_passed(checks) ? kOk : kVerifyFailed;
}

int dispatch(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.threads > 0) parallel::set_thread_count(cfg.threads);
  if (cfg.subcommand == "quad") return run_quad(cfg);
  if (cfg.subcommand == "analyze") return run_analyze(cfg);
  if (cfg.subcommand == "synthesize") return run_synthesize(cfg);
  if (cfg.subcommand == "operator apply") return run_operator_apply(cfg);
  if (cfg.subcommand == "propagate") return run_propagate(cfg);
  if (cfg.subcommand == "norms") return run_norms(cfg);
  if (cfg.subcommand == "eta") return run_eta(cfg);
  if (cfg.subcommand == "classify") return run_classify(cfg);
  if (cfg.subcommand == "verify") return run_verify(cfg);
  throw UsageError("no subcommand given");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laguerre spectral calculus on the positive orthant"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--threads", cfg.threads, "Worker threads (default: LAGUERRE_THREADS or all cores)");

  auto* quad = app.add_subcommand("quad", "Emit a Gauss-Laguerre rule as CSV");
  quad->add_option("--nodes", cfg.nodes, "Rule size K")->required()->check(CLI::Range(1, 512));
  quad->add_option("--dim", cfg.dim, "Emit the d-fold tensor grid")->check(CLI::Range(1, 6));
  quad->add_option("--out", cfg.out, "Output path (default stdout)");

  auto* analyze_cmd = app.add_subcommand("analyze", "Laguerre coefficients of a field");
  auto* source = analyze_cmd->add_option_group("source");
  source->add_option("--fn", cfg.fn, "Built-in field: exp-decay, l:<n1,..>, poly-exp:<c0,c1,..>");
  source->add_option("--in", cfg.in, "Coefficient file whose series is re-analyzed");
  source->require_option(1);
  analyze_cmd->add_option("--dim", cfg.dim, "Dimension")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--degree", cfg.degree, "Truncation degree M")->required();
  analyze_cmd->add_option("--nodes", cfg.nodes, "Rule size K (default M+16)")
      ->check(CLI::Range(1, 512));
  analyze_cmd->add_option("--truncation", cfg.truncation_kind, "total or box")
      ->check(CLI::IsMember({"total", "box"}));
  analyze_cmd->add_flag("--allow-small-rule", cfg.allow_small_rule, "Permit K < M+1");
  analyze_cmd->add_option("--out", cfg.out, "Output path (default stdout)");

  auto* synth = app.add_subcommand("synthesize", "Evaluate a coefficient file at points");
  synth->add_option("--in", cfg.in, "Coefficient file")->required();
  synth->add_option("--points", cfg.points, "Points CSV, one point per row")->required();
  synth->add_option("--out", cfg.out, "Values CSV (default stdout)");

  auto* op = app.add_subcommand("operator", "Laguerre operator");
  op->require_subcommand(1);
  auto* apply = op->add_subcommand("apply", "Apply E^N in coefficient space");
  apply->add_option("--power", cfg.power, "N")->required();
  apply->add_option("--in", cfg.in, "Coefficient file")->required();
  apply->add_option("--out", cfg.out, "Output path (default stdout)");

  auto* prop = app.add_subcommand("propagate", "Apply the semigroup e^{-tE}");
  prop->add_option("--time", cfg.time, "t >= 0")->required();
  prop->add_option("--in", cfg.in, "Coefficient file")->required();
  prop->add_option("--out", cfg.out, "Output path (default stdout)");

  auto* norms = app.add_subcommand("norms", "Weighted sequence norm");
  norms->add_option("--in", cfg.in, "Coefficient file")->required();
  norms->add_option("--alpha", cfg.alpha, "alpha > 0")->required();
  norms->add_option("--h", cfg.h, "h > 0")->required();
  norms->add_option("--p", cfg.p, "1, 2 or inf")->check(CLI::IsMember({"1", "2", "inf"}));
  norms->add_option("--out", cfg.out, "Output path (default stdout)");

  auto* eta = app.add_subcommand("eta", "Iterate seminorm");
  eta->add_option("--in", cfg.in, "Coefficient file")->required();
  eta->add_option("--alpha", cfg.alpha, "alpha >= 0")->required();
  eta->add_option("--h", cfg.h, "h > 0")->required();
  eta->add_option("--nmax", cfg.nmax, "Largest iterate N")->check(CLI::PositiveNumber);
  eta->add_flag("-v,--verbose", cfg.verbose, "Print every log ratio");
  eta->add_option("--out", cfg.out, "Output path (default stdout)");

  auto* classify = app.add_subcommand("classify", "Membership report");
  classify->add_option("--in", cfg.in, "Coefficient file")->required();
  classify->add_option("--alpha", cfg.alpha, "alpha > 0")->required();
  classify->add_option("--floor", cfg.floor, "Coefficients at or below are zero");
  classify->add_option("--out", cfg.out, "Output path (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  verify_cmd->add_option("--suite", cfg.suite, "core, quadrature, transform, operator, analysis, all")
      ->check(CLI::IsMember({"core", "quadrature", "transform", "operator", "analysis", "all"}));
  verify_cmd->add_option("--out", cfg.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  for (auto* sub : app.get_subcommands()) {
    cfg.subcommand = sub->get_name();
    for (auto* nested : sub->get_subcommands()) cfg.subcommand += " " + nested->get_name();
  }

  try {
    return dispatch(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const NonFiniteError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
}
