// tspec: eigenvalue predictions for Toeplitz matrices and their dense-oracle checks.
//
// Exit codes: 0 success, 1 invalid input or failed validation, 2 internal
// consistency failure.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <json.hpp>

#include "tspec/acceptance.hpp"
#include "tspec/bulk_asymptotics.hpp"
#include "tspec/errors.hpp"
#include "tspec/fh_determinants.hpp"
#include "tspec/gap_asymptotics.hpp"
#include "tspec/report_io.hpp"
#include "tspec/slepian.hpp"
#include "tspec/symbol_config.hpp"

using namespace tspec;

namespace {

struct RunConfig {
  std::string symbol = "tridiag3";
  std::vector<int> n;
  double eps = 0.1;
  std::string out;
  std::string format = "csv";
  std::string report;
  std::optional<double> lambda;
  // dets: a single pure singularity instead of --symbol.
  std::optional<double> fh_alpha;
  std::optional<double> fh_beta;
  double fh_theta = std::numbers::pi;
  // slepian
  double b = 0.0;
  double delta = 1.0 / 16.0;
  double t1 = 8.0 * std::numbers::pi;
  double t2 = 16.0 * std::numbers::pi;
  double s2 = 1.0;
  // verify
  std::vector<int> only;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw PreconditionError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void emit(const RunConfig& cfg, const Table& table) {
  Output out(cfg.out);
  if (cfg.format == "json") {
    write_json(out.stream(), table);
  } else {
    write_csv(out.stream(), table);
  }
}

void require_sizes(const RunConfig& cfg, int min_n) {
  if (cfg.n.empty()) throw PreconditionError("--n needs at least one size");
  for (int n : cfg.n) {
    if (n < min_n) throw PreconditionError("--n values must be at least " + std::to_string(min_n));
  }
}

int cmd_bulk(const RunConfig& cfg) {
  require_sizes(cfg, 4);
  auto sym = load_symbol(cfg.symbol);
  auto* smooth = std::get_if<SmoothUnimodalSymbol>(&sym);
  if (!smooth) throw PreconditionError("bulk: smooth symbol required");
  Table t{{"n", "j", "lambda_hat", "lambda_exact", "abs_error", "phase_residual"}, {}};
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (int n : cfg.n) {
    const auto pred = predict_bulk_spectrum(*smooth, n);
    const auto exact = exact_spectrum(*smooth, n);
    for (const auto& e : pred.entries) {
      const double ex = exact.eigenvalues[e.index - 1];
      t.add({(long long)n, (long long)e.index, e.lam_hat, ex, std::abs(e.lam_hat - ex),
             e.phase_residual});
    }
    const auto rep = corollary_report(*smooth, n, cfg.eps, exact);
    reports.push_back({{"n", rep.n},
                       {"eps", rep.eps},
                       {"a_min", rep.a_min},
                       {"a_max", rep.a_max},
                       {"b_min", rep.b_min},
                       {"b_max", rep.b_max},
                       {"bulk_spacing_min", rep.spacing_min},
                       {"bulk_spacing_max", rep.spacing_max},
                       {"edge_ratios", rep.edge_ratios},
                       {"edge_lower_bound", rep.edge_lower},
                       {"edge_upper_bound", rep.edge_upper}});
  }
  emit(cfg, t);
  std::string report_path = cfg.report;
  if (report_path.empty() && !cfg.out.empty()) report_path = cfg.out + ".corollary.json";
  if (report_path.empty()) {
    std::cerr << reports.dump(2) << '\n';
  } else {
    Output r(report_path);
    r.stream() << reports.dump(2) << '\n';
  }
  return 0;
}

int cmd_gap(const RunConfig& cfg) {
  require_sizes(cfg, 8);
  auto sym = load_symbol(cfg.symbol);
  auto* two = std::get_if<TwoLevelSymbol>(&sym);
  if (!two) throw PreconditionError("gap: two-level symbol required");
  const int q = near_period(*two);
  const int p = two->rational_arc()->p;
  std::cerr << "near period q = " << q << ", index shift p = " << p << '\n';
  Table t{{"n", "k", "lambda_hat", "lambda_exact", "pair_lambda_nq", "distance",
           "distance_times_n_log_n"},
          {}};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int n : cfg.n) {
    const auto pred = predict_gap_spectrum(*two, n, cfg.eps);
    const auto ex = exact_gap_spectrum(*two, two_level_spectrum(*two, n), cfg.eps);
    const auto ex_q = exact_gap_spectrum(*two, two_level_spectrum(*two, n + q), cfg.eps / 2.0);
    const auto match = match_near_periodic(ex, ex_q, q, p);
    std::map<int, double> exact_by_k, pair_by_k;
    for (const auto& e : ex.entries) exact_by_k[e.k] = e.lam;
    for (const auto& pr : match.pairs) pair_by_k[pr.k] = pr.lam_nq;
    std::map<int, double> pred_by_k;
    for (const auto& e : pred.entries) pred_by_k[e.k] = e.lam;
    std::map<int, bool> keys;
    for (auto& [k, v] : pred_by_k) keys[k] = true;
    for (auto& [k, v] : exact_by_k) keys[k] = true;
    const double scale = n * std::log(double(n));
    for (auto& [k, unused] : keys) {
      const double lh = pred_by_k.count(k) ? pred_by_k[k] : nan;
      const double le = exact_by_k.count(k) ? exact_by_k[k] : nan;
      const double lp = pair_by_k.count(k) ? pair_by_k[k] : nan;
      const double d = std::abs(le - lp);
      t.add({(long long)n, (long long)k, lh, le, lp, d, d * scale});
    }
  }
  emit(cfg, t);
  return 0;
}

int cmd_dets(const RunConfig& cfg) {
  require_sizes(cfg, 1);
  for (int n : cfg.n) {
    if (n > 2048) throw PreconditionError("dets: n must be at most 2048");
  }
  // Exact coefficients of F for size n, and the descriptor of F.
  std::function<FourierSeries(int)> coeffs;
  FHDescriptor desc;
  if (cfg.fh_alpha || cfg.fh_beta) {
    const Complex a = cfg.fh_alpha.value_or(0.0), b = cfg.fh_beta.value_or(0.0);
    desc = pure_fh_descriptor(cfg.fh_theta, a, b);
    coeffs = [=](int n) { return pure_fh_coeffs(cfg.fh_theta, a, b, n); };
  } else {
    auto sym = load_symbol(cfg.symbol);
    if (auto* s = std::get_if<SmoothUnimodalSymbol>(&sym)) {
      const SmoothUnimodalSymbol smooth = *s;
      if (cfg.lambda) {
        const double lam = *cfg.lambda;
        desc = shift_smooth(smooth, lam);
        const double th2 = desc.singularities[2].theta;
        coeffs = [=](int n) {
          return raise_beta_coeffs(shift_coeffs(smooth.toeplitz_coeffs(n + 1), lam), th2);
        };
      } else {
        desc.v = smooth.log_coeffs();
        desc.singularities = {{0.0, 0.0, 0.0}};
        coeffs = [=](int n) { return smooth.toeplitz_coeffs(n); };
      }
    } else {
      const auto two = std::get<TwoLevelSymbol>(sym);
      const double lam = cfg.lambda.value_or(0.5 * (1.0 + two.high()));
      desc = shift_two_level(two, lam);
      coeffs = [=](int n) {
        return raise_beta_coeffs(shift_coeffs(two.toeplitz_coeffs(n + 1), lam), two.theta2());
      };
    }
  }
  Table t{{"n", "log_det_exact", "log_det_asymptotic", "rel_error", "fitted_slope"}, {}};
  std::vector<double> ns, errs;
  std::vector<std::vector<Cell>> rows;
  for (int n : cfg.n) {
    const auto asym = asymptotic_log_det(desc, n);
    const auto exact = toeplitz_determinant(coeffs(n), n);
    const double rel = exact.singular ? 1.0 : std::abs(std::exp(exact.log() - asym.log()) - 1.0);
    ns.push_back(n);
    errs.push_back(rel);
    rows.push_back({(long long)n, exact.log_abs, asym.log_magnitude, rel, 0.0});
  }
  double slope = std::numeric_limits<double>::quiet_NaN();
  bool positive = true;
  for (double e : errs) positive = positive && e > 0.0;
  if (ns.size() >= 2 && positive) slope = loglog_slope(ns, errs);
  for (auto& r : rows) {
    r[4] = slope;
    t.add(r);
  }
  emit(cfg, t);
  return 0;
}

int cmd_slepian(const RunConfig& cfg) {
  SlepianSetup base;
  base.b = cfg.b;
  base.delta = cfg.delta;
  base.t1 = cfg.t1;
  base.t2 = cfg.t2;
  base.s2 = cfg.s2;
  std::vector<int> sizes = cfg.n.empty() ? std::vector<int>{256, 1024, 4096} : cfg.n;
  for (int n : sizes) {
    if (n > 8192) throw PreconditionError("slepian: n must be at most 8192");
    validate(base.with_size(n));
  }
  const auto rep = slepian_limit_check(base, sizes);
  std::cerr << "indexing: " << to_string(rep.indexing)
            << (rep.monotone ? ", deviations decreasing" : ", deviations not monotone") << '\n';
  Table t{{"c", "n", "k", "lambda_k", "target", "deviation"}, {}};
  for (const auto& r : rep.rows) {
    t.add({r.c, (long long)r.n, (long long)r.k, r.lambda_k, r.target, r.deviation});
  }
  emit(cfg, t);
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  std::set<int> only(cfg.only.begin(), cfg.only.end());
  bool all = true;
  run_acceptance(only, [&](const CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    all = all && r.passed;
  });
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toeplitz eigenvalue asymptotics and exact checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool with_symbol) {
    if (with_symbol) {
      sub->add_option("--symbol", cfg.symbol,
                      "builtin (tridiag3, expcos, slowdecay, twolevel-p1q4) or config file");
    }
    sub->add_option("--n", cfg.n, "matrix sizes")->delimiter(',');
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* bulk = app.add_subcommand("bulk", "bulk spectrum of a smooth unimodal symbol");
  common(bulk, true);
  bulk->add_option("--eps", cfg.eps, "window parameter for the spacing/edge report");
  bulk->add_option("--report", cfg.report, "corollary report JSON path");

  auto* gap = app.add_subcommand("gap", "gap eigenvalues and near-periodicity of a two-level symbol");
  common(gap, true);
  gap->add_option("--eps", cfg.eps, "distance of I_eps from the levels");

  auto* dets = app.add_subcommand("dets", "exact against asymptotic Toeplitz determinants");
  common(dets, true);
  dets->add_option("--lambda", cfg.lambda, "shift; smooth symbols default to no shift");
  dets->add_option("--alpha", cfg.fh_alpha, "pure singularity: root exponent");
  dets->add_option("--beta", cfg.fh_beta, "pure singularity: jump exponent");
  dets->add_option("--theta", cfg.fh_theta, "pure singularity: angle in (0, 2 pi)");

  auto* slep = app.add_subcommand("slepian", "Slepian limit on the discretized sinc kernel");
  common(slep, false);
  slep->add_option("--b", cfg.b, "offset b of the index k");
  slep->add_option("--delta", cfg.delta, "discretization step");
  slep->add_option("--t1", cfg.t1, "time interval start");
  slep->add_option("--t2", cfg.t2, "time interval end");
  slep->add_option("--s2", cfg.s2, "band edge");

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--only", cfg.only, "criterion numbers")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*bulk) return cmd_bulk(cfg);
    if (*gap) return cmd_gap(cfg);
    if (*dets) return cmd_dets(cfg);
    if (*slep) return cmd_slepian(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
