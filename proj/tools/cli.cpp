#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "fhlab/asymptotics.hpp"
#include "fhlab/hankel.hpp"
#include "fhlab/mc_gue.hpp"
#include "fhlab/orthopoly.hpp"
#include "fhlab/specfun.hpp"
#include "fhlab/weights.hpp"

namespace fhlab::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& raw, const std::string& what) {
  std::string text = trim(raw);
  T value{};
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InvalidInput("cannot parse " + what + " from '" + raw + "'");
  }
  return value;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

std::string num(const Real& x) { return x.str(30); }
// Doubles go through their shortest round-trip decimal so the padding digits are zeros.
std::string num(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return Real::parse(std::string_view(buf, ptr - buf), 128).str(30);
}
std::string num(long x) { return std::to_string(x); }

double elapsed_since(std::chrono::steady_clock::time_point start, const RunConfig& config) {
  if (!config.timing) return 0.0;
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

PrecisionContext context_of(const RunConfig& config) {
  PrecisionContext ctx = PrecisionContext::with_digits(config.digits);
  ctx.validate();
  return ctx;
}

WeightSpec spec_of(const RunConfig& config, int n) {
  return WeightSpec{config.lambdas, config.alphas, n};
}

std::string normalized_cell(const Real& diff, int n) {
  if (n < 2) return "";
  return num(diff * n / std::log(static_cast<double>(n)));
}

Table cmd_compare(const RunConfig& config) {
  PrecisionContext ctx = context_of(config);
  const bool outside = config.regime == "outside";
  if (outside && config.lambdas.size() != 1) {
    throw InvalidInput("compare: the outside regime takes exactly one lambda");
  }
  Table t{{"n", "exact_log", "asym_log", "diff", "normalized", "runtime_s"}, {}};
  for (int n : config.n_list) {
    auto start = std::chrono::steady_clock::now();
    WeightSpec spec = spec_of(config, n);
    Real exact, asym;
    if (outside) {
      spec.validate(Regime::any);
      if (!(std::fabs(spec.lambdas[0]) > 1.0)) {
        throw InvalidInput("compare: the outside regime needs |lambda| > 1");
      }
      asym = johansson_log(spec.lambdas[0], spec.alphas[0], n, ctx).log_value;
      exact = exact_average_log(spec, ctx);
    } else {
      spec.validate(Regime::bulk);
      asym = theorem1_log(spec, ctx).log_value;
      exact = char_poly_average_log(spec, ctx);
    }
    Real diff = exact - asym;
    t.rows.push_back({num(static_cast<long>(n)), num(exact), num(asym), num(diff),
                      normalized_cell(diff, n), num(elapsed_since(start, config))});
  }
  return t;
}

Table cmd_coeffs(const RunConfig& config) {
  PrecisionContext ctx = context_of(config);
  Table t{{"n", "kappa2_exact", "kappa2_asym", "beta_exact", "beta_asym", "gamma_exact",
           "gamma_asym", "kappa2_n2dev"},
          {}};
  for (int n : config.n_list) {
    WeightSpec spec = spec_of(config, n);
    spec.validate(Regime::bulk);
    CoefficientPrediction p = coeff_asym(spec, ctx);
    RecurrenceData R = exact_recurrence(spec, n, ctx);
    Real kappa2 = R.kappa[n - 1] * R.kappa[n - 1];
    Real dev = Real(n, kappa2.precision()) * n * (kappa2 / p.kappa2 - 1);
    t.rows.push_back({num(static_cast<long>(n)), num(kappa2), num(p.kappa2), num(R.beta[n]),
                      num(p.beta), num(R.gamma[n]), num(p.gamma), num(dev)});
  }
  return t;
}

Table cmd_diff_id(const RunConfig& config) {
  PrecisionContext ctx = context_of(config);
  const int m = static_cast<int>(config.lambdas.size());
  if (config.nu < 1 || config.nu > m) throw InvalidInput("diff-id: --nu must be in 1.." + std::to_string(m));
  if (!(config.step > 0)) throw InvalidInput("diff-id: --step must be positive");
  const int nu = config.nu - 1;
  Table t{{"n", "fd", "rhs", "diff", "normalized", "runtime_s"}, {}};
  for (int n : config.n_list) {
    auto start = std::chrono::steady_clock::now();
    WeightSpec spec = spec_of(config, n);
    spec.validate(Regime::bulk);
    std::vector<double> up = spec.alphas;
    std::vector<double> down = spec.alphas;
    up[nu] += config.step;
    down[nu] -= config.step;
    if (!(down[nu] > -0.5)) throw InvalidInput("diff-id: alpha - step must exceed -1/2");
    Real fd = (char_poly_average_log(spec.with_alphas(up), ctx) -
               char_poly_average_log(spec.with_alphas(down), ctx)) /
              (2 * Real(config.step, ctx.working_bits()));
    Real rhs = diff_identity_rhs(spec, nu, ctx);
    Real diff = fd - rhs;
    t.rows.push_back({num(static_cast<long>(n)), num(fd), num(rhs), num(diff),
                      normalized_cell(diff, n), num(elapsed_since(start, config))});
  }
  return t;
}

Table cmd_mc(const RunConfig& config) {
  PrecisionContext ctx = context_of(config);
  Table t{{"n", "mc_mean_log", "stderr_rel", "exact_log", "z", "samples", "runtime_s"}, {}};
  for (int n : config.n_list) {
    auto start = std::chrono::steady_clock::now();
    WeightSpec spec = spec_of(config, n);
    spec.validate(Regime::any);
    McEstimate est = mc_average_log(spec, config.samples, config.seed);
    Real exact = exact_average_log(spec, ctx);
    std::string z;
    if (est.stderr_rel > 0) {
      z = num((1.0 - std::exp(exact.to_double() - est.mean_log)) / est.stderr_rel);
    }
    t.rows.push_back({num(static_cast<long>(n)), num(est.mean_log), num(est.stderr_rel), num(exact),
                      z, num(est.samples), num(elapsed_since(start, config))});
  }
  return t;
}

Table cmd_moments(const RunConfig& config) {
  PrecisionContext ctx = context_of(config);
  Table t{{"n", "k", "moment", "achieved_tol"}, {}};
  for (int n : config.n_list) {
    WeightSpec spec = spec_of(config, n);
    spec.validate(Regime::any);
    const int kmax = config.kmax >= 0 ? config.kmax : 2 * n;
    MomentTable table = moment_table(spec, kmax, ctx);
    for (int k = 0; k <= kmax; ++k) {
      t.rows.push_back({num(static_cast<long>(n)), num(static_cast<long>(k)), num(table.values[k]),
                        num(static_cast<double>(table.achieved_tol))});
    }
  }
  return t;
}

// ---- selfcheck ----------------------------------------------------------

struct CheckResult {
  bool pass;
  std::string detail;
};

std::string sci(const Real& x) { return x.str(3); }

CheckResult check_below(const Real& value, const Real& bound) {
  return {value < bound, sci(value) + " < " + sci(bound)};
}

int cmd_selfcheck(const RunConfig& config, std::ostream& out) {
  PrecisionContext ctx = context_of(config);
  const int d = ctx.digits;
  const int g = ctx.guard_digits;
  const Precision bits = ctx.working_bits();
  auto tol = [&](double exponent) { return pow10(-static_cast<long>(std::floor(exponent)), bits); };

  std::vector<std::pair<std::string, std::function<CheckResult()>>> checks;

  checks.emplace_back("weights.moment_oracle", [&] {
    Real worst = Real::zero(bits);
    for (double alpha : {-0.3, 0.5, 1.2}) {
      MomentTable t = moment_table(WeightSpec{{0.0}, {alpha}, 4}, 20, ctx);
      for (int k = 0; k <= 20; k += 2) {
        Real o = symmetric_moment_oracle(alpha, k, bits);
        worst = max(worst, abs(t.values[k] - o) / o);
      }
    }
    return check_below(worst, tol(d - g));
  });

  checks.emplace_back("weights.reflection", [&] {
    WeightSpec spec{{-0.4, 0.3}, {0.5, -0.2}, 6};
    MomentTable a = moment_table(spec, 12, ctx);
    MomentTable b = moment_table(spec.reflected(), 12, ctx);
    Real worst = Real::zero(bits);
    for (int k = 0; k <= 12; ++k) {
      Real expected = k % 2 == 0 ? a.values[k] : -a.values[k];
      worst = max(worst, abs(b.values[k] - expected) / max(Real(1, bits), abs(a.values[k])));
    }
    return check_below(worst, tol(d - g));
  });

  checks.emplace_back("hankel.selberg", [&] {
    Real worst = Real::zero(bits);
    for (int n = 1; n <= 10; ++n) {
      LogDeterminant ld = exact_log_determinant(WeightSpec{{0.0}, {0.0}, n}, ctx);
      worst = max(worst, abs(ld.log_value - selberg_log(n, ld.log_value.precision())));
    }
    return check_below(worst, tol(d - 2 * g));
  });

  checks.emplace_back("hankel.kappa_product", [&] {
    const int n = 10;
    WeightSpec spec{{0.3}, {0.5}, n};
    MomentSource source(spec, g);
    RecurrenceData R = exact_recurrence(source, n, ctx);
    PrecisionContext pass = ctx;
    pass.digits = R.digits;
    MomentTable lu_copy = source.table(2 * R.digits, 2 * n);
    if (config.inject_fault) lu_copy.values[n] *= Real(1, bits) + pow10(-12, bits);
    LogDeterminant ld = hankel_log_determinant(lu_copy, n, pass);
    return check_below(abs(ld.log_value - kappa_logproduct(R, n)), tol(d / 2.0));
  });

  checks.emplace_back("hankel.precision_doubling", [&] {
    WeightSpec spec{{0.3}, {0.5}, 8};
    Real a = exact_log_determinant(spec, ctx).log_value;
    Real b = exact_log_determinant(spec, ctx.rescaled(2 * d)).log_value;
    return check_below(abs(a - b) / max(Real(1, bits), abs(b)), ctx.tolerance(bits));
  });

  const WeightSpec two_point{{-0.4, 0.3}, {0.5, 0.75}, 12};

  checks.emplace_back("orthopoly.christoffel_darboux", [&] {
    RecurrenceData R = exact_recurrence(two_point, 12, ctx);
    Real worst = Real::zero(bits);
    SampleRng rng(config.seed, 0);
    const double span = 3.0 * std::sqrt(2.0 * 12);
    for (int i = 0; i < 20; ++i) {
      Real x(-span + 2.0 * span * rng.uniform(), bits);
      worst = max(worst, christoffel_darboux_residual(R, x));
    }
    return check_below(worst, tol(d / 3.0));
  });

  checks.emplace_back("orthopoly.coefficient_identities", [&] {
    MomentSource source(two_point, g);
    RecurrenceData R = exact_recurrence(source, 12, ctx);
    const MomentTable& M = source.table(2 * R.digits, 24);
    CoefficientDefects def = coefficient_identity_defects(R, M);
    return check_below(max(def.b_kappa, max(def.a_beta, def.kappa_gamma)), tol(d / 2.0));
  });

  checks.emplace_back("orthopoly.orthonormality", [&] {
    WeightSpec spec = two_point.with_n(8);
    RecurrenceData R = exact_recurrence(spec, 8, ctx);
    return check_below(orthonormality_defect(R, 8, ctx), tol(d / 3.0));
  });

  checks.emplace_back("specfun.c_forms", [&] {
    Real worst = Real::zero(bits);
    for (double a : {-0.4, -0.1, 0.25, 0.5, 1.0, 1.5, 2.0}) {
      worst = max(worst, abs(log_c_integral(a, ctx) - log_c_barnes(a, ctx)));
    }
    worst = max(worst, abs(log_c(1.0, ctx) - log(Real(4, bits))));
    return check_below(worst, tol(d - 2 * g));
  });

  checks.emplace_back("specfun.barnes_half_identity", [&] {
    Real zp = zeta_prime_minus1(ctx).value;
    Real rhs = const_log2(bits) / 12 - log(const_pi(bits)) / 2 + 3 * zp;
    return check_below(abs(2 * log_barnes_g(0.5, ctx) - rhs), tol(d - 2 * g));
  });

  checks.emplace_back("specfun.digamma_derivative", [&] {
    Real worst = Real::zero(bits);
    Real h = tol(d / 3.0);
    for (double x : {0.3, 1.0, 2.5}) {
      Real xr(x, bits);
      Real fd = (log_gamma(xr + h) - log_gamma(xr - h)) / (2 * h);
      worst = max(worst, abs(fd - digamma(xr)));
    }
    return check_below(worst, tol(d / 3.0));
  });

  checks.emplace_back("asymptotics.g_jump", [&] {
    PrecisionContext gctx = PrecisionContext::with_digits(30);
    Precision gb = gctx.working_bits();
    Real worst = Real::zero(gb);
    for (double x : {-0.7, 0.1, 0.55}) {
      Complex gp = g_boundary(x, 1, gctx);
      Complex gm = g_boundary(x, -1, gctx);
      Real xr(x, gb);
      Real sum_re = gp.re + gm.re - 2 * xr * xr - EquilibriumData::l_const(gb);
      Real jump_im = gp.im - gm.im - 2 * const_pi(gb) * EquilibriumData::tail(xr);
      worst = max(worst, max(abs(sum_re), abs(gp.im + gm.im)));
      worst = max(worst, max(abs(jump_im), abs(gp.re - gm.re)));
    }
    return check_below(worst, pow10(-10, gb));
  });

  checks.emplace_back("asymptotics.szego_boundary", [&] {
    Real worst = Real::zero(bits);
    for (double x : {-0.8, -0.1, 0.45, 0.9}) {
      Complex p = szego_boundary(x, 1, two_point, bits);
      Complex m = szego_boundary(x, -1, two_point, bits);
      Complex prod = p * m;
      Real omega(1, bits);
      for (std::size_t j = 0; j < two_point.size(); ++j) {
        Real dist = abs(Real(x, bits) - Real(two_point.lambdas[j], bits));
        omega *= exp(2 * two_point.alphas[j] * log(dist));
      }
      worst = max(worst, max(abs(prod.re - omega) / omega, abs(prod.im) / omega));
    }
    return check_below(worst, tol(d));
  });

  checks.emplace_back("asymptotics.permutation", [&] {
    WeightSpec a{{-0.4, 0.3, 0.6}, {0.5, 0.75, -0.2}, 20};
    WeightSpec b{{0.6, -0.4, 0.3}, {-0.2, 0.5, 0.75}, 20};
    return check_below(abs(theorem1_log(a, ctx).log_value - theorem1_log(b, ctx).log_value),
                       tol(d - g));
  });

  checks.emplace_back("asymptotics.integrated_identity", [&] {
    WeightSpec spec{{-0.4, 0.3}, {0.5, 0.75}, 20};
    AsymptoticPrediction direct = theorem1_log(spec, ctx);
    AsymptoticPrediction integrated = integrated_identity_log(spec, ctx);
    Real worst = Real::zero(bits);
    for (const auto& [name, value] : direct.terms) {
      worst = max(worst, abs(value - integrated.term(name)));
    }
    return check_below(worst, tol(d - 2 * g));
  });

  checks.emplace_back("asymptotics.theorem1_rate", [&] {
    WeightSpec spec{{0.3}, {0.5}, 16};
    Real e = abs(char_poly_average_log(spec, ctx) - theorem1_log(spec, ctx).log_value);
    return check_below(e, Real(std::log(16.0) / 16.0, bits));
  });

  checks.emplace_back("mc_gue.reproducible", [&] {
    WeightSpec spec{{0.2}, {1.0}, 4};
    McEstimate a = mc_average_log(spec, 2000, config.seed);
    McEstimate b = mc_average_log(spec, 2000, config.seed);
    const bool same = a.mean_log == b.mean_log && a.stderr_rel == b.stderr_rel;
    return CheckResult{same, same ? "bit-identical" : "runs differ"};
  });

  checks.emplace_back("mc_gue.exact_ratio", [&] {
    WeightSpec spec{{0.2}, {1.0}, 4};
    McEstimate est = mc_average_log(spec, 20000, config.seed);
    double exact = exact_average_log(spec, ctx).to_double();
    double z = (1.0 - std::exp(exact - est.mean_log)) / est.stderr_rel;
    std::ostringstream detail;
    detail << "|z| = " << std::fabs(z) << " <= 4";
    return CheckResult{std::fabs(z) <= 4.0, detail.str()};
  });

  int failures = 0;
  for (const auto& [name, check] : checks) {
    CheckResult r{false, ""};
    try {
      r = check();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.pass) ++failures;
    out << (r.pass ? "PASS " : "FAIL ") << name << " (" << r.detail << ")\n";
  }
  out << (failures == 0 ? "selfcheck: all " + std::to_string(checks.size()) + " checks passed\n"
                        : "selfcheck: " + std::to_string(failures) + " of " +
                              std::to_string(checks.size()) + " checks failed\n");
  return failures == 0 ? kOk : kCheckFailed;
}

}  // namespace

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  for (const std::string& part : split_commas(text)) {
    values.push_back(parse_number<double>(part, "number"));
  }
  if (values.empty()) throw InvalidInput("empty list");
  return values;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  for (const std::string& part : split_commas(text)) {
    values.push_back(parse_number<int>(part, "integer"));
  }
  if (values.empty()) throw InvalidInput("empty list");
  return values;
}

void apply_setting(const std::string& key, const std::string& value, RunConfig& config) {
  if (key == "digits") {
    config.digits = parse_number<int>(value, "digits");
  } else if (key == "n-list") {
    config.n_list = parse_int_list(value);
    for (int n : config.n_list) {
      if (n < 1) throw InvalidInput("n-list entries must be positive");
    }
  } else if (key == "lambdas") {
    config.lambdas = parse_double_list(value);
  } else if (key == "alphas") {
    config.alphas = parse_double_list(value);
  } else if (key == "seed") {
    config.seed = parse_number<std::uint64_t>(value, "seed");
  } else if (key == "samples") {
    config.samples = parse_number<long>(value, "samples");
  } else if (key == "format") {
    std::string f = trim(value);
    if (f != "csv" && f != "json") throw InvalidInput("format must be csv or json");
    config.format = f;
  } else if (key == "out") {
    config.out = trim(value);
  } else if (key == "regime") {
    std::string r = trim(value);
    if (r != "inside" && r != "outside") throw InvalidInput("regime must be inside or outside");
    config.regime = r;
  } else if (key == "nu") {
    config.nu = parse_number<int>(value, "nu");
  } else if (key == "step") {
    config.step = parse_number<double>(value, "step");
  } else if (key == "kmax") {
    config.kmax = parse_number<int>(value, "kmax");
  } else {
    throw InvalidInput("unknown setting '" + key + "'");
  }
}

void apply_config_text(const std::string& text, RunConfig& config) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw InvalidInput("config line " + std::to_string(line_no) + ": expected key=value");
    }
    apply_setting(trim(body.substr(0, eq)), trim(body.substr(eq + 1)), config);
  }
}

void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
}

void write_json(const Table& table, std::ostream& os) {
  os << "[\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    os << "  {";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      const std::string& cell = table.rows[r][i];
      os << (i ? ", " : "") << '"' << table.columns[i] << "\": " << (cell.empty() ? "null" : cell);
    }
    os << "}" << (r + 1 < table.rows.size() ? "," : "") << '\n';
  }
  os << "]\n";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended-precision Hankel determinants of singular Gaussian weights"};
  app.require_subcommand(1);

  std::vector<std::pair<std::string, std::string>> flags;
  std::string config_path;
  bool no_timing = false;
  bool inject_fault = false;

  auto add_shared = [&](CLI::App* sub) {
    for (const char* name : {"lambdas", "alphas", "n-list", "digits", "format", "out", "seed",
                             "samples", "regime", "nu", "step", "kmax"}) {
      std::string key = name;
      sub->add_option_function<std::string>(
          "--" + key, [&flags, key](const std::string& v) { flags.emplace_back(key, v); });
    }
    sub->add_option("--config", config_path, "flat key=value settings file");
    sub->add_flag("--no-timing", no_timing, "report runtime_s as 0");
  };

  std::map<std::string, CLI::App*> subs;
  subs["compare"] = app.add_subcommand("compare", "exact log-average vs its asymptotic formula");
  subs["coeffs"] = app.add_subcommand("coeffs", "recurrence coefficients vs their asymptotics");
  subs["diff-id"] = app.add_subcommand("diff-id", "finite-difference alpha derivative vs identity");
  subs["mc"] = app.add_subcommand("mc", "Monte Carlo estimate vs exact value");
  subs["moments"] = app.add_subcommand("moments", "Hankel moments of the weight");
  subs["selfcheck"] = app.add_subcommand("selfcheck", "run the invariant suite");
  for (auto& [name, sub] : subs) add_shared(sub);
  subs["selfcheck"]->add_flag("--inject-fault", inject_fault,
                              "corrupt one moment on the LU path (test hook)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    RunConfig config;
    if (const char* env = std::getenv("FHLAB_DIGITS"); env != nullptr && *env != '\0') {
      apply_setting("digits", env, config);
    }
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw InvalidInput("cannot read config file '" + config_path + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      apply_config_text(buffer.str(), config);
    }
    for (const auto& [key, value] : flags) apply_setting(key, value, config);
    config.timing = !no_timing;
    config.inject_fault = inject_fault;
    if (config.lambdas.size() != config.alphas.size()) {
      throw InvalidInput("lambdas and alphas differ in length");
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.out.empty()) {
      file.open(config.out);
      if (!file) throw InvalidInput("cannot write '" + config.out + "'");
      sink = &file;
    }

    if (subs["selfcheck"]->parsed()) return cmd_selfcheck(config, *sink);

    Table table;
    if (subs["compare"]->parsed()) table = cmd_compare(config);
    if (subs["coeffs"]->parsed()) table = cmd_coeffs(config);
    if (subs["diff-id"]->parsed()) table = cmd_diff_id(config);
    if (subs["mc"]->parsed()) table = cmd_mc(config);
    if (subs["moments"]->parsed()) table = cmd_moments(config);
    if (config.format == "json") {
      write_json(table, *sink);
    } else {
      write_csv(table, *sink);
    }
    return kOk;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const PrecisionUnreachable& e) {
    err << "precision unreachable: " << e.what() << " (level " << e.level_reached() << ")\n";
    return kPrecisionUnreachable;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kPrecisionUnreachable;
  }
}

}  // namespace fhlab::cli
