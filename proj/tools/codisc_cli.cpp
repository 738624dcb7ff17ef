// codisc: exact discrepancy calculations for binary codes and finite
// distance-invariant metric spaces.
//
// Subcommands: disc, bound, table, verify, random, space.
// Exit codes: 0 success, 1 validation/parse error, 2 identity failure,
// 3 resource limit.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "codisc/discrepancy.hpp"
#include "codisc/errors.hpp"
#include "codisc/identity_suite.hpp"
#include "codisc/kernels.hpp"
#include "codisc/krawtchouk.hpp"
#include "codisc/lp.hpp"
#include "codisc/metric_space.hpp"
#include "json.hpp"

using namespace codisc;
using nlohmann::json;

namespace {

struct CommonFlags {
  std::string format = "text";
  int digits = 6;
  int oracle_limit = kDefaultOracleLimit;
  int threads = 0;  // 0 = hardware concurrency
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json rational_json(const Rational& q, int digits) {
  return json{{"exact", to_string(q)}, {"decimal", decimal_string(q, digits)}};
}

std::string show(const Rational& q, int digits) {
  return to_string(q) + " (" + decimal_string(q, digits) + ")";
}

// ---------------------------------------------------------------- disc

struct DiscArgs {
  std::string code_id;
  std::string file;
  bool generator = false;
  bool brute = false;
  CommonFlags common;
};

int cmd_disc(const DiscArgs& args) {
  std::string digest;
  DistanceDistribution dist{0, 0, {}};
  Method method = Method::distance_spectrum;
  std::optional<BinaryCode> code;
  if (!args.code_id.empty()) {
    digest = args.code_id;
    try {
      code = make_named_code(args.code_id);
    } catch (const resource_error&) {
      // hamming:m beyond enumeration still has an exact distribution
      if (args.code_id.rfind("hamming:", 0) == 0) {
        int m = std::stoi(args.code_id.substr(8));
        dist = hamming_distance_distribution(m);
        method = Method::dual_spectrum;
      } else {
        throw;
      }
    }
  } else {
    digest = args.file;
    std::string text = read_file(args.file);
    if (args.generator) {
      GeneratorParse parsed = parse_generator(text);
      if (parsed.dependent_rows())
        std::cerr << "warning: " << parsed.rows_given - parsed.rank
                  << " dependent generator row(s); code has 2^" << parsed.rank << " words\n";
      code = std::move(parsed.code);
    } else {
      code = parse_code(text);
    }
  }
  if (code) dist = distance_distribution(*code);
  auto dual = dual_distribution(dist);
  Rational N(static_cast<unsigned long>(dist.N));
  Rational d_spectrum = discrepancy_spectrum(dist);
  Rational d_dual = discrepancy_dual(dual, N);
  if (d_spectrum != d_dual)
    throw std::logic_error("spectrum and dual discrepancies disagree");

  Rational d_brute;
  bool brute_ran = false;
  if (args.brute) {
    if (!code) throw resource_error("--brute needs an enumerable code");
    d_brute = discrepancy_brute(*code, args.common.oracle_limit, args.common.threads);
    brute_ran = true;
    if (d_brute != d_spectrum) throw std::logic_error("brute-force oracle disagrees");
  }

  int digits = args.common.digits;
  if (args.common.format == "json") {
    json out{{"command", "disc"},
             {"input", digest},
             {"n", dist.n},
             {"N", dist.N},
             {"method", method == Method::dual_spectrum ? "dual-spectrum" : "distance-spectrum"},
             {"discrepancy", rational_json(d_spectrum, digits)}};
    json A = json::array(), Ad = json::array();
    for (const auto& a : dist.A) A.push_back(to_string(a));
    for (const auto& a : dual.A) Ad.push_back(to_string(a));
    out["distance_distribution"] = A;
    out["dual_distribution"] = Ad;
    if (brute_ran) out["brute"] = json{{"agrees", true}, {"exact", to_string(d_brute)}};
    std::cout << out.dump(2) << "\n";
  } else if (args.common.format == "csv") {
    std::cout << "w,A_w,dual_A_w\n";
    for (int w = 0; w <= dist.n; ++w)
      std::cout << w << "," << to_string(dist.A[static_cast<size_t>(w)]) << ","
                << to_string(dual.A[static_cast<size_t>(w)]) << "\n";
    std::cout << "discrepancy," << to_string(d_spectrum) << ","
              << decimal_string(d_spectrum, digits) << "\n";
  } else {
    std::cout << "code: " << digest << "  n = " << dist.n << "  N = " << dist.N << "\n";
    std::cout << "distance distribution:";
    for (const auto& a : dist.A) std::cout << " " << to_string(a);
    std::cout << "\ndual distribution:    ";
    for (const auto& a : dual.A) std::cout << " " << to_string(a);
    std::cout << "\nD^L2 = " << show(d_spectrum, digits) << "\n";
    if (brute_ran) std::cout << "brute-force oracle agrees: " << to_string(d_brute) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- bound

struct BoundArgs {
  int n = 0;
  long long N = 0;
  bool lp = false;
  bool constant = false;
  bool two_term = false;
  bool hamming_type = false;
  bool audit = false;
  std::string emit_cert;
  CommonFlags common;
};

int cmd_bound(const BoundArgs& args) {
  if (args.N < 1) throw std::domain_error("N must be >= 1");
  Rational N(static_cast<long>(args.N));
  bool any = args.lp || args.constant || args.two_term || args.hamming_type;
  bool do_lp = args.lp || !any;
  bool do_const = args.constant || !any;
  // odd-n-only bounds are skipped when implicit but fail loudly when requested
  bool do_two = args.two_term || (!any && args.n % 2 == 1);
  bool do_ham = args.hamming_type || (!any && args.n % 2 == 1);
  int digits = args.common.digits;

  json out{{"command", "bound"}, {"n", args.n}, {"N", args.N}};
  std::ostringstream text;
  text << "n = " << args.n << "  N = " << args.N << "\n";

  if (do_lp) {
    PrimalBound b = primal_discrepancy_lp(args.n, N);
    out["lp"] = json{{"energy", to_string(b.energy)},
                     {"discrepancy_bound", rational_json(b.discrepancy_bound, digits)},
                     {"pivots", b.lp.basis_log.size()},
                     {"distribution", [&] {
                        json a = json::array();
                        for (const auto& v : b.lp.solution) a.push_back(to_string(v));
                        return a;
                      }()}};
    text << "LP optimum: E = " << to_string(b.energy)
         << "   D >= " << show(b.discrepancy_bound, digits) << "\n";
    text << "LP-optimal distribution (A_1..A_n):";
    for (const auto& v : b.lp.solution) text << " " << to_string(v);
    text << "\n";
    if (args.audit) {
      for (const auto& line : b.lp.basis_log) text << "  " << line << "\n";
      out["lp"]["audit"] = b.lp.basis_log;
    }
  }
  DualCertificate emitted;
  bool have_cert = false;
  if (do_const) {
    Rational e = bound_constant(args.n, N);
    auto h = constant_certificate(args.n);
    DualCertificate cert = check_certificate(args.n, N, h);
    out["constant"] = json{{"energy_bound", to_string(e)}, {"feasible", cert.feasible}};
    text << "constant certificate: E <= " << to_string(e)
         << (cert.feasible ? "  (feasible)" : "  (INFEASIBLE)") << "\n";
    emitted = cert;
    have_cert = true;
  }
  if (do_two) {
    Rational e = bound_two_term(args.n, N);
    auto h = two_term_certificate(args.n);
    DualCertificate cert = check_certificate(args.n, N, h);
    out["two_term"] = json{{"energy_bound", to_string(e)}, {"feasible", cert.feasible}};
    text << "two-term certificate: E <= " << to_string(e)
         << (cert.feasible ? "  (feasible)" : "  (INFEASIBLE)") << "\n";
    emitted = cert;
    have_cert = true;
  }
  if (do_ham) {
    Rational e = bound_hamming_type(args.n, N);
    Rational d = bound_hamming_discrepancy(args.n, N);
    auto h = hamming_certificate(args.n);
    DualCertificate cert = check_certificate(args.n, N, h);
    out["hamming_type"] = json{{"energy_bound", to_string(e)},
                               {"discrepancy_bound", rational_json(d, digits)},
                               {"feasible", cert.feasible}};
    text << "hamming-type certificate: E <= " << to_string(e) << "   D >= " << show(d, digits)
         << (cert.feasible ? "  (feasible)" : "  (INFEASIBLE)") << "\n";
    emitted = cert;
    have_cert = true;
  }
  if (!args.emit_cert.empty()) {
    if (!have_cert)
      throw std::domain_error("--emit-cert needs a certificate bound "
                              "(--constant, --two-term or --hamming-type)");
    std::ofstream f(args.emit_cert);
    if (!f) throw parse_error("cannot write '" + args.emit_cert + "'");
    f << certificate_to_json(emitted) << "\n";
    text << "certificate written to " << args.emit_cert << "\n";
  }
  if (args.common.format == "json")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text.str();
  return 0;
}

// ---------------------------------------------------------------- table

int cmd_table(const std::string& which, const CommonFlags& common) {
  if (which != "hamming") throw std::domain_error("unknown table '" + which + "'");
  // D row printed at 3 decimals (m = 7 carries 5, as commonly quoted);
  // E row at 3 decimals up to m = 7, then 2
  struct Row {
    int m;
    std::string d, ed, sd, sed;
  };
  std::vector<Row> rows;
  for (int m = 4; m <= 10; ++m) {
    long n = (1L << m) - 1;
    Rational d = hamming_closed(m);
    Rational ed = lambda_average(static_cast<int>(n)) /
                  Rational(pow2(static_cast<unsigned long>(n - m)));
    Rational sd = simplex_closed(m) / Rational(pow2(static_cast<unsigned long>(n)));
    Rational sed = lambda_average(static_cast<int>(n)) /
                   Rational(pow2(static_cast<unsigned long>(m))) /
                   Rational(pow2(static_cast<unsigned long>(n)));
    rows.push_back(Row{m, fixed_string(d, m == 7 ? 5 : 3), fixed_string(ed, m <= 7 ? 3 : 2),
                       fixed_string(sd, 3), fixed_string(sed, 3)});
  }
  if (common.format == "csv") {
    std::cout << "m,hamming_D,hamming_ED,hadamard_scaled_D,hadamard_scaled_ED\n";
    for (const auto& r : rows)
      std::cout << r.m << "," << r.d << "," << r.ed << "," << r.sd << "," << r.sed << "\n";
  } else if (common.format == "json") {
    json out{{"command", "table"}, {"table", "hamming"}};
    json jr = json::array();
    for (const auto& r : rows)
      jr.push_back(json{{"m", r.m},
                        {"hamming_D", r.d},
                        {"hamming_ED", r.ed},
                        {"hadamard_scaled_D", r.sd},
                        {"hadamard_scaled_ED", r.sed}});
    out["rows"] = jr;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "Hamming codes, n = 2^m - 1, N = 2^(n-m)\n";
    std::cout << "  m      D^L2      E[D^L2]\n";
    for (const auto& r : rows)
      std::cout << "  " << r.m << "   " << r.d << "   " << r.ed << "\n";
    std::cout << "Hadamard (simplex) codes, N = 2^m, scaled by 2^-n\n";
    std::cout << "  m      D^L2      E[D^L2]\n";
    for (const auto& r : rows)
      std::cout << "  " << r.m << "   " << r.sd << "   " << r.sed << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(int n_max, const CommonFlags& common) {
  IdentitySuiteReport report = run_identity_suite(n_max);
  if (common.format == "json") {
    json out{{"command", "verify"},
             {"n_max", n_max},
             {"checks", report.checks},
             {"failures", report.failures}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "verify: " << report.checks << " identity checks up to n = " << n_max << "\n";
    for (const auto& f : report.failures) std::cout << "FAIL " << f << "\n";
    std::cout << (report.pass() ? "all identities hold\n"
                                : std::to_string(report.failures.size()) + " failures\n");
  }
  return report.pass() ? 0 : 2;
}

// ---------------------------------------------------------------- random

struct RandomArgs {
  int n = 0;
  long long N = 0;
  long long trials = 1000;
  std::uint64_t seed = 1;
  CommonFlags common;
};

int cmd_random(const RandomArgs& args) {
  if (args.N < 1 || args.trials < 1) throw std::domain_error("N and trials must be >= 1");
  std::uint64_t trials = static_cast<std::uint64_t>(args.trials);
  std::vector<Rational> values(trials);
  int workers = args.common.threads > 0
                    ? args.common.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t t = begin; t < end; ++t) {
      BinaryCode z = random_code(args.n, static_cast<std::uint64_t>(args.N), args.seed + t);
      values[t] = discrepancy_spectrum(distance_distribution(z));
    }
  };
  if (workers == 1 || trials < 2 * static_cast<std::uint64_t>(workers)) {
    run(0, trials);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = (trials + static_cast<std::uint64_t>(workers) - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      std::uint64_t b = chunk * static_cast<std::uint64_t>(w);
      pool.emplace_back(run, b, std::min(trials, b + chunk));
    }
    for (auto& th : pool) th.join();
  }

  Rational sum = 0, sum_sq = 0;
  for (const auto& v : values) {
    sum += v;
    sum_sq += v * v;
  }
  Rational T(static_cast<unsigned long>(trials));
  Rational mean = sum / T;
  bool stats_apply = trials > 1;
  Rational variance = stats_apply ? (sum_sq - sum * sum / T) / (T - 1) : Rational(0);
  Rational expected = expected_discrepancy(args.n, Rational(static_cast<long>(args.N)));
  Rational vbound = variance_bound(args.n, Rational(static_cast<long>(args.N)));
  // |mean - E| <= 3 sqrt(variance/T), compared exactly by squaring
  Rational err = mean - expected;
  bool mean_ok = err * err * T <= 9 * variance || err == 0;
  bool var_ok = variance <= vbound;

  int digits = args.common.digits;
  if (args.common.format == "csv") {
    std::cout << "trial,discrepancy\n";
    for (std::uint64_t t = 0; t < trials; ++t)
      std::cout << t << "," << to_string(values[t]) << "\n";
  } else if (args.common.format == "json") {
    json out{{"command", "random"},
             {"n", args.n},
             {"N", args.N},
             {"trials", args.trials},
             {"seed", args.seed},
             {"mean", rational_json(mean, digits)},
             {"expected", rational_json(expected, digits)}};
    if (stats_apply) {
      out["sample_variance"] = rational_json(variance, digits);
      out["variance_bound"] = rational_json(vbound, digits);
      out["mean_within_3se"] = mean_ok;
      out["variance_below_bound"] = var_ok;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "random codes: n = " << args.n << "  N = " << args.N
              << "  trials = " << args.trials << "  seed = " << args.seed << "\n";
    std::cout << "sample mean      = " << show(mean, digits) << "\n";
    std::cout << "expected value   = " << show(expected, digits) << "\n";
    if (stats_apply) {
      std::cout << "sample variance  = " << decimal_string(variance, digits) << "\n";
      std::cout << "variance bound   = " << decimal_string(vbound, digits) << "\n";
      std::cout << "mean within 3 standard errors: " << (mean_ok ? "yes" : "NO") << "\n";
      std::cout << "variance below bound:          " << (var_ok ? "yes" : "NO") << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- space

struct SpaceArgs {
  std::string file;
  std::string subset;
  std::string weights_file;
  CommonFlags common;
};

int cmd_space(const SpaceArgs& args) {
  FiniteMetricSpace space = FiniteMetricSpace::parse(read_file(args.file));
  std::vector<int> subset;
  std::stringstream ss(args.subset);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    subset.push_back(std::stoi(tok));
  }
  if (subset.empty()) throw std::domain_error("empty subset");

  Rational general = general_discrepancy(space, subset);  // asserts lambda vs mu agreement
  Rational definitional = discrepancy_definition(space, subset);
  bool agree = general == definitional;

  bool have_scheme = true;
  Rational scheme_value;
  std::string scheme_note;
  try {
    AssociationScheme scheme = scheme_from_space(space);
    std::vector<std::int64_t> counts(static_cast<size_t>(space.diameter()) + 1, 0);
    for (int a : subset)
      for (int b : subset) ++counts[static_cast<size_t>(space.distance(a, b))];
    std::vector<Rational> class_dist;
    for (auto c : counts)
      class_dist.push_back(
          ratio(static_cast<long>(c), static_cast<long>(subset.size())));
    scheme_value =
        scheme_discrepancy(scheme, class_dist, Rational(static_cast<unsigned long>(subset.size())));
    agree = agree && scheme_value == general;
  } catch (const validation_error& e) {
    have_scheme = false;
    scheme_note = e.what();
  }

  bool have_weighted = false;
  Rational weighted;
  if (!args.weights_file.empty()) {
    WeightVector w = parse_weights(read_file(args.weights_file));
    weighted = weighted_discrepancy(space, subset, w);  // asserts its own identity
    have_weighted = true;
  }

  int digits = args.common.digits;
  if (args.common.format == "json") {
    json out{{"command", "space"},
             {"points", space.points()},
             {"diameter", space.diameter()},
             {"subset", subset},
             {"general", rational_json(general, digits)},
             {"definitional", rational_json(definitional, digits)},
             {"formulas_agree", agree}};
    if (have_scheme)
      out["scheme"] = rational_json(scheme_value, digits);
    else
      out["scheme_unavailable"] = scheme_note;
    if (have_weighted) out["weighted"] = rational_json(weighted, digits);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "space: " << space.points() << " points, diameter " << space.diameter() << "\n";
    std::cout << "subset size " << subset.size() << "\n";
    std::cout << "D^L2 (kernel identity) = " << show(general, digits) << "\n";
    std::cout << "D^L2 (definition)      = " << show(definitional, digits) << "\n";
    if (have_scheme)
      std::cout << "D^L2 (scheme formula)  = " << show(scheme_value, digits) << "\n";
    else
      std::cout << "scheme formula unavailable: " << scheme_note << "\n";
    std::cout << "formulas agree: " << (agree ? "yes" : "NO") << "\n";
    if (have_weighted) std::cout << "weighted D_G = " << show(weighted, digits) << "\n";
  }
  if (!agree) throw std::logic_error("discrepancy formulas disagree");
  return 0;
}

void add_common(CLI::App* cmd, CommonFlags* common) {
  cmd->add_option("--format", common->format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--digits", common->digits, "Decimal display digits")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--oracle-limit", common->oracle_limit,
                  "Max length for full-space enumeration");
  cmd->add_option("--threads", common->threads, "Worker threads (0 = auto)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quadratic discrepancy of binary codes and finite metric spaces"};
  app.require_subcommand(1);

  DiscArgs disc;
  CLI::App* disc_cmd = app.add_subcommand("disc", "Discrepancy of a code");
  auto* code_opt = disc_cmd->add_option("--code", disc.code_id,
                                        "Named code id (hamming:m, simplex:m, golay23, "
                                        "repetition:n, subcube:n:m, random:n:N:seed)");
  auto* file_opt = disc_cmd->add_option("--file", disc.file, "Code file (words, one per line)");
  code_opt->excludes(file_opt);
  disc_cmd->add_flag("--generator", disc.generator, "Treat the file rows as a generator matrix");
  disc_cmd->add_flag("--brute", disc.brute, "Also run the definitional brute-force oracle");
  add_common(disc_cmd, &disc.common);

  BoundArgs bound;
  CLI::App* bound_cmd = app.add_subcommand("bound", "Lower bounds on discrepancy at (n, N)");
  bound_cmd->add_option("n", bound.n, "Code length")->required();
  bound_cmd->add_option("N", bound.N, "Code size")->required();
  bound_cmd->add_flag("--lp", bound.lp, "Exact primal LP optimum");
  bound_cmd->add_flag("--constant", bound.constant, "Constant dual certificate");
  bound_cmd->add_flag("--two-term", bound.two_term, "Two-term dual certificate (odd n)");
  bound_cmd->add_flag("--hamming-type", bound.hamming_type, "Hamming-type certificate (odd n)");
  bound_cmd->add_flag("--audit", bound.audit, "Print the simplex pivot log");
  bound_cmd->add_option("--emit-cert", bound.emit_cert, "Write the certificate as JSON");
  add_common(bound_cmd, &bound.common);

  std::string table_which = "hamming";
  CommonFlags table_common;
  CLI::App* table_cmd = app.add_subcommand("table", "Reference tables");
  table_cmd->add_option("which", table_which, "Table name (hamming)");
  add_common(table_cmd, &table_common);

  int verify_n = 12;
  CommonFlags verify_common;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the identity suite up to n_max");
  verify_cmd->add_option("n_max", verify_n, "Largest length to verify")->required();
  add_common(verify_cmd, &verify_common);

  RandomArgs random_args;
  CLI::App* random_cmd = app.add_subcommand("random", "Monte-Carlo over random codes");
  random_cmd->add_option("n", random_args.n, "Code length")->required();
  random_cmd->add_option("N", random_args.N, "Code size")->required();
  random_cmd->add_option("--trials", random_args.trials, "Trial count");
  random_cmd->add_option("--seed", random_args.seed, "Base seed");
  add_common(random_cmd, &random_args.common);

  SpaceArgs space_args;
  CLI::App* space_cmd = app.add_subcommand("space", "Discrepancy in a finite metric space");
  space_cmd->add_option("file", space_args.file, "Distance matrix file")->required();
  space_cmd->add_option("--subset", space_args.subset, "Comma-separated point indices")
      ->required();
  space_cmd->add_option("--weights", space_args.weights_file, "Radius weight file (n+1 entries)");
  add_common(space_cmd, &space_args.common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (disc_cmd->parsed()) {
      if (disc.code_id.empty() && disc.file.empty())
        throw std::domain_error("disc needs --code or --file");
      return cmd_disc(disc);
    }
    if (bound_cmd->parsed()) return cmd_bound(bound);
    if (table_cmd->parsed()) return cmd_table(table_which, table_common);
    if (verify_cmd->parsed()) return cmd_verify(verify_n, verify_common);
    if (random_cmd->parsed()) return cmd_random(random_args);
    if (space_cmd->parsed()) return cmd_space(space_args);
  } catch (const resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "identity failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
