#include "codisc/discrepancy.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "codisc/errors.hpp"
#include "codisc/krawtchouk.hpp"

namespace codisc {

Rational discrepancy_spectrum(const DistanceDistribution& dist) {
  int n = dist.n;
  Rational energy = 0;
  for (int w = 1; w <= n; ++w) energy += dist.A[static_cast<size_t>(w)] * Rational(lambda_eval(n, w));
  return lambda_average(n) - energy / Rational(static_cast<unsigned long>(dist.N));
}

Rational discrepancy_dual(const DualDistribution& dual, const Rational& N) {
  int n = dual.n;
  if (N <= 0) throw std::domain_error("discrepancy_dual: N must be positive");
  KrawtchoukTable K(n);
  Rational via_lambda = 0;
  for (int i = 1; i <= n; ++i) {
    if (dual.A[static_cast<size_t>(i)] == 0) continue;
    Integer inner = 0;
    for (int w = 1; w <= n; ++w) inner += K(w, i) * lambda_eval(n, w);
    via_lambda += dual.A[static_cast<size_t>(i)] * Rational(inner);
  }
  via_lambda = -via_lambda / Rational(pow2(static_cast<unsigned long>(n)));

  Rational via_squares = 0;
  for (int k = 1; k <= n; ++k) {
    if (dual.A[static_cast<size_t>(k)] == 0) continue;
    Integer inner = 0;
    if (n == 1) {
      inner = 1;
    } else {
      for (int t = 0; t <= n - 1; ++t) {
        Integer v = kraw_eval(n - 1, t, k - 1);
        inner += v * v;
      }
    }
    via_squares += dual.A[static_cast<size_t>(k)] * Rational(inner);
  }
  via_squares /= Rational(pow2(static_cast<unsigned long>(n)));

  if (via_lambda != via_squares)
    throw std::logic_error("discrepancy_dual: the two dual expressions disagree (" +
                           to_string(via_lambda) + " vs " + to_string(via_squares) + ")");
  return via_squares;
}

Rational discrepancy_brute(const BinaryCode& code, int oracle_limit, int threads) {
  int n = code.length();
  if (n > oracle_limit)
    throw resource_error("discrepancy_brute: n = " + std::to_string(n) +
                         " exceeds oracle limit " + std::to_string(oracle_limit));
  if (n > 30) throw resource_error("discrepancy_brute: n > 30 is not enumerable");
  std::uint64_t N = code.size();
  std::uint64_t space = std::uint64_t(1) << n;
  // space points are enumerated with coordinate j at bit j; repack the words
  std::vector<std::uint64_t> words(N, 0);
  for (std::uint64_t i = 0; i < N; ++i)
    for (int j = 0; j < n; ++j)
      if (code.get(i, j)) words[i] |= std::uint64_t(1) << j;

  // per-(x,t) term: (c_t(x)/N - |B_t|/2^n)^2 = (c_t(x) 2^n - |B_t| N)^2 / (N 2^n)^2.
  // Accumulated as the integer numerator over the common denominator
  // (N 2^n)^2; the squared differences stay under 2^104 for n <= 30.
  std::vector<std::int64_t> ball_n(static_cast<size_t>(n) + 1);
  for (int t = 0; t <= n; ++t)
    ball_n[static_cast<size_t>(t)] = static_cast<std::int64_t>(ball_volume(n, t).get_ui() * N);

  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  std::uint64_t chunk = (space + static_cast<std::uint64_t>(workers) - 1) / workers;

  std::vector<Integer> partial(static_cast<size_t>(workers), Integer(0));
  auto run = [&](int widx) {
    std::uint64_t begin = chunk * static_cast<std::uint64_t>(widx);
    std::uint64_t end = std::min(space, begin + chunk);
    std::vector<std::uint32_t> count(static_cast<size_t>(n) + 1);
    Integer acc = 0;
    unsigned __int128 local = 0;
    int local_terms = 0;
    for (std::uint64_t x = begin; x < end; ++x) {
      std::fill(count.begin(), count.end(), 0);
      for (std::uint64_t i = 0; i < N; ++i) ++count[static_cast<size_t>(std::popcount(words[i] ^ x))];
      std::uint64_t cumulative = 0;
      for (int t = 0; t <= n; ++t) {
        cumulative += count[static_cast<size_t>(t)];
        // c*2^n - |B_t|*N, |values| <= N*2^n <= 2^(n+62)
        std::int64_t diff = static_cast<std::int64_t>(cumulative << n) - ball_n[static_cast<size_t>(t)];
        unsigned __int128 sq = static_cast<unsigned __int128>(diff < 0 ? -diff : diff);
        local += sq * sq;
        if (++local_terms == 1 << 12) {  // flush well before any 128-bit overflow
          acc += Integer(static_cast<unsigned long>(local >> 64)) * pow2(64) +
                 Integer(static_cast<unsigned long>(local));
          local = 0;
          local_terms = 0;
        }
      }
    }
    acc += Integer(static_cast<unsigned long>(local >> 64)) * pow2(64) +
           Integer(static_cast<unsigned long>(local));
    partial[static_cast<size_t>(widx)] = acc;
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  Integer numerator = 0;
  for (const auto& p : partial) numerator += p;
  Integer denom_root = Integer(static_cast<unsigned long>(N)) * pow2(static_cast<unsigned long>(n));
  return ratio(numerator, denom_root * denom_root);
}

Rational expected_discrepancy(int n, const Rational& N) {
  if (N <= 0) throw std::domain_error("expected_discrepancy: N must be positive");
  return lambda_average(n) / N;
}

Rational variance_bound(int n, const Rational& N) {
  if (N <= 0) throw std::domain_error("variance_bound: N must be positive");
  Rational lam = lambda_average(n);
  Rational bound = (N - 1) / N * lam - expected_discrepancy(n, N);
  return bound > 0 ? bound : Rational(0);
}

Rational hamming_closed(int m) {
  if (m < 2) throw std::domain_error("hamming_closed requires m >= 2");
  long n = (1L << m) - 1;
  return ratio(Integer(n) * binom(n - 1, (n - 1) / 2), pow2(static_cast<unsigned long>(n)));
}

Rational simplex_closed(int m) {
  if (m < 2) throw std::domain_error("simplex_closed requires m >= 2");
  int n = (1 << m) - 1;
  Rational N(static_cast<unsigned long>(1) << m);
  return lambda_average(n) - Rational(n) / N * Rational(lambda_eval(n, (n + 1) / 2));
}

Rational subcube_closed(int n) {
  if (n < 2) throw std::domain_error("subcube_closed requires n >= 2");
  return ratio(Integer(n) * binom(2L * n, n), pow2(static_cast<unsigned long>(n) + 1)) -
         ratio(Integer(n - 1) * binom(2L * (n - 1), n - 1), pow2(static_cast<unsigned long>(n) - 1));
}

ExtensionReport extension_identity(const BinaryCode& code) {
  int n = code.length();
  Rational base = discrepancy_spectrum(distance_distribution(code));
  Rational extended = discrepancy_spectrum(distance_distribution(extend_code(code)));
  Rational predicted =
      2 * base + ratio(binom(2L * n, n), pow2(static_cast<unsigned long>(n) + 1));
  return ExtensionReport{extended, predicted};
}

Rational avg_distance(const DistanceDistribution& dist) {
  Rational s = 0;
  for (int w = 1; w <= dist.n; ++w) s += Rational(w) * dist.A[static_cast<size_t>(w)];
  return s / Rational(static_cast<unsigned long>(dist.N));
}

AvgRelationReport dual_avg_relation(const BinaryCode& code) {
  auto dist = distance_distribution(code);
  auto dual = dual_distribution(dist);
  Rational avg = avg_distance(dist);
  Rational from_dual = Rational(dist.n) / 2 - dual.A[1] / 2;
  return AvgRelationReport{avg, from_dual};
}

EstimateInterval distance_sum_bounds(const BinaryCode& code, const Rational& c) {
  if (c <= 0 || c > 1) throw std::domain_error("envelope constant c must lie in (0, 1]");
  int n = code.length();
  double avg = to_double(avg_distance(distance_distribution(code)));
  double cd = to_double(c);
  double scale = std::pow(2.0, n) / std::sqrt(M_PI * n);
  double lo = scale * (cd * n / 2.0 - std::sqrt(n * avg / 2.0));
  double hi = scale * (n / 2.0 - cd / 2.0 * avg);
  return EstimateInterval{lo, hi};
}

double fu_discrepancy_bound(int n, const Rational& N, const Rational& c) {
  if (c <= 0 || c > 1) throw std::domain_error("envelope constant c must lie in (0, 1]");
  if (N <= 0 || N * 2 > Rational(pow2(static_cast<unsigned long>(n))))
    throw std::domain_error("fu_discrepancy_bound requires 1 <= N <= 2^(n-1)");
  double cd = to_double(c);
  double cprime = 1.0 - cd / 2.0;
  double scale = std::pow(2.0, n) / std::sqrt(M_PI * n);
  return scale * (cprime * n / 2.0 + cd * std::pow(2.0, n - 3) / to_double(N));
}

DiscrepancyReport make_report(const Rational& value, Method method, std::string inputs_digest,
                              int decimal_digits) {
  return DiscrepancyReport{value, decimal_string(value, decimal_digits), method,
                           std::move(inputs_digest)};
}

}  // namespace codisc
