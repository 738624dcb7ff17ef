#include "codisc/identity_suite.hpp"

#include <cstdint>

#include "codisc/kernels.hpp"
#include "codisc/krawtchouk.hpp"

namespace codisc {

namespace {

struct Recorder {
  IdentitySuiteReport* report;
  void take(const IdentityCheck& c) {
    ++report->checks;
    if (!c.pass())
      report->failures.push_back(c.name + ": " + c.lhs.get_str() + " != " + c.rhs.get_str());
  }
  void expect(bool ok, const std::string& what) {
    ++report->checks;
    if (!ok) report->failures.push_back(what);
  }
};

}  // namespace

IdentitySuiteReport run_identity_suite(int n_max) {
  IdentitySuiteReport report;
  Recorder rec{&report};
  for (int n = 1; n <= n_max; ++n) {
    ClosedFormReport cf = closed_form_checks(n);
    rec.take(cf.weighted_sum);
    rec.take(cf.alternating_sum);

    Integer sq = 0;
    for (int t = 0; t <= n; ++t) {
      Integer b = ball_volume(n, t);
      sq += b * b;
    }
    rec.expect(sq == ball_volume_sq_sum(n), "ball volume square sum, n=" + std::to_string(n));

    for (int i = 1; 2 * i <= n + 1; ++i) rec.take(conj_identity(n, i));
    for (int k = 1; k <= n; ++k) rec.take(ctr_identity(n, k));

    KrawtchoukTable K(n);  // construction validates the generating function
    for (int i = 0; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        Integer s = 0;
        for (int l = 0; l <= n; ++l) s += binom(n, l) * K(i, l) * K(j, l);
        Integer want = (i == j) ? pow2(static_cast<unsigned long>(n)) * binom(n, i) : Integer(0);
        rec.expect(s == want, "orthogonality n=" + std::to_string(n) + " (" + std::to_string(i) +
                                  "," + std::to_string(j) + ")");
      }
      for (int k = 0; k <= n; ++k)
        rec.expect(binom(n, i) * K(k, i) == binom(n, k) * K(i, k),
                   "symmetry n=" + std::to_string(n));
    }
    for (int k = 0; k <= n; ++k) rec.take(rodrigues_check(n, k));
    for (int i = 0; i <= n; ++i) {
      square_expansion(n, i);  // throws logic_error on mismatch
      ++report.checks;
    }

    // mu_t reconstruction and theta == lambda via the counting formulas
    Rational p2(pow2(static_cast<unsigned long>(n)));
    for (int t = 0; t <= n; ++t) {
      auto c = mu_coefficients(n, t);
      for (int w = 0; w <= n; ++w) {
        Rational s = 0;
        for (int k = 0; k <= n; ++k)
          s += c[static_cast<size_t>(k)] * c[static_cast<size_t>(k)] * Rational(K(k, w));
        rec.expect(s / p2 == Rational(mu_t(n, w, t)),
                   "mu_t reconstruction n=" + std::to_string(n) + " t=" + std::to_string(t) +
                       " w=" + std::to_string(w));
      }
    }
    LambdaHat hat = lambda_hat(n);
    for (int w = 0; w <= n; ++w) {
      Rational s = 0;
      for (int k = 0; k <= n; ++k) s += hat(k) * Rational(K(k, w));
      rec.expect(s == Rational(lambda_eval(n, w)),
                 "lambda reconstruction n=" + std::to_string(n) + " w=" + std::to_string(w));
      Integer mu_total = 0;
      for (int t = 0; t <= n; ++t) mu_total += mu_t(n, w, t);
      rec.expect(ball_volume_sum(n) - mu_total == lambda_eval(n, w),
                 "theta == lambda n=" + std::to_string(n) + " w=" + std::to_string(w));
    }

    // MacWilliams round-trip on a deterministic pseudorandom rational vector
    std::uint64_t state = 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(n);
    auto next = [&state] {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    std::vector<Rational> A{Rational(1)};
    for (int w = 1; w <= n; ++w)
      A.push_back(ratio(static_cast<long>(next() % 64), static_cast<long>(1 + next() % 9)));
    Rational N = ratio(static_cast<long>(1 + next() % 500), static_cast<long>(1 + next() % 11));
    auto round_trip = macwilliams_inverse(macwilliams_forward(A, N), N);
    rec.expect(round_trip == A, "MacWilliams round-trip n=" + std::to_string(n));
  }
  return report;
}

}  // namespace codisc
