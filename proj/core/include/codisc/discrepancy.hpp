#ifndef CODISC_DISCREPANCY_HPP
#define CODISC_DISCREPANCY_HPP

#include <string>

#include "codisc/codes.hpp"
#include "codisc/kernels.hpp"
#include "codisc/rational.hpp"

namespace codisc {

/// D(Z) = Lambda_n - (1/N) sum_{w>=1} A_w lambda(w).
Rational discrepancy_spectrum(const DistanceDistribution& dist);

/// Dual route: computes both -2^-n sum_i A'_i sum_w K_w(i) lambda(w) and
/// 2^-n sum_k A'_k sum_t (K_t^(n-1)(k-1))^2, checks they coincide, returns
/// the value. A disagreement means a broken transform and throws logic_error.
Rational discrepancy_dual(const DualDistribution& dual, const Rational& N);

/// Definitional oracle: sum over radii t and centers x of
/// (empirical(B(x,t)) - |B(x,t)|/2^n)^2, full enumeration of the cube.
/// `threads` <= 0 picks hardware concurrency.
Rational discrepancy_brute(const BinaryCode& code, int oracle_limit = kDefaultOracleLimit,
                           int threads = 1);

/// E[D] over random N-subsets: n C(2n,n) / (N 2^(n+1)) = Lambda_n / N.
Rational expected_discrepancy(int n, const Rational& N);

/// Upper estimate for Var(D) over random codes: max(0, (N-1)/N * Lambda_n - E[D]).
Rational variance_bound(int n, const Rational& N);

/// D of hamming:m in closed form: n 2^-n C(n-1, (n-1)/2), n = 2^m - 1.
Rational hamming_closed(int m);

/// D of simplex:m in closed form: Lambda_n - (n/N) lambda((n+1)/2), N = 2^m.
Rational simplex_closed(int m);

/// D of the codimension-1 subcube of {0,1}^n:
/// n 2^-(n+1) C(2n,n) - (n-1) 2^-(n-1) C(2n-2, n-1).
Rational subcube_closed(int n);

// D(Z^ex) vs 2 D(Z) + 2^-(n+1) C(2n,n); the identity holds for odd-length Z.
struct ExtensionReport {
  Rational extended;
  Rational predicted;
  bool pass() const { return extended == predicted; }
};
ExtensionReport extension_identity(const BinaryCode& code);

/// <d>_Z = (1/N) sum_w w A_w.
Rational avg_distance(const DistanceDistribution& dist);

// <d>_Z against n/2 - A'_1/2 (always exact for any code).
struct AvgRelationReport {
  Rational avg;
  Rational from_dual;
  bool pass() const { return avg == from_dual; }
};
AvgRelationReport dual_avg_relation(const BinaryCode& code);

// Estimate bounds built on the central-binomial envelope; doubles by design,
// never part of exact invariants.
struct EstimateInterval {
  double lo;
  double hi;
};
/// Two-sided estimate of D from the average distance, with envelope constant c.
EstimateInterval distance_sum_bounds(const BinaryCode& code, const Rational& c = ratio(9, 10));

/// Upper estimate of D for N <= 2^(n-1) via the minimum-average-distance bound
/// d(N) >= n/2 - 2^(n-2)/N. Uses c' = 1 - c/2.
double fu_discrepancy_bound(int n, const Rational& N, const Rational& c = ratio(9, 10));

enum class Method { definition, distance_spectrum, dual_spectrum, closed_form };

struct DiscrepancyReport {
  Rational value;
  std::string decimal;
  Method method;
  std::string inputs_digest;
};

DiscrepancyReport make_report(const Rational& value, Method method, std::string inputs_digest,
                              int decimal_digits = 6);

}  // namespace codisc

#endif
