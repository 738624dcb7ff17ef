#ifndef CODISC_LP_HPP
#define CODISC_LP_HPP

#include <span>
#include <string>
#include <vector>

#include "codisc/codes.hpp"
#include "codisc/rational.hpp"

namespace codisc {

enum class RowSense { le, eq, ge };

// max objective . x  subject to  rows, x >= 0.
struct LinearProgram {
  struct Row {
    std::vector<Rational> a;
    RowSense sense;
    Rational b;
  };
  std::vector<Rational> objective;
  std::vector<Row> rows;
};

enum class LPStatus { optimal, infeasible, unbounded };

struct LPResult {
  LPStatus status;
  Rational value;
  std::vector<Rational> solution;
  std::vector<std::string> basis_log;  // pivot audit trail
};

/// Exact two-phase simplex; Bland's rule, lowest-index pivoting throughout.
LPResult simplex_solve(const LinearProgram& lp);

// max sum A_k lambda(k) over A_1..A_n >= 0 with sum_k A_k K_i(k) >= -C(n,i)
// and sum A_k = N - 1; the optimum bounds the energy of every N-word code and
// Lambda_n - optimum/N bounds its discrepancy from below.
struct PrimalBound {
  int n;
  Rational N;
  LPResult lp;
  Rational energy;             // optimal objective
  Rational discrepancy_bound;  // Lambda_n - energy / N
};
PrimalBound primal_discrepancy_lp(int n, const Rational& N);

// Feasibility report for a dual vector h (Krawtchouk coefficients h_0..h_n).
// Universal regime: h_i >= 0 (i >= 1) and h(k) <= -lambda(k) for k = 1..n.
// Restricted regime (given a code): only where A'_k > 0 resp. A_i > 0.
struct DualCertificate {
  int n;
  std::vector<Rational> h;
  std::vector<Rational> pointwise;  // h(k) for k = 0..n
  Rational bound;                   // h(0) - N h_0, upper bound on code energy
  bool feasible;
  std::vector<std::string> violations;
  bool restricted_feasible = false;
  bool complementary_slackness = false;  // bound attained by the given code
};
DualCertificate check_certificate(int n, const Rational& N, std::span<const Rational> h);
DualCertificate check_certificate(int n, const Rational& N, std::span<const Rational> h,
                                  const DistanceDistribution& dist, const DualDistribution& dual);

// The three certificate families behind the closed-form energy bounds.
std::vector<Rational> constant_certificate(int n);
std::vector<Rational> two_term_certificate(int n);  // n = 2t-1
std::vector<Rational> hamming_certificate(int n);   // n odd

/// E <= (N-1) lambda(n).
Rational bound_constant(int n, const Rational& N);
/// n = 2t-1: E <= lambda(t)(N - 1/2) for t even, lambda(t)(Nn - (n-1)/2)/(n+1) for t odd.
Rational bound_two_term(int n, const Rational& N);
/// n odd: E <= N Lambda_n - (1 - N/2^n) C(n-1, (n-1)/2).
Rational bound_hamming_type(int n, const Rational& N);
/// n odd: D >= (2^n/N - 1) 2^-n C(n-1, (n-1)/2), the discrepancy face of the above.
Rational bound_hamming_discrepancy(int n, const Rational& N);

struct MinimizerReport {
  int n;
  Rational N;
  Rational discrepancy;
  Rational lp_bound;
  bool lp_optimal;  // discrepancy == lp_bound, exact
};
MinimizerReport certify_minimizer(const BinaryCode& code);
MinimizerReport certify_minimizer(const DistanceDistribution& dist);

/// a_j with lambda(w) = sum_j C(w,j) a_j; a_j = sum_{w<=j} (-1)^(j-w) C(j,w) lambda(w).
/// Reconstruction is verified before returning. Returns a_0..a_jmax.
std::vector<Rational> binomial_moment_coeffs(int n, int j_max);

/// {"n":..., "h":["p/q",...], "feasible":..., "bound":"p/q"}
std::string certificate_to_json(const DualCertificate& cert);

}  // namespace codisc

#endif
