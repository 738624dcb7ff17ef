#ifndef CODISC_KERNELS_HPP
#define CODISC_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "codisc/rational.hpp"

namespace codisc {

// Full-space enumerations (2^n points) refuse to run past this length unless
// the caller raises the limit explicitly.
inline constexpr int kDefaultOracleLimit = 20;

/// lambda(w) = 2^(n-w) * w * C(w-1, ceil(w/2)-1) for w >= 1, lambda(0) = 0.
/// The distance kernel of the n-cube: half the total variation of the two
/// distance profiles d(x,.), d(y,.) over the space, for d(x,y) = w.
Integer lambda_eval(int n, int w);

/// Definitional oracle: (1/2) * sum over all u in {0,1}^n of |d(x,u)-d(y,u)|,
/// by full enumeration. x, y are n-bit words (bit j = coordinate j).
Integer lambda_brute(int n, std::uint64_t x, std::uint64_t y, int oracle_limit = kDefaultOracleLimit);

/// Space average of lambda: Lambda_n = n * C(2n,n) / 2^(n+1).
Rational lambda_average(int n);

// lambda(0..n) with the structural invariants checked at construction:
// lambda(0) = 0, lambda(2i-1) = lambda(2i), nondecreasing, strict on the
// even-to-odd steps.
struct LambdaProfile {
  int n;
  std::vector<Integer> values;
  const Integer& operator()(int w) const { return values.at(static_cast<size_t>(w)); }
};
LambdaProfile lambda_profile(int n);

// One verified identity: both sides are reported, failure is data, not a throw.
struct IdentityCheck {
  std::string name;
  Integer lhs;
  Integer rhs;
  bool pass() const { return lhs == rhs; }
};

// (i) sum_w C(n,w) lambda(w) = (n/2) C(2n,n)
// (ii) sum_w (-1)^(w+1) C(n,w) lambda(w) = C(2(n-1), n-1)
struct ClosedFormReport {
  IdentityCheck weighted_sum;
  IdentityCheck alternating_sum;
  bool pass() const { return weighted_sum.pass() && alternating_sum.pass(); }
};
ClosedFormReport closed_form_checks(int n);

/// |B(x,t) ∩ B(y,t)| for d(x,y) = w, by the double-binomial counting sum.
Integer mu_t(int n, int w, int t);

/// |B(.,t)| = sum_{i<=t} C(n,i).
Integer ball_volume(int n, int t);

/// sum_t |B(.,t)| = (n+2) 2^(n-1).
Integer ball_volume_sum(int n);

/// sum_t |B(.,t)|^2 = 2^(2n-1)(n+2) - (n/2) C(2n,n).
Integer ball_volume_sq_sum(int n);

}  // namespace codisc

#endif
