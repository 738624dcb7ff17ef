#ifndef CODISC_KRAWTCHOUK_HPP
#define CODISC_KRAWTCHOUK_HPP

#include <span>
#include <vector>

#include "codisc/kernels.hpp"
#include "codisc/rational.hpp"

namespace codisc {

/// K_k^(n)(x) = sum_i (-1)^i C(x,i) C(n-x,k-i), normalized so K_k(0) = C(n,k).
Integer kraw_eval(int n, int k, int x);

// Full (n+1) x (n+1) table of exact values, K(k, x) = K_k^(n)(x). Built by the
// three-term recurrence in k; validated against the generating function
// (1+z)^(n-x) (1-z)^x at construction.
class KrawtchoukTable {
 public:
  explicit KrawtchoukTable(int n);
  int n() const { return n_; }
  const Integer& operator()(int k, int x) const {
    return values_[static_cast<size_t>(k) * (n_ + 1) + static_cast<size_t>(x)];
  }

 private:
  int n_;
  std::vector<Integer> values_;
};

/// Verifies C(n,x) K_k(x) = C(n,k) * k-th backward difference of C(n-k, x),
/// for every x in 0..n. Returns the first failing x in `lhs`/`rhs`, or the
/// n-sums when all agree.
IdentityCheck rodrigues_check(int n, int k);

/// Coefficients of (K_i^(n))^2 on the basis {K_{2k}^(n)}: entry k holds
/// C(2k,k) C(n-2k, i-k), k = 0..min(i, n/2). Verified pointwise before return.
std::vector<Integer> square_expansion(int n, int i);

/// A-perp_w = (1/N) sum_i K_w(i) A_i.
std::vector<Rational> macwilliams_forward(std::span<const Rational> A, const Rational& N);

/// A_i = (N/2^n) sum_w K_i(w) A-perp_w; exact inverse of the forward map.
std::vector<Rational> macwilliams_inverse(std::span<const Rational> dual, const Rational& N);

/// Krawtchouk coefficients c_0..c_n of the ball indicator phi_t:
/// c_0(t) = |B(.,t)|, c_k(t) = K_t^(n-1)(k-1) for t < n, c_k(n) = 0 (k >= 1).
std::vector<Rational> mu_coefficients(int n, int t);

// Krawtchouk spectrum of lambda: lambda(w) = sum_k coeffs[k] K_k^(n)(w),
// coeffs[0] = Lambda_n, coeffs[k] = -2^-n sum_t (K_t^(n-1)(k-1))^2 < 0.
struct LambdaHat {
  int n;
  std::vector<Rational> coeffs;
  const Rational& operator()(int k) const { return coeffs.at(static_cast<size_t>(k)); }
};
LambdaHat lambda_hat(int n);

/// sum_w K_w^(n)(i) lambda(w) = (-1)^i sum_{w<n} K_w^(n-1)(2i-2) C(n-1,w),
/// for 1 <= i <= (n+1)/2.
IdentityCheck conj_identity(int n, int i);

/// sum_{t<n} (K_t^(n-1)(k-1))^2 = -sum_w lambda(w) K_w^(n)(k), k = 1..n.
IdentityCheck ctr_identity(int n, int k);

}  // namespace codisc

#endif
