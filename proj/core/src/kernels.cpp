#include "codisc/kernels.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "codisc/errors.hpp"

namespace codisc {

namespace {

void require_length(int n) {
  if (n < 1) throw std::domain_error("length n must be positive, got " + std::to_string(n));
}

void require_range(int v, int lo, int hi, const char* what) {
  if (v < lo || v > hi)
    throw std::domain_error(std::string(what) + " = " + std::to_string(v) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace

Integer lambda_eval(int n, int w) {
  require_length(n);
  require_range(w, 0, n, "distance w");
  if (w == 0) return 0;
  return pow2(static_cast<unsigned long>(n - w)) * w * binom(w - 1, (w + 1) / 2 - 1);
}

Integer lambda_brute(int n, std::uint64_t x, std::uint64_t y, int oracle_limit) {
  require_length(n);
  if (n > oracle_limit)
    throw resource_error("lambda_brute: n = " + std::to_string(n) + " exceeds oracle limit " +
                         std::to_string(oracle_limit));
  if (n > 40) throw resource_error("lambda_brute: n > 40 is not enumerable");
  std::uint64_t mask = (1ULL << n) - 1;
  x &= mask;
  y &= mask;
  std::uint64_t total = 0;
  for (std::uint64_t u = 0; u <= mask; ++u) {
    int dx = std::popcount(u ^ x);
    int dy = std::popcount(u ^ y);
    total += static_cast<std::uint64_t>(dx > dy ? dx - dy : dy - dx);
  }
  return Integer(static_cast<unsigned long>(total / 2));
}

Rational lambda_average(int n) {
  require_length(n);
  return ratio(Integer(n) * binom(2L * n, n), pow2(static_cast<unsigned long>(n) + 1));
}

LambdaProfile lambda_profile(int n) {
  require_length(n);
  LambdaProfile p{n, {}};
  p.values.reserve(static_cast<size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) p.values.push_back(lambda_eval(n, w));
  for (int w = 1; w < n; ++w) {
    bool odd_step = (w % 2 == 1);  // lambda(2i-1) == lambda(2i)
    if (odd_step ? p.values[w] != p.values[w + 1] : p.values[w] >= p.values[w + 1])
      throw std::logic_error("lambda profile violates its monotonicity structure at w = " +
                             std::to_string(w));
  }
  return p;
}

ClosedFormReport closed_form_checks(int n) {
  require_length(n);
  Integer weighted = 0, alternating = 0;
  for (int w = 1; w <= n; ++w) {
    Integer term = binom(n, w) * lambda_eval(n, w);
    weighted += term;
    alternating += (w % 2 == 1) ? term : -term;
  }
  Integer closed_rhs = Integer(n) * binom(2L * n, n) / 2;  // n*C(2n,n) is even
  return ClosedFormReport{
      IdentityCheck{"sum C(n,w) lambda(w) = (n/2) C(2n,n)", weighted, closed_rhs},
      IdentityCheck{"alternating sum = C(2(n-1), n-1)", alternating, binom(2L * (n - 1), n - 1)},
  };
}

Integer mu_t(int n, int w, int t) {
  require_length(n);
  require_range(w, 0, n, "distance w");
  require_range(t, 0, n, "radius t");
  // u splits into i flips on the w disagreeing coordinates and j flips on the
  // rest: d(u,x) = i+j, d(u,y) = (w-i)+j
  Integer total = 0;
  for (int i = 0; i <= w; ++i) {
    for (int j = 0; j <= n - w; ++j) {
      if (i + j <= t && (w - i) + j <= t) total += binom(w, i) * binom(n - w, j);
    }
  }
  return total;
}

Integer ball_volume(int n, int t) {
  require_length(n);
  require_range(t, 0, n, "radius t");
  Integer total = 0;
  for (int i = 0; i <= t; ++i) total += binom(n, i);
  return total;
}

Integer ball_volume_sum(int n) {
  require_length(n);
  return Integer(n + 2) * pow2(static_cast<unsigned long>(n) - 1);
}

Integer ball_volume_sq_sum(int n) {
  require_length(n);
  return pow2(2UL * n - 1) * (n + 2) - Integer(n) * binom(2L * n, n) / 2;
}

}  // namespace codisc
