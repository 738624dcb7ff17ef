#include "codisc/krawtchouk.hpp"

#include <stdexcept>
#include <string>

namespace codisc {

namespace {

void require_point(int n, int v, const char* what) {
  if (n < 1) throw std::domain_error("length n must be positive, got " + std::to_string(n));
  if (v < 0 || v > n)
    throw std::domain_error(std::string(what) + " = " + std::to_string(v) + " outside [0, " +
                            std::to_string(n) + "]");
}

}  // namespace

Integer kraw_eval(int n, int k, int x) {
  // n = 0 is the degenerate one-point domain, K_0(0) = 1
  if (n < 0 || k < 0 || k > n || x < 0 || x > n)
    throw std::domain_error("kraw_eval arguments outside 0 <= k,x <= n");
  Integer total = 0;
  for (int i = 0; i <= k; ++i) {
    Integer term = binom(x, i) * binom(n - x, k - i);
    total += (i % 2 == 0) ? term : -term;
  }
  return total;
}

KrawtchoukTable::KrawtchoukTable(int n) : n_(n) {
  require_point(n, 0, "degree k");
  size_t width = static_cast<size_t>(n) + 1;
  values_.assign(width * width, Integer(0));
  auto at = [&](int k, int x) -> Integer& { return values_[static_cast<size_t>(k) * width + x]; };
  for (int x = 0; x <= n; ++x) at(0, x) = 1;
  for (int x = 0; x <= n; ++x) at(1, x) = n - 2 * x;
  // (k+1) K_{k+1}(x) = (n-2x) K_k(x) - (n-k+1) K_{k-1}(x)
  for (int k = 1; k < n; ++k) {
    for (int x = 0; x <= n; ++x) {
      Integer num = Integer(n - 2 * x) * at(k, x) - Integer(n - k + 1) * at(k - 1, x);
      if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(k + 1)))
        throw std::logic_error("Krawtchouk recurrence produced a non-integer");
      at(k + 1, x) = num / (k + 1);
    }
  }
  // generating-function check: sum_k K_k(x) z^k = (1+z)^(n-x) (1-z)^x
  for (int x = 0; x <= n; ++x) {
    std::vector<Integer> poly(width, 0);
    poly[0] = 1;
    int deg = 0;
    for (int rep = 0; rep < n - x; ++rep) {  // multiply by (1+z)
      for (int d = deg; d >= 0; --d) poly[d + 1] += poly[d];
      ++deg;
    }
    for (int rep = 0; rep < x; ++rep) {  // multiply by (1-z)
      for (int d = deg; d >= 0; --d) poly[d + 1] -= poly[d];
      ++deg;
    }
    for (int k = 0; k <= n; ++k) {
      if (poly[k] != at(k, x))
        throw std::logic_error("Krawtchouk table disagrees with the generating function at (k=" +
                               std::to_string(k) + ", x=" + std::to_string(x) + ")");
    }
  }
}

IdentityCheck rodrigues_check(int n, int k) {
  require_point(n, k, "degree k");
  // nabla^k applied to f(x) = C(n-k, x): sum_j (-1)^j C(k,j) f(x-j)
  Integer lhs_sum = 0, rhs_sum = 0;
  for (int x = 0; x <= n; ++x) {
    Integer lhs = binom(n, x) * kraw_eval(n, k, x);
    Integer rhs = 0;
    for (int j = 0; j <= k; ++j) {
      Integer term = binom(k, j) * binom(n - k, x - j);
      rhs += (j % 2 == 0) ? term : -term;
    }
    rhs *= binom(n, k);
    if (lhs != rhs) return IdentityCheck{"rodrigues(n=" + std::to_string(n) + ",k=" +
                                             std::to_string(k) + ") at x=" + std::to_string(x),
                                         lhs, rhs};
    lhs_sum += lhs;
    rhs_sum += rhs;
  }
  return IdentityCheck{"rodrigues(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")",
                       lhs_sum, rhs_sum};
}

std::vector<Integer> square_expansion(int n, int i) {
  require_point(n, i, "degree i");
  int kmax = std::min(i, n / 2);
  std::vector<Integer> coeffs;
  coeffs.reserve(static_cast<size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) coeffs.push_back(binom(2 * k, k) * binom(n - 2 * k, i - k));
  for (int x = 0; x <= n; ++x) {
    Integer direct = kraw_eval(n, i, x);
    direct *= direct;
    Integer expanded = 0;
    for (int k = 0; k <= kmax; ++k) expanded += coeffs[static_cast<size_t>(k)] * kraw_eval(n, 2 * k, x);
    if (direct != expanded)
      throw std::logic_error("square_expansion mismatch at (n=" + std::to_string(n) + ", i=" +
                             std::to_string(i) + ", x=" + std::to_string(x) + ")");
  }
  return coeffs;
}

std::vector<Rational> macwilliams_forward(std::span<const Rational> A, const Rational& N) {
  if (A.empty()) throw std::domain_error("macwilliams_forward: empty distribution");
  if (N <= 0) throw std::domain_error("macwilliams_forward: N must be positive");
  int n = static_cast<int>(A.size()) - 1;
  KrawtchoukTable K(n);
  std::vector<Rational> dual(A.size());
  for (int w = 0; w <= n; ++w) {
    Rational s = 0;
    for (int i = 0; i <= n; ++i) s += Rational(K(w, i)) * A[static_cast<size_t>(i)];
    dual[static_cast<size_t>(w)] = s / N;
  }
  return dual;
}

std::vector<Rational> macwilliams_inverse(std::span<const Rational> dual, const Rational& N) {
  if (dual.empty()) throw std::domain_error("macwilliams_inverse: empty distribution");
  if (N <= 0) throw std::domain_error("macwilliams_inverse: N must be positive");
  int n = static_cast<int>(dual.size()) - 1;
  KrawtchoukTable K(n);
  Rational scale = N / Rational(pow2(static_cast<unsigned long>(n)));
  std::vector<Rational> A(dual.size());
  for (int i = 0; i <= n; ++i) {
    Rational s = 0;
    for (int w = 0; w <= n; ++w) s += Rational(K(i, w)) * dual[static_cast<size_t>(w)];
    A[static_cast<size_t>(i)] = s * scale;
  }
  return A;
}

std::vector<Rational> mu_coefficients(int n, int t) {
  require_point(n, t, "radius t");
  std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
  c[0] = Rational(ball_volume(n, t));
  if (t < n) {
    for (int k = 1; k <= n; ++k) c[static_cast<size_t>(k)] = Rational(kraw_eval(n - 1, t, k - 1));
  }
  return c;
}

LambdaHat lambda_hat(int n) {
  require_point(n, 0, "degree k");
  LambdaHat h{n, std::vector<Rational>(static_cast<size_t>(n) + 1)};
  h.coeffs[0] = lambda_average(n);
  Rational scale = ratio(Integer(-1), pow2(static_cast<unsigned long>(n)));
  KrawtchoukTable K(n > 1 ? n - 1 : 1);
  for (int k = 1; k <= n; ++k) {
    Integer s = 0;
    if (n == 1) {
      s = 1;  // single term t=0: K_0^(0)(0) = 1
    } else {
      for (int t = 0; t <= n - 1; ++t) {
        const Integer& v = K(t, k - 1);
        s += v * v;
      }
    }
    h.coeffs[static_cast<size_t>(k)] = scale * Rational(s);
  }
  return h;
}

IdentityCheck conj_identity(int n, int i) {
  if (n < 1) throw std::domain_error("length n must be positive");
  if (i < 1 || 2 * i > n + 1)
    throw std::domain_error("conj_identity: i = " + std::to_string(i) + " outside [1, (n+1)/2]");
  Integer lhs = 0;
  for (int w = 0; w <= n; ++w) lhs += kraw_eval(n, w, i) * lambda_eval(n, w);
  Integer rhs = 0;
  if (n == 1) {
    rhs = 1;  // K_0^(0)(0) C(0,0)
  } else {
    for (int w = 0; w <= n - 1; ++w) rhs += kraw_eval(n - 1, w, 2 * i - 2) * binom(n - 1, w);
  }
  if (i % 2 == 1) rhs = -rhs;
  return IdentityCheck{"conj(n=" + std::to_string(n) + ",i=" + std::to_string(i) + ")", lhs, rhs};
}

IdentityCheck ctr_identity(int n, int k) {
  require_point(n, k, "degree k");
  if (k < 1) throw std::domain_error("ctr_identity: k must be >= 1");
  Integer lhs = 0;
  if (n == 1) {
    lhs = 1;
  } else {
    for (int t = 0; t <= n - 1; ++t) {
      Integer v = kraw_eval(n - 1, t, k - 1);
      lhs += v * v;
    }
  }
  Integer rhs = 0;
  for (int w = 1; w <= n; ++w) rhs += lambda_eval(n, w) * kraw_eval(n, w, k);
  rhs = -rhs;
  return IdentityCheck{"ctr(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")", lhs, rhs};
}

}  // namespace codisc
