#include "codisc/lp.hpp"

#include <algorithm>
#include <stdexcept>

#include "codisc/kernels.hpp"
#include "codisc/krawtchouk.hpp"

namespace codisc {

namespace {

// Dense tableau simplex over exact rationals. Columns: structural variables,
// then slack/surplus, then one artificial per row that needs one. Bland's
// rule everywhere: entering column = lowest eligible index, leaving row = the
// minimum-ratio row with the lowest basis column index.
class Tableau {
 public:
  Tableau(const LinearProgram& lp, std::vector<std::string>* log) : log_(log) {
    nvars_ = lp.objective.size();
    size_t nrows = lp.rows.size();
    size_t nslack = 0;
    for (const auto& row : lp.rows)
      if (row.sense != RowSense::eq) ++nslack;
    total_ = nvars_ + nslack + nrows;  // artificial slots, some unused
    rows_.reserve(nrows);
    rhs_.reserve(nrows);
    basis_.reserve(nrows);
    size_t slack_at = nvars_;
    art_begin_ = nvars_ + nslack;
    for (size_t r = 0; r < nrows; ++r) {
      const auto& row = lp.rows[r];
      if (row.a.size() != nvars_) throw std::domain_error("LP row arity mismatch");
      std::vector<Rational> t(total_, Rational(0));
      Rational b = row.b;
      int sign = 1;
      if (b < 0) sign = -1;  // normalize to b >= 0 so phase 1 starts basic-feasible
      for (size_t j = 0; j < nvars_; ++j) t[j] = sign * row.a[j];
      b *= sign;
      RowSense sense = row.sense;
      if (sign < 0 && sense != RowSense::eq)
        sense = (sense == RowSense::le) ? RowSense::ge : RowSense::le;
      size_t basic = SIZE_MAX;
      if (sense == RowSense::le) {
        t[slack_at] = 1;
        basic = slack_at++;
      } else if (sense == RowSense::ge) {
        t[slack_at] = -1;
        ++slack_at;
      }
      if (basic == SIZE_MAX) {
        t[art_begin_ + r] = 1;
        basic = art_begin_ + r;
        artificial_rows_.push_back(r);
      }
      rows_.push_back(std::move(t));
      rhs_.push_back(std::move(b));
      basis_.push_back(basic);
    }
  }

  bool needs_phase1() const { return !artificial_rows_.empty(); }

  // max c.x over the allowed column range; returns false when unbounded
  bool optimize(const std::vector<Rational>& costs, size_t allowed_end) {
    for (;;) {
      size_t enter = SIZE_MAX;
      for (size_t j = 0; j < allowed_end; ++j) {
        if (reduced_cost(costs, j) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == SIZE_MAX) return true;
      size_t leave = SIZE_MAX;
      Rational best;
      for (size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][enter] <= 0) continue;
        Rational ratio = rhs_[r] / rows_[r][enter];
        if (leave == SIZE_MAX || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          best = ratio;
          leave = r;
        }
      }
      if (leave == SIZE_MAX) return false;
      pivot(leave, enter);
    }
  }

  // after phase 1: pivot leftover artificial basics onto structural columns
  void evict_artificials() {
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] < art_begin_) continue;
      size_t col = SIZE_MAX;
      for (size_t j = 0; j < art_begin_; ++j) {
        if (rows_[r][j] != 0) {
          col = j;
          break;
        }
      }
      if (col != SIZE_MAX) pivot(r, col);
      // an all-zero row is a redundant constraint; its artificial stays basic at 0
    }
  }

  Rational phase1_infeasibility() const {
    Rational s = 0;
    for (size_t r = 0; r < rows_.size(); ++r)
      if (basis_[r] >= art_begin_) s += rhs_[r];
    return s;
  }

  std::vector<Rational> phase1_costs() const {
    std::vector<Rational> c(total_, Rational(0));
    for (size_t r : artificial_rows_) c[art_begin_ + r] = -1;
    return c;
  }

  size_t structural_end() const { return art_begin_; }
  size_t nvars() const { return nvars_; }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(nvars_, Rational(0));
    for (size_t r = 0; r < rows_.size(); ++r)
      if (basis_[r] < nvars_) x[basis_[r]] = rhs_[r];
    return x;
  }

 private:
  Rational reduced_cost(const std::vector<Rational>& costs, size_t j) const {
    Rational z = 0;
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Rational& cb = costs[basis_[r]];
      if (cb != 0) z += cb * rows_[r][j];
    }
    return costs[j] - z;
  }

  void pivot(size_t r, size_t c) {
    if (log_)
      log_->push_back("pivot: column " + std::to_string(c) + " replaces column " +
                      std::to_string(basis_[r]) + " in row " + std::to_string(r));
    Rational pv = rows_[r][c];
    for (auto& v : rows_[r]) v /= pv;
    rhs_[r] /= pv;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (i == r) continue;
      Rational f = rows_[i][c];
      if (f == 0) continue;
      for (size_t j = 0; j < total_; ++j) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  size_t nvars_ = 0;
  size_t total_ = 0;
  size_t art_begin_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<size_t> basis_;
  std::vector<size_t> artificial_rows_;
  std::vector<std::string>* log_;
};

}  // namespace

LPResult simplex_solve(const LinearProgram& lp) {
  LPResult result;
  Tableau tableau(lp, &result.basis_log);
  if (tableau.needs_phase1()) {
    tableau.optimize(tableau.phase1_costs(), tableau.structural_end() + lp.rows.size());
    if (tableau.phase1_infeasibility() != 0) {
      result.status = LPStatus::infeasible;
      result.value = 0;
      return result;
    }
    tableau.evict_artificials();
  }
  std::vector<Rational> costs(tableau.structural_end() + lp.rows.size(), Rational(0));
  for (size_t j = 0; j < lp.objective.size(); ++j) costs[j] = lp.objective[j];
  if (!tableau.optimize(costs, tableau.structural_end())) {
    result.status = LPStatus::unbounded;
    result.value = 0;
    return result;
  }
  result.status = LPStatus::optimal;
  result.solution = tableau.solution();
  result.value = 0;
  for (size_t j = 0; j < lp.objective.size(); ++j)
    result.value += lp.objective[j] * result.solution[j];
  return result;
}

PrimalBound primal_discrepancy_lp(int n, const Rational& N) {
  if (n < 1) throw std::domain_error("length n must be positive");
  if (N < 1 || N > Rational(pow2(static_cast<unsigned long>(n))))
    throw std::domain_error("primal_discrepancy_lp requires 1 <= N <= 2^n");
  KrawtchoukTable K(n);
  LinearProgram lp;
  lp.objective.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) lp.objective.push_back(Rational(lambda_eval(n, k)));
  for (int i = 1; i <= n; ++i) {
    LinearProgram::Row row;
    row.a.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) row.a.push_back(Rational(K(i, k)));
    row.sense = RowSense::ge;
    row.b = Rational(-binom(n, i));
    lp.rows.push_back(std::move(row));
  }
  lp.rows.push_back({std::vector<Rational>(static_cast<size_t>(n), Rational(1)), RowSense::eq,
                     N - 1});
  LPResult res = simplex_solve(lp);
  if (res.status != LPStatus::optimal)
    throw std::logic_error("primal discrepancy LP must be solvable");
  PrimalBound out{n, N, std::move(res), {}, {}};
  out.energy = out.lp.value;
  out.discrepancy_bound = lambda_average(n) - out.energy / N;
  return out;
}

namespace {

DualCertificate evaluate_certificate(int n, const Rational& N, std::span<const Rational> h) {
  if (h.size() != static_cast<size_t>(n) + 1)
    throw std::domain_error("certificate must have n + 1 coefficients");
  if (N < 1) throw std::domain_error("N must be >= 1");
  DualCertificate cert;
  cert.n = n;
  cert.h.assign(h.begin(), h.end());
  KrawtchoukTable K(n);
  cert.pointwise.resize(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational v = 0;
    for (int i = 0; i <= n; ++i) v += h[static_cast<size_t>(i)] * Rational(K(i, k));
    cert.pointwise[static_cast<size_t>(k)] = v;
  }
  cert.bound = cert.pointwise[0] - N * h[0];
  cert.feasible = true;
  for (int i = 1; i <= n; ++i) {
    if (h[static_cast<size_t>(i)] < 0) {
      cert.feasible = false;
      cert.violations.push_back("h_" + std::to_string(i) + " = " +
                                to_string(h[static_cast<size_t>(i)]) + " < 0");
    }
  }
  for (int k = 1; k <= n; ++k) {
    Rational limit = -Rational(lambda_eval(n, k));
    if (cert.pointwise[static_cast<size_t>(k)] > limit) {
      cert.feasible = false;
      cert.violations.push_back("h(" + std::to_string(k) + ") = " +
                                to_string(cert.pointwise[static_cast<size_t>(k)]) +
                                " > -lambda(" + std::to_string(k) + ")");
    }
  }
  return cert;
}

}  // namespace

DualCertificate check_certificate(int n, const Rational& N, std::span<const Rational> h) {
  return evaluate_certificate(n, N, h);
}

DualCertificate check_certificate(int n, const Rational& N, std::span<const Rational> h,
                                  const DistanceDistribution& dist,
                                  const DualDistribution& dual) {
  DualCertificate cert = evaluate_certificate(n, N, h);
  if (dist.n != n || dual.n != n) throw std::domain_error("distribution length mismatch");
  cert.restricted_feasible = true;
  for (int k = 1; k <= n; ++k) {
    if (dual.A[static_cast<size_t>(k)] > 0 && h[static_cast<size_t>(k)] < 0)
      cert.restricted_feasible = false;
    if (dist.A[static_cast<size_t>(k)] > 0 &&
        cert.pointwise[static_cast<size_t>(k)] > -Rational(lambda_eval(n, k)))
      cert.restricted_feasible = false;
  }
  // equality iff every active constraint is tight
  bool slack = false;
  for (int k = 1; k <= n; ++k) {
    if (dual.A[static_cast<size_t>(k)] > 0 && h[static_cast<size_t>(k)] != 0) slack = true;
    if (dist.A[static_cast<size_t>(k)] > 0 &&
        cert.pointwise[static_cast<size_t>(k)] != -Rational(lambda_eval(n, k)))
      slack = true;
  }
  cert.complementary_slackness = cert.restricted_feasible && !slack;
  return cert;
}

std::vector<Rational> constant_certificate(int n) {
  if (n < 1) throw std::domain_error("length n must be positive");
  std::vector<Rational> h(static_cast<size_t>(n) + 1, Rational(0));
  h[0] = -Rational(lambda_eval(n, n));
  return h;
}

std::vector<Rational> two_term_certificate(int n) {
  if (n < 1 || n % 2 == 0) throw std::domain_error("two-term certificate requires odd n = 2t-1");
  int t = (n + 1) / 2;
  Rational lam_t(lambda_eval(n, t));
  std::vector<Rational> h(static_cast<size_t>(n) + 1, Rational(0));
  Rational h1 = lam_t / Rational(4 * t);
  h[1] = h1;
  h[static_cast<size_t>(n)] = h1;
  if (t % 2 == 0)
    h[0] = -lam_t;
  else
    h[0] = -lam_t * (Rational(1) - ratio(1, 2L * t));
  return h;
}

std::vector<Rational> hamming_certificate(int n) {
  if (n < 1 || n % 2 == 0) throw std::domain_error("hamming certificate requires odd n");
  LambdaHat hat = lambda_hat(n);
  int mid = (n + 1) / 2;
  std::vector<Rational> h(static_cast<size_t>(n) + 1, Rational(0));
  for (int j = 0; j <= n; ++j) {
    if (j == mid) continue;
    h[static_cast<size_t>(j)] = hat(mid) - hat(j);
  }
  return h;
}

Rational bound_constant(int n, const Rational& N) {
  if (N < 1) throw std::domain_error("N must be >= 1");
  return (N - 1) * Rational(lambda_eval(n, n));
}

Rational bound_two_term(int n, const Rational& N) {
  if (n < 1 || n % 2 == 0) throw std::domain_error("bound_two_term requires odd n = 2t-1");
  if (N < 1) throw std::domain_error("N must be >= 1");
  int t = (n + 1) / 2;
  Rational lam_t(lambda_eval(n, t));
  if (t % 2 == 0) return lam_t * (N - ratio(1, 2));
  return lam_t * (N * n - ratio(n - 1, 2)) / Rational(n + 1);
}

Rational bound_hamming_type(int n, const Rational& N) {
  if (n < 1 || n % 2 == 0) throw std::domain_error("bound_hamming_type requires odd n");
  if (N < 1) throw std::domain_error("N must be >= 1");
  Rational p2(pow2(static_cast<unsigned long>(n)));
  return N * lambda_average(n) -
         (Rational(1) - N / p2) * Rational(binom(n - 1, (n - 1) / 2));
}

Rational bound_hamming_discrepancy(int n, const Rational& N) {
  if (n < 1 || n % 2 == 0) throw std::domain_error("bound_hamming_discrepancy requires odd n");
  if (N < 1) throw std::domain_error("N must be >= 1");
  Rational p2(pow2(static_cast<unsigned long>(n)));
  return (p2 / N - 1) * Rational(binom(n - 1, (n - 1) / 2)) / p2;
}

MinimizerReport certify_minimizer(const DistanceDistribution& dist) {
  Rational N(static_cast<unsigned long>(dist.N));
  Rational d = 0;
  {
    Rational energy = 0;
    for (int w = 1; w <= dist.n; ++w)
      energy += dist.A[static_cast<size_t>(w)] * Rational(lambda_eval(dist.n, w));
    d = lambda_average(dist.n) - energy / N;
  }
  PrimalBound lp = primal_discrepancy_lp(dist.n, N);
  return MinimizerReport{dist.n, N, d, lp.discrepancy_bound, d == lp.discrepancy_bound};
}

MinimizerReport certify_minimizer(const BinaryCode& code) {
  return certify_minimizer(distance_distribution(code));
}

std::vector<Rational> binomial_moment_coeffs(int n, int j_max) {
  if (n < 1) throw std::domain_error("length n must be positive");
  if (j_max < 0 || j_max > n) throw std::domain_error("j_max must lie in 0..n");
  std::vector<Rational> a(static_cast<size_t>(j_max) + 1, Rational(0));
  for (int j = 1; j <= j_max; ++j) {
    Integer s = 0;
    for (int w = 1; w <= j; ++w) {
      Integer term = binom(j, w) * lambda_eval(n, w);
      s += ((j - w) % 2 == 0) ? term : -term;
    }
    a[static_cast<size_t>(j)] = Rational(s);
  }
  for (int w = 0; w <= j_max; ++w) {
    Rational rebuilt = 0;
    for (int j = 0; j <= w; ++j) rebuilt += Rational(binom(w, j)) * a[static_cast<size_t>(j)];
    if (rebuilt != Rational(lambda_eval(n, w)))
      throw std::logic_error("binomial moment reconstruction failed at w = " + std::to_string(w));
  }
  return a;
}

std::string certificate_to_json(const DualCertificate& cert) {
  std::string out = "{\"n\": " + std::to_string(cert.n) + ", \"h\": [";
  for (size_t i = 0; i < cert.h.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + to_string(cert.h[i]) + "\"";
  }
  out += "], \"feasible\": ";
  out += cert.feasible ? "true" : "false";
  out += ", \"bound\": \"" + to_string(cert.bound) + "\"}";
  return out;
}

}  // namespace codisc
