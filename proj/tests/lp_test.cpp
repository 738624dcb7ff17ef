#include "codisc/lp.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>

#include "codisc/discrepancy.hpp"
#include "codisc/kernels.hpp"
#include "codisc/krawtchouk.hpp"
#include "doctest.h"

using namespace codisc;

namespace {

Rational code_energy(const DistanceDistribution& dist) {
  Rational e = 0;
  for (int w = 1; w <= dist.n; ++w)
    e += dist.A[static_cast<size_t>(w)] * Rational(lambda_eval(dist.n, w));
  return e;
}

}  // namespace

TEST_CASE("simplex solver on hand LPs") {
  SUBCASE("max x s.t. x <= 1") {
    LinearProgram lp;
    lp.objective = {Rational(1)};
    lp.rows.push_back({{Rational(1)}, RowSense::le, Rational(1)});
    LPResult r = simplex_solve(lp);
    REQUIRE(r.status == LPStatus::optimal);
    CHECK(r.value == 1);
    CHECK(r.solution == std::vector<Rational>{Rational(1)});
  }
  SUBCASE("unbounded") {
    LinearProgram lp;
    lp.objective = {Rational(1)};
    lp.rows.push_back({{Rational(-1)}, RowSense::le, Rational(1)});
    CHECK(simplex_solve(lp).status == LPStatus::unbounded);
  }
  SUBCASE("infeasible") {
    LinearProgram lp;
    lp.objective = {Rational(1)};
    lp.rows.push_back({{Rational(1)}, RowSense::le, Rational(1)});
    lp.rows.push_back({{Rational(1)}, RowSense::ge, Rational(2)});
    CHECK(simplex_solve(lp).status == LPStatus::infeasible);
  }
  SUBCASE("equalities, rational data, negative rhs") {
    LinearProgram lp;  // max x + y, x + 2y = 3/2, x - y >= -1
    lp.objective = {Rational(1), Rational(1)};
    lp.rows.push_back({{Rational(1), Rational(2)}, RowSense::eq, ratio(3, 2)});
    lp.rows.push_back({{Rational(1), Rational(-1)}, RowSense::ge, Rational(-1)});
    LPResult r = simplex_solve(lp);
    REQUIRE(r.status == LPStatus::optimal);
    CHECK(r.value == ratio(3, 2));  // x = 3/2, y = 0
    CHECK(r.solution[0] == ratio(3, 2));
  }
  SUBCASE("degenerate cycling guard") {
    // classic Beale-style degeneracy; Bland must terminate
    LinearProgram lp;
    lp.objective = {ratio(3, 4), Rational(-150), ratio(1, 50), Rational(-6)};
    lp.rows.push_back({{ratio(1, 4), Rational(-60), ratio(-1, 25), Rational(9)},
                       RowSense::le, Rational(0)});
    lp.rows.push_back({{ratio(1, 2), Rational(-90), ratio(-1, 50), Rational(3)},
                       RowSense::le, Rational(0)});
    lp.rows.push_back({{Rational(0), Rational(0), Rational(1), Rational(0)},
                       RowSense::le, Rational(1)});
    LPResult r = simplex_solve(lp);
    REQUIRE(r.status == LPStatus::optimal);
    CHECK(r.value == ratio(1, 20));
  }
}

namespace {

// test-only oracle: enumerate every basic solution of {Ax <= b, x >= 0},
// keep the feasible ones, and return the best objective value
std::optional<Rational> brute_force_lp_max(const std::vector<Rational>& c,
                                           const std::vector<std::vector<Rational>>& A,
                                           const std::vector<Rational>& b) {
  size_t nv = c.size();
  size_t rows = A.size();
  // tight-set candidates: each row as equality, each coordinate at zero
  std::vector<std::vector<Rational>> eqs;
  std::vector<Rational> rhs;
  for (size_t r = 0; r < rows; ++r) {
    eqs.push_back(A[r]);
    rhs.push_back(b[r]);
  }
  for (size_t j = 0; j < nv; ++j) {
    std::vector<Rational> e(nv, Rational(0));
    e[j] = 1;
    eqs.push_back(e);
    rhs.push_back(Rational(0));
  }
  std::optional<Rational> best;
  std::vector<size_t> pick(nv);
  std::function<void(size_t, size_t)> choose = [&](size_t from, size_t got) {
    if (got == nv) {
      // solve the nv x nv system exactly
      std::vector<std::vector<Rational>> m(nv, std::vector<Rational>(nv + 1));
      for (size_t i = 0; i < nv; ++i) {
        for (size_t j = 0; j < nv; ++j) m[i][j] = eqs[pick[i]][j];
        m[i][nv] = rhs[pick[i]];
      }
      for (size_t col = 0; col < nv; ++col) {
        size_t p = col;
        while (p < nv && m[p][col] == 0) ++p;
        if (p == nv) return;  // singular
        std::swap(m[col], m[p]);
        Rational pv = m[col][col];
        for (auto& v : m[col]) v /= pv;
        for (size_t i = 0; i < nv; ++i) {
          if (i == col || m[i][col] == 0) continue;
          Rational f = m[i][col];
          for (size_t j = 0; j <= nv; ++j) m[i][j] -= f * m[col][j];
        }
      }
      std::vector<Rational> x(nv);
      for (size_t i = 0; i < nv; ++i) x[i] = m[i][nv];
      for (const auto& v : x)
        if (v < 0) return;
      for (size_t r = 0; r < rows; ++r) {
        Rational lhs = 0;
        for (size_t j = 0; j < nv; ++j) lhs += A[r][j] * x[j];
        if (lhs > b[r]) return;
      }
      Rational val = 0;
      for (size_t j = 0; j < nv; ++j) val += c[j] * x[j];
      if (!best || val > *best) best = val;
      return;
    }
    if (from >= eqs.size()) return;
    pick[got] = from;
    choose(from + 1, got + 1);
    choose(from + 1, got);
  };
  choose(0, 0);
  return best;
}

}  // namespace

TEST_CASE("simplex agrees with exact vertex enumeration on random boxed LPs") {
  std::mt19937_64 rng(314159);
  int solved = 0;
  for (int trial = 0; trial < 60; ++trial) {
    size_t nv = 2 + rng() % 3;   // 2..4 variables
    size_t rows = 1 + rng() % 4; // plus a box, so always bounded
    std::vector<Rational> c;
    for (size_t j = 0; j < nv; ++j)
      c.push_back(ratio(static_cast<long>(rng() % 21) - 10, static_cast<long>(1 + rng() % 4)));
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (size_t r = 0; r < rows; ++r) {
      std::vector<Rational> row;
      for (size_t j = 0; j < nv; ++j)
        row.push_back(ratio(static_cast<long>(rng() % 11) - 5, static_cast<long>(1 + rng() % 3)));
      A.push_back(row);
      b.push_back(ratio(static_cast<long>(rng() % 15) - 3, 1));  // sometimes negative
    }
    for (size_t j = 0; j < nv; ++j) {  // box x_j <= M
      std::vector<Rational> e(nv, Rational(0));
      e[j] = 1;
      A.push_back(e);
      b.push_back(Rational(static_cast<long>(5 + rng() % 10)));
    }
    LinearProgram lp;
    lp.objective = c;
    for (size_t r = 0; r < A.size(); ++r) lp.rows.push_back({A[r], RowSense::le, b[r]});
    LPResult got = simplex_solve(lp);
    auto want = brute_force_lp_max(c, A, b);
    if (!want) {
      CHECK(got.status == LPStatus::infeasible);
    } else {
      REQUIRE(got.status == LPStatus::optimal);
      CHECK(got.value == *want);
      ++solved;
    }
  }
  CHECK(solved > 20);  // the instance generator must not degenerate to all-infeasible
}

TEST_CASE("row permutation invariance of the optimum") {
  std::mt19937_64 rng(8);
  PrimalBound base = primal_discrepancy_lp(9, Rational(16));
  KrawtchoukTable K(9);
  for (int trial = 0; trial < 5; ++trial) {
    LinearProgram lp;
    for (int k = 1; k <= 9; ++k) lp.objective.push_back(Rational(lambda_eval(9, k)));
    std::vector<int> order;
    for (int i = 1; i <= 9; ++i) order.push_back(i);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i : order) {
      LinearProgram::Row row;
      for (int k = 1; k <= 9; ++k) row.a.push_back(Rational(K(i, k)));
      row.sense = RowSense::ge;
      row.b = Rational(-binom(9, i));
      lp.rows.push_back(std::move(row));
    }
    lp.rows.push_back({std::vector<Rational>(9, Rational(1)), RowSense::eq, Rational(15)});
    LPResult r = simplex_solve(lp);
    REQUIRE(r.status == LPStatus::optimal);
    CHECK(r.value == base.energy);
  }
}

namespace {

// exact feasibility of a solution for the primal discrepancy LP
void check_primal_feasible(const PrimalBound& b) {
  int n = b.n;
  KrawtchoukTable K(n);
  Rational total = 0;
  for (int k = 1; k <= n; ++k) {
    const Rational& a = b.lp.solution[static_cast<size_t>(k - 1)];
    CHECK(a >= 0);
    total += a;
  }
  CHECK(total == b.N - 1);
  for (int i = 1; i <= n; ++i) {
    Rational lhs = 0;
    for (int k = 1; k <= n; ++k)
      lhs += b.lp.solution[static_cast<size_t>(k - 1)] * Rational(K(i, k));
    CHECK(lhs >= -Rational(binom(n, i)));
  }
}

}  // namespace

TEST_CASE("primal LP reproduces the known optima") {
  SUBCASE("(7,16): hamming(3) is LP-optimal") {
    PrimalBound b = primal_discrepancy_lp(7, Rational(16));
    CHECK(b.energy == 1484);
    CHECK(b.discrepancy_bound == ratio(35, 32));
    check_primal_feasible(b);
  }
  SUBCASE("(7,8): optimum 720 with the known distribution") {
    PrimalBound b = primal_discrepancy_lp(7, Rational(8));
    CHECK(b.energy == 720);
    CHECK(b.discrepancy_bound == ratio(123, 32));
    std::vector<Rational> expected = {Rational(0), Rational(0), Rational(3), Rational(2),
                                      Rational(1), Rational(1), Rational(0)};
    CHECK(b.lp.solution == expected);
    check_primal_feasible(b);
  }
  SUBCASE("solutions satisfy every constraint exactly at various sizes") {
    for (auto [n, N] : {std::pair<int, int>{9, 5}, {10, 37}, {13, 512}, {17, 512}})
      check_primal_feasible(primal_discrepancy_lp(n, Rational(N)));
  }
  SUBCASE("(n,2): repetition meets the constant bound") {
    for (int n = 3; n <= 11; n += 2) {
      PrimalBound b = primal_discrepancy_lp(n, Rational(2));
      CHECK(b.energy == Rational(lambda_eval(n, n)));
      CHECK(b.energy == bound_constant(n, Rational(2)));
    }
  }
  SUBCASE("N = 1 collapses to zero energy") {
    PrimalBound b = primal_discrepancy_lp(6, Rational(1));
    CHECK(b.energy == 0);
    CHECK(b.discrepancy_bound == lambda_average(6));
  }
}

TEST_CASE("certificates") {
  SUBCASE("constant certificate is universally feasible") {
    for (int n = 2; n <= 12; ++n) {
      auto h = constant_certificate(n);
      DualCertificate cert = check_certificate(n, Rational(5), h);
      CHECK(cert.feasible);
      CHECK(cert.bound == bound_constant(n, Rational(5)));
    }
  }
  SUBCASE("zero vector is infeasible") {
    std::vector<Rational> h(8, Rational(0));
    DualCertificate cert = check_certificate(7, Rational(4), h);
    CHECK_FALSE(cert.feasible);
    CHECK(cert.bound == 0);
    CHECK_FALSE(cert.violations.empty());
  }
  SUBCASE("two-term certificate: feasible, bound matches the closed form") {
    for (int n = 3; n <= 15; n += 2) {
      auto h = two_term_certificate(n);
      for (const Rational& N : {Rational(4), Rational(9), Rational(64)}) {
        DualCertificate cert = check_certificate(n, N, h);
        CHECK(cert.feasible);
        CHECK(cert.bound == bound_two_term(n, N));
      }
    }
    CHECK_THROWS_AS(two_term_certificate(4), std::domain_error);
  }
  SUBCASE("hamming certificate: h(i) = -lambda(i) pointwise, h_j >= 0") {
    for (int n = 3; n <= 15; n += 2) {
      auto h = hamming_certificate(n);
      CHECK(h[static_cast<size_t>((n + 1) / 2)] == 0);
      DualCertificate cert = check_certificate(n, Rational(16), h);
      CHECK(cert.feasible);
      for (int i = 1; i <= n; ++i)
        CHECK(cert.pointwise[static_cast<size_t>(i)] == -Rational(lambda_eval(n, i)));
      CHECK(cert.bound == bound_hamming_type(n, Rational(16)));
    }
  }
  SUBCASE("restricted regime and complementary slackness for hamming(3)") {
    BinaryCode h3 = hamming_code(3);
    auto dist = distance_distribution(h3);
    auto dual = dual_distribution(dist);
    auto h = hamming_certificate(7);
    DualCertificate cert = check_certificate(7, Rational(16), h, dist, dual);
    CHECK(cert.feasible);
    CHECK(cert.restricted_feasible);
    CHECK(cert.complementary_slackness);
    CHECK(cert.bound == code_energy(dist));
  }
  SUBCASE("weak duality against random codes") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 10; ++trial) {
      int n = 3 + static_cast<int>(rng() % 7);
      if (n % 2 == 0) ++n;
      std::uint64_t N = 2 + rng() % std::min<std::uint64_t>(11, 1ULL << (n - 1));
      // the LP relaxation covers duplicate-free codes; resample until distinct
      BinaryCode z = random_code(n, N, rng());
      for (;;) {
        std::set<std::string> words;
        for (std::uint64_t i = 0; i < z.size(); ++i) words.insert(z.word_string(i));
        if (words.size() == z.size()) break;
        z = random_code(n, N, rng());
      }
      Rational e = code_energy(distance_distribution(z));
      Rational NN(static_cast<unsigned long>(N));
      CHECK(e <= bound_constant(n, NN));
      CHECK(e <= bound_two_term(n, NN));
      CHECK(e <= bound_hamming_type(n, NN));
      // and the LP optimum sits between every code's energy and every bound
      PrimalBound lp = primal_discrepancy_lp(n, NN);
      CHECK(e <= lp.energy);
      CHECK(lp.energy <= bound_constant(n, NN));
      CHECK(lp.energy <= bound_two_term(n, NN));
      CHECK(lp.energy <= bound_hamming_type(n, NN));
    }
  }
}

TEST_CASE("discrepancy corollary of the hamming bound") {
  // D >= (2^n/N - 1) 2^-n C(n-1,(n-1)/2); equality for hamming codes
  CHECK(bound_hamming_discrepancy(7, Rational(16)) == ratio(35, 32));
  CHECK(bound_hamming_discrepancy(7, Rational(16)) == hamming_closed(3));
  CHECK(bound_hamming_discrepancy(15, Rational(2048)) == hamming_closed(4));
  // consistency with the energy form
  for (int n = 3; n <= 11; n += 2) {
    Rational N(8);
    Rational via_energy = lambda_average(n) - bound_hamming_type(n, N) / N;
    CHECK(bound_hamming_discrepancy(n, N) == via_energy);
  }
}

TEST_CASE("certify_minimizer") {
  SUBCASE("perfect codes certify optimal") {
    CHECK(certify_minimizer(hamming_code(3)).lp_optimal);
    CHECK(certify_minimizer(repetition(5)).lp_optimal);
    CHECK(certify_minimizer(repetition(9)).lp_optimal);
    CHECK(certify_minimizer(random_code(6, 1, 3)).lp_optimal);  // singletons
  }
  SUBCASE("hamming(5) via its derived distribution") {
    MinimizerReport r = certify_minimizer(hamming_distance_distribution(5));
    CHECK(r.lp_optimal);
    CHECK(r.discrepancy == hamming_closed(5));
  }
  SUBCASE("simplex(3) is not optimal") {
    MinimizerReport r = certify_minimizer(simplex_code(3));
    CHECK_FALSE(r.lp_optimal);
    CHECK(r.discrepancy == ratio(315, 32));
    CHECK(r.lp_bound == ratio(123, 32));
  }
  SUBCASE("the 8-word two-term meeting code is optimal at (7,8)") {
    BinaryCode z = parse_generator("1110000\n0011100\n0000111\n").code;
    MinimizerReport r = certify_minimizer(z);
    CHECK(r.lp_optimal);
    CHECK(r.discrepancy == ratio(123, 32));
  }
  SUBCASE("golay is optimal, its extension is not") {
    MinimizerReport g = certify_minimizer(golay23());
    CHECK(g.lp_optimal);
    CHECK(g.discrepancy == ratio(409732557, 1048576));
    MinimizerReport ext = certify_minimizer(extend_code(golay23()));
    CHECK_FALSE(ext.lp_optimal);
    CHECK(ext.lp_bound < ext.discrepancy);
  }
}

TEST_CASE("LP dominates every constructible code at its size") {
  // subcubes pin N = 2^k exactly; repetition pins N = 2
  for (int n : {9, 12, 15}) {
    for (int m = std::max(1, n - 8); m < n; ++m) {
      auto dist = distance_distribution(subcube(n, m));
      Rational e = code_energy(dist);
      PrimalBound lp = primal_discrepancy_lp(n, Rational(static_cast<unsigned long>(dist.N)));
      CHECK(e <= lp.energy);
    }
    auto rep = distance_distribution(repetition(n));
    CHECK(code_energy(rep) <= primal_discrepancy_lp(n, Rational(2)).energy);
  }
}

TEST_CASE("binomial moment coefficients") {
  for (int n = 3; n <= 20; ++n) {
    auto a = binomial_moment_coeffs(n, n);
    CHECK(a[1] == Rational(pow2(static_cast<unsigned long>(n) - 1)));
    CHECK(a[2] == -Rational(pow2(static_cast<unsigned long>(n) - 1)));
    CHECK(a[3] == Rational(3) * Rational(pow2(static_cast<unsigned long>(n) - 2)));
    // alternating signs from j = 1 on: positive odd, negative even
    for (int j = 1; j <= n; ++j) {
      if (j % 2 == 1)
        CHECK(a[static_cast<size_t>(j)] > 0);
      else
        CHECK(a[static_cast<size_t>(j)] < 0);
    }
  }
}

TEST_CASE("-lambda(2i) has alternating-sign finite differences") {
  for (int n = 4; n <= 20; ++n) {
    std::vector<Rational> row;
    for (int i = 1; 2 * i <= n; ++i) row.push_back(-Rational(lambda_eval(n, 2 * i)));
    int order = 0;
    while (!row.empty()) {
      for (const auto& v : row) {
        if (order == 0 || order == 1)
          CHECK(v < 0);
        else if (order % 2 == 0)
          CHECK(v > 0);
        else
          CHECK(v < 0);
      }
      std::vector<Rational> next;
      for (size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i + 1] - row[i]);
      row = std::move(next);
      ++order;
    }
  }
}

TEST_CASE("certificate json") {
  auto h = constant_certificate(3);
  DualCertificate cert = check_certificate(3, Rational(2), h);
  std::string json = certificate_to_json(cert);
  CHECK(json == "{\"n\": 3, \"h\": [\"-6\", \"0\", \"0\", \"0\"], \"feasible\": true, "
                "\"bound\": \"6\"}");
}
