#include "codisc/krawtchouk.hpp"

#include <random>

#include "codisc/identity_suite.hpp"
#include "doctest.h"

using namespace codisc;

TEST_CASE("identity suite aggregates cleanly") {
  IdentitySuiteReport report = run_identity_suite(6);
  CHECK(report.pass());
  CHECK(report.checks > 400);
  CHECK(report.failures.empty());
}

TEST_CASE("kraw_eval basics") {
  for (int n : {1, 4, 9}) {
    for (int x = 0; x <= n; ++x) {
      CHECK(kraw_eval(n, 1, x) == n - 2 * x);
      CHECK(kraw_eval(n, n, x) == ((x % 2 == 0) ? 1 : -1));
    }
    for (int k = 0; k <= n; ++k) CHECK(kraw_eval(n, k, 0) == binom(n, k));
  }
  // central values K_t^(2m)(m)
  for (int m : {1, 2, 3, 4}) {
    int n = 2 * m;
    for (int t = 0; t <= n; ++t) {
      Integer expected = 0;
      if (t % 2 == 0) {
        expected = binom(m, t / 2);
        if ((t / 2) % 2 == 1) expected = -expected;
      }
      CHECK(kraw_eval(n, t, m) == expected);
    }
  }
  CHECK_THROWS_AS(kraw_eval(3, 4, 0), std::domain_error);
}

TEST_CASE("table equals the summation formula and its symmetries") {
  for (int n = 1; n <= 30; ++n) {
    KrawtchoukTable K(n);  // construction runs the generating-function check
    for (int k = 0; k <= n; ++k) {
      CHECK(K(k, 0) == binom(n, k));
      for (int x = 0; x <= n; ++x) {
        if (n <= 10) CHECK(K(k, x) == kraw_eval(n, k, x));
        // reflection
        Integer reflected = K(k, n - x);
        if (k % 2 == 1) reflected = -reflected;
        CHECK(K(k, x) == reflected);
        // symmetry C(n,x) K_k(x) = C(n,k) K_x(k)
        CHECK(binom(n, x) * K(k, x) == binom(n, k) * K(x, k));
      }
    }
  }
}

TEST_CASE("orthogonality up to n = 30") {
  for (int n = 1; n <= 30; ++n) {
    KrawtchoukTable K(n);
    for (int i = 0; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        Integer s = 0;
        for (int l = 0; l <= n; ++l) s += binom(n, l) * K(i, l) * K(j, l);
        CHECK(s == (i == j ? pow2(static_cast<unsigned long>(n)) * binom(n, i) : Integer(0)));
      }
    }
  }
}

TEST_CASE("rodrigues formula") {
  CHECK(rodrigues_check(6, 0).pass());
  CHECK(rodrigues_check(5, 2).pass());
  CHECK(rodrigues_check(8, 8).pass());
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) CHECK(rodrigues_check(n, k).pass());
}

TEST_CASE("square linearization") {
  auto c = square_expansion(4, 1);  // (4-2x)^2 = 4 K_0 + 2 K_2
  REQUIRE(c.size() == 2);
  CHECK(c[0] == 4);
  CHECK(c[1] == 2);
  CHECK(square_expansion(7, 0) == std::vector<Integer>{1});
  // construction self-verifies pointwise; sweep a range
  for (int n = 1; n <= 12; ++n)
    for (int i = 0; i <= n; ++i) square_expansion(n, i);
}

TEST_CASE("MacWilliams transform pair") {
  SUBCASE("full cube spectrum is trivial") {
    int n = 5;
    std::vector<Rational> A;
    for (int w = 0; w <= n; ++w) A.push_back(Rational(binom(n, w)));
    auto dual = macwilliams_forward(A, Rational(32));
    CHECK(dual[0] == 1);
    for (int w = 1; w <= n; ++w) CHECK(dual[static_cast<size_t>(w)] == 0);
  }
  SUBCASE("singleton spreads to binomials") {
    int n = 6;
    std::vector<Rational> A(static_cast<size_t>(n) + 1, Rational(0));
    A[0] = 1;
    auto dual = macwilliams_forward(A, Rational(1));
    for (int w = 0; w <= n; ++w) CHECK(dual[static_cast<size_t>(w)] == Rational(binom(n, w)));
  }
  SUBCASE("round-trip is the identity on random rational vectors") {
    std::mt19937_64 rng(2024);
    for (int n = 1; n <= 20; ++n) {
      std::vector<Rational> A;
      A.push_back(Rational(1));
      for (int w = 1; w <= n; ++w)
        A.push_back(ratio(static_cast<long>(rng() % 50), static_cast<long>(1 + rng() % 9)));
      Rational N = ratio(static_cast<long>(1 + rng() % 300), static_cast<long>(1 + rng() % 7));
      auto dual = macwilliams_forward(A, N);
      auto back = macwilliams_inverse(dual, N);
      REQUIRE(back.size() == A.size());
      for (size_t i = 0; i < A.size(); ++i) CHECK(back[i] == A[i]);
    }
  }
  CHECK_THROWS_AS(macwilliams_forward(std::vector<Rational>{Rational(1)}, Rational(0)),
                  std::domain_error);
}

TEST_CASE("mu coefficients and reconstruction") {
  SUBCASE("t = n collapses to the constant") {
    auto c = mu_coefficients(5, 5);
    CHECK(c[0] == 32);
    for (int k = 1; k <= 5; ++k) CHECK(c[static_cast<size_t>(k)] == 0);
  }
  SUBCASE("c_0 is the ball volume") {
    for (int n : {3, 6})
      for (int t = 0; t <= n; ++t) CHECK(mu_coefficients(n, t)[0] == Rational(ball_volume(n, t)));
  }
  SUBCASE("coefficients equal the definitional inner products, signs included") {
    // c_k(t) = <phi_t, K_k> / C(n,k) with phi_t the ball indicator
    for (int n = 1; n <= 10; ++n) {
      for (int t = 0; t <= n; ++t) {
        auto c = mu_coefficients(n, t);
        for (int k = 0; k <= n; ++k) {
          Integer inner = 0;
          for (int i = 0; i <= t; ++i) inner += binom(n, i) * kraw_eval(n, k, i);
          CHECK(c[static_cast<size_t>(k)] == ratio(inner, binom(n, k)));
        }
      }
    }
  }
  SUBCASE("2^-n sum_k c_k(t)^2 K_k(w) = mu_t(w)") {
    for (int n = 1; n <= 12; ++n) {
      KrawtchoukTable K(n);
      Rational p2(pow2(static_cast<unsigned long>(n)));
      for (int t = 0; t <= n; ++t) {
        auto c = mu_coefficients(n, t);
        for (int w = 0; w <= n; ++w) {
          Rational s = 0;
          for (int k = 0; k <= n; ++k)
            s += c[static_cast<size_t>(k)] * c[static_cast<size_t>(k)] * Rational(K(k, w));
          CHECK(s / p2 == Rational(mu_t(n, w, t)));
        }
      }
    }
  }
}

TEST_CASE("lambda hat spectrum") {
  LambdaHat h3 = lambda_hat(3);
  CHECK(h3(0) == ratio(15, 4));
  CHECK(h3(1) == ratio(-3, 4));
  CHECK(h3(2) == ratio(-1, 4));
  CHECK(h3(3) == ratio(-3, 4));
  for (int n = 21; n <= 30; ++n) {
    LambdaHat h = lambda_hat(n);
    for (int k = 1; k <= n; ++k) CHECK(h(k) < 0);
  }
  for (int n = 1; n <= 20; ++n) {
    LambdaHat h = lambda_hat(n);
    CHECK(h(0) == lambda_average(n));
    for (int k = 1; k <= n; ++k) CHECK(h(k) < 0);
    // reconstruction lambda(w) = sum_k h_k K_k(w)
    KrawtchoukTable K(n);
    for (int w = 0; w <= n; ++w) {
      Rational s = 0;
      for (int k = 0; k <= n; ++k) s += h(k) * Rational(K(k, w));
      CHECK(s == Rational(lambda_eval(n, w)));
    }
    // symmetry with respect to the middle
    if (n % 2 == 0) {
      for (int i = 1; i <= n / 2; ++i) CHECK(h(i) == h(n - i + 1));
    } else {
      int mid = (n + 1) / 2;
      CHECK(h(mid) == ratio(-binom(n - 1, (n - 1) / 2), pow2(static_cast<unsigned long>(n))));
      for (int i = 1; i <= (n - 1) / 2; ++i) CHECK(h(mid - i) == h(mid + i));
      // the middle coefficient is the largest
      for (int k = 1; k <= n; ++k) CHECK(h(k) <= h(mid));
    }
  }
}

TEST_CASE("dual-domain identities") {
  CHECK(conj_identity(1, 1).pass());
  CHECK(conj_identity(7, 4).pass());
  CHECK(conj_identity(15, 8).pass());
  for (int n = 1; n <= 20; ++n)
    for (int i = 1; 2 * i <= n + 1; ++i) CHECK(conj_identity(n, i).pass());

  for (int k = 1; k <= 3; ++k) CHECK(ctr_identity(3, k).pass());
  CHECK(ctr_identity(10, 5).pass());
  for (int n = 1; n <= 20; ++n) {
    LambdaHat h = lambda_hat(n);
    for (int k = 1; k <= n; ++k) {
      IdentityCheck c = ctr_identity(n, k);
      CHECK(c.pass());
      // left side = -2^n lambda_hat_k
      CHECK(Rational(c.lhs) == -Rational(pow2(static_cast<unsigned long>(n))) * h(k));
    }
  }
  CHECK_THROWS_AS(conj_identity(7, 5), std::domain_error);
}
