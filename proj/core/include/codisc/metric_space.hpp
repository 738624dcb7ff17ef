#ifndef CODISC_METRIC_SPACE_HPP
#define CODISC_METRIC_SPACE_HPP

#include <span>
#include <string_view>
#include <vector>

#include "codisc/codes.hpp"
#include "codisc/rational.hpp"

namespace codisc {

// A finite metric space with integer distances 0..n, diameter exactly n,
// validated distance-invariant (center-independent ball volumes). Invariance
// is a hard requirement; spaces violating it are rejected with a witness.
class FiniteMetricSpace {
 public:
  static FiniteMetricSpace from_matrix(int points, int diameter, std::vector<int> distances);
  /// Header line "P n", then P rows of P integers; '#' comments allowed.
  static FiniteMetricSpace parse(std::string_view text);

  int points() const { return points_; }
  int diameter() const { return diameter_; }
  int distance(int x, int y) const {
    return distances_[static_cast<size_t>(x) * points_ + static_cast<size_t>(y)];
  }
  /// |B(., t)| for t = 0..n; identical for every center by validation.
  const std::vector<std::int64_t>& ball_profile() const { return ball_profile_; }
  /// sum_z d(z, .), center-independent by validation.
  std::int64_t distance_sum() const { return distance_sum_; }

 private:
  FiniteMetricSpace() = default;
  int points_ = 0;
  int diameter_ = 0;
  std::vector<int> distances_;
  std::vector<std::int64_t> ball_profile_;
  std::int64_t distance_sum_ = 0;
};

/// lambda(x,y) = (1/2) sum_u |d(x,u) - d(y,u)|; an integer on any
/// distance-invariant space.
Rational general_lambda(const FiniteMetricSpace& space, int x, int y);

/// theta(x,y) = sum_t |B(x,t)| - sum_t |B(x,t) ∩ B(y,t)|; equals lambda.
Rational theta_metric(const FiniteMetricSpace& space, int x, int y);

/// <lambda>_X - <lambda>_Z, cross-checked against <mu>_Z - <mu>_X.
/// Z is a list of point indices; repeats allowed.
Rational general_discrepancy(const FiniteMetricSpace& space, std::span<const int> subset);

/// Definitional route: sum_t sum_x (empirical ball measure - uniform)^2.
Rational discrepancy_definition(const FiniteMetricSpace& space, std::span<const int> subset);

// Nonnegative radius weights g_0..g_n with tail sums gamma(t) = sum_{i>=t} g_i.
struct WeightVector {
  std::vector<Rational> g;
  std::vector<Rational> gamma;  // gamma[0..n+1], gamma[n+1] = 0
};
WeightVector make_weights(std::vector<Rational> g);
/// n+1 whitespace-separated rationals ("p/q" or integers); '#' comments allowed.
WeightVector parse_weights(std::string_view text);

/// lambda_G(x,y) = (1/2) sum_z |gamma(d(x,z)) - gamma(d(y,z))|.
Rational weighted_lambda(const FiniteMetricSpace& space, const WeightVector& weights, int x, int y);

/// sum_t g_t D_t(Z)^2, computed definitionally and cross-checked against
/// <lambda_G>_X - <lambda_G>_Z (that orientation is asserted).
Rational weighted_discrepancy(const FiniteMetricSpace& space, std::span<const int> subset,
                              const WeightVector& weights);

/// Krawtchouk spectrum of lambda_G on the n-cube: coefficient 0 is the space
/// average, coefficient k >= 1 is -2^-n sum_t g_t (K_t^(n-1)(k-1))^2.
std::vector<Rational> weighted_lambda_hat(int n, const WeightVector& weights);

/// D_G = 2^-n sum_{k>=1} A'_k sum_t g_t (K_t^(n-1)(k-1))^2 (Hamming cube).
Rational weighted_dual_discrepancy(const DualDistribution& dual, const Rational& N,
                                   const WeightVector& weights);

// Intersection numbers p_ij^k of a distance-regular space, with valencies
// n_k = p_kk^0. p(i,j,k) == 0 unless |i-j| <= k <= i+j.
struct AssociationScheme {
  int classes;  // = diameter
  std::int64_t points;
  std::vector<std::int64_t> valencies;
  std::vector<std::int64_t> p;  // (n+1)^3, index ((i*(n+1))+j)*(n+1)+k
  std::int64_t pijk(int i, int j, int k) const {
    size_t w = static_cast<size_t>(classes) + 1;
    return p[(static_cast<size_t>(i) * w + static_cast<size_t>(j)) * w + static_cast<size_t>(k)];
  }
};

/// Triple-counts p_ij(x,y) and validates they depend only on d(x,y);
/// non-distance-regular input is rejected with a witness triple.
AssociationScheme scheme_from_space(const FiniteMetricSpace& space);

/// Discrepancy from class distribution alone:
/// (1/2) [ |X|^-1 sum_{i,j,k} n_k p_ij^k |i-j| - N^-1 sum_{k>=1} A_k sum_{i,j} p_ij^k |i-j| ].
Rational scheme_discrepancy(const AssociationScheme& scheme, std::span<const Rational> class_dist,
                            const Rational& N);

}  // namespace codisc

#endif
