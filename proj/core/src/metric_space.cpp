#include "codisc/metric_space.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "codisc/errors.hpp"
#include "codisc/kernels.hpp"
#include "codisc/krawtchouk.hpp"

namespace codisc {

namespace {

std::string point_pair(int x, int y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

void check_point(const FiniteMetricSpace& space, int z) {
  if (z < 0 || z >= space.points())
    throw std::domain_error("point " + std::to_string(z) + " outside 0.." +
                            std::to_string(space.points() - 1));
}

void check_subset(const FiniteMetricSpace& space, std::span<const int> subset) {
  if (subset.empty()) throw std::domain_error("subset must be nonempty");
  for (int z : subset) check_point(space, z);
}

}  // namespace

FiniteMetricSpace FiniteMetricSpace::from_matrix(int points, int diameter,
                                                 std::vector<int> distances) {
  if (points < 1) throw validation_error("space needs at least one point");
  if (diameter < 1) throw validation_error("diameter must be a positive integer");
  if (distances.size() != static_cast<size_t>(points) * static_cast<size_t>(points))
    throw validation_error("distance matrix size does not match the point count");

  FiniteMetricSpace s;
  s.points_ = points;
  s.diameter_ = diameter;
  s.distances_ = std::move(distances);

  auto d = [&](int x, int y) { return s.distance(x, y); };
  int max_seen = 0;
  for (int x = 0; x < points; ++x) {
    if (d(x, x) != 0)
      throw validation_error("nonzero diagonal at point " + std::to_string(x));
    for (int y = 0; y < points; ++y) {
      int v = d(x, y);
      if (v < 0 || v > diameter)
        throw validation_error("distance " + std::to_string(v) + " at " + point_pair(x, y) +
                               " outside 0..n");
      if (x != y && v == 0)
        throw validation_error("zero distance between distinct points " + point_pair(x, y));
      if (v != d(y, x))
        throw validation_error("asymmetry at " + point_pair(x, y));
      max_seen = std::max(max_seen, v);
    }
  }
  if (max_seen != diameter)
    throw validation_error("declared diameter " + std::to_string(diameter) +
                           " but largest distance is " + std::to_string(max_seen));
  for (int x = 0; x < points; ++x)
    for (int y = 0; y < points; ++y)
      for (int z = 0; z < points; ++z)
        if (d(x, z) > d(x, y) + d(y, z))
          throw validation_error("triangle inequality fails for points (" + std::to_string(x) +
                                 ", " + std::to_string(y) + ", " + std::to_string(z) + ")");

  // distance-invariance: identical ball profile for every center
  std::vector<std::int64_t> profile;
  for (int x = 0; x < points; ++x) {
    std::vector<std::int64_t> counts(static_cast<size_t>(diameter) + 1, 0);
    for (int y = 0; y < points; ++y) ++counts[static_cast<size_t>(d(x, y))];
    std::vector<std::int64_t> cumulative(counts.size());
    std::int64_t run = 0;
    for (size_t t = 0; t < counts.size(); ++t) {
      run += counts[t];
      cumulative[t] = run;
    }
    if (x == 0) {
      profile = cumulative;
    } else if (cumulative != profile) {
      size_t t = 0;
      while (cumulative[t] == profile[t]) ++t;
      throw validation_error("not distance-invariant: |B(" + std::to_string(x) + ", " +
                             std::to_string(t) + ")| = " + std::to_string(cumulative[t]) +
                             " but |B(0, " + std::to_string(t) + ")| = " +
                             std::to_string(profile[t]));
    }
  }
  s.ball_profile_ = std::move(profile);
  s.distance_sum_ = 0;
  for (int y = 0; y < points; ++y) s.distance_sum_ += d(0, y);
  return s;
}

FiniteMetricSpace FiniteMetricSpace::parse(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {  // strip # comments
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    cleaned.append(line);
    cleaned.push_back('\n');
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  std::istringstream in(cleaned);
  long long points = 0, diameter = 0;
  if (!(in >> points >> diameter)) throw parse_error("expected header 'P n'");
  if (points < 1 || points > 100000) throw parse_error("point count out of range");
  if (diameter < 1) throw parse_error("diameter must be positive");
  std::vector<int> d(static_cast<size_t>(points) * static_cast<size_t>(points));
  for (auto& v : d) {
    long long x;
    if (!(in >> x)) throw parse_error("distance matrix is truncated");
    if (x < 0 || x > diameter) throw parse_error("matrix entry " + std::to_string(x) + " outside 0..n");
    v = static_cast<int>(x);
  }
  long long extra;
  if (in >> extra) throw parse_error("trailing data after the distance matrix");
  return from_matrix(static_cast<int>(points), static_cast<int>(diameter), std::move(d));
}

Rational general_lambda(const FiniteMetricSpace& space, int x, int y) {
  check_point(space, x);
  check_point(space, y);
  std::int64_t sum = 0;
  for (int u = 0; u < space.points(); ++u)
    sum += std::abs(space.distance(x, u) - space.distance(y, u));
  return ratio(Integer(static_cast<long>(sum)), Integer(2));
}

Rational theta_metric(const FiniteMetricSpace& space, int x, int y) {
  check_point(space, x);
  check_point(space, y);
  int n = space.diameter();
  std::int64_t ball_total = 0;
  for (auto b : space.ball_profile()) ball_total += b;
  std::int64_t mu_total = 0;
  for (int u = 0; u < space.points(); ++u) {
    int t0 = std::max(space.distance(x, u), space.distance(y, u));
    mu_total += n + 1 - t0;  // u lies in both balls for t = t0..n
  }
  return Rational(static_cast<long>(ball_total - mu_total));
}

namespace {

// sum_t |B(z_i,t) ∩ B(z_j,t)| = P(n+1) - sum_z d(z,.) - lambda(z_i,z_j)
std::int64_t mu_sum(const FiniteMetricSpace& space, int x, int y) {
  int n = space.diameter();
  std::int64_t total = 0;
  for (int u = 0; u < space.points(); ++u)
    total += n + 1 - std::max(space.distance(x, u), space.distance(y, u));
  return total;
}

}  // namespace

Rational general_discrepancy(const FiniteMetricSpace& space, std::span<const int> subset) {
  check_subset(space, subset);
  int P = space.points();
  std::int64_t N = static_cast<std::int64_t>(subset.size());

  // lambda route, exact halves kept rational
  Integer lambda_space = 0;
  for (int x = 0; x < P; ++x) {
    for (int y = 0; y < P; ++y) {
      std::int64_t s = 0;
      for (int u = 0; u < P; ++u) s += std::abs(space.distance(x, u) - space.distance(y, u));
      lambda_space += static_cast<long>(s);
    }
  }
  Integer lambda_subset = 0;
  for (int a : subset) {
    for (int b : subset) {
      std::int64_t s = 0;
      for (int u = 0; u < P; ++u) s += std::abs(space.distance(a, u) - space.distance(b, u));
      lambda_subset += static_cast<long>(s);
    }
  }
  Rational via_lambda = ratio(lambda_space, Integer(2) * P * P) -
                        ratio(lambda_subset, Integer(2) * N * N);

  // mu route: <mu>_Z - <mu>_X with <mu>_X = sum_t |B_t|^2 / P
  Integer mu_subset = 0;
  for (int a : subset)
    for (int b : subset) mu_subset += static_cast<long>(mu_sum(space, a, b));
  Integer ball_sq = 0;
  for (auto b : space.ball_profile()) ball_sq += Integer(static_cast<long>(b)) * static_cast<long>(b);
  Rational via_mu = ratio(mu_subset, Integer(N) * N) - ratio(ball_sq, Integer(P));

  if (via_lambda != via_mu)
    throw std::logic_error("general_discrepancy: lambda and mu routes disagree (" +
                           to_string(via_lambda) + " vs " + to_string(via_mu) + ")");
  return via_lambda;
}

Rational discrepancy_definition(const FiniteMetricSpace& space, std::span<const int> subset) {
  check_subset(space, subset);
  int P = space.points();
  int n = space.diameter();
  std::int64_t N = static_cast<std::int64_t>(subset.size());
  // per-(x,t) term (c/N - b_t/P)^2 summed exactly over the common denominator (N P)^2
  Integer numerator = 0;
  std::vector<std::int64_t> count(static_cast<size_t>(n) + 1);
  for (int x = 0; x < P; ++x) {
    std::fill(count.begin(), count.end(), 0);
    for (int z : subset) ++count[static_cast<size_t>(space.distance(x, z))];
    std::int64_t cumulative = 0;
    for (int t = 0; t <= n; ++t) {
      cumulative += count[static_cast<size_t>(t)];
      std::int64_t diff = cumulative * P - space.ball_profile()[static_cast<size_t>(t)] * N;
      numerator += Integer(static_cast<long>(diff)) * static_cast<long>(diff);
    }
  }
  Integer denom_root = Integer(N) * P;
  return ratio(numerator, denom_root * denom_root);
}

WeightVector make_weights(std::vector<Rational> g) {
  if (g.empty()) throw std::domain_error("weights must cover radii 0..n");
  for (const auto& v : g)
    if (v < 0) throw std::domain_error("negative weight " + to_string(v));
  WeightVector w{std::move(g), {}};
  w.gamma.assign(w.g.size() + 1, Rational(0));
  for (size_t t = w.g.size(); t-- > 0;) w.gamma[t] = w.gamma[t + 1] + w.g[t];
  return w;
}

WeightVector parse_weights(std::string_view text) {
  std::string cleaned;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    cleaned.append(line);
    cleaned.push_back(' ');
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  std::istringstream in(cleaned);
  std::vector<Rational> g;
  std::string token;
  while (in >> token) g.push_back(parse_rational(token));
  if (g.empty()) throw parse_error("no weights in input");
  return make_weights(std::move(g));
}

Rational weighted_lambda(const FiniteMetricSpace& space, const WeightVector& weights, int x,
                         int y) {
  if (weights.g.size() != static_cast<size_t>(space.diameter()) + 1)
    throw std::domain_error("weight vector length must be diameter + 1");
  Rational sum = 0;
  for (int u = 0; u < space.points(); ++u) {
    Rational d = weights.gamma[static_cast<size_t>(space.distance(x, u))] -
                 weights.gamma[static_cast<size_t>(space.distance(y, u))];
    sum += abs(d);
  }
  return sum / 2;
}

Rational weighted_discrepancy(const FiniteMetricSpace& space, std::span<const int> subset,
                              const WeightVector& weights) {
  check_subset(space, subset);
  if (weights.g.size() != static_cast<size_t>(space.diameter()) + 1)
    throw std::domain_error("weight vector length must be diameter + 1");
  int P = space.points();
  int n = space.diameter();
  std::int64_t N = static_cast<std::int64_t>(subset.size());

  // definitional sum_t g_t D_t^2
  Rational definitional = 0;
  std::vector<std::int64_t> count(static_cast<size_t>(n) + 1);
  Integer denom_root = Integer(N) * P;
  Integer denom = denom_root * denom_root;
  for (int t = 0; t <= n; ++t) {
    if (weights.g[static_cast<size_t>(t)] == 0) continue;
    Integer numerator = 0;
    for (int x = 0; x < P; ++x) {
      std::int64_t c = 0;
      for (int z : subset)
        if (space.distance(x, z) <= t) ++c;
      std::int64_t diff = c * P - space.ball_profile()[static_cast<size_t>(t)] * N;
      numerator += Integer(static_cast<long>(diff)) * static_cast<long>(diff);
    }
    definitional += weights.g[static_cast<size_t>(t)] * ratio(numerator, denom);
  }

  // kernel route: <lambda_G>_X - <lambda_G>_Z
  Rational lam_space = 0;
  for (int x = 0; x < P; ++x)
    for (int y = 0; y < P; ++y) lam_space += weighted_lambda(space, weights, x, y);
  lam_space /= Rational(static_cast<long>(P)) * P;
  Rational lam_subset = 0;
  for (int a : subset)
    for (int b : subset) lam_subset += weighted_lambda(space, weights, a, b);
  lam_subset /= Rational(static_cast<long>(N)) * static_cast<long>(N);

  if (definitional != lam_space - lam_subset)
    throw std::logic_error("weighted_discrepancy: kernel orientation mismatch (definitional " +
                           to_string(definitional) + ", <lambda_G>_X - <lambda_G>_Z " +
                           to_string(lam_space - lam_subset) + ")");
  return definitional;
}

std::vector<Rational> weighted_lambda_hat(int n, const WeightVector& weights) {
  if (n < 1) throw std::domain_error("length n must be positive");
  if (weights.g.size() != static_cast<size_t>(n) + 1)
    throw std::domain_error("weight vector length must be n + 1");
  std::vector<Rational> hat(static_cast<size_t>(n) + 1, Rational(0));
  Rational p2 = Rational(pow2(static_cast<unsigned long>(n)));

  // lambda_G(x,y) = sum_z gamma(d(z,u)) - sum_t g_t mu_t(x,y), so the constant
  // term is sum_w C(n,w) gamma(w) - 2^-n sum_t g_t |B_t|^2.
  Rational big_c = 0;
  for (int w = 0; w <= n; ++w)
    big_c += Rational(binom(n, w)) * weights.gamma[static_cast<size_t>(w)];
  Rational avg_mu = 0;
  for (int t = 0; t <= n; ++t) {
    if (weights.g[static_cast<size_t>(t)] == 0) continue;
    Integer b = ball_volume(n, t);
    avg_mu += weights.g[static_cast<size_t>(t)] * Rational(b * b);
  }
  avg_mu /= p2;
  hat[0] = big_c - avg_mu;

  for (int k = 1; k <= n; ++k) {
    Rational s = 0;
    if (n == 1) {
      s = weights.g[0];
    } else {
      for (int t = 0; t <= n - 1; ++t) {
        if (weights.g[static_cast<size_t>(t)] == 0) continue;
        Integer v = kraw_eval(n - 1, t, k - 1);
        s += weights.g[static_cast<size_t>(t)] * Rational(v * v);
      }
    }
    hat[static_cast<size_t>(k)] = -s / p2;
  }
  return hat;
}

Rational weighted_dual_discrepancy(const DualDistribution& dual, const Rational& N,
                                   const WeightVector& weights) {
  int n = dual.n;
  if (N <= 0) throw std::domain_error("N must be positive");
  if (weights.g.size() != static_cast<size_t>(n) + 1)
    throw std::domain_error("weight vector length must be n + 1");
  Rational total = 0;
  for (int k = 1; k <= n; ++k) {
    if (dual.A[static_cast<size_t>(k)] == 0) continue;
    Rational inner = 0;
    if (n == 1) {
      inner = weights.g[0];
    } else {
      for (int t = 0; t <= n - 1; ++t) {
        if (weights.g[static_cast<size_t>(t)] == 0) continue;
        Integer v = kraw_eval(n - 1, t, k - 1);
        inner += weights.g[static_cast<size_t>(t)] * Rational(v * v);
      }
    }
    total += dual.A[static_cast<size_t>(k)] * inner;
  }
  return total / Rational(pow2(static_cast<unsigned long>(n)));
}

AssociationScheme scheme_from_space(const FiniteMetricSpace& space) {
  int P = space.points();
  int n = space.diameter();
  size_t w = static_cast<size_t>(n) + 1;
  std::vector<std::int64_t> p(w * w * w, -1);
  auto idx = [&](int i, int j, int k) {
    return (static_cast<size_t>(i) * w + static_cast<size_t>(j)) * w + static_cast<size_t>(k);
  };
  std::vector<std::int64_t> counts(w * w);
  for (int x = 0; x < P; ++x) {
    for (int y = 0; y < P; ++y) {
      int k = space.distance(x, y);
      std::fill(counts.begin(), counts.end(), 0);
      for (int u = 0; u < P; ++u)
        ++counts[static_cast<size_t>(space.distance(x, u)) * w +
                 static_cast<size_t>(space.distance(y, u))];
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
          std::int64_t& slot = p[idx(i, j, k)];
          std::int64_t c = counts[static_cast<size_t>(i) * w + static_cast<size_t>(j)];
          if (slot == -1) {
            slot = c;
          } else if (slot != c) {
            throw validation_error(
                "not distance-regular: p_{" + std::to_string(i) + "," + std::to_string(j) +
                "} at distance " + std::to_string(k) + " differs for pair " + point_pair(x, y) +
                " (" + std::to_string(c) + " vs " + std::to_string(slot) + ")");
          }
        }
      }
    }
  }
  for (auto& v : p)
    if (v == -1) v = 0;  // distance classes that do not occur
  AssociationScheme scheme{n, P, {}, std::move(p)};
  scheme.valencies.reserve(w);
  for (int k = 0; k <= n; ++k) scheme.valencies.push_back(scheme.pijk(k, k, 0));
  return scheme;
}

Rational scheme_discrepancy(const AssociationScheme& scheme, std::span<const Rational> class_dist,
                            const Rational& N) {
  int n = scheme.classes;
  if (class_dist.size() != static_cast<size_t>(n) + 1)
    throw std::domain_error("class distribution must have n + 1 entries");
  if (N <= 0) throw std::domain_error("N must be positive");
  Integer space_term = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k)
        space_term += Integer(static_cast<long>(scheme.valencies[static_cast<size_t>(k)])) *
                      static_cast<long>(scheme.pijk(i, j, k)) * std::abs(i - j);
  Rational subset_term = 0;
  for (int k = 1; k <= n; ++k) {
    if (class_dist[static_cast<size_t>(k)] == 0) continue;
    std::int64_t inner = 0;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) inner += scheme.pijk(i, j, k) * std::abs(i - j);
    subset_term += class_dist[static_cast<size_t>(k)] * Rational(static_cast<long>(inner));
  }
  return (ratio(space_term, Integer(static_cast<long>(scheme.points))) - subset_term / N) / 2;
}

}  // namespace codisc
