#include "korovkin/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace korovkin {

std::vector<double> binomial_mixture_weights(int n, double q, double r) {
  if (n < 1) throw std::invalid_argument("binomial_mixture_weights: n must be positive");
  if (q < 0.0 || r < 0.0) throw std::invalid_argument("binomial_mixture_weights: negative weight base");
  if (q == 0.0 && r == 0.0) throw std::invalid_argument("binomial_mixture_weights: q and r both zero");

  std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
  if (q == 0.0) {
    w[0] = std::pow(r, n);
    return w;
  }
  if (r == 0.0) {
    w[static_cast<std::size_t>(n)] = std::pow(q, n);
    return w;
  }

  // Anchor at the bulk of the distribution and walk outward with exact
  // term ratios; long double keeps the anchor itself accurate enough that
  // the total matches (q+r)^n to ~1e-13 relative even at n = 512.
  int k0 = static_cast<int>(std::lround(n * (q / (q + r))));
  k0 = std::clamp(k0, 0, n);
  long double lq = static_cast<long double>(q);
  long double lr = static_cast<long double>(r);
  long double log_anchor = std::lgamma(n + 1.0L) - std::lgamma(k0 + 1.0L) -
                           std::lgamma(n - k0 + 1.0L) + k0 * std::log(lq) + (n - k0) * std::log(lr);
  long double anchor = std::exp(log_anchor);

  std::vector<long double> t(w.size());
  t[static_cast<std::size_t>(k0)] = anchor;
  for (int k = k0; k < n; ++k) {
    t[static_cast<std::size_t>(k) + 1] =
        t[static_cast<std::size_t>(k)] * (static_cast<long double>(n - k) / (k + 1)) * (lq / lr);
  }
  for (int k = k0; k > 0; --k) {
    t[static_cast<std::size_t>(k) - 1] =
        t[static_cast<std::size_t>(k)] * (static_cast<long double>(k) / (n - k + 1)) * (lr / lq);
  }
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = static_cast<double>(t[k]);
  return w;
}

double simpson_unit(const RealFunction& f, int panels) {
  if (panels < 1) throw std::invalid_argument("simpson_unit: need at least one panel");
  int m = 2 * panels;
  double h = 1.0 / m;
  double acc = f(0.0) + f(1.0);
  for (int j = 1; j < m; ++j) acc += (j % 2 ? 4.0 : 2.0) * f(j * h);
  return acc * h / 3.0;
}

std::vector<double> averaged_samples(int n, const RealFunction& f, double c_n, double d_n,
                                     int panels) {
  if (c_n < 0.0 || c_n > d_n)
    throw std::invalid_argument("averaged_samples: need 0 <= c_n <= d_n");
  std::vector<double> s(static_cast<std::size_t>(n) + 1);
  double denom = n + d_n;
  if (denom <= 0.0) throw std::invalid_argument("averaged_samples: n + d_n must be positive");
  for (int k = 0; k <= n; ++k) {
    if (c_n == 0.0) {
      s[static_cast<std::size_t>(k)] = f(k / denom);
    } else {
      s[static_cast<std::size_t>(k)] =
          simpson_unit([&](double x) { return f((k + c_n * x) / denom); }, panels);
    }
  }
  return s;
}

namespace {

void require_unit_parameter(double p, const char* who) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument(std::string(who) + ": parameter outside [0, 1]");
}

double dot(const std::vector<double>& w, const std::vector<double>& s) {
  double acc = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) acc += w[k] * s[k];
  return acc;
}

}  // namespace

double bernstein_apply(int n, const RealFunction& f, double p) {
  require_unit_parameter(p, "bernstein_apply");
  auto w = binomial_mixture_weights(n, p, 1.0 - p);
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) acc += w[static_cast<std::size_t>(k)] * f(static_cast<double>(k) / n);
  return acc;
}

double kantorovich_case1_apply(int n, const RealFunction& f, double p, double c_n, double d_n,
                               int panels) {
  require_unit_parameter(p, "kantorovich_case1_apply");
  auto w = binomial_mixture_weights(n, p, 1.0 - p);
  return dot(w, averaged_samples(n, f, c_n, d_n, panels));
}

AveragingMoments product_uniform_moments(int n) {
  if (n < 1) throw std::invalid_argument("product_uniform_moments: n must be positive");
  double dn = n;
  return {dn, dn / 2.0, dn * dn / 4.0 + dn / 12.0};
}

std::array<double, 3> kantorovich_moment_testfunctions(int n, const AveragingMoments& m, double p) {
  require_unit_parameter(p, "kantorovich_moment_testfunctions");
  double ek = n * p;
  double ek2 = n * p * (1.0 - p) + ek * ek;
  double denom = n + m.mass;
  return {1.0, (ek + m.m1) / denom, (ek2 + 2.0 * ek * m.m1 + m.m2) / (denom * denom)};
}

double exp_kantorovich_apply(int n, const RealFunction& f, double p, double c_n, double d_n,
                             int panels) {
  require_unit_parameter(p, "exp_kantorovich_apply");
  auto w = binomial_mixture_weights(n, p / n, 1.0 - p / (2.0 * n));
  return dot(w, averaged_samples(n, f, c_n, d_n, panels));
}

double exp_bernstein_apply(int n, const RealFunction& f, double p) {
  require_unit_parameter(p, "exp_bernstein_apply");
  auto w = binomial_mixture_weights(n, p / n, 1.0 - p / (2.0 * n));
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) acc += w[static_cast<std::size_t>(k)] * f(static_cast<double>(k) / n);
  return acc;
}

double two_weight_bernstein_apply(int n, const RealFunction& f, double a, double b) {
  if (a < 0.0) throw std::invalid_argument("two_weight_bernstein_apply: a must be nonnegative");
  if (b > 1.0) throw std::invalid_argument("two_weight_bernstein_apply: b must not exceed 1");
  auto w = binomial_mixture_weights(n, a / (a + 1.0), (1.0 - b / n) / (a + 1.0));
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) acc += w[static_cast<std::size_t>(k)] * f(static_cast<double>(k) / n);
  return acc;
}

std::array<double, 3> quadratic_through(double f0, double fh, double f1) {
  return {f0, -3.0 * f0 + 4.0 * fh - f1, 2.0 * (f0 - 2.0 * fh + f1)};
}

LpLattice LpLattice::build(std::vector<double> y, int points_per_coordinate, std::size_t cap) {
  if (y.empty()) throw std::invalid_argument("LpLattice: empty bound vector");
  if (points_per_coordinate < 2) throw std::invalid_argument("LpLattice: need at least two points per axis");
  for (double b : y) {
    if (b < 0.0 || b > 1.0) throw std::invalid_argument("LpLattice: coordinate bounds must lie in [0, 1]");
  }

  std::size_t d = y.size();
  double logged = d * std::log(static_cast<double>(points_per_coordinate));
  bool overflow = logged > std::log(1e18);
  std::size_t total = 1;
  if (!overflow) {
    for (std::size_t k = 0; k < d; ++k) total *= static_cast<std::size_t>(points_per_coordinate);
  }

  LpLattice lat;
  lat.y = std::move(y);
  if (overflow || total > cap) {
    lat.points.emplace_back(d, 0.0);
    lat.points.push_back(lat.y);
    return lat;
  }

  lat.points.reserve(total);
  std::vector<int> idx(d, 0);
  while (true) {
    std::vector<double> pt(d);
    for (std::size_t k = 0; k < d; ++k) {
      pt[k] = lat.y[k] * idx[k] / (points_per_coordinate - 1);
    }
    lat.points.push_back(std::move(pt));
    std::size_t c = 0;
    while (c < d && ++idx[c] == points_per_coordinate) idx[c++] = 0;
    if (c == d) break;
  }
  return lat;
}

double LpLattice::coordinate(const std::vector<double>& x, int n) {
  if (n < 1) throw std::invalid_argument("LpLattice::coordinate: index starts at 1");
  return static_cast<std::size_t>(n) <= x.size() ? x[static_cast<std::size_t>(n) - 1] : 0.0;
}

double LpLattice::dyadic_sum(const std::vector<double>& x, int n) {
  if (n < 0) throw std::invalid_argument("LpLattice::dyadic_sum: negative truncation");
  std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(n), x.size());
  double acc = 0.0;
  for (std::size_t k = 1; k <= top; ++k) acc += x[k - 1] * std::ldexp(1.0, -static_cast<int>(k));
  return acc;
}

double LpLattice::coordinate_deviation(int n) const {
  double best = 0.0;
  for (const auto& pt : points) best = std::max(best, std::abs(coordinate(pt, n)));
  return best;
}

double LpLattice::dyadic_deviation(int n) const {
  double best = 0.0;
  int d = static_cast<int>(dimension());
  for (const auto& pt : points) best = std::max(best, dyadic_sum(pt, d) - dyadic_sum(pt, n));
  return best;
}

}  // namespace korovkin
