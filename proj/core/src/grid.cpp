#include "korovkin/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace korovkin {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Scan window in grid steps for a distance threshold delta.  Pair distances
// are exact multiples of h, so a small relative nudge keeps deltas that were
// meant to be whole multiples from falling one step short.
std::size_t window_steps(double delta, double h, std::size_t max_steps) {
  const double q = delta / h + 1e-9;
  if (q >= static_cast<double>(max_steps)) return max_steps;
  return static_cast<std::size_t>(q);
}

}  // namespace

Interval::Interval(double lo_, double hi_, bool periodic_) : lo(lo_), hi(hi_), periodic(periodic_) {
  if (!(lo < hi)) throw std::invalid_argument("Interval: requires lo < hi");
  if (periodic && !(lo == -kPi && hi == kPi))
    throw std::invalid_argument("Interval: periodic intervals are pinned to [-pi, pi]");
}

GridFunction::GridFunction(Interval domain, std::vector<double> values)
    : domain_(domain), values_(std::move(values)) {
  if (values_.size() < 2) throw std::invalid_argument("GridFunction: needs at least 2 samples");
}

GridFunction GridFunction::sample(Interval domain, std::size_t n, const RealFunction& f) {
  if (n < 2) throw std::invalid_argument("GridFunction: needs at least 2 samples");
  std::vector<double> v(n);
  const double len = domain.length();
  const double denom = domain.periodic ? static_cast<double>(n) : static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) v[k] = f(domain.lo + static_cast<double>(k) * len / denom);
  return GridFunction(domain, std::move(v));
}

double GridFunction::point(std::size_t k) const {
  const double denom =
      domain_.periodic ? static_cast<double>(size()) : static_cast<double>(size() - 1);
  return domain_.lo + static_cast<double>(k) * domain_.length() / denom;
}

double GridFunction::spacing() const {
  const double denom =
      domain_.periodic ? static_cast<double>(size()) : static_cast<double>(size() - 1);
  return domain_.length() / denom;
}

double GridFunction::interpolate(double x) const {
  const double len = domain_.length();
  if (domain_.periodic) {
    x -= len * std::floor((x - domain_.lo) / len);  // wrap into [lo, lo + len)
  } else if (x < domain_.lo || x > domain_.hi) {
    throw std::domain_error("GridFunction: interpolation argument outside domain");
  }
  const double h = spacing();
  const double s = (x - domain_.lo) / h;
  std::size_t k = static_cast<std::size_t>(s);
  const std::size_t n = size();
  if (domain_.periodic) {
    if (k >= n) k = n - 1;  // guards s == n from rounding
    const double frac = s - static_cast<double>(k);
    const double right = values_[(k + 1) % n];  // wrap segment closes on f(lo)
    return values_[k] + frac * (right - values_[k]);
  }
  if (k >= n - 1) return values_[n - 1];
  const double frac = s - static_cast<double>(k);
  return values_[k] + frac * (values_[k + 1] - values_[k]);
}

RealFunction GridFunction::interpolant() const {
  return [g = *this](double x) { return g.interpolate(x); };
}

namespace {
void require_combinable(const GridFunction& a, const GridFunction& b) {
  if (!(a.domain() == b.domain()) || a.size() != b.size())
    throw std::invalid_argument("GridFunction: domains and sample counts must match");
}
}  // namespace

GridFunction& GridFunction::operator+=(const GridFunction& rhs) {
  require_combinable(*this, rhs);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += rhs.values_[k];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& rhs) {
  require_combinable(*this, rhs);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= rhs.values_[k];
  return *this;
}

GridFunction& GridFunction::operator*=(const GridFunction& rhs) {
  require_combinable(*this, rhs);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] *= rhs.values_[k];
  return *this;
}

GridFunction& GridFunction::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

std::vector<double> grid_points(const Interval& domain, std::size_t n) {
  if (n < 2) throw std::invalid_argument("grid_points: needs at least 2 samples");
  std::vector<double> x(n);
  const double len = domain.length();
  const double denom = domain.periodic ? static_cast<double>(n) : static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) x[k] = domain.lo + static_cast<double>(k) * len / denom;
  return x;
}

double sup_norm(const GridFunction& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

double sup_distance(const GridFunction& f, const GridFunction& g) {
  require_combinable(f, g);
  double m = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) m = std::max(m, std::abs(f[k] - g[k]));
  return m;
}

double modulus_of_continuity(const GridFunction& f, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("modulus_of_continuity: delta must be positive");
  const std::size_t n = f.size();
  const double h = f.spacing();
  double m = 0.0;
  if (f.domain().periodic) {
    // circular index distance: min(k, n - k); only k <= n/2 can qualify
    const std::size_t w = window_steps(delta, h, n / 2);
    for (std::size_t k = 1; k <= w; ++k)
      for (std::size_t i = 0; i < n; ++i)
        m = std::max(m, std::abs(f[i] - f[(i + k) % n]));
  } else {
    const std::size_t w = window_steps(delta, h, n - 1);
    for (std::size_t k = 1; k <= w; ++k)
      for (std::size_t i = 0; i + k < n; ++i)
        m = std::max(m, std::abs(f[i] - f[i + k]));
  }
  return m;
}

PointwiseCheck check_pointwise_inequality(const GridFunction& f, double delta) {
  if (!(delta > 0.0))
    throw std::invalid_argument("check_pointwise_inequality: delta must be positive");
  const double omega = modulus_of_continuity(f, delta);
  const std::size_t n = f.size();
  const double h = f.spacing();
  const bool periodic = f.domain().periodic;
  const std::size_t kmax = periodic ? n / 2 : n - 1;

  PointwiseCheck out{true, std::numeric_limits<double>::infinity(), 0.0, 0.0, 0.0, 0.0};
  for (std::size_t k = 1; k <= kmax; ++k) {
    // distance from the index offset keeps d exact on the grid
    const double d = static_cast<double>(k) * h;
    const double factor = 1.0 + (d * d) / (delta * delta);
    const std::size_t imax = periodic ? n : n - k;
    for (std::size_t i = 0; i < imax; ++i) {
      const std::size_t j = periodic ? (i + k) % n : i + k;
      const double lhs = std::abs(f[i] - f[j]);
      const double rhs = factor * omega;
      const double slack = rhs - lhs;
      if (slack < out.worst_slack) {
        out.worst_slack = slack;
        out.x = f.point(i);
        out.y = f.point(j);
        out.lhs = lhs;
        out.rhs = rhs;
        if (slack < 0.0) out.ok = false;
      }
    }
  }
  return out;
}

RateFit fit_rate(std::span<const std::pair<int, double>> samples) {
  if (samples.size() < 3) throw std::invalid_argument("fit_rate: needs at least 3 samples");
  std::vector<double> xs, ys;
  xs.reserve(samples.size());
  ys.reserve(samples.size());
  for (const auto& [n, v] : samples) {
    if (n <= 0) throw std::invalid_argument("fit_rate: n must be positive");
    if (!(v > 0.0)) throw std::invalid_argument("fit_rate: values must be positive");
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(v));
  }
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].first == samples[j].first)
        throw std::invalid_argument("fit_rate: n values must be distinct");

  const double m = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double r2 = 1.0;
  if (syy > 0.0) {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double r = ys[i] - (intercept + slope * xs[i]);
      ss_res += r * r;
    }
    r2 = 1.0 - ss_res / syy;
  }
  return RateFit{slope, intercept, std::clamp(r2, 0.0, 1.0)};
}

}  // namespace korovkin
