#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace korovkin {

// Pointwise-evaluable function of one real variable.  Used wherever an
// operator needs samples off the stored grid (operator nodes, quadrature
// abscissae) so that polynomial and trigonometric test functions stay exact.
using RealFunction = std::function<double(double)>;

// Closed interval [lo, hi].  Periodic intervals model 2pi-periodic function
// spaces and are pinned to [-pi, pi].
struct Interval {
  double lo;
  double hi;
  bool periodic;

  Interval(double lo, double hi, bool periodic = false);

  double length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;

  static Interval unit() { return Interval(0.0, 1.0); }
  static Interval circle() { return Interval(-3.14159265358979323846, 3.14159265358979323846, true); }
};

// Uniformly sampled function on an Interval.
//
// Sampling conventions:
//   non-periodic: n samples at lo + k*(hi-lo)/(n-1), endpoint included;
//   periodic:     n samples at lo + k*(hi-lo)/n, endpoint excluded (the
//                 sample set doubles as a DFT grid).
class GridFunction {
 public:
  GridFunction(Interval domain, std::vector<double> values);

  static GridFunction sample(Interval domain, std::size_t n, const RealFunction& f);

  const Interval& domain() const { return domain_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }

  // Abscissa of sample k.
  double point(std::size_t k) const;
  // Distance between adjacent samples.
  double spacing() const;

  // Piecewise-linear evaluation; periodic domains wrap the argument.
  double interpolate(double x) const;
  RealFunction interpolant() const;

  // Pointwise combinations require identical domains and sample counts.
  GridFunction& operator+=(const GridFunction& rhs);
  GridFunction& operator-=(const GridFunction& rhs);
  GridFunction& operator*=(const GridFunction& rhs);
  GridFunction& operator*=(double s);
  friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
  friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
  friend GridFunction operator*(GridFunction a, const GridFunction& b) { return a *= b; }
  friend GridFunction operator*(GridFunction a, double s) { return a *= s; }
  friend GridFunction operator*(double s, GridFunction a) { return a *= s; }

 private:
  Interval domain_;
  std::vector<double> values_;
};

// Sample abscissae of an n-point grid on the interval, following the same
// endpoint conventions as GridFunction.
std::vector<double> grid_points(const Interval& domain, std::size_t n);

// max_k |f(x_k)|
double sup_norm(const GridFunction& f);

// max_k |f(x_k) - g(x_k)|; domains and sizes must match.
double sup_distance(const GridFunction& f, const GridFunction& g);

// Modulus of continuity restricted to the grid:
//   omega(f, delta) = max { |f(x) - f(y)| : x, y grid points, d(x, y) <= delta }
// where d is |x - y| on a plain interval and the circular distance
// min(|x - y|, 2pi - |x - y|) on a periodic one.  Exhaustive windowed pair
// scan; delta must be positive.  The scan window floor(delta/h + 1e-9)
// absorbs roundoff when delta is an exact multiple of the spacing h.
double modulus_of_continuity(const GridFunction& f, double delta);

// Worst grid pair for the second-order modulus inequality
//   |f(x) - f(y)| <= (1 + d(x,y)^2 / delta^2) * omega(f, delta).
struct PointwiseCheck {
  bool ok;            // inequality holds for every pair
  double worst_slack; // min over pairs of (rhs - lhs)
  double x;
  double y;
  double lhs;
  double rhs;
};

PointwiseCheck check_pointwise_inequality(const GridFunction& f, double delta);

// Least-squares fit of log(value) against log(n).
struct RateFit {
  double exponent;   // slope
  double intercept;  // in log space
  double r_squared;  // clamped to [0, 1]
};

// Requires at least 3 samples, distinct n, positive values.
RateFit fit_rate(std::span<const std::pair<int, double>> samples);

}  // namespace korovkin
