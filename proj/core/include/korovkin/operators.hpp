#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "korovkin/grid.hpp"

namespace korovkin {

// Weights w_k = C(n,k) q^k r^(n-k), k = 0..n, for q, r >= 0.  The anchor
// weight at the mode is evaluated in long double through lgammal, the rest by
// the exact-ratio recurrence, so the vector stays accurate (sums match the
// closed form (q+r)^n to ~1e-13 relative) for n up to several thousand and
// does not underflow for extreme q/r splits.
std::vector<double> binomial_mixture_weights(int n, double q, double r);

// Composite Simpson on [0, 1] with the given number of panels (two
// subintervals per panel); exact for cubics.
double simpson_unit(const RealFunction& f, int panels = 64);

// Integral means f((k + c_n x)/(n + d_n)) dx over x in [0, 1], one per
// k = 0..n; c_n = 0 degenerates to point samples at k/(n + d_n).  Requires
// 0 <= c_n <= d_n.  The result does not depend on the weight parameter, so
// callers sweeping a parameter grid compute it once and reuse it.
std::vector<double> averaged_samples(int n, const RealFunction& f, double c_n, double d_n,
                                     int panels = 64);

// Bernstein sum: sum_k C(n,k) p^k (1-p)^(n-k) f(k/n) for p in [0, 1].
double bernstein_apply(int n, const RealFunction& f, double p);

// Averaged-sample variant: binomial weights at parameter p, each sample an
// integral mean f((k + c_n x)/(n + d_n)) dx over x in [0, 1].
double kantorovich_case1_apply(int n, const RealFunction& f, double p, double c_n, double d_n,
                               int panels = 64);

// Moments of an averaging measure: mass scale M_n and the first two raw
// moments m1 = int h, m2 = int h^2 of the shift h it applies.
struct AveragingMoments {
  double mass;  // M_n, the normaliser shift: samples live at (k + h)/(n + M_n)
  double m1;
  double m2;
};

// Product of n uniform [0,1] coordinates, h = x_1 + ... + x_n: M_n = n,
// m1 = n/2, m2 = n^2/4 + n/12.
AveragingMoments product_uniform_moments(int n);

// Monomial images under the averaged binomial sum with the given moments:
// returns {L(1), L(t), L(t^2)} at parameter p.
//   L(1) = 1
//   L(t) = (E[k] + m1) / (n + M_n)
//   L(t^2) = (E[k^2] + 2 E[k] m1 + m2) / (n + M_n)^2
// with E[k] = np, E[k^2] = np(1-p) + n^2 p^2.
std::array<double, 3> kantorovich_moment_testfunctions(int n, const AveragingMoments& m, double p);

// Exponential-weight averaged sum: weights C(n,k) (p/n)^k (1 - p/(2n))^(n-k)
// (not normalised; their total is (1 + p/(2n))^n), samples averaged as in the
// c_n/d_n variant above.
double exp_kantorovich_apply(int n, const RealFunction& f, double p, double c_n, double d_n,
                             int panels = 64);

// Same exponential weights with plain point samples f(k/n).
double exp_bernstein_apply(int n, const RealFunction& f, double p);

// Two-weight sum: (a+1)^(-n) sum_k C(n,k) a^k (1 - b/n)^(n-k) f(k/n),
// a >= 0, b <= 1 (b may be negative).
double two_weight_bernstein_apply(int n, const RealFunction& f, double a, double b);

// Coefficients {c0, c1, c2} of the quadratic through (0,f0), (1/2,fh), (1,f1).
std::array<double, 3> quadratic_through(double f0, double fh, double f1);

// Finite box lattice inside l_p: coordinates k = 1..d range over an equally
// spaced grid on [0, y_k].  When the full product would exceed the cap the
// lattice degenerates to the two extreme corners, where the coordinate and
// dyadic-sum deviation bounds are attained anyway.
struct LpLattice {
  std::vector<double> y;                      // per-coordinate upper bounds, in [0, 1]
  std::vector<std::vector<double>> points;    // each of size y.size()

  static LpLattice build(std::vector<double> y, int points_per_coordinate = 3,
                         std::size_t cap = 6561);

  std::size_t dimension() const { return y.size(); }
  std::size_t size() const { return points.size(); }

  // n-th coordinate of point x (0 beyond the truncation).
  static double coordinate(const std::vector<double>& x, int n);
  // sum_{k=1..min(n,d)} x_k / 2^k
  static double dyadic_sum(const std::vector<double>& x, int n);

  // sup over the lattice of |coordinate_n|; equals y_n for n <= d, else 0.
  double coordinate_deviation(int n) const;
  // sup over the lattice of the dyadic tail sum_{k>n} x_k / 2^k.
  double dyadic_deviation(int n) const;
};

}  // namespace korovkin
