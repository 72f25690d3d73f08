#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <vector>

#include "korovkin/families.hpp"
#include "korovkin/grid.hpp"

namespace korovkin {

// Centered Fourier coefficients of a real 2pi-periodic symbol, |m| <= max_m.
// Conjugate symmetry fhat(-m) = conj(fhat(m)) holds exactly after the
// averaging step in fourier_coefficients.
struct FourierCoefficients {
  int max_m = 0;
  std::vector<std::complex<double>> values;  // index m + max_m

  std::complex<double> at(int m) const;
};

// Rectangle-rule coefficients from the symbol's periodic sampling; exact for
// trigonometric polynomials of degree < N/2 - max_m up to roundoff (the
// kernel uses tabulated roots of unity, so there is no phase drift).
// Rejects non-periodic symbols and N < 4*max_m.
FourierCoefficients fourier_coefficients(const GridFunction& symbol, int max_m);

// Dense Toeplitz matrix (A_n)_{ij} = fhat(i-j); Hermitian for a real symbol.
// Requires coefficients covering |m| <= n-1.
Eigen::MatrixXcd toeplitz_build(const FourierCoefficients& coeffs, int n);

// Cesaro partial sum (1/n) sum_{|m|<n} (n-|m|) fhat(m) e^{imx}, the closed
// form of quadratic_form below and the production path for large n (O(n) per
// point, no matrix).  Assumes the symmetry at() guarantees.
double fejer_mean(const FourierCoefficients& coeffs, int n, double x);

// v(x) A_n v*(x) with v(x)_j = e^{ijx}/sqrt(n).  Evaluates both the dense
// matrix sandwich and the Cesaro closed form and requires agreement within
// 1e-10.  Imaginary residuals below that are discarded; residuals >= 1e-8
// reject the coefficients as non-Hermitian.
double quadratic_form(const FourierCoefficients& coeffs, int n, double x);

// Fourier frame of order n: column k is v*(x_k) with entries e^{-ij x_k} /
// sqrt(n) and x_k = 2 pi k / n wrapped into [-pi, pi).  Entries come from the
// tabulated n-th roots of unity, so U U* = I to a few ulps.
struct UnitaryFrame {
  int order = 0;
  std::vector<double> grid;
  Eigen::MatrixXcd matrix;

  static UnitaryFrame of_order(int n);
};

struct Preconditioner {
  Eigen::MatrixXcd matrix;          // U diag(U* A U) U*
  std::vector<double> eigenvalues;  // that diagonal; real parts after residual check
};

// Frobenius-orthogonal projection of A onto the matrices the frame
// diagonalizes.  Rejects non-square input, order mismatch, and diagonal
// imaginary residuals >= 1e-8 (non-Hermitian A).
Preconditioner preconditioner(const Eigen::MatrixXcd& a, const UnitaryFrame& frame);

// Draws `trials` random members C of the frame's algebra (diagonals uniform
// on [-1,1] from the given seed) and returns the smallest observed gap
// ||A - C||_F - ||A - P||_F.  Enforces the projection identity
// |<A - P, C>_F| <= 1e-8 ||A||_F ||C||_F on every draw.
double frobenius_optimality_check(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& p,
                                  const UnitaryFrame& frame, int trials, unsigned seed);

// Positive operator families built on the frame quadratic form
// f -> v(x) A_n(f) v*(x):
//   exponential_weight ("circulant-w"):  L_n(f)(x) = e^{a_n(x)} v(x) A_n(f) v*(x),
//       limit e^{a(x)} f(x); a and a_n map the circle into [0, 1].
//   shifted_node ("circulant-node"):     L_n(f)(t) = v(a_n(t)) A_n(f) v*(a_n(t)),
//       limit f(a(t)); a and a_n map into [-pi, pi].
// a_n is the template instance actually applied at every n (the sequence is
// held constant in n); pass a again when the two agree.
enum class WeightedVariant { exponential_weight, shifted_node };

std::unique_ptr<OperatorFamily> weighted_family(WeightedVariant variant, const RealFunction& a,
                                                const RealFunction& a_n,
                                                std::vector<double> t_points,
                                                int coefficient_samples = 4096);

}  // namespace korovkin
