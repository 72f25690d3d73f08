#include "korovkin/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace korovkin {

namespace {

const double kPi = 3.14159265358979323846;
const double kTwoPi = 6.28318530717958647692;

}  // namespace

std::complex<double> FourierCoefficients::at(int m) const {
  if (m < -max_m || m > max_m)
    throw std::out_of_range("fourier coefficients: index " + std::to_string(m) +
                            " outside |m| <= " + std::to_string(max_m));
  return values[static_cast<std::size_t>(m + max_m)];
}

FourierCoefficients fourier_coefficients(const GridFunction& symbol, int max_m) {
  if (max_m < 0) throw std::invalid_argument("fourier_coefficients: max_m must be nonnegative");
  if (!symbol.domain().periodic)
    throw std::invalid_argument("fourier_coefficients: symbol must live on the periodic circle");
  const int n = static_cast<int>(symbol.size());
  if (n < 4 * max_m || n < 1)
    throw std::invalid_argument("fourier_coefficients: need at least 4*max_m samples");

  // Tabulated roots zeta^j = e^{-2 pi i j / n}; indexing by (m k) mod n keeps
  // every kernel factor at one rounding, with no phase drift along k.
  std::vector<std::complex<double>> root(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    root[static_cast<std::size_t>(j)] = std::polar(1.0, -kTwoPi * j / n);

  FourierCoefficients out;
  out.max_m = max_m;
  out.values.assign(static_cast<std::size_t>(2 * max_m + 1), {});
  for (int m = 0; m <= max_m; ++m) {
    std::complex<double> pos{};
    std::complex<double> neg{};
    for (int k = 0; k < n; ++k) {
      double fk = symbol[static_cast<std::size_t>(k)];
      auto idx = static_cast<std::size_t>((static_cast<long long>(m) * k) % n);
      pos += fk * root[idx];
      if (m > 0) neg += fk * root[static_cast<std::size_t>((static_cast<long long>(n - m) * k) % n)];
    }
    pos /= n;
    neg /= n;
    // Grid starts at -pi, so e^{-im x_k} carries the extra factor (-1)^m.
    if (m % 2) {
      pos = -pos;
      neg = -neg;
    }
    if (m == 0) neg = pos;
    // Conjugate symmetry enforced by averaging the two independent sums.
    std::complex<double> sym = 0.5 * (pos + std::conj(neg));
    out.values[static_cast<std::size_t>(max_m + m)] = sym;
    out.values[static_cast<std::size_t>(max_m - m)] = std::conj(sym);
  }
  return out;
}

Eigen::MatrixXcd toeplitz_build(const FourierCoefficients& coeffs, int n) {
  if (n < 1) throw std::invalid_argument("toeplitz_build: order must be positive");
  if (coeffs.max_m < n - 1)
    throw std::invalid_argument("toeplitz_build: coefficients must cover |m| <= n-1");
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = coeffs.at(i - j);
  return a;
}

namespace {

// Complex Cesaro sum; the caller decides what to do with the imaginary part.
std::complex<double> cesaro_sum(const FourierCoefficients& coeffs, int n, double x) {
  std::complex<double> acc = static_cast<double>(n) * coeffs.at(0);
  std::complex<double> z = std::polar(1.0, x);
  std::complex<double> zm = 1.0;
  for (int m = 1; m < n; ++m) {
    zm *= z;
    acc += static_cast<double>(n - m) * (coeffs.at(m) * zm + coeffs.at(-m) * std::conj(zm));
  }
  return acc / static_cast<double>(n);
}

void require_covers(const FourierCoefficients& coeffs, int n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": order must be positive");
  if (coeffs.max_m < n - 1)
    throw std::invalid_argument(std::string(who) + ": coefficients must cover |m| <= n-1");
}

}  // namespace

double fejer_mean(const FourierCoefficients& coeffs, int n, double x) {
  require_covers(coeffs, n, "fejer_mean");
  return cesaro_sum(coeffs, n, x).real();
}

double quadratic_form(const FourierCoefficients& coeffs, int n, double x) {
  require_covers(coeffs, n, "quadratic_form");
  std::complex<double> closed = cesaro_sum(coeffs, n, x);

  Eigen::MatrixXcd a = toeplitz_build(coeffs, n);
  Eigen::VectorXcd vstar(n);
  double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::complex<double> z = std::polar(1.0, -x);
  std::complex<double> zj = scale;
  for (int j = 0; j < n; ++j) {
    vstar[j] = zj;
    zj *= z;
  }
  std::complex<double> sandwich = (vstar.adjoint() * a * vstar).value();

  if (std::abs(closed.imag()) >= 1e-8 || std::abs(sandwich.imag()) >= 1e-8)
    throw std::invalid_argument("quadratic_form: imaginary residual signals non-Hermitian input");
  if (std::abs(closed.real() - sandwich.real()) > 1e-10)
    throw std::runtime_error("quadratic_form: sandwich and Cesaro routes disagree");
  return closed.real();
}

UnitaryFrame UnitaryFrame::of_order(int n) {
  if (n < 1) throw std::invalid_argument("unitary frame: order must be positive");
  UnitaryFrame f;
  f.order = n;
  f.grid.resize(static_cast<std::size_t>(n));
  f.matrix.resize(n, n);
  std::vector<std::complex<double>> root(static_cast<std::size_t>(n));
  double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j)
    root[static_cast<std::size_t>(j)] = std::polar(1.0, -kTwoPi * j / n);
  for (int k = 0; k < n; ++k) {
    double x = kTwoPi * (static_cast<double>(k) / n);
    if (x >= kPi) x -= kTwoPi;
    f.grid[static_cast<std::size_t>(k)] = x;
    for (int j = 0; j < n; ++j)
      f.matrix(j, k) =
          scale * root[static_cast<std::size_t>((static_cast<long long>(j) * k) % n)];
  }
  return f;
}

Preconditioner preconditioner(const Eigen::MatrixXcd& a, const UnitaryFrame& frame) {
  if (a.rows() != a.cols()) throw std::invalid_argument("preconditioner: matrix must be square");
  if (a.rows() != frame.order)
    throw std::invalid_argument("preconditioner: frame order does not match the matrix");
  const Eigen::MatrixXcd& u = frame.matrix;
  Eigen::VectorXcd diag = (u.adjoint() * a * u).diagonal();
  Preconditioner out;
  out.eigenvalues.resize(static_cast<std::size_t>(frame.order));
  Eigen::VectorXcd real_diag(frame.order);
  for (int k = 0; k < frame.order; ++k) {
    if (std::abs(diag[k].imag()) >= 1e-8)
      throw std::invalid_argument("preconditioner: diagonal residual signals non-Hermitian input");
    out.eigenvalues[static_cast<std::size_t>(k)] = diag[k].real();
    real_diag[k] = diag[k].real();
  }
  out.matrix = u * real_diag.asDiagonal() * u.adjoint();
  return out;
}

double frobenius_optimality_check(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& p,
                                  const UnitaryFrame& frame, int trials, unsigned seed) {
  if (trials < 1) throw std::invalid_argument("frobenius_optimality_check: need at least one trial");
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const Eigen::MatrixXcd& u = frame.matrix;
  const Eigen::MatrixXcd residual = a - p;
  const double base = residual.norm();
  const double a_norm = a.norm();
  double min_gap = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXcd d(frame.order);
    for (int k = 0; k < frame.order; ++k) d[k] = unif(rng);
    Eigen::MatrixXcd c = u * d.asDiagonal() * u.adjoint();
    min_gap = std::min(min_gap, (a - c).norm() - base);
    std::complex<double> inner = (residual.adjoint() * c).trace();
    if (std::abs(inner) > 1e-8 * a_norm * c.norm())
      throw std::runtime_error("frobenius_optimality_check: projection residual out of tolerance");
  }
  return min_gap;
}

namespace {

class CirculantQuadraticFamily final : public OperatorFamily {
 public:
  CirculantQuadraticFamily(std::string name, std::vector<double> weight_n,
                           std::vector<double> node_n, WeightedCompositionOperator limit,
                           int coefficient_samples)
      : name_(std::move(name)),
        weight_n_(std::move(weight_n)),
        node_n_(std::move(node_n)),
        limit_(std::move(limit)),
        samples_(coefficient_samples) {}

  std::string name() const override { return name_; }
  TestMode mode() const override { return TestMode::trigonometric; }
  Interval source() const override { return Interval::circle(); }
  const WeightedCompositionOperator& limit() const override { return limit_; }

  std::vector<double> apply(int n, const RealFunction& f) const override {
    int max_m = n - 1;
    auto samples = static_cast<std::size_t>(std::max(samples_, 4 * max_m));
    auto coeffs =
        fourier_coefficients(GridFunction::sample(Interval::circle(), samples, f), max_m);
    std::vector<double> out(node_n_.size());
    for (std::size_t i = 0; i < node_n_.size(); ++i)
      out[i] = weight_n_[i] * fejer_mean(coeffs, n, node_n_[i]);
    return out;
  }

 private:
  std::string name_;
  std::vector<double> weight_n_;
  std::vector<double> node_n_;
  WeightedCompositionOperator limit_;
  int samples_;
};

}  // namespace

std::unique_ptr<OperatorFamily> weighted_family(WeightedVariant variant, const RealFunction& a,
                                                const RealFunction& a_n,
                                                std::vector<double> t_points,
                                                int coefficient_samples) {
  if (t_points.empty()) throw std::invalid_argument("weighted_family: empty evaluation grid");
  if (coefficient_samples < 4)
    throw std::invalid_argument("weighted_family: coefficient sampling too coarse");
  std::size_t size = t_points.size();
  std::vector<double> lim_par(size), tpl(size);
  for (std::size_t i = 0; i < size; ++i) {
    lim_par[i] = a(t_points[i]);
    tpl[i] = a_n(t_points[i]);
  }

  if (variant == WeightedVariant::exponential_weight) {
    for (std::size_t i = 0; i < size; ++i)
      if (lim_par[i] < 0.0 || lim_par[i] > 1.0 || tpl[i] < 0.0 || tpl[i] > 1.0)
        throw std::invalid_argument("weighted_family: exponent parameter leaves [0, 1]");
    std::vector<double> weight_n(size), limit_weight(size);
    for (std::size_t i = 0; i < size; ++i) {
      weight_n[i] = std::exp(tpl[i]);
      limit_weight[i] = std::exp(lim_par[i]);
    }
    WeightedCompositionOperator limit(std::move(limit_weight), t_points);
    return std::make_unique<CirculantQuadraticFamily>("circulant-w", std::move(weight_n),
                                                      std::move(t_points), std::move(limit),
                                                      coefficient_samples);
  }

  for (std::size_t i = 0; i < size; ++i)
    if (lim_par[i] < -kPi || lim_par[i] > kPi || tpl[i] < -kPi || tpl[i] > kPi)
      throw std::invalid_argument("weighted_family: node parameter leaves [-pi, pi]");
  std::vector<double> weight_n(size, 1.0);
  WeightedCompositionOperator limit(weight_n, std::move(lim_par));
  return std::make_unique<CirculantQuadraticFamily>("circulant-node", std::move(weight_n),
                                                    std::move(tpl), std::move(limit),
                                                    coefficient_samples);
}

}  // namespace korovkin
