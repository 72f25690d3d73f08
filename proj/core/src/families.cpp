#include "korovkin/families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace korovkin {

namespace {

std::vector<double> eval_on(const std::vector<double>& t, const RealFunction& g) {
  std::vector<double> v(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) v[i] = g(t[i]);
  return v;
}

std::vector<double> require_unit_range(std::vector<double> v, const char* who) {
  for (double x : v)
    if (x < 0.0 || x > 1.0)
      throw std::invalid_argument(std::string(who) + ": parameter function leaves [0, 1]");
  return v;
}

// f(k/n), k = 0..n.
std::vector<double> point_samples(int n, const RealFunction& f) {
  std::vector<double> s(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(k)] = f(static_cast<double>(k) / n);
  return s;
}

double dot(const std::vector<double>& w, const std::vector<double>& s) {
  double acc = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) acc += w[k] * s[k];
  return acc;
}

std::vector<double> ones(std::size_t n) { return std::vector<double>(n, 1.0); }
std::vector<double> zeros(std::size_t n) { return std::vector<double>(n, 0.0); }

}  // namespace

WeightedCompositionOperator::WeightedCompositionOperator(std::vector<double> weight,
                                                         std::vector<double> node)
    : weight_(std::move(weight)), node_(std::move(node)) {
  if (weight_.empty()) throw std::invalid_argument("weighted composition: empty grid");
  if (weight_.size() != node_.size())
    throw std::invalid_argument("weighted composition: weight/node size mismatch");
  for (double w : weight_)
    if (!(w > 0.0)) throw std::invalid_argument("weighted composition: weights must be positive");
}

std::vector<double> WeightedCompositionOperator::apply(const RealFunction& f) const {
  std::vector<double> v(weight_.size());
  for (std::size_t i = 0; i < weight_.size(); ++i) v[i] = weight_[i] * f(node_[i]);
  return v;
}

double WeightedCompositionOperator::min_weight() const {
  return *std::min_element(weight_.begin(), weight_.end());
}

double algebraic_structure_defect(const WeightedCompositionOperator& a) {
  auto a0 = a.apply([](double) { return 1.0; });
  auto a1 = a.apply([](double t) { return t; });
  auto a2 = a.apply([](double t) { return t * t; });
  double m = 0.0;
  for (std::size_t i = 0; i < a0.size(); ++i)
    m = std::max(m, std::abs(a0[i] * a2[i] - a1[i] * a1[i]));
  return m;
}

double trigonometric_structure_defect(const WeightedCompositionOperator& a) {
  auto h0 = a.apply([](double) { return 1.0; });
  auto h1 = a.apply([](double t) { return std::cos(t); });
  auto h2 = a.apply([](double t) { return std::sin(t); });
  double m = 0.0;
  for (std::size_t i = 0; i < h0.size(); ++i)
    m = std::max(m, std::abs(h0[i] * h0[i] - h1[i] * h1[i] - h2[i] * h2[i]));
  return m;
}

BernsteinFamily::BernsteinFamily(std::vector<double> t_points, RealFunction parameter)
    : t_(std::move(t_points)),
      p_(require_unit_range(eval_on(t_, parameter), "bernstein family")),
      limit_(ones(p_.size()), p_) {}

std::vector<double> BernsteinFamily::apply(int n, const RealFunction& f) const {
  auto s = point_samples(n, f);
  std::vector<double> out(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i)
    out[i] = dot(binomial_mixture_weights(n, p_[i], 1.0 - p_[i]), s);
  return out;
}

namespace {

std::vector<double> scaled(const std::vector<double>& v, double s) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

}  // namespace

KantorovichCase1Family::KantorovichCase1Family(std::vector<double> t_points, RealFunction parameter,
                                               double c, DenominatorShift d, int panels)
    : t_(std::move(t_points)),
      p_(require_unit_range(eval_on(t_, parameter), "averaged family")),
      c_(c),
      d_(d),
      panels_(panels),
      limit_(ones(p_.size()), scaled(p_, 1.0 / (1.0 + d.alpha()))) {
  if (c_ < 0.0) throw std::invalid_argument("averaged family: c must be nonnegative");
  if (!d_.proportional && c_ > d_.value)
    throw std::invalid_argument("averaged family: c must not exceed d");
}

std::vector<double> KantorovichCase1Family::apply(int n, const RealFunction& f) const {
  auto s = averaged_samples(n, f, c_, d_.at(n), panels_);
  std::vector<double> out(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i)
    out[i] = dot(binomial_mixture_weights(n, p_[i], 1.0 - p_[i]), s);
  return out;
}

namespace {

std::vector<double> moment_limit_nodes(const std::vector<double>& p) {
  std::vector<double> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = (2.0 * p[i] + 1.0) / 4.0;
  return v;
}

}  // namespace

KantorovichMomentFamily::KantorovichMomentFamily(std::vector<double> t_points,
                                                 RealFunction parameter)
    : t_(std::move(t_points)),
      p_(require_unit_range(eval_on(t_, parameter), "moment family")),
      limit_(ones(p_.size()), moment_limit_nodes(p_)) {}

std::vector<double> KantorovichMomentFamily::apply(int n, const RealFunction& f) const {
  auto m = product_uniform_moments(n);
  auto coef = quadratic_through(f(0.0), f(0.5), f(1.0));
  std::vector<double> out(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) {
    auto tf = kantorovich_moment_testfunctions(n, m, p_[i]);
    out[i] = coef[0] * tf[0] + coef[1] * tf[1] + coef[2] * tf[2];
  }
  return out;
}

namespace {

std::vector<double> half_exp_weights(const std::vector<double>& p) {
  std::vector<double> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = std::exp(p[i] / 2.0);
  return v;
}

// Exponential binomial mixture at parameter p: q = p/n, r = 1 - p/(2n).
std::vector<double> exp_mixture(int n, double p) {
  return binomial_mixture_weights(n, p / n, 1.0 - p / (2.0 * n));
}

}  // namespace

ExpBernsteinFamily::ExpBernsteinFamily(std::vector<double> t_points, RealFunction parameter)
    : t_(std::move(t_points)),
      p_(require_unit_range(eval_on(t_, parameter), "exponential family")),
      limit_(half_exp_weights(p_), zeros(p_.size())) {}

std::vector<double> ExpBernsteinFamily::apply(int n, const RealFunction& f) const {
  auto s = point_samples(n, f);
  std::vector<double> out(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) out[i] = dot(exp_mixture(n, p_[i]), s);
  return out;
}

ExpKantorovichFamily::ExpKantorovichFamily(std::vector<double> t_points, RealFunction parameter,
                                           double c, DenominatorShift d, int panels)
    : t_(std::move(t_points)),
      p_(require_unit_range(eval_on(t_, parameter), "exponential averaged family")),
      c_(c),
      d_(d),
      panels_(panels),
      limit_(half_exp_weights(p_), zeros(p_.size())) {
  if (c_ < 0.0) throw std::invalid_argument("exponential averaged family: c must be nonnegative");
  if (!d_.proportional && c_ > d_.value)
    throw std::invalid_argument("exponential averaged family: c must not exceed d");
}

std::vector<double> ExpKantorovichFamily::apply(int n, const RealFunction& f) const {
  auto s = averaged_samples(n, f, c_, d_.at(n), panels_);
  std::vector<double> out(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) out[i] = dot(exp_mixture(n, p_[i]), s);
  return out;
}

namespace {

std::vector<double> two_weight_limit_weights(const std::vector<double>& a,
                                             const std::vector<double>& b) {
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = std::exp(-b[i] / (a[i] + 1.0));
  return v;
}

std::vector<double> two_weight_limit_nodes(const std::vector<double>& a) {
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] / (a[i] + 1.0);
  return v;
}

}  // namespace

TwoWeightFamily::TwoWeightFamily(std::vector<double> t_points, RealFunction a, RealFunction b)
    : t_(std::move(t_points)),
      a_(eval_on(t_, a)),
      b_(eval_on(t_, b)),
      limit_(two_weight_limit_weights(a_, b_), two_weight_limit_nodes(a_)) {
  for (double x : a_)
    if (x < 0.0) throw std::invalid_argument("two-weight family: a(t) must be nonnegative");
  for (double x : b_)
    if (x > 1.0) throw std::invalid_argument("two-weight family: b(t) must not exceed 1");
}

std::vector<double> TwoWeightFamily::apply(int n, const RealFunction& f) const {
  auto s = point_samples(n, f);
  std::vector<double> out(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) {
    double q = a_[i] / (a_[i] + 1.0);
    double r = (1.0 - b_[i] / n) / (a_[i] + 1.0);
    out[i] = dot(binomial_mixture_weights(n, q, r), s);
  }
  return out;
}

LatticeCoordinateFamily::LatticeCoordinateFamily(LpLattice lattice)
    : lattice_(std::move(lattice)),
      limit_(ones(lattice_.size()), zeros(lattice_.size())) {}

std::vector<double> LatticeCoordinateFamily::apply(int n, const RealFunction& f) const {
  auto s = point_samples(n, f);
  std::vector<double> out(lattice_.size());
  for (std::size_t i = 0; i < lattice_.size(); ++i) {
    double p = LpLattice::coordinate(lattice_.points[i], n);
    out[i] = dot(binomial_mixture_weights(n, p, 1.0 - p), s);
  }
  return out;
}

namespace {

std::vector<double> full_dyadic_nodes(const LpLattice& lattice) {
  std::vector<double> v(lattice.size());
  int d = static_cast<int>(lattice.dimension());
  for (std::size_t i = 0; i < lattice.size(); ++i)
    v[i] = LpLattice::dyadic_sum(lattice.points[i], d);
  return v;
}

}  // namespace

LatticeDyadicFamily::LatticeDyadicFamily(LpLattice lattice)
    : lattice_(std::move(lattice)),
      limit_(ones(lattice_.size()), full_dyadic_nodes(lattice_)) {}

std::vector<double> LatticeDyadicFamily::apply(int n, const RealFunction& f) const {
  auto s = point_samples(n, f);
  std::vector<double> out(lattice_.size());
  for (std::size_t i = 0; i < lattice_.size(); ++i) {
    double p = LpLattice::dyadic_sum(lattice_.points[i], n);
    out[i] = dot(binomial_mixture_weights(n, p, 1.0 - p), s);
  }
  return out;
}

}  // namespace korovkin
