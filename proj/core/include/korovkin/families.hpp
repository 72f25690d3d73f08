#pragma once

#include <memory>
#include <string>
#include <vector>

#include "korovkin/grid.hpp"
#include "korovkin/operators.hpp"

namespace korovkin {

enum class TestMode { algebraic, trigonometric };

// Limit operator A(f)(t) = w(t) * f(node(t)) held as sample vectors over the
// evaluation grid of T.  Weighted compositions satisfy both test-function
// compatibility identities by construction; the defect helpers below measure
// the floating-point residue.
class WeightedCompositionOperator {
 public:
  WeightedCompositionOperator(std::vector<double> weight, std::vector<double> node);

  std::size_t size() const { return weight_.size(); }
  const std::vector<double>& weight() const { return weight_; }
  const std::vector<double>& node() const { return node_; }

  std::vector<double> apply(const RealFunction& f) const;
  double min_weight() const;

 private:
  std::vector<double> weight_;
  std::vector<double> node_;
};

// sup over the grid of |A(e0)A(e2) - A(e1)^2|, e_j(t) = t^j.
double algebraic_structure_defect(const WeightedCompositionOperator& a);
// sup over the grid of |A(1)^2 - A(cos)^2 - A(sin)^2|.
double trigonometric_structure_defect(const WeightedCompositionOperator& a);

// A family n -> L_n of positive linear operators C[a,b] -> C(T) (or the
// periodic analogue), evaluated over a fixed finite sampling of T.  apply()
// returns the values of L_n(f) at those points, in the same order as the
// limit operator's samples.
class OperatorFamily {
 public:
  virtual ~OperatorFamily() = default;

  virtual std::string name() const = 0;
  virtual TestMode mode() const = 0;
  // Domain the probe f lives on: [0,1] for the algebraic zoo, the circle for
  // trigonometric families.
  virtual Interval source() const = 0;
  virtual const WeightedCompositionOperator& limit() const = 0;
  virtual std::vector<double> apply(int n, const RealFunction& f) const = 0;

  // False when apply() is exact only on a restricted probe class (the
  // moment-interface family handles polynomials of degree <= 2).
  virtual bool supports_general_probe() const { return true; }

  // t coordinates when T is a scalar interval grid; empty otherwise.  Needed
  // by the Shisha-Mond engine, which evaluates L_n((s - x)^2)(x).
  virtual std::vector<double> scalar_t_grid() const { return {}; }

  std::vector<double> limit_apply(const RealFunction& f) const { return limit().apply(f); }
};

// d_n sequence of the averaged families: d_n = n (proportional) or constant.
struct DenominatorShift {
  bool proportional;
  double value;

  static DenominatorShift n() { return {true, 0.0}; }
  static DenominatorShift constant(double v) { return {false, v}; }
  double at(int n_index) const { return proportional ? static_cast<double>(n_index) : value; }
  // lim d_n / n, the alpha of the limit node a(t)/(alpha + 1).
  double alpha() const { return proportional ? 1.0 : 0.0; }
};

// Classical Bernstein sums at parameter p = parameter(t); limit f(parameter(t)).
class BernsteinFamily : public OperatorFamily {
 public:
  BernsteinFamily(std::vector<double> t_points, RealFunction parameter);

  std::string name() const override { return "bernstein"; }
  TestMode mode() const override { return TestMode::algebraic; }
  Interval source() const override { return Interval::unit(); }
  const WeightedCompositionOperator& limit() const override { return limit_; }
  std::vector<double> apply(int n, const RealFunction& f) const override;
  std::vector<double> scalar_t_grid() const override { return t_; }

 private:
  std::vector<double> t_;
  std::vector<double> p_;
  WeightedCompositionOperator limit_;
};

// Binomial weights with integral-averaged samples f((k + c x)/(n + d_n)),
// x uniform on [0,1]; limit f(parameter(t)/(alpha+1)).
class KantorovichCase1Family : public OperatorFamily {
 public:
  KantorovichCase1Family(std::vector<double> t_points, RealFunction parameter, double c,
                         DenominatorShift d, int panels = 64);

  std::string name() const override { return "kantorovich1"; }
  TestMode mode() const override { return TestMode::algebraic; }
  Interval source() const override { return Interval::unit(); }
  const WeightedCompositionOperator& limit() const override { return limit_; }
  std::vector<double> apply(int n, const RealFunction& f) const override;
  std::vector<double> scalar_t_grid() const override { return t_; }

 private:
  std::vector<double> t_;
  std::vector<double> p_;
  double c_;
  DenominatorShift d_;
  int panels_;
  WeightedCompositionOperator limit_;
};

// Sum-of-uniforms averaging (mass n) represented through its moments; exact
// for polynomial probes of degree <= 2, which apply() fits through the
// samples f(0), f(1/2), f(1).  Limit f((2 parameter(t) + 1)/4).
class KantorovichMomentFamily : public OperatorFamily {
 public:
  KantorovichMomentFamily(std::vector<double> t_points, RealFunction parameter);

  std::string name() const override { return "kantorovich2"; }
  TestMode mode() const override { return TestMode::algebraic; }
  Interval source() const override { return Interval::unit(); }
  const WeightedCompositionOperator& limit() const override { return limit_; }
  std::vector<double> apply(int n, const RealFunction& f) const override;
  bool supports_general_probe() const override { return false; }
  std::vector<double> scalar_t_grid() const override { return t_; }

 private:
  std::vector<double> t_;
  std::vector<double> p_;
  WeightedCompositionOperator limit_;
};

// Exponential-weight point sums; limit e^{parameter(t)/2} f(0).
class ExpBernsteinFamily : public OperatorFamily {
 public:
  ExpBernsteinFamily(std::vector<double> t_points, RealFunction parameter);

  std::string name() const override { return "exp-bernstein"; }
  TestMode mode() const override { return TestMode::algebraic; }
  Interval source() const override { return Interval::unit(); }
  const WeightedCompositionOperator& limit() const override { return limit_; }
  std::vector<double> apply(int n, const RealFunction& f) const override;
  std::vector<double> scalar_t_grid() const override { return t_; }

 private:
  std::vector<double> t_;
  std::vector<double> p_;
  WeightedCompositionOperator limit_;
};

// Exponential weights with integral-averaged samples; limit e^{parameter(t)/2} f(0).
class ExpKantorovichFamily : public OperatorFamily {
 public:
  ExpKantorovichFamily(std::vector<double> t_points, RealFunction parameter, double c,
                       DenominatorShift d, int panels = 64);

  std::string name() const override { return "exp-kantorovich"; }
  TestMode mode() const override { return TestMode::algebraic; }
  Interval source() const override { return Interval::unit(); }
  const WeightedCompositionOperator& limit() const override { return limit_; }
  std::vector<double> apply(int n, const RealFunction& f) const override;
  std::vector<double> scalar_t_grid() const override { return t_; }

 private:
  std::vector<double> t_;
  std::vector<double> p_;
  double c_;
  DenominatorShift d_;
  int panels_;
  WeightedCompositionOperator limit_;
};

// Ratio-weighted sums (1/(a+1)^n) sum C(n,k) a^k (1-b/n)^{n-k} f(k/n) with
// parameter functions a(t) >= 0, b(t) <= 1; limit e^{-b/(a+1)} f(a/(a+1)).
class TwoWeightFamily : public OperatorFamily {
 public:
  TwoWeightFamily(std::vector<double> t_points, RealFunction a, RealFunction b);

  std::string name() const override { return "two-weight"; }
  TestMode mode() const override { return TestMode::algebraic; }
  Interval source() const override { return Interval::unit(); }
  const WeightedCompositionOperator& limit() const override { return limit_; }
  std::vector<double> apply(int n, const RealFunction& f) const override;
  std::vector<double> scalar_t_grid() const override { return t_; }

 private:
  std::vector<double> t_;
  std::vector<double> a_;
  std::vector<double> b_;
  WeightedCompositionOperator limit_;
};

// Bernstein sums driven by the n-th coordinate of a lattice point; the
// coordinates decay, so the limit is f(0) at every point.
class LatticeCoordinateFamily : public OperatorFamily {
 public:
  explicit LatticeCoordinateFamily(LpLattice lattice);

  std::string name() const override { return "lp-H"; }
  TestMode mode() const override { return TestMode::algebraic; }
  Interval source() const override { return Interval::unit(); }
  const WeightedCompositionOperator& limit() const override { return limit_; }
  std::vector<double> apply(int n, const RealFunction& f) const override;

  const LpLattice& lattice() const { return lattice_; }

 private:
  LpLattice lattice_;
  WeightedCompositionOperator limit_;
};

// Bernstein sums driven by the truncated dyadic sum of the coordinates;
// limit f(full dyadic sum).
class LatticeDyadicFamily : public OperatorFamily {
 public:
  explicit LatticeDyadicFamily(LpLattice lattice);

  std::string name() const override { return "lp-G"; }
  TestMode mode() const override { return TestMode::algebraic; }
  Interval source() const override { return Interval::unit(); }
  const WeightedCompositionOperator& limit() const override { return limit_; }
  std::vector<double> apply(int n, const RealFunction& f) const override;

  const LpLattice& lattice() const { return lattice_; }

 private:
  LpLattice lattice_;
  WeightedCompositionOperator limit_;
};

}  // namespace korovkin
