#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "korovkin/families.hpp"

using namespace korovkin;

namespace {

const RealFunction e0 = [](double) { return 1.0; };
const RealFunction e1 = [](double t) { return t; };
const RealFunction e2 = [](double t) { return t * t; };
const RealFunction identity = e1;

double max_dev(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Test-function deviations must shrink along n for every family (this is the
// convergence hypothesis the bound engines feed on).
void check_testfunction_decay(const OperatorFamily& fam) {
  const RealFunction* tests[3] = {&e0, &e1, &e2};
  for (const auto* f : tests) {
    auto lim = fam.limit_apply(*f);
    double prev = -1.0;
    for (int n : {8, 16, 32, 64, 128}) {
      double dev = max_dev(fam.apply(n, *f), lim);
      if (prev >= 0.0) CHECK(dev <= prev + 1e-12);
      prev = dev;
    }
  }
}

}  // namespace

TEST_CASE("weighted composition evaluation and validation") {
  WeightedCompositionOperator a({2.0, 0.5}, {0.25, 1.0});
  auto v = a.apply(e1);
  CHECK(v[0] == 0.5);
  CHECK(v[1] == 0.5);
  auto w = a.apply([](double t) { return std::exp(t); });
  CHECK(w[0] == doctest::Approx(2.0 * std::exp(0.25)).epsilon(1e-15));
  CHECK(w[1] == doctest::Approx(0.5 * std::exp(1.0)).epsilon(1e-15));
  CHECK(a.min_weight() == 0.5);

  CHECK_THROWS_AS(WeightedCompositionOperator({1.0, 0.0}, {0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedCompositionOperator({1.0, -2.0}, {0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedCompositionOperator({1.0}, {0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedCompositionOperator({}, {}), std::invalid_argument);
}

TEST_CASE("compatibility identities hold for random weighted compositions") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> uw(0.1, 2.5);
  std::uniform_real_distribution<double> ua(0.0, 1.0);
  std::uniform_real_distribution<double> ut(-3.14159265358979323846, 3.14159265358979323846);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> w(64), alg(64), trig(64);
    for (int k = 0; k < 64; ++k) {
      w[k] = uw(rng);
      alg[k] = ua(rng);
      trig[k] = ut(rng);
    }
    CHECK(algebraic_structure_defect(WeightedCompositionOperator(w, alg)) < 1e-12);
    CHECK(trigonometric_structure_defect(WeightedCompositionOperator(w, trig)) < 1e-12);
  }
}

TEST_CASE("bernstein family: frozen values and second-monomial decay") {
  BernsteinFamily small({0.0, 0.5, 1.0}, identity);
  auto v = small.apply(2, e2);
  CHECK(v[0] == 0.0);
  CHECK(v[1] == doctest::Approx(0.375).epsilon(1e-14));
  CHECK(v[2] == doctest::Approx(1.0).epsilon(1e-14));
  auto lim = small.limit_apply(e2);
  CHECK(lim[1] == 0.25);

  // sup over t of t(1-t)/n sits at t = 1/2; a 129-point grid contains it.
  BernsteinFamily fam(grid_points(Interval::unit(), 129), identity);
  auto a2 = fam.limit_apply(e2);
  for (int n : {8, 32, 128}) {
    CHECK(std::abs(max_dev(fam.apply(n, e2), a2) - 0.25 / n) < 1e-13);
    CHECK(max_dev(fam.apply(n, e1), fam.limit_apply(e1)) < 1e-14);
    CHECK(max_dev(fam.apply(n, e0), fam.limit_apply(e0)) < 1e-14);
  }
  CHECK(fam.scalar_t_grid().size() == 129);
  check_testfunction_decay(fam);

  CHECK_THROWS_AS(BernsteinFamily({0.0, 1.0}, [](double) { return 1.5; }), std::invalid_argument);
}

TEST_CASE("averaged family: frozen values, moment agreement, reductions") {
  // c = d = 0 collapses the windows to point samples.
  auto t17 = grid_points(Interval::unit(), 17);
  KantorovichCase1Family collapsed(t17, identity, 0.0, DenominatorShift::constant(0.0));
  BernsteinFamily plain(t17, identity);
  RealFunction f = [](double t) { return std::exp(t); };
  CHECK(max_dev(collapsed.apply(8, f), plain.apply(8, f)) < 1e-13);

  // n=1 at parameter 1 with c=0, d=1: the single surviving sample is f(1/2).
  KantorovichCase1Family tiny({1.0}, identity, 0.0, DenominatorShift::constant(1.0));
  CHECK(tiny.apply(1, e1)[0] == doctest::Approx(0.5).epsilon(1e-14));
  // Constant d keeps the limit node at the parameter itself.
  CHECK(tiny.limit_apply(e1)[0] == 1.0);

  KantorovichCase1Family fam(grid_points(Interval::unit(), 33), identity, 1.0,
                             DenominatorShift::n());
  // Unit mass is preserved exactly.
  auto ones = fam.apply(8, e0);
  for (double v : ones) CHECK(std::abs(v - 1.0) < 1e-13);
  // Proportional d halves the limit node.
  CHECK(fam.limit_apply(e1).back() == doctest::Approx(0.5).epsilon(1e-15));
  // Shift c*x, x uniform: mass n, m1 = 1/2, m2 = 1/3; at p = 1/2, n = 4:
  // L(e1) = (4*0.5 + 0.5)/8 = 0.3125.
  auto le1 = fam.apply(4, e1);
  CHECK(le1[16] == doctest::Approx(0.3125).epsilon(1e-12));
  check_testfunction_decay(fam);

  CHECK_THROWS_AS(KantorovichCase1Family({0.5}, identity, -1.0, DenominatorShift::n()),
                  std::invalid_argument);
  CHECK_THROWS_AS(KantorovichCase1Family({0.5}, identity, 2.0, DenominatorShift::constant(1.0)),
                  std::invalid_argument);
}

TEST_CASE("moment-interface family: exact on quadratics, surrogate elsewhere") {
  KantorovichMomentFamily fam({0.0, 0.5, 1.0}, identity);
  CHECK_FALSE(fam.supports_general_probe());

  auto le1 = fam.apply(1, e1);
  CHECK(le1[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(le1[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(le1[2] == doctest::Approx(0.75).epsilon(1e-14));
  // The first moment of the sum-of-uniforms shift is n/2 exactly, so the
  // first-monomial action equals the limit at every n.
  CHECK(max_dev(le1, fam.limit_apply(e1)) < 1e-14);

  auto le2 = fam.apply(1, e2);
  CHECK(le2[0] == doctest::Approx(1.0 / 12.0).epsilon(1e-14));

  // Non-quadratic probes fall back to the quadratic through f(0), f(1/2),
  // f(1): for |t - 1/2| that is 1/2 - 2t + 2t^2, giving 1/6 at p = 0, n = 1.
  auto surrogate = fam.apply(1, [](double t) { return std::abs(t - 0.5); });
  CHECK(surrogate[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-13));

  check_testfunction_decay(fam);
}

TEST_CASE("exponential-weight families: frozen values and limits") {
  ExpBernsteinFamily fam({0.0, 1.0}, identity);
  auto l0 = fam.apply(2, e0);
  CHECK(l0[0] == 1.0);
  CHECK(l0[1] == doctest::Approx(1.5625).epsilon(1e-14));
  auto a0 = fam.limit_apply(e0);
  CHECK(a0[0] == 1.0);
  CHECK(a0[1] == doctest::Approx(std::exp(0.5)).epsilon(1e-15));
  // n=1 at parameter 1: the k=1 term is C(1,1) * (1/1)^1 * f(1) = 1.
  CHECK(fam.apply(1, e1)[1] == doctest::Approx(1.0).epsilon(1e-14));
  // Limit sends everything to weight * f(0).
  CHECK(fam.limit_apply(e1)[1] == 0.0);
  check_testfunction_decay(fam);

  ExpKantorovichFamily avg({1.0}, identity, 0.0, DenominatorShift::constant(1.0));
  CHECK(avg.apply(1, e0)[0] == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(avg.apply(1, e1)[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(avg.limit_apply(e0)[0] == doctest::Approx(std::exp(0.5)).epsilon(1e-15));
  CHECK(avg.limit_apply(e1)[0] == 0.0);
  check_testfunction_decay(ExpKantorovichFamily(grid_points(Interval::unit(), 17), identity, 1.0,
                                                DenominatorShift::n()));
}

TEST_CASE("two-weight family: frozen values and parameter validation") {
  TwoWeightFamily fam({0.3}, [](double) { return 1.0; }, [](double) { return 1.0; });
  CHECK(fam.apply(1, e1)[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(fam.limit_apply(e0)[0] == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  CHECK(fam.limit_apply(e1)[0] == doctest::Approx(0.5 * std::exp(-0.5)).epsilon(1e-15));
  double total = fam.apply(16, e0)[0];
  CHECK(std::abs(total - std::pow(1.0 - 1.0 / 32.0, 16)) < 1e-13);
  check_testfunction_decay(fam);

  // a = b = 0 pins every sum to f(0) and the limit agrees exactly.
  TwoWeightFamily degenerate({0.0, 1.0}, [](double) { return 0.0; }, [](double) { return 0.0; });
  RealFunction g = [](double t) { return std::cos(3.0 * t); };
  CHECK(degenerate.apply(5, g)[0] == 1.0);
  CHECK(max_dev(degenerate.apply(5, g), degenerate.limit_apply(g)) == 0.0);

  CHECK_THROWS_AS(TwoWeightFamily({0.5}, [](double) { return -0.5; }, [](double) { return 0.0; }),
                  std::invalid_argument);
  CHECK_THROWS_AS(TwoWeightFamily({0.5}, [](double) { return 1.0; }, [](double) { return 1.5; }),
                  std::invalid_argument);
}

TEST_CASE("lattice families: coordinate and dyadic parameter actions") {
  std::vector<double> geo(10);
  for (int k = 0; k < 10; ++k) geo[k] = std::ldexp(1.0, -(k + 1));
  LatticeCoordinateFamily h(LpLattice::build(geo, 2));
  CHECK(h.limit().size() == 1024);

  // L_n(e1) at a lattice point is its n-th coordinate; the limit is 0, so the
  // deviation is the coordinate bound.
  auto lim1 = h.limit_apply(e1);
  CHECK(max_dev(h.apply(3, e1), lim1) == doctest::Approx(0.125).epsilon(1e-13));
  CHECK(max_dev(h.apply(10, e1), lim1) == doctest::Approx(std::ldexp(1.0, -10)).epsilon(1e-15));
  // Past the truncation depth every coordinate is 0 and L_n(f) = f(0).
  RealFunction f = [](double t) { return std::exp(t); };
  for (double v : h.apply(12, f)) CHECK(v == 1.0);
  // sup of p^2 + p(1-p)/n over the lattice at n=2: p = y_2 = 1/4 gives 5/32.
  CHECK(max_dev(h.apply(2, e2), h.limit_apply(e2)) == doctest::Approx(5.0 / 32.0).epsilon(1e-14));

  LatticeDyadicFamily gfam(LpLattice::build(std::vector<double>(4, 1.0), 3));
  CHECK(gfam.limit().size() == 81);
  for (double v : gfam.apply(7, e0)) CHECK(std::abs(v - 1.0) < 1e-13);
  // Truncation error of the dyadic sum at n=2, depth 4: 1/8 + 1/16 = 3/16.
  CHECK(max_dev(gfam.apply(2, e1), gfam.limit_apply(e1)) ==
        doctest::Approx(3.0 / 16.0).epsilon(1e-14));
  check_testfunction_decay(gfam);
}

TEST_CASE("positivity and linearity across the zoo") {
  auto t33 = grid_points(Interval::unit(), 33);
  BernsteinFamily f1(t33, identity);
  KantorovichCase1Family f2(t33, identity, 1.0, DenominatorShift::n());
  KantorovichMomentFamily f3(t33, identity);
  ExpBernsteinFamily f4(t33, identity);
  ExpKantorovichFamily f5(t33, identity, 1.0, DenominatorShift::n());
  TwoWeightFamily f6(t33, [](double) { return 1.0; }, [](double) { return 1.0; });
  LatticeCoordinateFamily f7(LpLattice::build({0.5, 0.25, 0.125}, 3));
  LatticeDyadicFamily f8(LpLattice::build({0.5, 0.25, 0.125}, 3));
  const OperatorFamily* zoo[] = {&f1, &f2, &f3, &f4, &f5, &f6, &f7, &f8};
  for (const OperatorFamily* fam : zoo) {
    RealFunction nonneg = [](double t) { return std::abs(std::sin(5.0 * t + 1.0)) + 0.1; };
    // The moment-interface family sees only the quadratic through three probe
    // samples, which can dip negative even for a nonnegative probe; feed it a
    // nonnegative quadratic instead.
    RealFunction probe = fam->supports_general_probe() ? nonneg : e2;
    for (double v : fam->apply(16, probe)) CHECK(v >= 0.0);

    RealFunction g = [](double t) { return std::cos(2.0 * t); };
    RealFunction combo = [&](double t) { return 0.7 * probe(t) - 1.3 * g(t); };
    auto lhs = fam->apply(16, combo);
    auto pf = fam->apply(16, probe);
    auto pg = fam->apply(16, g);
    for (std::size_t i = 0; i < lhs.size(); ++i)
      CHECK(std::abs(lhs[i] - (0.7 * pf[i] - 1.3 * pg[i])) < 1e-10);
  }
}
