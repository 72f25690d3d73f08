#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "korovkin/families.hpp"
#include "korovkin/grid.hpp"

namespace korovkin {

// One bound evaluation at a single index n.  bound already carries the
// reciprocal factor m = 1/inf A(test0); margin = bound - observed, and the
// verdict tolerates -1e-9 of shared grid round-off.  degenerate marks the
// fallback where the quadratic term vanished and mu was replaced by the
// deviation ||L_n(test0) - A(test0)||.
struct BoundReport {
  int n = 0;
  double mu = 0.0;
  double m_const = 1.0;
  // ||L_n(test0) - A(test0)|| * ||A(f)||, before the m factor.
  double term_identity = 0.0;
  // Modulus term as it enters the bound: (||L_n(test0) A(test0)|| + 1) *
  // omega(f, mu) on the main path; the +1 drops on the degenerate path.
  double term_omega = 0.0;
  double bound = 0.0;
  double observed = 0.0;
  double margin = 0.0;
  bool degenerate = false;
  bool pass = false;
};

// Classical interval bound against the identity limit:
//   ||L_n(f) - f|| <= ||f|| ||L_n(1) - 1|| + ||L_n(1) + 1|| omega(f, mu_n),
//   mu_n^2 = sup_x [ L_n(e2)(x) - 2x L_n(e1)(x) + x^2 L_n(e0)(x) ].
// Needs an algebraic family exposing a scalar t-grid and a probe sampled on
// the family source.  A sup below -1e-12 signals a non-positive family and
// is rejected; round-off negatives above that clamp to zero.
BoundReport shisha_mond_bound(const OperatorFamily& family, const GridFunction& f, int n);

// mu_n of the operator-limit bound, plus the degenerate flag.
//   algebraic:      mu^2 = sup |L_n(e2)A(e0) - 2 L_n(e1)A(e1) + L_n(e0)A(e2)|
//   trigonometric:  mu^2 = (pi^2/2) sup |L_n(h0)A(h0) - L_n(h1)A(h1) - L_n(h2)A(h2)|
// When mu^2 < 1e-14 the quadratic term carries no information; the returned
// mu is then ||L_n(test0) - A(test0)|| and the flag is set.
std::pair<double, bool> operator_mu(const OperatorFamily& family,
                                    const WeightedCompositionOperator& a, int n, TestMode mode);

// Full report for ||L_n(f) - A(f)|| against
//   m { ||L_n(test0) - A(test0)|| ||A(f)|| + (||L_n(test0)A(test0)|| + 1) omega(f, mu_n) }.
// When L_n(test0) matches A(test0) to 1e-13 on the grid, the identity term
// drops (the specialized form with m (||A(test0)^2|| + 1) omega).  On the
// degenerate path the omega coefficient loses its +1; if the replacement
// deviation also vanishes the bound is pinned to 0 and the verdict demands
// observed = 0 up to tolerance.
BoundReport operator_bound(const OperatorFamily& family, const WeightedCompositionOperator& a,
                           const GridFunction& f, int n, TestMode mode);

// Deviations ||L_n(test_j) - A(test_j)|| and ||L_n(f) - A(f)|| at one n.
struct ConvergenceRow {
  int n = 0;
  std::array<double, 3> test_deviation{};
  std::vector<double> probe_deviation;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  // Every column satisfies value <= 1.5 * previous + 1e-12 down the rows.
  // The relative slack admits non-monotone examples; the absolute one keeps
  // round-off dust in converged columns from registering as growth.
  bool decreasing = false;
};

// Probe functions are evaluated exactly (no grid); rows follow the order of
// ns.  Rejects an empty n list.
ConvergenceTable korovkin_convergence_check(const OperatorFamily& family,
                                            const WeightedCompositionOperator& a, TestMode mode,
                                            std::span<const int> ns,
                                            std::span<const RealFunction> probes);

}  // namespace korovkin
