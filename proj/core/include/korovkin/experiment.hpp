#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "korovkin/bounds.hpp"
#include "korovkin/families.hpp"
#include "korovkin/grid.hpp"

namespace korovkin {

// One verification run over a named example family.  Expression strings use
// the variable x; parameter expressions are read with x ranging over the
// T-grid (or the lattice axis index for lp-H / lp-G).
struct ExperimentConfig {
  // bernstein | kantorovich1 | kantorovich2 | exp-kantorovich | exp-bernstein
  // | two-weight | lp-H | lp-G | circulant-w | circulant-node
  std::string example;
  std::vector<int> ns = {8, 16, 32, 64, 128};  // strictly increasing, all >= 2
  std::vector<std::string> probes;             // empty selects the default suite
  std::optional<std::string> a;                // main parameter map (role varies)
  std::optional<std::string> an_template;      // circulant instance used at every n
  std::optional<std::string> b;                // second two-weight parameter
  std::optional<double> c;                     // averaging numerator scale
  std::optional<double> d;                     // constant denominator shift; absent = n
  int dimension = 8;                           // lattice depth for lp-H / lp-G
  std::size_t grid = 1025;                     // probe and T-grid resolution
  std::string format = "csv";                  // csv | json
  unsigned seed = 0;                           // accepted, currently inert
};

// Throws std::invalid_argument on the first violated rule (also re-parses
// every expression, so syntax errors surface here as ParseError).
void validate(const ExperimentConfig& config);

// Strict JSON reader: unknown keys and malformed documents are rejected with
// std::invalid_argument.  Keys mirror the struct; "n" is the index list and
// "f" takes a string or an array of strings.
ExperimentConfig config_from_json(const std::string& text);

// Family plus the sampled probe suite, ready to run.
struct ExperimentSetup {
  std::unique_ptr<OperatorFamily> family;
  std::vector<GridFunction> probes;
  std::vector<std::string> probe_names;
};

ExperimentSetup build_setup(const ExperimentConfig& config);

struct BoundRow {
  std::string example;
  std::string probe;
  BoundReport report;
};

// Least-squares decay exponent of one series against n.
struct RateRow {
  std::string example;
  std::string series;  // "mu" or "observed[k]"
  int samples = 0;
  RateFit fit{};
};

struct ExperimentResult {
  std::vector<BoundRow> rows;  // ascending n, probes cycling within each n
  std::vector<RateRow> rates;  // mu first, then per-probe observed; series
                               // with a non-positive sample or fewer than 3
                               // indices are skipped
  bool all_pass = false;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

// Deterministic renderers; CSV numbers are printed with %.12g.
//   columns: example,n,mu,m_const,bound,observed,margin,verdict
// Trailing rate rows reuse the columns as
//   example,samples,exponent,r_squared,intercept,0,0,rate:<series>
std::string render_csv(const ExperimentResult& result, bool with_rows, bool with_rates);
// Same fields under {"rows": [...], "rates": [...]}.
std::string render_json(const ExperimentResult& result, bool with_rows, bool with_rates);

struct PrecondRow {
  double x = 0.0;
  double eigenvalue = 0.0;
  double symbol = 0.0;
  double quadratic_form = 0.0;
};

// Eigenvalues of the circulant projection of the order-n symbol matrix next
// to the frame quadratic form and the raw symbol at the frame grid points.
// Enforces |eigenvalue - quadratic_form| <= 1e-10 on every row.
std::vector<PrecondRow> precond_report(const std::string& symbol, int n);

std::string render_precond_csv(const std::vector<PrecondRow>& rows);
std::string render_precond_json(const std::vector<PrecondRow>& rows);

}  // namespace korovkin
