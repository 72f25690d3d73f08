#include "korovkin/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "korovkin/expression.hpp"
#include "korovkin/toeplitz.hpp"

namespace korovkin {
namespace {

constexpr const char* kExampleIds[] = {
    "bernstein",    "kantorovich1", "kantorovich2", "exp-kantorovich", "exp-bernstein",
    "two-weight",   "lp-H",         "lp-G",         "circulant-w",     "circulant-node"};

bool known_example(const std::string& id) {
  return std::find(std::begin(kExampleIds), std::end(kExampleIds), id) != std::end(kExampleIds);
}

bool trigonometric_example(const std::string& id) {
  return id == "circulant-w" || id == "circulant-node";
}

bool lattice_example(const std::string& id) { return id == "lp-H" || id == "lp-G"; }

std::vector<std::string> default_probes(const std::string& id) {
  if (trigonometric_example(id)) return {"cos(x)", "abs(sin(x))", "exp(cos(x))"};
  // The moment family only reaches probes it can reconstruct from three
  // point values, so its default suite stays quadratic.
  if (id == "kantorovich2") return {"x^2"};
  return {"x^2", "abs(x-0.5)", "exp(x)", "1/(1+25*(2*x-1)^2)"};
}

// Parabola through (0, f0), (1/2, fh), (1, f1).
double quadratic_through(double f0, double fh, double f1, double x) {
  return f0 * (2.0 * (x - 0.5) * (x - 1.0)) + fh * (-4.0 * x * (x - 1.0)) +
         f1 * (2.0 * x * (x - 0.5));
}

bool probe_is_quadratic(const Expression& expr) {
  const double f0 = expr(0.0);
  const double fh = expr(0.5);
  const double f1 = expr(1.0);
  for (double x : {0.25, 0.75}) {
    if (std::abs(quadratic_through(f0, fh, f1, x) - expr(x)) > 1e-9) return false;
  }
  return true;
}

Expression parse_or(const std::optional<std::string>& text, const char* fallback) {
  return Expression::parse(text ? *text : std::string(fallback));
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void validate(const ExperimentConfig& config) {
  if (!known_example(config.example))
    throw std::invalid_argument("experiment: unknown example id '" + config.example + "'");
  if (config.ns.empty()) throw std::invalid_argument("experiment: empty n list");
  for (std::size_t i = 0; i < config.ns.size(); ++i) {
    if (config.ns[i] < 2)
      throw std::invalid_argument("experiment: every n must be at least 2");
    if (i > 0 && config.ns[i] <= config.ns[i - 1])
      throw std::invalid_argument("experiment: n list must be strictly increasing");
  }
  if (config.format != "csv" && config.format != "json")
    throw std::invalid_argument("experiment: format must be csv or json");
  if (config.grid < 9) throw std::invalid_argument("experiment: grid below 9 points");
  if (config.dimension < 1 || config.dimension > 60)
    throw std::invalid_argument("experiment: dimension outside [1, 60]");
  if (config.c && *config.c < 0.0)
    throw std::invalid_argument("experiment: c must be nonnegative");
  if (config.d && *config.d < 0.0)
    throw std::invalid_argument("experiment: d must be nonnegative");

  for (const std::optional<std::string>& text : {config.a, config.an_template, config.b})
    if (text) Expression::parse(*text);
  for (const std::string& text : config.probes) {
    Expression probe = Expression::parse(text);
    if (config.example == "kantorovich2" && !probe_is_quadratic(probe))
      throw std::invalid_argument(
          "experiment: kantorovich2 accepts quadratic probes only, got '" + text + "'");
  }
}

ExperimentConfig config_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("experiment config: ") + err.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("experiment config: top level must be an object");

  ExperimentConfig config;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "example") {
        config.example = value.get<std::string>();
      } else if (key == "n") {
        config.ns = value.get<std::vector<int>>();
      } else if (key == "f") {
        if (value.is_string())
          config.probes = {value.get<std::string>()};
        else
          config.probes = value.get<std::vector<std::string>>();
      } else if (key == "a") {
        config.a = value.get<std::string>();
      } else if (key == "an_template") {
        config.an_template = value.get<std::string>();
      } else if (key == "b") {
        config.b = value.get<std::string>();
      } else if (key == "c") {
        config.c = value.get<double>();
      } else if (key == "d") {
        config.d = value.get<double>();
      } else if (key == "dimension") {
        config.dimension = value.get<int>();
      } else if (key == "grid") {
        config.grid = value.get<std::size_t>();
      } else if (key == "format") {
        config.format = value.get<std::string>();
      } else if (key == "seed") {
        config.seed = value.get<unsigned>();
      } else {
        throw std::invalid_argument("experiment config: unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("experiment config: ") + err.what());
  }
  return config;
}

ExperimentSetup build_setup(const ExperimentConfig& config) {
  validate(config);

  const bool trig = trigonometric_example(config.example);
  const Interval domain = trig ? Interval::circle() : Interval::unit();
  const std::vector<double> t = grid_points(domain, config.grid);

  ExperimentSetup setup;
  setup.probe_names = config.probes.empty() ? default_probes(config.example) : config.probes;
  for (const std::string& text : setup.probe_names) {
    Expression expr = Expression::parse(text);
    expr.validate_on(domain, config.grid);
    setup.probes.push_back(GridFunction::sample(domain, config.grid, expr.function()));
  }

  const DenominatorShift shift =
      config.d ? DenominatorShift::constant(*config.d) : DenominatorShift::n();
  const double c = config.c.value_or(1.0);

  if (config.example == "bernstein") {
    Expression a = parse_or(config.a, "x");
    a.validate_on(domain, config.grid);
    setup.family = std::make_unique<BernsteinFamily>(t, a.function());
  } else if (config.example == "kantorovich1") {
    Expression a = parse_or(config.a, "x");
    a.validate_on(domain, config.grid);
    setup.family = std::make_unique<KantorovichCase1Family>(t, a.function(), c, shift);
  } else if (config.example == "kantorovich2") {
    Expression a = parse_or(config.a, "x");
    a.validate_on(domain, config.grid);
    setup.family = std::make_unique<KantorovichMomentFamily>(t, a.function());
  } else if (config.example == "exp-kantorovich") {
    Expression a = parse_or(config.a, "x");
    a.validate_on(domain, config.grid);
    setup.family = std::make_unique<ExpKantorovichFamily>(t, a.function(), c, shift);
  } else if (config.example == "exp-bernstein") {
    Expression a = parse_or(config.a, "x");
    a.validate_on(domain, config.grid);
    setup.family = std::make_unique<ExpBernsteinFamily>(t, a.function());
  } else if (config.example == "two-weight") {
    Expression a = parse_or(config.a, "1");
    Expression b = parse_or(config.b, "1");
    a.validate_on(domain, config.grid);
    b.validate_on(domain, config.grid);
    setup.family = std::make_unique<TwoWeightFamily>(t, a.function(), b.function());
  } else if (lattice_example(config.example)) {
    Expression y = parse_or(config.a, config.example == "lp-H" ? "2^(-x)" : "1");
    std::vector<double> bounds(config.dimension);
    for (int k = 1; k <= config.dimension; ++k) bounds[k - 1] = y(static_cast<double>(k));
    LpLattice lattice = LpLattice::build(std::move(bounds));
    if (config.example == "lp-H")
      setup.family = std::make_unique<LatticeCoordinateFamily>(std::move(lattice));
    else
      setup.family = std::make_unique<LatticeDyadicFamily>(std::move(lattice));
  } else {
    const char* fallback = config.example == "circulant-w" ? "0" : "x";
    Expression a = parse_or(config.a, fallback);
    a.validate_on(domain, config.grid);
    Expression an = config.an_template ? Expression::parse(*config.an_template) : a;
    an.validate_on(domain, config.grid);
    const WeightedVariant variant = config.example == "circulant-w"
                                        ? WeightedVariant::exponential_weight
                                        : WeightedVariant::shifted_node;
    setup.family = weighted_family(variant, a.function(), an.function(), t);
  }
  return setup;
}

namespace {

void append_rates(const ExperimentConfig& config, std::size_t probe_count,
                  ExperimentResult& result) {
  const std::size_t count = config.ns.size();
  if (count < 3) return;
  auto fit_series = [&](const std::string& label, auto value_at) {
    std::vector<std::pair<int, double>> samples;
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const double v = value_at(i);
      if (!(v > 0.0)) return;  // decay fit needs positive values throughout
      samples.emplace_back(config.ns[i], v);
    }
    result.rates.push_back(
        {config.example, label, static_cast<int>(samples.size()), fit_rate(samples)});
  };

  fit_series("mu", [&](std::size_t i) { return result.rows[i * probe_count].report.mu; });
  for (std::size_t k = 0; k < probe_count; ++k)
    fit_series("observed[" + std::to_string(k) + "]",
               [&](std::size_t i) { return result.rows[i * probe_count + k].report.observed; });
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  ExperimentSetup setup = build_setup(config);
  const WeightedCompositionOperator& limit = setup.family->limit();
  const TestMode mode = setup.family->mode();

  ExperimentResult result;
  result.all_pass = true;
  for (int n : config.ns) {
    for (std::size_t k = 0; k < setup.probes.size(); ++k) {
      BoundRow row{config.example, setup.probe_names[k], {}};
      try {
        row.report = operator_bound(*setup.family, limit, setup.probes[k], n, mode);
      } catch (const std::exception& err) {
        throw std::runtime_error(std::string(err.what()) + " (example " + config.example +
                                 ", n = " + std::to_string(n) + ")");
      }
      result.all_pass = result.all_pass && row.report.pass;
      result.rows.push_back(std::move(row));
    }
  }
  append_rates(config, setup.probes.size(), result);
  return result;
}

std::string render_csv(const ExperimentResult& result, bool with_rows, bool with_rates) {
  std::string out = "example,n,mu,m_const,bound,observed,margin,verdict\n";
  if (with_rows) {
    for (const BoundRow& row : result.rows) {
      const BoundReport& r = row.report;
      out += row.example + ',' + std::to_string(r.n) + ',' + fmt(r.mu) + ',' + fmt(r.m_const) +
             ',' + fmt(r.bound) + ',' + fmt(r.observed) + ',' + fmt(r.margin) + ',' +
             (r.pass ? "pass" : "fail") + '\n';
    }
  }
  if (with_rates) {
    for (const RateRow& row : result.rates) {
      out += row.example + ',' + std::to_string(row.samples) + ',' + fmt(row.fit.exponent) + ',' +
             fmt(row.fit.r_squared) + ',' + fmt(row.fit.intercept) + ",0,0,rate:" + row.series +
             '\n';
    }
  }
  return out;
}

std::string render_json(const ExperimentResult& result, bool with_rows, bool with_rates) {
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  doc["rates"] = nlohmann::ordered_json::array();
  if (with_rows) {
    for (const BoundRow& row : result.rows) {
      const BoundReport& r = row.report;
      doc["rows"].push_back({{"example", row.example},
                             {"n", r.n},
                             {"mu", r.mu},
                             {"m_const", r.m_const},
                             {"bound", r.bound},
                             {"observed", r.observed},
                             {"margin", r.margin},
                             {"verdict", r.pass ? "pass" : "fail"}});
    }
  }
  if (with_rates) {
    for (const RateRow& row : result.rates) {
      doc["rates"].push_back({{"example", row.example},
                              {"series", row.series},
                              {"samples", row.samples},
                              {"exponent", row.fit.exponent},
                              {"r_squared", row.fit.r_squared},
                              {"intercept", row.fit.intercept}});
    }
  }
  return doc.dump(2) + "\n";
}

std::vector<PrecondRow> precond_report(const std::string& symbol, int n) {
  if (n < 1) throw std::invalid_argument("precond: order must be positive");
  Expression expr = Expression::parse(symbol);
  const std::size_t samples = std::max<std::size_t>(4096, 4 * static_cast<std::size_t>(n));
  expr.validate_on(Interval::circle(), samples);
  const GridFunction symbol_grid = GridFunction::sample(Interval::circle(), samples, expr.function());
  const FourierCoefficients coeffs = fourier_coefficients(symbol_grid, n - 1);
  const Eigen::MatrixXcd a = toeplitz_build(coeffs, n);
  const UnitaryFrame frame = UnitaryFrame::of_order(n);
  const Preconditioner p = preconditioner(a, frame);

  std::vector<PrecondRow> rows(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    PrecondRow& row = rows[static_cast<std::size_t>(k)];
    row.x = frame.grid[static_cast<std::size_t>(k)];
    row.eigenvalue = p.eigenvalues[static_cast<std::size_t>(k)];
    row.symbol = expr(row.x);
    row.quadratic_form = quadratic_form(coeffs, n, row.x);
    if (std::abs(row.eigenvalue - row.quadratic_form) > 1e-10)
      throw std::runtime_error("precond: eigenvalue drifted from the frame quadratic form at x = " +
                               fmt(row.x));
  }
  return rows;
}

std::string render_precond_csv(const std::vector<PrecondRow>& rows) {
  std::string out = "x,eigenvalue,symbol,quadratic_form\n";
  for (const PrecondRow& row : rows)
    out += fmt(row.x) + ',' + fmt(row.eigenvalue) + ',' + fmt(row.symbol) + ',' +
           fmt(row.quadratic_form) + '\n';
  return out;
}

std::string render_precond_json(const std::vector<PrecondRow>& rows) {
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const PrecondRow& row : rows)
    doc["rows"].push_back({{"x", row.x},
                           {"eigenvalue", row.eigenvalue},
                           {"symbol", row.symbol},
                           {"quadratic_form", row.quadratic_form}});
  return doc.dump(2) + "\n";
}

}  // namespace korovkin
