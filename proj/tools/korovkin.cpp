// Command line front end: verify runs bound sweeps, rates fits decay
// exponents only, precond prints circulant projection spectra.
// Exit codes: 0 all checks hold, 1 a bound verdict failed, 2 usage or
// evaluation error.
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "korovkin/experiment.hpp"

namespace {

struct RunOptions {
  std::string config_path;
  std::optional<std::string> example;
  std::optional<std::string> n_text;
  std::vector<std::string> probes;
  std::optional<std::string> a;
  std::optional<std::string> an_template;
  std::optional<std::string> b;
  std::optional<double> c;
  std::optional<double> d;
  std::optional<int> dimension;
  std::optional<std::size_t> grid;
  std::optional<std::string> format;
  std::optional<unsigned> seed;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (token.empty() || used != token.size())
      throw std::invalid_argument("--n expects comma separated integers, got '" + text + "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void add_run_options(CLI::App* sub, RunOptions& opt) {
  sub->add_option("--config", opt.config_path, "JSON config file; explicit flags override it");
  sub->add_option("--example", opt.example, "family id (bernstein, kantorovich1, ...)");
  sub->add_option("--n", opt.n_text, "comma separated operator indices, e.g. 8,16,32");
  sub->add_option("--f", opt.probes, "probe expression in x; repeat for several probes");
  sub->add_option("--a", opt.a, "main parameter expression");
  sub->add_option("--an-template", opt.an_template, "instance parameter used at every n");
  sub->add_option("--b", opt.b, "second two-weight parameter expression");
  sub->add_option("--c", opt.c, "averaging numerator scale");
  sub->add_option("--d", opt.d, "constant denominator shift (defaults to n)");
  sub->add_option("--dimension", opt.dimension, "lattice depth for lp-H / lp-G");
  sub->add_option("--grid", opt.grid, "probe and T-grid resolution");
  sub->add_option("--format", opt.format, "csv or json");
  sub->add_option("--seed", opt.seed, "accepted for reproducibility plumbing");
}

korovkin::ExperimentConfig assemble(const RunOptions& opt) {
  korovkin::ExperimentConfig config;
  if (!opt.config_path.empty()) config = korovkin::config_from_json(slurp(opt.config_path));
  if (opt.example) config.example = *opt.example;
  if (opt.n_text) config.ns = parse_n_list(*opt.n_text);
  if (!opt.probes.empty()) config.probes = opt.probes;
  if (opt.a) config.a = *opt.a;
  if (opt.an_template) config.an_template = *opt.an_template;
  if (opt.b) config.b = *opt.b;
  if (opt.c) config.c = *opt.c;
  if (opt.d) config.d = *opt.d;
  if (opt.dimension) config.dimension = *opt.dimension;
  if (opt.grid) config.grid = *opt.grid;
  if (opt.format) config.format = *opt.format;
  if (opt.seed) config.seed = *opt.seed;
  return config;
}

int run_sweep(const RunOptions& opt, bool with_rows) {
  const korovkin::ExperimentConfig config = assemble(opt);
  const korovkin::ExperimentResult result = korovkin::run_experiment(config);
  const std::string out = config.format == "json"
                              ? korovkin::render_json(result, with_rows, true)
                              : korovkin::render_csv(result, with_rows, true);
  std::fputs(out.c_str(), stdout);
  return result.all_pass ? 0 : 1;
}

int run_precond(const std::string& symbol, int n, const std::string& format) {
  if (format != "csv" && format != "json")
    throw std::invalid_argument("precond: format must be csv or json");
  const std::vector<korovkin::PrecondRow> rows = korovkin::precond_report(symbol, n);
  const std::string out =
      format == "json" ? korovkin::render_precond_json(rows) : korovkin::render_precond_csv(rows);
  std::fputs(out.c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positive operator bound laboratory"};
  app.require_subcommand(1);

  RunOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "run bound sweeps and print every row");
  add_run_options(verify, verify_opt);

  RunOptions rates_opt;
  CLI::App* rates = app.add_subcommand("rates", "run the sweep but print only decay fits");
  add_run_options(rates, rates_opt);

  std::string symbol;
  int order = 0;
  std::string precond_format = "csv";
  CLI::App* precond = app.add_subcommand("precond", "circulant projection spectrum of a symbol");
  precond->add_option("--symbol", symbol, "periodic symbol expression in x")->required();
  precond->add_option("--n", order, "matrix order")->required();
  precond->add_option("--format", precond_format, "csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  try {
    if (verify->parsed()) return run_sweep(verify_opt, true);
    if (rates->parsed()) return run_sweep(rates_opt, false);
    return run_precond(symbol, order, precond_format);
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 2;
  }
}
