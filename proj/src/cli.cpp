#include "edgeworth/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "edgeworth/delta.hpp"
#include "edgeworth/edgeworth.hpp"
#include "edgeworth/errors.hpp"
#include "edgeworth/exact.hpp"
#include "json.hpp"

namespace edgeworth::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kCommands = {"summary", "pdf", "compare", "moment", "mc"};
const std::vector<std::string> kTransforms = {"identity", "arctanh", "basic-fisher"};

bool one_of(const std::string& value, const std::vector<std::string>& options) {
  return std::find(options.begin(), options.end(), value) != options.end();
}

double rho_of(const RunConfig& config) { return config.rho.value(); }

json config_echo(const RunConfig& config) {
  json j = {{"command", config.command},
            {"n", config.n},
            {"transform", config.transform},
            {"gamma3", config.include_gamma3},
            {"gamma4", config.include_gamma4},
            {"grid", config.grid},
            {"clip", config.clip},
            {"reps", config.reps},
            {"seed", config.seed},
            {"format", resolved_format(config)}};
  j["rho"] = config.rho ? json(*config.rho) : json(nullptr);
  if (!config.index.empty()) j["index"] = config.index;
  if (!config.table.empty()) j["table"] = config.table;
  return j;
}

OuterTransform transform_of(const RunConfig& config) {
  const double rho = rho_of(config);
  return config.transform == "arctanh" ? OuterTransform::arctanh(rho)
                                       : OuterTransform::identity(rho);
}

void warn_ignored_gamma_flags(const RunConfig& config, std::ostream& err) {
  if (config.transform == "basic-fisher" && (!config.include_gamma3 || !config.include_gamma4)) {
    err << "warning: --no-gamma3/--no-gamma4 ignored for basic-fisher\n";
  }
}

// Full round-trip precision for CSV cells.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) { out_ << std::setprecision(17); }

  template <typename... Cells>
  void row(const Cells&... cells) {
    bool first = true;
    ((out_ << (first ? "" : ",") << cells, first = false), ...);
    out_ << '\n';
  }

 private:
  std::ostream& out_;
};

std::string half_power_key(int half_power) {
  if (half_power % 2 == 0) return std::to_string(half_power / 2);
  return std::to_string(half_power / 2) + ".5";
}

}  // namespace

std::string resolved_format(const RunConfig& config) {
  if (!config.format.empty()) return config.format;
  return config.command == "pdf" ? "csv" : "json";
}

void validate(const RunConfig& config) {
  if (!one_of(config.command, kCommands)) {
    throw UsageError("unknown command '" + config.command + "'");
  }
  const auto format = resolved_format(config);
  if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
  if (!one_of(config.transform, kTransforms)) {
    throw UsageError("--transform must be identity, arctanh or basic-fisher");
  }
  const bool needs_rho = !(config.command == "moment" && !config.table.empty());
  if (needs_rho && !config.rho) throw UsageError("--rho is required");
  if (config.rho && !(std::abs(*config.rho) < 1.0)) throw UsageError("--rho must satisfy |rho| < 1");
  if (config.n < 5) throw UsageError("--n must be at least 5");
  if (config.grid < 1001) throw UsageError("--grid must be at least 1001");
  if (!(config.clip > 0.0 && config.clip <= 1e-4)) throw UsageError("--clip must be in (0, 1e-4]");
  if (config.reps < 1) throw UsageError("--reps must be at least 1");
  if (config.command == "moment") {
    if (config.index.empty()) throw UsageError("moment: --index is required");
    if (std::any_of(config.index.begin(), config.index.end(), [](int e) { return e < 0; })) {
      throw UsageError("moment: --index entries must be non-negative");
    }
    int order = 0;
    for (int e : config.index) order += e;
    if (order > kMaxMomentOrder) throw UsageError("moment: index order must not exceed 6");
  }
}

std::function<double(double)> model_pdf(const RunConfig& config) {
  const double rho = rho_of(config);
  const int n = config.n;
  if (config.transform == "basic-fisher") {
    return [n, rho](double r) { return basic_fisher_pdf_r(n, rho, r); };
  }
  const auto transform = transform_of(config);
  const auto model = build_model(pearson_summary(transform, rho), n, transform,
                                 config.include_gamma3, config.include_gamma4);
  return [model](double r) { return approx_pdf_r(model, r); };
}

MomentTable read_moment_table(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("moment table: ") + e.what());
  }
  try {
    const auto dimension = j.at("dimension").get<std::size_t>();
    const int max_order = j.value("max_order", kMaxMomentOrder);
    MomentTable table(dimension, max_order);
    for (const auto& entry : j.at("moments")) {
      table.set(MultiIndex(entry.at("index").get<std::vector<int>>()),
                entry.at("value").get<double>());
    }
    return table;
  } catch (const json::exception& e) {
    throw UsageError(std::string("moment table: ") + e.what());
  }
}

void cmd_summary(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const double rho = rho_of(config);
  const double n = config.n;
  json j = {{"config", config_echo(config)}};

  if (config.transform == "basic-fisher") {
    warn_ignored_gamma_flags(config, err);
    j.update({{"m0", std::atanh(rho)},
              {"m1", 0.0},
              {"v1", nullptr},
              {"v2", nullptr},
              {"g3coef", 0.0},
              {"g4coef", 0.0},
              {"m", std::atanh(rho)},
              {"V", 1.0 / (n - 3.0)},
              {"Gamma3", 0.0},
              {"Gamma4", 0.0}});
  } else {
    const auto transform = transform_of(config);
    const auto stats = pearson_summary(transform, rho);
    const auto model =
        build_model(stats, config.n, transform, config.include_gamma3, config.include_gamma4);
    j.update({{"m0", stats.m0},
              {"m1", stats.m1},
              {"v1", stats.v1},
              {"v2", stats.v2},
              {"g3coef", stats.g3coef},
              {"g4coef", stats.g4coef},
              {"m", model.m},
              {"V", model.V},
              {"Gamma3", model.gamma3},
              {"Gamma4", model.gamma4}});
  }

  if (resolved_format(config) == "json") {
    out << j.dump(2) << '\n';
    return;
  }
  CsvWriter csv(out);
  csv.row("m0", "m1", "v1", "v2", "g3coef", "g4coef", "m", "V", "Gamma3", "Gamma4");
  auto cell = [&j](const char* key) {
    return j[key].is_null() ? std::string() : (std::ostringstream() << std::setprecision(17)
                                                                    << j[key].get<double>())
                                                  .str();
  };
  csv.row(cell("m0"), cell("m1"), cell("v1"), cell("v2"), cell("g3coef"), cell("g4coef"),
          cell("m"), cell("V"), cell("Gamma3"), cell("Gamma4"));
}

void cmd_pdf(const RunConfig& config, std::ostream& out, std::ostream& err) {
  warn_ignored_gamma_flags(config, err);
  const double rho = rho_of(config);
  const auto approx = model_pdf(config);
  const auto grid = uniform_grid(config.grid, config.clip);

  std::vector<double> approx_values, exact_values;
  approx_values.reserve(grid.size());
  exact_values.reserve(grid.size());
  for (double r : grid) {
    approx_values.push_back(approx(r));
    exact_values.push_back(hotelling_pdf_r(config.n, rho, r));
  }

  if (resolved_format(config) == "json") {
    json j = {{"config", config_echo(config)},
              {"r", grid},
              {"approx_pdf", approx_values},
              {"exact_pdf", exact_values}};
    out << j.dump() << '\n';
    return;
  }
  CsvWriter csv(out);
  csv.row("r", "approx_pdf", "exact_pdf");
  for (std::size_t i = 0; i < grid.size(); ++i) csv.row(grid[i], approx_values[i], exact_values[i]);
}

void cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
  warn_ignored_gamma_flags(config, err);
  const double rho = rho_of(config);
  const auto approx = cdf_on_grid(model_pdf(config), config.grid, config.clip);
  const auto exact = cdf_on_grid([&](double r) { return hotelling_pdf_r(config.n, rho, r); },
                                 config.grid, config.clip);
  const auto result = max_interval_error(approx, exact);

  if (resolved_format(config) == "json") {
    json j = {{"config", config_echo(config)},
              {"model", config.transform},
              {"max_interval_error", result.error},
              {"a", result.a},
              {"b", result.b}};
    out << j.dump(2) << '\n';
    return;
  }
  CsvWriter csv(out);
  csv.row("model", "max_interval_error", "a", "b");
  csv.row(config.transform, result.error, result.a, result.b);
}

void cmd_moment(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  MomentTable moments = [&] {
    if (config.table.empty()) return pearson_central_moments(rho_of(config));
    std::ifstream in(config.table);
    if (!in) throw UsageError("moment: cannot read table '" + config.table + "'");
    std::stringstream text;
    text << in.rdbuf();
    return read_moment_table(text.str());
  }();
  const MultiIndex index(config.index);
  if (index.dimension() != moments.dimension()) {
    throw UsageError("moment: --index has " + std::to_string(index.dimension()) +
                     " entries, table dimension is " + std::to_string(moments.dimension()));
  }
  if (index.order() > moments.max_order()) {
    throw UsageError("moment: index order exceeds the table's max_order");
  }
  const auto poly = sample_mean_moment(cumulants_from_moments(moments), index);

  if (resolved_format(config) == "json") {
    json coefficients = json::object();
    for (const auto& [p, c] : poly.terms()) coefficients[half_power_key(p)] = c;
    json j = {{"config", config_echo(config)},
              {"index", config.index},
              {"polynomial", coefficients}};
    out << j.dump(2) << '\n';
    return;
  }
  CsvWriter csv(out);
  csv.row("power_of_inv_n", "coefficient");
  for (const auto& [p, c] : poly.terms()) csv.row(half_power_key(p), c);
}

void cmd_mc(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  const double rho = rho_of(config);
  auto sample = mc_sample_r({config.n, rho, config.reps, config.seed});
  std::sort(sample.begin(), sample.end());
  const auto exact = cdf_on_grid([&](double r) { return hotelling_pdf_r(config.n, rho, r); },
                                 config.grid, config.clip);
  const double ks = ks_distance(sample, exact);

  if (resolved_format(config) == "json") {
    json j = {{"config", config_echo(config)},
              {"ks_distance", ks},
              {"replicates", config.reps},
              {"seed", config.seed}};
    out << j.dump(2) << '\n';
    return;
  }
  CsvWriter csv(out);
  csv.row("ks_distance", "replicates", "seed");
  csv.row(ks, config.reps, config.seed);
}

void run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  validate(config);
  if (config.command == "summary") return cmd_summary(config, out, err);
  if (config.command == "pdf") return cmd_pdf(config, out, err);
  if (config.command == "compare") return cmd_compare(config, out, err);
  if (config.command == "moment") return cmd_moment(config, out, err);
  cmd_mc(config, out, err);
}

}  // namespace edgeworth::cli
