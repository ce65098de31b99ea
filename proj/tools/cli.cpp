#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "speedrobust/bricks.hpp"
#include "speedrobust/error.hpp"
#include "speedrobust/pebbles.hpp"
#include "speedrobust/sand.hpp"
#include "speedrobust/second_stage.hpp"
#include "speedrobust/verify.hpp"

namespace speedrobust::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Row-oriented data for subcommands whose CSV form is a real table.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  Json doc;
  std::optional<Table> table;
  int status = kExitOk;
};

// ---------------------------------------------------------------- parsing

Rational parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(flag + ": expected an integer or p/q, got '" + text + "'");
  }
}

std::string read_file(const std::string& flag, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(flag + ": cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Inline "a,b,c" or "@file" holding a JSON array of integers or rational
// strings.
std::vector<Rational> parse_list(const std::string& flag, const std::string& text) {
  std::vector<Rational> values;
  if (!text.empty() && text.front() == '@') {
    const std::string path = text.substr(1);
    Json doc;
    try {
      doc = Json::parse(read_file(flag, path));
    } catch (const Json::parse_error&) {
      throw UsageError(flag + ": '" + path + "' is not valid JSON");
    }
    if (!doc.is_array()) throw UsageError(flag + ": '" + path + "' must hold a JSON array");
    for (const auto& item : doc) {
      if (item.is_number_integer()) {
        values.emplace_back(item.get<std::int64_t>());
      } else if (item.is_string()) {
        values.push_back(parse_rational(flag, item.get<std::string>()));
      } else {
        throw UsageError(flag + ": array entries must be integers or \"p/q\" strings");
      }
    }
    return values;
  }
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError(flag + ": empty list entry");
    values.push_back(parse_rational(flag, item.substr(first, last - first + 1)));
  }
  if (values.empty()) throw UsageError(flag + ": list is empty");
  return values;
}

std::int64_t require(const std::optional<std::int64_t>& value, const std::string& flag) {
  if (!value) throw UsageError(flag + " is required");
  return *value;
}

// ---------------------------------------------------------------- output

Json rationals(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

Json big_integers(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

Json report_doc(const VerificationReport& report) { return Json::parse(report.to_json()); }

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "";
  return value.dump();
}

void write_csv(const Output& output, std::ostream& out) {
  if (output.table) {
    for (std::size_t i = 0; i < output.table->columns.size(); ++i) {
      out << (i ? "," : "") << csv_field(output.table->columns[i]);
    }
    out << '\n';
    for (const auto& row : output.table->rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << '\n';
    }
    return;
  }
  // Everything else: one row per leaf, keyed by JSON pointer, in document
  // order.
  out << "key,value\n";
  std::function<void(const std::string&, const Json&)> walk = [&](const std::string& path,
                                                                   const Json& node) {
    if (node.is_object() && !node.empty()) {
      for (const auto& [key, child] : node.items()) walk(path + "/" + key, child);
    } else if (node.is_array() && !node.empty()) {
      for (std::size_t i = 0; i < node.size(); ++i) walk(path + "/" + std::to_string(i), node[i]);
    } else {
      out << csv_field(path) << ',' << csv_field(scalar_text(node)) << '\n';
    }
  };
  walk("", output.doc);
}

Output table_output(const std::string& name, Table table) {
  Output output;
  output.doc["table"] = name;
  output.doc["columns"] = table.columns;
  output.doc["rows"] = table.rows;
  output.table = std::move(table);
  return output;
}

// ---------------------------------------------------------------- options

struct GlobalOptions {
  std::string format = "json";
  unsigned workers = 0;
};

struct BagsOptions {
  std::string mode = "auto";
  std::optional<std::int64_t> n, m, b;
  std::string rho;
  std::string total = "1";
  std::string jobs;
  bool trim = false;
};

struct AssignOptions {
  std::string algo = "greedy";
  std::string bags, speeds, rho;
};

struct ProbeOptions {
  std::optional<std::int64_t> m, b;
  std::string bags;
  bool certificate = false;
};

struct TablesOptions {
  std::string which;
  std::int64_t z_max = 60;
  std::int64_t lambda_max = 60;
  std::string rho = "8/5";
};

struct RangeOptions {
  std::int64_t m_max = 144;
  std::int64_t lambda_max = 60;
  std::string rho = "8/5";
  bool progress = false;
};

struct RobustOptions {
  std::optional<std::int64_t> n, m;
  std::uint64_t exhaustive_limit = RobustnessOptions{}.exhaustive_limit;
  std::uint64_t samples = RobustnessOptions{}.samples;
  std::uint64_t seed = 0;
};

struct SurplusOptions {
  std::string lambda;
  std::string rho = "8/5";
};

// ---------------------------------------------------------------- commands

Output cmd_bags(const BagsOptions& o) {
  Output output;
  Json& doc = output.doc;
  doc["mode"] = o.mode;
  if (o.mode == "sand") {
    const std::int64_t m = require(o.m, "--m");
    const std::int64_t b = require(o.b, "--b");
    const Rational total = parse_rational("--total", o.total);
    const std::int64_t reduced = effective_machines(m, b);
    const SandSequence seq = SandSequence::make(reduced, b);
    doc["m"] = m;
    doc["b"] = b;
    doc["effective_m"] = reduced;
    doc["rho"] = rho_bar(reduced, b).to_string();
    doc["total"] = total.to_string();
    doc["t"] = big_integers(seq.t);
    doc["U"] = seq.upper.str();
    doc["L"] = seq.lower.str();
    doc["bags"] = rationals(sand_bags(m, b, total).sizes());
  } else if (o.mode == "pebbles") {
    if (o.jobs.empty()) throw UsageError("--jobs is required for --mode pebbles");
    const std::int64_t m = require(o.m, "--m");
    const std::int64_t b = require(o.b, "--b");
    const Instance inst(parse_list("--jobs", o.jobs), m, b);
    const Rational q = pebble_q(inst);
    const Rational rho = o.rho.empty() ? rho_bar(m, b) + q : parse_rational("--rho", o.rho);
    const PebblesResult result = pebbles_bags(inst, rho);
    doc["m"] = m;
    doc["b"] = b;
    doc["q"] = q.to_string();
    doc["rho"] = rho.to_string();
    doc["jobs"] = rationals(inst.job_sizes());
    doc["packed_all"] = result.packed_all;
    doc["bags"] = rationals(result.bag_sizes);
    Json placement = Json::array();
    for (const auto& bag : result.bag_of_job) {
      placement.push_back(bag ? Json(*bag) : Json(nullptr));
    }
    doc["bag_of_job"] = placement;
    if (!result.packed_all) output.status = kExitFailure;
  } else if (o.mode == "bricks") {
    const std::int64_t n = require(o.n, "--n");
    const std::int64_t m = require(o.m, "--m");
    const std::int64_t b = o.b.value_or(m);
    const Rational rho = o.rho.empty() ? bricks_rho() : parse_rational("--rho", o.rho);
    BrickSolution sol = bricks_bags(n, m, b, rho);
    const bool trimmed = o.trim && sol.successful;
    if (trimmed) sol = trim_to_n(sol, n);
    doc["n"] = n;
    doc["m"] = m;
    doc["b"] = b;
    doc["rho"] = rho.to_string();
    doc["sizes"] = sol.bag_sizes;
    doc["costs"] = sol.bag_costs;
    doc["total"] = sol.total_size;
    doc["successful"] = sol.successful;
    doc["trimmed"] = trimmed;
    if (!sol.successful) output.status = kExitFailure;
  } else {
    const std::int64_t n = require(o.n, "--n");
    const std::int64_t m = require(o.m, "--m");
    const std::int64_t b = o.b.value_or(m);
    const RobustBags result = robust_bags(n, m, b);
    doc["n"] = n;
    doc["m"] = m;
    doc["b"] = b;
    doc["branch"] = result.branch == RobustBranch::kBricks ? "bricks" : "pebbles";
    doc["rho"] = result.rho.to_string();
    doc["bags"] = rationals(result.bags.sizes());
  }
  return output;
}

Json trace_doc(const AssignmentRun& run) {
  Json steps = Json::array();
  for (const auto& step : run.trace) {
    Json s;
    s["bag"] = step.bag;
    s["machine"] = step.machine;
    s["before"] = step.before.to_string();
    s["after"] = step.after.to_string();
    steps.push_back(std::move(s));
  }
  return steps;
}

Output cmd_assign(const AssignOptions& o) {
  if (o.bags.empty()) throw UsageError("--bags is required");
  if (o.speeds.empty()) throw UsageError("--speeds is required");
  Output output;
  Json& doc = output.doc;
  const BagProfile bags(parse_list("--bags", o.bags));
  const SpeedProfile speeds(parse_list("--speeds", o.speeds));
  AssignmentRun run;
  Rational rho;
  if (o.algo == "integral") {
    rho = o.rho.empty() ? bricks_rho() : parse_rational("--rho", o.rho);
    std::vector<std::int64_t> int_bags, int_speeds;
    for (const auto& v : bags.sizes()) {
      if (!v.is_integer()) throw UsageError("--bags: integral assignment needs integer sizes");
      int_bags.push_back(to_int64(v.numerator()));
    }
    for (const auto& v : speeds.speeds()) {
      if (!v.is_integer()) throw UsageError("--speeds: integral assignment needs integer speeds");
      int_speeds.push_back(to_int64(v.numerator()));
    }
    run = integral_assignment(int_bags, int_speeds, rho);
  } else {
    if (o.rho.empty()) throw UsageError("--rho is required for --algo greedy");
    rho = parse_rational("--rho", o.rho);
    run = greedy_assignment(bags, speeds, rho);
  }
  doc["algo"] = o.algo;
  doc["rho"] = rho.to_string();
  doc["bags"] = rationals(bags.sizes());
  doc["speeds"] = rationals(speeds.speeds());
  doc["success"] = run.success;
  if (run.success) {
    const auto where = run.assignment.machine_of_bag();
    doc["assignment"] = std::vector<std::size_t>(where.begin(), where.end());
    doc["makespan"] = makespan(run.assignment, bags, speeds).to_string();
  } else {
    doc["failed_bag"] = *run.failed_bag;
    output.status = kExitFailure;
  }
  doc["remaining"] = rationals(run.remaining);
  doc["trace"] = trace_doc(run);
  return output;
}

Output cmd_probe(const ProbeOptions& o) {
  const std::int64_t m = require(o.m, "--m");
  const std::int64_t b = require(o.b, "--b");
  Output output;
  Json& doc = output.doc;
  const SandSequence seq = SandSequence::make(m, b);
  const Rational bound = rho_bar(m, b);
  const BagProfile bags = o.bags.empty() ? sand_bags(m, b, Rational(seq.upper))
                                         : BagProfile(parse_list("--bags", o.bags));
  doc["m"] = m;
  doc["b"] = b;
  doc["rho_bar"] = bound.to_string();
  doc["U"] = seq.upper.str();
  doc["L"] = seq.lower.str();
  doc["t"] = big_integers(seq.t);
  Json configs = Json::array();
  for (const auto& c : adversary_configs(m, b)) configs.push_back(rationals(c.speeds()));
  doc["configs"] = configs;
  doc["bags"] = rationals(bags.sizes());
  const Rational probe = lower_bound_probe(m, b, bags);
  doc["probe"] = probe.to_string();
  doc["probe_at_least_rho_bar"] = probe >= bound;
  if (o.certificate) {
    const LowerBoundCertificate cert = lower_bound_certificate(m, b);
    Json c;
    c["profiles"] = cert.profiles;
    c["minimum"] = cert.minimum.to_string();
    c["best_profile"] = rationals(cert.best_profile.sizes());
    c["minimum_at_least_rho_bar"] = cert.minimum >= bound;
    doc["certificate"] = c;
    if (cert.minimum < bound) output.status = kExitFailure;
  }
  return output;
}

Output cmd_tables(const TablesOptions& o) {
  const Rational rho = parse_rational("--rho", o.rho);
  Table table;
  if (o.which == "f") {
    if (o.z_max < 2) throw UsageError("--zmax must be >= 2");
    table.columns = {"z", "f", "approx"};
    for (std::int64_t z = 2; z <= o.z_max; ++z) {
      const Rational f = transformation_factor(z, rho);
      table.rows.push_back({std::to_string(z), f.to_string(), f.to_decimal(5)});
    }
  } else if (o.which == "surplus-int") {
    if (o.lambda_max < 1) throw UsageError("--lambda-max must be >= 1");
    table.columns = {"lambda", "surplus", "approx"};
    for (std::int64_t k = 1; k <= o.lambda_max; ++k) {
      const Rational s = normalized_surplus(Rational(k), rho);
      table.rows.push_back({std::to_string(k), s.to_string(), s.to_decimal(3)});
    }
  } else {
    if (o.lambda_max < 1) throw UsageError("--lambda-max must be >= 1");
    table.columns = {"bag_cost", "lambda", "lambda_approx", "surplus", "surplus_approx"};
    for (const auto& p : cost_exit_points(Rational(o.lambda_max), rho)) {
      table.rows.push_back({std::to_string(*p.dropped_cost), p.lambda.to_string(),
                            p.lambda.to_decimal(3), p.surplus.to_string(), p.surplus.to_decimal(3)});
    }
  }
  return table_output(o.which, std::move(table));
}

ProgressFn progress_printer(std::ostream& err, bool enabled) {
  if (!enabled) return {};
  auto mutex = std::make_shared<std::mutex>();
  return [&err, mutex](std::uint64_t done, std::uint64_t total) {
    std::lock_guard lock(*mutex);
    err << "progress " << done << "/" << total << '\n';
  };
}

Output cmd_verify_range(const RangeOptions& o, const GlobalOptions& g, std::ostream& err) {
  if (o.m_max < 1 || o.lambda_max < 1) throw UsageError("--m-max and --lambda-max must be >= 1");
  const Rational rho = parse_rational("--rho", o.rho);
  const VerificationReport report = verify_bricks_success_range(
      o.m_max, o.lambda_max, rho, CampaignOptions{g.workers, progress_printer(err, o.progress)});
  return {report_doc(report), std::nullopt, report.passed() ? kExitOk : kExitFailure};
}

Output cmd_verify_robust(const RobustOptions& o) {
  RobustnessOptions options;
  options.exhaustive_limit = o.exhaustive_limit;
  options.samples = o.samples;
  options.seed = o.seed;
  const VerificationReport report =
      verify_bricks_robustness(require(o.n, "--n"), require(o.m, "--m"), options);
  return {report_doc(report), std::nullopt, report.passed() ? kExitOk : kExitFailure};
}

Output cmd_surplus(const SurplusOptions& o) {
  if (o.lambda.empty()) throw UsageError("--lambda is required");
  const Rational lambda = parse_rational("--lambda", o.lambda);
  const Rational rho = parse_rational("--rho", o.rho);
  Output output;
  Json& doc = output.doc;
  const Rational surplus = normalized_surplus(lambda, rho);
  doc["lambda"] = lambda.to_string();
  doc["rho"] = rho.to_string();
  doc["surplus"] = surplus.to_string();
  doc["surplus_approx"] = surplus.to_decimal(3);
  // Bags per machine at each cost, i.e. the fractional solution for m = 1.
  Json per_cost = Json::array();
  const FractionalSolution sol = bricks_fract(lambda, Rational(1), Rational(1));
  for (auto it = sol.counts().rbegin(); it != sol.counts().rend(); ++it) {
    Json entry;
    entry["cost"] = it->first;
    entry["bags_per_machine"] = it->second.to_string();
    per_cost.push_back(std::move(entry));
  }
  doc["solution"] = per_cost;
  return output;
}

int exit_code_for(const Error& e) {
  return e.code() == ErrorCode::kInternalFailure ? kExitFailure : kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Speed-robust scheduling: bag construction, assignment and verification",
               "speedrobust"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--workers", global.workers,
                 "Worker threads for campaigns (0: SPEEDROBUST_WORKERS or all cores)");

  BagsOptions bags;
  auto* bags_cmd = app.add_subcommand("bags", "Build first-stage bags");
  bags_cmd->add_option("--mode", bags.mode, "sand, pebbles, bricks or auto")
      ->check(CLI::IsMember({"sand", "pebbles", "bricks", "auto"}));
  bags_cmd->add_option("--n", bags.n, "Number of unit jobs");
  bags_cmd->add_option("--m", bags.m, "Number of machines");
  bags_cmd->add_option("--b", bags.b, "Number of bags");
  bags_cmd->add_option("--rho", bags.rho, "Robustness factor (p/q)");
  bags_cmd->add_option("--total", bags.total, "Total size P for sand");
  bags_cmd->add_option("--jobs", bags.jobs, "Job sizes: a,b,c or @file.json");
  bags_cmd->add_flag("--trim", bags.trim, "Trim bricks bags to sum exactly n");

  AssignOptions assign;
  auto* assign_cmd = app.add_subcommand("assign", "Second-stage assignment of bags to machines");
  assign_cmd->add_option("--algo", assign.algo, "greedy or integral")
      ->check(CLI::IsMember({"greedy", "integral"}));
  assign_cmd->add_option("--bags", assign.bags, "Bag sizes: a,b,c or @file.json");
  assign_cmd->add_option("--speeds", assign.speeds, "Machine speeds: a,b,c or @file.json");
  assign_cmd->add_option("--rho", assign.rho, "Robustness factor (p/q)");

  ProbeOptions probe;
  auto* probe_cmd = app.add_subcommand("probe", "Evaluate bags against the adversary configurations");
  probe_cmd->add_option("--m", probe.m, "Number of machines");
  probe_cmd->add_option("--b", probe.b, "Number of bags");
  probe_cmd->add_option("--bags", probe.bags, "Bag sizes summing to m^b (default: sand bags)");
  probe_cmd->add_flag("--certificate", probe.certificate,
                      "Also minimize the probe over all integer profiles");

  TablesOptions tables;
  auto* tables_cmd = app.add_subcommand("tables", "Emit the f(z) and surplus tables");
  tables_cmd->add_option("--which", tables.which, "f, surplus-int or surplus-break")
      ->required()
      ->check(CLI::IsMember({"f", "surplus-int", "surplus-break"}));
  tables_cmd->add_option("--zmax", tables.z_max, "Largest z for the f table");
  tables_cmd->add_option("--lambda-max", tables.lambda_max, "Largest lambda for surplus tables");
  tables_cmd->add_option("--rho", tables.rho, "Robustness factor (p/q)");

  RangeOptions range;
  auto* range_cmd = app.add_subcommand("verify-range", "Check bricks bag totals over an (n, m) grid");
  range_cmd->add_option("--m-max", range.m_max, "Largest machine count");
  range_cmd->add_option("--lambda-max", range.lambda_max, "Largest n / m");
  range_cmd->add_option("--rho", range.rho, "Robustness factor (p/q)");
  range_cmd->add_flag("--progress", range.progress, "Report progress on standard error");

  RobustOptions robust;
  auto* robust_cmd =
      app.add_subcommand("verify-robust", "Check bricks end to end against integral speeds");
  robust_cmd->add_option("--n", robust.n, "Number of unit jobs");
  robust_cmd->add_option("--m", robust.m, "Number of machines");
  robust_cmd->add_option("--exhaustive-limit", robust.exhaustive_limit,
                         "Enumerate all profiles up to this many");
  robust_cmd->add_option("--samples", robust.samples, "Profiles to sample beyond the limit");
  robust_cmd->add_option("--seed", robust.seed, "Sampling seed");

  SurplusOptions surplus;
  auto* surplus_cmd = app.add_subcommand("surplus", "Normalized brick surplus at lambda = n / m");
  surplus_cmd->add_option("--lambda", surplus.lambda, "lambda (p/q)");
  surplus_cmd->add_option("--rho", surplus.rho, "Robustness factor (p/q)");

  std::vector<const char*> argv{"speedrobust"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    Output output;
    if (bags_cmd->parsed()) {
      output = cmd_bags(bags);
    } else if (assign_cmd->parsed()) {
      output = cmd_assign(assign);
    } else if (probe_cmd->parsed()) {
      output = cmd_probe(probe);
    } else if (tables_cmd->parsed()) {
      output = cmd_tables(tables);
    } else if (range_cmd->parsed()) {
      output = cmd_verify_range(range, global, err);
    } else if (robust_cmd->parsed()) {
      output = cmd_verify_robust(robust);
    } else {
      output = cmd_surplus(surplus);
    }
    if (global.format == "csv") {
      write_csv(output, out);
    } else {
      out << output.doc.dump(2) << '\n';
    }
    return output.status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace speedrobust::cli
