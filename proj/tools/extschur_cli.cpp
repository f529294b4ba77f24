// extschur: Ext dimensions between Schur-functor simple modules.
//
// Exit codes: 0 success, 1 oracle disagreement or failed verification,
// 2 usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "extschur/ext.hpp"
#include "extschur/extension.hpp"
#include "extschur/partition.hpp"
#include "extschur/polyfunctor.hpp"
#include "extschur/report.hpp"

namespace {

using namespace extschur;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Partition partition_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_partition(text);
  } catch (const std::exception& e) {
    throw UsageError("invalid partition for " + flag + ": '" + text + "' (" + e.what() + ")");
  }
}

OutputFormat format_arg(const std::string& text) {
  try {
    return parse_format(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--format: ") + e.what());
  }
}

std::string csv_quote(const Partition& p) { return "\"" + p.str() + "\""; }

std::vector<std::string> method_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    for (auto& ch : item)
      if (ch == '-') ch = '_';
    if (item.empty() || item == "closed") continue;
    if (!is_oracle_name(item))
      throw UsageError("--methods: unknown method '" + item +
                       "' (expected closed, catlie, ub-char, ub-symmetrizer, solver)");
    out.push_back(item);
  }
  return out;
}

int jobs_from_env() {
  const char* env = std::getenv("EXTSCHUR_JOBS");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const int jobs = std::stoi(env, &used);
    if (used == std::string(env).size() && jobs >= 0) return jobs;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("EXTSCHUR_JOBS must be a non-negative integer, got '") + env +
                   "'");
}

int run_lr(const std::string& lambda_s, const std::string& rho_s, const std::string& nu_s,
           const std::string& format_s) {
  const Partition lambda = partition_arg("--lambda", lambda_s);
  const Partition rho = partition_arg("--rho", rho_s);
  const Partition nu = partition_arg("--nu", nu_s);
  const OutputFormat format = format_arg(format_s);
  const auto value = lr_coefficient(lambda, rho, nu);
  switch (format) {
    case OutputFormat::json:
      std::cout << Json{{"lambda", lambda.parts()},
                        {"rho", rho.parts()},
                        {"nu", nu.parts()},
                        {"value", value}}
                       .dump()
                << "\n";
      break;
    case OutputFormat::csv:
      std::cout << "lambda,rho,nu,value\n"
                << csv_quote(lambda) << "," << csv_quote(rho) << "," << csv_quote(nu) << ","
                << value << "\n";
      break;
    case OutputFormat::markdown:
      std::cout << "| lambda | rho | nu | value |\n|---|---|---|---:|\n| (" << lambda.str()
                << ") | (" << rho.str() << ") | (" << nu.str() << ") | " << value << " |\n";
      break;
  }
  return kExitOk;
}

int run_ext(const std::string& lambda_s, const std::string& mu_s, const std::string& methods_s,
            const std::string& format_s) {
  const ExtQuery q{partition_arg("--lambda", lambda_s), partition_arg("--mu", mu_s)};
  const auto methods = method_list(methods_s);
  const OutputFormat format = format_arg(format_s);
  const ExtReport report = evaluate_query(q, methods);
  std::cout << render_reports({report}, format, methods);
  return report.agree ? kExitOk : kExitDisagree;
}

int run_table(int max_size, const std::string& format_s, const std::string& out_path,
              int jobs) {
  if (max_size < 0) throw UsageError("--max must be non-negative");
  const OutputFormat format = format_arg(format_s);
  if (jobs < 0) throw UsageError("--jobs must be non-negative");
  if (jobs == 0) jobs = jobs_from_env();

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write to '" + out_path + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  std::cerr << "table: all pairs up to size " << max_size << "\n";
  const auto reports = verify_range(max_size, jobs);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::size_t disagreements = 0;
  for (const auto& r : reports)
    if (!r.agree) ++disagreements;
  std::cerr << "table: " << reports.size() << " pairs in " << elapsed.count() << " s, "
            << disagreements << " disagreement(s)\n";

  const std::string text = render_reports(reports, format, table_columns());
  if (file.is_open()) {
    file << text;
    file.close();
    if (!file) throw UsageError("failed writing '" + out_path + "'");
  } else {
    std::cout << text;
  }
  return disagreements == 0 ? kExitOk : kExitDisagree;
}

int run_solve(const std::string& family_s, int d, int target, const std::string& format_s) {
  FunctorFamily family;
  if (family_s == "sym") {
    family = FunctorFamily::symmetric;
  } else if (family_s == "ext") {
    family = FunctorFamily::exterior;
  } else {
    throw UsageError("--family must be sym or ext, got '" + family_s + "'");
  }
  if (d < 0 || target < 0) throw UsageError("--d and --target must be non-negative");
  const OutputFormat format = format_arg(format_s);
  const FunctorKind source{family, d};
  const FunctorKind goal{family, target};
  const KernelReport k = solve_casimir_constraints(source, goal);
  const std::string generator = k.kernel.size() == 1 ? render(goal, k.kernel.front()) : "";
  switch (format) {
    case OutputFormat::json: {
      Json j{{"family", family_s},   {"d", d},
             {"target", target},     {"arity", k.arity},
             {"dim", k.kernel.size()}};
      if (!generator.empty()) j["generator"] = generator;
      std::cout << j.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
      std::cout << "family,d,target,arity,dim,generator\n"
                << family_s << "," << d << "," << target << "," << k.arity << ","
                << k.kernel.size() << ",\"" << generator << "\"\n";
      break;
    case OutputFormat::markdown:
      std::cout << "| family | d | target | arity | dim | generator |\n"
                << "|---|---:|---:|---:|---:|---|\n| " << family_s << " | " << d << " | "
                << target << " | " << k.arity << " | " << k.kernel.size() << " | "
                << (generator.empty() ? "-" : "`" + generator + "`") << " |\n";
      break;
  }
  return kExitOk;
}

int run_verify(int d, int cap) {
  if (d < 0) throw UsageError("--d must be non-negative");
  if (cap < 0) cap = d + 2;
  if (cap < d) throw UsageError("--cap must be at least --d");
  const ExtensionModule ext = build_extension(d);
  std::cerr << "verify: datum " << render(ext.upper_kind(), ext.datum().value) << "\n";
  const RelationCheck check = verify_casimir_relations(ext, d, cap);
  Json j{{"d", d}, {"cap", cap}, {"passed", check.passed}, {"instances", check.instances}};
  if (!check.passed) {
    j["relation"] = check.relation;
    j["context"] = check.context;
    j["input"] = check.input;
    j["left"] = check.left;
    j["right"] = check.right;
  }
  std::cout << j.dump() << "\n";
  return check.passed ? kExitOk : kExitDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ext dimensions between Schur-functor simple modules"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "extschur 1.0.0");

  std::string format = "json";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json, csv or markdown")->capture_default_str();
  };

  std::string lambda, mu, rho, nu;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient LR^lambda_{rho,nu}");
  lr->add_option("--lambda", lambda, "outer partition, e.g. 2,1")->required();
  lr->add_option("--rho", rho, "first inner partition")->required();
  lr->add_option("--nu", nu, "second inner partition")->required();
  add_format(lr);

  std::string methods = "closed,catlie,ub-char,ub-symmetrizer";
  auto* ext = app.add_subcommand("ext", "Ext^1 dimension for one pair by several methods");
  ext->add_option("--lambda", lambda, "source partition")->required();
  ext->add_option("--mu", mu, "target partition")->required();
  ext->add_option("--methods", methods,
                  "comma list of closed, catlie, ub-char, ub-symmetrizer, solver")
      ->capture_default_str();
  add_format(ext);

  int max_size = 0;
  int jobs = 0;
  std::string out_path;
  auto* table = app.add_subcommand("table", "verification table over all pairs up to a size");
  table->add_option("--max", max_size, "largest partition size")->required();
  table->add_option("--out", out_path, "write to this file instead of stdout");
  table->add_option("--jobs", jobs, "worker threads (default: EXTSCHUR_JOBS or all cores)");
  add_format(table);

  std::string family;
  int d = 0;
  int target = 0;
  auto* solve = app.add_subcommand("solve", "kernel of the Casimir constraint system");
  solve->add_option("--family", family, "sym or ext")->required();
  solve->add_option("--d", d, "source degree")->required();
  solve->add_option("--target", target, "target degree")->required();
  add_format(solve);

  int cap = -1;
  auto* verify = app.add_subcommand("verify", "check the Casimir relations on the extension");
  verify->add_option("--d", d, "symmetric power degree")->required();
  verify->add_option("--cap", cap, "largest context arity (default d + 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (lr->parsed()) return run_lr(lambda, rho, nu, format);
    if (ext->parsed()) return run_ext(lambda, mu, methods, format);
    if (table->parsed()) return run_table(max_size, format, out_path, jobs);
    if (solve->parsed()) return run_solve(family, d, target, format);
    if (verify->parsed()) return run_verify(d, cap);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
