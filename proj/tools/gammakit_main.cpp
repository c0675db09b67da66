// Command-line surface: export polynomial families and count tables in
// machine-readable form, and run the named verification suites with
// deterministic output and exit codes (0 pass, 1 verification failure,
// 2 usage error, 3 resource bound exceeded).

#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gammakit/enumerate.hpp"
#include "gammakit/families.hpp"
#include "gammakit/suites.hpp"

namespace {

using namespace gammakit;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

// "S=10,B=8,C=7,elements=20000000": raises or lowers the enumeration caps.
bool apply_bound_override(const std::string& spec) {
  Bounds& bounds = global_bounds();
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    std::string item = spec.substr(pos, end - pos);
    pos = end + 1;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) return false;
    std::string key = item.substr(0, eq);
    long long value = 0;
    try {
      value = std::stoll(item.substr(eq + 1));
    } catch (...) {
      return false;
    }
    if (value <= 0) return false;
    if (key == "S")
      bounds.max_n_symmetric = static_cast<int>(value);
    else if (key == "B")
      bounds.max_n_signed = static_cast<int>(value);
    else if (key == "C")
      bounds.max_n_colored = static_cast<int>(value);
    else if (key == "elements")
      bounds.max_elements = value;
    else
      return false;
  }
  return true;
}

struct TableRows {
  int arity = 2;
  std::map<std::array<int, 3>, std::string> rows;
};

TableRows gamma_table_rows(const GammaTable& t) {
  TableRows out;
  out.arity = t.arity;
  for (const auto& [key, value] : t.entries) out.rows[key] = value.str();
  return out;
}

TableRows triangle_rows(const StatTriangle& t) {
  TableRows out;
  out.arity = t.arity;
  for (const auto& [key, value] : t.entries) out.rows[key] = value.str();
  return out;
}

bool build_table(const std::string& name, int max_n, TableRows& out) {
  if (name == "gamma") {
    out = gamma_table_rows(gamma_table(max_n));
  } else if (name == "b_of_p") {
    out = gamma_table_rows(b_table(max_n));
  } else if (name == "f_plus") {
    out = gamma_table_rows(f_tables(max_n).first);
  } else if (name == "f_minus") {
    out = gamma_table_rows(f_tables(max_n).second);
  } else if (name == "W") {
    out = triangle_rows(triangle_W(max_n));
  } else if (name == "S") {
    out = triangle_rows(triangle_S(max_n));
  } else if (name == "Q") {
    out = triangle_rows(triangle_Q(max_n));
  } else if (name == "P") {
    out = triangle_rows(triangle_P(max_n));
  } else if (name == "Pstar") {
    out = triangle_rows(triangle_Pstar(max_n));
  } else {
    return false;
  }
  return true;
}

std::string table_to_json(const std::string& name, const TableRows& table) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = "1";
  doc["name"] = name;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& [key, value] : table.rows) {
    nlohmann::ordered_json entry;
    entry["n"] = key[0];
    entry["i"] = key[1];
    if (table.arity == 3) entry["j"] = key[2];
    entry["value"] = value;
    doc["entries"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string table_to_csv(const TableRows& table) {
  std::string out = "n,i,j,value\n";
  for (const auto& [key, value] : table.rows) {
    out += std::to_string(key[0]) + "," + std::to_string(key[1]) + ",";
    if (table.arity == 3) out += std::to_string(key[2]);
    out += "," + value + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  apply_bounds_from_environment();

  CLI::App app{"gammakit: exact combinatorics of Eulerian-type polynomial families"};
  app.require_subcommand(1);

  std::string bound_override;
  app.add_option("--bound-override", bound_override,
                 "enumeration caps, e.g. S=10,B=8,C=7,elements=20000000");

  auto* poly_cmd = app.add_subcommand("poly", "print one family member in canonical text");
  std::string family_name;
  int poly_n = 0;
  int poly_r = 2;
  poly_cmd->add_option("--family", family_name, "family name (see README)")->required();
  poly_cmd->add_option("--n", poly_n, "index n >= 0")->required();
  poly_cmd->add_option("--r", poly_r, "color count for d_xr (default 2)");

  auto* table_cmd = app.add_subcommand("table", "export a gamma/count table");
  std::string table_name;
  int table_max_n = 6;
  std::string format = "json";
  table_cmd->add_option("--table", table_name,
                        "gamma, b_of_p, f_plus, f_minus, W, S, Q, P or Pstar")->required();
  table_cmd->add_option("--max-n", table_max_n, "largest n to export");
  table_cmd->add_option("--format", format, "json or csv");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  int verify_max_n = 6;
  int threads = 1;
  bool as_json = false;
  verify_cmd->add_option("--suite", suite, "all, egf, gamma, grammar, bijection or identities");
  verify_cmd->add_option("--max-n", verify_max_n, "verification depth");
  verify_cmd->add_option("--threads", threads, "worker threads");
  verify_cmd->add_flag("--json", as_json, "emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (!bound_override.empty() && !apply_bound_override(bound_override)) {
    std::cerr << "invalid --bound-override value: " << bound_override << "\n";
    return kExitUsage;
  }

  try {
    if (poly_cmd->parsed()) {
      const FamilyInfo* info = find_family(family_name);
      if (!info) {
        std::cerr << "unknown family: " << family_name << "\n";
        return kExitUsage;
      }
      if (poly_n < 0) {
        std::cerr << "n must be nonnegative\n";
        return kExitUsage;
      }
      if (poly_r < 1) {
        std::cerr << "r must be positive\n";
        return kExitUsage;
      }
      std::cout << family(info->id, poly_n, poly_r).str() << "\n";
      return kExitPass;
    }

    if (table_cmd->parsed()) {
      if (format != "json" && format != "csv") {
        std::cerr << "unknown format: " << format << "\n";
        return kExitUsage;
      }
      if (table_max_n < 0) {
        std::cerr << "max-n must be nonnegative\n";
        return kExitUsage;
      }
      TableRows rows;
      if (!build_table(table_name, table_max_n, rows)) {
        std::cerr << "unknown table: " << table_name << "\n";
        return kExitUsage;
      }
      std::cout << (format == "json" ? table_to_json(table_name, rows) : table_to_csv(rows));
      return kExitPass;
    }

    // verify
    bool known_suite = suite == "all";
    for (const auto& name : suite_names()) known_suite = known_suite || suite == name;
    if (!known_suite) {
      std::cerr << "unknown suite: " << suite << "\n";
      return kExitUsage;
    }
    if (verify_max_n < 0 || threads < 1) {
      std::cerr << "invalid verify options\n";
      return kExitUsage;
    }
    VerifyOptions options;
    options.max_n = verify_max_n;
    options.threads = threads;
    auto start = std::chrono::steady_clock::now();
    auto results = run_suite(suite, options);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    // Timing goes to stderr so stdout stays byte-identical across runs.
    std::cerr << "suite '" << suite << "' finished in " << elapsed << " ms\n";
    std::cout << (as_json ? report_to_json(suite, verify_max_n, results)
                          : report_to_text(results));
    return all_passed(results) ? kExitPass : kExitVerifyFailure;
  } catch (const BoundExceeded& e) {
    std::cerr << "resource bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
