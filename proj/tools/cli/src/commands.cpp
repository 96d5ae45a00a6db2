// Copyright 2026 The gf4lcd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gf4lcd_cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "gf4lcd/bounds.hpp"
#include "gf4lcd/classify.hpp"
#include "gf4lcd/constructions.hpp"
#include "gf4lcd/errors.hpp"
#include "gf4lcd/obstruction.hpp"
#include "gf4lcd/quantum.hpp"
#include "gf4lcd_cli/archive.hpp"
#include "gf4lcd_cli/table_checks.hpp"

namespace gf4lcd::cli {

namespace {

using nlohmann::json;

struct ClassifyArgs {
  std::int64_t n = 0;
  int k = 3;
  std::int64_t d = 0;
  std::string method = "orbit";
  int jobs = 1;
  std::string out;
  bool full_support = false;
  bool semilinear = false;
  std::optional<std::uint64_t> budget;
};

struct TablesArgs {
  bool skip_classification = false;
  int jobs = 1;
  int max_n = 1000;
};

struct D4Args {
  int k = 3;
  std::int64_t n = 0;
};

struct NonexistArgs {
  std::int64_t n = 0;
  int k = 3;
  std::int64_t d = 0;
  bool no_classifier = false;
  std::uint64_t budget = ObstructionOptions{}.classifier_budget;
};

json class_json(const CodeClass& c) {
  return {{"zero_columns", c.zero_columns},
          {"multiplicities", c.representative.m},
          {"enumerator", c.enumerator.to_compact()},
          {"lcd", c.lcd}};
}

bool write_archive(const ArchiveDocument& doc, const std::filesystem::path& path, std::ostream& err) {
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    try {
      if (same_results(parse_archive(text.str()), doc)) {
        err << "archive " << path.string() << " unchanged\n";
        return true;
      }
    } catch (const InvalidInput&) {
      // Overwrite unreadable archives.
    }
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream file(path);
  file << render(doc);
  if (!file) {
    err << "error: cannot write " << path.string() << "\n";
    return false;
  }
  err << "archive written to " << path.string() << "\n";
  return true;
}

int cmd_classify(const ClassifyArgs& a, bool as_json, std::ostream& out, std::ostream& err) {
  ClassificationQuery q;
  q.n = a.n;
  q.k = a.k;
  q.d = a.d;
  q.method = parse_method(a.method);
  q.jobs = a.jobs;
  q.require_full_support = a.full_support;
  q.equivalence = a.semilinear ? Equivalence::kSemilinear : Equivalence::kMonomial;
  q.budget = a.budget;
  if (q.k != 2 && q.k != 3) throw InvalidInput("classify: k must be 2 or 3");
  if (q.n < q.k) throw InvalidInput("classify: n must be at least k");
  if (q.d < 1) throw InvalidInput("classify: d must be positive");
  if (q.d > alpha4(q.n, q.k)) {
    throw InvalidInput("classify: d = " + std::to_string(q.d) + " exceeds the Griesmer bound alpha4(" +
                       std::to_string(q.n) + "," + std::to_string(q.k) + ") = " + std::to_string(alpha4(q.n, q.k)));
  }
  const auto result = classify(q);
  const auto doc = make_archive(result);
  if (!a.out.empty()) {
    std::filesystem::path path(a.out);
    if (std::filesystem::is_directory(path) || a.out.back() == '/') path = archive_path(path, q);
    if (!write_archive(doc, path, err)) return kExitInvalid;
  }
  if (as_json) {
    json j;
    for (const auto& [k, v] : doc.header) j[k] = v;
    j["classes"] = json::array();
    for (const auto& c : result.classes) j["classes"].push_back(class_json(c));
    j["class-count"] = result.classes.size();
    j["lcd-classes"] = count_lcd(result);
    out << j.dump(2) << "\n";
  } else {
    out << render(doc);
  }
  return kExitOk;
}

int cmd_verify_tables(const TablesArgs& a, bool as_json, std::ostream& out) {
  TableCheckOptions options;
  options.classification = !a.skip_classification;
  options.jobs = a.jobs;
  options.max_n = a.max_n;
  const auto checks = check_tables(options);
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const CellCheck& c) { return !c.pass; });
  if (as_json) {
    json j = json::array();
    for (const auto& c : checks) j.push_back({{"table", c.table}, {"cell", c.cell}, {"pass", c.pass}, {"detail", c.detail}});
    out << json{{"cells", j}, {"failed", failed}}.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.table << " " << c.cell << ": " << c.detail << "\n";
    }
    out << checks.size() - static_cast<std::size_t>(failed) << "/" << checks.size() << " cells pass\n";
  }
  return failed == 0 ? kExitOk : kExitInvalid;
}

int cmd_d4(const D4Args& a, bool as_json, std::ostream& out) {
  std::int64_t value = 0;
  std::string label;
  std::string note;
  if (a.k == 2) {
    value = d4_dim2(a.n);
    label = "closed form";
    note = "residues read mod 5; one printed statement of this case split says mod 4";
  } else if (a.k == 3) {
    if (a.n < 6) {
      if (a.n < 4) throw InvalidInput("d4: k = 3 requires n >= 4");
      value = published_d4_dim3(static_cast<int>(a.n));
      label = "published LCD tables";
    } else {
      const auto row = d4_dim3_table_row(a.n);
      value = row.value;
      label = row.label;
    }
  } else {
    throw InvalidInput("d4: k must be 2 or 3");
  }
  if (as_json) {
    json j{{"n", a.n}, {"k", a.k}, {"d4", value}, {"justification", label}, {"alpha4", alpha4(a.n, a.k)}};
    if (!note.empty()) j["erratum"] = note;
    out << j.dump(2) << "\n";
  } else {
    out << "d4(" << a.n << "," << a.k << ") = " << value << " (" << label << ")\n";
    if (!note.empty()) out << "note: " << note << "\n";
  }
  return kExitOk;
}

int cmd_nonexist(const NonexistArgs& a, bool as_json, std::ostream& out) {
  ObstructionOptions options;
  options.use_classifier = !a.no_classifier;
  options.classifier_budget = a.budget;
  const auto report = obstruction_chain(a.n, a.k, a.d, options);
  const std::string verdict = report.established ? "nonexistent" : "not established";
  if (as_json) {
    json steps = json::array();
    for (const auto& s : report.steps) {
      steps.push_back({{"rule", s.rule}, {"outcome", to_string(s.outcome)}, {"detail", s.detail}});
    }
    out << json{{"n", a.n},
                {"k", a.k},
                {"d", a.d},
                {"steps", steps},
                {"established", report.established},
                {"open_dependencies", report.open_dependencies}}
               .dump(2)
        << "\n";
  } else {
    out << "query: LCD [" << a.n << "," << a.k << "," << a.d << "]\n";
    for (const auto& s : report.steps) out << s.rule << ": " << to_string(s.outcome) << " (" << s.detail << ")\n";
    for (const auto& dep : report.open_dependencies) out << "open: " << dep << "\n";
    out << "verdict: " << verdict << "\n";
  }
  return kExitOk;
}

std::string canonical_name(const std::string& name) {
  for (const auto& known : named_code_names()) {
    if (known.size() == name.size() &&
        std::equal(known.begin(), known.end(), name.begin(),
                   [](char x, char y) { return std::tolower(x) == std::tolower(y); })) {
      return known;
    }
  }
  return {};
}

int cmd_codes_list(bool as_json, std::ostream& out) {
  const auto names = named_code_names();
  if (as_json) {
    out << json(names).dump(2) << "\n";
  } else {
    for (const auto& name : names) out << name << "\n";
  }
  return kExitOk;
}

int cmd_codes_show(const std::string& name, bool as_json, std::ostream& out) {
  const auto resolved = canonical_name(name);
  if (resolved.empty()) throw InvalidInput("unknown code '" + name + "'");
  const auto named = named_code(resolved);
  const auto check = verify(named);
  const auto& g = named.code.generator();
  if (as_json) {
    std::vector<std::string> rows;
    std::istringstream in(g.to_string());
    for (std::string line; std::getline(in, line);) rows.push_back(line);
    out << json{{"name", named.name},
                {"n", named.code.length()},
                {"k", named.code.dimension()},
                {"d", check.min_weight},
                {"lcd", check.lcd},
                {"enumerator", check.enumerator.to_string()},
                {"generator", rows}}
               .dump(2)
        << "\n";
  } else {
    out << "# name: " << named.name << "\n";
    out << "# parameters: [" << named.code.length() << "," << named.code.dimension() << "," << check.min_weight
        << "]\n";
    out << "# hermitian-lcd: " << (check.lcd ? "yes" : "no") << "\n";
    out << "# weight-enumerator: " << check.enumerator.to_string() << "\n";
    out << g.to_string();
    if (g.to_string().back() != '\n') out << "\n";
  }
  return kExitOk;
}

int cmd_codes_verify_all(bool as_json, std::ostream& out) {
  json j = json::array();
  bool all = true;
  for (const auto& name : named_code_names()) {
    const auto named = named_code(name);
    const auto check = verify(named);
    all = all && check.ok();
    if (as_json) {
      j.push_back({{"name", name},
                   {"pass", check.ok()},
                   {"enumerator_matches", check.enumerator_matches},
                   {"lcd_matches", check.lcd_matches},
                   {"min_weight", check.min_weight}});
    } else {
      out << (check.ok() ? "PASS " : "FAIL ") << name << ": [" << named.code.length() << ","
          << named.code.dimension() << "," << check.min_weight << "] " << (check.lcd ? "LCD" : "not LCD") << "\n";
    }
  }
  if (as_json) out << j.dump(2) << "\n";
  return all ? kExitOk : kExitInvalid;
}

int cmd_quantum(const std::string& source, bool as_json, std::ostream& out) {
  std::optional<LinearCode> code;
  std::string label = source;
  if (const auto resolved = canonical_name(source); !resolved.empty()) {
    code = named_code(resolved).code;
    label = resolved;
  } else {
    std::ifstream in(source);
    if (!in) throw InvalidInput("cannot read '" + source + "' (neither a file nor a known code name)");
    std::stringstream text;
    text << in.rdbuf();
    code = LinearCode(F4Matrix::parse(text.str()));
  }
  const auto params = to_maximal_entanglement(*code);
  const auto bound = lbw_bound(params.n, params.k);
  const bool tight = params.d == bound;
  if (as_json) {
    out << json{{"code", label},  {"n", params.n},         {"k", params.k},        {"d", params.d},
                {"c", params.c},  {"parameters", params.to_string()}, {"lbw_bound", bound}, {"bound_tight", tight}}
               .dump(2)
        << "\n";
  } else {
    out << params.to_string() << " from " << label << "\n";
    out << "lbw bound: d <= " << bound << (tight ? " (bound-tight)" : " (not tight)") << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternary Hermitian LCD codes: classification, bounds and nonexistence", "gf4lcd"};
  app.require_subcommand(1);
  app.set_version_flag("--version", GF4LCD_VERSION);
  bool as_json = false;
  app.add_flag("--json", as_json, "Structured JSON output");

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "Classify [n,k,d] codes up to equivalence");
  classify_cmd->add_option("--n", ca.n, "Length")->required();
  classify_cmd->add_option("--k", ca.k, "Dimension (2 or 3)")->capture_default_str();
  classify_cmd->add_option("--d", ca.d, "Exact minimum weight")->required();
  classify_cmd->add_option("--method", ca.method, "orbit or shorten")
      ->check(CLI::IsMember({"orbit", "shorten"}))
      ->capture_default_str();
  classify_cmd->add_option("--jobs", ca.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  classify_cmd->add_option("--out", ca.out, "Archive file, or directory for the standard layout");
  classify_cmd->add_flag("--full-support", ca.full_support, "Only codes without zero columns");
  classify_cmd->add_flag("--semilinear", ca.semilinear, "Also identify Frobenius-conjugate codes");
  classify_cmd->add_option("--budget", ca.budget, "Search-node budget (default GF4LCD_BUDGET or 1e9)");
  classify_cmd->add_flag("--json", as_json, "Structured JSON output");

  TablesArgs ta;
  auto* tables_cmd = app.add_subcommand("verify-tables", "Recompute the published tables cell by cell");
  tables_cmd->add_flag("--skip-classification", ta.skip_classification, "Skip the dimension-3 classifications");
  tables_cmd->add_option("--jobs", ta.jobs, "Worker threads")->check(CLI::PositiveNumber);
  tables_cmd->add_option("--max-n", ta.max_n, "Largest length for closed-form checks")->check(CLI::Range(35, 100000));
  tables_cmd->add_flag("--json", as_json, "Structured JSON output");

  D4Args da;
  auto* d4_cmd = app.add_subcommand("d4", "Largest minimum weight of a Hermitian LCD [n,k] code");
  d4_cmd->add_option("--k", da.k, "Dimension (2 or 3)")->required();
  d4_cmd->add_option("--n", da.n, "Length")->required();
  d4_cmd->add_flag("--json", as_json, "Structured JSON output");

  NonexistArgs na;
  auto* nonexist_cmd = app.add_subcommand("nonexist", "Run the nonexistence rules on an LCD [n,k,d] code");
  nonexist_cmd->add_option("--n", na.n, "Length")->required();
  nonexist_cmd->add_option("--k", na.k, "Dimension")->required();
  nonexist_cmd->add_option("--d", na.d, "Minimum weight")->required();
  nonexist_cmd->add_flag("--no-classifier", na.no_classifier, "Use closed-form rules only");
  nonexist_cmd->add_option("--budget", na.budget, "Search-node budget for each classification")->capture_default_str();
  nonexist_cmd->add_flag("--json", as_json, "Structured JSON output");

  std::string code_name;
  auto* codes_cmd = app.add_subcommand("codes", "The embedded code database");
  codes_cmd->require_subcommand(1);
  auto* codes_list = codes_cmd->add_subcommand("list", "List the named codes");
  auto* codes_show = codes_cmd->add_subcommand("show", "Print a generator matrix with its properties");
  codes_show->add_option("name", code_name, "Code name, e.g. C26 or C43_10")->required();
  auto* codes_verify = codes_cmd->add_subcommand("verify-all", "Check every named code against its expectations");
  for (auto* sub : {codes_cmd, codes_list, codes_show, codes_verify}) sub->add_flag("--json", as_json, "Structured JSON output");

  std::string quantum_source;
  auto* quantum_cmd = app.add_subcommand("quantum", "Entanglement-assisted quantum code parameters");
  quantum_cmd->require_subcommand(1);
  auto* from_code = quantum_cmd->add_subcommand("from-code", "Parameters from a Hermitian LCD code");
  from_code->add_option("source", quantum_source, "Generator-matrix file or named code")->required();
  for (auto* sub : {quantum_cmd, from_code}) sub->add_flag("--json", as_json, "Structured JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*classify_cmd) return cmd_classify(ca, as_json, out, err);
    if (*tables_cmd) return cmd_verify_tables(ta, as_json, out);
    if (*d4_cmd) return cmd_d4(da, as_json, out);
    if (*nonexist_cmd) return cmd_nonexist(na, as_json, out);
    if (*codes_list) return cmd_codes_list(as_json, out);
    if (*codes_show) return cmd_codes_show(code_name, as_json, out);
    if (*codes_verify) return cmd_codes_verify_all(as_json, out);
    if (*from_code) return cmd_quantum(quantum_source, as_json, out);
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << " (raw candidate estimate " << e.estimated() << ", explored " << e.explored()
        << "); raise GF4LCD_BUDGET or --budget to continue\n";
    return kExitBudget;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace gf4lcd::cli
