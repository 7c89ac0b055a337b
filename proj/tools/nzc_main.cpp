// Command-line front end: batch construction, index computation, graph
// transforms, formula evaluation and the differential audit.
//
// Exit status: 0 success, 1 error, 2 audit found mismatches, 64 usage.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "nzc/cli.hpp"

namespace {

// First pass over argv: a config file supplies flat key=value defaults;
// explicit flags override them.
std::map<std::string, std::string> load_config(int argc, char** argv) {
  for (int i = 1; i < argc - 1; ++i) {
    if (std::string_view(argv[i]) == "--config") {
      std::ifstream in(argv[i + 1], std::ios::binary);
      if (!in) throw nzc::Error("cannot open config file '" + std::string(argv[i + 1]) + "'");
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      return nzc::parse_config_file(text);
    }
  }
  return {};
}

std::string cfg_or(const std::map<std::string, std::string>& cfg, const std::string& key,
                   const std::string& fallback) {
  auto it = cfg.find(key);
  return it == cfg.end() ? fallback : it->second;
}

bool cfg_bool(const std::map<std::string, std::string>& cfg, const std::string& key,
              bool fallback) {
  auto it = cfg.find(key);
  if (it == cfg.end()) return fallback;
  return it->second == "1" || it->second == "true" || it->second == "yes";
}

}  // namespace

int main(int argc, char** argv) {
  std::map<std::string, std::string> file_cfg;
  try {
    file_cfg = load_config(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  CLI::App app{"nonzero-component graphs: exact indices, transforms and formula audits"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "flat key=value config file (flags override)");

  std::string q_list = cfg_or(file_cfg, "q", "");
  std::string n_list = cfg_or(file_cfg, "n", "");
  std::string format = cfg_or(file_cfg, "format", "");
  std::string output = cfg_or(file_cfg, "output", "");
  std::uint64_t cap = nzc::kDefaultExplicitCap;
  if (file_cfg.count("cap")) cap = std::stoull(file_cfg.at("cap"));
  unsigned workers = 0;
  if (file_cfg.count("workers")) workers = static_cast<unsigned>(std::stoul(file_cfg.at("workers")));
  bool warn_npp = cfg_bool(file_cfg, "warn-nonprimepower", true);
  bool quotient = cfg_bool(file_cfg, "quotient", false);
  bool with_indices = cfg_bool(file_cfg, "indices", false);
  std::string method = cfg_or(file_cfg, "method", "auto");
  std::string transform = cfg_or(file_cfg, "transform", "");
  std::string formula_id = cfg_or(file_cfg, "id", "");
  std::string m2_text = cfg_or(file_cfg, "m2", "");
  std::string input = cfg_or(file_cfg, "input", "");
  std::string export_to = cfg_or(file_cfg, "to", "dot");

  auto add_common = [&](CLI::App* sub, bool grid) {
    // accepted (and consumed by the pre-scan) in any position
    sub->add_option("--config", config_path, "flat key=value config file (flags override)");
    sub->add_option("--q", q_list, grid ? "field sizes (comma list, a..b ranges)" : "field size")
        ->default_val(q_list);
    sub->add_option("--n", n_list, grid ? "dimensions (comma list, a..b ranges)" : "dimension")
        ->default_val(n_list);
    sub->add_option("--format", format, "output format")->default_val(format);
    sub->add_option("--output", output, "write to file instead of stdout")->default_val(output);
    sub->add_option("--cap", cap, "explicit enumeration cap (vertices)")
        ->envname("NZC_EXPLICIT_CAP")
        ->default_val(cap);
    sub->add_flag("--warn-nonprimepower,!--no-warn-nonprimepower", warn_npp,
                  "warn when q is not a prime power");
  };

  CLI::App* build = app.add_subcommand("build", "construct the nonzero-component graph");
  add_common(build, false);
  build->add_flag("--quotient", quotient, "emit the support-class quotient summary");

  CLI::App* indices = app.add_subcommand("indices", "exact degree-based indices");
  add_common(indices, false);
  indices->add_option("--method", method, "auto | explicit | quotient")->default_val(method);

  CLI::App* derived = app.add_subcommand("derived", "apply a graph transformation");
  add_common(derived, false);
  derived->add_option("--transform", transform,
                      "subdivision|line|vertex-semitotal|edge-semitotal|para-line (or s,l,t1,t2,pl)")
      ->default_val(transform);
  derived->add_option("--input", input, "edge-list file to transform instead of (q, n)")
      ->default_val(input);
  derived->add_flag("--indices", with_indices, "emit the index bundle of the transformed graph");

  CLI::App* formulas = app.add_subcommand("formulas", "evaluate catalogued printed formulas");
  add_common(formulas, false);
  formulas->add_option("--id", formula_id, "restrict to one formula id")->default_val(formula_id);
  formulas->add_option("--m2", m2_text, "injected M2 value for the identity-rhs displays")
      ->default_val(m2_text);

  CLI::App* audit = app.add_subcommand("audit", "differential audit over a (q, n) grid");
  add_common(audit, true);
  audit->add_option("--workers", workers, "worker threads (0 = machine parallelism)")
      ->default_val(workers);

  CLI::App* exp = app.add_subcommand("export", "convert graph files between formats");
  exp->add_option("--config", config_path, "flat key=value config file (flags override)");
  exp->add_option("--input", input, "edge-list file")->default_val(input);
  exp->add_option("--to", export_to, "dot | edgelist | json")->default_val(export_to);
  exp->add_option("--output", output, "write to file instead of stdout")->default_val(output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  nzc::RunConfig cfg;
  cfg.format = format;
  cfg.output_path = output;
  cfg.explicit_cap = cap;
  cfg.warn_nonprimepower = warn_npp;
  cfg.workers = workers;
  cfg.input_path = input;

  try {
    if (!q_list.empty()) cfg.q_values = nzc::parse_grid_list(q_list);
    if (!n_list.empty()) cfg.n_values = nzc::parse_grid_list(n_list);
    if (build->parsed()) {
      cfg.command = nzc::Command::Build;
      cfg.quotient = quotient;
      if (cfg.format.empty()) cfg.format = quotient ? "json" : "edgelist";
    } else if (indices->parsed()) {
      cfg.command = nzc::Command::Indices;
      cfg.method = method;
      if (cfg.format.empty()) cfg.format = "json";
    } else if (derived->parsed()) {
      cfg.command = nzc::Command::Derived;
      if (!transform.empty()) cfg.transform = nzc::parse_transform(transform);
      cfg.with_indices = with_indices;
      if (cfg.format.empty()) cfg.format = with_indices ? "json" : "edgelist";
    } else if (formulas->parsed()) {
      cfg.command = nzc::Command::Formulas;
      cfg.formula_id = formula_id;
      if (!m2_text.empty()) cfg.m2_injection = nzc::Bigint(m2_text);
      if (cfg.format.empty()) cfg.format = "json";
    } else if (audit->parsed()) {
      cfg.command = nzc::Command::Audit;
      if (cfg.format.empty()) cfg.format = "json";
    } else if (exp->parsed()) {
      cfg.command = nzc::Command::Export;
      cfg.export_to = export_to;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }

  return nzc::run(cfg, std::cout, std::cerr);
}
