#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "nzc/audit.hpp"
#include "nzc/bigint.hpp"
#include "nzc/errors.hpp"
#include "nzc/formulas.hpp"
#include "nzc/graph_io.hpp"
#include "nzc/indices.hpp"
#include "nzc/render.hpp"
#include "nzc/space.hpp"
#include "nzc/transforms.hpp"

namespace nzc {

enum class Command { Build, Indices, Derived, Formulas, Audit, Export };

struct RunConfig {
  Command command = Command::Build;
  std::vector<std::uint64_t> q_values;
  std::vector<std::uint64_t> n_values;
  std::optional<TransformKind> transform;
  std::string output_path;            // empty: stdout
  std::string format = "json";        // json | csv | dot | edgelist | markdown
  std::uint64_t explicit_cap = kDefaultExplicitCap;
  bool warn_nonprimepower = true;
  bool quotient = false;              // build: emit the quotient summary
  std::string method = "auto";        // indices: auto | explicit | quotient
  std::string input_path;             // derived / export: edge-list input
  std::string formula_id;             // formulas: restrict to one entry
  std::optional<Bigint> m2_injection; // formulas: explicit M2 value
  bool with_indices = false;          // derived: emit the bundle instead of the graph
  std::string export_to = "dot";      // export target format
  unsigned workers = 0;               // 0: machine parallelism
};

/// Comma lists with `a..b` ranges: "2,3", "2..5", "2,4..6".
inline std::vector<std::uint64_t> parse_grid_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  auto parse_u64 = [](std::string_view tok) -> std::uint64_t {
    if (tok.empty()) throw ParseError("empty value in grid list");
    std::uint64_t v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw ParseError("bad number '" + std::string(tok) + "' in grid list");
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
  };
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                            : comma - pos);
    std::size_t dots = tok.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_u64(tok));
    } else {
      std::uint64_t lo = parse_u64(tok.substr(0, dots));
      std::uint64_t hi = parse_u64(tok.substr(dots + 2));
      if (hi < lo) throw ParseError("descending range in grid list");
      for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw ParseError("empty grid list");
  return out;
}

/// Flat key=value configuration text; '#' starts a comment line.
inline std::map<std::string, std::string> parse_config_file(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  std::size_t lineno = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++lineno;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("config line " + std::to_string(lineno) + " is not key=value");
    out[std::string(line.substr(0, eq))] = std::string(line.substr(eq + 1));
  }
  return out;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline Json graph_to_json(const Graph& g) {
  Json j;
  j["vertex_count"] = g.vertex_count();
  Json edges = Json::array();
  g.for_each_edge([&](Vertex u, Vertex v) { edges.push_back(Json::array({u, v})); });
  j["edges"] = edges;
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

inline std::string graph_output(const Graph& g, const std::string& format) {
  if (format == "edgelist") return to_edgelist(g);
  if (format == "dot") return to_dot(g);
  if (format == "json") return graph_to_json(g).dump(2) + "\n";
  throw UnsupportedFormat("graph output supports edgelist, dot or json (got '" + format + "')");
}

inline std::string bundle_output(const IndexBundle& b, const std::string& format,
                                 std::string_view method) {
  if (format == "json") {
    Json j = bundle_to_json(b);
    j["method"] = method;
    return j.dump(2) + "\n";
  }
  if (format == "csv") return bundle_to_csv(b);
  if (format == "markdown") return bundle_to_markdown(b);
  throw UnsupportedFormat("indices output supports json, csv or markdown (got '" + format + "')");
}

inline void checked_single(const std::vector<std::uint64_t>& vs, const char* what) {
  if (vs.size() != 1)
    throw UsageError(std::string("exactly one ") + what + " value is required for this command");
}

inline SpaceParams params_from(const RunConfig& cfg, std::ostream& err) {
  checked_single(cfg.q_values, "--q");
  checked_single(cfg.n_values, "--n");
  if (cfg.n_values[0] > 63) throw UsageError("n must be in [1, 63]");
  SpaceParams p = make_space_params(cfg.q_values[0], static_cast<std::uint32_t>(cfg.n_values[0]));
  if (!p.prime_power && cfg.warn_nonprimepower)
    err << "warning: q = " << p.q
        << " is not a prime power; the construction uses coordinates only, so the graph is "
           "still well defined\n"
        << std::flush;
  return p;
}

inline int emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(cfg.output_path, std::ios::binary);
  if (!f) throw Error("cannot write '" + cfg.output_path + "'");
  f << text;
  return 0;
}

inline int run_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SpaceParams p = params_from(cfg, err);
  if (cfg.quotient) {
    const SupportQuotient sq = build_quotient(p);
    if (cfg.format == "json") return emit(cfg, out, quotient_to_json(sq).dump(2) + "\n");
    if (cfg.format == "csv") return emit(cfg, out, quotient_to_csv(sq));
    throw UnsupportedFormat("quotient output supports json or csv (got '" + cfg.format + "')");
  }
  return emit(cfg, out, graph_output(build_explicit(p, cfg.explicit_cap), cfg.format));
}

inline int run_indices(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SpaceParams p = params_from(cfg, err);
  const Bigint order = bigpow(Bigint(p.q), p.n) - 1;
  std::string method = cfg.method;
  if (method == "auto") method = order <= cfg.explicit_cap ? "explicit" : "quotient";
  IndexBundle b;
  if (method == "explicit") {
    b = bundle(build_explicit(p, cfg.explicit_cap));
  } else if (method == "quotient") {
    b = bundle_from_quotient(build_quotient(p));
  } else {
    throw UsageError("indices --method must be auto, explicit or quotient");
  }
  return emit(cfg, out, bundle_output(b, cfg.format, method));
}

inline int run_derived(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.transform.has_value()) throw UsageError("derived requires --transform");
  Graph g;
  if (!cfg.input_path.empty()) {
    g = graph_from_edgelist(read_file(cfg.input_path));
  } else {
    g = build_explicit(params_from(cfg, err), cfg.explicit_cap);
  }
  const Graph t = apply_transform(*cfg.transform, g);
  if (cfg.with_indices) return emit(cfg, out, bundle_output(bundle(t), cfg.format, "explicit"));
  return emit(cfg, out, graph_output(t, cfg.format));
}

inline Json formula_entry_json(const FormulaCatalogEntry& e, std::uint64_t q, std::uint32_t n,
                               const std::optional<Bigint>& m2) {
  Json j;
  j["formula_id"] = e.name;
  j["provenance"] = e.provenance;
  j["q"] = q;
  j["n"] = n;
  if (e.kind == StatementKind::Predicate) {
    const ThresholdResult th = corollary_threshold(q, n);
    j["threshold"] = to_decimal(th.threshold);
    j["satisfied"] = th.satisfied;
  } else {
    j["value"] = to_decimal(eval_formula(e.id, q, n, m2));
  }
  return j;
}

inline int run_formulas(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SpaceParams p = params_from(cfg, err);
  std::optional<Bigint> m2 = cfg.m2_injection;
  std::vector<const FormulaCatalogEntry*> wanted;
  if (cfg.formula_id.empty()) {
    for (const FormulaCatalogEntry& e : catalog()) wanted.push_back(&e);
  } else {
    wanted.push_back(&catalog_entry(parse_formula_id(cfg.formula_id)));
  }
  // The two identity-rhs displays consume the base graph's M2 symbolically;
  // default to the quotient oracle's value when none was given.
  bool needs = false;
  for (const FormulaCatalogEntry* e : wanted) needs |= e->needs_m2;
  if (needs && !m2.has_value()) m2 = bundle_from_quotient(build_quotient(p)).m2;

  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const FormulaCatalogEntry* e : wanted)
      arr.push_back(formula_entry_json(*e, p.q, p.n, m2));
    return emit(cfg, out, arr.dump(2) + "\n");
  }
  if (cfg.format == "csv") {
    std::string text = "formula_id,q,n,value,provenance\n";
    for (const FormulaCatalogEntry* e : wanted) {
      std::string value;
      if (e->kind == StatementKind::Predicate) {
        const ThresholdResult th = corollary_threshold(p.q, p.n);
        value = to_decimal(th.threshold) + (th.satisfied ? " (satisfied)" : " (not satisfied)");
      } else {
        value = to_decimal(eval_formula(e->id, p.q, p.n, m2));
      }
      text += std::string(e->name) + "," + std::to_string(p.q) + "," + std::to_string(p.n) +
              "," + value + ",\"" + std::string(e->provenance) + "\"\n";
    }
    return emit(cfg, out, text);
  }
  if (cfg.format == "markdown") {
    std::string text = "| formula | value | statement |\n|---|---|---|\n";
    for (const FormulaCatalogEntry* e : wanted) {
      std::string value;
      if (e->kind == StatementKind::Predicate) {
        const ThresholdResult th = corollary_threshold(p.q, p.n);
        value = to_decimal(th.threshold) + (th.satisfied ? " (satisfied)" : " (not satisfied)");
      } else {
        value = to_decimal(eval_formula(e->id, p.q, p.n, m2));
      }
      text += "| " + std::string(e->name) + " | " + value + " | " + std::string(e->provenance) +
              " |\n";
    }
    return emit(cfg, out, text);
  }
  throw UnsupportedFormat("formulas output supports json, csv or markdown (got '" + cfg.format +
                          "')");
}

inline int run_audit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  GridSpec spec;
  spec.q_values = cfg.q_values;
  for (std::uint64_t n : cfg.n_values) {
    if (n < 1 || n > 63) throw UsageError("n must be in [1, 63]");
    spec.n_values.push_back(static_cast<std::uint32_t>(n));
  }
  spec.explicit_cap = cfg.explicit_cap;
  if (cfg.warn_nonprimepower) {
    for (std::uint64_t q : spec.q_values)
      if (!is_prime_power(q))
        err << "warning: q = " << q << " is not a prime power\n" << std::flush;
  }
  const AuditReport report = audit_grid(spec, cfg.workers);
  emit(cfg, out, render_report(report, parse_report_format(cfg.format)));
  return report_has_mismatch(report) ? 2 : 0;
}

inline int run_export(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.input_path.empty()) throw UsageError("export requires --input");
  const Graph g = graph_from_edgelist(read_file(cfg.input_path));
  if (cfg.export_to == "dot") return emit(cfg, out, to_dot(g));
  if (cfg.export_to == "edgelist") return emit(cfg, out, to_edgelist(g));
  if (cfg.export_to == "json") return emit(cfg, out, graph_to_json(g).dump(2) + "\n");
  throw UnsupportedFormat("export target must be dot, edgelist or json (got '" + cfg.export_to +
                          "')");
}

}  // namespace detail

/// Dispatches one configured command. Returns the process exit status:
/// 0 success, 1 error (message on err), 2 audit found at least one
/// mismatch, 64 usage problem.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Build: return detail::run_build(cfg, out, err);
      case Command::Indices: return detail::run_indices(cfg, out, err);
      case Command::Derived: return detail::run_derived(cfg, out, err);
      case Command::Formulas: return detail::run_formulas(cfg, out, err);
      case Command::Audit: return detail::run_audit(cfg, out, err);
      case Command::Export: return detail::run_export(cfg, out, err);
    }
    err << "error: unknown command\n";
    return 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const UnsupportedFormat& e) {
    err << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nzc
