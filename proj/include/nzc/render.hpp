#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "nzc/audit.hpp"
#include "nzc/bigint.hpp"
#include "nzc/errors.hpp"
#include "nzc/formulas.hpp"
#include "nzc/indices.hpp"
#include "nzc/space.hpp"

// Serialization of bundles, quotients and audit reports. Index values go
// out as decimal strings; structural vertex ids stay numeric. Field order
// is pinned via ordered_json: identical inputs, byte-identical output.

namespace nzc {

using Json = nlohmann::ordered_json;

enum class ReportFormat { Json, Csv, Markdown };

inline ReportFormat parse_report_format(std::string_view s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "markdown" || s == "md") return ReportFormat::Markdown;
  throw UnsupportedFormat("unknown report format '" + std::string(s) + "'");
}

inline Json bundle_to_json(const IndexBundle& b) {
  Json j;
  j["vertex_count"] = to_decimal(b.vertex_count);
  j["edge_count"] = to_decimal(b.edge_count);
  j["m1"] = to_decimal(b.m1);
  j["m2"] = to_decimal(b.m2);
  j["forgotten"] = to_decimal(b.forgotten);
  j["co_m1"] = to_decimal(b.co_m1);
  j["co_m2"] = to_decimal(b.co_m2);
  return j;
}

inline std::string bundle_to_csv(const IndexBundle& b) {
  std::string out = "vertex_count,edge_count,m1,m2,forgotten,co_m1,co_m2\n";
  out += to_decimal(b.vertex_count) + "," + to_decimal(b.edge_count) + "," + to_decimal(b.m1) +
         "," + to_decimal(b.m2) + "," + to_decimal(b.forgotten) + "," + to_decimal(b.co_m1) +
         "," + to_decimal(b.co_m2) + "\n";
  return out;
}

inline std::string bundle_to_markdown(const IndexBundle& b) {
  std::string out = "| index | value |\n|---|---|\n";
  out += "| vertex count | " + to_decimal(b.vertex_count) + " |\n";
  out += "| edge count | " + to_decimal(b.edge_count) + " |\n";
  out += "| M1 | " + to_decimal(b.m1) + " |\n";
  out += "| M2 | " + to_decimal(b.m2) + " |\n";
  out += "| F | " + to_decimal(b.forgotten) + " |\n";
  out += "| co-M1 | " + to_decimal(b.co_m1) + " |\n";
  out += "| co-M2 | " + to_decimal(b.co_m2) + " |\n";
  return out;
}

inline Json quotient_to_json(const SupportQuotient& sq) {
  Json j;
  j["q"] = sq.params.q;
  j["n"] = sq.params.n;
  j["prime_power"] = sq.params.prime_power;
  Json classes = Json::array();
  for (const QuotientClass& c : sq.classes) {
    Json jc;
    Json support = Json::array();
    for (std::uint32_t i = 0; i < sq.params.n; ++i)
      if ((c.support_mask >> i) & 1) support.push_back(i + 1);  // 1-based positions
    jc["support"] = support;
    jc["size"] = to_decimal(c.size);
    jc["degree"] = to_decimal(c.degree);
    classes.push_back(jc);
  }
  j["classes"] = classes;
  return j;
}

inline std::string quotient_to_csv(const SupportQuotient& sq) {
  std::string out = "support,size,degree\n";
  for (const QuotientClass& c : sq.classes) {
    std::string supp;
    for (std::uint32_t i = 0; i < sq.params.n; ++i)
      if ((c.support_mask >> i) & 1) {
        if (!supp.empty()) supp += ' ';
        supp += std::to_string(i + 1);
      }
    out += supp + "," + to_decimal(c.size) + "," + to_decimal(c.degree) + "\n";
  }
  return out;
}

namespace detail {

inline std::string counterexample_text(const AuditRecord& rec) {
  return "q=" + std::to_string(rec.q) + ", n=" + std::to_string(rec.n) + ": printed " +
         to_decimal(rec.printed) + ", oracle " + to_decimal(rec.oracle);
}

}  // namespace detail

inline Json report_to_json(const AuditReport& r) {
  Json j;
  Json grid;
  grid["q"] = r.grid.q_values;
  grid["n"] = r.grid.n_values;
  grid["explicit_cap"] = r.grid.explicit_cap;
  j["grid"] = grid;

  Json records = Json::array();
  for (const AuditRecord& rec : r.records) {
    Json jr;
    jr["formula_id"] = catalog_entry(rec.id).name;
    jr["q"] = rec.q;
    jr["n"] = rec.n;
    jr["printed"] = to_decimal(rec.printed);
    jr["oracle"] = to_decimal(rec.oracle);
    jr["status"] = audit_status_name(rec.status);
    jr["method"] = oracle_method_name(rec.method);
    if (rec.suggested)
      jr["suggested"] = to_decimal(*rec.suggested);
    else
      jr["suggested"] = nullptr;
    records.push_back(jr);
  }
  j["records"] = records;

  Json ids = Json::array();
  for (const IdentityResult& ir : r.identity_results) {
    Json ji;
    ji["name"] = ir.name;
    ji["graph"] = ir.graph;
    ji["holds"] = ir.holds;
    ids.push_back(ji);
  }
  j["identities"] = ids;

  Json summary = Json::array();
  for (const FormulaVerdict& v : r.summary) {
    Json jv;
    jv["formula_id"] = catalog_entry(v.id).name;
    jv["verdict"] = verdict_name(v.verdict);
    if (v.first_counterexample) {
      Json c;
      c["q"] = v.first_counterexample->q;
      c["n"] = v.first_counterexample->n;
      c["printed"] = to_decimal(v.first_counterexample->printed);
      c["oracle"] = to_decimal(v.first_counterexample->oracle);
      jv["first_counterexample"] = c;
    } else {
      jv["first_counterexample"] = nullptr;
    }
    summary.push_back(jv);
  }
  j["summary"] = summary;
  return j;
}

inline std::string report_to_csv(const AuditReport& r) {
  std::string out = "formula_id,q,n,printed,oracle,status,method\n";
  for (const AuditRecord& rec : r.records) {
    out += std::string(catalog_entry(rec.id).name) + "," + std::to_string(rec.q) + "," +
           std::to_string(rec.n) + "," + to_decimal(rec.printed) + "," +
           to_decimal(rec.oracle) + "," + std::string(audit_status_name(rec.status)) + "," +
           std::string(oracle_method_name(rec.method)) + "\n";
  }
  return out;
}

inline std::string report_to_markdown(const AuditReport& r) {
  std::string out = "# Formula audit\n\n";
  out += "Grid: q in {";
  for (std::size_t i = 0; i < r.grid.q_values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(r.grid.q_values[i]);
  }
  out += "}; n in {";
  for (std::size_t i = 0; i < r.grid.n_values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(r.grid.n_values[i]);
  }
  out += "}; explicit cap " + std::to_string(r.grid.explicit_cap) + ".\n\n";

  out += "## Summary\n\n";
  out += "| formula | statement | verdict | first counterexample |\n|---|---|---|---|\n";
  for (const FormulaVerdict& v : r.summary) {
    const FormulaCatalogEntry& e = catalog_entry(v.id);
    out += "| " + std::string(e.name) + " | " + std::string(e.provenance) + " | " +
           std::string(verdict_name(v.verdict)) + " | ";
    if (v.first_counterexample) out += detail::counterexample_text(*v.first_counterexample);
    out += " |\n";
  }

  out += "\n## Records\n\n";
  out += "| formula | q | n | printed | oracle | suggested (derived) | status | method |\n";
  out += "|---|---|---|---|---|---|---|---|\n";
  for (const AuditRecord& rec : r.records) {
    out += "| " + std::string(catalog_entry(rec.id).name) + " | " + std::to_string(rec.q) +
           " | " + std::to_string(rec.n) + " | " + to_decimal(rec.printed) + " | " +
           to_decimal(rec.oracle) + " | " + (rec.suggested ? to_decimal(*rec.suggested) : "") +
           " | " + std::string(audit_status_name(rec.status)) + " | " +
           std::string(oracle_method_name(rec.method)) + " |\n";
  }

  out += "\n## Identity checks\n\n";
  out += "| identity | graph | holds |\n|---|---|---|\n";
  for (const IdentityResult& ir : r.identity_results) {
    out += "| " + ir.name + " | " + ir.graph + " | " + (ir.holds ? "yes" : "NO") + " |\n";
  }
  out +=
      "\nPredicate rows (COR_EQUALITY_THRESHOLD) compare the truth of the two sides of the "
      "stated equivalence on each instance: printed = size attains the threshold, oracle = the "
      "two index values coincide. The suggested column is derived from the support-class "
      "quotient and the degree-transfer identities.\n";
  return out;
}

/// Deterministic serialization of an audit report.
inline std::string render_report(const AuditReport& r, ReportFormat f) {
  switch (f) {
    case ReportFormat::Json: return report_to_json(r).dump(2) + "\n";
    case ReportFormat::Csv: return report_to_csv(r);
    case ReportFormat::Markdown: return report_to_markdown(r);
  }
  throw UnsupportedFormat("unknown report format");
}

inline bool report_has_mismatch(const AuditReport& r) {
  for (const AuditRecord& rec : r.records)
    if (rec.status == AuditStatus::Mismatch) return true;
  return false;
}

}  // namespace nzc
