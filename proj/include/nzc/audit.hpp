#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "nzc/bigint.hpp"
#include "nzc/errors.hpp"
#include "nzc/formulas.hpp"
#include "nzc/graph.hpp"
#include "nzc/indices.hpp"
#include "nzc/space.hpp"
#include "nzc/transforms.hpp"

namespace nzc {

struct GridSpec {
  std::vector<std::uint64_t> q_values;
  std::vector<std::uint32_t> n_values;
  std::uint64_t explicit_cap = kDefaultExplicitCap;
};

enum class AuditStatus { Match, Mismatch, Skipped };
enum class OracleMethod { Explicit, Quotient };
enum class Verdict { ConfirmedOnGrid, Refuted, Untested };

inline std::string_view audit_status_name(AuditStatus s) {
  switch (s) {
    case AuditStatus::Match: return "MATCH";
    case AuditStatus::Mismatch: return "MISMATCH";
    case AuditStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

inline std::string_view oracle_method_name(OracleMethod m) {
  return m == OracleMethod::Explicit ? "explicit" : "quotient";
}

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ConfirmedOnGrid: return "CONFIRMED-on-grid";
    case Verdict::Refuted: return "REFUTED";
    case Verdict::Untested: return "UNTESTED";
  }
  return "?";
}

// One printed-vs-oracle comparison. For the predicate entry the two value
// columns carry the truth of the printed condition's two sides as 0/1:
// `printed` is the right side (edge count attains the threshold), `oracle`
// the left side (the two index values coincide); the record matches when
// the stated equivalence holds on the instance. `suggested` is the
// artifact-derived value computed from the quotient classes and the
// degree-transfer identities, never taken from the audited source.
struct AuditRecord {
  FormulaId id;
  std::uint64_t q;
  std::uint32_t n;
  Bigint printed;
  Bigint oracle;
  AuditStatus status;
  OracleMethod method;
  std::optional<Bigint> suggested;
};

struct IdentityResult {
  std::string name;
  std::string graph;
  bool holds;
};

struct FormulaVerdict {
  FormulaId id;
  Verdict verdict;
  std::optional<AuditRecord> first_counterexample;
};

struct AuditReport {
  GridSpec grid;
  std::vector<AuditRecord> records;
  std::vector<IdentityResult> identity_results;
  std::vector<FormulaVerdict> summary;
};

/// Checks the degree-transfer consequences and the complement/coindex
/// identities on one concrete graph, computing both sides from scratch.
/// These hold for arbitrary graphs; a failure is an implementation bug.
inline std::vector<std::pair<std::string, bool>> verify_structural_identities(const Graph& g) {
  std::vector<std::pair<std::string, bool>> out;
  const IndexBundle b = bundle(g);
  const Bigint& nv = b.vertex_count;
  const Bigint& m = b.edge_count;

  out.emplace_back("M1(S) = M1 + 4m", m1(subdivision(g)) == b.m1 + 4 * m);
  out.emplace_back("M1(T1) = 4 M1 + 4m", m1(vertex_semitotal(g)) == 4 * b.m1 + 4 * m);
  out.emplace_back("M1(T2) = M1 + F + 2 M2",
                   m1(edge_semitotal(g)) == b.m1 + b.forgotten + 2 * b.m2);
  out.emplace_back("M1(PL) = F", m1(para_line(g)) == b.forgotten);
  out.emplace_back("M1(L) = F + 2 M2 - 4 M1 + 4m",
                   m1(line_graph(g)) == b.forgotten + 2 * b.m2 - 4 * b.m1 + 4 * m);

  const Graph comp = complement(g);
  const Bigint comp_m1 = m1(comp);
  out.emplace_back("Fact 1: M1(complement)",
                   comp_m1 == fact_identity(Fact::Fact1, nv, m, b.m1));
  out.emplace_back("Fact 2: co-M1", b.co_m1 == fact_identity(Fact::Fact2, nv, m, b.m1));
  out.emplace_back("Fact 3: co-M1(complement) = co-M1",
                   m1_coindex(comp) == fact_identity(Fact::Fact3, nv, m, b.m1));
  out.emplace_back("Fact 4: M1 = M1(complement) iff 4m = n(n-1)",
                   (b.m1 == comp_m1) == fact4_balanced(nv, m));
  return out;
}

namespace detail {

// Everything the record set needs about one grid point, by either method.
struct PointOracle {
  OracleMethod method;
  IndexBundle base;        // the nonzero-component graph itself
  Bigint complement_m1;
  Bigint order_s, size_s, m1_s;
  Bigint order_l, size_l, m1_l;
  Bigint order_t1, size_t1, m1_t1;
  Bigint order_t2, size_t2, m1_t2;
  Bigint order_pl, size_pl, m1_pl;
  bool quotient_equivalence = true;  // explicit method only
  std::vector<std::pair<std::string, bool>> identities;  // explicit method only
};

// Values every mismatch suggestion is derived from: the quotient bundle
// plus the degree-transfer identities. At over-cap points this same set
// serves as the oracle.
struct DerivedValues {
  Bigint complement_m1;
  Bigint order_s, size_s, m1_s;
  Bigint order_l, size_l, m1_l;
  Bigint order_t1, size_t1, m1_t1;
  Bigint order_t2, size_t2, m1_t2;
  Bigint order_pl, size_pl, m1_pl;
};

inline DerivedValues derive_from_quotient(const SupportQuotient& sq, const IndexBundle& qb) {
  DerivedValues d;
  const Bigint& nv = qb.vertex_count;
  const Bigint& m = qb.edge_count;
  d.complement_m1 = 0;
  for (const QuotientClass& c : sq.classes) {
    const Bigint cd = nv - 1 - c.degree;  // complement degree of the class
    d.complement_m1 += c.size * cd * cd;
  }
  d.order_s = nv + m;
  d.size_s = 2 * m;
  d.m1_s = qb.m1 + 4 * m;
  d.order_l = m;
  d.size_l = qb.m1 / 2 - m;
  d.m1_l = qb.forgotten + 2 * qb.m2 - 4 * qb.m1 + 4 * m;
  d.order_t1 = nv + m;
  d.size_t1 = 3 * m;
  d.m1_t1 = 4 * qb.m1 + 4 * m;
  d.order_t2 = nv + m;
  d.size_t2 = 2 * m + d.size_l;
  d.m1_t2 = qb.m1 + qb.forgotten + 2 * qb.m2;
  d.order_pl = 2 * m;
  d.size_pl = qb.m1 / 2;
  d.m1_pl = qb.forgotten;
  return d;
}

inline PointOracle compute_point(std::uint64_t q, std::uint32_t n, std::uint64_t cap,
                                 const IndexBundle& qb, const DerivedValues& dv) {
  const SpaceParams params = make_space_params(q, n);
  PointOracle po;
  const Bigint order = bigpow(Bigint(q), n) - 1;
  if (order <= cap) {
    po.method = OracleMethod::Explicit;
    const Graph g = build_explicit(params, cap);
    po.base = bundle(g);
    po.quotient_equivalence = (po.base == qb);
    po.complement_m1 = m1(complement(g));
    const Graph s = subdivision(g);
    po.order_s = s.vertex_count();
    po.size_s = s.edge_count();
    po.m1_s = m1(s);
    const Graph l = line_graph(g);
    po.order_l = l.vertex_count();
    po.size_l = l.edge_count();
    po.m1_l = m1(l);
    const Graph t1 = vertex_semitotal(g);
    po.order_t1 = t1.vertex_count();
    po.size_t1 = t1.edge_count();
    po.m1_t1 = m1(t1);
    const Graph t2 = edge_semitotal(g);
    po.order_t2 = t2.vertex_count();
    po.size_t2 = t2.edge_count();
    po.m1_t2 = m1(t2);
    const Graph pl = para_line(g);
    po.order_pl = pl.vertex_count();
    po.size_pl = pl.edge_count();
    po.m1_pl = m1(pl);
    po.identities = verify_structural_identities(g);
  } else {
    po.method = OracleMethod::Quotient;
    po.base = qb;
    po.complement_m1 = dv.complement_m1;
    po.order_s = dv.order_s; po.size_s = dv.size_s; po.m1_s = dv.m1_s;
    po.order_l = dv.order_l; po.size_l = dv.size_l; po.m1_l = dv.m1_l;
    po.order_t1 = dv.order_t1; po.size_t1 = dv.size_t1; po.m1_t1 = dv.m1_t1;
    po.order_t2 = dv.order_t2; po.size_t2 = dv.size_t2; po.m1_t2 = dv.m1_t2;
    po.order_pl = dv.order_pl; po.size_pl = dv.size_pl; po.m1_pl = dv.m1_pl;
  }
  return po;
}

struct PointResult {
  std::vector<AuditRecord> records;
  std::vector<IdentityResult> identities;
};

inline PointResult audit_point(std::uint64_t q, std::uint32_t n, std::uint64_t cap) {
  const SupportQuotient sq = build_quotient(make_space_params(q, n));
  const IndexBundle qb = bundle_from_quotient(sq);
  const DerivedValues dv = derive_from_quotient(sq, qb);
  const PointOracle po = compute_point(q, n, cap, qb, dv);

  PointResult out;
  auto record = [&](FormulaId id, const Bigint& oracle, const Bigint& suggested) {
    const bool needs_m2 = catalog_entry(id).needs_m2;
    const Bigint printed =
        needs_m2 ? eval_formula(id, q, n, po.base.m2) : eval_formula(id, q, n);
    out.records.push_back(AuditRecord{
        id, q, n, printed, oracle,
        printed == oracle ? AuditStatus::Match : AuditStatus::Mismatch, po.method, suggested});
  };

  record(FormulaId::OBS1_ORDER, po.base.vertex_count, qb.vertex_count);
  record(FormulaId::OBS1_SIZE, po.base.edge_count, qb.edge_count);
  record(FormulaId::THM_M1_GAMMA, po.base.m1, qb.m1);
  record(FormulaId::COR_COM1_GAMMA, po.base.co_m1, qb.co_m1);
  record(FormulaId::THM_M1_COMPLEMENT, po.complement_m1, dv.complement_m1);
  record(FormulaId::THM_F_GAMMA, po.base.forgotten, qb.forgotten);
  record(FormulaId::OBS_L_ORDER, po.order_l, dv.order_l);
  record(FormulaId::OBS_L_SIZE, po.size_l, dv.size_l);
  record(FormulaId::THM_M1_LINE, po.m1_l, dv.m1_l);
  record(FormulaId::OBS_S_ORDER, po.order_s, dv.order_s);
  record(FormulaId::OBS_S_SIZE, po.size_s, dv.size_s);
  record(FormulaId::THM_M1_SUBDIV, po.m1_s, dv.m1_s);
  record(FormulaId::OBS_T1_ORDER, po.order_t1, dv.order_t1);
  record(FormulaId::OBS_T1_SIZE, po.size_t1, dv.size_t1);
  record(FormulaId::THM_M1_T1, po.m1_t1, dv.m1_t1);
  record(FormulaId::OBS_T2_ORDER, po.order_t2, dv.order_t2);
  record(FormulaId::OBS_T2_SIZE, po.size_t2, dv.size_t2);
  record(FormulaId::THM_M1_T2, po.m1_t2, dv.m1_t2);
  record(FormulaId::OBS_PL_ORDER, po.order_pl, dv.order_pl);
  record(FormulaId::OBS_PL_SIZE, po.size_pl, dv.size_pl);
  record(FormulaId::THM_M1_PL, po.m1_pl, dv.m1_pl);

  // Predicate entry: both sides of the stated equivalence on this instance.
  {
    const ThresholdResult th = corollary_threshold(q, n);
    const bool rhs = th.satisfied;
    const bool lhs = po.complement_m1 == po.base.co_m1;
    out.records.push_back(AuditRecord{FormulaId::COR_EQUALITY_THRESHOLD, q, n,
                                      Bigint(rhs ? 1 : 0), Bigint(lhs ? 1 : 0),
                                      lhs == rhs ? AuditStatus::Match : AuditStatus::Mismatch,
                                      po.method, std::nullopt});
  }

  const std::string desc =
      "Gamma(q=" + std::to_string(q) + ",n=" + std::to_string(n) + ")";
  if (po.method == OracleMethod::Explicit) {
    out.identities.push_back(
        IdentityResult{"quotient-equivalence", desc, po.quotient_equivalence});
    for (auto& [name, holds] : po.identities)
      out.identities.push_back(IdentityResult{name, desc, holds});
  }
  return out;
}

}  // namespace detail

/// Runs the full differential audit over the grid. Grid points are
/// independent and may be computed by several workers; the assembled
/// report is identical for any worker count.
inline AuditReport audit_grid(const GridSpec& spec, unsigned workers = 1) {
  if (spec.q_values.empty() || spec.n_values.empty())
    throw EmptyGrid("audit grid must contain at least one (q, n) point");

  std::vector<std::pair<std::uint64_t, std::uint32_t>> points;
  for (std::uint64_t q : spec.q_values)
    for (std::uint32_t n : spec.n_values) points.emplace_back(q, n);

  std::vector<detail::PointResult> results(points.size());
  if (workers == 0) workers = std::thread::hardware_concurrency();
  if (workers <= 1 || points.size() == 1) {
    for (std::size_t i = 0; i < points.size(); ++i)
      results[i] = detail::audit_point(points[i].first, points[i].second, spec.explicit_cap);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= points.size()) return;
        try {
          results[i] =
              detail::audit_point(points[i].first, points[i].second, spec.explicit_cap);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    const unsigned count = std::min<std::size_t>(workers, points.size());
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  AuditReport report;
  report.grid = spec;
  for (detail::PointResult& r : results) {
    for (AuditRecord& rec : r.records) report.records.push_back(std::move(rec));
    for (IdentityResult& id : r.identities) report.identity_results.push_back(std::move(id));
  }
  // Canonical record order: (formula_id, q, n).
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const AuditRecord& a, const AuditRecord& b) {
                     if (a.id != b.id) return a.id < b.id;
                     if (a.q != b.q) return a.q < b.q;
                     return a.n < b.n;
                   });

  for (const FormulaCatalogEntry& entry : catalog()) {
    FormulaVerdict v{entry.id, Verdict::Untested, std::nullopt};
    std::size_t tested = 0;
    for (const AuditRecord& rec : report.records) {
      if (rec.id != entry.id || rec.status == AuditStatus::Skipped) continue;
      ++tested;
      if (rec.status == AuditStatus::Mismatch && !v.first_counterexample)
        v.first_counterexample = rec;
    }
    if (v.first_counterexample)
      v.verdict = Verdict::Refuted;
    else if (tested >= 3)
      v.verdict = Verdict::ConfirmedOnGrid;
    report.summary.push_back(std::move(v));
  }
  return report;
}

}  // namespace nzc
