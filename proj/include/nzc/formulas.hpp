#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nzc/bigint.hpp"
#include "nzc/errors.hpp"
#include "nzc/indices.hpp"
#include "nzc/space.hpp"

// Catalog of every displayed closed form in the audited source, evaluated
// exactly as printed. Nothing here is simplified or corrected: when a
// display disagrees with the enumeration oracle, that disagreement is the
// audit's finding, so the transcription must stay term-for-term faithful
// (including displays whose value comes out negative).

namespace nzc {

enum class FormulaId {
  OBS1_ORDER,
  OBS1_SIZE,
  THM_M1_GAMMA,
  COR_COM1_GAMMA,
  THM_M1_COMPLEMENT,
  COR_EQUALITY_THRESHOLD,
  THM_F_GAMMA,
  OBS_L_ORDER,
  OBS_L_SIZE,
  THM_M1_LINE,
  OBS_S_ORDER,
  OBS_S_SIZE,
  THM_M1_SUBDIV,
  OBS_T1_ORDER,
  OBS_T1_SIZE,
  THM_M1_T1,
  OBS_T2_ORDER,
  OBS_T2_SIZE,
  THM_M1_T2,
  OBS_PL_ORDER,
  OBS_PL_SIZE,
  THM_M1_PL,
};

inline constexpr int kFormulaCount = 22;

enum class StatementKind { Order, Size, IndexValue, IdentityRhs, Predicate };

struct FormulaCatalogEntry {
  FormulaId id;
  std::string_view name;
  StatementKind kind;
  bool needs_m2;  // the printed statement contains the symbol 2 M2(base graph)
  std::string_view provenance;
};

inline const std::vector<FormulaCatalogEntry>& catalog() {
  static const std::vector<FormulaCatalogEntry> entries = {
      {FormulaId::OBS1_ORDER, "OBS1_ORDER", StatementKind::Order, false,
       "Observation 1, item 1: order of the base graph"},
      {FormulaId::OBS1_SIZE, "OBS1_SIZE", StatementKind::Size, false,
       "Observation 1, item 2: size of the base graph"},
      {FormulaId::THM_M1_GAMMA, "THM_M1_GAMMA", StatementKind::IndexValue, false,
       "Theorem 2: first Zagreb index of the base graph"},
      {FormulaId::COR_COM1_GAMMA, "COR_COM1_GAMMA", StatementKind::IndexValue, false,
       "Corollary 3: first Zagreb coindex of the base graph"},
      {FormulaId::THM_M1_COMPLEMENT, "THM_M1_COMPLEMENT", StatementKind::IndexValue, false,
       "Theorem 4: first Zagreb index of the complement"},
      {FormulaId::COR_EQUALITY_THRESHOLD, "COR_EQUALITY_THRESHOLD", StatementKind::Predicate, false,
       "Corollary 5: equality holds iff the size equals (q^n-1)(q^n-2)/4"},
      {FormulaId::THM_F_GAMMA, "THM_F_GAMMA", StatementKind::IndexValue, false,
       "Theorem 6: forgotten index of the base graph"},
      {FormulaId::OBS_L_ORDER, "OBS_L_ORDER", StatementKind::Order, false,
       "Observation 7: order of the line graph"},
      {FormulaId::OBS_L_SIZE, "OBS_L_SIZE", StatementKind::Size, false,
       "Observation 7: size of the line graph"},
      {FormulaId::THM_M1_LINE, "THM_M1_LINE", StatementKind::IdentityRhs, true,
       "Theorem 8: first Zagreb index of the line graph"},
      {FormulaId::OBS_S_ORDER, "OBS_S_ORDER", StatementKind::Order, false,
       "Observation 9: order of the subdivision graph"},
      {FormulaId::OBS_S_SIZE, "OBS_S_SIZE", StatementKind::Size, false,
       "Observation 9: size of the subdivision graph"},
      {FormulaId::THM_M1_SUBDIV, "THM_M1_SUBDIV", StatementKind::IndexValue, false,
       "Theorem 10: first Zagreb index of the subdivision graph"},
      {FormulaId::OBS_T1_ORDER, "OBS_T1_ORDER", StatementKind::Order, false,
       "Observation 11: order of the vertex-semitotal graph"},
      {FormulaId::OBS_T1_SIZE, "OBS_T1_SIZE", StatementKind::Size, false,
       "Observation 11: size of the vertex-semitotal graph"},
      {FormulaId::THM_M1_T1, "THM_M1_T1", StatementKind::IndexValue, false,
       "Theorem 12: first Zagreb index of the vertex-semitotal graph"},
      {FormulaId::OBS_T2_ORDER, "OBS_T2_ORDER", StatementKind::Order, false,
       "Observation 13: order of the edge-semitotal graph"},
      {FormulaId::OBS_T2_SIZE, "OBS_T2_SIZE", StatementKind::Size, false,
       "Observation 13: size of the edge-semitotal graph"},
      {FormulaId::THM_M1_T2, "THM_M1_T2", StatementKind::IdentityRhs, true,
       "Theorem 14: first Zagreb index of the edge-semitotal graph"},
      {FormulaId::OBS_PL_ORDER, "OBS_PL_ORDER", StatementKind::Order, false,
       "Observation 15: order of the para-line graph"},
      {FormulaId::OBS_PL_SIZE, "OBS_PL_SIZE", StatementKind::Size, false,
       "Observation 15: size of the para-line graph"},
      {FormulaId::THM_M1_PL, "THM_M1_PL", StatementKind::IndexValue, false,
       "Theorem 16: first Zagreb index of the para-line graph"},
  };
  return entries;
}

inline const FormulaCatalogEntry& catalog_entry(FormulaId id) {
  return catalog()[static_cast<std::size_t>(id)];
}

inline FormulaId parse_formula_id(std::string_view name) {
  for (const FormulaCatalogEntry& e : catalog())
    if (e.name == name) return e.id;
  throw ParseError("unknown formula id '" + std::string(name) + "'");
}

namespace detail {

// Printed displays ending in /2 have even numerators for every integral q;
// exact_half refuses anything else.
inline Bigint exact_half(const Bigint& v, const char* what) {
  if (v % 2 != 0) throw Error(std::string("printed display ") + what + " is not divisible by 2");
  return v / 2;
}

}  // namespace detail

/// Value of the printed display for `id` at (q, n), transcribed verbatim.
/// Displays containing the symbolic second Zagreb index of the base graph
/// take it as m2_injection; results may be negative.
inline Bigint eval_formula(FormulaId id, std::uint64_t q_in, std::uint32_t n,
                           const std::optional<Bigint>& m2_injection = std::nullopt) {
  if (q_in < 2 || n < 1) throw Error("eval_formula requires q >= 2, n >= 1");
  const Bigint q = q_in;
  const Bigint qn = bigpow(q, n);                      // q^n
  const Bigint q2n = bigpow(q, 2 * n);                 // q^{2n}
  const Bigint q3n = bigpow(q, 3 * n);                 // q^{3n}
  const Bigint tq = bigpow(2 * q - 1, n);              // (2q-1)^n
  const Bigint bq = bigpow(q * (q + 1) - 1, n);        // (q(q+1)-1)^n
  const Bigint cq = bigpow(q * (q * q + 1) - 1, n);    // (q(q^2+1)-1)^n

  const bool wants_m2 = id == FormulaId::THM_M1_LINE || id == FormulaId::THM_M1_T2;
  if (wants_m2 && !m2_injection.has_value())
    throw MissingSymbolInput(std::string(catalog_entry(id).name) +
                             " needs an injected M2 value for the base graph");

  switch (id) {
    case FormulaId::OBS1_ORDER:
      return qn - 1;
    case FormulaId::OBS1_SIZE:
      return detail::exact_half(q2n - qn + 1 - tq, "OBS1_SIZE");
    case FormulaId::THM_M1_GAMMA:
      return bigpow(qn - 1, 4) + bq - q2n - 2 * (qn - 1) * (qn - tq);
    case FormulaId::COR_COM1_GAMMA:
      return (qn - 2) * (q2n - qn + 1 - tq) + 2 * (qn - 1) * (qn - tq) + q2n - bq -
             bigpow(qn - 1, 4);
    case FormulaId::THM_M1_COMPLEMENT:
      return bigpow(qn - 1, 4) + bq + (qn - 1) * bigpow(qn - 2, 2) -
             2 * (qn - 1) * (qn - tq) - (qn - 2) * (q2n - qn + 1 - tq) - q2n;
    case FormulaId::COR_EQUALITY_THRESHOLD:
      throw Error("COR_EQUALITY_THRESHOLD is a predicate; use corollary_threshold()");
    case FormulaId::THM_F_GAMMA:
    case FormulaId::THM_M1_PL:
      return bigpow(qn - 1, 5) + q3n + 3 * (qn - 1) * (bq - q2n) -
             3 * bigpow(qn - 1, 2) * (qn - tq) - cq;
    case FormulaId::OBS_L_ORDER:
      return detail::exact_half(q2n - qn + 1 - tq, "OBS_L_ORDER");
    case FormulaId::OBS_L_SIZE:
      return detail::exact_half(
          bigpow(qn - 1, 4) + bq + tq + qn - 2 * q2n - 2 * (qn - 1) * (qn - tq) - 1,
          "OBS_L_SIZE");
    case FormulaId::THM_M1_LINE:
      return 2 * *m2_injection + bigpow(qn - 1, 5) + qn * (q2n + qn - 1) +
             3 * (qn - 1) * (bq - q2n) - 3 * bigpow(qn - 1, 2) * (qn - tq) - cq - tq -
             4 * (bigpow(qn - 1, 4) + bq - 2 * (qn - 1) * (qn - tq) - q2n) + 1;
    case FormulaId::OBS_S_ORDER:
    case FormulaId::OBS_T1_ORDER:
    case FormulaId::OBS_T2_ORDER:
      return detail::exact_half(qn * (qn + 1) - tq - 1, "OBS_S_ORDER");
    case FormulaId::OBS_S_SIZE:
      return qn * (qn - 1) - tq + 1;
    case FormulaId::THM_M1_SUBDIV:
      return bigpow(qn - 1, 4) + bq - 2 * (qn - 1) * (qn - tq) - tq - qn + 1;
    case FormulaId::OBS_T1_SIZE:
      return detail::exact_half(3 * (qn * (qn + 1) - tq - 1), "OBS_T1_SIZE");
    case FormulaId::THM_M1_T1:
      return 4 * (bigpow(qn - 1, 4) + bq - 2 * (qn - 1) * (qn - tq) - q2n) + qn * (qn - 1) -
             tq + 1;
    case FormulaId::OBS_T2_SIZE:
      return detail::exact_half(
          bigpow(qn - 1, 4) + bq - 2 * (qn - 1) * (qn - tq) - tq - qn + 1, "OBS_T2_SIZE");
    case FormulaId::THM_M1_T2:
      return 2 * *m2_injection + qn * (qn - 1) + q2n * (qn - 1) + bq -
             (qn - 1) * (qn - tq) * (3 * qn - 1) + 3 * (qn - 1) * (bq - q2n) - cq;
    case FormulaId::OBS_PL_ORDER:
      return qn * (qn + 1) - tq - 1;
    case FormulaId::OBS_PL_SIZE:
      return detail::exact_half(bigpow(qn - 1, 4) + bq - q2n - 2 * (qn - 1) * (qn - tq),
                                "OBS_PL_SIZE");
  }
  throw Error("unknown formula id");
}

enum class Fact { Fact1, Fact2, Fact3, Fact4 };

/// General-graph identities for M1 and its coindex in terms of order,
/// size and M1. Fact1 predicts M1 of the complement; Fact2 predicts the
/// coindex; Fact3's printed right-hand side coincides with Fact2's.
inline Bigint fact_identity(Fact which, const Bigint& n_v, const Bigint& m, const Bigint& m1) {
  switch (which) {
    case Fact::Fact1:
      return m1 + n_v * bigpow(n_v - 1, 2) - 4 * m * (n_v - 1);
    case Fact::Fact2:
    case Fact::Fact3:
      return 2 * m * (n_v - 1) - m1;
    case Fact::Fact4:
      throw Error("Fact 4 is a predicate; use fact4_balanced()");
  }
  throw Error("unknown fact");
}

/// Fact 4's condition: m = (1/2) C(n,2), i.e. 4m = n(n-1).
inline bool fact4_balanced(const Bigint& n_v, const Bigint& m) {
  return 4 * m == n_v * (n_v - 1);
}

struct ThresholdResult {
  Rational threshold;
  bool satisfied;  // the base graph's actual size equals the threshold
};

/// Corollary 5's condition value (q^n-1)(q^n-2)/4 as an exact rational,
/// and whether the actual edge count attains it (computed via the
/// quotient, so this works at any scale).
inline ThresholdResult corollary_threshold(std::uint64_t q, std::uint32_t n) {
  if (q < 2 || n < 1) throw Error("corollary_threshold requires q >= 2, n >= 1");
  const Bigint qn = bigpow(Bigint(q), n);
  const Rational threshold = Rational((qn - 1) * (qn - 2), 4);
  const IndexBundle qb = bundle_from_quotient(build_quotient(make_space_params(q, n)));
  return ThresholdResult{threshold, Rational(qb.edge_count) == threshold};
}

}  // namespace nzc
