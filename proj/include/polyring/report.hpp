#pragma once

// JSON, CSV and text rendering of invariants and verdicts.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyring/analysis.hpp"
#include "polyring/polyfun.hpp"
#include "polyring/verdict.hpp"

namespace polyring {

inline constexpr std::string_view kToolName = "polyring";
inline constexpr std::string_view kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// One checker run, as reported.
struct VerdictRecord {
  std::string ring;
  Verdict verdict;
  double time_ms = 0.0;
  /// Arguments to `polyring` that re-run this check on its witness.
  std::vector<std::string> recheck;
};

inline Json elements_json(const std::vector<Elem>& xs) {
  Json a = Json::array();
  for (Elem x : xs) a.push_back(x);
  return a;
}

inline Json mask_json(const SubsetMask& s) { return elements_json(s.elements()); }

inline Json witness_json(const Witness& w) {
  Json j;
  j["kind"] = std::string(to_string(w.kind));
  j["polynomial"] = w.polynomial ? Json(w.polynomial_text) : Json(nullptr);
  j["elements"] = elements_json(w.elements);
  Json values = Json::object();
  for (const auto& [k, v] : w.values) values[k] = v;
  j["values"] = std::move(values);
  return j;
}

inline Json verdict_json(const VerdictRecord& r) {
  Json j;
  j["ring"] = r.ring;
  j["result_id"] = std::string(to_string(r.verdict.id));
  j["outcome"] = std::string(to_string(r.verdict.outcome));
  j["holds"] = r.verdict.holds();
  j["witness"] = witness_json(r.verdict.witness);
  j["details"] = r.verdict.details;
  j["time_ms"] = r.time_ms;
  j["recheck"] = r.recheck;
  return j;
}

/// Size of the function set as text: a decimal count, or q^q when it does
/// not fit in 64 bits.
inline std::string function_count_text(const PolyFunctionSet& set) {
  if (const auto n = set.size()) return std::to_string(*n);
  const std::string q = std::to_string(set.ring().order());
  return q + "^" + q;
}

inline Json invariants_json(const FiniteRing& r, const RingInvariants& inv) {
  Json j;
  j["order"] = inv.order;
  j["commutative"] = inv.is_commutative;
  j["unital"] = inv.is_unital;
  j["unity"] = r.unity() ? Json(*r.unity()) : Json(nullptr);
  j["field"] = inv.is_field;
  j["local"] = inv.is_local;
  j["zero_dimensional"] = inv.zero_dimensional;
  j["characteristic"] = inv.characteristic;
  j["units"] = inv.units ? mask_json(*inv.units) : Json(nullptr);
  j["nilpotents"] = mask_json(inv.nilpotents);
  j["idempotents"] = mask_json(inv.idempotents);
  j["jacobson_radical"] = inv.jacobson_radical ? mask_json(*inv.jacobson_radical) : Json(nullptr);
  j["nilpotency_index"] = inv.nilpotency_index;
  j["unit_group_exponent"] = inv.unit_group_exponent ? Json(*inv.unit_group_exponent) : Json(nullptr);
  j["residue_field_order"] = inv.residue_field_order ? Json(*inv.residue_field_order) : Json(nullptr);
  j["spec_size"] = inv.spec_size ? Json(*inv.spec_size) : Json(nullptr);
  return j;
}

inline Json local_factors_json(const FiniteRing& r, const RingInvariants& inv) {
  Json a = Json::array();
  if (!inv.is_unital || !inv.is_commutative) return a;
  for (const LocalFactor& f : local_decomposition(r)) {
    const RingInvariants fi = analyze(f.ring);
    a.push_back(Json{{"idempotent", f.idempotent},
                     {"order", f.ring.order()},
                     {"elements", elements_json(f.elements)},
                     {"residue_field_order", fi.residue_field_order ? Json(*fi.residue_field_order) : Json(nullptr)},
                     {"nilpotency_index", fi.nilpotency_index}});
  }
  return a;
}

inline Json functions_json(const PolyFunctionSet& set) {
  Json j;
  j["count"] = set.size() ? Json(*set.size()) : Json(nullptr);
  j["count_text"] = set.complete() ? function_count_text(set) : ">= " + std::to_string(set.stored());
  j["complete"] = set.complete();
  j["stabilization"] = Json{{"preperiod", set.stabilization().preperiod}, {"period", set.stabilization().period}};
  return j;
}

inline Json header_json(std::string_view kind) {
  Json j;
  j["tool"] = std::string(kToolName);
  j["version"] = std::string(kToolVersion);
  j["kind"] = std::string(kind);
  return j;
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr std::string_view kCsvHeader =
    "ring,result_id,outcome,holds,witness_kind,witness_polynomial,witness_elements,time_ms,details,recheck";

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Joins arguments with spaces, single-quoting any that need it for a POSIX shell.
inline std::string shell_join(const std::vector<std::string>& args) {
  std::string out;
  for (const std::string& a : args) {
    if (!out.empty()) out += ' ';
    if (!a.empty() && a.find_first_not_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789/._-=,") ==
                          std::string::npos) {
      out += a;
      continue;
    }
    out += '\'';
    for (char c : a) {
      if (c == '\'') out += "'\\''";
      else out += c;
    }
    out += '\'';
  }
  return out;
}

inline std::string csv_row(const VerdictRecord& r) {
  std::string elements;
  for (Elem x : r.verdict.witness.elements) elements += (elements.empty() ? "" : " ") + std::to_string(x);
  std::ostringstream time;
  time.precision(3);
  time << std::fixed << r.time_ms;
  const std::vector<std::string> fields = {
      r.ring,
      std::string(to_string(r.verdict.id)),
      std::string(to_string(r.verdict.outcome)),
      r.verdict.holds() ? "true" : "false",
      std::string(to_string(r.verdict.witness.kind)),
      r.verdict.witness.polynomial ? r.verdict.witness.polynomial_text : "",
      elements,
      time.str(),
      r.verdict.details,
      shell_join(r.recheck),
  };
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Text

inline std::string elements_text(const std::vector<Elem>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
  return out + "}";
}

inline std::string verdict_text(const VerdictRecord& r) {
  const Verdict& v = r.verdict;
  std::string out = std::string(to_string(v.id)) + " on " + r.ring + ": " + std::string(to_string(v.outcome)) + "\n";
  out += "  " + v.details + "\n";
  if (v.witness.polynomial) out += "  polynomial: " + v.witness.polynomial_text + "\n";
  if (!v.witness.elements.empty())
    out += "  " + std::string(v.witness.kind == WitnessKind::polynomial ? "elements" : to_string(v.witness.kind)) + ": " +
           elements_text(v.witness.elements) + "\n";
  for (const auto& [k, value] : v.witness.values) out += "  " + k + " = " + std::to_string(value) + "\n";
  out += "  recheck: polyring " + shell_join(r.recheck) + "\n";
  return out;
}

}  // namespace polyring
