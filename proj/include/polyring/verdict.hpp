#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyring/polynomial.hpp"

namespace polyring {

/// The results that have an executable checker.
enum class ResultId { L1_1, P1_2, P1_3, P2_1, L2_2, P2_3i, P2_3ii, L2_4, L2_5, P2_6fwd, P2_6lift, P2_7, R2_8 };

inline constexpr std::array kAllResults = {
    ResultId::L1_1,   ResultId::P1_2,  ResultId::P1_3,    ResultId::P2_1,     ResultId::L2_2,
    ResultId::P2_3i,  ResultId::P2_3ii, ResultId::L2_4,   ResultId::L2_5,     ResultId::P2_6fwd,
    ResultId::P2_6lift, ResultId::P2_7, ResultId::R2_8,
};

inline std::string_view to_string(ResultId id) noexcept {
  switch (id) {
    case ResultId::L1_1: return "L1.1";
    case ResultId::P1_2: return "P1.2";
    case ResultId::P1_3: return "P1.3";
    case ResultId::P2_1: return "P2.1";
    case ResultId::L2_2: return "L2.2";
    case ResultId::P2_3i: return "P2.3i";
    case ResultId::P2_3ii: return "P2.3ii";
    case ResultId::L2_4: return "L2.4";
    case ResultId::L2_5: return "L2.5";
    case ResultId::P2_6fwd: return "P2.6fwd";
    case ResultId::P2_6lift: return "P2.6lift";
    case ResultId::P2_7: return "P2.7";
    case ResultId::R2_8: return "R2.8";
  }
  return "?";
}

inline std::optional<ResultId> parse_result_id(std::string_view text) noexcept {
  for (ResultId id : kAllResults)
    if (to_string(id) == text) return id;
  return std::nullopt;
}

enum class Outcome { holds, vacuous, violated, unknown, precondition_failed, skipped };

inline std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::vacuous: return "vacuous";
    case Outcome::violated: return "violated";
    case Outcome::unknown: return "unknown";
    case Outcome::precondition_failed: return "precondition-failed";
    case Outcome::skipped: return "skipped";
  }
  return "unknown";
}

enum class WitnessKind { none, polynomial, pair, subset, table, idempotents, element };

inline std::string_view to_string(WitnessKind k) noexcept {
  switch (k) {
    case WitnessKind::none: return "none";
    case WitnessKind::polynomial: return "polynomial";
    case WitnessKind::pair: return "pair";
    case WitnessKind::subset: return "subset";
    case WitnessKind::table: return "table";
    case WitnessKind::idempotents: return "idempotents";
    case WitnessKind::element: return "element";
  }
  return "none";
}

/// Evidence attached to a verdict. `kind` says how `elements` is to be
/// read; a polynomial may accompany any kind and is rendered in the
/// polynomial syntax over its own coefficient ring.
struct Witness {
  WitnessKind kind = WitnessKind::none;
  std::optional<Polynomial> polynomial;
  std::string polynomial_text;
  std::vector<Elem> elements;
  std::vector<std::pair<std::string, std::uint64_t>> values;

  std::optional<std::uint64_t> value(std::string_view name) const {
    for (const auto& [k, v] : values)
      if (k == name) return v;
    return std::nullopt;
  }
};

struct Verdict {
  ResultId id = ResultId::L1_1;
  Outcome outcome = Outcome::unknown;
  Witness witness;
  std::string details;

  /// Holds, possibly vacuously.
  bool holds() const noexcept { return outcome == Outcome::holds || outcome == Outcome::vacuous; }
  bool violated() const noexcept { return outcome == Outcome::violated; }
};

}  // namespace polyring
