#pragma once

// Command-line front end: `report`, `check` and `sweep`.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "polyring/catalog.hpp"
#include "polyring/report.hpp"
#include "polyring/theorems.hpp"

namespace polyring::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kInconclusive = 3 };

inline int exit_code_for(Outcome o) {
  switch (o) {
    case Outcome::violated: return kViolation;
    case Outcome::unknown: return kInconclusive;
    default: return kOk;
  }
}

inline constexpr std::size_t kMaxSweepOrder = 16;

/// Comma-separated element indices; empty text is the empty list.
inline std::vector<Elem> parse_elements(const std::string& text, const FiniteRing& r, std::string_view what) {
  std::vector<Elem> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = token.find_last_not_of(" \t");
    token = token.substr(first, last - first + 1);
    if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9)
      throw Error(ErrorKind::invalid_parameter, std::string(what) + ": '" + token + "' is not an element index");
    const auto v = std::stoull(token);
    if (v >= r.order())
      throw Error(ErrorKind::invalid_parameter, std::string(what) + ": " + token + " is not an element of " + r.label());
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

inline std::string join_elements(const std::vector<Elem>& xs) {
  std::string out;
  for (Elem x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

/// Arguments that re-run the check on the verdict's own witness.
inline std::vector<std::string> recheck_args(const std::string& spec, const Verdict& v, const CheckOptions& opts) {
  std::vector<std::string> args = {"check", spec, std::string(to_string(v.id))};
  const Witness& w = v.witness;
  switch (v.id) {
    case ResultId::L1_1:
      if (w.kind == WitnessKind::pair) args.push_back("--pair=" + join_elements(w.elements));
      break;
    case ResultId::P1_2:
      if (w.kind == WitnessKind::table) args.push_back("--table=" + join_elements(w.elements));
      break;
    case ResultId::P1_3:
    case ResultId::R2_8:
      if (w.kind == WitnessKind::subset) args.push_back("--subset=" + join_elements(w.elements));
      break;
    case ResultId::L2_2:
      if (w.kind == WitnessKind::pair) {
        args.push_back("--b=" + std::to_string(w.elements[0]));
        args.push_back("--c=" + std::to_string(w.elements[1]));
      }
      break;
    case ResultId::P2_1:
    case ResultId::L2_4:
    case ResultId::L2_5:
    case ResultId::P2_6fwd:
    case ResultId::P2_6lift:
    case ResultId::P2_7:
      if (w.polynomial) args.push_back("--poly=" + w.polynomial_text);
      break;
    case ResultId::P2_3i:
    case ResultId::P2_3ii: break;
  }
  const CheckOptions defaults;
  if (opts.function_cap != defaults.function_cap) args.push_back("--cap-functions=" + std::to_string(opts.function_cap));
  if (opts.max_bijection_order != defaults.max_bijection_order)
    args.push_back("--max-bijection-order=" + std::to_string(opts.max_bijection_order));
  if (opts.max_subset_order != defaults.max_subset_order)
    args.push_back("--max-subset-order=" + std::to_string(opts.max_subset_order));
  if (opts.s_max != defaults.s_max) args.push_back("--s-max=" + std::to_string(opts.s_max));
  return args;
}

namespace detail {

struct Common {
  std::string format = "text";
  std::uint64_t cap = kDefaultFunctionCap;
  std::size_t max_bijection_order = kDefaultMaxBijectionOrder;
  std::size_t max_subset_order = kDefaultMaxSubsetOrder;
  std::uint64_t s_max = 5;

  CheckOptions options() const {
    CheckOptions o;
    o.function_cap = cap;
    o.max_bijection_order = max_bijection_order;
    o.max_subset_order = max_subset_order;
    o.s_max = s_max;
    return o;
  }
};

inline void add_caps(CLI::App* cmd, Common& c) {
  cmd->add_option("--cap-functions", c.cap, "Largest number of function tables to store")->check(CLI::PositiveNumber);
  cmd->add_option("--max-bijection-order", c.max_bijection_order, "Largest order for the bijection sweep");
  cmd->add_option("--max-subset-order", c.max_subset_order, "Largest order for subset sweeps")
      ->check(CLI::Range(std::size_t{1}, std::size_t{24}));
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

struct CheckArgs {
  std::string spec;
  std::string id;
  std::optional<std::string> poly, subset, table, pair, into, map;
  std::optional<std::uint64_t> b, c;
};

inline int cmd_report(const std::string& spec, const Common& common, std::ostream& out) {
  const FiniteRing r = ring_from_spec(spec);
  const RingInvariants inv = analyze(r);
  const PolyFunctionSet set = polynomial_function_set(r, common.cap);
  if (common.format == "json") {
    Json j = header_json("report");
    j["ring"] = r.label();
    j["invariants"] = invariants_json(r, inv);
    j["local_factors"] = local_factors_json(r, inv);
    j["polynomial_functions"] = functions_json(set);
    out << j.dump(2) << "\n";
    return kOk;
  }
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "ring: " << r.label() << "\n"
      << "order: " << inv.order << "\n"
      << "commutative: " << yes(inv.is_commutative) << "\n"
      << "unity: " << (r.unity() ? std::to_string(*r.unity()) : std::string("none")) << "\n"
      << "field: " << yes(inv.is_field) << "\n"
      << "local: " << yes(inv.is_local) << "\n"
      << "characteristic: " << inv.characteristic << "\n";
  if (inv.units) out << "units: " << elements_text(inv.units->elements()) << "\n";
  out << "nilpotents: " << elements_text(inv.nilpotents.elements()) << "\n"
      << "idempotents: " << elements_text(inv.idempotents.elements()) << "\n";
  if (inv.jacobson_radical) out << "jacobson radical: " << elements_text(inv.jacobson_radical->elements()) << "\n";
  out << "nilpotency index: " << inv.nilpotency_index << "\n";
  if (inv.unit_group_exponent) out << "unit group exponent: " << *inv.unit_group_exponent << "\n";
  if (inv.residue_field_order) out << "residue field order: " << *inv.residue_field_order << "\n";
  if (inv.is_unital && inv.is_commutative) {
    const auto factors = local_decomposition(r);
    out << "local factors: " << factors.size() << "\n";
    for (const LocalFactor& f : factors) {
      const RingInvariants fi = analyze(f.ring);
      out << "  e=" << f.idempotent << ": order " << f.ring.order() << ", residue field order "
          << fi.residue_field_order.value_or(0) << ", nilpotency index " << fi.nilpotency_index << "\n";
    }
  }
  out << "polynomial functions: " << (set.complete() ? function_count_text(set) : ">= " + std::to_string(set.stored()))
      << (set.complete() ? "" : " (truncated by cap)") << "; stabilization t=" << set.stabilization().preperiod
      << ", p=" << set.stabilization().period << "\n";
  return kOk;
}

inline Verdict run_single(const FiniteRing& r, ResultId id, const CheckArgs& a, const CheckOptions& opts) {
  auto reject = [&](const std::optional<std::string>& flag, std::string_view name) {
    if (flag) throw Error(ErrorKind::invalid_parameter, std::string(name) + " is not used by " + std::string(to_string(id)));
  };
  const bool takes_poly = id == ResultId::P2_1 || id == ResultId::L2_4 || id == ResultId::L2_5 ||
                          id == ResultId::P2_6fwd || id == ResultId::P2_6lift || id == ResultId::P2_7;
  const bool takes_subset = id == ResultId::P1_3 || id == ResultId::R2_8;
  const bool takes_embedding = id == ResultId::P2_1 || id == ResultId::L2_4;
  if (!takes_poly) reject(a.poly, "--poly");
  if (!takes_subset) reject(a.subset, "--subset");
  if (id != ResultId::P1_2) reject(a.table, "--table");
  if (id != ResultId::L1_1) reject(a.pair, "--pair");
  if (!takes_embedding) {
    reject(a.into, "--into");
    reject(a.map, "--map");
  }
  if (id != ResultId::L2_2 && (a.b || a.c))
    throw Error(ErrorKind::invalid_parameter, "--b/--c are not used by " + std::string(to_string(id)));
  if ((a.into || a.map) && !a.poly) throw Error(ErrorKind::invalid_parameter, "--into/--map need --poly");
  if (a.into.has_value() != a.map.has_value()) throw Error(ErrorKind::invalid_parameter, "--into and --map go together");

  switch (id) {
    case ResultId::L1_1:
      if (a.pair) {
        const auto xs = parse_elements(*a.pair, r, "--pair");
        if (xs.size() != 2) throw Error(ErrorKind::invalid_parameter, "--pair needs two elements");
        return check_lemma_1_1_pair(r, xs[0], xs[1]);
      }
      break;
    case ResultId::P1_2:
      if (a.table)
        return check_prop_1_2_table(r, polynomial_function_set(r, opts.function_cap), parse_elements(*a.table, r, "--table"));
      break;
    case ResultId::P1_3:
    case ResultId::R2_8:
      if (a.subset) {
        const SubsetMask s(r, parse_elements(*a.subset, r, "--subset"));
        if (id == ResultId::P1_3) {
          if (!r.is_unital()) return run_check(id, r, opts);
          return check_prop_1_3_subset(r, polynomial_function_set(r, opts.function_cap), s);
        }
        if (!analyze(r).is_local || !r.is_commutative() || !r.is_unital()) return run_check(id, r, opts);
        return check_remark_2_8_subset(r, polynomial_function_set(r, opts.function_cap), s);
      }
      break;
    case ResultId::L2_2:
      if (a.b || a.c) {
        if (!a.b || !a.c) throw Error(ErrorKind::invalid_parameter, "--b and --c go together");
        if (*a.b >= r.order() || *a.c >= r.order()) throw Error(ErrorKind::invalid_parameter, "element out of range");
        return verify_lemma_2_2(r, static_cast<Elem>(*a.b), static_cast<Elem>(*a.c), opts.s_max);
      }
      break;
    case ResultId::P2_1:
    case ResultId::L2_4:
      if (a.poly) {
        if (!r.is_unital() || !r.is_commutative()) return run_check(id, r, opts);
        std::optional<Embedding> emb;
        if (a.into) {
          const FiniteRing big = ring_from_spec(*a.into);
          std::vector<Elem> map;
          for (Elem x : parse_elements(*a.map, big, "--map")) map.push_back(x);
          emb = embed(r, big, std::move(map));
        } else {
          emb = identity_embedding(r);
        }
        const Polynomial f = parse_polynomial(*a.poly, emb->big());
        return id == ResultId::P2_1 ? verify_prop_2_1(*emb, f) : check_lemma_2_4_bound(*emb, f);
      }
      break;
    case ResultId::L2_5:
      if (a.poly) return check_lemma_2_5_bound(r, parse_polynomial(*a.poly, r));
      break;
    case ResultId::P2_6fwd:
      if (a.poly) {
        if (!analyze(r).is_local || !r.is_commutative() || !r.is_unital()) return run_check(id, r, opts);
        return check_prop_2_6_forward(r, parse_polynomial(*a.poly, r));
      }
      break;
    case ResultId::P2_6lift:
      if (a.poly) {
        if (!analyze(r).is_local || !r.is_commutative() || !r.is_unital()) return run_check(id, r, opts);
        const LiftBasis basis = make_lift_basis(r);
        return check_prop_2_6_lift(basis, parse_polynomial(*a.poly, basis.residue.ring));
      }
      break;
    case ResultId::P2_7:
      if (a.poly) return classify_prop_2_7_poly(r, parse_polynomial(*a.poly, r));
      break;
    case ResultId::P2_3i:
    case ResultId::P2_3ii: break;
  }
  return run_check(id, r, opts);
}

inline int cmd_check(const CheckArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
  const auto id = parse_result_id(a.id);
  if (!id) {
    err << "error: unknown result id '" << a.id << "'\n";
    return kUsage;
  }
  const FiniteRing r = ring_from_spec(a.spec);
  const CheckOptions opts = common.options();
  const auto start = std::chrono::steady_clock::now();
  VerdictRecord rec{r.label(), run_single(r, *id, a, opts), 0.0, {}};
  rec.time_ms = elapsed_ms(start);
  rec.recheck = recheck_args(r.label(), rec.verdict, opts);
  if (common.format == "json") {
    Json j = header_json("check");
    j["ring"] = r.label();
    j["invariants"] = invariants_json(r, analyze(r));
    j["verdicts"] = Json::array({verdict_json(rec)});
    out << j.dump(2) << "\n";
  } else {
    out << verdict_text(rec);
  }
  return exit_code_for(rec.verdict.outcome);
}

/// Every applicable checker over the catalog; rings are split across
/// worker threads and rows are sorted by ring name, then checker.
inline std::vector<VerdictRecord> sweep_records(const std::vector<CatalogEntry>& catalog, const CheckOptions& opts,
                                                unsigned jobs) {
  std::vector<std::vector<VerdictRecord>> per_ring(catalog.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i = next++; i < catalog.size(); i = next++) {
      try {
        CheckContext ctx(catalog[i].ring, opts);
        for (ResultId id : kAllResults) {
          if (!applicable(id, ctx.invariants(), opts)) continue;
          const auto start = std::chrono::steady_clock::now();
          VerdictRecord rec{catalog[i].name, run_check(id, ctx), 0.0, {}};
          rec.time_ms = elapsed_ms(start);
          rec.recheck = recheck_args(catalog[i].name, rec.verdict, opts);
          per_ring[i].push_back(std::move(rec));
        }
      } catch (...) {
        const std::lock_guard lock(error_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < std::max(1U, jobs); ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<VerdictRecord> rows;
  for (auto& ring_rows : per_ring)
    for (auto& rec : ring_rows) rows.push_back(std::move(rec));
  std::stable_sort(rows.begin(), rows.end(), [](const VerdictRecord& x, const VerdictRecord& y) {
    if (x.ring != y.ring) return x.ring < y.ring;
    return static_cast<int>(x.verdict.id) < static_cast<int>(y.verdict.id);
  });
  return rows;
}

inline int cmd_sweep(std::size_t max_order, const std::string& path, const Common& common, unsigned jobs,
                     std::ostream& out, std::ostream& err) {
  if (max_order > kMaxSweepOrder) {
    err << "error: --max-order is limited to " << kMaxSweepOrder << "\n";
    return kUsage;
  }
  std::ofstream file(path);
  if (!file) {
    err << "error: io-error: cannot write " << path << "\n";
    return kUsage;
  }
  const auto start = std::chrono::steady_clock::now();
  const CheckOptions opts = common.options();
  const auto catalog = standard_catalog(max_order);
  const std::vector<VerdictRecord> rows = sweep_records(catalog, opts, jobs);

  std::array<std::size_t, 6> counts{};
  for (const VerdictRecord& r : rows) ++counts[static_cast<std::size_t>(r.verdict.outcome)];
  const std::array<Outcome, 6> order = {Outcome::holds,   Outcome::vacuous,             Outcome::violated,
                                        Outcome::unknown, Outcome::precondition_failed, Outcome::skipped};
  if (common.format == "csv") {
    file << kCsvHeader << "\n";
    for (const VerdictRecord& r : rows) file << csv_row(r) << "\n";
  } else {
    Json j = header_json("sweep");
    j["max_order"] = max_order;
    Json rings = Json::array();
    for (const CatalogEntry& e : catalog) rings.push_back(e.name);
    j["rings"] = std::move(rings);
    Json summary = Json::object();
    for (Outcome o : order) summary[std::string(to_string(o))] = counts[static_cast<std::size_t>(o)];
    j["summary"] = std::move(summary);
    Json list = Json::array();
    for (const VerdictRecord& r : rows) list.push_back(verdict_json(r));
    j["verdicts"] = std::move(list);
    file << j.dump(2) << "\n";
  }
  file.close();
  if (!file) {
    err << "error: io-error: failed writing " << path << "\n";
    return kUsage;
  }

  out << "rings: " << catalog.size() << ", rows: " << rows.size();
  for (Outcome o : order) out << ", " << to_string(o) << ": " << counts[static_cast<std::size_t>(o)];
  out << " (" << static_cast<long long>(elapsed_ms(start)) << " ms)\n";
  for (const VerdictRecord& r : rows)
    if (r.verdict.outcome == Outcome::violated) out << "VIOLATED " << r.ring << " " << to_string(r.verdict.id) << ": " << r.verdict.details << "\n";
  if (counts[static_cast<std::size_t>(Outcome::violated)] > 0) return kViolation;
  if (counts[static_cast<std::size_t>(Outcome::unknown)] > 0) return kInconclusive;
  return kOk;
}

}  // namespace detail

/// Runs the CLI on args (without the program name). Library errors are
/// reported on err with their kind and mapped to exit code 2.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite rings, their polynomial functions, and checks of the characterization results", "polyring"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  detail::Common common;
  auto add_format = [&](CLI::App* cmd, std::vector<std::string> choices) {
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember(std::move(choices)));
  };

  std::string report_spec;
  CLI::App* report = app.add_subcommand("report", "Print the invariants of a ring");
  report->add_option("spec", report_spec, "Ring spec, e.g. \"Z/4\" or \"Z/2 x Z/3\"")->required();
  add_format(report, {"text", "json"});
  report->add_option("--cap-functions", common.cap, "Largest number of function tables to store")
      ->check(CLI::PositiveNumber);

  detail::CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "Run one checker on a ring");
  check->add_option("spec", check_args.spec, "Ring spec")->required();
  check->add_option("result-id", check_args.id, "One of L1.1 P1.2 P1.3 P2.1 L2.2 P2.3i P2.3ii L2.4 L2.5 P2.6fwd P2.6lift P2.7 R2.8")
      ->required();
  check->add_option("--poly", check_args.poly, "Polynomial, e.g. \"x^2 + 1\"");
  check->add_option("--subset", check_args.subset, "Comma-separated element indices");
  check->add_option("--table", check_args.table, "Comma-separated bijection values");
  check->add_option("--pair", check_args.pair, "u,s");
  check->add_option("--b", check_args.b, "Element b");
  check->add_option("--c", check_args.c, "Nilpotent element c");
  check->add_option("--s-max", common.s_max, "Largest s tried")->check(CLI::PositiveNumber);
  check->add_option("--into", check_args.into, "Spec of the bigger ring B");
  check->add_option("--map", check_args.map, "Images of the elements of the ring in B");
  add_format(check, {"text", "json"});
  detail::add_caps(check, common);

  std::size_t max_order = 0;
  std::string out_path;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  CLI::App* sweep = app.add_subcommand("sweep", "Run every applicable checker over the catalog");
  sweep->add_option("--max-order", max_order, "Largest ring order")->required();
  sweep->add_option("--out", out_path, "Output file")->required();
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format(sweep, {"json", "csv"});
  detail::add_caps(sweep, common);
  common.format = "text";

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*report) {
      if (common.format != "json") common.format = "text";
      return detail::cmd_report(report_spec, common, out);
    }
    if (*check) return detail::cmd_check(check_args, common, out, err);
    if (*sweep) {
      if (common.format == "text") common.format = "json";
      return detail::cmd_sweep(max_order, out_path, common, jobs, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace polyring::cli
