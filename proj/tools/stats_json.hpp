#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "tropf5/benchmarks.hpp"
#include "tropf5/run.hpp"

namespace tropf5::cli {

using nlohmann::json;

inline constexpr const char* kStatsSchema = "tropf5-stats/1";

inline json to_json(const DegreeRecord& r) {
  return {{"degree", r.degree},
          {"passes", r.passes},
          {"rows", r.rows},
          {"cols", r.cols},
          {"reductor_rows", r.reductor_rows},
          {"pairs_processed", r.pairs_processed},
          {"generators", r.generators},
          {"pairs_created", r.pairs_created},
          {"rejected_f5_criterion", r.rejected_f5},
          {"rejected_equal_signatures", r.rejected_equal},
          {"rejected_both_in_ideal", r.rejected_both_in_ideal},
          {"zero_reductions", r.zero_reductions},
          {"new_elements", r.new_elements},
          {"cpu_seconds", r.cpu_seconds}};
}

inline json to_json(const F5Stats& s) {
  json degrees = json::array();
  for (const auto& r : s.degrees) degrees.push_back(to_json(r));
  return {{"pairs_created", s.pairs_created},
          {"rejected", {{"f5_criterion", s.rejected_f5},
                        {"equal_signatures", s.rejected_equal},
                        {"both_in_ideal", s.rejected_both_in_ideal}}},
          {"zero_reductions", s.zero_reductions},
          {"matrices", s.matrices},
          {"max_rows", s.max_rows},
          {"max_cols", s.max_cols},
          {"indistinguishable_entries", s.indistinguishable_entries},
          {"precision_zero_rows", s.precision_zero_rows},
          {"notices", s.notices},
          {"degrees", degrees}};
}

inline json to_json(const PhaseTime& t) { return {{"cpu_seconds", t.cpu}, {"wall_seconds", t.wall}}; }

inline json system_json(const SystemFile& sys) {
  std::vector<std::string> weight;
  for (const auto& q : effective_weight(sys)) weight.push_back(q.get_str());
  json field = {{"base", "QQ"}};
  if (sys.field.prime) field["p"] = *sys.field.prime;
  if (sys.field.precision) field["N"] = *sys.field.precision;
  field["mode"] = sys.field.precision ? "capped" : sys.field.prime ? "padic_valuation" : "trivial_valuation";
  return {{"vars", sys.vars},
          {"field", field},
          {"weight", weight},
          {"tiebreak", to_string(sys.tiebreak)},
          {"polys", sys.polys.size()},
          {"text", print_system(sys)}};
}

inline json to_json(const RunResult& r) {
  json out = {{"system", system_json(r.system)}};
  if (r.f5_ran) {
    json basis = json::array();
    for (const auto& b : r.basis)
      basis.push_back({{"signature", b.signature}, {"leading_monomial", b.leading_monomial}, {"degree", b.degree}});
    out["f5"] = {{"time", to_json(r.f5_time)}, {"basis_size", r.basis.size()}, {"stats", to_json(r.stats)},
                 {"basis", basis}};
  }
  if (r.loss) {
    out["precision_loss"] = {{"input_precision", r.system.field.precision ? *r.system.field.precision : 0},
                             {"coefficients", r.loss->count},
                             {"mean", r.loss->mean},
                             {"max", r.loss->max},
                             {"losses", r.loss->losses}};
  }
  if (r.oracle_ran) {
    out["oracle"] = {{"bound", r.oracle_bound},
                     {"time", to_json(r.oracle_time)},
                     {"dims", r.oracle_dims},
                     {"leading_monomials", r.oracle_leading}};
    if (r.regular) out["oracle"]["regular_sequence"] = *r.regular;
  }
  if (r.verify)
    out["verification"] = {{"bound", r.verify->bound},
                           {"checked", r.verify->checked},
                           {"passed", r.verify->passed()},
                           {"uncovered", r.uncovered}};
  return out;
}

inline json to_json(const std::vector<BenchRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json j = {{"system", r.name},  {"nvars", r.nvars},           {"npolys", r.npolys},
              {"status", r.status}, {"cpu_seconds", r.cpu_seconds}, {"wall_seconds", r.wall_seconds},
              {"basis_size", r.basis_size}, {"zero_reductions", r.zero_reductions}};
    if (r.verified) j["verified"] = *r.verified;
    if (!r.message.empty()) j["message"] = r.message;
    out.push_back(j);
  }
  return out;
}

inline json to_json(const PrecisionResult& r) {
  std::vector<std::string> w;
  for (const auto& q : r.config.weight) w.push_back(q.get_str());
  json buckets = json::array();
  for (const auto& b : r.buckets)
    buckets.push_back({{"D", b.bound},
                       {"reps", b.reps},
                       {"failures", b.failures},
                       {"zero_reductions", b.zero_reductions},
                       {"coefficients", b.coefficients},
                       {"mean", b.mean},
                       {"max", b.max}});
  return {{"config", {{"p", r.config.p},
                      {"w", w},
                      {"reps", r.config.reps},
                      {"degrees", std::to_string(r.config.min_degree) + ".." + std::to_string(r.config.max_degree)},
                      {"N", r.config.precision},
                      {"seed", r.config.seed},
                      {"tiebreak", to_string(r.config.tiebreak)}}},
          {"buckets", buckets},
          {"coefficients", r.coefficients},
          {"pooled_mean", r.pooled_mean}};
}

}  // namespace tropf5::cli
