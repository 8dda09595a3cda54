#include "invcover/report_json.hpp"

#include "invcover/error.hpp"

namespace invcover {

using nlohmann::json;

json rational_json(const Rational &q) {
  return json{{"num", q.get_num().get_str(10)}, {"den", q.get_den().get_str(10)}};
}

Rational rational_from_json(const json &value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (value.is_object() && value.contains("num") && value.contains("den") &&
      value["num"].is_string() && value["den"].is_string()) {
    return parse_rational(value["num"].get<std::string>() + "/" + value["den"].get<std::string>());
  }
  fail(ErrorCode::InvalidArgument, "expected a rational: \"p/q\", an integer or {num, den}");
}

json surd_json(const RationalSqrt2 &x) {
  return json{{"a", rational_json(x.rational_part())}, {"b", rational_json(x.sqrt2_part())}};
}

json clause_json(const BoundClause &c) {
  json out{{"name", c.name}, {"applicable", c.applicable}, {"reason", c.reason}};
  if (c.applicable) {
    out["lhs"] = rational_json(c.lhs);
    out["rhs"] = surd_json(c.rhs);
    out["relation"] = c.relation == Relation::Equal ? "==" : (c.strict_required ? "<" : "<=");
    out["strict_required"] = c.strict_required;
    out["holds"] = c.holds;
  }
  return out;
}

json report_json(const BoundsReport &report, const Hypergraph &h) {
  const Quantities &q = report.quantities;
  json quantities{{"rank", q.rank}, {"k", q.p.size()}, {"p", q.p}};
  if (report.status != BoundsReport::Status::Uncoverable) {
    quantities["tau"] = q.tau;
    quantities["tau_star"] = rational_json(q.tau_star);
    quantities["cover_witness"] = h.names(q.cover_witness);
  }
  if (report.status == BoundsReport::Status::Ok || report.status == BoundsReport::Status::Failed) {
    quantities["tau_g"] = q.tau_g;
    quantities["tau_g_star"] = rational_json(q.tau_g_star);
    quantities["invariant_witness"] = h.names(q.invariant_witness);
    quantities["d"] = rational_json(q.d.value);
    quantities["d_degenerate"] = q.d.degenerate;
    if (q.tau > 0) {
      Rational ratio(static_cast<unsigned long>(q.tau_g), static_cast<unsigned long>(q.tau));
      ratio.canonicalize();
      quantities["tau_g_over_tau"] = rational_json(ratio);
    }
  }
  if (q.group_order) quantities["group_order"] = *q.group_order;
  if (q.closure_edges) quantities["closure_edges"] = *q.closure_edges;
  if (q.closure_tau) quantities["closure_tau"] = *q.closure_tau;
  if (q.closure_tau_g) quantities["closure_tau_g"] = *q.closure_tau_g;
  if (q.closure_tau_star) quantities["closure_tau_star"] = rational_json(*q.closure_tau_star);
  if (q.closure_tau_g_star) quantities["closure_tau_g_star"] = rational_json(*q.closure_tau_g_star);

  json clauses = json::array();
  for (const auto &c : report.clauses) clauses.push_back(clause_json(c));
  return json{{"status", to_string(report.status)},
              {"quantities", std::move(quantities)},
              {"clauses", std::move(clauses)},
              {"notes", report.notes}};
}

json search_config_json(const SearchConfig &cfg) {
  return json{{"seed", std::to_string(cfg.seed)},
              {"budget", cfg.budget},
              {"parts", cfg.parts},
              {"rank", cfg.rank},
              {"part_size", {cfg.part_size_min, cfg.part_size_max}},
              {"group_orders", cfg.group_orders},
              {"density_permille", {cfg.density_permille_min, cfg.density_permille_max}}};
}

json search_json(const SearchRecord &record) {
  json out{{"instances_examined", record.instances_examined}, {"skipped", record.skipped}};
  out["best_ratio"] = record.best_ratio ? rational_json(*record.best_ratio) : json(nullptr);
  out["best_index"] = record.best_index ? json(*record.best_index) : json(nullptr);
  out["best_instance"] =
      record.best_instance ? json::parse(serialize_instance(*record.best_instance)) : json(nullptr);
  json histogram = json::array();
  for (const auto &[ratio, count] : record.histogram) {
    histogram.push_back(json{{"ratio", rational_json(ratio)}, {"count", count}});
  }
  out["histogram"] = std::move(histogram);
  return out;
}

}  // namespace invcover
