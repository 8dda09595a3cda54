#include "invcover/bounds.hpp"

#include "invcover/error.hpp"
#include "invcover/fractional.hpp"

#include <algorithm>
#include <numeric>

namespace invcover {

namespace {

Rational ratio(std::size_t num, std::size_t den) {
  Rational q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

Rational ratio(std::size_t num, const Rational &den) {
  return Rational(static_cast<unsigned long>(num)) / den;
}

Rational integer(std::size_t n) { return Rational(static_cast<unsigned long>(n)); }

BoundClause le(std::string name, Rational lhs, RationalSqrt2 rhs, bool strict) {
  BoundClause c;
  c.name = std::move(name);
  c.applicable = true;
  c.strict_required = strict;
  c.holds = strict ? RationalSqrt2(lhs) < rhs : RationalSqrt2(lhs) <= rhs;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

BoundClause eq(std::string name, Rational lhs, Rational rhs) {
  BoundClause c;
  c.name = std::move(name);
  c.applicable = true;
  c.relation = Relation::Equal;
  c.holds = lhs == rhs;
  c.lhs = std::move(lhs);
  c.rhs = RationalSqrt2(std::move(rhs));
  return c;
}

BoundClause check(std::string name, bool holds, std::string note = {}) {
  BoundClause c = eq(std::move(name), Rational(holds ? 1 : 0), Rational(1));
  c.reason = std::move(note);
  return c;
}

BoundClause inapplicable(std::string name, std::string reason) {
  BoundClause c;
  c.name = std::move(name);
  c.reason = std::move(reason);
  return c;
}

BoundClause with_reason(BoundClause c, std::string reason) {
  c.reason = std::move(reason);
  return c;
}

struct PartFacts {
  std::size_t k = 0;
  std::size_t rank = 0;
  std::vector<std::size_t> p;
  std::size_t p_sum = 0;
  std::size_t p_max = 0;
  bool all_at_most_one = true;
  bool all_exactly_one = true;
  bool part_holds_edge = false;
};

PartFacts part_facts(const Hypergraph &h, const PartProfile &parts) {
  PartFacts f;
  f.k = parts.size();
  f.rank = rank(h);
  f.p = part_degrees(h, parts);
  f.p_sum = std::accumulate(f.p.begin(), f.p.end(), std::size_t{0});
  f.p_max = f.p.empty() ? 0 : *std::max_element(f.p.begin(), f.p.end());
  f.all_at_most_one = std::all_of(f.p.begin(), f.p.end(), [](std::size_t x) { return x <= 1; });
  f.all_exactly_one = std::all_of(f.p.begin(), f.p.end(), [](std::size_t x) { return x == 1; });
  f.part_holds_edge = some_part_contains_edge(h, parts);
  return f;
}

// max(p_1, ..., p_k, Σp/2)
Rational item_a_constant(const PartFacts &f) {
  return std::max(integer(f.p_max), ratio(f.p_sum, 2));
}

// Item b: (constant, strict).
std::pair<Rational, bool> item_b_constant(const PartFacts &f) {
  if (f.k < f.rank) return {integer(f.rank - 1), true};
  return {(1 - ratio(1, f.k)) * integer(f.rank), false};
}

// Item c, split at k = (rk - 1)·rk.
RationalSqrt2 item_c_constant(const PartFacts &f) {
  const std::size_t r = f.rank;
  const std::size_t k = f.k;
  if (k >= (r - 1) * r) return RationalSqrt2(ratio(r * (k - r + 1), k));
  return RationalSqrt2(ratio(r * k, k + r) + 3, Rational(-2));
}

std::string regime_c(const PartFacts &f) {
  return f.k >= (f.rank - 1) * f.rank ? "k >= (rk-1)*rk" : "k < (rk-1)*rk";
}

std::string regime_b(const PartFacts &f) { return f.k < f.rank ? "k < rk" : "k >= rk"; }

const std::string kNoEdges = "no edges: ratio undefined";

}  // namespace

const char *to_string(BoundsReport::Status status) {
  switch (status) {
    case BoundsReport::Status::Ok: return "ok";
    case BoundsReport::Status::Failed: return "failed";
    case BoundsReport::Status::Uncoverable: return "uncoverable";
    case BoundsReport::Status::InvalidAction: return "invalid-action";
  }
  return "unknown";
}

const BoundClause *BoundsReport::find(const std::string &name) const {
  auto it = std::find_if(clauses.begin(), clauses.end(),
                         [&](const BoundClause &c) { return c.name == name; });
  return it == clauses.end() ? nullptr : &*it;
}

std::vector<std::size_t> part_degrees(const Hypergraph &h, const PartProfile &parts) {
  std::vector<std::size_t> p(parts.size(), 0);
  std::vector<std::size_t> count(parts.size(), 0);
  for (const auto &e : h.edges()) {
    std::fill(count.begin(), count.end(), 0);
    for (Vertex v : e) ++count[parts.part_of(v)];
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::max(p[i], count[i]);
  }
  return p;
}

bool some_part_contains_edge(const Hypergraph &h, const PartProfile &parts) {
  for (const auto &e : h.edges()) {
    if (e.empty()) return true;
    const std::size_t first = parts.part_of(e.front());
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return parts.part_of(v) == first; })) {
      return true;
    }
  }
  return false;
}

std::vector<BoundClause> ahk_clauses(const Hypergraph &h, const PartProfile &parts,
                                     std::size_t tau, const Rational &tau_star) {
  std::vector<BoundClause> out;
  if (h.num_edges() == 0) {
    for (const char *name : {"lovasz", "ahk_a", "ahk_b", "ahk_c"}) {
      out.push_back(inapplicable(name, kNoEdges));
    }
    return out;
  }
  const PartFacts f = part_facts(h, parts);
  const Rational lhs = ratio(tau, tau_star);

  if (f.k < 2) {
    out.push_back(inapplicable("lovasz", "fewer than two parts"));
  } else if (!f.all_at_most_one) {
    out.push_back(inapplicable("lovasz", "some p_i > 1: not r-partite"));
  } else {
    out.push_back(with_reason(le("lovasz", lhs, ratio(f.k, 2), false), "r = k = " + std::to_string(f.k)));
  }

  out.push_back(le("ahk_a", lhs, item_a_constant(f), f.p_sum >= 3));

  if (f.part_holds_edge) {
    out.push_back(inapplicable("ahk_b", "some part contains an edge"));
  } else {
    auto [constant, strict] = item_b_constant(f);
    out.push_back(with_reason(le("ahk_b", lhs, constant, strict), regime_b(f)));
  }

  if (!f.all_exactly_one) {
    out.push_back(inapplicable("ahk_c", "not every p_i equals 1"));
  } else {
    out.push_back(with_reason(le("ahk_c", lhs, item_c_constant(f), false), regime_c(f)));
  }
  return out;
}

std::vector<BoundClause> ahk_report(const Hypergraph &h, const PartProfile &parts) {
  const CoverResult cover = min_cover(h);
  const LpResult lp = tau_star(h);
  return ahk_clauses(h, parts, cover.size, lp.optimum);
}

std::vector<BoundClause> symmetric_clauses(const Hypergraph &h, const PartProfile &parts,
                                           const GroupAction &action, std::size_t tau,
                                           const Rational &tau_star, std::size_t tau_g,
                                           const DCoefficient &d) {
  std::vector<BoundClause> out;
  const PartFacts f = part_facts(h, parts);
  out.push_back(le("kl21", integer(tau_g), integer(tau * f.rank), false));

  static const char *const part_clauses[] = {"sym_ahk_a",  "sym_ahk_a_tau", "sym_ahk_b",
                                             "sym_ahk_b_tau", "sym_ahk_c", "sym_ahk_c_tau",
                                             "sym_lovasz", "dm_bipartite"};
  std::string blocked;
  if (h.num_edges() == 0) {
    blocked = kNoEdges;
  } else if (!preserves_parts(action, parts)) {
    blocked = "action does not preserve parts";
  }
  if (!blocked.empty()) {
    for (const char *name : part_clauses) out.push_back(inapplicable(name, blocked));
    return out;
  }

  const Rational over_star = ratio(tau_g, tau_star);
  const Rational over_tau = ratio(tau_g, tau);

  const Rational a = d.value * item_a_constant(f);
  out.push_back(le("sym_ahk_a", over_star, a, f.p_sum >= 3));
  out.push_back(le("sym_ahk_a_tau", over_tau, a, f.p_sum >= 3));

  if (f.part_holds_edge) {
    out.push_back(inapplicable("sym_ahk_b", "some part contains an edge"));
    out.push_back(inapplicable("sym_ahk_b_tau", "some part contains an edge"));
  } else {
    auto [constant, strict] = item_b_constant(f);
    out.push_back(with_reason(le("sym_ahk_b", over_star, Rational(d.value * constant), strict), regime_b(f)));
    out.push_back(with_reason(le("sym_ahk_b_tau", over_tau, Rational(d.value * constant), strict), regime_b(f)));
  }

  if (!f.all_exactly_one) {
    out.push_back(inapplicable("sym_ahk_c", "not every p_i equals 1"));
    out.push_back(inapplicable("sym_ahk_c_tau", "not every p_i equals 1"));
  } else {
    const RationalSqrt2 c = item_c_constant(f);
    for (auto [name, lhs] : {std::pair{"sym_ahk_c", over_star}, std::pair{"sym_ahk_c_tau", over_tau}}) {
      BoundClause clause = with_reason(le(name, lhs, c, false), regime_c(f));
      if (d.value != 1) {
        clause.holds = false;
        clause.reason = "d = " + to_string(d.value) + " but item-c hypotheses force d = 1";
      }
      out.push_back(std::move(clause));
    }
  }

  if (f.k < 2) {
    out.push_back(inapplicable("sym_lovasz", "fewer than two parts"));
  } else if (!f.all_at_most_one) {
    out.push_back(inapplicable("sym_lovasz", "some p_i > 1: not r-partite"));
  } else {
    out.push_back(with_reason(le("sym_lovasz", over_tau, ratio(f.k, 2), f.k >= 3),
                              "r = k = " + std::to_string(f.k)));
  }

  if (f.k == 2 && f.rank == 2 && f.all_exactly_one) {
    out.push_back(eq("dm_bipartite", integer(tau_g), integer(tau)));
  } else {
    out.push_back(inapplicable("dm_bipartite", "not a bipartite rank-2 instance"));
  }
  return out;
}

std::vector<BoundClause> symmetric_report(const Hypergraph &h, const PartProfile &parts,
                                          const GroupAction &action) {
  const InvariantCoverResult invariant = min_invariant_cover(h, action);
  const CoverResult cover = min_cover(h);
  const LpResult lp = tau_star(h);
  return symmetric_clauses(h, parts, action, cover.size, lp.optimum, invariant.size,
                           d_coefficient(h, action));
}

namespace {

void closure_clauses(const Hypergraph &h, const PartProfile &parts, const GroupAction &action,
                     const Caps &caps, BoundsReport &report) {
  Quantities &q = report.quantities;
  static const char *const names[] = {
      "closure_contains_edges", "closure_idempotent", "closure_rank",
      "closure_tau",            "closure_tau_g",      "closure_tau_star",
      "closure_tau_g_star",     "closure_invariant_cover", "closure_star_star",
      "closure_parts"};
  ClosureResult closure;
  try {
    closure = orbit_closure(h, action, caps.closure);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    for (const char *name : names) report.clauses.push_back(inapplicable(name, e.what()));
    report.notes.push_back(e.what());
    return;
  }
  const Hypergraph &closed = closure.closed;
  q.closure_edges = closed.num_edges();

  const bool contains = std::all_of(h.edges().begin(), h.edges().end(),
                                    [&](const VertexSet &e) { return closed.contains_edge(e); });
  report.clauses.push_back(check("closure_contains_edges", contains));
  report.clauses.push_back(
      check("closure_idempotent", orbit_closure(closed, action, caps.closure).closed == closed));
  report.clauses.push_back(eq("closure_rank", integer(rank(closed)), integer(q.rank)));

  const CoverResult closed_cover = min_cover(closed);
  q.closure_tau = closed_cover.size;
  report.clauses.push_back(le("closure_tau", integer(q.tau), integer(closed_cover.size), false));

  const InvariantCoverResult closed_invariant = min_invariant_cover(closed, action);
  q.closure_tau_g = closed_invariant.size;
  report.clauses.push_back(eq("closure_tau_g", integer(q.tau_g), integer(closed_invariant.size)));

  q.closure_tau_star = tau_star(closed).optimum;
  q.closure_tau_g_star = tau_star_invariant(closed, action).optimum;
  report.clauses.push_back(eq("closure_tau_star", *q.closure_tau_star, q.tau_star));
  report.clauses.push_back(eq("closure_tau_g_star", *q.closure_tau_g_star, q.tau_star));

  const InvariantCoverResult y = orbit_hull(action, closed_cover.witness);
  BoundClause via = le("closure_invariant_cover", integer(y.size),
                       RationalSqrt2(q.d.value * integer(closed_cover.size)), false);
  if (!is_cover(h, y.witness)) {
    via.holds = false;
    via.reason = "orbit hull of the closure cover does not cover the hypergraph";
  }
  report.clauses.push_back(std::move(via));
  report.clauses.push_back(
      check("closure_star_star", check_star_star(closed, closed_cover.witness, action, &h)));

  if (preserves_parts(action, parts)) {
    report.clauses.push_back(
        check("closure_parts", part_degrees(closed, parts) == part_degrees(h, parts)));
  } else {
    report.clauses.push_back(inapplicable("closure_parts", "action does not preserve parts"));
  }
}

Quantities base_quantities(const Hypergraph &h, const PartProfile &parts) {
  Quantities q;
  q.rank = rank(h);
  q.p = part_degrees(h, parts);
  return q;
}

}  // namespace

BoundsReport verify_all(const Hypergraph &h, const PartProfile &parts, const GroupAction &action,
                        const Caps &caps) {
  BoundsReport report;
  report.quantities = base_quantities(h, parts);
  Quantities &q = report.quantities;

  if (!h.coverable()) {
    report.status = BoundsReport::Status::Uncoverable;
    report.notes.push_back("hypergraph has an empty edge");
    return report;
  }

  const CoverResult cover = caps.use_oracle ? brute_force_min_cover(h, caps.oracle) : min_cover(h);
  const LpResult lp = tau_star(h);
  q.tau = cover.size;
  q.tau_star = lp.optimum;
  q.cover_witness = cover.witness;
  report.clauses.push_back(le("tau_star_le_tau", q.tau_star, integer(q.tau), false));
  for (auto &c : ahk_clauses(h, parts, q.tau, q.tau_star)) report.clauses.push_back(std::move(c));

  // Finite trace on a minimum cover plus a minimum fractional cover's support.
  VertexSet keep = cover.witness;
  const VertexSet support = lp.primal.support();
  keep.insert(keep.end(), support.begin(), support.end());
  normalize(keep);
  const Hypergraph trace = finite_trace(h, keep);
  report.clauses.push_back(check(
      "finite_trace", trace.coverable() && min_cover(trace).size == q.tau &&
                          tau_star(trace).optimum == q.tau_star));

  const FractionalCover cut = finite_cut(h, lp.primal);
  report.clauses.push_back(
      check("finite_cut", is_fractional_cover(h, cut) && is_subset(cut.support(), support)));

  if (!is_action_by_automorphisms(h, action)) {
    report.status = BoundsReport::Status::InvalidAction;
    BoundClause c = check("invalid_action", false);
    for (std::size_t i = 0; i < action.generators().size(); ++i) {
      if (action.degree() != h.num_vertices() || !is_automorphism(h, action.generators()[i])) {
        c.reason = "generator " + std::to_string(i) + " is not an automorphism";
        break;
      }
    }
    report.clauses.push_back(std::move(c));
    return report;
  }

  const InvariantCoverResult invariant = caps.use_oracle
                                             ? brute_force_min_invariant_cover(h, action, caps.oracle)
                                             : min_invariant_cover(h, action);
  const LpResult lp_g = tau_star_invariant(h, action);
  q.tau_g = invariant.size;
  q.tau_g_star = lp_g.optimum;
  q.invariant_witness = invariant.witness;
  q.d = d_coefficient(h, action);
  try {
    q.group_order = group_order(action.generators(), h.num_vertices(), caps.group_order);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    report.notes.push_back(e.what());
  }

  report.clauses.push_back(le("tau_le_tau_g", integer(q.tau), integer(q.tau_g), false));
  report.clauses.push_back(eq("invariant_fractional_equality", q.tau_g_star, q.tau_star));

  const FractionalCover mean = mean_cover(lp.primal, action);
  report.clauses.push_back(check("mean_cover", is_fractional_cover(h, mean) &&
                                                   mean.size() <= lp.primal.size()));
  if (q.group_order) {
    const auto elements = enumerate_group(action.generators(), h.num_vertices(), caps.group_order);
    report.clauses.push_back(check("group_mean", group_mean_cover(lp.primal, elements) == mean));
  } else {
    report.clauses.push_back(inapplicable("group_mean", "group order exceeds cap"));
  }

  for (auto &c : symmetric_clauses(h, parts, action, q.tau, q.tau_star, q.tau_g, q.d)) {
    report.clauses.push_back(std::move(c));
  }
  closure_clauses(h, parts, action, caps, report);

  if (std::any_of(report.clauses.begin(), report.clauses.end(),
                  [](const BoundClause &c) { return c.violated(); })) {
    report.status = BoundsReport::Status::Failed;
  }
  return report;
}

}  // namespace invcover
