#include "invcover/fractional.hpp"

#include "invcover/error.hpp"
#include "invcover/lp.hpp"

#include <algorithm>

namespace invcover {

namespace {

void require_unit_interval(const Rational &q) {
  if (sgn(q) < 0 || q > 1) {
    fail(ErrorCode::InvalidArgument, "fractional cover value " + to_string(q) + " lies outside [0, 1]");
  }
}

void require_action(const Hypergraph &h, const GroupAction &action) {
  if (!is_action_by_automorphisms(h, action)) {
    fail(ErrorCode::InvalidAction, "group generators are not automorphisms of the hypergraph");
  }
}

}  // namespace

FractionalCover::FractionalCover(std::vector<Rational> values) : values_(std::move(values)) {
  for (const auto &q : values_) require_unit_interval(q);
}

FractionalCover FractionalCover::indicator(std::size_t n, const VertexSet &set) {
  FractionalCover t(n);
  for (Vertex v : set) t.values_.at(v) = 1;
  return t;
}

void FractionalCover::set(Vertex v, Rational value) {
  require_unit_interval(value);
  values_.at(v) = std::move(value);
}

Rational FractionalCover::size() const {
  Rational total = 0;
  for (const auto &q : values_) total += q;
  return total;
}

VertexSet FractionalCover::support() const {
  VertexSet result;
  for (Vertex v = 0; v < values_.size(); ++v) {
    if (sgn(values_[v]) != 0) result.push_back(v);
  }
  return result;
}

FractionalCover FractionalCover::restricted(const VertexSet &keep) const {
  FractionalCover result(values_.size());
  for (Vertex v : keep) result.values_.at(v) = values_.at(v);
  return result;
}

bool is_fractional_cover(const Hypergraph &h, const FractionalCover &t) {
  if (t.degree() != h.num_vertices()) return false;
  for (const auto &e : h.edges()) {
    Rational sum = 0;
    for (Vertex v : e) sum += t[v];
    if (sum < 1) return false;
  }
  return true;
}

LpResult tau_star(const Hypergraph &h) {
  if (!h.coverable()) fail(ErrorCode::Uncoverable, "hypergraph has an empty edge");
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();

  // Packing side: fractional matching y over edges, one row per vertex.
  lp::PackingProblem problem;
  problem.matrix.assign(n, std::vector<Rational>(m));
  problem.capacity.assign(n, Rational(1));
  problem.objective.assign(m, Rational(1));
  for (std::size_t e = 0; e < m; ++e) {
    for (Vertex v : h.edge(e)) problem.matrix[v][e] = 1;
  }
  lp::Solution solution = lp::solve_packing(problem);

  for (const auto &x : solution.dual) {
    // Any optimal covering solution is bounded by 1 pointwise.
    if (x > 1) fail(ErrorCode::InvariantViolation, "optimal fractional cover exceeds 1");
  }
  LpResult result{solution.value, FractionalCover(std::move(solution.dual)),
                  std::move(solution.primal)};
  if (!certifies_tau_star(h, result)) {
    fail(ErrorCode::InvariantViolation, "fractional cover LP failed its dual certificate");
  }
  return result;
}

LpResult tau_star_invariant(const Hypergraph &h, const GroupAction &action) {
  require_action(h, action);
  if (!h.coverable()) fail(ErrorCode::Uncoverable, "hypergraph has an empty edge");
  const auto &orbits = action.orbits();
  const std::size_t m = h.num_edges();

  lp::PackingProblem problem;
  problem.matrix.assign(orbits.size(), std::vector<Rational>(m));
  problem.objective.assign(m, Rational(1));
  for (const auto &o : orbits) problem.capacity.emplace_back(static_cast<unsigned long>(o.size()));
  for (std::size_t e = 0; e < m; ++e) {
    for (Vertex v : h.edge(e)) problem.matrix[action.orbit_of(v)][e] += 1;
  }
  lp::Solution solution = lp::solve_packing(problem);

  FractionalCover t(h.num_vertices());
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    const Rational &x = solution.dual[action.orbit_of(v)];
    if (x > 1) fail(ErrorCode::InvariantViolation, "optimal orbit value exceeds 1");
    t.set(v, x);
  }
  LpResult result{solution.value, std::move(t), std::move(solution.primal)};
  if (!certifies_tau_star_invariant(h, action, result)) {
    fail(ErrorCode::InvariantViolation, "orbit LP failed its dual certificate");
  }
  return result;
}

bool certifies_tau_star(const Hypergraph &h, const LpResult &result) {
  if (result.dual.size() != h.num_edges()) return false;
  if (!is_fractional_cover(h, result.primal) || result.primal.size() != result.optimum) {
    return false;
  }
  std::vector<Rational> load(h.num_vertices());
  Rational total = 0;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (sgn(result.dual[e]) < 0) return false;
    total += result.dual[e];
    for (Vertex v : h.edge(e)) load[v] += result.dual[e];
  }
  return std::all_of(load.begin(), load.end(), [](const Rational &q) { return q <= 1; }) &&
         total == result.optimum;
}

bool certifies_tau_star_invariant(const Hypergraph &h, const GroupAction &action,
                                  const LpResult &result) {
  if (result.dual.size() != h.num_edges()) return false;
  if (!is_fractional_cover(h, result.primal) || result.primal.size() != result.optimum) {
    return false;
  }
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (result.primal[v] != result.primal[action.orbits()[action.orbit_of(v)].front()]) {
      return false;
    }
  }
  std::vector<Rational> load(action.orbits().size());
  Rational total = 0;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (sgn(result.dual[e]) < 0) return false;
    total += result.dual[e];
    for (Vertex v : h.edge(e)) load[action.orbit_of(v)] += result.dual[e];
  }
  for (std::size_t o = 0; o < load.size(); ++o) {
    if (load[o] > static_cast<unsigned long>(action.orbits()[o].size())) return false;
  }
  return total == result.optimum;
}

FractionalCover mean_cover(const FractionalCover &t, const GroupAction &action) {
  FractionalCover result(t.degree());
  for (const auto &orbit : action.orbits()) {
    Rational sum = 0;
    for (Vertex w : orbit) sum += t[w];
    sum /= static_cast<unsigned long>(orbit.size());
    for (Vertex v : orbit) result.set(v, sum);
  }
  return result;
}

FractionalCover group_mean_cover(const FractionalCover &t,
                                 const std::vector<Permutation> &elements) {
  FractionalCover result(t.degree());
  for (Vertex v = 0; v < t.degree(); ++v) {
    Rational sum = 0;
    for (const auto &g : elements) sum += t[g(v)];
    sum /= static_cast<unsigned long>(elements.size());
    result.set(v, sum);
  }
  return result;
}

namespace {

// Support of the finite cut; every entry of `values` lies in [0, 1].
VertexSet cut_support(const std::vector<VertexSet> &edges, const std::vector<Rational> &values) {
  const std::size_t n = values.size();
  VertexSet keep;
  for (Vertex v = 0; v < n; ++v) {
    if (values[v] == 1) keep.push_back(v);
  }
  std::size_t r = 0;
  std::vector<char> in_edge(n, 0);
  for (const auto &e : edges) {
    r = std::max(r, e.size());
    for (Vertex v : e) in_edge[v] = 1;
  }
  if (r == 0) return keep;

  for (Vertex u = 0; u < n; ++u) {
    const Rational &tu = values[u];
    if (!in_edge[u] || tu >= 1 || tu * static_cast<unsigned long>(r) < 1) continue;

    std::vector<VertexSet> reduced;
    for (const auto &e : edges) {
      if (!std::binary_search(e.begin(), e.end(), u)) continue;
      VertexSet rest;
      std::copy_if(e.begin(), e.end(), std::back_inserter(rest), [u](Vertex v) { return v != u; });
      reduced.push_back(std::move(rest));
    }
    std::sort(reduced.begin(), reduced.end());
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());

    const Rational scale = 1 / (1 - tu);
    std::vector<Rational> scaled(n);
    for (Vertex v = 0; v < n; ++v) {
      if (v == u) continue;
      scaled[v] = values[v] * scale;
      if (scaled[v] > 1) scaled[v] = 1;
    }
    VertexSet sub = cut_support(reduced, scaled);
    keep.push_back(u);
    keep.insert(keep.end(), sub.begin(), sub.end());
  }
  normalize(keep);
  return keep;
}

}  // namespace

FractionalCover finite_cut(const Hypergraph &h, const FractionalCover &t) {
  if (!is_fractional_cover(h, t)) {
    fail(ErrorCode::InvalidArgument, "finite cut requires a fractional cover");
  }
  FractionalCover cut = t.restricted(cut_support(h.edges(), t.values()));
  if (!is_fractional_cover(h, cut)) {
    fail(ErrorCode::InvariantViolation, "finite cut is not a fractional cover");
  }
  return cut;
}

}  // namespace invcover
