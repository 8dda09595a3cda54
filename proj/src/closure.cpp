#include "invcover/closure.hpp"

#include "invcover/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace invcover {

namespace {

// C(n, k), saturating at `limit + 1`.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t limit) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > limit) return limit + 1;
  }
  return static_cast<std::size_t>(result);
}

// Appends every union of one k-subset per (orbit, k) group.
void expand(const std::vector<std::pair<const VertexSet *, std::size_t>> &groups, std::size_t at,
            VertexSet &current, std::set<VertexSet> &out) {
  if (at == groups.size()) {
    VertexSet edge = current;
    std::sort(edge.begin(), edge.end());
    out.insert(std::move(edge));
    return;
  }
  const VertexSet &orbit = *groups[at].first;
  const std::size_t k = groups[at].second;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    for (std::size_t i : pick) current.push_back(orbit[i]);
    expand(groups, at + 1, current, out);
    current.resize(current.size() - k);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == orbit.size() - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::map<std::size_t, std::size_t> orbit_profile(const VertexSet &edge, const GroupAction &action) {
  std::map<std::size_t, std::size_t> counts;
  for (Vertex v : edge) ++counts[action.orbit_of(v)];
  return counts;
}

// Per orbit, the largest |e ∩ O| over the edges of h.
std::vector<std::size_t> max_orbit_meet(const Hypergraph &h, const GroupAction &action) {
  std::vector<std::size_t> best(action.orbits().size(), 0);
  for (const auto &e : h.edges()) {
    for (const auto &[orbit, count] : orbit_profile(e, action)) {
      best[orbit] = std::max(best[orbit], count);
    }
  }
  return best;
}

}  // namespace

ClosureResult orbit_closure(const Hypergraph &h, const GroupAction &action, std::size_t cap) {
  if (action.degree() != h.num_vertices()) {
    fail(ErrorCode::InvalidAction, "group action degree differs from the vertex count");
  }
  std::set<VertexSet> closed;
  auto exceeded = [cap] {
    fail(ErrorCode::CapExceeded,
         "orbit closure exceeds cap of " + std::to_string(cap) + " edges");
  };
  for (const auto &e : h.edges()) {
    std::vector<std::pair<const VertexSet *, std::size_t>> groups;
    std::size_t product = 1;
    for (const auto &[orbit, count] : orbit_profile(e, action)) {
      const VertexSet &members = action.orbits()[orbit];
      groups.emplace_back(&members, count);
      const std::size_t ways = binomial_capped(members.size(), count, cap);
      if (ways > cap || product > cap / std::max<std::size_t>(ways, 1)) exceeded();
      product *= ways;
    }
    VertexSet current;
    expand(groups, 0, current, closed);
    if (closed.size() > cap) exceeded();
  }
  std::vector<VertexSet> edges(closed.begin(), closed.end());
  ClosureResult result{Hypergraph(h.ids(), std::move(edges)), 0};
  result.generated_edge_count = result.closed.num_edges() - h.num_edges();
  return result;
}

bool is_orbitally_closed(const Hypergraph &h, const GroupAction &action) {
  return orbit_closure(h, action).closed.num_edges() == h.num_edges();
}

DCoefficient d_coefficient(const Hypergraph &h, const GroupAction &action) {
  DCoefficient d;
  if (h.num_edges() == 0) {
    d.degenerate = true;
    return d;
  }
  d.value = 0;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    for (std::size_t o = 0; o < action.orbits().size(); ++o) {
      const VertexSet &orbit = action.orbits()[o];
      const std::size_t outside = orbit.size() - intersection_size(orbit, h.edge(e));
      Rational value(static_cast<unsigned long>(orbit.size()), static_cast<unsigned long>(outside + 1));
      value.canonicalize();
      if (!d.edge || value > d.value) {
        d.value = value;
        d.edge = e;
        d.orbit = o;
      }
    }
  }
  return d;
}

bool check_star_star(const Hypergraph &closed, const VertexSet &cover, const GroupAction &action,
                     const Hypergraph *original) {
  const std::vector<std::size_t> meet = max_orbit_meet(closed, action);
  if (original != nullptr && max_orbit_meet(*original, action) != meet) {
    fail(ErrorCode::InvariantViolation,
         "orbit intersection maxima differ between the hypergraph and its closure");
  }
  for (std::size_t o = 0; o < action.orbits().size(); ++o) {
    const VertexSet &orbit = action.orbits()[o];
    const std::size_t inside = intersection_size(orbit, cover);
    if (inside == 0) continue;
    const std::size_t outside = orbit.size() - inside;
    if (outside + 1 > meet[o]) return false;
  }
  return true;
}

ClosureCoverResult invariant_cover_via_closure(const Hypergraph &h, const GroupAction &action,
                                               std::size_t cap) {
  if (!is_action_by_automorphisms(h, action)) {
    fail(ErrorCode::InvalidAction, "group generators are not automorphisms of the hypergraph");
  }
  if (!h.coverable()) fail(ErrorCode::Uncoverable, "hypergraph has an empty edge");
  const ClosureResult closure = orbit_closure(h, action, cap);
  const CoverResult x = min_cover(closure.closed);

  ClosureCoverResult result;
  result.cover = orbit_hull(action, x.witness);
  result.closure_cover = x.witness;
  result.audit.closure_cover_size = x.size;
  result.audit.invariant_size = result.cover.size;
  result.audit.d = d_coefficient(h, action).value;
  result.audit.bound_holds =
      Rational(static_cast<unsigned long>(result.cover.size)) <=
      result.audit.d * static_cast<unsigned long>(x.size);
  result.audit.star_star_holds = check_star_star(closure.closed, x.witness, action, &h);
  return result;
}

}  // namespace invcover
