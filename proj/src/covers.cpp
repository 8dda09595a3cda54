#include "invcover/covers.hpp"

#include "invcover/error.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace invcover {

bool is_cover(const Hypergraph &h, const VertexSet &set) {
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [&](const VertexSet &e) { return intersects(e, set); });
}

namespace {

// Exact minimum-weight set cover. Elements are `rows`, each listing the
// candidate sets (columns) that cover it; column j costs weights[j].
// Branches on the first uncovered row, columns in ascending order, and
// excludes earlier siblings so no subset is visited twice. Pruning uses a
// packing of rows with pairwise disjoint available columns: each packed row
// needs its own column, costing at least its cheapest available one.
class WeightedCoverSearch {
 public:
  WeightedCoverSearch(std::vector<VertexSet> rows, std::vector<std::size_t> weights)
      : rows_(std::move(rows)),
        weights_(std::move(weights)),
        row_hits_(rows_.size(), 0),
        chosen_(weights_.size(), 0),
        excluded_(weights_.size(), 0),
        mark_(weights_.size(), 0),
        columns_(weights_.size()) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (Vertex c : rows_[r]) columns_[c].push_back(r);
    }
  }

  // Returns (cost, chosen columns).
  std::pair<std::size_t, VertexSet> solve() {
    best_cost_ = std::numeric_limits<std::size_t>::max();
    branch(0);
    return {best_cost_, best_};
  }

 private:
  void choose(Vertex c, int delta) {
    chosen_[c] = delta > 0;
    for (std::size_t r : columns_[c]) row_hits_[r] += delta;
  }

  // Lower bound on additional cost; max() means some row cannot be covered.
  std::size_t packing_bound() {
    std::fill(mark_.begin(), mark_.end(), 0);
    std::size_t bound = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (row_hits_[r] > 0) continue;
      std::size_t cheapest = std::numeric_limits<std::size_t>::max();
      bool clash = false;
      for (Vertex c : rows_[r]) {
        if (excluded_[c]) continue;
        if (mark_[c]) clash = true;
        cheapest = std::min(cheapest, weights_[c]);
      }
      if (cheapest == std::numeric_limits<std::size_t>::max()) {
        return std::numeric_limits<std::size_t>::max();
      }
      if (clash) continue;
      for (Vertex c : rows_[r]) {
        if (!excluded_[c]) mark_[c] = 1;
      }
      bound += cheapest;
    }
    return bound;
  }

  void branch(std::size_t cost) {
    const std::size_t bound = packing_bound();
    if (bound == std::numeric_limits<std::size_t>::max()) return;
    if (cost + bound >= best_cost_) return;

    auto open = std::find(row_hits_.begin(), row_hits_.end(), 0);
    if (open == row_hits_.end()) {
      best_cost_ = cost;
      best_.clear();
      for (Vertex c = 0; c < chosen_.size(); ++c) {
        if (chosen_[c]) best_.push_back(c);
      }
      return;
    }
    const VertexSet &row = rows_[static_cast<std::size_t>(open - row_hits_.begin())];
    VertexSet newly_excluded;
    for (Vertex c : row) {
      if (excluded_[c]) continue;
      choose(c, +1);
      branch(cost + weights_[c]);
      choose(c, -1);
      excluded_[c] = 1;
      newly_excluded.push_back(c);
    }
    for (Vertex c : newly_excluded) excluded_[c] = 0;
  }

  std::vector<VertexSet> rows_;
  std::vector<std::size_t> weights_;
  std::vector<int> row_hits_;
  std::vector<char> chosen_;
  std::vector<char> excluded_;
  std::vector<char> mark_;
  std::vector<std::vector<std::size_t>> columns_;
  std::size_t best_cost_ = 0;
  VertexSet best_;
};

void require_coverable(const Hypergraph &h) {
  if (!h.coverable()) fail(ErrorCode::Uncoverable, "hypergraph has an empty edge");
}

void require_action(const Hypergraph &h, const GroupAction &action) {
  if (action.degree() != h.num_vertices()) {
    fail(ErrorCode::InvalidAction, "group action degree differs from the vertex count");
  }
  for (std::size_t i = 0; i < action.generators().size(); ++i) {
    if (!is_automorphism(h, action.generators()[i])) {
      fail(ErrorCode::InvalidAction,
           "generator " + std::to_string(i) + " is not an automorphism");
    }
  }
}

// Rows of the orbit quotient: for every edge, the orbits it meets.
std::vector<VertexSet> orbit_rows(const Hypergraph &h, const GroupAction &action) {
  std::vector<VertexSet> rows;
  rows.reserve(h.num_edges());
  for (const auto &e : h.edges()) {
    VertexSet row;
    for (Vertex v : e) row.push_back(static_cast<Vertex>(action.orbit_of(v)));
    normalize(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

InvariantCoverResult orbit_hull(const GroupAction &action, const VertexSet &set) {
  InvariantCoverResult result;
  for (Vertex v : set) result.chosen_orbits.push_back(action.orbit_of(v));
  std::sort(result.chosen_orbits.begin(), result.chosen_orbits.end());
  result.chosen_orbits.erase(std::unique(result.chosen_orbits.begin(), result.chosen_orbits.end()),
                             result.chosen_orbits.end());
  for (std::size_t o : result.chosen_orbits) {
    const auto &orbit = action.orbits()[o];
    result.witness.insert(result.witness.end(), orbit.begin(), orbit.end());
  }
  normalize(result.witness);
  result.size = result.witness.size();
  return result;
}

CoverResult min_cover(const Hypergraph &h) {
  require_coverable(h);
  std::vector<std::size_t> weights(h.num_vertices(), 1);
  WeightedCoverSearch search(minimal_edges(h.edges()), std::move(weights));
  auto [cost, chosen] = search.solve();
  return CoverResult{cost, std::move(chosen), true};
}

InvariantCoverResult min_invariant_cover(const Hypergraph &h, const GroupAction &action) {
  require_action(h, action);
  require_coverable(h);
  std::vector<std::size_t> weights;
  weights.reserve(action.orbits().size());
  for (const auto &o : action.orbits()) weights.push_back(o.size());
  WeightedCoverSearch search(minimal_edges(orbit_rows(h, action)), std::move(weights));
  auto [cost, chosen] = search.solve();

  InvariantCoverResult result;
  result.chosen_orbits.assign(chosen.begin(), chosen.end());
  for (std::size_t o : result.chosen_orbits) {
    const auto &orbit = action.orbits()[o];
    result.witness.insert(result.witness.end(), orbit.begin(), orbit.end());
  }
  normalize(result.witness);
  result.size = cost;
  return result;
}

CoverResult brute_force_min_cover(const Hypergraph &h, std::size_t cap) {
  require_coverable(h);
  const std::size_t n = h.num_vertices();
  if (n > cap) {
    fail(ErrorCode::CapExceeded, "oracle cap of " + std::to_string(cap) + " vertices exceeded");
  }
  // Subsets of each size k in lexicographic order of index combinations.
  for (std::size_t k = 0; k <= n; ++k) {
    VertexSet pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
    while (true) {
      if (is_cover(h, pick)) return CoverResult{k, pick, true};
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  fail(ErrorCode::InvariantViolation, "no cover found although no edge is empty");
}

InvariantCoverResult brute_force_min_invariant_cover(const Hypergraph &h,
                                                     const GroupAction &action,
                                                     std::size_t cap) {
  require_action(h, action);
  require_coverable(h);
  const std::size_t m = action.orbits().size();
  if (m > cap || m >= 63) {
    fail(ErrorCode::CapExceeded, "oracle cap of " + std::to_string(cap) + " orbits exceeded");
  }
  std::vector<std::uint64_t> edge_masks;
  for (const auto &e : h.edges()) {
    std::uint64_t mask = 0;
    for (Vertex v : e) mask |= std::uint64_t{1} << action.orbit_of(v);
    edge_masks.push_back(mask);
  }
  std::size_t best_weight = std::numeric_limits<std::size_t>::max();
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::size_t weight = 0;
    for (std::size_t o = 0; o < m; ++o) {
      if (mask >> o & 1) weight += action.orbits()[o].size();
    }
    if (weight >= best_weight) continue;
    const bool covers = std::all_of(edge_masks.begin(), edge_masks.end(),
                                    [&](std::uint64_t e) { return (e & mask) != 0; });
    if (covers) {
      best_weight = weight;
      best_mask = mask;
    }
  }
  InvariantCoverResult result;
  for (std::size_t o = 0; o < m; ++o) {
    if (!(best_mask >> o & 1)) continue;
    result.chosen_orbits.push_back(o);
    const auto &orbit = action.orbits()[o];
    result.witness.insert(result.witness.end(), orbit.begin(), orbit.end());
  }
  normalize(result.witness);
  result.size = best_weight;
  return result;
}

}  // namespace invcover
