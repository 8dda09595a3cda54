#ifndef INVCOVER_COVERS_HPP
#define INVCOVER_COVERS_HPP

#include "invcover/core.hpp"
#include "invcover/groups.hpp"

#include <cstddef>
#include <vector>

namespace invcover {

struct CoverResult {
  std::size_t size = 0;
  VertexSet witness;
  bool optimal = true;
};

struct InvariantCoverResult {
  std::size_t size = 0;
  VertexSet witness;                        // union of chosen orbits
  std::vector<std::size_t> chosen_orbits;  // indices into GroupAction::orbits()
};

inline constexpr std::size_t kDefaultOracleCap = 20;

bool is_cover(const Hypergraph &h, const VertexSet &set);

// Exact minimum cover by branch and bound: branch on the first uncovered
// edge, vertices in canonical order, pruned by a disjoint-edge packing bound.
// Throws Error(Uncoverable) if h has an empty edge.
CoverResult min_cover(const Hypergraph &h);

// Exact minimum G-invariant cover, solved as minimum-weight set cover over
// orbits. Throws Error(InvalidAction) if a generator is not an automorphism
// and Error(Uncoverable) if h has an empty edge.
InvariantCoverResult min_invariant_cover(const Hypergraph &h, const GroupAction &action);

// Exhaustive oracles for testing the solvers above.
CoverResult brute_force_min_cover(const Hypergraph &h, std::size_t cap = kDefaultOracleCap);
InvariantCoverResult brute_force_min_invariant_cover(const Hypergraph &h,
                                                     const GroupAction &action,
                                                     std::size_t cap = kDefaultOracleCap);

// Union of the orbits meeting `set`, plus their indices.
InvariantCoverResult orbit_hull(const GroupAction &action, const VertexSet &set);

}  // namespace invcover

#endif
