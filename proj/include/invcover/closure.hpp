#ifndef INVCOVER_CLOSURE_HPP
#define INVCOVER_CLOSURE_HPP

#include "invcover/core.hpp"
#include "invcover/covers.hpp"
#include "invcover/groups.hpp"
#include "invcover/rational.hpp"

#include <cstddef>
#include <optional>

namespace invcover {

inline constexpr std::size_t kDefaultClosureCap = 100000;

struct ClosureResult {
  Hypergraph closed;
  std::size_t generated_edge_count = 0;  // edges of `closed` not in the input
};

// Orbit closure: for every edge, all sets picking |e ∩ O| distinct vertices
// from each orbit O. This is exactly the set of distinct-image selections
// {g_1 v_1, ..., g_l v_l}. Throws Error(CapExceeded) if the closed edge set
// would exceed `cap` edges.
ClosureResult orbit_closure(const Hypergraph &h, const GroupAction &action,
                            std::size_t cap = kDefaultClosureCap);

bool is_orbitally_closed(const Hypergraph &h, const GroupAction &action);

struct DCoefficient {
  Rational value{1};
  std::optional<std::size_t> edge;   // witness edge index
  std::optional<std::size_t> orbit;  // witness orbit index
  bool degenerate = false;           // no edges; value is 1 by convention
};

// max over edges e and orbits O of |O| / (|O \ e| + 1).
DCoefficient d_coefficient(const Hypergraph &h, const GroupAction &action);

struct ClosureAudit {
  std::size_t closure_cover_size = 0;  // |X| = tau of the closure
  std::size_t invariant_size = 0;      // |Y|
  Rational d;
  bool bound_holds = false;            // |Y| <= d |X|
  bool star_star_holds = false;
};

struct ClosureCoverResult {
  InvariantCoverResult cover;  // Y
  VertexSet closure_cover;     // X
  ClosureAudit audit;
};

// Y = union of the orbits meeting a minimum cover X of the orbit closure.
// Throws Error(InvalidAction), Error(Uncoverable) or Error(CapExceeded).
ClosureCoverResult invariant_cover_via_closure(const Hypergraph &h, const GroupAction &action,
                                               std::size_t cap = kDefaultClosureCap);

// For every orbit O meeting X: |O \ X| <= max_e |e ∩ O| - 1, the max taken
// over the edges of `closed`. When `original` is given, the per-orbit maxima
// over its edges must agree with those of `closed`; a mismatch throws
// Error(InvariantViolation).
bool check_star_star(const Hypergraph &closed, const VertexSet &cover, const GroupAction &action,
                     const Hypergraph *original = nullptr);

}  // namespace invcover

#endif
