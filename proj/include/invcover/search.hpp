#ifndef INVCOVER_SEARCH_HPP
#define INVCOVER_SEARCH_HPP

#include "invcover/instance.hpp"
#include "invcover/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace invcover {

struct SearchConfig {
  std::uint64_t seed = 0;
  std::size_t budget = 100;
  std::size_t parts = 3;
  std::size_t rank = 3;  // vertices per sampled edge, one from each of `rank` parts
  std::size_t part_size_min = 2;
  std::size_t part_size_max = 6;
  std::vector<std::size_t> group_orders{2, 3, 4};
  // Base edges drawn per instance, as per-mille of the transversal count.
  std::size_t density_permille_min = 50;
  std::size_t density_permille_max = 300;
  std::size_t workers = 1;
  std::size_t enumeration_cap = std::size_t{1} << 20;

  // Throws Error(InvalidArgument) on empty ranges, budget 0 or rank > parts.
  void validate() const;
};

struct SearchRecord {
  std::optional<Rational> best_ratio;
  std::optional<std::size_t> best_index;
  std::optional<Instance> best_instance;
  std::map<Rational, std::size_t> histogram;
  std::size_t instances_examined = 0;
  std::size_t skipped = 0;  // cap-exceeded or uncoverable instances
};

// Deterministic in (cfg.seed, index): a part-preserving cyclic action is
// chosen first, then random transversal edges are closed under it. The
// result is k-partite with every p_i <= 1 and G-symmetric.
Instance generate_symmetric_instance(const SearchConfig &cfg, std::size_t index);

// tau_G / tau on a single instance.
Rational symmetry_ratio(const Instance &instance);

// Maximum tau_G / tau over cfg.budget generated instances, split across
// cfg.workers threads; the record does not depend on the worker count.
// Throws Error(InvariantViolation) if a ratio reaches parts/2 (strictly
// forbidden for three or more parts).
SearchRecord search_extremal(const SearchConfig &cfg);

// Evaluates the given instances only (replay of stored instances).
SearchRecord replay(const std::vector<Instance> &instances);

// All nonempty unions of edge orbits over a fixed vertex/part/group template.
// The candidate universe is the G-closure of the template's edges, or of all
// rank-sized transversals when it has none. Throws Error(CapExceeded) if the
// number of subsets exceeds cfg.enumeration_cap.
SearchRecord exhaustive_small(const Instance &template_instance, const SearchConfig &cfg);

}  // namespace invcover

#endif
