#include "invcover/search.hpp"

#include "invcover/covers.hpp"
#include "invcover/error.hpp"
#include "invcover/groups.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <thread>

namespace invcover {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// mt19937_64 output is fixed by the standard; the distributions are not, so
// bounded draws are done here by rejection.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t index) : engine_(splitmix64(seed ^ splitmix64(index))) {}

  std::size_t below(std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

constexpr std::size_t kMaxBaseEdges = 64;

std::string vertex_name(std::size_t part, std::size_t j) {
  return std::string(1, static_cast<char>('a' + part)) + std::to_string(j);
}

struct Outcome {
  std::optional<Rational> ratio;
  std::exception_ptr error;
};

// Symmetric Lovász: tau_G/tau <= k/2, strictly for k >= 3, whenever the k
// parts meet every edge at most once and the action preserves them.
void check_lovasz(const Instance &instance, const Rational &ratio, std::size_t index) {
  if (!instance.parts) return;
  const PartProfile &parts = *instance.parts;
  const std::size_t k = parts.size();
  if (k < 2 || !preserves_parts(instance.action, parts)) return;
  for (const auto &e : instance.graph.edges()) {
    std::set<std::size_t> seen;
    for (Vertex v : e) {
      if (!seen.insert(parts.part_of(v)).second) return;
    }
  }
  Rational limit(static_cast<unsigned long>(k), 2ul);
  limit.canonicalize();
  if (ratio > limit || (k >= 3 && ratio == limit)) {
    fail(ErrorCode::InvariantViolation,
         "instance " + std::to_string(index) + " reaches tau_G/tau = " + to_string(ratio) +
             " against the bound " + to_string(limit) + ":\n" + serialize_instance(instance));
  }
}

Outcome evaluate(const Instance &instance, std::size_t index) {
  Outcome out;
  try {
    out.ratio = symmetry_ratio(instance);
    check_lovasz(instance, *out.ratio, index);
  } catch (const Error &e) {
    if (e.code() == ErrorCode::CapExceeded || e.code() == ErrorCode::Uncoverable) {
      out.ratio.reset();
    } else {
      out.error = std::current_exception();
    }
  } catch (...) {
    out.error = std::current_exception();
  }
  return out;
}

void merge(SearchRecord &record, const Outcome &outcome, std::size_t index,
           const std::function<Instance()> &instance) {
  if (outcome.error) std::rethrow_exception(outcome.error);
  if (!outcome.ratio) {
    ++record.skipped;
    return;
  }
  ++record.instances_examined;
  ++record.histogram[*outcome.ratio];
  if (!record.best_ratio || *outcome.ratio > *record.best_ratio) {
    record.best_ratio = *outcome.ratio;
    record.best_index = index;
    record.best_instance = instance();
  }
}

}  // namespace

void SearchConfig::validate() const {
  if (budget == 0) fail(ErrorCode::InvalidArgument, "budget must be at least 1");
  if (parts == 0 || parts > 26) fail(ErrorCode::InvalidArgument, "parts must lie in [1, 26]");
  if (rank == 0 || rank > parts) fail(ErrorCode::InvalidArgument, "rank must lie in [1, parts]");
  if (part_size_min == 0 || part_size_min > part_size_max) {
    fail(ErrorCode::InvalidArgument, "part size range is empty");
  }
  if (group_orders.empty() ||
      std::any_of(group_orders.begin(), group_orders.end(), [](std::size_t m) { return m == 0; })) {
    fail(ErrorCode::InvalidArgument, "group orders must be a nonempty list of positive integers");
  }
  if (density_permille_min > density_permille_max || density_permille_max > 1000) {
    fail(ErrorCode::InvalidArgument, "density range must lie in [0, 1000] per mille");
  }
  if (workers == 0) fail(ErrorCode::InvalidArgument, "workers must be at least 1");
}

Instance generate_symmetric_instance(const SearchConfig &cfg, std::size_t index) {
  Rng rng(cfg.seed, index);
  const std::size_t m = cfg.group_orders[rng.below(cfg.group_orders.size())];

  std::vector<std::size_t> sizes(cfg.parts);
  std::vector<std::size_t> cycles(cfg.parts);
  for (std::size_t i = 0; i < cfg.parts; ++i) {
    sizes[i] = rng.between(cfg.part_size_min, cfg.part_size_max);
    cycles[i] = m > 1 && sizes[i] >= m ? rng.between(1, sizes[i] / m) : 0;
  }

  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::vector<std::string>>> part_ids;
  for (std::size_t i = 0; i < cfg.parts; ++i) {
    part_ids.emplace_back(std::string(1, static_cast<char>('a' + i)), std::vector<std::string>{});
    for (std::size_t j = 0; j < sizes[i]; ++j) {
      ids.push_back(vertex_name(i, j));
      part_ids.back().second.push_back(ids.back());
    }
  }

  std::size_t transversals = 1;
  for (std::size_t s : sizes) transversals *= s;
  const std::size_t permille = rng.between(cfg.density_permille_min, cfg.density_permille_max);
  const std::size_t base = std::clamp<std::size_t>(transversals * permille / 1000, 1, kMaxBaseEdges);

  // Cycles of length m on the first cycles[i]·m vertices of each part.
  auto step = [&](std::size_t part, std::size_t j) {
    if (j >= cycles[part] * m) return j;
    const std::size_t start = j / m * m;
    return start + (j - start + 1) % m;
  };

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges;
  std::vector<std::size_t> order(cfg.parts);
  for (std::size_t b = 0; b < base; ++b) {
    for (std::size_t i = 0; i < cfg.parts; ++i) order[i] = i;
    for (std::size_t i = 0; i < cfg.rank; ++i) std::swap(order[i], order[i + rng.below(cfg.parts - i)]);
    std::vector<std::pair<std::size_t, std::size_t>> edge;
    for (std::size_t i = 0; i < cfg.rank; ++i) edge.emplace_back(order[i], rng.below(sizes[order[i]]));
    std::sort(edge.begin(), edge.end());
    for (std::size_t power = 0; power < std::max<std::size_t>(m, 1); ++power) {
      edges.push_back(edge);
      for (auto &[part, j] : edge) j = step(part, j);
    }
  }

  std::vector<std::vector<std::string>> named;
  for (const auto &edge : edges) {
    std::vector<std::string> e;
    for (auto [part, j] : edge) e.push_back(vertex_name(part, j));
    named.push_back(std::move(e));
  }

  Instance instance;
  instance.graph = Hypergraph::from_ids(ids, named);
  const Hypergraph &h = instance.graph;
  std::vector<std::pair<std::string, VertexSet>> parts;
  for (const auto &[name, members] : part_ids) {
    VertexSet set;
    for (const auto &id : members) set.push_back(*h.find(id));
    parts.emplace_back(name, std::move(set));
  }
  instance.parts.emplace(h, std::move(parts));

  std::vector<Vertex> image(h.num_vertices());
  for (std::size_t i = 0; i < cfg.parts; ++i) {
    for (std::size_t j = 0; j < sizes[i]; ++j) {
      image[*h.find(vertex_name(i, j))] = *h.find(vertex_name(i, step(i, j)));
    }
  }
  Permutation g(std::move(image));
  std::vector<Permutation> gens;
  if (!g.is_identity()) gens.push_back(std::move(g));
  instance.action = GroupAction(h.num_vertices(), std::move(gens));

  if (!is_action_by_automorphisms(h, instance.action) ||
      !preserves_parts(instance.action, *instance.parts)) {
    fail(ErrorCode::InvariantViolation,
         "generated instance " + std::to_string(index) + " is not symmetric by construction");
  }
  return instance;
}

Rational symmetry_ratio(const Instance &instance) {
  const std::size_t tau = min_cover(instance.graph).size;
  const std::size_t tau_g = min_invariant_cover(instance.graph, instance.action).size;
  if (tau == 0) return Rational(1);  // no edges: both are zero
  Rational q(static_cast<unsigned long>(tau_g), static_cast<unsigned long>(tau));
  q.canonicalize();
  return q;
}

SearchRecord search_extremal(const SearchConfig &cfg) {
  cfg.validate();
  std::vector<Outcome> outcomes(cfg.budget);
  auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < cfg.budget; i += cfg.workers) {
      try {
        outcomes[i] = evaluate(generate_symmetric_instance(cfg, i), i);
      } catch (...) {
        outcomes[i].error = std::current_exception();
      }
    }
  };
  if (cfg.workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < cfg.workers; ++w) threads.emplace_back(work, w);
    for (auto &t : threads) t.join();
  }

  SearchRecord record;
  for (std::size_t i = 0; i < cfg.budget; ++i) {
    merge(record, outcomes[i], i, [&] { return generate_symmetric_instance(cfg, i); });
  }
  return record;
}

SearchRecord replay(const std::vector<Instance> &instances) {
  SearchRecord record;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    merge(record, evaluate(instances[i], i), i, [&] { return instances[i]; });
  }
  return record;
}

SearchRecord exhaustive_small(const Instance &template_instance, const SearchConfig &cfg) {
  const Hypergraph &h = template_instance.graph;
  const GroupAction &action = template_instance.action;
  const auto elements = enumerate_group(action.generators(), h.num_vertices(), cfg.enumeration_cap);

  std::vector<VertexSet> seeds = h.edges();
  if (seeds.empty()) {
    if (!template_instance.parts) {
      fail(ErrorCode::InvalidArgument, "an edgeless template needs parts to build transversals");
    }
    const PartProfile &parts = *template_instance.parts;
    if (cfg.rank == 0) fail(ErrorCode::InvalidArgument, "rank must be positive");
    // Fewer parts than the rank leaves no transversals, so the universe is empty.
    // Choose `rank` parts by bitmask, then one vertex from each.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << parts.size()); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != cfg.rank) continue;
      std::vector<VertexSet> chosen;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (mask >> i & 1) chosen.push_back(parts.part(i));
      }
      std::vector<VertexSet> partial{{}};
      for (const auto &part : chosen) {
        std::vector<VertexSet> next;
        for (const auto &prefix : partial) {
          for (Vertex v : part) {
            VertexSet e = prefix;
            e.push_back(v);
            next.push_back(std::move(e));
          }
        }
        partial = std::move(next);
        if (partial.size() > cfg.enumeration_cap) {
          fail(ErrorCode::CapExceeded, "transversal universe exceeds the enumeration cap");
        }
      }
      for (auto &e : partial) {
        normalize(e);
        seeds.push_back(std::move(e));
      }
    }
  }

  // Edge classes under the group, each listed once.
  std::set<VertexSet> assigned;
  std::vector<std::vector<VertexSet>> classes;
  for (const auto &seed : seeds) {
    if (assigned.count(seed)) continue;
    std::set<VertexSet> images;
    for (const auto &g : elements) images.insert(g.apply(seed));
    assigned.insert(images.begin(), images.end());
    classes.emplace_back(images.begin(), images.end());
  }

  SearchRecord record;
  if (classes.empty()) return record;
  if (classes.size() >= 63 || (std::uint64_t{1} << classes.size()) - 1 > cfg.enumeration_cap) {
    fail(ErrorCode::CapExceeded, std::to_string(classes.size()) +
                                     " edge classes exceed the enumeration cap of " +
                                     std::to_string(cfg.enumeration_cap) + " subsets");
  }
  auto build = [&](std::uint64_t mask) {
    std::vector<VertexSet> edges;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (mask >> c & 1) edges.insert(edges.end(), classes[c].begin(), classes[c].end());
    }
    Instance instance;
    instance.graph = Hypergraph(h.ids(), std::move(edges));
    instance.parts = template_instance.parts;
    instance.action = action;
    return instance;
  };
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << classes.size()); ++mask) {
    const Instance instance = build(mask);
    merge(record, evaluate(instance, mask), mask, [&] { return instance; });
  }
  return record;
}

}  // namespace invcover
