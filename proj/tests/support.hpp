#ifndef INVCOVER_TESTS_SUPPORT_HPP
#define INVCOVER_TESTS_SUPPORT_HPP

#include "invcover/bounds.hpp"
#include "invcover/closure.hpp"
#include "invcover/covers.hpp"
#include "invcover/error.hpp"
#include "invcover/fractional.hpp"
#include "invcover/groups.hpp"
#include "invcover/instance.hpp"
#include "invcover/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace invcover;

inline Hypergraph graph(std::vector<std::string> ids,
                        const std::vector<std::vector<std::string>> &edges) {
  return Hypergraph::from_ids(std::move(ids), edges);
}

inline VertexSet set_of(const Hypergraph &h, const std::vector<std::string> &names) {
  VertexSet out;
  for (const auto &n : names) out.push_back(*h.find(n));
  normalize(out);
  return out;
}

// Sparse map of moved points; everything else fixed.
inline Permutation perm(const Hypergraph &h, const std::map<std::string, std::string> &moves) {
  std::vector<Vertex> image(h.num_vertices());
  std::iota(image.begin(), image.end(), Vertex{0});
  for (const auto &[from, to] : moves) image[*h.find(from)] = *h.find(to);
  return Permutation(image);
}

inline Hypergraph k3() { return graph({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}); }

inline Rational q(long num, long den = 1) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

// Random hypergraph on at most `max_vertices` vertices, closed under a random
// permutation g so that <g> acts by automorphisms. Edge sizes 1..max_rank.
struct RandomSymmetric {
  Hypergraph graph;
  GroupAction action = GroupAction::trivial(0);
};

inline Permutation random_permutation(std::mt19937_64 &rng, std::size_t n, std::size_t max_cycle) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Vertex> image(n);
  std::size_t i = 0;
  while (i < n) {
    const std::size_t len = std::min(n - i, std::uniform_int_distribution<std::size_t>(1, max_cycle)(rng));
    for (std::size_t j = 0; j < len; ++j) image[order[i + j]] = order[i + (j + 1) % len];
    i += len;
  }
  return Permutation(image);
}

inline RandomSymmetric random_symmetric(std::mt19937_64 &rng, std::size_t max_vertices,
                                        std::size_t max_rank, std::size_t max_base_edges,
                                        std::size_t max_cycle = 4) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_vertices)(rng);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("x" + std::string(i < 10 ? "0" : "") + std::to_string(i));
  const Permutation g = random_permutation(rng, n, max_cycle);
  const std::size_t base = std::uniform_int_distribution<std::size_t>(1, max_base_edges)(rng);
  std::vector<VertexSet> edges;
  for (std::size_t b = 0; b < base; ++b) {
    const std::size_t size = std::uniform_int_distribution<std::size_t>(1, std::min(max_rank, n))(rng);
    std::vector<Vertex> pool(n);
    std::iota(pool.begin(), pool.end(), Vertex{0});
    std::shuffle(pool.begin(), pool.end(), rng);
    VertexSet e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    normalize(e);
    VertexSet cur = e;
    do {
      edges.push_back(cur);
      cur = g.apply(cur);
    } while (cur != e);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {Hypergraph(ids, edges), GroupAction(n, {g})};
}

// Random fractional cover: an LP witness or cover indicator pushed upward.
inline FractionalCover perturb_up(std::mt19937_64 &rng, const FractionalCover &t) {
  std::vector<Rational> values = t.values();
  for (auto &v : values) {
    if (rng() % 2 == 0) continue;
    const long den = static_cast<long>(rng() % 9 + 2);
    const long num = static_cast<long>(rng() % static_cast<unsigned long>(den + 1));
    Rational bump(num, den);
    bump.canonicalize();
    v = v + (1 - v) * bump;
  }
  return FractionalCover(values);
}

// Search configuration producing r-partite (all p_i <= 1), part-preserving
// instances of rank r.
inline SearchConfig partite_config(std::uint64_t seed, std::size_t r) {
  SearchConfig cfg;
  cfg.seed = seed;
  cfg.parts = r;
  cfg.rank = r;
  cfg.part_size_min = 1;
  cfg.part_size_max = r <= 2 ? 6 : (r == 3 ? 4 : 3);
  return cfg;
}

}  // namespace testing

#endif
