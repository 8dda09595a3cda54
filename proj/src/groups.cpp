#include "invcover/groups.hpp"

#include "invcover/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace invcover {

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Vertex v : image_) {
    if (v >= image_.size() || hit[v]) {
      fail(ErrorCode::InvalidArgument, "permutation is not a bijection");
    }
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  return Permutation(std::move(image));
}

VertexSet Permutation::apply(const VertexSet &set) const {
  VertexSet result;
  result.reserve(set.size());
  for (Vertex v : set) result.push_back(image_[v]);
  std::sort(result.begin(), result.end());
  return result;
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  std::vector<Vertex> image(b.degree());
  for (Vertex v = 0; v < image.size(); ++v) image[v] = a(b(v));
  Permutation result;
  result.image_ = std::move(image);
  return result;
}

bool Permutation::is_identity() const {
  for (Vertex v = 0; v < image_.size(); ++v) {
    if (image_[v] != v) return false;
  }
  return true;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }

  std::vector<std::size_t> parent;
};

}  // namespace

std::vector<VertexSet> orbits(const std::vector<Permutation> &generators, std::size_t n) {
  DisjointSets sets(n);
  for (const auto &g : generators) {
    if (g.degree() != n) fail(ErrorCode::InvalidArgument, "generator degree mismatch");
    for (Vertex v = 0; v < n; ++v) sets.unite(v, g(v));
  }
  // Roots are minimal members, so scanning v upward lists orbits by their
  // smallest vertex.
  std::vector<VertexSet> result;
  std::vector<std::size_t> slot(n, n);
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (slot[root] == n) {
      slot[root] = result.size();
      result.emplace_back();
    }
    result[slot[root]].push_back(v);
  }
  return result;
}

GroupAction::GroupAction(std::size_t n, std::vector<Permutation> generators)
    : generators_(std::move(generators)), orbits_(invcover::orbits(generators_, n)), orbit_of_(n) {
  for (std::size_t i = 0; i < orbits_.size(); ++i) {
    for (Vertex v : orbits_[i]) orbit_of_[v] = i;
  }
}

bool is_automorphism(const Hypergraph &h, const Permutation &g) {
  if (g.degree() != h.num_vertices()) return false;
  // An injective map of a finite edge set into itself is a bijection.
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [&](const VertexSet &e) { return h.contains_edge(g.apply(e)); });
}

bool is_action_by_automorphisms(const Hypergraph &h, const GroupAction &action) {
  if (action.degree() != h.num_vertices()) return false;
  return std::all_of(action.generators().begin(), action.generators().end(),
                     [&](const Permutation &g) { return is_automorphism(h, g); });
}

bool preserves_parts(const Permutation &g, const PartProfile &parts) {
  for (Vertex v = 0; v < g.degree(); ++v) {
    if (parts.part_of(v) != parts.part_of(g(v))) return false;
  }
  return true;
}

bool preserves_parts(const GroupAction &action, const PartProfile &parts) {
  return std::all_of(action.generators().begin(), action.generators().end(),
                     [&](const Permutation &g) { return preserves_parts(g, parts); });
}

std::vector<Permutation> enumerate_group(const std::vector<Permutation> &generators,
                                         std::size_t n, std::size_t cap) {
  for (const auto &g : generators) {
    if (g.degree() != n) fail(ErrorCode::InvalidArgument, "generator degree mismatch");
  }
  std::vector<Permutation> elements{Permutation::identity(n)};
  std::set<Permutation> seen{elements.front()};
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t current = frontier.front();
    frontier.pop_front();
    for (const auto &g : generators) {
      Permutation next = g * elements[current];
      if (seen.count(next)) continue;
      if (elements.size() >= cap) {
        fail(ErrorCode::CapExceeded,
             "group closure exceeds cap of " + std::to_string(cap) + " elements");
      }
      seen.insert(next);
      elements.push_back(std::move(next));
      frontier.push_back(elements.size() - 1);
    }
  }
  return elements;
}

std::size_t group_order(const std::vector<Permutation> &generators, std::size_t n,
                        std::size_t cap) {
  return enumerate_group(generators, n, cap).size();
}

}  // namespace invcover
