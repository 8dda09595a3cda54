#ifndef INVCOVER_GROUPS_HPP
#define INVCOVER_GROUPS_HPP

#include "invcover/core.hpp"

#include <cstddef>
#include <vector>

namespace invcover {

// A bijection of {0, ..., n-1}.
class Permutation {
 public:
  Permutation() = default;

  // Throws Error(InvalidArgument) if `image` is not a bijection.
  explicit Permutation(std::vector<Vertex> image);

  static Permutation identity(std::size_t n);

  std::size_t degree() const { return image_.size(); }
  Vertex operator()(Vertex v) const { return image_[v]; }
  const std::vector<Vertex> &image() const { return image_; }

  // Image of a set, normalized.
  VertexSet apply(const VertexSet &set) const;

  // (a * b)(v) = a(b(v)).
  friend Permutation operator*(const Permutation &a, const Permutation &b);

  bool is_identity() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

 private:
  std::vector<Vertex> image_;
};

// Generators of a permutation group on the vertex set plus the orbit
// partition they induce. Orbits are listed by their smallest vertex.
class GroupAction {
 public:
  // Throws Error(InvalidArgument) if a generator's degree differs from n.
  GroupAction(std::size_t n, std::vector<Permutation> generators);

  static GroupAction trivial(std::size_t n) { return GroupAction(n, {}); }

  std::size_t degree() const { return orbit_of_.size(); }
  const std::vector<Permutation> &generators() const { return generators_; }
  const std::vector<VertexSet> &orbits() const { return orbits_; }
  std::size_t orbit_of(Vertex v) const { return orbit_of_[v]; }
  std::size_t orbit_size(Vertex v) const { return orbits_[orbit_of_[v]].size(); }

 private:
  std::vector<Permutation> generators_;
  std::vector<VertexSet> orbits_;
  std::vector<std::size_t> orbit_of_;
};

// Orbit partition generated by `generators` on n points. Undirected closure
// suffices: inverses of finite-order permutations are positive powers.
std::vector<VertexSet> orbits(const std::vector<Permutation> &generators, std::size_t n);

bool is_automorphism(const Hypergraph &h, const Permutation &g);
bool is_action_by_automorphisms(const Hypergraph &h, const GroupAction &action);

bool preserves_parts(const Permutation &g, const PartProfile &parts);
bool preserves_parts(const GroupAction &action, const PartProfile &parts);

// Every element of the generated group, identity first, then in
// breadth-first order. Throws Error(CapExceeded) past `cap` elements.
std::vector<Permutation> enumerate_group(const std::vector<Permutation> &generators,
                                         std::size_t n, std::size_t cap);

std::size_t group_order(const std::vector<Permutation> &generators, std::size_t n,
                        std::size_t cap);

}  // namespace invcover

#endif
