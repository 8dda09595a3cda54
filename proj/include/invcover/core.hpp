#ifndef INVCOVER_CORE_HPP
#define INVCOVER_CORE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace invcover {

using Vertex = std::uint32_t;

// Sorted, duplicate-free list of vertex indices. Edges and vertex subsets
// share this representation.
using VertexSet = std::vector<Vertex>;

// Sorts and removes duplicates in place.
void normalize(VertexSet &set);

bool intersects(std::span<const Vertex> a, std::span<const Vertex> b);
std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b);
bool is_subset(std::span<const Vertex> sub, std::span<const Vertex> super);

// A finite hypergraph over opaque string ids.
//
// Vertices are stored in sorted id order, so index order is canonical order.
// Edges are normalized sets kept in lexicographic order without duplicates.
// An empty edge is allowed and makes the hypergraph uncoverable.
class Hypergraph {
 public:
  Hypergraph() = default;

  // `ids` must be strictly increasing; edges index into `ids`.
  Hypergraph(std::vector<std::string> ids, std::vector<VertexSet> edges);

  // Builds from unordered ids. Throws Error(InvalidArgument) on duplicate
  // ids or edges naming unknown ids.
  static Hypergraph from_ids(std::vector<std::string> ids,
                             const std::vector<std::vector<std::string>> &edges);

  std::size_t num_vertices() const { return ids_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<std::string> &ids() const { return ids_; }
  const std::string &id(Vertex v) const { return ids_[v]; }
  std::optional<Vertex> find(const std::string &id) const;

  const std::vector<VertexSet> &edges() const { return edges_; }
  const VertexSet &edge(std::size_t i) const { return edges_[i]; }

  // `edge` must be normalized.
  bool contains_edge(const VertexSet &edge) const;
  std::optional<std::size_t> edge_index(const VertexSet &edge) const;

  bool has_empty_edge() const { return !edges_.empty() && edges_.front().empty(); }
  bool coverable() const { return !has_empty_edge(); }

  // Edges incident to each vertex.
  std::vector<std::vector<std::size_t>> incidence() const;

  std::vector<std::string> names(std::span<const Vertex> set) const;

  friend bool operator==(const Hypergraph &, const Hypergraph &) = default;

 private:
  std::vector<std::string> ids_;
  std::vector<VertexSet> edges_;
};

std::size_t rank(const Hypergraph &h);

// Hypergraph on K with edges {e ∩ K}. Empty intersections survive as the
// empty edge. Throws Error(InvalidArgument) if K names a vertex outside h.
Hypergraph finite_trace(const Hypergraph &h, const VertexSet &keep);

// Drops every edge that strictly contains another edge. A set covers the
// result iff it covers the input.
std::vector<VertexSet> minimal_edges(const std::vector<VertexSet> &edges);

// Ordered partition of the vertex set into named parts.
class PartProfile {
 public:
  // Throws Error(InvalidArgument) unless the parts are disjoint, named
  // uniquely, and cover every vertex of h.
  PartProfile(const Hypergraph &h,
              std::vector<std::pair<std::string, VertexSet>> parts);

  // One part holding every vertex.
  static PartProfile trivial(const Hypergraph &h, std::string name = "all");

  std::size_t size() const { return parts_.size(); }
  const std::string &name(std::size_t i) const { return parts_[i].first; }
  const VertexSet &part(std::size_t i) const { return parts_[i].second; }
  std::size_t part_of(Vertex v) const { return part_of_[v]; }

 private:
  PartProfile() = default;

  std::vector<std::pair<std::string, VertexSet>> parts_;
  std::vector<std::size_t> part_of_;
};

// Raw instance contents before any checking, as read from a file.
struct RawHypergraph {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> edges;
};

enum class Severity { Info, Warning, Error };

struct ValidationEntry {
  Severity severity;
  std::string kind;  // unknown_vertex, duplicate_vertex, duplicate_edge, ...
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationEntry> entries;
  // Present when no entry has Error severity.
  std::optional<Hypergraph> hypergraph;

  bool ok() const { return hypergraph.has_value(); }
  bool has(const std::string &kind) const;
};

// Reports unknown vertex references and duplicate vertex ids as errors,
// duplicate edges (removed) as warnings, empty edges and isolated vertices
// (kept) as info.
ValidationReport validate(const RawHypergraph &raw);

}  // namespace invcover

#endif
