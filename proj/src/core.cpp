#include "invcover/core.hpp"

#include "invcover/error.hpp"
#include "invcover/rational.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace invcover {

const char *to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Uncoverable: return "uncoverable";
    case ErrorCode::CapExceeded: return "cap-exceeded";
    case ErrorCode::InvalidAction: return "invalid-action";
    case ErrorCode::InvariantViolation: return "invariant-violation";
  }
  return "unknown";
}

std::string to_string(const Rational &q) { return q.get_str(10); }

Rational parse_rational(const std::string &text) {
  const auto slash = text.find('/');
  auto digits_ok = [](const std::string &s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) {
    fail(ErrorCode::InvalidArgument, "malformed rational '" + text + "'");
  }
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) fail(ErrorCode::InvalidArgument, "zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

void normalize(VertexSet &set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

bool intersects(std::span<const Vertex> a, std::span<const Vertex> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) {
      ++count;
      ++i;
      ++j;
    } else if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

bool is_subset(std::span<const Vertex> sub, std::span<const Vertex> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Hypergraph::Hypergraph(std::vector<std::string> ids, std::vector<VertexSet> edges)
    : ids_(std::move(ids)), edges_(std::move(edges)) {
  for (std::size_t i = 1; i < ids_.size(); ++i) {
    if (!(ids_[i - 1] < ids_[i])) {
      fail(ErrorCode::InvalidArgument, "vertex ids must be unique and sorted");
    }
  }
  for (auto &e : edges_) {
    normalize(e);
    if (!e.empty() && e.back() >= ids_.size()) {
      fail(ErrorCode::InvalidArgument, "edge references a vertex index out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Hypergraph Hypergraph::from_ids(std::vector<std::string> ids,
                                const std::vector<std::vector<std::string>> &edges) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    fail(ErrorCode::InvalidArgument, "duplicate vertex id");
  }
  std::vector<VertexSet> indexed;
  indexed.reserve(edges.size());
  for (const auto &e : edges) {
    VertexSet set;
    for (const auto &name : e) {
      auto it = std::lower_bound(ids.begin(), ids.end(), name);
      if (it == ids.end() || *it != name) {
        fail(ErrorCode::InvalidArgument, "edge names unknown vertex '" + name + "'");
      }
      set.push_back(static_cast<Vertex>(it - ids.begin()));
    }
    indexed.push_back(std::move(set));
  }
  return Hypergraph(std::move(ids), std::move(indexed));
}

std::optional<Vertex> Hypergraph::find(const std::string &id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<Vertex>(it - ids_.begin());
}

bool Hypergraph::contains_edge(const VertexSet &edge) const {
  return std::binary_search(edges_.begin(), edges_.end(), edge);
}

std::optional<std::size_t> Hypergraph::edge_index(const VertexSet &edge) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), edge);
  if (it == edges_.end() || *it != edge) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<std::vector<std::size_t>> Hypergraph::incidence() const {
  std::vector<std::vector<std::size_t>> result(ids_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (Vertex v : edges_[i]) result[v].push_back(i);
  }
  return result;
}

std::vector<std::string> Hypergraph::names(std::span<const Vertex> set) const {
  std::vector<std::string> result;
  result.reserve(set.size());
  for (Vertex v : set) result.push_back(ids_[v]);
  return result;
}

std::size_t rank(const Hypergraph &h) {
  std::size_t r = 0;
  for (const auto &e : h.edges()) r = std::max(r, e.size());
  return r;
}

Hypergraph finite_trace(const Hypergraph &h, const VertexSet &keep) {
  VertexSet k = keep;
  normalize(k);
  if (!k.empty() && k.back() >= h.num_vertices()) {
    fail(ErrorCode::InvalidArgument, "trace set is not a subset of the vertex set");
  }
  // Old index -> new index; monotone, so id order is preserved.
  std::vector<Vertex> renumber(h.num_vertices(), 0);
  std::vector<std::string> ids;
  ids.reserve(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    renumber[k[i]] = static_cast<Vertex>(i);
    ids.push_back(h.id(k[i]));
  }
  std::vector<VertexSet> edges;
  edges.reserve(h.num_edges());
  for (const auto &e : h.edges()) {
    VertexSet traced;
    std::set_intersection(e.begin(), e.end(), k.begin(), k.end(), std::back_inserter(traced));
    for (auto &v : traced) v = renumber[v];
    edges.push_back(std::move(traced));
  }
  return Hypergraph(std::move(ids), std::move(edges));
}

std::vector<VertexSet> minimal_edges(const std::vector<VertexSet> &edges) {
  std::vector<const VertexSet *> by_size;
  by_size.reserve(edges.size());
  for (const auto &e : edges) by_size.push_back(&e);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const VertexSet *a, const VertexSet *b) { return a->size() < b->size(); });
  std::vector<VertexSet> kept;
  for (const VertexSet *e : by_size) {
    bool dominated = false;
    for (const auto &k : kept) {
      if (k.size() < e->size() && is_subset(k, *e)) {
        dominated = true;
        break;
      }
      if (k == *e) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(*e);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

PartProfile::PartProfile(const Hypergraph &h,
                         std::vector<std::pair<std::string, VertexSet>> parts)
    : parts_(std::move(parts)) {
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  part_of_.assign(h.num_vertices(), unassigned);
  std::set<std::string> names;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    auto &[name, members] = parts_[i];
    if (!names.insert(name).second) {
      fail(ErrorCode::InvalidArgument, "duplicate part name '" + name + "'");
    }
    normalize(members);
    for (Vertex v : members) {
      if (v >= h.num_vertices()) {
        fail(ErrorCode::InvalidArgument, "part '" + name + "' names a vertex out of range");
      }
      if (part_of_[v] != unassigned) {
        fail(ErrorCode::InvalidArgument,
             "vertex '" + h.id(v) + "' lies in more than one part");
      }
      part_of_[v] = i;
    }
  }
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (part_of_[v] == unassigned) {
      fail(ErrorCode::InvalidArgument, "vertex '" + h.id(v) + "' lies in no part");
    }
  }
}

PartProfile PartProfile::trivial(const Hypergraph &h, std::string name) {
  VertexSet all(h.num_vertices());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return PartProfile(h, {{std::move(name), std::move(all)}});
}

bool ValidationReport::has(const std::string &kind) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const ValidationEntry &e) { return e.kind == kind; });
}

ValidationReport validate(const RawHypergraph &raw) {
  ValidationReport report;
  bool hard_error = false;

  std::vector<std::string> ids = raw.vertices;
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i].empty()) {
      report.entries.push_back({Severity::Error, "empty_vertex_id", "vertex ids must be nonempty"});
      hard_error = true;
    }
    if (i > 0 && ids[i] == ids[i - 1]) {
      report.entries.push_back(
          {Severity::Error, "duplicate_vertex", "vertex '" + ids[i] + "' is listed twice"});
      hard_error = true;
    }
  }
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto known = [&](const std::string &id) { return std::binary_search(ids.begin(), ids.end(), id); };

  std::vector<std::vector<std::string>> edges;
  std::set<std::vector<std::string>> seen;
  std::set<std::string> touched;
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    std::vector<std::string> edge = raw.edges[i];
    for (const auto &id : edge) {
      if (!known(id)) {
        report.entries.push_back({Severity::Error, "unknown_vertex",
                                  "edge " + std::to_string(i) + " names unknown vertex '" + id + "'"});
        hard_error = true;
      }
    }
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      report.entries.push_back({Severity::Warning, "repeated_vertex_in_edge",
                                "edge " + std::to_string(i) + " repeats a vertex; treated as a set"});
      edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    }
    if (edge.empty()) {
      report.entries.push_back({Severity::Warning, "empty_edge",
                                "edge " + std::to_string(i) + " is empty; the instance is uncoverable"});
    }
    if (!seen.insert(edge).second) {
      report.entries.push_back({Severity::Warning, "duplicate_edge",
                                "edge " + std::to_string(i) + " duplicates an earlier edge; removed"});
      continue;
    }
    touched.insert(edge.begin(), edge.end());
    edges.push_back(std::move(edge));
  }
  for (const auto &id : ids) {
    if (!touched.count(id)) {
      report.entries.push_back(
          {Severity::Info, "isolated_vertex", "vertex '" + id + "' lies in no edge; kept"});
    }
  }
  if (!hard_error) report.hypergraph = Hypergraph::from_ids(ids, edges);
  return report;
}

}  // namespace invcover
