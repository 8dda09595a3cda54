#ifndef INVCOVER_INSTANCE_HPP
#define INVCOVER_INSTANCE_HPP

#include "invcover/core.hpp"
#include "invcover/groups.hpp"

#include <optional>
#include <string>
#include <vector>

namespace invcover {

// A hypergraph with its optional partition and group action, as stored in
// an instance file.
struct Instance {
  Hypergraph graph;
  std::optional<PartProfile> parts;
  GroupAction action = GroupAction::trivial(0);
  std::vector<ValidationEntry> diagnostics;

  PartProfile parts_or_trivial() const {
    return parts ? *parts : PartProfile::trivial(graph);
  }
};

// Parses the JSON instance format:
//   {"vertices": [...], "edges": [[...], ...],
//    "parts": {"name": [...], ...},            (optional)
//    "group": {"generators": [{"a": "b", ...}, ...]}}  (optional)
// Generator maps list moved points only; unlisted ids are fixed. Throws
// Error(InvalidArgument) with a readable message on any hard error.
Instance parse_instance(const std::string &json_text);
Instance load_instance(const std::string &path);

// Canonical form: sorted keys, sorted id lists, sorted edge list, two-space
// indentation, trailing newline. parse(serialize(x)) == x.
std::string serialize_instance(const Instance &instance);

// Bundled fixtures: "fig1", "cube_faces", "cube_edges".
std::vector<std::string> fixture_names();
Instance fixture(const std::string &name);

}  // namespace invcover

#endif
