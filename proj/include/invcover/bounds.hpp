#ifndef INVCOVER_BOUNDS_HPP
#define INVCOVER_BOUNDS_HPP

#include "invcover/closure.hpp"
#include "invcover/core.hpp"
#include "invcover/covers.hpp"
#include "invcover/groups.hpp"
#include "invcover/rational.hpp"
#include "invcover/surd.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace invcover {

enum class Relation { LessEqual, Equal };

// One inequality (or equality) evaluated on a concrete instance.
struct BoundClause {
  std::string name;
  bool applicable = false;
  std::string reason;  // why not applicable, or a note when it is
  Rational lhs;
  RationalSqrt2 rhs;
  Relation relation = Relation::LessEqual;
  bool strict_required = false;
  bool holds = false;

  bool violated() const { return applicable && !holds; }
};

struct Caps {
  std::size_t closure = kDefaultClosureCap;
  std::size_t group_order = 100000;
  std::size_t oracle = kDefaultOracleCap;
  bool use_oracle = false;
};

struct Quantities {
  std::size_t tau = 0;
  Rational tau_star;
  std::size_t tau_g = 0;
  Rational tau_g_star;
  std::size_t rank = 0;
  std::vector<std::size_t> p;
  DCoefficient d;
  std::optional<std::size_t> group_order;
  std::optional<std::size_t> closure_edges;
  std::optional<std::size_t> closure_tau;
  std::optional<std::size_t> closure_tau_g;
  std::optional<Rational> closure_tau_star;
  std::optional<Rational> closure_tau_g_star;
  VertexSet cover_witness;
  VertexSet invariant_witness;
};

struct BoundsReport {
  enum class Status { Ok, Failed, Uncoverable, InvalidAction };

  Status status = Status::Ok;
  Quantities quantities;
  std::vector<BoundClause> clauses;
  std::vector<std::string> notes;

  bool failed() const { return status != Status::Ok; }
  const BoundClause *find(const std::string &name) const;
};

const char *to_string(BoundsReport::Status status);

std::vector<std::size_t> part_degrees(const Hypergraph &h, const PartProfile &parts);

// True if some part contains a whole edge.
bool some_part_contains_edge(const Hypergraph &h, const PartProfile &parts);

// Non-symmetric clauses on tau/tau*: lovasz, ahk_a, ahk_b, ahk_c.
std::vector<BoundClause> ahk_clauses(const Hypergraph &h, const PartProfile &parts,
                                     std::size_t tau, const Rational &tau_star);

// Computes tau and tau* first. Throws Error(Uncoverable).
std::vector<BoundClause> ahk_report(const Hypergraph &h, const PartProfile &parts);

// Symmetric clauses on tau_G/tau* and tau_G/tau: sym_ahk_{a,b,c} and their
// *_tau variants, sym_lovasz, kl21, dm_bipartite. Part-based clauses become
// inapplicable when the action moves a vertex between parts.
std::vector<BoundClause> symmetric_clauses(const Hypergraph &h, const PartProfile &parts,
                                           const GroupAction &action, std::size_t tau,
                                           const Rational &tau_star, std::size_t tau_g,
                                           const DCoefficient &d);

// Computes tau, tau*, tau_G and d first. Throws Error(InvalidAction) or
// Error(Uncoverable).
std::vector<BoundClause> symmetric_report(const Hypergraph &h, const PartProfile &parts,
                                          const GroupAction &action);

// Every quantity and every clause, including the orbit-closure chain and the
// invariant fractional equality. Never throws for instance-level problems;
// they become the report status.
BoundsReport verify_all(const Hypergraph &h, const PartProfile &parts, const GroupAction &action,
                        const Caps &caps = {});

}  // namespace invcover

#endif
