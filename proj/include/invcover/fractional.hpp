#ifndef INVCOVER_FRACTIONAL_HPP
#define INVCOVER_FRACTIONAL_HPP

#include "invcover/core.hpp"
#include "invcover/groups.hpp"
#include "invcover/rational.hpp"

#include <cstddef>
#include <vector>

namespace invcover {

// Map from vertices to [0, 1], stored densely (absent vertices hold zero).
class FractionalCover {
 public:
  FractionalCover() = default;
  explicit FractionalCover(std::size_t n) : values_(n) {}

  // Throws Error(InvalidArgument) if a value lies outside [0, 1].
  explicit FractionalCover(std::vector<Rational> values);

  static FractionalCover indicator(std::size_t n, const VertexSet &set);

  std::size_t degree() const { return values_.size(); }
  const Rational &operator[](Vertex v) const { return values_[v]; }
  const std::vector<Rational> &values() const { return values_; }

  // Throws Error(InvalidArgument) outside [0, 1].
  void set(Vertex v, Rational value);

  Rational size() const;
  VertexSet support() const;

  // t[K]: agrees with this cover on K, zero elsewhere.
  FractionalCover restricted(const VertexSet &keep) const;

  friend bool operator==(const FractionalCover &, const FractionalCover &) = default;

 private:
  std::vector<Rational> values_;
};

struct LpResult {
  Rational optimum;
  FractionalCover primal;
  // Fractional matching certificate, one entry per edge of the input.
  std::vector<Rational> dual;
};

bool is_fractional_cover(const Hypergraph &h, const FractionalCover &t);

// tau*: minimum size of a fractional cover. The optimum is certified by the
// dual: sum_{e ∋ v} y_e <= 1 for every v and sum_e y_e == optimum, checked
// exactly before returning. Throws Error(Uncoverable) on an empty edge.
LpResult tau_star(const Hypergraph &h);

// tau*_G over the orbit-variable LP: one variable per orbit O, weight |O|,
// coefficient |e ∩ O| in the row of edge e. The dual satisfies
// sum_e |e ∩ O| y_e <= |O| for every orbit. Throws Error(InvalidAction) if a
// generator is not an automorphism, Error(Uncoverable) on an empty edge.
LpResult tau_star_invariant(const Hypergraph &h, const GroupAction &action);

// Dual feasibility and primal/dual value equality, exactly.
bool certifies_tau_star(const Hypergraph &h, const LpResult &result);
bool certifies_tau_star_invariant(const Hypergraph &h, const GroupAction &action,
                                  const LpResult &result);

// Orbit average t_G(v) = (1/|Gv|) sum_{w in Gv} t(w).
FractionalCover mean_cover(const FractionalCover &t, const GroupAction &action);

// The same average computed as (1/|G|) sum_{g in G} t(g v) over an explicit
// list of all group elements.
FractionalCover group_mean_cover(const FractionalCover &t,
                                 const std::vector<Permutation> &elements);

// Finite cut t[K] built by rank recursion. With r = rank(h), L = {t = 1} and
// U = {u in some edge : 1/r <= t(u) < 1}, K is L together with u and K_u
// for every u in U, where K_u comes from recursing on
// h_u = {e \ {u} : u in e} with min(1, t / (1 - t(u))).
// Throws Error(InvalidArgument) unless t is a fractional cover of h.
FractionalCover finite_cut(const Hypergraph &h, const FractionalCover &t);

}  // namespace invcover

#endif
