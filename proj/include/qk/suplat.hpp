#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qk/bits.hpp"

namespace qk {

struct NotJoinPreserving : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite sup-lattice, represented as a closure system over a finite generator
// set: elements are the closed subsets, ordered by inclusion, with
// join(S) = closure(union S) and meet = intersection.
//
// Powerset carriers take a fast path: closure is the identity and the
// elements are implicit (element(i) is the subset whose mask is i), so no
// table is materialized.
class SupLattice {
public:
  static SupLattice powerset(int n);
  static SupLattice from_closed_sets(int n, std::vector<Bits> closed);
  // Enumerates the closed sets of `close` by saturating singleton closures
  // under binary joins. Throws if more than `cap` elements appear.
  static SupLattice from_closure(int n, std::function<Bits(const Bits&)> close,
                                 std::size_t cap = 1u << 16);

  int generators() const { return n_; }
  bool is_powerset() const { return powerset_; }

  std::size_t size() const;
  Bits element(std::size_t i) const;
  std::size_t index_of(const Bits& x) const;
  bool contains(const Bits& x) const;

  Bits closure(const Bits& s) const;
  Bits join(const Bits& a, const Bits& b) const;
  Bits join_all(const std::vector<Bits>& xs) const;
  Bits meet(const Bits& a, const Bits& b) const { return a & b; }
  bool leq(const Bits& a, const Bits& b) const { return a.subset_of(b); }
  Bits bottom() const;
  Bits top() const;

  // Indices of elements that are not joins of strictly smaller elements
  // (bottom excluded).
  std::vector<std::size_t> join_irreducibles() const;

  // Exhaustive frame law: x /\ \/S = \/ (x /\ s) for all elements x and all
  // subsets S of join-irreducibles. Returns a violating description, if any.
  std::optional<std::string> frame_violation() const;

  bool same_carrier(const SupLattice& o) const;

  SupLattice() = default;

private:
  int n_ = 0;
  bool powerset_ = false;
  std::vector<Bits> elems_;  // sorted; empty when powerset_
  std::unordered_map<Bits, std::size_t> index_;
};

// Join-preserving map between finite sup-lattices, tabulated on all source
// elements.
struct SupHom {
  const SupLattice* src = nullptr;
  const SupLattice* dst = nullptr;
  std::vector<Bits> table;  // indexed by source element index

  static SupHom from_function(const SupLattice& s, const SupLattice& d,
                              const std::function<Bits(const Bits&)>& f);
  static SupHom identity(const SupLattice& l);

  Bits apply(const Bits& x) const { return table[src->index_of(x)]; }

  // Finite joins are generated by the empty and binary cases.
  std::optional<std::string> join_violation() const;
  bool preserves_joins() const { return !join_violation(); }
};

// g(y) = \/ { x : f(x) <= y }; satisfies f(x) <= y  <=>  x <= g(y).
// Throws NotJoinPreserving if f fails validation.
SupHom right_adjoint(const SupHom& f);

// Identification of two formal generators of a tensor: x1 (x) y1 ~ x2 (x) y2,
// given by element indices into the factor lattices.
struct TensorRelation {
  std::size_t x1, y1, x2, y2;
};

// Tensor product of sup-lattices presented by generators x (x) y (pairs of
// element indices) modulo bilinearity and the supplied relations. Elements
// are the Galois-closed subsets of the generator grid.
struct TensorLattice {
  SupLattice lat;
  const SupLattice* X = nullptr;
  const SupLattice* Y = nullptr;

  // Canonical image of x_i (x) y_j.
  Bits pure(std::size_t xi, std::size_t yj) const;
  Bits pure_elems(const Bits& x, const Bits& y) const;

private:
  friend TensorLattice tensor(const SupLattice&, const SupLattice&,
                              const std::vector<TensorRelation>&, std::size_t);
  std::function<Bits(const Bits&)> close_;
};

TensorLattice tensor(const SupLattice& X, const SupLattice& Y,
                     const std::vector<TensorRelation>& rels = {},
                     std::size_t cap = 1u << 16);

// Largest quotient sup-lattice identifying each given pair, together with the
// surjective join-preserving quotient map (the induced closure operator).
// The lattice is heap-held so the hom's target pointer stays stable.
struct QuotientResult {
  std::unique_ptr<SupLattice> lat;
  SupHom map;  // map.dst == lat.get()
};

QuotientResult quotient_by_closure(const SupLattice& X,
                                   const std::vector<std::pair<Bits, Bits>>& pairs);

}  // namespace qk
