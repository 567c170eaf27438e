#pragma once

#include <array>
#include <string>
#include <vector>

#include "qk/groupoid.hpp"
#include "qk/quantale.hpp"

namespace qk {

// Q-sheaf of a discrete groupoid action: the carrier is the (implicit)
// powerset of the acted-on set, the module structure is pointwise, and
// singletons form a Hilbert basis.
struct QSheaf {
  const Quantale* Q = nullptr;  // O(G) of the acting groupoid
  GAction a;                    // underlying discrete action
  std::vector<std::size_t> qi;  // cached partial units of Q

  int points() const { return a.n; }
  int arrows() const { return a.g->n_arrows; }
  Bits top() const { return Bits::full(a.n); }

  // Module action A.U, pointwise.
  Bits act(const Bits& A, const Bits& U) const;
  // Support spp_X(U) = { id_{p(x)} : x in U } as an element of Q_0.
  Bits spp(const Bits& U) const;
  // Orbit saturation tspp(U) = 1_Q U.
  Bits tspp(const Bits& U) const;

  // Definitional inner product: on sections s,t the join of the partial
  // units u with spp(u) <= spp(s), spp(u*) <= spp(t), ut <= s; extended to
  // all elements by join-bilinearity over the singleton basis.
  Bits inner_oracle(const Bits& x, const Bits& y) const;
  // The closed formula \/_{u in Q_I} u spp(u* x /\ y).
  Bits inner_fast(const Bits& x, const Bits& y) const;
};

QSheaf module_of_action(const Quantale& q, GAction a);  // throws InvalidAction

// All Hilbert sections: s with <x,s>s <= x for every x. In the discrete
// model these are the anchor-injective subsets; cross-checked in tests
// against locale::local_sections.
std::vector<Bits> hilbert_sections(const QSheaf& x);

struct PrincipalReport {
  std::vector<Bits> sections;       // all Hilbert sections
  std::vector<std::array<bool, 4>> conds;  // the four equivalent conditions
  std::vector<Bits> principal;      // sections passing them
  bool conditions_agree = true;
  bool principally_covered = false;  // \/ principal = 1_X
};

PrincipalReport principal_sections(const QSheaf& x);

// I(X) = {x : 1x <= x}, the orbit sub-lattice, as a closure system on the
// carrier points.
SupLattice invariant_part(const QSheaf& x);

struct RightStructure {
  SupLattice inv;               // I(X)
  std::vector<Bits> bisections; // sections that are also right sections
  bool open_right = true;       // 1x /\ 1x' <= 1(x /\ 1x')
  std::string witness;
  bool bisheaf = false;         // bisections join to 1_X

  // Right inner product [x,y] = 1_Q (x /\ y).
};

RightStructure right_structure(const QSheaf& x);
Bits right_inner(const QSheaf& x, const Bits& u, const Bits& v);

struct FreenessReport {
  bool free = false;                 // trivial stabilizers
  bool principally_covered = false;
  bool pair_map_injective = false;   // <act, pi2> monic, i.e. frame map onto
  std::string witness;
};

FreenessReport check_freeness(const QSheaf& x);

// Splitting of <act,pi2>^*: phi#(u (x) t) = ut (x) t, verified to be a
// retraction exhaustively, plus the direct-image formula
// <act,pi2>_!(u (x) t) = ut (x) t on all (partial unit, bisection) pairs.
// Throws NotBisheaf (std::runtime_error) when x is not a bisheaf.
bool check_transitivity_splitting(const QSheaf& x);

// <x r*, y> = <x, y r> and tspp(ax) = tspp(spp_Q(a*)x) and
// spp_X(xr) = spp_X(x spp_R(r)), with R = I(X) acting by meet; exhaustive.
bool adjoint_identity(const QSheaf& x);

// The whole per-sheaf law battery (inner-product axioms, Hilbert basis law,
// Parseval, non-degeneracy, support formulas, partial-unit action laws, the
// two alpha_* formulas, principal-pair lemmas), as named checks.
std::vector<IqfCheck> qsheaf_laws(const QSheaf& x);

}  // namespace qk
