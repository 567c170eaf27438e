#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qk {

// Finite discrete groupoid. Arrows and objects are dense indices; comp(g,h)
// (meaning g after h) is defined iff dom(g) == cod(h), encoded as -1 when
// undefined.
struct FinGroupoid {
  int n_objects = 0;
  int n_arrows = 0;
  std::vector<int> dom, cod;   // per arrow
  std::vector<int> inv;        // per arrow
  std::vector<int> id;         // per object
  std::vector<int> comp;       // n_arrows * n_arrows, -1 when undefined

  int compose(int g, int h) const { return comp[g * n_arrows + h]; }

  // One-object groupoid from a group multiplication table (identity at 0).
  static FinGroupoid one_object(const std::vector<std::vector<int>>& mul);
  static FinGroupoid trivial() { return one_object({{0}}); }
  static FinGroupoid pair_groupoid(int k);
  static FinGroupoid disjoint_union(const FinGroupoid& a, const FinGroupoid& b);
  static FinGroupoid product(const FinGroupoid& a, const FinGroupoid& b);
  FinGroupoid opposite() const;
};

// Empty result means every axiom holds; otherwise one line per violation,
// with witnesses.
std::vector<std::string> validate(const FinGroupoid& g);

struct OrbitInfo {
  int size = 0;                  // number of objects in the orbit
  std::vector<int> isotropy;     // canonical flattened multiplication table
  std::vector<int> objects;      // members, ascending
  bool operator==(const OrbitInfo&) const = default;
};

// Connected components under arrow-reachability, each with the iso-class of
// its vertex group as a canonical (lex-least relabelled) table.
std::vector<OrbitInfo> orbits_isotropy(const FinGroupoid& g);

// Canonical form of a group given by a multiplication table with identity 0:
// the lex-least table over all relabellings fixing 0.
std::vector<int> canonical_group_table(const std::vector<std::vector<int>>& mul);

bool is_isomorphic(const FinGroupoid& a, const FinGroupoid& b);

// Left action of a groupoid on a finite set: act(g, x) defined iff
// dom(g) == p(x), with p(act(g,x)) == cod(g).
struct GAction {
  const FinGroupoid* g = nullptr;
  int n = 0;                 // carrier size
  std::vector<int> p;        // anchor, per point
  std::vector<int> act;      // n_arrows * n, -1 when undefined

  int apply(int arrow, int x) const { return act[arrow * n + x]; }

  static GAction tautological(const FinGroupoid& g);  // on objects, via cod/dom
  static GAction on_point(const FinGroupoid& g);      // needs 1 object
};

std::vector<std::string> validate(const GAction& a);

// Orbits of the carrier, plus per-point stabilizer sizes.
std::vector<std::vector<int>> action_orbits(const GAction& a);
bool action_is_free(const GAction& a);

// G-H bi-set: left G-action and right H-action on the same carrier.
// Right convention: ract(h, x) = x.h, defined iff cod(h) == q(x), with
// q(x.h) == dom(h).
struct BiAction {
  const FinGroupoid* G = nullptr;
  const FinGroupoid* H = nullptr;
  int n = 0;
  std::vector<int> p, q;       // left and right anchors
  std::vector<int> act;        // G arrows * n
  std::vector<int> ract;       // H arrows * n

  int left(int g, int x) const { return act[g * n + x]; }
  int right(int x, int h) const { return ract[h * n + x]; }

  GAction left_action() const;
  GAction right_as_left() const;  // left action of H.opposite(); caller owns Hop

  // Tautological G-G bi-set on arrows: g.x.h = comp(comp(g,x),h).
  static BiAction tautological(const FinGroupoid& g);
  // Left action with a trivial right action of the one-object groupoid.
  static BiAction from_left(const GAction& a, const FinGroupoid& point);
};

std::vector<std::string> validate(const BiAction& x);

// X* : the H-G bi-set with h.x := x.h^-1 and x.g := g^-1.x.
BiAction dual_biaction(const BiAction& x);

struct GroupoidFunctor {
  const FinGroupoid* src = nullptr;
  const FinGroupoid* dst = nullptr;
  std::vector<int> phi0, phi1;

  static GroupoidFunctor identity(const FinGroupoid& g);
  static GroupoidFunctor compose(const GroupoidFunctor& f,
                                 const GroupoidFunctor& g);  // f after g
};

std::vector<std::string> validate(const GroupoidFunctor& f);

// The pullback bundle of a functor phi : H -> G: carrier
// {(g, b) : g in G_1, b in H_0, dom(g) = phi0(b)}, with G acting on the left
// by composition and H on the right through phi1. Left anchor cod(g), right
// anchor b; carries the global section b -> (id_{phi0(b)}, b).
struct FunctorBundle {
  BiAction bundle;               // left dst-action, right src-action
  std::vector<int> arrow_of;     // per carrier point, the G-arrow
  std::vector<int> object_of;    // per carrier point, the H-object
  std::vector<int> section;      // per H-object, the carrier point (id, b)
};

FunctorBundle bundle_of_functor(const GroupoidFunctor& phi);

struct EssEquivReport {
  bool essentially_surjective = false;
  bool fully_faithful = false;
  std::string detail;
  bool ok() const { return essentially_surjective && fully_faithful; }
};

EssEquivReport is_essential_equivalence(const GroupoidFunctor& phi);

}  // namespace qk
