#pragma once

#include <string>
#include <vector>

#include "qk/groupoid.hpp"
#include "qk/suplat.hpp"

namespace qk {

// Unital involutive quantale on a finite sup-lattice, with the product and
// involution tabulated on element indices.
struct Quantale {
  SupLattice lat;
  std::vector<int> mul;  // size n*n, element indices
  std::vector<int> inv;  // size n
  std::size_t unit = 0;

  std::size_t size() const { return lat.size(); }
  int times(int a, int b) const { return mul[a * int(size()) + b]; }
  int star(int a) const { return inv[a]; }
  Bits times_b(const Bits& a, const Bits& b) const {
    return lat.element(times(int(lat.index_of(a)), int(lat.index_of(b))));
  }
  Bits star_b(const Bits& a) const {
    return lat.element(star(int(lat.index_of(a))));
  }
  Bits unit_b() const { return lat.element(unit); }

  // Builds the product/involution tables from functions on elements.
  static Quantale from_functions(SupLattice lat,
                                 const std::function<Bits(const Bits&, const Bits&)>& mul,
                                 const std::function<Bits(const Bits&)>& inv,
                                 const Bits& unit);
  // Any frame as a (trivially involutive) quantale: product = meet, unit = top.
  static Quantale from_frame(SupLattice lat);
};

// O(G): powerset of arrows with pointwise composition, inversion, and the
// identity arrows as unit.
Quantale quantale_of_groupoid(const FinGroupoid& g);

struct IqfCheck {
  std::string axiom;
  bool pass = true;
  std::string witness;  // empty when pass
};

struct IqfReport {
  std::vector<IqfCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string summary() const;
};

// The axiom battery: quantale laws, involution laws, join preservation of the
// product in each variable, frame law of the carrier, stable support
// (spp(a) := a1 /\ e tested against its defining axioms and against aa* /\ e),
// partial-unit cover \/ Q_I = 1, and a <= aa*a.
IqfReport validate_iqf(const Quantale& q);

// Elements with ss* \/ s*s <= e, as element indices (ascending).
std::vector<std::size_t> partial_units(const Quantale& q);

struct SupportOp {
  const Quantale* owner = nullptr;
  std::vector<int> table;  // per element index, an index below the unit

  Bits of(const Bits& a) const {
    return owner->lat.element(table[owner->lat.index_of(a)]);
  }
};

// The unique stable support spp(a) = a1 /\ e = aa* /\ e; throws
// NoStableSupport (std::runtime_error with that message prefix) if the
// support axioms fail.
SupportOp support(const Quantale& q);

// Reconstructs a groupoid from an inverse quantal frame whose carrier is a
// powerset of arrows (atoms = arrows, composition from products of atoms).
FinGroupoid groupoid_of_quantale(const Quantale& q);

}  // namespace qk
