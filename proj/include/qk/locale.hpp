#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qk/suplat.hpp"

namespace qk {

struct NotOpen : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSheafHom : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotEquivariant : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotCompatiblePreserving : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Poset {
  int n = 0;
  std::vector<Bits> below;  // below[i] = {j : j <= i}, reflexive

  static Poset discrete(int n);
  static Poset chain(int n);
  bool leq(int i, int j) const { return below[j].test(i); }
  Bits down(const Bits& s) const;
  bool is_downset(const Bits& s) const { return down(s) == s; }
};

// Finite locale = downset lattice of a finite poset (every finite frame is
// one); discrete locales are powersets of antichains.
struct FinLocale {
  Poset poset;
  SupLattice frame;

  static FinLocale of_poset(Poset p, std::size_t cap = 1u << 20);
  static FinLocale discrete(int n);
};

// Locale map X -> B as a monotone map on points; f^* is preimage, f_! is the
// down-closure of the image (left adjoint of f^*).
struct PointMap {
  const FinLocale* src = nullptr;
  const FinLocale* dst = nullptr;
  std::vector<int> f;

  bool monotone() const;
  bool surjective_on_points() const;
  Bits direct(const Bits& x) const;
  Bits preimage(const Bits& b) const;
};

// B-locale: carrier over a base, with the action derived from the anchor as
// b.x := p^*(b) /\ x (so the anchor condition holds by construction).
struct BLocale {
  FinLocale base;
  FinLocale carrier;
  std::vector<int> anchor;  // base point per carrier point; must be monotone

  Bits anchor_direct(const Bits& x) const;    // down-closure of the image
  Bits anchor_preimage(const Bits& b) const;
  Bits act(const Bits& b, const Bits& x) const {
    return anchor_preimage(b) & x;
  }
  bool anchor_monotone() const;

  static BLocale self(FinLocale b);  // B over itself
  static BLocale discrete(int base_pts, std::vector<int> anchor_of_point);
  static BLocale over(FinLocale base, FinLocale carrier, std::vector<int> anchor);
};

// Decides openness of the anchor by checking Frobenius reciprocity
// exhaustively; on success the support is x -> down(anchor image of x).
struct SupportMap {
  const BLocale* owner = nullptr;
  std::vector<Bits> table;  // per carrier frame element index

  Bits of(const Bits& x) const {
    return table[owner->carrier.frame.index_of(x)];
  }
};

SupportMap support_of(const BLocale& x);  // throws NotOpen with witness

struct LocalSectionSet {
  std::vector<Bits> sections;  // all s with spp(x)s = x for every x <= s
  bool sheaf = false;          // \/ sections = 1
};

LocalSectionSet local_sections(const BLocale& x);

// X (x)_B Y realized as the downset locale of the fiberwise product poset
// {(x,y) : p(x) = q(y)}; pure(x, y) is the image of the formal generator.
struct TensorBLocale {
  BLocale xy;
  std::vector<std::pair<int, int>> points;  // carrier points of xy
  std::vector<int> pi1, pi2;                // point maps to X and Y carriers
  Poset px, py;                             // copies of the factor posets

  Bits pure(const Bits& x, const Bits& y) const;
  Bits proj1_direct(const Bits& t) const;
  Bits proj2_direct(const Bits& t) const;
};

TensorBLocale tensor_over_base(const BLocale& X, const BLocale& Y);

// Corollary check: for p an open surjection and q open (both onto B), the
// first projection of the pullback is an open surjection. Throws
// PreconditionFailed with a witness otherwise.
bool surjection_pullback_check(const BLocale& p_side, const BLocale& q_side);

// Sheaf homomorphism Z -> X over B as a point map commuting with anchors.
// pairing_direct_image returns <f,g>_! evaluated on the sections of Z,
// checked against f_!(s) (x) g_!(s).
struct PairingResult {
  TensorBLocale tensor;              // X (x)_B Y
  std::vector<Bits> section_images;  // per section of Z, in tensor frame
};

PairingResult pairing_direct_image(const BLocale& Z, const BLocale& X,
                                   const BLocale& Y, const std::vector<int>& f,
                                   const std::vector<int>& g);

// Unique B-module extension of a map defined on the sections of a B-sheaf:
// h#(x) = \/ { h(s) : s in Sigma_X, s <= x }. Validates equivariance and
// preservation of compatible binary joins first.
SupHom extend_from_sections(const BLocale& X, const BLocale& M,
                            const std::vector<std::pair<Bits, Bits>>& h);

}  // namespace qk
