#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qk/qmodule.hpp"

namespace qk {

// Q-R-bisheaf on a discrete bi-set: the carrier is the powerset of the
// bi-acted set, Q = O(G) acts on the left, R = O(H) on the right, and the
// two inner products are the left one and the one of the dual R-sheaf.
// Owns copies of the groupoids and quantales so values can be moved and
// copied freely; the embedded sheaves point into the owned quantales.
struct QRBisheaf {
  std::shared_ptr<FinGroupoid> G, H;
  std::shared_ptr<Quantale> Q, R;
  BiAction b;                    // rebound to the owned groupoids
  QSheaf left;                   // the Q-sheaf of the left action
  QSheaf rdual;                  // the R-sheaf of the dual right action
  std::vector<Bits> bisections;  // subsets injective on both anchors

  int points() const { return b.n; }
  Bits top() const { return Bits::full(b.n); }

  Bits act(const Bits& a, const Bits& x) const { return left.act(a, x); }
  // x.r for r in R, via the dual action x.r = r* |> x.
  Bits ract(const Bits& x, const Bits& r) const;

  // <x,y> in Q, left-linear in x; [x,y] in R, right-linear in y.
  Bits inner(const Bits& x, const Bits& y) const {
    return left.inner_fast(x, y);
  }
  Bits rinner(const Bits& x, const Bits& y) const {
    return rdual.inner_fast(x, y);
  }

  // spp_X : X -> Q_0 and tspp : X -> R_0.
  Bits sppx(const Bits& x) const { return left.spp(x); }
  Bits tspp(const Bits& x) const { return rdual.spp(x); }
};

// Builds the bisheaf of a bi-set; copies both groupoids, constructs their
// quantales and validates everything. Throws InvalidBiAction
// (std::runtime_error) when the bi-set is not a valid bi-action.
QRBisheaf make_bisheaf(const BiAction& b);

// X*: the R-Q-bisheaf on the same points with the actions conjugated by
// the inversions; the two inner products trade places (up to star).
QRBisheaf dual(const QRBisheaf& x);

// X (x)_R Y: carrier = (X x_{H_0} Y)/H via union-find over the balancing
// relations (x.h, y) ~ (x, h.y); actions descend coordinatewise. Throws
// QuantaleMismatch (std::runtime_error) when the middle groupoids differ.
QRBisheaf tensor_compose(const QRBisheaf& x, const QRBisheaf& y);

struct PrincipalityReport {
  // thm[0]: <s,s> <= e_Q for all bisections; thm[1]: [1,1] >= e_R;
  // thm[2]: 1 tspp(s) <= 1_Q s; thm[3]: <1,1> >= e_Q (left surjectivity).
  std::array<bool, 4> thm{};
  // cor[0]: \/<s,s> = e_Q; cor[1]: \/[s,s] = e_R; cor[2] = thm[2];
  // cor[3]: spp_X(s) 1 <= s 1_R.
  std::array<bool, 4> cor{};
  bool remark_agree = false;   // the equivalent restatements match
  bool principal = false;      // thm[0] && thm[1] && thm[2]
  bool left_surjective = false;
  bool biprincipal = false;    // all four cor conditions
  bool inner_full = false;     // <X,X> = Q (evaluated when biprincipal)
  bool rinner_full = false;    // [X,X] = R
  std::string witness;         // first failure, if any
};

PrincipalityReport is_principal(const QRBisheaf& x);
PrincipalityReport is_biprincipal(const QRBisheaf& x);

struct InterchangeReport {
  bool interchange = false;          // <s,t>u = s[t,u] on all triples
  bool matches_biprincipal = false;  // equivalence with the cor conditions
  std::string witness;
};

// Exhaustive check of the interchange rule over bisection triples; requires
// the two fullness joins \/<s,s> = e_Q and \/[s,s] = e_R, else throws
// HypothesisFailed (std::runtime_error).
InterchangeReport interchange_check(const QRBisheaf& x);

// The unique partial unit u with u t = s and spp_Q(u*) = spp_X(t), namely
// <s,t>; uniqueness is asserted by exhausting Q_I. Throws NotPrincipal or
// SupportMismatch (std::runtime_error).
Bits translation_element(const QRBisheaf& x, const Bits& s, const Bits& t);

// Carrier bijection commuting with both anchors and both actions, or
// nullopt after exhausting all bijections. Requires the same quantale pair.
std::optional<std::vector<int>> bimodule_iso(const QRBisheaf& x,
                                             const QRBisheaf& y);

// Lexicographically least relabelling of the carrier: the canonical form
// used to represent isomorphism classes (Hilsum-Skandalis maps).
BiAction canonical_biaction(const BiAction& b);
QRBisheaf canonical_form(const QRBisheaf& x);

bool same_groupoid(const FinGroupoid& a, const FinGroupoid& b);

}  // namespace qk
