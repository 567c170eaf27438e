#pragma once

#include <optional>
#include <string>

#include "qk/bimodule.hpp"
#include "qk/catalog.hpp"

namespace qk {

// A Hilsum-Skandalis map R -> Q: the isomorphism class of a principal
// Q-R-bisheaf, held as its canonical form.
struct HSMap {
  QRBisheaf rep;
};

// Canonicalizes and checks principality; throws NotPrincipal
// (std::runtime_error) otherwise.
HSMap hs_of_bisheaf(const QRBisheaf& x);

// The unit bisheaf of the groupoid reconstructed from q.
HSMap hs_identity(const Quantale& q);

// f after g: the canonical form of rep(f) (x) rep(g). Throws
// QuantaleMismatch when the middle quantales differ.
HSMap hs_compose(const HSMap& f, const HSMap& g);

struct HSInverse {
  bool invertible = false;
  std::optional<QRBisheaf> inverse;  // the dual, canonical, when invertible
  bool unit_isos_ok = false;  // X (x) X* and X* (x) X match the unit bisheaves
};

HSInverse is_hs_invertible(const HSMap& f);

// Ground truth for discrete groupoids: Morita equivalence is equivalence of
// the underlying categories, i.e. equal multisets of orbit isotropy classes
// (orbit sizes ignored).
bool morita_oracle(const FinGroupoid& a, const FinGroupoid& b);

enum class MoritaOutcome { equivalent, not_equivalent, inconclusive };

struct MoritaVerdict {
  MoritaOutcome outcome = MoritaOutcome::inconclusive;
  std::optional<QRBisheaf> witness;  // biprincipal bisheaf when equivalent
  bool oracle_agrees = false;
  bool unit_isos_ok = false;  // tensor-unit isomorphisms of the witness
  std::string detail;
};

// Bounded search for a biprincipal O(g1)-O(g2)-bisheaf: right-principal
// candidates are exactly the functor bundles of functors g2 -> g1 and are
// enumerated fiber-by-fiber over the right objects, pruned by carrier size
// and essential surjectivity/faithfulness before full validation with
// is_biprincipal. Conclusive verdicts are cross-checked against the oracle.
MoritaVerdict decide_morita(const FinGroupoid& g1, const FinGroupoid& g2,
                            int bound);

}  // namespace qk
