#include "qk/morita.hpp"

#include <algorithm>
#include <stdexcept>

namespace qk {

HSMap hs_of_bisheaf(const QRBisheaf& x) {
  QRBisheaf c = canonical_form(x);
  if (!is_principal(c).principal)
    throw std::runtime_error("NotPrincipal: not a principal bisheaf");
  return {std::move(c)};
}

HSMap hs_identity(const Quantale& q) {
  FinGroupoid g = groupoid_of_quantale(q);
  return hs_of_bisheaf(make_bisheaf(BiAction::tautological(g)));
}

HSMap hs_compose(const HSMap& f, const HSMap& g) {
  return hs_of_bisheaf(tensor_compose(f.rep, g.rep));
}

HSInverse is_hs_invertible(const HSMap& f) {
  HSInverse r;
  if (!is_biprincipal(f.rep).biprincipal) return r;
  r.invertible = true;
  QRBisheaf xd = canonical_form(dual(f.rep));
  QRBisheaf lu = make_bisheaf(BiAction::tautological(*f.rep.G));
  QRBisheaf ru = make_bisheaf(BiAction::tautological(*f.rep.H));
  r.unit_isos_ok = bimodule_iso(tensor_compose(f.rep, xd), lu).has_value() &&
                   bimodule_iso(tensor_compose(xd, f.rep), ru).has_value();
  r.inverse = std::move(xd);
  return r;
}

bool morita_oracle(const FinGroupoid& a, const FinGroupoid& b) {
  auto classes = [](const FinGroupoid& g) {
    std::vector<std::vector<int>> iso;
    for (const OrbitInfo& o : orbits_isotropy(g)) iso.push_back(o.isotropy);
    std::sort(iso.begin(), iso.end());
    return iso;
  };
  return classes(a) == classes(b);
}

MoritaVerdict decide_morita(const FinGroupoid& g1, const FinGroupoid& g2,
                            int bound) {
  MoritaVerdict v;
  bool oracle = morita_oracle(g1, g2);
  // Right-principal candidates: bundles of functors g2 -> g1, with carrier
  // sum over right fibers of the left out-degree.
  std::vector<int> outdeg(g1.n_objects, 0);
  for (int a = 0; a < g1.n_arrows; ++a) ++outdeg[g1.dom[a]];
  for (const GroupoidFunctor& phi : functor_catalog(g2, g1)) {
    int carrier = 0;
    for (int b = 0; b < g2.n_objects; ++b) carrier += outdeg[phi.phi0[b]];
    if (carrier > bound) continue;
    if (!is_essential_equivalence(phi).ok()) continue;
    QRBisheaf x = make_bisheaf(bundle_of_functor(phi).bundle);
    if (!is_biprincipal(x).biprincipal) continue;
    v.outcome = MoritaOutcome::equivalent;
    v.oracle_agrees = oracle;
    QRBisheaf xd = dual(x);
    QRBisheaf lu = make_bisheaf(BiAction::tautological(g1));
    QRBisheaf ru = make_bisheaf(BiAction::tautological(g2));
    v.unit_isos_ok = bimodule_iso(tensor_compose(x, xd), lu).has_value() &&
                     bimodule_iso(tensor_compose(xd, x), ru).has_value();
    v.witness = std::move(x);
    v.detail = "biprincipal witness with " + std::to_string(carrier) +
               " carrier points";
    return v;
  }
  if (!oracle) {
    v.outcome = MoritaOutcome::not_equivalent;
    v.oracle_agrees = true;
    v.detail = "orbit isotropy invariants differ";
  } else {
    v.outcome = MoritaOutcome::inconclusive;
    v.oracle_agrees = false;
    v.detail = "no witness within carrier bound " + std::to_string(bound) +
               ", but the oracle reports equivalence";
  }
  return v;
}

}  // namespace qk
