#include "doctest.h"
#include "qk/morita.hpp"

using namespace qk;

namespace {

const std::vector<std::vector<int>> z2_table = {{0, 1}, {1, 0}};

bool same_rep(const QRBisheaf& a, const QRBisheaf& b) {
  return same_groupoid(*a.G, *b.G) && same_groupoid(*a.H, *b.H) &&
         a.b.p == b.b.p && a.b.q == b.b.q && a.b.act == b.b.act &&
         a.b.ract == b.b.ract;
}

HSMap taut_p2_hs() {
  FinGroupoid p2 = FinGroupoid::pair_groupoid(2);
  FinGroupoid pt = FinGroupoid::trivial();
  return hs_of_bisheaf(
      make_bisheaf(BiAction::from_left(GAction::tautological(p2), pt)));
}

}  // namespace

TEST_CASE("morita oracle on the stock examples") {
  FinGroupoid t = FinGroupoid::trivial();
  FinGroupoid z2 = FinGroupoid::one_object(z2_table);
  FinGroupoid p2 = FinGroupoid::pair_groupoid(2);
  FinGroupoid p2z2 = FinGroupoid::product(p2, z2);
  CHECK(morita_oracle(p2, t));
  CHECK(!morita_oracle(z2, t));
  CHECK(morita_oracle(z2, p2z2));
  CHECK(morita_oracle(z2, z2));
  CHECK(!morita_oracle(FinGroupoid::disjoint_union(z2, z2), z2));
}

TEST_CASE("hs identity maps are biprincipal units") {
  Quantale qz = quantale_of_groupoid(FinGroupoid::one_object(z2_table));
  HSMap id = hs_identity(qz);
  CHECK(id.rep.points() == 2);
  CHECK(id.rep.Q->size() == 4);
  HSInverse inv = is_hs_invertible(id);
  CHECK(inv.invertible);
  CHECK(inv.unit_isos_ok);

  Quantale qp = quantale_of_groupoid(FinGroupoid::pair_groupoid(2));
  HSMap idp = hs_identity(qp);
  CHECK(idp.rep.points() == 4);
  CHECK(idp.rep.Q->size() == 16);
  CHECK(is_hs_invertible(idp).invertible);
}

TEST_CASE("hs composition: unit laws and the tautological inverse") {
  HSMap f = taut_p2_hs();  // O(P2) <- O(T)
  HSMap idq = hs_identity(*f.rep.Q);
  HSMap idr = hs_identity(*f.rep.R);
  CHECK(same_rep(hs_compose(idq, f).rep, f.rep));
  CHECK(same_rep(hs_compose(f, idr).rep, f.rep));
  HSInverse inv = is_hs_invertible(f);
  CHECK(inv.invertible);
  CHECK(inv.unit_isos_ok);
  HSMap fd = hs_of_bisheaf(*inv.inverse);
  CHECK(same_rep(hs_compose(f, fd).rep, idq.rep));
  CHECK(same_rep(hs_compose(fd, f).rep, idr.rep));
}

TEST_CASE("functor bundles compose under hs composition") {
  FinGroupoid t = FinGroupoid::trivial();
  FinGroupoid z2 = FinGroupoid::one_object(z2_table);
  GroupoidFunctor psi{&t, &z2, {0}, {0}};
  GroupoidFunctor phi = GroupoidFunctor::identity(z2);
  HSMap hphi = hs_of_bisheaf(make_bisheaf(bundle_of_functor(phi).bundle));
  HSMap hpsi = hs_of_bisheaf(make_bisheaf(bundle_of_functor(psi).bundle));
  GroupoidFunctor comp = GroupoidFunctor::compose(phi, psi);
  HSMap hcomp = hs_of_bisheaf(make_bisheaf(bundle_of_functor(comp).bundle));
  CHECK(same_rep(hs_compose(hphi, hpsi).rep, hcomp.rep));
  // Associativity on a small triple.
  HSMap a = hs_compose(hphi, hs_compose(hphi, hpsi));
  HSMap b = hs_compose(hs_compose(hphi, hphi), hpsi);
  CHECK(same_rep(a.rep, b.rep));
  // phi: T -> Z2 is not an essential equivalence, so not invertible.
  CHECK(!is_hs_invertible(hpsi).invertible);
}

TEST_CASE("decide_morita: pair groupoids are equivalent to the point") {
  FinGroupoid t = FinGroupoid::trivial();
  for (int n = 2; n <= 3; ++n) {
    MoritaVerdict v = decide_morita(FinGroupoid::pair_groupoid(n), t, 4);
    CHECK(v.outcome == MoritaOutcome::equivalent);
    CHECK(v.oracle_agrees);
    CHECK(v.unit_isos_ok);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->points() == n);
    CHECK(is_biprincipal(*v.witness).biprincipal);
  }
}

TEST_CASE("decide_morita: negative and reflexive cases") {
  FinGroupoid t = FinGroupoid::trivial();
  FinGroupoid z2 = FinGroupoid::one_object(z2_table);
  MoritaVerdict v = decide_morita(z2, t, 6);
  CHECK(v.outcome == MoritaOutcome::not_equivalent);
  CHECK(v.oracle_agrees);
  CHECK(v.detail.find("invariant") != std::string::npos);

  for (const FinGroupoid& g :
       {t, z2, FinGroupoid::pair_groupoid(2),
        FinGroupoid::disjoint_union(z2, FinGroupoid::pair_groupoid(2))}) {
    MoritaVerdict r = decide_morita(g, g, 8);
    CHECK(r.outcome == MoritaOutcome::equivalent);
    CHECK(r.oracle_agrees);
  }
}

TEST_CASE("decide_morita: inconclusive when the bound is too small") {
  FinGroupoid t = FinGroupoid::trivial();
  MoritaVerdict v = decide_morita(FinGroupoid::pair_groupoid(2), t, 1);
  CHECK(v.outcome == MoritaOutcome::inconclusive);
  CHECK(!v.oracle_agrees);
  CHECK(v.detail.find("bound") != std::string::npos);
}
