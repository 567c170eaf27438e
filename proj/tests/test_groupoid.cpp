#include "doctest.h"
#include "qk/groupoid.hpp"

using namespace qk;

namespace {
const std::vector<std::vector<int>> z2_table = {{0, 1}, {1, 0}};
}

TEST_CASE("validation of small groupoids") {
  CHECK(validate(FinGroupoid::trivial()).empty());
  CHECK(validate(FinGroupoid::one_object(z2_table)).empty());
  CHECK(validate(FinGroupoid::pair_groupoid(2)).empty());
  CHECK(validate(FinGroupoid::pair_groupoid(3)).empty());
  CHECK(validate(FinGroupoid::product(FinGroupoid::pair_groupoid(2),
                                      FinGroupoid::one_object(z2_table)))
            .empty());

  FinGroupoid broken = FinGroupoid::pair_groupoid(2);
  broken.comp[1 * broken.n_arrows + 2] = -1;  // erase a composable pair
  auto bad = validate(broken);
  REQUIRE(!bad.empty());
  CHECK(bad.front().find("comp defined iff composable") != std::string::npos);
}

TEST_CASE("orbits and isotropy") {
  auto p2 = orbits_isotropy(FinGroupoid::pair_groupoid(2));
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].size == 2);
  CHECK(p2[0].isotropy == std::vector<int>{0});  // trivial vertex group

  FinGroupoid z2 = FinGroupoid::one_object(z2_table);
  auto oz = orbits_isotropy(z2);
  REQUIRE(oz.size() == 1);
  CHECK(oz[0].size == 1);
  CHECK(oz[0].isotropy == std::vector<int>{0, 1, 1, 0});

  auto both = orbits_isotropy(
      FinGroupoid::disjoint_union(FinGroupoid::trivial(), z2));
  REQUIRE(both.size() == 2);
  CHECK(both[0].isotropy.size() == 1);
  CHECK(both[1].isotropy.size() == 4);
}

TEST_CASE("groupoid isomorphism invariant") {
  FinGroupoid z4 = FinGroupoid::one_object(
      {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
  FinGroupoid v4 = FinGroupoid::one_object(
      {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  CHECK(is_isomorphic(z4, z4));
  CHECK(!is_isomorphic(z4, v4));
  CHECK(!is_isomorphic(FinGroupoid::pair_groupoid(2),
                       FinGroupoid::one_object(z2_table)));
  // Relabelled copy of Z2 with identity at index 1.
  FinGroupoid z2b = FinGroupoid::one_object({{1, 0}, {0, 1}});
  z2b.id = {1};
  z2b.inv = {0, 1};  // each element is its own inverse w.r.t. identity 1
  CHECK(validate(z2b).empty());
  CHECK(is_isomorphic(z2b, FinGroupoid::one_object(z2_table)));
}

TEST_CASE("actions validate and classify") {
  FinGroupoid p2 = FinGroupoid::pair_groupoid(2);
  GAction taut = GAction::tautological(p2);
  CHECK(validate(taut).empty());
  CHECK(action_is_free(taut));
  CHECK(action_orbits(taut).size() == 1);

  FinGroupoid z2 = FinGroupoid::one_object(z2_table);
  GAction pt = GAction::on_point(z2);
  CHECK(validate(pt).empty());
  CHECK(!action_is_free(pt));  // g fixes the point

  // Z2 on itself by multiplication: free, one orbit.
  GAction reg;
  reg.g = &z2;
  reg.n = 2;
  reg.p = {0, 0};
  reg.act = {0, 1, 1, 0};
  CHECK(validate(reg).empty());
  CHECK(action_is_free(reg));
}

TEST_CASE("bi-actions and duality") {
  FinGroupoid p2 = FinGroupoid::pair_groupoid(2);
  BiAction t = BiAction::tautological(p2);
  CHECK(validate(t).empty());
  BiAction d = dual_biaction(t);
  CHECK(validate(d).empty());
  BiAction dd = dual_biaction(d);
  CHECK(dd.act == t.act);
  CHECK(dd.ract == t.ract);
  CHECK(dd.p == t.p);

  // Tautological P2-set {1,2} with trivial right action, then dualized.
  FinGroupoid pt = FinGroupoid::trivial();
  BiAction x = BiAction::from_left(GAction::tautological(p2), pt);
  CHECK(validate(x).empty());
  BiAction xd = dual_biaction(x);
  CHECK(validate(xd).empty());
  CHECK(xd.G == &pt);
  // Right P2-action acts through inverses: x.g = g^-1 x.
  CHECK(xd.right(0, 1) == 1);  // arrow 1: 1 -> 0, so its inverse sends 0 to 1
}

TEST_CASE("functors validate") {
  FinGroupoid z2 = FinGroupoid::one_object(z2_table);
  FinGroupoid pt = FinGroupoid::trivial();
  CHECK(validate(GroupoidFunctor::identity(z2)).empty());

  GroupoidFunctor to_z2;  // unique functor T -> Z2
  to_z2.src = &pt;
  to_z2.dst = &z2;
  to_z2.phi0 = {0};
  to_z2.phi1 = {0};
  CHECK(validate(to_z2).empty());

  GroupoidFunctor bad = to_z2;
  bad.phi1 = {1};  // identity arrow sent to the flip
  CHECK(!validate(bad).empty());
}

TEST_CASE("functor bundles") {
  FinGroupoid pt = FinGroupoid::trivial();
  FinGroupoid z2 = FinGroupoid::one_object(z2_table);
  FinGroupoid p2 = FinGroupoid::pair_groupoid(2);

  auto idb = bundle_of_functor(GroupoidFunctor::identity(pt));
  CHECK(idb.bundle.n == 1);
  CHECK(validate(idb.bundle).empty());

  GroupoidFunctor to_z2;
  to_z2.src = &pt;
  to_z2.dst = &z2;
  to_z2.phi0 = {0};
  to_z2.phi1 = {0};
  auto bz = bundle_of_functor(to_z2);
  CHECK(bz.bundle.n == 2);  // Z2's arrows
  CHECK(validate(bz.bundle).empty());
  CHECK(action_is_free(bz.bundle.left_action()));
  // Global section s(b) = (id, b) sits in the right anchor fiber.
  CHECK(bz.bundle.q[bz.section[0]] == 0);
  CHECK(bz.arrow_of[bz.section[0]] == z2.id[0]);

  GroupoidFunctor incl;  // full subgroupoid on object 0 of P2
  incl.src = &pt;
  incl.dst = &p2;
  incl.phi0 = {0};
  incl.phi1 = {p2.id[0]};
  REQUIRE(validate(incl).empty());
  auto bi = bundle_of_functor(incl);
  CHECK(bi.bundle.n == 2);  // arrows of P2 with dom = object 0
  CHECK(validate(bi.bundle).empty());
  CHECK(action_is_free(bi.bundle.left_action()));
}

TEST_CASE("essential equivalences") {
  FinGroupoid pt = FinGroupoid::trivial();
  FinGroupoid z2 = FinGroupoid::one_object(z2_table);
  FinGroupoid p2 = FinGroupoid::pair_groupoid(2);

  CHECK(is_essential_equivalence(GroupoidFunctor::identity(p2)).ok());

  GroupoidFunctor incl;
  incl.src = &pt;
  incl.dst = &p2;
  incl.phi0 = {0};
  incl.phi1 = {p2.id[0]};
  auto r = is_essential_equivalence(incl);
  CHECK(r.essentially_surjective);
  CHECK(r.fully_faithful);

  GroupoidFunctor to_z2;
  to_z2.src = &pt;
  to_z2.dst = &z2;
  to_z2.phi0 = {0};
  to_z2.phi1 = {0};
  auto r2 = is_essential_equivalence(to_z2);
  CHECK(r2.essentially_surjective);
  CHECK(!r2.fully_faithful);
  CHECK(!r2.ok());

  // Essential equivalence preserves the orbit/isotropy invariants.
  auto a = orbits_isotropy(pt), b = orbits_isotropy(p2);
  CHECK(a.size() == b.size());
  CHECK(a[0].isotropy == b[0].isotropy);
}
