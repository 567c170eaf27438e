// Acceptance battery: one printed pass/fail line per criterion, exit status
// = number of failed criteria. Everything is exhaustive over the generated
// catalogs, so a pass here is a proof at desk scale, not a sample.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qk/bimodule.hpp"
#include "qk/catalog.hpp"
#include "qk/locale.hpp"
#include "qk/morita.hpp"

using namespace qk;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void line(int n, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s  criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", n,
              name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

Bits of_mask(int n, int mask) {
  Bits b(n);
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1) b.set(i);
  return b;
}

std::vector<Bits> sorted(std::vector<Bits> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// ---------------------------------------------------------------- criterion 1
void criterion_quantale_axioms() {
  auto t0 = std::chrono::steady_clock::now();
  auto cat = groupoid_catalog();
  int checks = 0;
  std::string witness;
  for (const FinGroupoid& g : cat) {
    IqfReport r = validate_iqf(quantale_of_groupoid(g));
    checks += static_cast<int>(r.checks.size());
    if (!r.all_pass() && witness.empty()) witness = r.summary();
  }
  double dt = seconds_since(t0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu groupoids, %d checks, %.1fs",
                cat.size(), checks, dt);
  line(1, "quantale axiom suite over the full catalog",
       witness.empty() && dt < 60.0,
       witness.empty() ? buf : witness);
}

// ------------------------------------------------------------ criteria 2 + 3
void criteria_inner_and_laws() {
  auto cat = groupoid_catalog();
  long pairs = 0;
  int sheaves = 0, laws = 0;
  std::string w2, w3;
  for (const FinGroupoid& g : cat) {
    Quantale q = quantale_of_groupoid(g);
    for (const GAction& a : action_catalog(g, 4)) {
      QSheaf x = module_of_action(q, a);
      ++sheaves;
      int m = 1 << x.points();
      for (int xi = 0; xi < m; ++xi)
        for (int yi = 0; yi < m; ++yi) {
          Bits xb = of_mask(x.points(), xi);
          Bits yb = of_mask(x.points(), yi);
          ++pairs;
          if (w2.empty() && x.inner_fast(xb, yb) != x.inner_oracle(xb, yb))
            w2 = "formulas disagree on a " + std::to_string(x.points()) +
                 "-point sheaf";
        }
      for (const IqfCheck& c : qsheaf_laws(x)) {
        ++laws;
        if (!c.pass && w3.empty()) w3 = c.axiom + ": " + c.witness;
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d sheaves, %ld element pairs", sheaves,
                pairs);
  line(2, "closed inner-product formula matches the definitional one",
       w2.empty(), w2.empty() ? buf : w2);
  std::snprintf(buf, sizeof buf, "%d named law checks over %d sheaves", laws,
                sheaves);
  line(3, "Hilbert-module law battery", w3.empty(), w3.empty() ? buf : w3);
}

// ---------------------------------------------------------------- criterion 4
// Direct-image calculus over anchored locales: support formulas, section
// bases of tensors, the pairing direct image (diagonal included), and
// stability of open surjections under pullback.
void criterion_direct_image() {
  std::string w;
  int instances = 0, tensors = 0;
  auto fail = [&](const std::string& msg) {
    if (w.empty()) w = msg;
  };

  // Discrete instances: every anchor map from <=3 carrier points to a base
  // of <=2 points.
  for (int base = 1; base <= 2 && w.empty(); ++base) {
    std::vector<BLocale> xs;
    for (int n = 1; n <= 3; ++n) {
      int maps = 1;
      for (int i = 0; i < n; ++i) maps *= base;
      for (int code = 0; code < maps; ++code) {
        std::vector<int> anchor(n);
        int c = code;
        for (int i = 0; i < n; ++i) {
          anchor[i] = c % base;
          c /= base;
        }
        xs.push_back(BLocale::discrete(base, anchor));
      }
    }
    std::vector<SupportMap> spp;
    std::vector<LocalSectionSet> secs;
    for (const BLocale& x : xs) {
      ++instances;
      spp.push_back(support_of(x));
      secs.push_back(local_sections(x));
      const SupportMap& s = spp.back();
      // spp(b.x) = b /\ spp(x) and x <= p^*(spp x), exhaustively.
      for (std::size_t bi = 0; bi < x.base.frame.size() && w.empty(); ++bi)
        for (std::size_t xi = 0; xi < x.carrier.frame.size(); ++xi) {
          Bits b = x.base.frame.element(bi);
          Bits xe = x.carrier.frame.element(xi);
          if (s.of(x.act(b, xe)) != (b & s.of(xe))) {
            fail("support is not equivariant");
            break;
          }
          if ((x.anchor_preimage(s.of(xe)) & xe) != xe) {
            fail("x not below the preimage of its support");
            break;
          }
        }
      if (!secs.back().sheaf) fail("discrete anchored locale is not a sheaf");
    }
    for (std::size_t i = 0; i < xs.size() && w.empty(); ++i)
      for (std::size_t j = 0; j < xs.size() && w.empty(); ++j) {
        TensorBLocale t = tensor_over_base(xs[i], xs[j]);
        ++tensors;
        BLocale tl{xs[i].base, t.xy.carrier, t.xy.anchor};
        SupportMap st = support_of(tl);
        // Support of a pure tensor is the meet of the supports.
        for (std::size_t xi = 0; xi < xs[i].carrier.frame.size(); ++xi)
          for (std::size_t yi = 0; yi < xs[j].carrier.frame.size(); ++yi) {
            Bits xe = xs[i].carrier.frame.element(xi);
            Bits ye = xs[j].carrier.frame.element(yi);
            if (st.of(t.pure(xe, ye)) != (spp[i].of(xe) & spp[j].of(ye))) {
              fail("tensor support formula fails");
              break;
            }
          }
        // Pure tensors of sections are sections and form a basis: every
        // section of the tensor is the join of the pure section tensors
        // below it (compatible-join closure).
        LocalSectionSet ts = local_sections(t.xy);
        std::vector<Bits> pures;
        for (const Bits& s : secs[i].sections)
          for (const Bits& s2 : secs[j].sections)
            pures.push_back(t.pure(s, s2));
        for (const Bits& p : pures)
          if (std::find(ts.sections.begin(), ts.sections.end(), p) ==
              ts.sections.end())
            fail("a pure section tensor is not a section");
        for (const Bits& u : ts.sections) {
          Bits join(u.universe());
          for (const Bits& p : pures)
            if (p.subset_of(u)) join |= p;
          if (join != u) fail("a tensor section is not a join of pure ones");
        }
        // Diagonal pairing <id,id>_! sends each section s to s (x) s.
        if (i == j) {
          std::vector<int> idm(xs[i].anchor.size());
          for (std::size_t k = 0; k < idm.size(); ++k)
            idm[k] = static_cast<int>(k);
          PairingResult pr =
              pairing_direct_image(xs[i], xs[i], xs[i], idm, idm);
          for (std::size_t si = 0; si < secs[i].sections.size(); ++si)
            if (pr.section_images[si] !=
                pr.tensor.pure(secs[i].sections[si], secs[i].sections[si]))
              fail("diagonal pairing image is not s (x) s");
        }
        // Open surjections are stable under pullback.
        auto surj = [](const BLocale& x) {
          Bits img(x.base.poset.n);
          for (int a : x.anchor) img.set(a);
          return img == Bits::full(x.base.poset.n);
        };
        if (surj(xs[i]) && surj(xs[j]) &&
            !surjection_pullback_check(xs[i], xs[j]))
          fail("pullback of an open surjection is not an open surjection");
      }
  }

  // Poset instances: a locale over itself has identity support, and its
  // self-tensor is the diagonal.
  for (int n = 2; n <= 3 && w.empty(); ++n) {
    BLocale x = BLocale::self(FinLocale::of_poset(Poset::chain(n)));
    ++instances;
    SupportMap s = support_of(x);
    for (std::size_t i = 0; i < x.carrier.frame.size(); ++i)
      if (s.of(x.carrier.frame.element(i)) != x.carrier.frame.element(i))
        fail("self locale support is not the identity");
    TensorBLocale t = tensor_over_base(x, x);
    ++tensors;
    if (t.points.size() != static_cast<std::size_t>(n))
      fail("self tensor is not the diagonal");
  }
  // A non-open anchor is detected, with Frobenius as the witness.
  {
    Poset sier = Poset::chain(2);
    FinLocale base = FinLocale::of_poset(sier);
    BLocale bad = BLocale::over(base, FinLocale::discrete(1), {1});
    try {
      support_of(bad);
      fail("non-open anchor accepted");
    } catch (const NotOpen&) {
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d instances, %d tensors", instances,
                tensors);
  line(4, "direct-image calculus on anchored locales", w.empty(),
       w.empty() ? buf : w);
}

// ---------------------------------------------------------------- criterion 5
void criterion_principal_stack() {
  auto cat = groupoid_catalog();
  std::string w;
  int sheaves = 0, covered = 0;
  auto fail = [&](const std::string& msg) {
    if (w.empty()) w = msg;
  };
  for (const FinGroupoid& g : cat) {
    Quantale q = quantale_of_groupoid(g);
    for (const GAction& a : action_catalog(g, 3)) {
      QSheaf x = module_of_action(q, a);
      ++sheaves;
      PrincipalReport pr = principal_sections(x);
      if (!pr.conditions_agree)
        fail("the four principal-section conditions disagree");
      // Independent freeness oracle: trivial stabilizers of the raw action.
      bool free = true;
      for (int ar = 0; ar < g.n_arrows; ++ar)
        for (int pt = 0; pt < a.n; ++pt)
          if (a.act[ar * a.n + pt] == pt && ar != g.id[a.p[pt]]) free = false;
      FreenessReport fr = check_freeness(x);
      if (fr.free != free || fr.principally_covered != pr.principally_covered ||
          fr.free != fr.principally_covered ||
          fr.pair_map_injective != fr.free)
        fail("freeness, principal coverage and the pair map disagree");
      RightStructure rs = right_structure(x);
      if (!rs.open_right) fail("orbit projection not open: " + rs.witness);
      if (pr.principally_covered) {
        ++covered;
        // Principal bundle theorem: principal sections = bisections.
        if (sorted(pr.principal) != sorted(rs.bisections))
          fail("principal sections differ from the bisections");
        if (!rs.bisheaf) fail("a principal bundle that is not a bisheaf");
      }
      if (rs.bisheaf && !check_transitivity_splitting(x))
        fail("transitivity splitting fails");
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d sheaves, %d principal bundles", sheaves,
                covered);
  line(5, "principality stack", w.empty(), w.empty() ? buf : w);
}

// The shared bisheaf catalog for criteria 6 and 8: every catalog action with
// a trivial right side, plus every functor bundle between small catalog
// groupoids.
struct BisheafCatalog {
  std::vector<QRBisheaf> all;
  // functor-bundle entries, with their functor data
  struct Bundle {
    GroupoidFunctor phi;
    FunctorBundle fb;
    std::size_t index;  // into all
  };
  std::vector<Bundle> bundles;
  std::vector<FinGroupoid> small;  // owns the functor endpoints
};

BisheafCatalog build_bisheaf_catalog() {
  BisheafCatalog out;
  FinGroupoid point = FinGroupoid::trivial();
  for (const FinGroupoid& g : groupoid_catalog())
    for (const GAction& a : action_catalog(g, 3))
      out.all.push_back(make_bisheaf(BiAction::from_left(a, point)));
  out.small = groupoid_catalog(2, 4);
  for (const FinGroupoid& src : out.small)
    for (const FinGroupoid& dst : out.small)
      for (const GroupoidFunctor& phi : functor_catalog(src, dst)) {
        FunctorBundle fb = bundle_of_functor(phi);
        out.all.push_back(make_bisheaf(fb.bundle));
        out.bundles.push_back({phi, std::move(fb), out.all.size() - 1});
      }
  return out;
}

// ---------------------------------------------------------------- criterion 6
void criterion_biprincipality(const BisheafCatalog& bc) {
  std::string w;
  int eligible = 0, witnesses = 0;
  auto fail = [&](const std::string& msg) {
    if (w.empty()) w = msg;
  };
  for (const QRBisheaf& x : bc.all) {
    PrincipalityReport r = is_biprincipal(x);
    if (!r.remark_agree) fail("a report restatement disagrees: " + r.witness);
    if (r.cor[0] && r.cor[1]) {
      ++eligible;
      InterchangeReport ic = interchange_check(x);
      if (!ic.matches_biprincipal)
        fail("interchange rule does not match biprincipality: " + ic.witness);
    }
    if (r.biprincipal) {
      ++witnesses;
      if (!r.inner_full || !r.rinner_full)
        fail("a biprincipal bisheaf with a non-full inner product");
      HSInverse inv = is_hs_invertible(hs_of_bisheaf(x));
      if (!inv.invertible || !inv.unit_isos_ok)
        fail("tensor-unit isomorphisms fail for a biprincipal witness");
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "%zu bisheaves, %d with full joins, %d biprincipal",
                bc.all.size(), eligible, witnesses);
  line(6, "biprincipality = fullness + interchange, with explicit unit isos",
       w.empty(), w.empty() ? buf : w);
}

// ---------------------------------------------------------------- criterion 7
void criterion_morita() {
  auto t0 = std::chrono::steady_clock::now();
  auto cat = groupoid_catalog();
  std::string w;
  long pairs = 0;
  auto fail = [&](const std::string& msg) {
    if (w.empty()) w = msg;
  };
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = 0; j < cat.size(); ++j) {
      MoritaVerdict v = decide_morita(cat[i], cat[j], 8);
      ++pairs;
      if (v.outcome == MoritaOutcome::inconclusive)
        fail("inconclusive at the catalog bound");
      else if (!v.oracle_agrees)
        fail("search disagrees with the orbit-isotropy oracle");
      else if (i == j && v.outcome != MoritaOutcome::equivalent)
        fail("a groupoid not equivalent to itself");
      if (v.outcome == MoritaOutcome::equivalent && !v.unit_isos_ok)
        fail("witness unit isomorphisms fail");
    }
  FinGroupoid point = FinGroupoid::trivial();
  for (int n = 2; n <= 3; ++n) {
    FinGroupoid pn = FinGroupoid::pair_groupoid(n);
    if (decide_morita(pn, point, n).outcome != MoritaOutcome::equivalent)
      fail("pair groupoid not equivalent to the point");
  }
  FinGroupoid z2 = FinGroupoid::one_object({{0, 1}, {1, 0}});
  if (decide_morita(z2, point, 8).outcome != MoritaOutcome::not_equivalent)
    fail("Z2 reported equivalent to the point");
  double dt = seconds_since(t0);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%ld ordered pairs, %.1fs", pairs, dt);
  line(7, "Morita decision agrees with the oracle on every catalog pair",
       w.empty() && dt < 600.0, w.empty() ? buf : w);
}

// ---------------------------------------------------------------- criterion 8
void criterion_functor_bridge(const BisheafCatalog& bc) {
  std::string w;
  auto fail = [&](const std::string& msg) {
    if (w.empty()) w = msg;
  };
  int equivalences = 0;
  for (const BisheafCatalog::Bundle& bu : bc.bundles) {
    const QRBisheaf& x = bc.all[bu.index];
    const GroupoidFunctor& phi = bu.phi;
    const FinGroupoid& src = *phi.src;
    const FinGroupoid& dst = *phi.dst;
    PrincipalityReport r = is_biprincipal(x);
    if (!r.principal) fail("a functor bundle that is not principal");
    // The designated global section: a right section (one point per right
    // object, so injective on the right anchor) with full right support.
    Bits s(x.points());
    for (int pt : bu.fb.section) s.set(pt);
    std::vector<int> hits(src.n_objects, 0);
    s.for_each([&](int pt) { ++hits[x.b.q[pt]]; });
    for (int h : hits)
      if (h != 1) fail("the global section is not a right section");
    if (x.tspp(s) != x.R->unit_b())
      fail("the global section does not have full right support");
    // Round trip: the functor is recovered from the bundle and its section.
    for (int ob = 0; ob < src.n_objects; ++ob)
      if (x.b.p[bu.fb.section[ob]] != phi.phi0[ob])
        fail("object part not recovered from the section");
    for (int h = 0; h < src.n_arrows; ++h) {
      int moved = x.b.ract[h * x.b.n + bu.fb.section[src.cod[h]]];
      int g = -1;
      for (int cand = 0; cand < dst.n_arrows; ++cand)
        if (x.b.act[cand * x.b.n + bu.fb.section[src.dom[h]]] == moved) {
          if (g >= 0) fail("translation arrow not unique");
          g = cand;
        }
      if (g != phi.phi1[h]) fail("arrow part not recovered from the section");
    }
    if (is_essential_equivalence(phi).ok()) {
      ++equivalences;
      if (!is_hs_invertible(hs_of_bisheaf(x)).invertible)
        fail("an essential equivalence whose bundle is not invertible");
      if (!r.biprincipal)
        fail("an essential equivalence whose bundle is not biprincipal");
    } else if (r.biprincipal) {
      fail("a biprincipal bundle of a non-equivalence");
    }
  }
  // Composition: <phi o psi> is isomorphic to <phi> (x) <psi> over a small
  // triple catalog.
  int composites = 0;
  auto tiny = groupoid_catalog(2, 3);
  for (const FinGroupoid& g1 : tiny)
    for (const FinGroupoid& g2 : tiny)
      for (const FinGroupoid& g3 : tiny)
        for (const GroupoidFunctor& phi : functor_catalog(g2, g1))
          for (const GroupoidFunctor& psi : functor_catalog(g3, g2)) {
            QRBisheaf xphi = make_bisheaf(bundle_of_functor(phi).bundle);
            QRBisheaf xpsi = make_bisheaf(bundle_of_functor(psi).bundle);
            GroupoidFunctor comp = GroupoidFunctor::compose(phi, psi);
            QRBisheaf xcomp = make_bisheaf(bundle_of_functor(comp).bundle);
            ++composites;
            if (!bimodule_iso(canonical_form(tensor_compose(xphi, xpsi)),
                              canonical_form(xcomp)))
              fail("composite bundle differs from the tensor of bundles");
          }
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "%zu functor bundles, %d equivalences, %d composites",
                bc.bundles.size(), equivalences, composites);
  line(8, "functor bundles: sections, round trip, composition, invertibility",
       w.empty(), w.empty() ? buf : w);
}

// ---------------------------------------------------------------- criterion 9
void criterion_cli_determinism() {
#ifndef QK_CLI_PATH
  line(9, "CLI catalog determinism", false, "CLI path not configured");
#else
  std::string out1 = "acceptance_cli_a.json", out2 = "acceptance_cli_b.json";
  std::string base = std::string(QK_CLI_PATH) +
                     " catalog --suite full --json-only 2>/dev/null > ";
  if (std::system((base + out1).c_str()) != 0 ||
      std::system((base + out2).c_str()) != 0) {
    line(9, "CLI catalog determinism", false, "a catalog run failed");
    return;
  }
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string a = slurp(out1), b = slurp(out2);
  char buf[64];
  std::snprintf(buf, sizeof buf, "two full runs, %zu bytes each", a.size());
  line(9, "CLI catalog determinism", !a.empty() && a == b,
       !a.empty() && a == b ? buf : "reports differ or are empty");
#endif
}

}  // namespace

int main() {
  criterion_quantale_axioms();
  criteria_inner_and_laws();
  criterion_direct_image();
  criterion_principal_stack();
  BisheafCatalog bc = build_bisheaf_catalog();
  criterion_biprincipality(bc);
  criterion_morita();
  criterion_functor_bridge(bc);
  criterion_cli_determinism();
  if (failures == 0) std::printf("all criteria pass\n");
  return failures;
}
