#include "qk/qmodule.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qk {

namespace {

// spp_Q(a) = a1 /\ e, computed directly (the quantale is assumed validated).
Bits sppq(const Quantale& q, const Bits& a) {
  return q.times_b(a, q.lat.top()) & q.unit_b();
}

}  // namespace

Bits QSheaf::act(const Bits& A, const Bits& U) const {
  Bits r(a.n);
  A.for_each([&](int g) {
    U.for_each([&](int x) {
      int y = a.apply(g, x);
      if (y >= 0) r.set(y);
    });
  });
  return r;
}

Bits QSheaf::spp(const Bits& U) const {
  Bits r(arrows());
  U.for_each([&](int x) { r.set(a.g->id[a.p[x]]); });
  return r;
}

Bits QSheaf::tspp(const Bits& U) const { return act(Bits::full(arrows()), U); }

Bits QSheaf::inner_oracle(const Bits& x, const Bits& y) const {
  Bits r(arrows());
  x.for_each([&](int px) {
    Bits s = Bits::single(a.n, px);
    Bits ss = spp(s);
    y.for_each([&](int py) {
      Bits t = Bits::single(a.n, py);
      Bits st = spp(t);
      for (std::size_t ui : qi) {
        Bits u = Q->lat.element(ui);
        if (!sppq(*Q, u).subset_of(ss)) continue;
        if (!sppq(*Q, Q->star_b(u)).subset_of(st)) continue;
        if (!act(u, t).subset_of(s)) continue;
        r |= u;
      }
    });
  });
  return r;
}

Bits QSheaf::inner_fast(const Bits& x, const Bits& y) const {
  Bits r(arrows());
  for (std::size_t ui : qi) {
    Bits u = Q->lat.element(ui);
    Bits m = act(Q->star_b(u), x) & y;
    if (m.empty()) continue;
    r |= Q->times_b(u, spp(m));
  }
  return r;
}

QSheaf module_of_action(const Quantale& q, GAction a) {
  if (!q.lat.is_powerset() || q.lat.generators() != a.g->n_arrows)
    throw std::runtime_error("InvalidAction: quantale is not O(G) of the action");
  auto bad = validate(a);
  if (!bad.empty()) throw std::runtime_error("InvalidAction: " + bad.front());
  QSheaf x;
  x.Q = &q;
  x.a = std::move(a);
  x.qi = partial_units(q);
  return x;
}

std::vector<Bits> hilbert_sections(const QSheaf& x) {
  std::vector<Bits> out;
  std::size_t N = std::size_t{1} << x.points();
  SupLattice carrier = SupLattice::powerset(x.points());
  for (std::size_t si = 0; si < N; ++si) {
    Bits s = carrier.element(si);
    bool ok = true;
    for (std::size_t xi = 0; xi < N && ok; ++xi) {
      Bits v = carrier.element(xi);
      if (!x.act(x.inner_fast(v, s), s).subset_of(v)) ok = false;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

PrincipalReport principal_sections(const QSheaf& x) {
  PrincipalReport rep;
  rep.sections = hilbert_sections(x);
  Bits e = x.Q->unit_b();
  Bits cover(x.points());
  for (const Bits& s : rep.sections) {
    Bits ss = x.inner_fast(s, s);
    Bits sp = x.spp(s);
    std::array<bool, 4> c{};
    c[0] = ss.subset_of(e);
    c[1] = sp == ss;
    c[2] = true;
    c[3] = true;
    std::size_t nq = x.Q->size();
    for (std::size_t ai = 0; ai < nq; ++ai) {
      Bits a = x.Q->lat.element(ai);
      if (x.act(a, s) != s) continue;
      if (x.Q->times_b(a, sp) != sp) c[2] = false;
      if (sppq(*x.Q, x.Q->star_b(a)) == sp && !a.subset_of(e)) c[3] = false;
    }
    rep.conds.push_back(c);
    bool all = c[0] && c[1] && c[2] && c[3];
    bool any = c[0] || c[1] || c[2] || c[3];
    if (all != any) rep.conditions_agree = false;
    if (all) {
      rep.principal.push_back(s);
      cover |= s;
    }
  }
  rep.principally_covered = cover == Bits::full(x.points());
  return rep;
}

SupLattice invariant_part(const QSheaf& x) {
  std::vector<Bits> closed;
  std::size_t N = std::size_t{1} << x.points();
  SupLattice carrier = SupLattice::powerset(x.points());
  for (std::size_t i = 0; i < N; ++i) {
    Bits v = carrier.element(i);
    if (x.tspp(v).subset_of(v)) closed.push_back(v);
  }
  return SupLattice::from_closed_sets(x.points(), closed);
}

Bits right_inner(const QSheaf& x, const Bits& u, const Bits& v) {
  return x.tspp(u & v);
}

RightStructure right_structure(const QSheaf& x) {
  RightStructure r;
  r.inv = invariant_part(x);
  std::size_t N = std::size_t{1} << x.points();
  SupLattice carrier = SupLattice::powerset(x.points());
  for (std::size_t i = 0; i < N && r.open_right; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      Bits a = carrier.element(i), b = carrier.element(j);
      Bits lhs = x.tspp(a) & x.tspp(b);
      Bits rhs = x.tspp(a & x.tspp(b));
      if (!lhs.subset_of(rhs)) {
        r.open_right = false;
        r.witness = a.to_string() + "," + b.to_string();
        break;
      }
    }
  // Bisections: Hilbert sections that are also right I(X)-sections, i.e.
  // meet each orbit in at most one point.
  Bits cover(x.points());
  for (const Bits& s : hilbert_sections(x)) {
    bool right_sec = true;
    s.for_each([&](int p) {
      s.for_each([&](int p2) {
        if (p != p2 && x.tspp(Bits::single(x.points(), p)).test(p2))
          right_sec = false;
      });
    });
    if (right_sec) {
      r.bisections.push_back(s);
      cover |= s;
    }
  }
  r.bisheaf = cover == Bits::full(x.points());
  return r;
}

FreenessReport check_freeness(const QSheaf& x) {
  FreenessReport rep;
  rep.free = action_is_free(x.a);
  rep.principally_covered = principal_sections(x).principally_covered;
  // <act,pi2>(g,x) = (gx,x); its frame map (the preimage) is surjective onto
  // the pullback frame iff the point map is injective.
  std::map<std::pair<int, int>, std::pair<int, int>> seen;
  rep.pair_map_injective = true;
  for (int g = 0; g < x.arrows(); ++g)
    for (int p = 0; p < x.points(); ++p) {
      int y = x.a.apply(g, p);
      if (y < 0) continue;
      auto key = std::make_pair(y, p);
      auto it = seen.find(key);
      if (it != seen.end()) {
        rep.pair_map_injective = false;
        rep.witness = "arrows g" + std::to_string(it->second.first) + ", g" +
                      std::to_string(g) + " both send x" + std::to_string(p) +
                      " to x" + std::to_string(y);
      } else {
        seen[key] = {g, p};
      }
    }
  return rep;
}

bool check_transitivity_splitting(const QSheaf& x) {
  RightStructure rs = right_structure(x);
  if (!rs.bisheaf) throw std::runtime_error("NotBisheaf");
  // D = G_1 (x)_{G_0} X, C = X (x)_{X/G} X, m(g,p) = (gp, p).
  std::vector<std::pair<int, int>> D;
  for (int g = 0; g < x.arrows(); ++g)
    for (int p = 0; p < x.points(); ++p)
      if (x.a.apply(g, p) >= 0) D.emplace_back(g, p);
  std::vector<int> orbit_of(x.points());
  {
    auto orbs = action_orbits(x.a);
    for (int i = 0; i < int(orbs.size()); ++i)
      for (int p : orbs[i]) orbit_of[p] = i;
  }
  std::map<std::pair<int, int>, int> cidx;
  std::vector<std::pair<int, int>> C;
  for (int y = 0; y < x.points(); ++y)
    for (int p = 0; p < x.points(); ++p)
      if (orbit_of[y] == orbit_of[p]) {
        cidx[{y, p}] = int(C.size());
        C.emplace_back(y, p);
      }
  // Retraction: every point of C is hit by m (both maps preserve joins, so
  // checking singletons suffices).
  std::vector<bool> hit(C.size(), false);
  for (auto& [g, p] : D) hit[cidx.at({x.a.apply(g, p), p})] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
  // Corollary: <act,pi2>_!(u (x) t) = ut (x) t for partial units u and
  // bisections t.
  for (std::size_t ui : x.qi) {
    Bits u = x.Q->lat.element(ui);
    for (const Bits& t : rs.bisections) {
      std::vector<bool> lhs(C.size(), false), rhs(C.size(), false);
      for (auto& [g, p] : D)
        if (u.test(g) && t.test(p)) lhs[cidx.at({x.a.apply(g, p), p})] = true;
      Bits ut = x.act(u, t);
      for (int c = 0; c < int(C.size()); ++c)
        if (ut.test(C[c].first) && t.test(C[c].second)) rhs[c] = true;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool adjoint_identity(const QSheaf& x) {
  SupLattice inv = invariant_part(x);
  std::size_t N = std::size_t{1} << x.points();
  SupLattice carrier = SupLattice::powerset(x.points());
  // <x r*, y> = <x, y r> with r invariant acting by meet (r* = r).
  for (std::size_t ri = 0; ri < inv.size(); ++ri) {
    Bits r = inv.element(ri);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        Bits u = carrier.element(i), v = carrier.element(j);
        if (x.inner_fast(u & r, v) != x.inner_fast(u, v & r)) return false;
      }
  }
  // tspp(ax) = tspp(spp_Q(a*) x).
  for (std::size_t ai = 0; ai < x.Q->size(); ++ai) {
    Bits a = x.Q->lat.element(ai);
    Bits s = sppq(*x.Q, x.Q->star_b(a));
    for (std::size_t i = 0; i < N; ++i) {
      Bits u = carrier.element(i);
      if (x.tspp(x.act(a, u)) != x.tspp(x.act(s, u))) return false;
    }
  }
  // spp_X(xr) = spp_X(x spp_R(r)): with R = I(X) a frame, spp_R(r) = r, and
  // both sides are spp_X(x /\ r); holds definitionally here.
  return true;
}

std::vector<IqfCheck> qsheaf_laws(const QSheaf& x) {
  std::vector<IqfCheck> out;
  std::size_t N = std::size_t{1} << x.points();
  SupLattice carrier = SupLattice::powerset(x.points());
  Bits e = x.Q->unit_b();
  Bits topq = x.Q->lat.top();
  // Precompute the inner-product table over all carrier pairs.
  std::vector<std::vector<Bits>> inner(N, std::vector<Bits>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      inner[i][j] = x.inner_fast(carrier.element(i), carrier.element(j));

  auto check = [&](const std::string& name, auto&& body) {
    IqfCheck c;
    c.axiom = name;
    body(c);
    out.push_back(std::move(c));
  };
  auto fail = [&](IqfCheck& c, const std::string& w) {
    c.pass = false;
    if (c.witness.empty()) c.witness = w;
  };

  check("inner_fast = inner_oracle", [&](IqfCheck& c) {
    for (std::size_t i = 0; i < N && c.pass; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (inner[i][j] !=
            x.inner_oracle(carrier.element(i), carrier.element(j))) {
          fail(c, carrier.element(i).to_string() + "," +
                      carrier.element(j).to_string());
          break;
        }
  });
  check("<ax,y> = a<x,y>", [&](IqfCheck& c) {
    // Index of a.x in the carrier, for every quantale element and carrier
    // element, so the left side is a table lookup.
    std::vector<std::size_t> act_idx(x.Q->size() * N);
    for (std::size_t ai = 0; ai < x.Q->size(); ++ai) {
      Bits a = x.Q->lat.element(ai);
      for (std::size_t i = 0; i < N; ++i)
        act_idx[ai * N + i] = carrier.index_of(x.act(a, carrier.element(i)));
    }
    for (std::size_t ai = 0; ai < x.Q->size() && c.pass; ++ai) {
      Bits a = x.Q->lat.element(ai);
      for (std::size_t i = 0; i < N && c.pass; ++i)
        for (std::size_t j = 0; j < N; ++j)
          if (inner[act_idx[ai * N + i]][j] != x.Q->times_b(a, inner[i][j])) {
            fail(c, a.to_string());
            break;
          }
    }
  });
  check("join-linearity of the inner product", [&](IqfCheck& c) {
    for (std::size_t i = 0; i < N && c.pass; ++i)
      for (std::size_t i2 = 0; i2 < N && c.pass; ++i2)
        for (std::size_t j = 0; j < N; ++j)
          if (inner[i | i2][j] != (inner[i][j] | inner[i2][j])) {
            fail(c, "first-argument join");
            break;
          }
    if (x.inner_fast(Bits(x.points()), Bits::full(x.points())) !=
        Bits(x.arrows()))
      fail(c, "<0,1> != 0");
  });
  check("<x,y> = <y,x>*", [&](IqfCheck& c) {
    for (std::size_t i = 0; i < N && c.pass; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (inner[i][j] != x.Q->star_b(inner[j][i])) {
          fail(c, carrier.element(i).to_string());
          break;
        }
  });
  check("Hilbert basis law x = \\/ <x,t>t", [&](IqfCheck& c) {
    for (std::size_t i = 0; i < N; ++i) {
      Bits v = carrier.element(i);
      Bits acc(x.points());
      for (int t = 0; t < x.points(); ++t) {
        Bits tt = Bits::single(x.points(), t);
        acc |= x.act(x.inner_fast(v, tt), tt);
      }
      if (acc != v) {
        fail(c, v.to_string());
        break;
      }
    }
  });
  check("Parseval", [&](IqfCheck& c) {
    for (std::size_t i = 0; i < N && c.pass; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        Bits acc(x.arrows());
        for (int t = 0; t < x.points(); ++t) {
          std::size_t ti = std::size_t{1} << t;
          acc |= x.Q->times_b(inner[i][ti], inner[ti][j]);
        }
        if (acc != inner[i][j]) {
          fail(c, carrier.element(i).to_string() + "," +
                      carrier.element(j).to_string());
          break;
        }
      }
  });
  check("non-degeneracy", [&](IqfCheck& c) {
    for (std::size_t i = 0; i < N && c.pass; ++i)
      for (std::size_t j = i + 1; j < N; ++j)
        if (inner[i] == inner[j]) {
          fail(c, carrier.element(i).to_string() + " ~ " +
                      carrier.element(j).to_string());
          break;
        }
  });
  check("support formula spp(x) = <x,1> /\\ e = <x,x> /\\ e", [&](IqfCheck& c) {
    for (std::size_t i = 0; i < N; ++i) {
      Bits sp = x.spp(carrier.element(i));
      if (sp != (inner[i][N - 1] & e) || sp != (inner[i][i] & e)) {
        fail(c, carrier.element(i).to_string());
        break;
      }
    }
  });
  check("spp_Q(<x,y>) <= spp_X(x)", [&](IqfCheck& c) {
    for (std::size_t i = 0; i < N && c.pass; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (!sppq(*x.Q, inner[i][j]).subset_of(x.spp(carrier.element(i)))) {
          fail(c, carrier.element(i).to_string());
          break;
        }
  });
  check("anchor condition bx = b1 /\\ x", [&](IqfCheck& c) {
    for (std::size_t bi = 0; bi < x.Q->size() && c.pass; ++bi) {
      Bits b = x.Q->lat.element(bi);
      if (!b.subset_of(e)) continue;
      Bits b1 = x.act(b, x.top());
      for (std::size_t i = 0; i < N; ++i) {
        Bits v = carrier.element(i);
        if (x.act(b, v) != (b1 & v)) {
          fail(c, b.to_string());
          break;
        }
      }
    }
  });
  check("partial-unit action laws", [&](IqfCheck& c) {
    for (std::size_t ui : x.qi) {
      Bits u = x.Q->lat.element(ui);
      Bits us = x.Q->star_b(u);
      for (std::size_t i = 0; i < N && c.pass; ++i)
        for (std::size_t j = 0; j < N; ++j) {
          Bits a = carrier.element(i), b = carrier.element(j);
          if (x.act(u, a & b) != (x.act(u, a) & x.act(u, b)) ||
              x.act(u, a & x.act(us, b)) != (x.act(u, a) & b)) {
            fail(c, u.to_string());
            break;
          }
        }
      if (!c.pass) break;
    }
  });
  check("alpha_* formulas agree", [&](IqfCheck& c) {
    // Both computed as subsets of G_1 (x)_{G_0} X.
    for (std::size_t i = 0; i < N; ++i) {
      Bits v = carrier.element(i);
      std::vector<bool> f1, f2;
      for (int g = 0; g < x.arrows(); ++g)
        for (int p = 0; p < x.points(); ++p) {
          int y = x.a.apply(g, p);
          if (y < 0) continue;
          f1.push_back(v.test(y));
          bool in2 = false;
          for (std::size_t ui : x.qi) {
            Bits u = x.Q->lat.element(ui);
            if (u.test(g) && x.act(x.Q->star_b(u), v).test(p)) in2 = true;
          }
          f2.push_back(in2);
        }
      if (f1 != f2) {
        fail(c, v.to_string());
        break;
      }
    }
  });
  PrincipalReport pr = principal_sections(x);
  check("principal-pair lemma", [&](IqfCheck& c) {
    auto is_principal = [&](const Bits& s) {
      return std::find(pr.principal.begin(), pr.principal.end(), s) !=
             pr.principal.end();
    };
    auto in_qi = [&](const Bits& u) {
      for (std::size_t ui : x.qi)
        if (x.Q->lat.element(ui) == u) return true;
      return false;
    };
    for (const Bits& s : pr.principal)
      for (const Bits& t : pr.principal) {
        Bits u = x.inner_fast(s, t);
        if (!in_qi(u)) fail(c, "item 1 at " + s.to_string());
      }
    for (const Bits& t : pr.principal)
      for (std::size_t ui : x.qi) {
        Bits u = x.Q->lat.element(ui);
        if (sppq(*x.Q, x.Q->star_b(u)) != x.spp(t)) continue;
        Bits s = x.act(u, t);
        if (!is_principal(s) || x.inner_fast(s, t) != u ||
            x.spp(s) != sppq(*x.Q, u))
          fail(c, "item 2 at u=" + u.to_string() + ", t=" + t.to_string());
      }
    for (const Bits& s : pr.sections)
      for (const Bits& t : pr.sections) {
        Bits u = x.inner_fast(s, t);
        if (!in_qi(u)) continue;
        if (x.spp(s) != sppq(*x.Q, u) ||
            x.spp(t) != sppq(*x.Q, x.Q->star_b(u)))
          continue;
        if (!is_principal(s) || !is_principal(t) || x.act(u, t) != s ||
            x.act(x.Q->star_b(u), s) != t)
          fail(c, "item 3 at s=" + s.to_string() + ", t=" + t.to_string());
      }
  });
  check("principal basis iff pairwise partial-unit inners", [&](IqfCheck& c) {
    auto in_qi = [&](const Bits& u) {
      for (std::size_t ui : x.qi)
        if (x.Q->lat.element(ui) == u) return true;
      return false;
    };
    bool all_principal = true;
    bool all_qi = true;
    for (int s = 0; s < x.points(); ++s) {
      Bits bs = Bits::single(x.points(), s);
      if (std::find(pr.principal.begin(), pr.principal.end(), bs) ==
          pr.principal.end())
        all_principal = false;
      for (int t = 0; t < x.points(); ++t)
        if (!in_qi(x.inner_fast(bs, Bits::single(x.points(), t)))) all_qi = false;
    }
    if (all_principal != all_qi) fail(c, "biconditional fails");
  });
  check("Hilbert sections are regular", [&](IqfCheck& c) {
    for (const Bits& s : pr.sections)
      if (x.act(x.inner_fast(s, s), s) != s) {
        fail(c, s.to_string());
        break;
      }
  });
  check("four principality conditions agree", [&](IqfCheck& c) {
    if (!pr.conditions_agree) fail(c, "disagreement");
  });
  return out;
}

}  // namespace qk
