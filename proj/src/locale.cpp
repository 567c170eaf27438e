#include "qk/locale.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qk {

Poset Poset::discrete(int n) {
  Poset p;
  p.n = n;
  for (int i = 0; i < n; ++i) p.below.push_back(Bits::single(n, i));
  return p;
}

Poset Poset::chain(int n) {
  Poset p;
  p.n = n;
  for (int i = 0; i < n; ++i) {
    Bits b(n);
    for (int j = 0; j <= i; ++j) b.set(j);
    p.below.push_back(b);
  }
  return p;
}

Bits Poset::down(const Bits& s) const {
  Bits r(n);
  s.for_each([&](int i) { r |= below[i]; });
  return r;
}

FinLocale FinLocale::of_poset(Poset p, std::size_t cap) {
  FinLocale l;
  l.frame = SupLattice::from_closure(
      p.n, [p](const Bits& s) { return p.down(s); }, cap);
  l.poset = std::move(p);
  return l;
}

FinLocale FinLocale::discrete(int n) {
  FinLocale l;
  l.poset = Poset::discrete(n);
  l.frame = SupLattice::powerset(n);
  return l;
}

bool PointMap::monotone() const {
  for (int i = 0; i < src->poset.n; ++i)
    for (int j = 0; j < src->poset.n; ++j)
      if (src->poset.leq(i, j) && !dst->poset.leq(f[i], f[j])) return false;
  return true;
}

bool PointMap::surjective_on_points() const {
  std::vector<bool> hit(dst->poset.n, false);
  for (int x : f) hit[x] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Bits PointMap::direct(const Bits& x) const {
  Bits img(dst->poset.n);
  x.for_each([&](int i) { img.set(f[i]); });
  return dst->poset.down(img);
}

Bits PointMap::preimage(const Bits& b) const {
  Bits r(src->poset.n);
  for (int i = 0; i < src->poset.n; ++i)
    if (b.test(f[i])) r.set(i);
  return r;
}

Bits BLocale::anchor_direct(const Bits& x) const {
  Bits img(base.poset.n);
  x.for_each([&](int i) { img.set(anchor[i]); });
  return base.poset.down(img);
}

Bits BLocale::anchor_preimage(const Bits& b) const {
  Bits r(carrier.poset.n);
  for (int i = 0; i < carrier.poset.n; ++i)
    if (b.test(anchor[i])) r.set(i);
  return r;
}

bool BLocale::anchor_monotone() const {
  for (int i = 0; i < carrier.poset.n; ++i)
    for (int j = 0; j < carrier.poset.n; ++j)
      if (carrier.poset.leq(i, j) && !base.poset.leq(anchor[i], anchor[j]))
        return false;
  return true;
}

BLocale BLocale::self(FinLocale b) {
  BLocale x;
  x.base = b;
  x.carrier = std::move(b);
  x.anchor.resize(x.carrier.poset.n);
  std::iota(x.anchor.begin(), x.anchor.end(), 0);
  return x;
}

BLocale BLocale::discrete(int base_pts, std::vector<int> anchor_of_point) {
  BLocale x;
  x.base = FinLocale::discrete(base_pts);
  x.carrier = FinLocale::discrete(int(anchor_of_point.size()));
  x.anchor = std::move(anchor_of_point);
  return x;
}

BLocale BLocale::over(FinLocale base, FinLocale carrier, std::vector<int> anchor) {
  BLocale x;
  x.base = std::move(base);
  x.carrier = std::move(carrier);
  x.anchor = std::move(anchor);
  if (!x.anchor_monotone()) throw PreconditionFailed("anchor not monotone");
  return x;
}

SupportMap support_of(const BLocale& x) {
  if (!x.anchor_monotone()) throw NotOpen("anchor not monotone");
  // Frobenius reciprocity p_!(p^*(b) /\ t) = b /\ p_!(t), exhaustively.
  for (std::size_t bi = 0; bi < x.base.frame.size(); ++bi) {
    Bits b = x.base.frame.element(bi);
    for (std::size_t ti = 0; ti < x.carrier.frame.size(); ++ti) {
      Bits t = x.carrier.frame.element(ti);
      Bits lhs = x.anchor_direct(x.anchor_preimage(b) & t);
      Bits rhs = b & x.anchor_direct(t);
      if (lhs != rhs)
        throw NotOpen("Frobenius fails at b=" + b.to_string() +
                      ", x=" + t.to_string() + ": " + lhs.to_string() +
                      " != " + rhs.to_string());
    }
  }
  SupportMap s;
  s.owner = &x;
  s.table.reserve(x.carrier.frame.size());
  for (std::size_t ti = 0; ti < x.carrier.frame.size(); ++ti)
    s.table.push_back(x.anchor_direct(x.carrier.frame.element(ti)));
  return s;
}

LocalSectionSet local_sections(const BLocale& x) {
  SupportMap spp = support_of(x);
  LocalSectionSet out;
  Bits all(x.carrier.poset.n);
  for (std::size_t si = 0; si < x.carrier.frame.size(); ++si) {
    Bits s = x.carrier.frame.element(si);
    bool ok = true;
    for (std::size_t xi = 0; xi < x.carrier.frame.size() && ok; ++xi) {
      Bits sub = x.carrier.frame.element(xi);
      if (!sub.subset_of(s)) continue;
      if (x.act(spp.table[xi], s) != sub) ok = false;
    }
    if (ok) {
      out.sections.push_back(s);
      all |= s;
    }
  }
  out.sheaf = x.carrier.frame.closure(all) == x.carrier.frame.top();
  return out;
}

TensorBLocale tensor_over_base(const BLocale& X, const BLocale& Y) {
  support_of(X);  // throws NotOpen if not
  support_of(Y);
  TensorBLocale t;
  t.px = X.carrier.poset;
  t.py = Y.carrier.poset;
  for (int i = 0; i < X.carrier.poset.n; ++i)
    for (int j = 0; j < Y.carrier.poset.n; ++j)
      if (X.anchor[i] == Y.anchor[j]) {
        t.points.emplace_back(i, j);
        t.pi1.push_back(i);
        t.pi2.push_back(j);
      }
  int m = int(t.points.size());
  Poset p;
  p.n = m;
  for (int a = 0; a < m; ++a) {
    Bits b(m);
    for (int c = 0; c < m; ++c)
      if (X.carrier.poset.leq(t.points[c].first, t.points[a].first) &&
          Y.carrier.poset.leq(t.points[c].second, t.points[a].second))
        b.set(c);
    p.below.push_back(b);
  }
  std::vector<int> anchor(m);
  for (int a = 0; a < m; ++a) anchor[a] = X.anchor[t.points[a].first];
  t.xy = BLocale::over(X.base, FinLocale::of_poset(std::move(p)), std::move(anchor));
  return t;
}

Bits TensorBLocale::pure(const Bits& x, const Bits& y) const {
  Bits r(int(points.size()));
  for (int a = 0; a < int(points.size()); ++a)
    if (x.test(points[a].first) && y.test(points[a].second)) r.set(a);
  return r;
}

Bits TensorBLocale::proj1_direct(const Bits& t) const {
  Bits r(px.n);
  t.for_each([&](int a) { r.set(points[a].first); });
  return px.down(r);
}

Bits TensorBLocale::proj2_direct(const Bits& t) const {
  Bits r(py.n);
  t.for_each([&](int a) { r.set(points[a].second); });
  return py.down(r);
}

bool surjection_pullback_check(const BLocale& p_side, const BLocale& q_side) {
  SupportMap sp = support_of(p_side);  // NotOpen propagates
  support_of(q_side);
  // Witnessing identity for surjectivity of p: spp_X(1_X) = 1_B.
  if (sp.table[p_side.carrier.frame.index_of(p_side.carrier.frame.top())] !=
      p_side.base.frame.top())
    throw PreconditionFailed("p is not a surjection: spp_X(1) < 1_B");
  TensorBLocale t = tensor_over_base(p_side, q_side);
  // The projection onto the q side, as a locale over q's carrier.
  BLocale proj;
  proj.base = q_side.carrier;
  proj.carrier = t.xy.carrier;
  proj.anchor = t.pi2;
  support_of(proj);  // openness of the projection
  // Surjectivity of the projection on points.
  std::vector<bool> hit(q_side.carrier.poset.n, false);
  for (int j : t.pi2) hit[j] = true;
  for (int j = 0; j < q_side.carrier.poset.n; ++j)
    if (!hit[j])
      throw PreconditionFailed("pullback projection misses point " +
                               std::to_string(j));
  return true;
}

PairingResult pairing_direct_image(const BLocale& Z, const BLocale& X,
                                   const BLocale& Y, const std::vector<int>& f,
                                   const std::vector<int>& g) {
  if (int(f.size()) != Z.carrier.poset.n || int(g.size()) != Z.carrier.poset.n)
    throw NotSheafHom("point map has wrong arity");
  for (int i = 0; i < Z.carrier.poset.n; ++i) {
    if (X.anchor[f[i]] != Z.anchor[i])
      throw NotSheafHom("f not over the base at point " + std::to_string(i));
    if (Y.anchor[g[i]] != Z.anchor[i])
      throw NotSheafHom("g not over the base at point " + std::to_string(i));
  }
  for (int i = 0; i < Z.carrier.poset.n; ++i)
    for (int j = 0; j < Z.carrier.poset.n; ++j)
      if (Z.carrier.poset.leq(i, j) &&
          (!X.carrier.poset.leq(f[i], f[j]) || !Y.carrier.poset.leq(g[i], g[j])))
        throw NotSheafHom("point map not monotone");
  PairingResult r{tensor_over_base(X, Y), {}};
  std::map<std::pair<int, int>, int> idx;
  for (int a = 0; a < int(r.tensor.points.size()); ++a)
    idx[r.tensor.points[a]] = a;
  for (const Bits& s : local_sections(Z).sections) {
    Bits img(int(r.tensor.points.size()));
    s.for_each([&](int i) { img.set(idx.at({f[i], g[i]})); });
    r.section_images.push_back(r.tensor.xy.carrier.poset.down(img));
  }
  return r;
}

SupHom extend_from_sections(const BLocale& X, const BLocale& M,
                            const std::vector<std::pair<Bits, Bits>>& h) {
  LocalSectionSet sec = local_sections(X);
  if (!sec.sheaf) throw PreconditionFailed("X is not a B-sheaf");
  std::map<Bits, Bits> hm;
  for (const auto& [s, m] : h) hm[s] = m;
  for (const Bits& s : sec.sections)
    if (!hm.count(s))
      throw PreconditionFailed("h undefined on section " + s.to_string());
  // Equivariance: h(b.s) = b.h(s) for every base element and section.
  for (std::size_t bi = 0; bi < X.base.frame.size(); ++bi) {
    Bits b = X.base.frame.element(bi);
    for (const Bits& s : sec.sections) {
      Bits bs = X.act(b, s);
      if (!hm.count(bs) || hm.at(bs) != M.act(b, hm.at(s)))
        throw NotEquivariant("at b=" + b.to_string() + ", s=" + s.to_string());
    }
  }
  // Compatible binary joins of sections must be preserved.
  for (const Bits& s : sec.sections)
    for (const Bits& t : sec.sections) {
      Bits join = X.carrier.frame.join(s, t);
      if (!hm.count(join)) continue;  // not a section: not compatible
      if (hm.at(join) != M.carrier.frame.join(hm.at(s), hm.at(t)))
        throw NotCompatiblePreserving("at s=" + s.to_string() +
                                      ", t=" + t.to_string());
    }
  SupHom ext = SupHom::from_function(
      X.carrier.frame, M.carrier.frame, [&](const Bits& x) {
        Bits u(M.carrier.poset.n);
        for (const Bits& s : sec.sections)
          if (s.subset_of(x)) u |= hm.at(s);
        return M.carrier.frame.closure(u);
      });
  return ext;
}

}  // namespace qk
