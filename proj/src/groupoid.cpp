#include "qk/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace qk {

namespace {

std::string arrow_name(int g) { return "g" + std::to_string(g); }

}  // namespace

FinGroupoid FinGroupoid::one_object(const std::vector<std::vector<int>>& mul) {
  int m = int(mul.size());
  FinGroupoid g;
  g.n_objects = 1;
  g.n_arrows = m;
  g.dom.assign(m, 0);
  g.cod.assign(m, 0);
  g.id = {0};
  g.comp.resize(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) g.comp[a * m + b] = mul[a][b];
  g.inv.assign(m, -1);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (mul[a][b] == 0) g.inv[a] = b;
  return g;
}

FinGroupoid FinGroupoid::pair_groupoid(int k) {
  FinGroupoid g;
  g.n_objects = k;
  g.n_arrows = k * k;  // arrow i*k+j : j -> i
  g.dom.resize(k * k);
  g.cod.resize(k * k);
  g.inv.resize(k * k);
  g.id.resize(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int a = i * k + j;
      g.dom[a] = j;
      g.cod[a] = i;
      g.inv[a] = j * k + i;
    }
  for (int o = 0; o < k; ++o) g.id[o] = o * k + o;
  g.comp.assign(g.n_arrows * g.n_arrows, -1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l)
        g.comp[(i * k + j) * g.n_arrows + (j * k + l)] = i * k + l;
  return g;
}

FinGroupoid FinGroupoid::disjoint_union(const FinGroupoid& a, const FinGroupoid& b) {
  FinGroupoid g;
  g.n_objects = a.n_objects + b.n_objects;
  g.n_arrows = a.n_arrows + b.n_arrows;
  g.dom = a.dom;
  g.cod = a.cod;
  g.inv = a.inv;
  g.id = a.id;
  for (int x : b.dom) g.dom.push_back(x + a.n_objects);
  for (int x : b.cod) g.cod.push_back(x + a.n_objects);
  for (int x : b.inv) g.inv.push_back(x + a.n_arrows);
  for (int x : b.id) g.id.push_back(x + a.n_arrows);
  g.comp.assign(g.n_arrows * g.n_arrows, -1);
  for (int x = 0; x < a.n_arrows; ++x)
    for (int y = 0; y < a.n_arrows; ++y)
      g.comp[x * g.n_arrows + y] = a.comp[x * a.n_arrows + y];
  for (int x = 0; x < b.n_arrows; ++x)
    for (int y = 0; y < b.n_arrows; ++y) {
      int c = b.comp[x * b.n_arrows + y];
      g.comp[(x + a.n_arrows) * g.n_arrows + (y + a.n_arrows)] =
          c < 0 ? -1 : c + a.n_arrows;
    }
  return g;
}

FinGroupoid FinGroupoid::product(const FinGroupoid& a, const FinGroupoid& b) {
  FinGroupoid g;
  g.n_objects = a.n_objects * b.n_objects;
  g.n_arrows = a.n_arrows * b.n_arrows;
  auto obj = [&](int x, int y) { return x * b.n_objects + y; };
  auto arr = [&](int x, int y) { return x * b.n_arrows + y; };
  g.dom.resize(g.n_arrows);
  g.cod.resize(g.n_arrows);
  g.inv.resize(g.n_arrows);
  for (int x = 0; x < a.n_arrows; ++x)
    for (int y = 0; y < b.n_arrows; ++y) {
      g.dom[arr(x, y)] = obj(a.dom[x], b.dom[y]);
      g.cod[arr(x, y)] = obj(a.cod[x], b.cod[y]);
      g.inv[arr(x, y)] = arr(a.inv[x], b.inv[y]);
    }
  g.id.resize(g.n_objects);
  for (int x = 0; x < a.n_objects; ++x)
    for (int y = 0; y < b.n_objects; ++y)
      g.id[obj(x, y)] = arr(a.id[x], b.id[y]);
  g.comp.assign(g.n_arrows * g.n_arrows, -1);
  for (int x1 = 0; x1 < a.n_arrows; ++x1)
    for (int y1 = 0; y1 < b.n_arrows; ++y1)
      for (int x2 = 0; x2 < a.n_arrows; ++x2)
        for (int y2 = 0; y2 < b.n_arrows; ++y2) {
          int cx = a.comp[x1 * a.n_arrows + x2];
          int cy = b.comp[y1 * b.n_arrows + y2];
          if (cx >= 0 && cy >= 0)
            g.comp[arr(x1, y1) * g.n_arrows + arr(x2, y2)] = arr(cx, cy);
        }
  return g;
}

FinGroupoid FinGroupoid::opposite() const {
  FinGroupoid g = *this;
  std::swap(g.dom, g.cod);
  for (int x = 0; x < n_arrows; ++x)
    for (int y = 0; y < n_arrows; ++y)
      g.comp[x * n_arrows + y] = comp[y * n_arrows + x];
  return g;
}

std::vector<std::string> validate(const FinGroupoid& g) {
  std::vector<std::string> bad;
  auto fail = [&](const std::string& s) {
    if (bad.size() < 32) bad.push_back(s);
  };
  int n = g.n_arrows;
  if (int(g.dom.size()) != n || int(g.cod.size()) != n || int(g.inv.size()) != n ||
      int(g.id.size()) != g.n_objects || int(g.comp.size()) != n * n) {
    fail("structure tables have wrong sizes");
    return bad;
  }
  for (int a = 0; a < n; ++a) {
    if (g.dom[a] < 0 || g.dom[a] >= g.n_objects || g.cod[a] < 0 ||
        g.cod[a] >= g.n_objects)
      fail("dom/cod out of range at " + arrow_name(a));
    if (g.inv[a] < 0 || g.inv[a] >= n) fail("inv out of range at " + arrow_name(a));
  }
  if (!bad.empty()) return bad;
  for (int o = 0; o < g.n_objects; ++o) {
    int e = g.id[o];
    if (e < 0 || e >= n || g.dom[e] != o || g.cod[e] != o)
      fail("id of object " + std::to_string(o) + " is not an endo-arrow");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = g.comp[a * n + b];
      bool composable = g.dom[a] == g.cod[b];
      if (composable != (c >= 0)) {
        fail("comp defined iff composable fails at (" + arrow_name(a) + "," +
             arrow_name(b) + ")");
        continue;
      }
      if (c >= 0 && (g.dom[c] != g.dom[b] || g.cod[c] != g.cod[a]))
        fail("dom/cod of composite wrong at (" + arrow_name(a) + "," +
             arrow_name(b) + ")");
    }
  if (!bad.empty()) return bad;
  for (int a = 0; a < n; ++a) {
    if (g.compose(g.id[g.cod[a]], a) != a || g.compose(a, g.id[g.dom[a]]) != a)
      fail("unit law fails at " + arrow_name(a));
    if (g.compose(a, g.inv[a]) != g.id[g.cod[a]] ||
        g.compose(g.inv[a], a) != g.id[g.dom[a]])
      fail("inverse law fails at " + arrow_name(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (g.dom[a] != g.cod[b]) continue;
      for (int c = 0; c < n; ++c) {
        if (g.dom[b] != g.cod[c]) continue;
        if (g.compose(g.compose(a, b), c) != g.compose(a, g.compose(b, c)))
          fail("associativity fails at (" + arrow_name(a) + "," + arrow_name(b) +
               "," + arrow_name(c) + ")");
      }
    }
  return bad;
}

std::vector<int> canonical_group_table(const std::vector<std::vector<int>>& mul) {
  int m = int(mul.size());
  // Normalize the identity to index 0.
  int e = -1;
  for (int a = 0; a < m && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < m; ++b)
      if (mul[a][b] != b || mul[b][a] != b) ok = false;
    if (ok) e = a;
  }
  if (e < 0) throw std::runtime_error("canonical_group_table: no identity");
  if (m > 10) throw std::runtime_error("canonical_group_table: group too large");
  // perm[i] = original element placed at slot i; slot 0 is always e.
  std::vector<int> perm;
  perm.push_back(e);
  for (int a = 0; a < m; ++a)
    if (a != e) perm.push_back(a);
  std::vector<int> best;
  std::vector<int> inv_perm(m);
  do {
    for (int i = 0; i < m; ++i) inv_perm[perm[i]] = i;
    std::vector<int> t(m * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) t[i * m + j] = inv_perm[mul[perm[i]][perm[j]]];
    if (best.empty() || t < best) best = t;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

std::vector<OrbitInfo> orbits_isotropy(const FinGroupoid& g) {
  std::vector<int> root(g.n_objects);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return root[x] == x ? x : root[x] = find(root[x]);
  };
  for (int a = 0; a < g.n_arrows; ++a) root[find(g.dom[a])] = find(g.cod[a]);
  std::map<int, std::vector<int>> comps;
  for (int o = 0; o < g.n_objects; ++o) comps[find(o)].push_back(o);
  std::vector<OrbitInfo> out;
  for (auto& [r, objs] : comps) {
    OrbitInfo info;
    info.size = int(objs.size());
    info.objects = objs;
    int o = objs.front();
    std::vector<int> vertex;  // arrows o -> o
    for (int a = 0; a < g.n_arrows; ++a)
      if (g.dom[a] == o && g.cod[a] == o) vertex.push_back(a);
    int m = int(vertex.size());
    std::vector<int> pos(g.n_arrows, -1);
    for (int i = 0; i < m; ++i) pos[vertex[i]] = i;
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) mul[i][j] = pos[g.compose(vertex[i], vertex[j])];
    info.isotropy = canonical_group_table(mul);
    out.push_back(std::move(info));
  }
  std::sort(out.begin(), out.end(), [](const OrbitInfo& a, const OrbitInfo& b) {
    return std::tie(a.size, a.isotropy, a.objects) <
           std::tie(b.size, b.isotropy, b.objects);
  });
  return out;
}

bool is_isomorphic(const FinGroupoid& a, const FinGroupoid& b) {
  // A finite discrete groupoid is the disjoint sum of its connected
  // components, and each component is determined up to isomorphism by its
  // object count and vertex group; compare those multisets.
  auto key = [](const FinGroupoid& g) {
    std::vector<std::pair<int, std::vector<int>>> k;
    for (const auto& o : orbits_isotropy(g)) k.emplace_back(o.size, o.isotropy);
    std::sort(k.begin(), k.end());
    return k;
  };
  return a.n_objects == b.n_objects && a.n_arrows == b.n_arrows &&
         key(a) == key(b);
}

GAction GAction::tautological(const FinGroupoid& g) {
  GAction a;
  a.g = &g;
  a.n = g.n_objects;
  a.p.resize(g.n_objects);
  std::iota(a.p.begin(), a.p.end(), 0);
  a.act.assign(g.n_arrows * a.n, -1);
  for (int ar = 0; ar < g.n_arrows; ++ar) a.act[ar * a.n + g.dom[ar]] = g.cod[ar];
  return a;
}

GAction GAction::on_point(const FinGroupoid& g) {
  if (g.n_objects != 1)
    throw std::runtime_error("on_point: groupoid must have one object");
  GAction a;
  a.g = &g;
  a.n = 1;
  a.p = {0};
  a.act.assign(g.n_arrows, 0);
  return a;
}

std::vector<std::string> validate(const GAction& a) {
  std::vector<std::string> bad;
  auto fail = [&](const std::string& s) {
    if (bad.size() < 32) bad.push_back(s);
  };
  const FinGroupoid& g = *a.g;
  if (int(a.p.size()) != a.n || int(a.act.size()) != g.n_arrows * a.n) {
    fail("action tables have wrong sizes");
    return bad;
  }
  for (int x = 0; x < a.n; ++x)
    if (a.p[x] < 0 || a.p[x] >= g.n_objects) fail("anchor out of range");
  if (!bad.empty()) return bad;
  for (int ar = 0; ar < g.n_arrows; ++ar)
    for (int x = 0; x < a.n; ++x) {
      int y = a.apply(ar, x);
      bool defined = g.dom[ar] == a.p[x];
      if (defined != (y >= 0)) {
        fail("act defined iff dom(g)=p(x) fails at (" + arrow_name(ar) + ", x" +
             std::to_string(x) + ")");
        continue;
      }
      if (y >= 0 && a.p[y] != g.cod[ar]) fail("p(gx) != cod(g)");
    }
  if (!bad.empty()) return bad;
  for (int x = 0; x < a.n; ++x)
    if (a.apply(g.id[a.p[x]], x) != x) fail("unit action fails at x" + std::to_string(x));
  for (int ar = 0; ar < g.n_arrows; ++ar)
    for (int br = 0; br < g.n_arrows; ++br) {
      if (g.dom[ar] != g.cod[br]) continue;
      for (int x = 0; x < a.n; ++x) {
        if (a.p[x] != g.dom[br]) continue;
        if (a.apply(ar, a.apply(br, x)) != a.apply(g.compose(ar, br), x))
          fail("associativity of action fails");
      }
    }
  // Each arrow acts as a bijection between its anchor fibers.
  for (int ar = 0; ar < g.n_arrows; ++ar)
    for (int x = 0; x < a.n; ++x) {
      if (a.p[x] != g.dom[ar]) continue;
      if (a.apply(g.inv[ar], a.apply(ar, x)) != x)
        fail("inverse arrow does not undo the action");
    }
  return bad;
}

std::vector<std::vector<int>> action_orbits(const GAction& a) {
  std::vector<int> root(a.n);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return root[x] == x ? x : root[x] = find(root[x]);
  };
  for (int ar = 0; ar < a.g->n_arrows; ++ar)
    for (int x = 0; x < a.n; ++x)
      if (a.apply(ar, x) >= 0) root[find(x)] = find(a.apply(ar, x));
  std::map<int, std::vector<int>> comps;
  for (int x = 0; x < a.n; ++x) comps[find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [r, xs] : comps) out.push_back(xs);
  return out;
}

bool action_is_free(const GAction& a) {
  for (int ar = 0; ar < a.g->n_arrows; ++ar)
    for (int x = 0; x < a.n; ++x)
      if (a.apply(ar, x) == x && ar != a.g->id[a.p[x]]) return false;
  return true;
}

GAction BiAction::left_action() const {
  GAction a;
  a.g = G;
  a.n = n;
  a.p = p;
  a.act = act;
  return a;
}

GAction BiAction::right_as_left() const {
  GAction a;
  a.g = H;  // caller must interpret against H.opposite()
  a.n = n;
  a.p = q;
  a.act = ract;
  return a;
}

BiAction BiAction::tautological(const FinGroupoid& g) {
  BiAction b;
  b.G = &g;
  b.H = &g;
  b.n = g.n_arrows;
  b.p = g.cod;
  b.q = g.dom;
  b.act.assign(g.n_arrows * b.n, -1);
  b.ract.assign(g.n_arrows * b.n, -1);
  for (int ar = 0; ar < g.n_arrows; ++ar)
    for (int x = 0; x < b.n; ++x) {
      if (g.dom[ar] == g.cod[x]) b.act[ar * b.n + x] = g.compose(ar, x);
      if (g.cod[ar] == g.dom[x]) b.ract[ar * b.n + x] = g.compose(x, ar);
    }
  return b;
}

BiAction BiAction::from_left(const GAction& a, const FinGroupoid& point) {
  BiAction b;
  b.G = a.g;
  b.H = &point;
  b.n = a.n;
  b.p = a.p;
  b.q.assign(a.n, 0);
  b.act = a.act;
  b.ract.resize(point.n_arrows * a.n);
  std::iota(b.ract.begin(), b.ract.end(), 0);  // only the identity arrow
  return b;
}

std::vector<std::string> validate(const BiAction& x) {
  std::vector<std::string> bad = validate(x.left_action());
  auto fail = [&](const std::string& s) {
    if (bad.size() < 32) bad.push_back(s);
  };
  const FinGroupoid& H = *x.H;
  if (int(x.q.size()) != x.n || int(x.ract.size()) != H.n_arrows * x.n) {
    fail("right action tables have wrong sizes");
    return bad;
  }
  for (int h = 0; h < H.n_arrows; ++h)
    for (int i = 0; i < x.n; ++i) {
      int y = x.right(i, h);
      bool defined = H.cod[h] == x.q[i];
      if (defined != (y >= 0)) {
        fail("x.h defined iff cod(h)=q(x) fails");
        continue;
      }
      if (y >= 0 && x.q[y] != H.dom[h]) fail("q(x.h) != dom(h)");
      if (y >= 0 && x.p[y] != x.p[i]) fail("p(x.h) != p(x)");
    }
  if (!bad.empty()) return bad;
  for (int i = 0; i < x.n; ++i)
    if (x.right(i, H.id[x.q[i]]) != i) fail("right unit law fails");
  for (int h = 0; h < H.n_arrows; ++h)
    for (int h2 = 0; h2 < H.n_arrows; ++h2) {
      if (H.dom[h] != H.cod[h2]) continue;
      for (int i = 0; i < x.n; ++i) {
        if (x.q[i] != H.cod[h]) continue;
        if (x.right(x.right(i, h), h2) != x.right(i, H.compose(h, h2)))
          fail("right associativity fails");
      }
    }
  const FinGroupoid& G = *x.G;
  for (int g = 0; g < G.n_arrows; ++g)
    for (int i = 0; i < x.n; ++i) {
      if (x.left(g, i) < 0) continue;
      if (x.q[x.left(g, i)] != x.q[i]) fail("q(gx) != q(x)");
      for (int h = 0; h < H.n_arrows; ++h) {
        if (x.right(i, h) < 0) continue;
        if (x.left(g, x.right(i, h)) != x.right(x.left(g, i), h))
          fail("(gx)h != g(xh)");
      }
    }
  return bad;
}

BiAction dual_biaction(const BiAction& x) {
  BiAction d;
  d.G = x.H;
  d.H = x.G;
  d.n = x.n;
  d.p = x.q;
  d.q = x.p;
  d.act.assign(x.H->n_arrows * x.n, -1);
  d.ract.assign(x.G->n_arrows * x.n, -1);
  for (int h = 0; h < x.H->n_arrows; ++h)
    for (int i = 0; i < x.n; ++i) d.act[h * x.n + i] = x.ract[x.H->inv[h] * x.n + i];
  for (int g = 0; g < x.G->n_arrows; ++g)
    for (int i = 0; i < x.n; ++i) d.ract[g * x.n + i] = x.act[x.G->inv[g] * x.n + i];
  return d;
}

GroupoidFunctor GroupoidFunctor::identity(const FinGroupoid& g) {
  GroupoidFunctor f;
  f.src = &g;
  f.dst = &g;
  f.phi0.resize(g.n_objects);
  f.phi1.resize(g.n_arrows);
  std::iota(f.phi0.begin(), f.phi0.end(), 0);
  std::iota(f.phi1.begin(), f.phi1.end(), 0);
  return f;
}

GroupoidFunctor GroupoidFunctor::compose(const GroupoidFunctor& f,
                                         const GroupoidFunctor& g) {
  if (g.dst != f.src) throw std::runtime_error("functor compose: type mismatch");
  GroupoidFunctor h;
  h.src = g.src;
  h.dst = f.dst;
  for (int o : g.phi0) h.phi0.push_back(f.phi0[o]);
  for (int a : g.phi1) h.phi1.push_back(f.phi1[a]);
  return h;
}

std::vector<std::string> validate(const GroupoidFunctor& f) {
  std::vector<std::string> bad;
  auto fail = [&](const std::string& s) {
    if (bad.size() < 32) bad.push_back(s);
  };
  const FinGroupoid& A = *f.src;
  const FinGroupoid& B = *f.dst;
  if (int(f.phi0.size()) != A.n_objects || int(f.phi1.size()) != A.n_arrows) {
    fail("functor tables have wrong sizes");
    return bad;
  }
  for (int o : f.phi0)
    if (o < 0 || o >= B.n_objects) fail("phi0 out of range");
  for (int a : f.phi1)
    if (a < 0 || a >= B.n_arrows) fail("phi1 out of range");
  if (!bad.empty()) return bad;
  for (int a = 0; a < A.n_arrows; ++a) {
    if (B.dom[f.phi1[a]] != f.phi0[A.dom[a]] ||
        B.cod[f.phi1[a]] != f.phi0[A.cod[a]])
      fail("phi1 does not respect dom/cod at " + arrow_name(a));
    if (f.phi1[A.inv[a]] != B.inv[f.phi1[a]])
      fail("phi1 does not respect inverses at " + arrow_name(a));
  }
  for (int o = 0; o < A.n_objects; ++o)
    if (f.phi1[A.id[o]] != B.id[f.phi0[o]]) fail("phi1 does not respect identities");
  for (int a = 0; a < A.n_arrows; ++a)
    for (int b = 0; b < A.n_arrows; ++b) {
      if (A.dom[a] != A.cod[b]) continue;
      if (f.phi1[A.compose(a, b)] != B.compose(f.phi1[a], f.phi1[b]))
        fail("phi1 does not respect composition");
    }
  return bad;
}

FunctorBundle bundle_of_functor(const GroupoidFunctor& phi) {
  if (!validate(phi).empty()) throw std::runtime_error("InvalidFunctor");
  const FinGroupoid& H = *phi.src;
  const FinGroupoid& G = *phi.dst;
  FunctorBundle fb;
  std::vector<std::vector<int>> idx(G.n_arrows, std::vector<int>(H.n_objects, -1));
  for (int g = 0; g < G.n_arrows; ++g)
    for (int b = 0; b < H.n_objects; ++b)
      if (G.dom[g] == phi.phi0[b]) {
        idx[g][b] = int(fb.arrow_of.size());
        fb.arrow_of.push_back(g);
        fb.object_of.push_back(b);
      }
  BiAction& X = fb.bundle;
  X.G = &G;
  X.H = &H;
  X.n = int(fb.arrow_of.size());
  X.p.resize(X.n);
  X.q.resize(X.n);
  for (int i = 0; i < X.n; ++i) {
    X.p[i] = G.cod[fb.arrow_of[i]];
    X.q[i] = fb.object_of[i];
  }
  X.act.assign(G.n_arrows * X.n, -1);
  X.ract.assign(H.n_arrows * X.n, -1);
  for (int i = 0; i < X.n; ++i) {
    int g = fb.arrow_of[i], b = fb.object_of[i];
    for (int a = 0; a < G.n_arrows; ++a)
      if (G.dom[a] == G.cod[g]) X.act[a * X.n + i] = idx[G.compose(a, g)][b];
    for (int h = 0; h < H.n_arrows; ++h)
      if (H.cod[h] == b)
        X.ract[h * X.n + i] = idx[G.compose(g, phi.phi1[h])][H.dom[h]];
  }
  fb.section.resize(H.n_objects);
  for (int b = 0; b < H.n_objects; ++b) fb.section[b] = idx[G.id[phi.phi0[b]]][b];
  return fb;
}

EssEquivReport is_essential_equivalence(const GroupoidFunctor& phi) {
  EssEquivReport r;
  const FinGroupoid& A = *phi.src;
  const FinGroupoid& B = *phi.dst;
  r.essentially_surjective = true;
  for (int y = 0; y < B.n_objects; ++y) {
    bool hit = false;
    for (int g = 0; g < B.n_arrows && !hit; ++g)
      if (B.cod[g] == y)
        for (int o = 0; o < A.n_objects; ++o)
          if (phi.phi0[o] == B.dom[g]) {
            hit = true;
            break;
          }
    if (!hit) {
      r.essentially_surjective = false;
      r.detail += "object " + std::to_string(y) + " misses the image; ";
      break;
    }
  }
  r.fully_faithful = true;
  for (int x = 0; x < A.n_objects && r.fully_faithful; ++x)
    for (int y = 0; y < A.n_objects && r.fully_faithful; ++y) {
      std::vector<int> image;
      for (int a = 0; a < A.n_arrows; ++a)
        if (A.dom[a] == x && A.cod[a] == y) image.push_back(phi.phi1[a]);
      std::vector<int> target;
      for (int g = 0; g < B.n_arrows; ++g)
        if (B.dom[g] == phi.phi0[x] && B.cod[g] == phi.phi0[y]) target.push_back(g);
      std::sort(image.begin(), image.end());
      std::sort(target.begin(), target.end());
      if (image != target ||
          std::adjacent_find(image.begin(), image.end()) != image.end()) {
        r.fully_faithful = false;
        r.detail += "hom-set (" + std::to_string(x) + "," + std::to_string(y) +
                    ") not mapped bijectively; ";
      }
    }
  return r;
}

}  // namespace qk
