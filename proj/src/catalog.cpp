#include "qk/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qk {

namespace {

using Table = std::vector<std::vector<int>>;

Table cyclic(int n) {
  Table t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

Table product_table(const Table& a, const Table& b) {
  int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  Table t(na * nb, std::vector<int>(na * nb));
  for (int i = 0; i < na * nb; ++i)
    for (int j = 0; j < na * nb; ++j)
      t[i][j] = a[i / nb][j / nb] * nb + b[i % nb][j % nb];
  return t;
}

// Closure of permutation generators; elements in discovery order from the
// identity, so index 0 is the identity.
Table group_from_perms(int width, const std::vector<std::vector<int>>& gens) {
  std::vector<int> id(width);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      std::vector<int> c(width);
      for (int k = 0; k < width; ++k) c[k] = g[elems[i][k]];
      if (std::find(elems.begin(), elems.end(), c) == elems.end())
        elems.push_back(c);
    }
  int n = static_cast<int>(elems.size());
  Table t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> c(width);
      for (int k = 0; k < width; ++k) c[k] = elems[i][elems[j][k]];
      t[i][j] = static_cast<int>(
          std::find(elems.begin(), elems.end(), c) - elems.begin());
    }
  return t;
}

// Quaternion group: index = sign * 4 + basis, basis 0..3 = 1, i, j, k.
Table quaternion_table() {
  static const int bmul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int bsgn[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  Table t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int bx = x % 4, by = y % 4;
      int sign = (x / 4 + y / 4 + bsgn[bx][by]) % 2;
      t[x][y] = sign * 4 + bmul[bx][by];
    }
  return t;
}

}  // namespace

std::vector<Table> small_group_tables(int max_order) {
  if (max_order > 8)
    throw std::invalid_argument("small_group_tables: supports order <= 8");
  std::vector<Table> out;
  auto keep = [&](const Table& t) {
    if (static_cast<int>(t.size()) <= max_order) out.push_back(t);
  };
  keep(cyclic(1));
  keep(cyclic(2));
  keep(cyclic(3));
  keep(cyclic(4));
  keep(product_table(cyclic(2), cyclic(2)));
  keep(cyclic(5));
  keep(cyclic(6));
  keep(group_from_perms(3, {{1, 0, 2}, {1, 2, 0}}));  // S3
  keep(cyclic(7));
  keep(cyclic(8));
  keep(product_table(cyclic(4), cyclic(2)));
  keep(product_table(product_table(cyclic(2), cyclic(2)), cyclic(2)));
  keep(group_from_perms(4, {{1, 2, 3, 0}, {3, 2, 1, 0}}));  // D4
  keep(quaternion_table());
  return out;
}

std::vector<FinGroupoid> groupoid_catalog(int max_objects, int max_arrows) {
  struct Comp {
    FinGroupoid g;
    int objects, arrows;
  };
  std::vector<Comp> comps;
  for (int k = 1; k <= max_objects; ++k) {
    int cap = max_arrows / (k * k);
    if (cap < 1) break;
    for (const Table& t : small_group_tables(std::min(cap, 8))) {
      FinGroupoid g = k == 1 ? FinGroupoid::one_object(t)
                             : FinGroupoid::product(
                                   FinGroupoid::pair_groupoid(k),
                                   FinGroupoid::one_object(t));
      comps.push_back({g, k, g.n_arrows});
    }
  }
  std::vector<FinGroupoid> out;
  // Multisets of components, non-decreasing component index.
  auto rec = [&](auto&& self, std::size_t start, int obj, int arr,
                 const FinGroupoid* cur) -> void {
    if (cur) out.push_back(*cur);
    for (std::size_t i = start; i < comps.size(); ++i) {
      if (obj + comps[i].objects > max_objects) continue;
      if (arr + comps[i].arrows > max_arrows) continue;
      FinGroupoid next =
          cur ? FinGroupoid::disjoint_union(*cur, comps[i].g) : comps[i].g;
      self(self, i, obj + comps[i].objects, arr + comps[i].arrows, &next);
    }
  };
  rec(rec, 0, 0, 0, nullptr);
  return out;
}

namespace {

// A smallest arrow set whose closure under identities, inverses and
// composition is the whole groupoid.
std::vector<int> generating_arrows(const FinGroupoid& g) {
  int n = g.n_arrows;
  std::vector<std::vector<int>> by_count(n + 1);
  for (unsigned long m = 0; m < (1ul << n); ++m)
    by_count[__builtin_popcountl(m)].push_back(static_cast<int>(m));
  for (int c = 0; c <= n; ++c)
    for (int m : by_count[c]) {
      std::vector<bool> in(n, false);
      for (int o = 0; o < g.n_objects; ++o) in[g.id[o]] = true;
      for (int a = 0; a < n; ++a)
        if (m >> a & 1) in[a] = in[g.inv[a]] = true;
      bool grew = true;
      while (grew) {
        grew = false;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (in[a] && in[b]) {
              int c2 = g.compose(a, b);
              if (c2 >= 0 && !in[c2]) in[c2] = grew = true;
            }
      }
      if (std::all_of(in.begin(), in.end(), [](bool v) { return v; })) {
        std::vector<int> gen;
        for (int a = 0; a < n; ++a)
          if (m >> a & 1) gen.push_back(a);
        return gen;
      }
    }
  return {};
}

std::vector<int> canonical_action_key(const GAction& a) {
  int n = a.n;
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> key;
    key.reserve(n + a.act.size());
    std::vector<int> inv_s(n);
    for (int i = 0; i < n; ++i) inv_s[sigma[i]] = i;
    for (int i = 0; i < n; ++i) key.push_back(a.p[inv_s[i]]);
    for (int g = 0; g < a.g->n_arrows; ++g)
      for (int i = 0; i < n; ++i) {
        int t = a.apply(g, inv_s[i]);
        key.push_back(t < 0 ? -1 : sigma[t]);
      }
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

}  // namespace

std::vector<GAction> action_catalog(const FinGroupoid& g, int max_points) {
  std::vector<GAction> out;
  std::set<std::vector<int>> seen;
  // Object components: fibers must have equal size within a component.
  std::vector<int> comp_of(g.n_objects);
  {
    std::vector<OrbitInfo> orbs = orbits_isotropy(g);
    for (std::size_t i = 0; i < orbs.size(); ++i)
      for (int o : orbs[i].objects) comp_of[o] = static_cast<int>(i);
  }
  int n_comp = g.n_objects == 0
                   ? 0
                   : *std::max_element(comp_of.begin(), comp_of.end()) + 1;
  std::vector<int> comp_objs(n_comp, 0);
  for (int o = 0; o < g.n_objects; ++o) ++comp_objs[comp_of[o]];
  std::vector<int> gens = generating_arrows(g);

  // Per-component fiber sizes, then anchors, then generator bijections.
  std::vector<int> fib(n_comp, 0);
  auto emit_for_anchor = [&](const std::vector<int>& p) {
    int n = static_cast<int>(p.size());
    std::vector<std::vector<int>> fiber(g.n_objects);
    for (int i = 0; i < n; ++i) fiber[p[i]].push_back(i);
    // maps[a][x]: image of carrier point x under arrow a, -1 unknown.
    std::vector<std::vector<int>> maps(g.n_arrows,
                                       std::vector<int>(std::max(n, 1), -1));
    auto dfs = [&](auto&& self, std::size_t gi) -> void {
      if (gi == gens.size()) {
        // Complete by composing known maps until a fixpoint.
        std::vector<std::vector<int>> m = maps;
        std::vector<bool> known(g.n_arrows, false);
        for (int o = 0; o < g.n_objects; ++o) {
          known[g.id[o]] = true;
          for (int x : fiber[o]) m[g.id[o]][x] = x;
        }
        for (int a : gens) known[a] = known[g.inv[a]] = true;
        bool grew = true, ok = true;
        while (grew && ok) {
          grew = false;
          for (int a = 0; a < g.n_arrows && ok; ++a)
            for (int b = 0; b < g.n_arrows && ok; ++b) {
              int c = g.compose(a, b);
              if (c < 0 || !known[a] || !known[b]) continue;
              for (int x : fiber[g.dom[b]]) {
                int y = m[a][m[b][x]];
                if (!known[c]) {
                  m[c][x] = y;
                } else if (m[c][x] != y) {
                  ok = false;
                  break;
                }
              }
              if (ok && !known[c]) known[c] = grew = true;
            }
        }
        if (!ok || !std::all_of(known.begin(), known.end(),
                                [](bool v) { return v; }))
          return;
        GAction act;
        act.g = &g;
        act.n = n;
        act.p = p;
        act.act.assign(static_cast<std::size_t>(g.n_arrows) * std::max(n, 1),
                       -1);
        for (int a = 0; a < g.n_arrows; ++a)
          for (int x : fiber[g.dom[a]]) act.act[a * n + x] = m[a][x];
        if (!validate(act).empty()) return;
        std::vector<int> key = canonical_action_key(act);
        if (seen.insert(std::move(key)).second) out.push_back(std::move(act));
        return;
      }
      int a = gens[gi];
      const std::vector<int>& fa = fiber[g.dom[a]];
      std::vector<int> fb = fiber[g.cod[a]];
      std::sort(fb.begin(), fb.end());
      do {
        bool selfinv = g.inv[a] == a;
        bool okb = true;
        if (selfinv)  // the bijection must be an involution
          for (std::size_t i = 0; i < fa.size() && okb; ++i) {
            auto it = std::find(fa.begin(), fa.end(), fb[i]);
            okb = it != fa.end() && fb[it - fa.begin()] == fa[i];
          }
        if (okb) {
          for (std::size_t i = 0; i < fa.size(); ++i) {
            maps[a][fa[i]] = fb[i];
            maps[g.inv[a]][fb[i]] = fa[i];
          }
          self(self, gi + 1);
          for (std::size_t i = 0; i < fa.size(); ++i) {
            maps[a][fa[i]] = -1;
            maps[g.inv[a]][fb[i]] = -1;
          }
        }
      } while (std::next_permutation(fb.begin(), fb.end()));
    };
    dfs(dfs, 0);
  };

  auto choose_fibers = [&](auto&& self, int c, int used) -> void {
    if (c == n_comp) {
      int n = 0;
      for (int i = 0; i < n_comp; ++i) n += fib[i] * comp_objs[i];
      if (n < 1 || n > max_points) return;
      std::vector<int> p;
      for (int o = 0; o < g.n_objects; ++o)
        for (int k = 0; k < fib[comp_of[o]]; ++k) p.push_back(o);
      emit_for_anchor(p);
      return;
    }
    for (int s = 0; used + s * comp_objs[c] <= max_points; ++s) {
      fib[c] = s;
      self(self, c + 1, used + s * comp_objs[c]);
    }
  };
  if (g.n_objects > 0) choose_fibers(choose_fibers, 0, 0);
  return out;
}

std::vector<GroupoidFunctor> functor_catalog(const FinGroupoid& src,
                                             const FinGroupoid& dst) {
  std::vector<GroupoidFunctor> out;
  if (src.n_objects == 0) return out;
  std::vector<int> phi0(src.n_objects, 0);
  auto try_phi0 = [&]() {
    std::vector<int> phi1(src.n_arrows, -1);
    for (int b = 0; b < src.n_objects; ++b)
      phi1[src.id[b]] = dst.id[phi0[b]];
    std::vector<int> todo;
    for (int h = 0; h < src.n_arrows; ++h)
      if (phi1[h] < 0) todo.push_back(h);
    auto consistent = [&](int h) {
      if (phi1[src.inv[h]] >= 0 && phi1[src.inv[h]] != dst.inv[phi1[h]])
        return false;
      for (int a = 0; a < src.n_arrows; ++a) {
        if (phi1[a] < 0) continue;
        for (auto [x, y] : {std::pair{h, a}, std::pair{a, h}}) {
          int c = src.compose(x, y);
          if (c >= 0 && phi1[c] >= 0 &&
              phi1[c] != dst.compose(phi1[x], phi1[y]))
            return false;
        }
      }
      return true;
    };
    auto dfs = [&](auto&& self, std::size_t k) -> void {
      if (k == todo.size()) {
        GroupoidFunctor f{&src, &dst, phi0, phi1};
        if (validate(f).empty()) out.push_back(std::move(f));
        return;
      }
      int h = todo[k];
      for (int gx = 0; gx < dst.n_arrows; ++gx) {
        if (dst.dom[gx] != phi0[src.dom[h]] || dst.cod[gx] != phi0[src.cod[h]])
          continue;
        phi1[h] = gx;
        if (consistent(h)) self(self, k + 1);
        phi1[h] = -1;
      }
    };
    dfs(dfs, 0);
  };
  while (true) {
    try_phi0();
    int i = 0;
    while (i < src.n_objects && ++phi0[i] == dst.n_objects) phi0[i++] = 0;
    if (i == src.n_objects) break;
  }
  return out;
}

}  // namespace qk
