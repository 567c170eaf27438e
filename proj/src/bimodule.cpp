#include "qk/bimodule.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qk {

namespace {

Bits sppq(const Quantale& q, const Bits& a) {
  return q.times_b(a, q.lat.top()) & q.unit_b();
}

// The dual right action as a left H-action: h |> x = x.h^-1.
GAction dual_left_action(const BiAction& b) {
  GAction d;
  d.g = b.H;
  d.n = b.n;
  d.p = b.q;
  d.act.assign(static_cast<std::size_t>(b.H->n_arrows) * b.n, -1);
  for (int h = 0; h < b.H->n_arrows; ++h)
    for (int x = 0; x < b.n; ++x) d.act[h * b.n + x] = b.right(x, b.H->inv[h]);
  return d;
}

std::vector<Bits> both_injective_subsets(const BiAction& b) {
  std::vector<Bits> out;
  for (unsigned long m = 0; m < (1ul << b.n); ++m) {
    Bits s(b.n);
    bool ok = true;
    std::vector<bool> seen_p(b.p.empty() ? 0 : *std::max_element(b.p.begin(), b.p.end()) + 1, false);
    std::vector<bool> seen_q(b.q.empty() ? 0 : *std::max_element(b.q.begin(), b.q.end()) + 1, false);
    for (int i = 0; i < b.n && ok; ++i) {
      if (!(m >> i & 1)) continue;
      if (seen_p[b.p[i]] || seen_q[b.q[i]]) ok = false;
      seen_p[b.p[i]] = seen_q[b.q[i]] = true;
      s.set(i);
    }
    if (ok) out.push_back(s);
  }
  return out;
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int i) {
    while (up[i] != i) i = up[i] = up[up[i]];
    return i;
  }
  void unite(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) up[std::max(a, b)] = std::min(a, b);
  }
};

BiAction relabel(const BiAction& b, const std::vector<int>& to) {
  BiAction r = b;
  for (int i = 0; i < b.n; ++i) {
    r.p[to[i]] = b.p[i];
    r.q[to[i]] = b.q[i];
  }
  for (int g = 0; g < b.G->n_arrows; ++g)
    for (int i = 0; i < b.n; ++i) {
      int t = b.left(g, i);
      r.act[g * b.n + to[i]] = t < 0 ? -1 : to[t];
    }
  for (int h = 0; h < b.H->n_arrows; ++h)
    for (int i = 0; i < b.n; ++i) {
      int t = b.right(i, h);
      r.ract[h * b.n + to[i]] = t < 0 ? -1 : to[t];
    }
  return r;
}

std::vector<int> flat_key(const BiAction& b) {
  std::vector<int> k;
  k.reserve(2 * b.n + b.act.size() + b.ract.size());
  k.insert(k.end(), b.p.begin(), b.p.end());
  k.insert(k.end(), b.q.begin(), b.q.end());
  k.insert(k.end(), b.act.begin(), b.act.end());
  k.insert(k.end(), b.ract.begin(), b.ract.end());
  return k;
}

}  // namespace

bool same_groupoid(const FinGroupoid& a, const FinGroupoid& b) {
  return a.n_objects == b.n_objects && a.n_arrows == b.n_arrows &&
         a.dom == b.dom && a.cod == b.cod && a.inv == b.inv && a.id == b.id &&
         a.comp == b.comp;
}

Bits QRBisheaf::ract(const Bits& x, const Bits& r) const {
  return rdual.act(R->star_b(r), x);
}

QRBisheaf make_bisheaf(const BiAction& b0) {
  auto errs = validate(b0);
  if (!errs.empty())
    throw std::runtime_error("InvalidBiAction: " + errs.front());
  QRBisheaf x;
  x.G = std::make_shared<FinGroupoid>(*b0.G);
  x.H = std::make_shared<FinGroupoid>(*b0.H);
  x.Q = std::make_shared<Quantale>(quantale_of_groupoid(*x.G));
  x.R = std::make_shared<Quantale>(quantale_of_groupoid(*x.H));
  x.b = b0;
  x.b.G = x.G.get();
  x.b.H = x.H.get();
  x.left = module_of_action(*x.Q, x.b.left_action());
  x.rdual = module_of_action(*x.R, dual_left_action(x.b));
  x.bisections = both_injective_subsets(x.b);
  // The bisection double-basis law on the singleton generators.
  for (int i = 0; i < x.b.n; ++i) {
    Bits pt = Bits::single(x.b.n, i);
    Bits lj(x.b.n), rj(x.b.n);
    for (const Bits& s : x.bisections) {
      lj |= x.act(x.inner(pt, s), s);
      rj |= x.ract(s, x.rinner(s, pt));
    }
    if (lj != pt || rj != pt)
      throw std::runtime_error("InvalidBiAction: double basis law fails at " +
                               pt.to_string());
  }
  return x;
}

QRBisheaf dual(const QRBisheaf& x) { return make_bisheaf(dual_biaction(x.b)); }

QRBisheaf tensor_compose(const QRBisheaf& x, const QRBisheaf& y) {
  if (!same_groupoid(*x.H, *y.G))
    throw std::runtime_error("QuantaleMismatch: middle groupoids differ");
  const BiAction& a = x.b;
  const BiAction& c = y.b;
  const FinGroupoid& mid = *x.H;
  int ny = c.n;
  std::vector<int> pid(static_cast<std::size_t>(a.n) * ny, -1);
  std::vector<std::pair<int, int>> pts;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < ny; ++j)
      if (a.q[i] == c.p[j]) {
        pid[i * ny + j] = static_cast<int>(pts.size());
        pts.push_back({i, j});
      }
  UnionFind uf(static_cast<int>(pts.size()));
  for (int h = 0; h < mid.n_arrows; ++h)
    for (int i = 0; i < a.n; ++i)
      for (int j = 0; j < ny; ++j)
        if (mid.cod[h] == a.q[i] && mid.dom[h] == c.p[j]) {
          int i2 = a.right(i, h), j2 = c.left(h, j);
          uf.unite(pid[i2 * ny + j], pid[i * ny + j2]);
        }
  std::vector<int> cls(pts.size(), -1);
  int n = 0;
  for (std::size_t k = 0; k < pts.size(); ++k)
    if (uf.find(static_cast<int>(k)) == static_cast<int>(k)) cls[k] = n++;
  auto cls_of = [&](int i, int j) { return cls[uf.find(pid[i * ny + j])]; };

  BiAction t;
  t.G = x.G.get();
  t.H = y.H.get();
  t.n = n;
  t.p.assign(n, -1);
  t.q.assign(n, -1);
  t.act.assign(static_cast<std::size_t>(x.G->n_arrows) * n, -1);
  t.ract.assign(static_cast<std::size_t>(y.H->n_arrows) * n, -1);
  for (const auto& [i, j] : pts) {
    int cl = cls_of(i, j);
    t.p[cl] = a.p[i];
    t.q[cl] = c.q[j];
    for (int g = 0; g < x.G->n_arrows; ++g) {
      int i2 = a.left(g, i);
      if (i2 < 0) continue;
      int& slot = t.act[g * n + cl];
      int tgt = cls_of(i2, j);
      if (slot >= 0 && slot != tgt)
        throw std::logic_error("tensor_compose: left action not well defined");
      slot = tgt;
    }
    for (int h = 0; h < y.H->n_arrows; ++h) {
      int j2 = c.right(j, h);
      if (j2 < 0) continue;
      int& slot = t.ract[h * n + cl];
      int tgt = cls_of(i, j2);
      if (slot >= 0 && slot != tgt)
        throw std::logic_error("tensor_compose: right action not well defined");
      slot = tgt;
    }
  }
  return make_bisheaf(t);
}

namespace {

PrincipalityReport principality(const QRBisheaf& x) {
  PrincipalityReport r;
  const Bits eq = x.Q->unit_b();
  const Bits er = x.R->unit_b();
  const Bits one = x.top();
  const Bits rtop = x.R->lat.top();

  r.thm[0] = r.thm[2] = r.cor[3] = true;
  Bits join_l(x.left.arrows());
  Bits join_r(x.rdual.arrows());
  for (const Bits& s : x.bisections) {
    Bits ss = x.inner(s, s);
    Bits rss = x.rinner(s, s);
    join_l |= ss;
    join_r |= rss;
    if (r.thm[0] && !ss.subset_of(eq)) {
      r.thm[0] = false;
      if (r.witness.empty())
        r.witness = "<s,s> not below e_Q at s = " + s.to_string();
    }
    if (r.thm[2] && !x.ract(one, x.tspp(s)).subset_of(x.act(Bits::full(x.left.arrows()), s))) {
      r.thm[2] = false;
      if (r.witness.empty())
        r.witness = "1 tspp(s) not below 1_Q s at s = " + s.to_string();
    }
    if (r.cor[3] && !x.act(x.sppx(s), one).subset_of(x.ract(s, rtop))) {
      r.cor[3] = false;
      if (r.witness.empty())
        r.witness = "spp(s) 1 not below s 1_R at s = " + s.to_string();
    }
  }
  r.thm[1] = er.subset_of(x.rinner(one, one));
  r.thm[3] = eq.subset_of(x.inner(one, one));
  r.cor[0] = join_l == eq;
  r.cor[1] = join_r == er;
  r.cor[2] = r.thm[2];
  // The restatements from the remark after the theorem.
  bool rem2 = er.subset_of(join_r);
  bool rem4 = eq.subset_of(join_l);
  r.remark_agree = (rem2 == r.thm[1]) && (rem4 == r.thm[3]) &&
                   (!r.thm[3] || (r.cor[0] == (r.thm[0] && r.thm[3])));
  r.principal = r.thm[0] && r.thm[1] && r.thm[2];
  r.left_surjective = r.thm[3];
  r.biprincipal = r.cor[0] && r.cor[1] && r.cor[2] && r.cor[3];
  if (r.biprincipal) {
    // Fullness: every atom of Q (resp. R) is an inner product of points.
    auto full = [&](bool right_side) {
      int na = right_side ? x.rdual.arrows() : x.left.arrows();
      for (int g = 0; g < na; ++g) {
        Bits atom = Bits::single(na, g);
        bool hit = false;
        for (int i = 0; i < x.points() && !hit; ++i)
          for (int j = 0; j < x.points() && !hit; ++j) {
            Bits s = Bits::single(x.points(), i);
            Bits t = Bits::single(x.points(), j);
            if ((right_side ? x.rinner(s, t) : x.inner(s, t)) == atom)
              hit = true;
          }
        if (!hit) return false;
      }
      return true;
    };
    r.inner_full = full(false);
    r.rinner_full = full(true);
  }
  if (r.witness.empty() && !r.biprincipal)
    r.witness = !r.cor[0] ? "\\/<s,s> != e_Q"
                          : (!r.cor[1] ? "\\/[s,s] != e_R" : "cor condition");
  if (r.biprincipal) r.witness.clear();
  return r;
}

}  // namespace

PrincipalityReport is_principal(const QRBisheaf& x) { return principality(x); }
PrincipalityReport is_biprincipal(const QRBisheaf& x) {
  return principality(x);
}

InterchangeReport interchange_check(const QRBisheaf& x) {
  PrincipalityReport p = principality(x);
  if (!p.cor[0] || !p.cor[1])
    throw std::runtime_error("HypothesisFailed: fullness joins do not hold");
  InterchangeReport r;
  r.interchange = true;
  for (const Bits& s : x.bisections) {
    for (const Bits& t : x.bisections) {
      Bits st = x.inner(s, t);
      for (const Bits& u : x.bisections) {
        Bits lhs = x.act(st, u);
        Bits rhs = x.ract(s, x.rinner(t, u));
        if (lhs != rhs) {
          r.interchange = false;
          r.witness = "interchange fails at s = " + s.to_string() +
                      ", t = " + t.to_string() + ", u = " + u.to_string();
          break;
        }
      }
      if (!r.interchange) break;
    }
    if (!r.interchange) break;
  }
  r.matches_biprincipal = (r.interchange == p.biprincipal);
  return r;
}

Bits translation_element(const QRBisheaf& x, const Bits& s, const Bits& t) {
  PrincipalityReport p = principality(x);
  if (!p.principal)
    throw std::runtime_error("NotPrincipal: bisheaf is not principal");
  auto is_bisect = [&](const Bits& v) {
    return std::find(x.bisections.begin(), x.bisections.end(), v) !=
           x.bisections.end();
  };
  if (!is_bisect(s) || !is_bisect(t) || x.tspp(s) != x.tspp(t))
    throw std::runtime_error(
        "SupportMismatch: need local bisections with equal tspp");
  Bits u = x.inner(s, t);
  int matches = 0;
  for (std::size_t vi : x.left.qi) {
    Bits v = x.Q->lat.element(vi);
    if (sppq(*x.Q, x.Q->star_b(v)) == x.sppx(t) && x.act(v, t) == s) ++matches;
  }
  if (matches != 1 || sppq(*x.Q, x.Q->star_b(u)) != x.sppx(t) ||
      x.act(u, t) != s)
    throw std::runtime_error("NotPrincipal: translation element not unique");
  return u;
}

std::optional<std::vector<int>> bimodule_iso(const QRBisheaf& x,
                                             const QRBisheaf& y) {
  if (!same_groupoid(*x.G, *y.G) || !same_groupoid(*x.H, *y.H) ||
      x.points() != y.points())
    return std::nullopt;
  int n = x.points();
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      ok = x.b.p[i] == y.b.p[f[i]] && x.b.q[i] == y.b.q[f[i]];
    for (int g = 0; g < x.G->n_arrows && ok; ++g)
      for (int i = 0; i < n && ok; ++i) {
        int a = x.b.left(g, i), c = y.b.left(g, f[i]);
        ok = (a < 0) == (c < 0) && (a < 0 || f[a] == c);
      }
    for (int h = 0; h < x.H->n_arrows && ok; ++h)
      for (int i = 0; i < n && ok; ++i) {
        int a = x.b.right(i, h), c = y.b.right(f[i], h);
        ok = (a < 0) == (c < 0) && (a < 0 || f[a] == c);
      }
    if (ok) return f;
  } while (std::next_permutation(f.begin(), f.end()));
  return std::nullopt;
}

BiAction canonical_biaction(const BiAction& b) {
  std::vector<int> to(b.n);
  std::iota(to.begin(), to.end(), 0);
  BiAction best = relabel(b, to);
  std::vector<int> best_key = flat_key(best);
  while (std::next_permutation(to.begin(), to.end())) {
    BiAction cand = relabel(b, to);
    std::vector<int> key = flat_key(cand);
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(cand);
    }
  }
  return best;
}

QRBisheaf canonical_form(const QRBisheaf& x) {
  return make_bisheaf(canonical_biaction(x.b));
}

}  // namespace qk
