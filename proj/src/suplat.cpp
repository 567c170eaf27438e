#include "qk/suplat.hpp"

#include <algorithm>
#include <set>

namespace qk {

SupLattice SupLattice::powerset(int n) {
  SupLattice l;
  l.n_ = n;
  l.powerset_ = true;
  return l;
}

SupLattice SupLattice::from_closed_sets(int n, std::vector<Bits> closed) {
  SupLattice l;
  l.n_ = n;
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  l.elems_ = std::move(closed);
  for (std::size_t i = 0; i < l.elems_.size(); ++i) l.index_[l.elems_[i]] = i;
  return l;
}

SupLattice SupLattice::from_closure(int n, std::function<Bits(const Bits&)> close,
                                    std::size_t cap) {
  std::set<Bits> seen;
  std::vector<Bits> work;
  auto add = [&](const Bits& b) {
    if (seen.insert(b).second) work.push_back(b);
  };
  add(close(Bits(n)));
  for (int i = 0; i < n; ++i) add(close(Bits::single(n, i)));
  // Saturate under binary joins; every element is a join of singleton
  // closures, so this reaches all of them.
  for (std::size_t k = 0; k < work.size(); ++k) {
    Bits a = work[k];
    std::size_t m = work.size();
    for (std::size_t j = 0; j <= k && j < m; ++j) {
      add(close(a | work[j]));
      if (seen.size() > cap)
        throw std::runtime_error("from_closure: element cap exceeded");
    }
  }
  return from_closed_sets(n, {seen.begin(), seen.end()});
}

std::size_t SupLattice::size() const {
  if (powerset_) return std::size_t{1} << n_;
  return elems_.size();
}

Bits SupLattice::element(std::size_t i) const {
  if (!powerset_) return elems_[i];
  Bits b(n_);
  for (int k = 0; k < n_; ++k)
    if ((i >> k) & 1) b.set(k);
  return b;
}

std::size_t SupLattice::index_of(const Bits& x) const {
  if (powerset_) {
    std::size_t i = 0;
    x.for_each([&](int k) { i |= std::size_t{1} << k; });
    return i;
  }
  auto it = index_.find(x);
  if (it == index_.end())
    throw std::runtime_error("index_of: not an element: " + x.to_string());
  return it->second;
}

bool SupLattice::contains(const Bits& x) const {
  if (x.universe() != n_) return false;
  return powerset_ || index_.count(x) != 0;
}

Bits SupLattice::closure(const Bits& s) const {
  if (powerset_) return s;
  // Least closed superset: meet of all closed sets above s.
  Bits r = Bits::full(n_);
  bool hit = false;
  for (const Bits& e : elems_)
    if (s.subset_of(e)) {
      r &= e;
      hit = true;
    }
  if (!hit) throw std::runtime_error("closure: no closed superset");
  return r;
}

Bits SupLattice::join(const Bits& a, const Bits& b) const { return closure(a | b); }

Bits SupLattice::join_all(const std::vector<Bits>& xs) const {
  Bits u(n_);
  for (const Bits& x : xs) u |= x;
  return closure(u);
}

Bits SupLattice::bottom() const { return closure(Bits(n_)); }

Bits SupLattice::top() const {
  if (powerset_) return Bits::full(n_);
  return elems_.back();
}

std::vector<std::size_t> SupLattice::join_irreducibles() const {
  std::vector<std::size_t> out;
  if (powerset_) {
    for (int k = 0; k < n_; ++k) out.push_back(std::size_t{1} << k);
    return out;
  }
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    Bits below(n_);
    for (const Bits& e : elems_)
      if (e.subset_of(elems_[i]) && e != elems_[i]) below |= e;
    if (closure(below) != elems_[i]) out.push_back(i);
  }
  return out;
}

std::optional<std::string> SupLattice::frame_violation() const {
  std::vector<std::size_t> ji = join_irreducibles();
  if (ji.size() > 20) throw std::runtime_error("frame_violation: too large");
  std::size_t m = ji.size();
  for (std::size_t xi = 0; xi < size(); ++xi) {
    Bits x = element(xi);
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      Bits u(n_);
      Bits rhs_u(n_);
      for (std::size_t k = 0; k < m; ++k)
        if ((mask >> k) & 1) {
          u |= element(ji[k]);
          rhs_u |= x & element(ji[k]);
        }
      Bits lhs = x & closure(u);
      Bits rhs = closure(rhs_u);
      if (lhs != rhs)
        return "distributivity fails at x=" + x.to_string() +
               ", lhs=" + lhs.to_string() + ", rhs=" + rhs.to_string();
    }
  }
  return std::nullopt;
}

bool SupLattice::same_carrier(const SupLattice& o) const {
  return n_ == o.n_ && powerset_ == o.powerset_ && elems_ == o.elems_;
}

SupHom SupHom::from_function(const SupLattice& s, const SupLattice& d,
                             const std::function<Bits(const Bits&)>& f) {
  SupHom h;
  h.src = &s;
  h.dst = &d;
  h.table.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) h.table.push_back(f(s.element(i)));
  return h;
}

SupHom SupHom::identity(const SupLattice& l) {
  return from_function(l, l, [](const Bits& x) { return x; });
}

std::optional<std::string> SupHom::join_violation() const {
  if (apply(src->bottom()) != dst->bottom()) return std::string("f(bot) != bot");
  for (std::size_t i = 0; i < src->size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Bits a = src->element(i), b = src->element(j);
      Bits lhs = apply(src->join(a, b));
      Bits rhs = dst->join(table[i], table[j]);
      if (lhs != rhs)
        return "f(" + a.to_string() + " v " + b.to_string() + ") = " +
               lhs.to_string() + " but join of images = " + rhs.to_string();
    }
  return std::nullopt;
}

SupHom right_adjoint(const SupHom& f) {
  if (auto v = f.join_violation()) throw NotJoinPreserving(*v);
  SupHom g;
  g.src = f.dst;
  g.dst = f.src;
  g.table.reserve(f.dst->size());
  for (std::size_t yi = 0; yi < f.dst->size(); ++yi) {
    Bits y = f.dst->element(yi);
    Bits u(f.src->generators());
    for (std::size_t xi = 0; xi < f.src->size(); ++xi)
      if (f.table[xi].subset_of(y)) u |= f.src->element(xi);
    g.table.push_back(f.src->closure(u));
  }
  return g;
}

namespace {

// Closure engine for tensor products: generators are pairs (xi, yj) of
// element indices, and a subset is closed when it is down-closed and stable
// under joins in each coordinate (including the empty join: pairs with a
// bottom coordinate are in every closed set) and under the extra relations.
struct TensorCloser {
  const SupLattice* X;
  const SupLattice* Y;
  std::size_t nx, ny;
  std::vector<Bits> dominated;  // per generator, the generators <= it
  std::vector<TensorRelation> rels;

  int gen(std::size_t xi, std::size_t yj) const { return int(xi * ny + yj); }

  Bits close(const Bits& s0) const {
    int n = int(nx * ny);
    Bits s = s0;
    // Seed: bottom (x) y and x (x) bottom are the zero generator.
    std::size_t xb = X->index_of(X->bottom());
    std::size_t yb = Y->index_of(Y->bottom());
    for (std::size_t xi = 0; xi < nx; ++xi) s.set(gen(xi, yb));
    for (std::size_t yj = 0; yj < ny; ++yj) s.set(gen(xb, yj));
    bool changed = true;
    while (changed) {
      changed = false;
      // Down-closure.
      Bits t(n);
      s.for_each([&](int g) { t |= dominated[g]; });
      if (t != s) {
        s = t;
        changed = true;
      }
      // Coordinatewise joins: for each fixed y, join the x-partners; dually.
      for (std::size_t yj = 0; yj < ny; ++yj) {
        Bits u(X->generators());
        for (std::size_t xi = 0; xi < nx; ++xi)
          if (s.test(gen(xi, yj))) u |= X->element(xi);
        int g = gen(X->index_of(X->closure(u)), yj);
        if (!s.test(g)) {
          s.set(g);
          changed = true;
        }
      }
      for (std::size_t xi = 0; xi < nx; ++xi) {
        Bits u(Y->generators());
        for (std::size_t yj = 0; yj < ny; ++yj)
          if (s.test(gen(xi, yj))) u |= Y->element(yj);
        int g = gen(xi, Y->index_of(Y->closure(u)));
        if (!s.test(g)) {
          s.set(g);
          changed = true;
        }
      }
      for (const auto& r : rels) {
        int a = gen(r.x1, r.y1), b = gen(r.x2, r.y2);
        if (s.test(a) != s.test(b)) {
          s.set(a);
          s.set(b);
          changed = true;
        }
      }
    }
    return s;
  }
};

}  // namespace

Bits TensorLattice::pure(std::size_t xi, std::size_t yj) const {
  Bits s(int(X->size() * Y->size()));
  s.set(int(xi * Y->size() + yj));
  return close_(s);
}

Bits TensorLattice::pure_elems(const Bits& x, const Bits& y) const {
  return pure(X->index_of(X->closure(x)), Y->index_of(Y->closure(y)));
}

TensorLattice tensor(const SupLattice& X, const SupLattice& Y,
                     const std::vector<TensorRelation>& rels, std::size_t cap) {
  auto c = std::make_shared<TensorCloser>();
  c->X = &X;
  c->Y = &Y;
  c->nx = X.size();
  c->ny = Y.size();
  c->rels = rels;
  int n = int(c->nx * c->ny);
  c->dominated.reserve(n);
  for (std::size_t xi = 0; xi < c->nx; ++xi)
    for (std::size_t yj = 0; yj < c->ny; ++yj) {
      Bits d(n);
      for (std::size_t ai = 0; ai < c->nx; ++ai) {
        if (!X.leq(X.element(ai), X.element(xi))) continue;
        for (std::size_t bj = 0; bj < c->ny; ++bj)
          if (Y.leq(Y.element(bj), Y.element(yj))) d.set(c->gen(ai, bj));
      }
      c->dominated.push_back(d);
    }
  TensorLattice t;
  t.X = &X;
  t.Y = &Y;
  t.close_ = [c](const Bits& s) { return c->close(s); };
  t.lat = SupLattice::from_closure(n, t.close_, cap);
  return t;
}

QuotientResult quotient_by_closure(const SupLattice& X,
                                   const std::vector<std::pair<Bits, Bits>>& pairs) {
  // Fixed points of the least closure operator identifying each pair are the
  // elements y with a_k <= y  <=>  b_k <= y for every k.
  std::vector<Bits> fixed;
  for (std::size_t i = 0; i < X.size(); ++i) {
    Bits y = X.element(i);
    bool ok = true;
    for (const auto& [a, b] : pairs)
      if (X.leq(a, y) != X.leq(b, y)) {
        ok = false;
        break;
      }
    if (ok) fixed.push_back(y);
  }
  QuotientResult r;
  r.lat = std::make_unique<SupLattice>(
      SupLattice::from_closed_sets(X.generators(), fixed));
  r.map = SupHom::from_function(X, *r.lat, [&](const Bits& x) {
    Bits v = Bits::full(X.generators());
    for (const Bits& f : fixed)
      if (x.subset_of(f)) v &= f;
    return v;
  });
  return r;
}

}  // namespace qk
