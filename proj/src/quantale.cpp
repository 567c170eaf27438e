#include "qk/quantale.hpp"

#include <stdexcept>

namespace qk {

Quantale Quantale::from_functions(
    SupLattice lat_, const std::function<Bits(const Bits&, const Bits&)>& mulf,
    const std::function<Bits(const Bits&)>& invf, const Bits& unit_el) {
  Quantale q;
  q.lat = std::move(lat_);
  std::size_t n = q.lat.size();
  if (n > 2048) throw std::runtime_error("quantale too large to tabulate");
  q.mul.resize(n * n);
  q.inv.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    Bits ea = q.lat.element(a);
    q.inv[a] = int(q.lat.index_of(invf(ea)));
    for (std::size_t b = 0; b < n; ++b)
      q.mul[a * n + b] = int(q.lat.index_of(mulf(ea, q.lat.element(b))));
  }
  q.unit = q.lat.index_of(unit_el);
  return q;
}

Quantale Quantale::from_frame(SupLattice lat_) {
  Bits top = lat_.top();
  return from_functions(
      std::move(lat_), [](const Bits& a, const Bits& b) { return a & b; },
      [](const Bits& a) { return a; }, top);
}

Quantale quantale_of_groupoid(const FinGroupoid& g) {
  if (!validate(g).empty()) throw std::runtime_error("InvalidGroupoid");
  int A = g.n_arrows;
  if (A > 10) throw std::runtime_error("quantale_of_groupoid: too many arrows");
  Bits e(A);
  for (int o = 0; o < g.n_objects; ++o) e.set(g.id[o]);
  auto mulf = [&g, A](const Bits& a, const Bits& b) {
    Bits r(A);
    a.for_each([&](int x) {
      b.for_each([&](int y) {
        int c = g.compose(x, y);
        if (c >= 0) r.set(c);
      });
    });
    return r;
  };
  auto invf = [&g, A](const Bits& a) {
    Bits r(A);
    a.for_each([&](int x) { r.set(g.inv[x]); });
    return r;
  };
  return Quantale::from_functions(SupLattice::powerset(A), mulf, invf, e);
}

std::string IqfReport::summary() const {
  std::string s;
  for (const auto& c : checks) {
    s += (c.pass ? "pass " : "FAIL ") + c.axiom;
    if (!c.pass) s += " [" + c.witness + "]";
    s += "\n";
  }
  return s;
}

IqfReport validate_iqf(const Quantale& q) {
  IqfReport rep;
  int n = int(q.size());
  const SupLattice& L = q.lat;
  std::vector<int> jt(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      jt[a * n + b] = int(L.index_of(L.join(L.element(a), L.element(b))));
  auto join = [&](int a, int b) { return jt[a * n + b]; };
  auto meet_idx = [&](int a, int b) {
    return int(L.index_of(L.element(a) & L.element(b)));
  };
  int bot = int(L.index_of(L.bottom()));
  int top = int(L.index_of(L.top()));
  int e = int(q.unit);

  auto check = [&](const std::string& axiom, auto&& body) {
    IqfCheck c;
    c.axiom = axiom;
    body(c);
    rep.checks.push_back(std::move(c));
  };
  auto el = [&](int i) { return L.element(i).to_string(); };

  check("associativity", [&](IqfCheck& c) {
    for (int a = 0; a < n && c.pass; ++a)
      for (int b = 0; b < n && c.pass; ++b)
        for (int d = 0; d < n; ++d)
          if (q.times(q.times(a, b), d) != q.times(a, q.times(b, d))) {
            c.pass = false;
            c.witness = "(" + el(a) + el(b) + ")" + el(d);
            break;
          }
  });
  check("unit laws", [&](IqfCheck& c) {
    for (int a = 0; a < n; ++a)
      if (q.times(e, a) != a || q.times(a, e) != a) {
        c.pass = false;
        c.witness = el(a);
        break;
      }
  });
  check("involution", [&](IqfCheck& c) {
    for (int a = 0; a < n && c.pass; ++a) {
      if (q.star(q.star(a)) != a) {
        c.pass = false;
        c.witness = "a** != a at " + el(a);
        break;
      }
      for (int b = 0; b < n; ++b)
        if (q.star(q.times(a, b)) != q.times(q.star(b), q.star(a))) {
          c.pass = false;
          c.witness = "(ab)* != b*a* at " + el(a) + "," + el(b);
          break;
        }
    }
  });
  check("involution preserves joins", [&](IqfCheck& c) {
    if (q.star(bot) != bot) {
      c.pass = false;
      c.witness = "0* != 0";
      return;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (q.star(join(a, b)) != join(q.star(a), q.star(b))) {
          c.pass = false;
          c.witness = el(a) + "," + el(b);
          return;
        }
  });
  check("product preserves joins in each variable", [&](IqfCheck& c) {
    for (int a = 0; a < n; ++a)
      if (q.times(a, bot) != bot || q.times(bot, a) != bot) {
        c.pass = false;
        c.witness = "zero law at " + el(a);
        return;
      }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int d = 0; d < n; ++d) {
          if (q.times(a, join(b, d)) != join(q.times(a, b), q.times(a, d)) ||
              q.times(join(b, d), a) != join(q.times(b, a), q.times(d, a))) {
            c.pass = false;
            c.witness = el(a) + "," + el(b) + "," + el(d);
            return;
          }
        }
  });
  check("frame law", [&](IqfCheck& c) {
    if (auto v = L.frame_violation()) {
      c.pass = false;
      c.witness = *v;
    }
  });
  // spp(a) := a1 /\ e.
  std::vector<int> spp(n);
  for (int a = 0; a < n; ++a) spp[a] = meet_idx(q.times(a, top), e);
  check("support: spp(a) <= aa*", [&](IqfCheck& c) {
    for (int a = 0; a < n; ++a)
      if (!L.leq(L.element(spp[a]), L.element(q.times(a, q.star(a))))) {
        c.pass = false;
        c.witness = el(a);
        return;
      }
  });
  check("support: a <= spp(a)a", [&](IqfCheck& c) {
    for (int a = 0; a < n; ++a)
      if (!L.leq(L.element(a), L.element(q.times(spp[a], a)))) {
        c.pass = false;
        c.witness = el(a);
        return;
      }
  });
  check("support stability: spp(ba) = b spp(a) for b <= e", [&](IqfCheck& c) {
    for (int b = 0; b < n; ++b) {
      if (!L.leq(L.element(b), L.element(e))) continue;
      for (int a = 0; a < n; ++a)
        if (spp[q.times(b, a)] != q.times(b, spp[a])) {
          c.pass = false;
          c.witness = el(b) + "," + el(a);
          return;
        }
    }
  });
  check("support: spp(a) = aa* /\\ e", [&](IqfCheck& c) {
    for (int a = 0; a < n; ++a)
      if (spp[a] != meet_idx(q.times(a, q.star(a)), e)) {
        c.pass = false;
        c.witness = el(a);
        return;
      }
  });
  check("support: spp(a)1 = a1", [&](IqfCheck& c) {
    for (int a = 0; a < n; ++a)
      if (q.times(spp[a], top) != q.times(a, top)) {
        c.pass = false;
        c.witness = el(a);
        return;
      }
  });
  check("Q_0 acts by meet: ba = b1 /\\ a for b <= e", [&](IqfCheck& c) {
    for (int b = 0; b < n; ++b) {
      if (!L.leq(L.element(b), L.element(e))) continue;
      for (int a = 0; a < n; ++a)
        if (q.times(b, a) != meet_idx(q.times(b, top), a)) {
          c.pass = false;
          c.witness = el(b) + "," + el(a);
          return;
        }
    }
  });
  check("Q_0 is a locale under the product", [&](IqfCheck& c) {
    for (int b = 0; b < n; ++b) {
      if (!L.leq(L.element(b), L.element(e))) continue;
      for (int d = 0; d < n; ++d) {
        if (!L.leq(L.element(d), L.element(e))) continue;
        if (q.times(b, d) != meet_idx(b, d)) {
          c.pass = false;
          c.witness = el(b) + "," + el(d);
          return;
        }
      }
    }
  });
  check("partial-unit cover: \\/ Q_I = 1", [&](IqfCheck& c) {
    int acc = bot;
    for (std::size_t s : partial_units(q)) acc = join(acc, int(s));
    if (acc != top) {
      c.pass = false;
      c.witness = "join of partial units = " + el(acc);
    }
  });
  check("a <= aa*a", [&](IqfCheck& c) {
    for (int a = 0; a < n; ++a)
      if (!L.leq(L.element(a), L.element(q.times(q.times(a, q.star(a)), a)))) {
        c.pass = false;
        c.witness = el(a);
        return;
      }
  });
  return rep;
}

std::vector<std::size_t> partial_units(const Quantale& q) {
  std::vector<std::size_t> out;
  const SupLattice& L = q.lat;
  Bits e = q.unit_b();
  for (std::size_t s = 0; s < q.size(); ++s) {
    int ss = q.times(int(s), q.star(int(s)));
    int s2 = q.times(q.star(int(s)), int(s));
    if (L.leq(L.join(L.element(ss), L.element(s2)), e)) out.push_back(s);
  }
  return out;
}

SupportOp support(const Quantale& q) {
  IqfReport rep = validate_iqf(q);
  for (const auto& c : rep.checks)
    if (!c.pass && c.axiom.rfind("support", 0) == 0)
      throw std::runtime_error("NoStableSupport: " + c.axiom + " [" + c.witness + "]");
  SupportOp s;
  s.owner = &q;
  s.table.resize(q.size());
  int top = int(q.lat.index_of(q.lat.top()));
  for (std::size_t a = 0; a < q.size(); ++a)
    s.table[a] = int(q.lat.index_of(q.lat.element(q.times(int(a), top)) & q.unit_b()));
  return s;
}

FinGroupoid groupoid_of_quantale(const Quantale& q) {
  if (!q.lat.is_powerset())
    throw std::runtime_error("groupoid_of_quantale: need a powerset carrier");
  int A = q.lat.generators();
  FinGroupoid g;
  g.n_arrows = A;
  Bits e = q.unit_b();
  std::vector<int> obj_of_id(A, -1);
  for (int i = 0; i < A; ++i)
    if (e.test(i)) {
      obj_of_id[i] = g.n_objects++;
      g.id.push_back(i);
    }
  g.dom.assign(A, -1);
  g.cod.assign(A, -1);
  g.inv.assign(A, -1);
  auto atom = [&](int i) { return Bits::single(A, i); };
  for (int a = 0; a < A; ++a) {
    Bits s = q.star_b(atom(a));
    if (s.count() != 1) throw std::runtime_error("atom involution not an atom");
    g.inv[a] = s.first();
    for (int i = 0; i < A; ++i) {
      if (!e.test(i)) continue;
      if (q.times_b(atom(i), atom(a)) == atom(a)) g.cod[a] = obj_of_id[i];
      if (q.times_b(atom(a), atom(i)) == atom(a)) g.dom[a] = obj_of_id[i];
    }
    if (g.dom[a] < 0 || g.cod[a] < 0)
      throw std::runtime_error("atom without dom/cod identity");
  }
  g.comp.assign(A * A, -1);
  for (int a = 0; a < A; ++a)
    for (int b = 0; b < A; ++b) {
      Bits p = q.times_b(atom(a), atom(b));
      if (p.count() > 1) throw std::runtime_error("atom product not sub-atomic");
      if (p.count() == 1) g.comp[a * A + b] = p.first();
    }
  return g;
}

}  // namespace qk
