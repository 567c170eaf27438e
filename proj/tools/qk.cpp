// File-driven command-line surface for the qk library: loads groupoids,
// actions, bi-actions and functors from JSON tables, runs the deciders and
// emits deterministic JSON reports on stdout (human summary on stderr).
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 input error,
// 3 inconclusive search.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qk/bimodule.hpp"
#include "qk/catalog.hpp"
#include "qk/morita.hpp"

using json = nlohmann::ordered_json;
using namespace qk;

namespace {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv_digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "fnv:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string dir_of(const std::string& path) {
  auto pos = path.find_last_of('/');
  return pos == std::string::npos ? std::string() : path.substr(0, pos + 1);
}

json load_json(const std::string& path, json& digests) {
  std::string bytes = read_file(path);
  digests[path] = fnv_digest(bytes);
  json j = json::parse(bytes, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in " + path);
  return j;
}

int index_of(const std::vector<std::string>& names, const std::string& n,
             const std::string& what, const std::string& path) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return static_cast<int>(i);
  throw ParseError("unknown " + what + " '" + n + "' in " + path);
}

struct LoadedGroupoid {
  FinGroupoid g;
  std::vector<std::string> objects, arrows;
};

LoadedGroupoid parse_groupoid(const json& j, const std::string& path) {
  LoadedGroupoid lg;
  if (!j.contains("objects") || !j.contains("arrows"))
    throw ParseError(path + ": missing 'objects' or 'arrows'");
  for (const auto& o : j["objects"]) lg.objects.push_back(o.get<std::string>());
  FinGroupoid& g = lg.g;
  g.n_objects = static_cast<int>(lg.objects.size());
  for (const auto& a : j["arrows"]) {
    lg.arrows.push_back(a.at("id").get<std::string>());
    g.dom.push_back(index_of(lg.objects, a.at("dom").get<std::string>(),
                             "object", path));
    g.cod.push_back(index_of(lg.objects, a.at("cod").get<std::string>(),
                             "object", path));
  }
  g.n_arrows = static_cast<int>(lg.arrows.size());
  g.inv.assign(g.n_arrows, -1);
  g.id.assign(g.n_objects, -1);
  g.comp.assign(static_cast<std::size_t>(g.n_arrows) * g.n_arrows, -1);
  for (const auto& row : j.value("comp", json::array())) {
    int f = index_of(lg.arrows, row.at(0).get<std::string>(), "arrow", path);
    int h = index_of(lg.arrows, row.at(1).get<std::string>(), "arrow", path);
    int fh = index_of(lg.arrows, row.at(2).get<std::string>(), "arrow", path);
    g.comp[f * g.n_arrows + h] = fh;
  }
  for (const auto& row : j.value("inv", json::array())) {
    int a = index_of(lg.arrows, row.at(0).get<std::string>(), "arrow", path);
    g.inv[a] = index_of(lg.arrows, row.at(1).get<std::string>(), "arrow", path);
  }
  for (const auto& row : j.value("ids", json::array())) {
    int o = index_of(lg.objects, row.at(0).get<std::string>(), "object", path);
    g.id[o] = index_of(lg.arrows, row.at(1).get<std::string>(), "arrow", path);
  }
  for (int o = 0; o < g.n_objects; ++o)
    if (g.id[o] < 0) throw ParseError(path + ": object without identity");
  for (int a = 0; a < g.n_arrows; ++a)
    if (g.inv[a] < 0) throw ParseError(path + ": arrow without inverse");
  return lg;
}

LoadedGroupoid load_groupoid(const std::string& path, json& digests) {
  return parse_groupoid(load_json(path, digests), path);
}

struct LoadedAction {
  std::shared_ptr<LoadedGroupoid> lg;
  GAction a;
  std::vector<std::string> carrier;
};

LoadedAction load_action(const std::string& path, json& digests) {
  json j = load_json(path, digests);
  LoadedAction la;
  std::string gpath = dir_of(path) + j.at("groupoid").get<std::string>();
  la.lg = std::make_shared<LoadedGroupoid>(load_groupoid(gpath, digests));
  for (const auto& c : j.at("carrier")) la.carrier.push_back(c.get<std::string>());
  la.a.g = &la.lg->g;
  la.a.n = static_cast<int>(la.carrier.size());
  la.a.p.assign(la.a.n, -1);
  la.a.act.assign(static_cast<std::size_t>(la.lg->g.n_arrows) * la.a.n, -1);
  for (const auto& row : j.at("anchor")) {
    int x = index_of(la.carrier, row.at(0).get<std::string>(), "point", path);
    la.a.p[x] =
        index_of(la.lg->objects, row.at(1).get<std::string>(), "object", path);
  }
  for (const auto& row : j.at("act")) {
    int g = index_of(la.lg->arrows, row.at(0).get<std::string>(), "arrow", path);
    int x = index_of(la.carrier, row.at(1).get<std::string>(), "point", path);
    int y = index_of(la.carrier, row.at(2).get<std::string>(), "point", path);
    la.a.act[g * la.a.n + x] = y;
  }
  for (int x = 0; x < la.a.n; ++x)
    if (la.a.p[x] < 0) throw ParseError(path + ": point without anchor");
  return la;
}

struct LoadedBiAction {
  std::shared_ptr<LoadedGroupoid> left, right;
  BiAction b;
  std::vector<std::string> carrier;
};

LoadedBiAction load_biaction(const std::string& path, json& digests) {
  json j = load_json(path, digests);
  LoadedBiAction lb;
  lb.left = std::make_shared<LoadedGroupoid>(
      load_groupoid(dir_of(path) + j.at("left").get<std::string>(), digests));
  lb.right = std::make_shared<LoadedGroupoid>(
      load_groupoid(dir_of(path) + j.at("right").get<std::string>(), digests));
  for (const auto& c : j.at("carrier")) lb.carrier.push_back(c.get<std::string>());
  BiAction& b = lb.b;
  b.G = &lb.left->g;
  b.H = &lb.right->g;
  b.n = static_cast<int>(lb.carrier.size());
  b.p.assign(b.n, -1);
  b.q.assign(b.n, -1);
  b.act.assign(static_cast<std::size_t>(b.G->n_arrows) * b.n, -1);
  b.ract.assign(static_cast<std::size_t>(b.H->n_arrows) * b.n, -1);
  for (const auto& row : j.at("left_anchor")) {
    int x = index_of(lb.carrier, row.at(0).get<std::string>(), "point", path);
    b.p[x] = index_of(lb.left->objects, row.at(1).get<std::string>(), "object",
                      path);
  }
  for (const auto& row : j.at("right_anchor")) {
    int x = index_of(lb.carrier, row.at(0).get<std::string>(), "point", path);
    b.q[x] = index_of(lb.right->objects, row.at(1).get<std::string>(), "object",
                      path);
  }
  for (const auto& row : j.at("act")) {
    int g = index_of(lb.left->arrows, row.at(0).get<std::string>(), "arrow",
                     path);
    int x = index_of(lb.carrier, row.at(1).get<std::string>(), "point", path);
    int y = index_of(lb.carrier, row.at(2).get<std::string>(), "point", path);
    b.act[g * b.n + x] = y;
  }
  for (const auto& row : j.at("ract")) {
    int h = index_of(lb.right->arrows, row.at(0).get<std::string>(), "arrow",
                     path);
    int x = index_of(lb.carrier, row.at(1).get<std::string>(), "point", path);
    int y = index_of(lb.carrier, row.at(2).get<std::string>(), "point", path);
    b.ract[h * b.n + x] = y;
  }
  for (int x = 0; x < b.n; ++x)
    if (b.p[x] < 0 || b.q[x] < 0)
      throw ParseError(path + ": point without both anchors");
  return lb;
}

struct LoadedFunctor {
  std::shared_ptr<LoadedGroupoid> src, dst;
  GroupoidFunctor f;
};

LoadedFunctor load_functor(const std::string& path, json& digests) {
  json j = load_json(path, digests);
  LoadedFunctor lf;
  lf.src = std::make_shared<LoadedGroupoid>(
      load_groupoid(dir_of(path) + j.at("src").get<std::string>(), digests));
  lf.dst = std::make_shared<LoadedGroupoid>(
      load_groupoid(dir_of(path) + j.at("dst").get<std::string>(), digests));
  lf.f.src = &lf.src->g;
  lf.f.dst = &lf.dst->g;
  lf.f.phi0.assign(lf.src->g.n_objects, -1);
  lf.f.phi1.assign(lf.src->g.n_arrows, -1);
  for (const auto& row : j.at("phi0")) {
    int a = index_of(lf.src->objects, row.at(0).get<std::string>(), "object",
                     path);
    lf.f.phi0[a] = index_of(lf.dst->objects, row.at(1).get<std::string>(),
                            "object", path);
  }
  for (const auto& row : j.at("phi1")) {
    int a = index_of(lf.src->arrows, row.at(0).get<std::string>(), "arrow",
                     path);
    lf.f.phi1[a] =
        index_of(lf.dst->arrows, row.at(1).get<std::string>(), "arrow", path);
  }
  for (int o = 0; o < lf.src->g.n_objects; ++o)
    if (lf.f.phi0[o] < 0) throw ParseError(path + ": object without image");
  for (int a = 0; a < lf.src->g.n_arrows; ++a)
    if (lf.f.phi1[a] < 0) throw ParseError(path + ": arrow without image");
  return lf;
}

// Set-expression micro-syntax: "1" = top, "0" = bottom, "{a,b}" over names.
Bits parse_set(const std::string& expr, const std::vector<std::string>& names) {
  Bits b(static_cast<int>(names.size()));
  if (expr == "1") return Bits::full(static_cast<int>(names.size()));
  if (expr == "0") return b;
  if (expr.size() < 2 || expr.front() != '{' || expr.back() != '}')
    throw ParseError("bad set expression '" + expr + "'");
  std::string body = expr.substr(1, expr.size() - 2);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (tok.empty()) continue;
    b.set(index_of(names, tok, "atom", "set expression"));
  }
  return b;
}

json set_names(const Bits& b, const std::vector<std::string>& names) {
  json out = json::array();
  b.for_each([&](int i) { out.push_back(names[i]); });
  return out;
}

struct Report {
  json j;
  bool all_pass = true;
  bool inconclusive = false;

  explicit Report(const std::string& command) {
    j["command"] = command;
    j["inputs"] = json::object();
    j["checks"] = json::array();
  }
  void add(const std::string& name, bool pass, const std::string& witness = "") {
    json c;
    c["name"] = name;
    c["pass"] = pass;
    if (!witness.empty()) c["witness"] = witness;
    j["checks"].push_back(std::move(c));
    if (!pass) all_pass = false;
  }
  int finish(bool json_only) {
    std::cout << j.dump(2) << "\n";
    if (!json_only) {
      for (const auto& c : j["checks"])
        std::cerr << (c["pass"].get<bool>() ? "   ok " : " FAIL ")
                  << c["name"].get<std::string>()
                  << (c.contains("witness")
                          ? "  [" + c["witness"].get<std::string>() + "]"
                          : "")
                  << "\n";
      std::cerr << (inconclusive ? "result: inconclusive\n"
                                 : (all_pass ? "result: pass\n"
                                             : "result: FAIL\n"));
    }
    return inconclusive ? 3 : (all_pass ? 0 : 1);
  }
};

void add_iqf(Report& rep, const IqfReport& r) {
  for (const IqfCheck& c : r.checks) rep.add(c.axiom, c.pass, c.witness);
}

json principality_json(const PrincipalityReport& r) {
  json p;
  p["principal"] = r.principal;
  p["left_surjective"] = r.left_surjective;
  p["biprincipal"] = r.biprincipal;
  p["theorem_conditions"] = {r.thm[0], r.thm[1], r.thm[2], r.thm[3]};
  p["corollary_conditions"] = {r.cor[0], r.cor[1], r.cor[2], r.cor[3]};
  p["remark_agree"] = r.remark_agree;
  if (r.biprincipal) {
    p["inner_full"] = r.inner_full;
    p["rinner_full"] = r.rinner_full;
  }
  if (!r.witness.empty()) p["witness"] = r.witness;
  return p;
}

int cmd_validate(const std::string& path, bool json_only) {
  Report rep("validate");
  LoadedGroupoid lg = load_groupoid(path, rep.j["inputs"]);
  auto errs = validate(lg.g);
  rep.add("groupoid axioms", errs.empty(),
          errs.empty() ? "" : errs.front());
  rep.j["objects"] = lg.g.n_objects;
  rep.j["arrows"] = lg.g.n_arrows;
  return rep.finish(json_only);
}

int cmd_quantale(const std::string& path, bool dump, bool json_only) {
  Report rep("quantale");
  LoadedGroupoid lg = load_groupoid(path, rep.j["inputs"]);
  auto errs = validate(lg.g);
  rep.add("groupoid axioms", errs.empty(), errs.empty() ? "" : errs.front());
  if (!errs.empty()) return rep.finish(json_only);
  Quantale q = quantale_of_groupoid(lg.g);
  add_iqf(rep, validate_iqf(q));
  rep.j["elements"] = q.size();
  json pu = json::array();
  for (std::size_t ui : partial_units(q))
    pu.push_back(set_names(q.lat.element(ui), lg.arrows));
  rep.j["partial_units"] = pu;
  if (dump) {
    json table = json::array();
    for (int a = 0; a < lg.g.n_arrows; ++a)
      for (int b = 0; b < lg.g.n_arrows; ++b) {
        int c = lg.g.compose(a, b);
        if (c >= 0)
          table.push_back({lg.arrows[a], lg.arrows[b], lg.arrows[c]});
      }
    rep.j["product"] = table;
  }
  return rep.finish(json_only);
}

int cmd_sheaf(const std::string& gpath, const std::string& apath,
              bool json_only) {
  Report rep("sheaf");
  LoadedGroupoid lg = load_groupoid(gpath, rep.j["inputs"]);
  LoadedAction la = load_action(apath, rep.j["inputs"]);
  if (!same_groupoid(lg.g, la.lg->g))
    throw ParseError("action file references a different groupoid");
  auto errs = validate(la.a);
  rep.add("action axioms", errs.empty(), errs.empty() ? "" : errs.front());
  if (!errs.empty()) return rep.finish(json_only);
  Quantale q = quantale_of_groupoid(lg.g);
  QSheaf x = module_of_action(q, la.a);
  for (const IqfCheck& c : qsheaf_laws(x)) rep.add(c.axiom, c.pass, c.witness);
  PrincipalReport pr = principal_sections(x);
  rep.add("four principal-section conditions agree", pr.conditions_agree);
  json secs = json::array();
  for (const Bits& s : pr.principal) secs.push_back(set_names(s, la.carrier));
  rep.j["principal_sections"] = secs;
  rep.j["principally_covered"] = pr.principally_covered;
  rep.j["hilbert_sections"] = pr.sections.size();
  return rep.finish(json_only);
}

int cmd_inner(const std::string& gpath, const std::string& apath,
              const std::string& xe, const std::string& ye, bool json_only) {
  Report rep("inner");
  LoadedGroupoid lg = load_groupoid(gpath, rep.j["inputs"]);
  LoadedAction la = load_action(apath, rep.j["inputs"]);
  if (!same_groupoid(lg.g, la.lg->g))
    throw ParseError("action file references a different groupoid");
  Quantale q = quantale_of_groupoid(lg.g);
  QSheaf m = module_of_action(q, la.a);
  Bits xb = parse_set(xe, la.carrier), yb = parse_set(ye, la.carrier);
  Bits fast = m.inner_fast(xb, yb), oracle = m.inner_oracle(xb, yb);
  rep.j["x"] = set_names(xb, la.carrier);
  rep.j["y"] = set_names(yb, la.carrier);
  rep.j["inner_fast"] = set_names(fast, lg.arrows);
  rep.j["inner_oracle"] = set_names(oracle, lg.arrows);
  rep.add("inner_fast = inner_oracle", fast == oracle);
  return rep.finish(json_only);
}

int cmd_bisheaf(const std::string& path, bool json_only) {
  Report rep("bisheaf");
  LoadedBiAction lb = load_biaction(path, rep.j["inputs"]);
  QRBisheaf x = make_bisheaf(lb.b);
  PrincipalityReport r = is_biprincipal(x);
  rep.j["principality"] = principality_json(r);
  rep.add("remark restatements agree", r.remark_agree);
  rep.add("principal", r.principal, r.principal ? "" : r.witness);
  rep.add("biprincipal", r.biprincipal, r.biprincipal ? "" : r.witness);
  if (r.cor[0] && r.cor[1]) {
    InterchangeReport ic = interchange_check(x);
    rep.add("interchange <s,t>u = s[t,u] iff biprincipal",
            ic.matches_biprincipal, ic.witness);
  }
  // The two bottom report lines are informational; principality failures on
  // a valid bisheaf are findings, not command failures.
  rep.all_pass = rep.j["checks"][0]["pass"].get<bool>() &&
                 (!(r.cor[0] && r.cor[1]) ||
                  rep.j["checks"].back()["pass"].get<bool>());
  return rep.finish(json_only);
}

int cmd_hs_compose(const std::string& fpath, const std::string& gpath,
                   bool json_only) {
  Report rep("hs-compose");
  LoadedBiAction lf = load_biaction(fpath, rep.j["inputs"]);
  LoadedBiAction lg = load_biaction(gpath, rep.j["inputs"]);
  HSMap f = hs_of_bisheaf(make_bisheaf(lf.b));
  HSMap g = hs_of_bisheaf(make_bisheaf(lg.b));
  if (!same_groupoid(*f.rep.H, *g.rep.G))
    throw ParseError("middle groupoids differ");
  HSMap fg = hs_compose(f, g);
  rep.add("composite is principal", is_principal(fg.rep).principal);
  rep.j["carrier_points"] = fg.rep.points();
  rep.j["left_anchor"] = fg.rep.b.p;
  rep.j["right_anchor"] = fg.rep.b.q;
  return rep.finish(json_only);
}

int cmd_functor_bundle(const std::string& path, bool json_only) {
  Report rep("functor-bundle");
  LoadedFunctor lf = load_functor(path, rep.j["inputs"]);
  auto errs = validate(lf.f);
  rep.add("functor axioms", errs.empty(), errs.empty() ? "" : errs.front());
  if (!errs.empty()) return rep.finish(json_only);
  FunctorBundle fb = bundle_of_functor(lf.f);
  QRBisheaf x = make_bisheaf(fb.bundle);
  PrincipalityReport r = is_biprincipal(x);
  rep.add("bundle is principal", r.principal);
  rep.j["principality"] = principality_json(r);
  EssEquivReport ee = is_essential_equivalence(lf.f);
  rep.j["essentially_surjective"] = ee.essentially_surjective;
  rep.j["fully_faithful"] = ee.fully_faithful;
  rep.add("essential equivalence iff biprincipal bundle",
          ee.ok() == r.biprincipal);
  return rep.finish(json_only);
}

int cmd_morita(const std::string& p1, const std::string& p2, int bound,
               bool oracle_only, bool json_only) {
  Report rep("morita");
  LoadedGroupoid a = load_groupoid(p1, rep.j["inputs"]);
  LoadedGroupoid b = load_groupoid(p2, rep.j["inputs"]);
  bool oracle = morita_oracle(a.g, b.g);
  rep.j["oracle_equivalent"] = oracle;
  if (oracle_only) {
    rep.add("oracle verdict computed", true);
    return rep.finish(json_only);
  }
  MoritaVerdict v = decide_morita(a.g, b.g, bound);
  rep.j["bound"] = bound;
  rep.j["verdict"] = v.outcome == MoritaOutcome::equivalent ? "equivalent"
                     : v.outcome == MoritaOutcome::not_equivalent
                         ? "not_equivalent"
                         : "inconclusive";
  rep.j["detail"] = v.detail;
  if (v.outcome == MoritaOutcome::inconclusive) {
    rep.inconclusive = true;
  } else {
    rep.add("search agrees with the oracle", v.oracle_agrees);
    if (v.outcome == MoritaOutcome::equivalent)
      rep.add("tensor-unit isomorphisms of the witness", v.unit_isos_ok);
  }
  return rep.finish(json_only);
}

int cmd_catalog(int max_objects, int max_arrows, int max_points,
                const std::string& suite, bool json_only) {
  if (suite != "full") throw ParseError("unknown suite '" + suite + "'");
  Report rep("catalog");
  rep.j["max_objects"] = max_objects;
  rep.j["max_arrows"] = max_arrows;
  rep.j["max_points"] = max_points;
  auto cat = groupoid_catalog(max_objects, max_arrows);
  rep.j["groupoids"] = cat.size();
  json entries = json::array();
  bool iqf_all = true, laws_all = true, morita_all = true, bis_all = true;
  FinGroupoid point = FinGroupoid::trivial();
  for (std::size_t gi = 0; gi < cat.size(); ++gi) {
    const FinGroupoid& g = cat[gi];
    json e;
    e["id"] = "G" + std::to_string(gi);
    e["objects"] = g.n_objects;
    e["arrows"] = g.n_arrows;
    Quantale q = quantale_of_groupoid(g);
    IqfReport iqf = validate_iqf(q);
    e["iqf_pass"] = iqf.all_pass();
    iqf_all = iqf_all && iqf.all_pass();
    auto acts = action_catalog(g, max_points);
    e["actions"] = acts.size();
    int law_fail = 0, principal = 0, biprincipal = 0;
    for (const GAction& a : acts) {
      QSheaf x = module_of_action(q, a);
      for (const IqfCheck& c : qsheaf_laws(x))
        if (!c.pass) ++law_fail;
      QRBisheaf bx = make_bisheaf(BiAction::from_left(a, point));
      PrincipalityReport r = is_biprincipal(bx);
      if (!r.remark_agree) bis_all = false;
      if (r.principal) ++principal;
      if (r.biprincipal) ++biprincipal;
    }
    e["law_failures"] = law_fail;
    laws_all = laws_all && law_fail == 0;
    e["principal_bisheaves"] = principal;
    e["biprincipal_bisheaves"] = biprincipal;
    entries.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j2 = 0; j2 < cat.size(); ++j2) {
      MoritaVerdict v = decide_morita(cat[i], cat[j2], max_arrows);
      bool conclusive = v.outcome != MoritaOutcome::inconclusive;
      bool agrees =
          conclusive &&
          (v.outcome == MoritaOutcome::equivalent) == morita_oracle(cat[i], cat[j2]);
      if (!conclusive || !agrees) morita_all = false;
    }
  rep.j["entries"] = std::move(entries);
  rep.add("quantale axiom suite over the catalog", iqf_all);
  rep.add("sheaf law suite over the catalog", laws_all);
  rep.add("principality reports internally consistent", bis_all);
  rep.add("morita search agrees with the oracle on all pairs", morita_all);
  return rep.finish(json_only);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inverse quantal frames of finite groupoids"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_only = false;
  int threads = 1;
  app.add_flag("--json-only", json_only, "suppress the stderr summary");
  app.add_option("--threads", threads,
                 "reserved; verdicts are deterministic regardless");

  std::string path1, path2, xe = "1", ye = "1";
  int bound = 8, max_objects = 3, max_arrows = 8, max_points = 3;
  bool dump = false, oracle_only = false;
  std::string suite = "full";

  auto* validate_cmd = app.add_subcommand("validate", "check groupoid axioms");
  validate_cmd->add_option("groupoid", path1)->required();
  auto* quantale_cmd = app.add_subcommand("quantale", "build O(G) and run the axiom battery");
  quantale_cmd->add_option("groupoid", path1)->required();
  quantale_cmd->add_flag("--dump", dump, "include the arrow product table");
  auto* sheaf_cmd = app.add_subcommand("sheaf", "module laws of an action");
  sheaf_cmd->add_option("groupoid", path1)->required();
  sheaf_cmd->add_option("action", path2)->required();
  auto* inner_cmd = app.add_subcommand("inner", "both inner-product formulas");
  inner_cmd->add_option("groupoid", path1)->required();
  inner_cmd->add_option("action", path2)->required();
  inner_cmd->add_option("--x", xe)->required();
  inner_cmd->add_option("--y", ye)->required();
  auto* bisheaf_cmd = app.add_subcommand("bisheaf", "principality reports");
  bisheaf_cmd->add_option("biaction", path1)->required();
  auto* hs_cmd = app.add_subcommand("hs-compose", "compose two principal bisheaves");
  hs_cmd->add_option("f", path1)->required();
  hs_cmd->add_option("g", path2)->required();
  auto* fb_cmd = app.add_subcommand("functor-bundle", "the bisheaf of a functor");
  fb_cmd->add_option("functor", path1)->required();
  auto* morita_cmd = app.add_subcommand("morita", "decide Morita equivalence");
  morita_cmd->add_option("g1", path1)->required();
  morita_cmd->add_option("g2", path2)->required();
  morita_cmd->add_option("--bound", bound);
  morita_cmd->add_flag("--oracle-only", oracle_only);
  auto* catalog_cmd = app.add_subcommand("catalog", "run every suite over the catalog");
  catalog_cmd->add_option("--max-objects", max_objects);
  catalog_cmd->add_option("--max-arrows", max_arrows);
  catalog_cmd->add_option("--max-points", max_points);
  catalog_cmd->add_option("--suite", suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  int rc = 2;
  try {
    if (*validate_cmd) rc = cmd_validate(path1, json_only);
    else if (*quantale_cmd) rc = cmd_quantale(path1, dump, json_only);
    else if (*sheaf_cmd) rc = cmd_sheaf(path1, path2, json_only);
    else if (*inner_cmd) rc = cmd_inner(path1, path2, xe, ye, json_only);
    else if (*bisheaf_cmd) rc = cmd_bisheaf(path1, json_only);
    else if (*hs_cmd) rc = cmd_hs_compose(path1, path2, json_only);
    else if (*fb_cmd) rc = cmd_functor_bundle(path1, json_only);
    else if (*morita_cmd) rc = cmd_morita(path1, path2, bound, oracle_only, json_only);
    else if (*catalog_cmd)
      rc = cmd_catalog(max_objects, max_arrows, max_points, suite, json_only);
  } catch (const ParseError& e) {
    json err;
    err["error"] = e.what();
    std::cout << err.dump(2) << "\n";
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    std::cout << err.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (!json_only) {
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    std::cerr << "elapsed: " << dt.count() << "s\n";
  }
  return rc;
}
