#include <algorithm>
#include <sstream>

#include "ginf/error.hpp"
#include "ginf/graph_product.hpp"
#include "ginf/inference.hpp"
#include "ginf/labeled_graph.hpp"

namespace ginf {

std::string_view to_string(Role r) {
  switch (r) {
  case Role::Self: return "self";
  case Role::A: return "A";
  case Role::B: return "B";
  case Role::C: return "C";
  case Role::Base: return "base";
  case Role::Assoc: return "assoc";
  case Role::Kernel: return "kernel";
  case Role::Quotient: return "quotient";
  case Role::Ambient: return "ambient";
  case Role::Subgroup: return "subgroup";
  case Role::First: return "first";
  case Role::Second: return "second";
  case Role::EachPart: return "each part";
  case Role::AnyPart: return "some part";
  }
  return "?";
}

std::string to_string(const FactRef &f) {
  return std::string(f.polarity == Polarity::Fails ? "not " : "") + to_string(f.atom) + "(" +
         f.group + ")";
}

namespace {

constexpr Polarity kHolds = Polarity::Holds;
constexpr Polarity kFails = Polarity::Fails;

Atom atom(AtomKind k) { return Atom::of(k); }
Atom ends(EndCount e) { return Atom::ends_atom(e); }

std::optional<std::string> resolve(const GroupExpr &e, Role r) {
  if (auto *a = std::get_if<expr::Amalgam>(&e)) {
    if (r == Role::A) return a->a;
    if (r == Role::B) return a->b;
    if (r == Role::C) return a->c;
  } else if (auto *h = std::get_if<expr::Hnn>(&e)) {
    if (r == Role::Base) return h->base;
    if (r == Role::Assoc) return h->assoc;
  } else if (auto *x = std::get_if<expr::Extension>(&e)) {
    if (r == Role::Kernel) return x->kernel;
    if (r == Role::Quotient) return x->quotient;
  } else if (auto *p = std::get_if<expr::CommensuratedPair>(&e)) {
    if (r == Role::Ambient) return p->ambient;
    if (r == Role::Subgroup) return p->subgroup;
  } else if (auto *d = std::get_if<expr::DirectProduct>(&e)) {
    if (d->parts.size() == 2 && r == Role::First) return d->parts[0];
    if (d->parts.size() == 2 && r == Role::Second) return d->parts[1];
  }
  return std::nullopt;
}

std::vector<std::string> parts_of(const GroupExpr &e) {
  if (auto *d = std::get_if<expr::DirectProduct>(&e))
    return d->parts;
  if (auto *g = std::get_if<expr::GraphProduct>(&e))
    return g->vertex_groups;
  return {};
}

bool flag_set(const GroupExpr &e, std::string_view f) {
  if (auto *a = std::get_if<expr::Amalgam>(&e))
    return (f == "edge_finite" && a->edge_finite) ||
           (f == "c_index_finite_in_both" && a->c_index_finite_in_both) ||
           (f == "reduced" && a->reduced);
  if (auto *h = std::get_if<expr::Hnn>(&e))
    return (f == "ascending" && h->ascending) ||
           (f == "finite_index_image" && h->finite_index_image);
  if (auto *p = std::get_if<expr::CommensuratedPair>(&e))
    return (f == "infinite_index" && p->infinite_index) || (f == "normal" && p->normal) ||
           (f == "subnormal" && p->subnormal) ||
           (f == "subcommensurated" && p->subcommensurated);
  return false;
}

std::string polarized(const Atom &a, Polarity p) {
  return (p == kFails ? "not " : "") + to_string(a);
}

std::string describe_pattern(const Rule &r) {
  std::ostringstream os;
  os << (r.constructor.empty() ? "any" : r.constructor);
  for (const auto &f : r.flags)
    os << "[" << f << "]";
  os << ": ";
  for (std::size_t i = 0; i < r.premises.size(); ++i) {
    const auto &p = r.premises[i];
    os << (i ? ", " : "") << to_string(p.role) << ":" << polarized(p.atom, p.polarity);
  }
  os << " => ";
  for (std::size_t i = 0; i < r.conclusions.size(); ++i)
    os << (i ? ", " : "") << polarized(r.conclusions[i].atom, r.conclusions[i].polarity);
  return os.str();
}

/// Matcher for a purely declarative rule: every premise is looked up on the
/// role it names; all conclusions land on the target.
Matcher pattern_matcher(std::string ctor, std::vector<std::string> flags,
                        std::vector<Premise> premises, std::vector<Conclusion> conclusions) {
  return [=](const GroupRegistry &reg, const FactView &facts,
             const std::string &group) -> std::vector<Firing> {
    const GroupExpr &e = reg.expr(group);
    if (!ctor.empty() && constructor_name(e) != ctor)
      return {};
    for (const auto &f : flags)
      if (!flag_set(e, f))
        return {};
    Firing out;
    for (const auto &p : premises) {
      if (p.role == Role::EachPart || p.role == Role::AnyPart) {
        auto parts = parts_of(e);
        if (parts.empty())
          return {};
        bool any = false;
        for (const auto &part : parts) {
          bool ok = facts.lookup(part, p.atom) == p.polarity;
          if (p.role == Role::EachPart) {
            if (!ok)
              return {};
            out.premises.push_back({part, p.atom, p.polarity});
          } else if (ok) {
            out.premises.push_back({part, p.atom, p.polarity});
            any = true;
            break;
          }
        }
        if (p.role == Role::AnyPart && !any)
          return {};
        continue;
      }
      std::string target = group;
      if (p.role != Role::Self) {
        auto r = resolve(e, p.role);
        if (!r)
          return {};
        target = *r;
      }
      if (facts.lookup(target, p.atom) != p.polarity)
        return {};
      out.premises.push_back({target, p.atom, p.polarity});
    }
    // Parts listed twice (e.g. amalgam(F, F, C)) would duplicate premises.
    std::vector<FactRef> unique;
    for (auto &f : out.premises)
      if (std::find(unique.begin(), unique.end(), f) == unique.end())
        unique.push_back(f);
    out.premises = std::move(unique);
    for (const auto &c : conclusions)
      out.conclusions.push_back({group, c.atom, c.polarity});
    return {out};
  };
}

Rule make_rule(std::string name, std::string ctor, std::vector<std::string> flags,
               std::vector<Premise> premises, std::vector<Conclusion> conclusions,
               std::optional<Citation> citation) {
  Rule r;
  r.name = std::move(name);
  r.constructor = std::move(ctor);
  r.flags = std::move(flags);
  r.premises = std::move(premises);
  r.conclusions = std::move(conclusions);
  r.citation = std::move(citation);
  r.pattern = describe_pattern(r);
  r.match = pattern_matcher(r.constructor, r.flags, r.premises, r.conclusions);
  return r;
}

// ---- graph-product deciders ------------------------------------------------

using ProfileBuild = GraphProductProfiles;

ProfileBuild build_profiles(const GroupRegistry &reg, const FactView &facts,
                            const expr::GraphProduct &gp, bool need_orders) {
  ProfileBuild out;
  GraphProductSpec spec;
  spec.graph = gp.graph;
  auto note = [&](const std::string &g, const Atom &a) {
    auto p = facts.lookup(g, a);
    if (p)
      out.used.push_back({g, a, *p});
    return p;
  };
  for (const auto &g : gp.vertex_groups) {
    VertexProfile prof;
    if (note(g, atom(AtomKind::Finite)) == kHolds) {
      prof.finite = true;
      if (auto *f = std::get_if<expr::Finite>(&reg.expr(g)))
        prof.order = BigInt(f->order);
      if (need_orders && (!prof.order || *prof.order < 2))
        return {};
      prof.ends = EndCount::Zero;
    } else if (note(g, atom(AtomKind::Infinite)) == kHolds) {
      prof.finite = false;
      for (auto e : kAllEndCounts)
        if (e != EndCount::Zero && note(g, ends(e)) == kHolds)
          prof.ends = e;
    }
    auto ss = note(g, atom(AtomKind::Semistable));
    prof.semistable = !ss ? Tri::Unknown : *ss == kHolds ? Tri::Yes : Tri::No;
    auto fp = note(g, atom(AtomKind::FP));
    prof.finitely_presented = !fp ? Tri::Unknown : *fp == kHolds ? Tri::Yes : Tri::No;
    spec.profiles.push_back(prof);
  }
  out.spec = std::move(spec);
  return out;
}

const Citation kOV{"OV", R"($G$ visually splits over a finite group)"};
const Citation kOV2{"OV2", R"(The graph product $G_\Gamma$ is 2-ended if and only if either)"};
const Citation kGraphP{
    "GraphP",
    R"(Then $G$ does not have semistable fundamental group at $\infty$ if and only if there is a vertex $v$ of $\Lambda$ such that)"};

Rule graph_product_ends_rule(std::string name, Citation citation, bool two_ended) {
  Rule r;
  r.name = std::move(name);
  r.constructor = "graph_product";
  r.premises = {{Role::EachPart, atom(AtomKind::FG), kHolds}};
  r.conclusions = two_ended ? std::vector<Conclusion>{{ends(EndCount::Two), kHolds}}
                            : std::vector<Conclusion>{{ends(EndCount::Zero), kHolds},
                                                      {ends(EndCount::One), kHolds},
                                                      {ends(EndCount::Infinite), kHolds}};
  r.citation = std::move(citation);
  r.pattern = std::string("graph_product: each vertex group finitely generated with known "
                          "finiteness and ends => ") +
              (two_ended ? "Ends(Two)" : "Ends(Zero|One|Infinite) from the visual splitting test");
  r.match = [two_ended](const GroupRegistry &reg, const FactView &facts,
                        const std::string &group) -> std::vector<Firing> {
    const auto *gp = std::get_if<expr::GraphProduct>(&reg.expr(group));
    if (!gp)
      return {};
    Firing f;
    for (const auto &g : gp->vertex_groups) {
      if (!facts.holds(g, atom(AtomKind::FG)))
        return {};
      FactRef fg{g, atom(AtomKind::FG), kHolds};
      if (std::find(f.premises.begin(), f.premises.end(), fg) == f.premises.end())
        f.premises.push_back(fg);
    }
    auto built = build_profiles(reg, facts, *gp, true);
    if (!built.spec)
      return {};
    GraphProductEnds result;
    try {
      result = graph_product_ends(*built.spec);
    } catch (const InputError &) {
      return {};
    }
    if ((result.ends == EndCount::Two) != two_ended)
      return {};
    for (auto &u : built.used)
      if (std::find(f.premises.begin(), f.premises.end(), u) == f.premises.end())
        f.premises.push_back(u);
    f.conclusions.push_back({group, ends(result.ends), kHolds});
    return {f};
  };
  return r;
}

Rule graph_product_semistability_rule() {
  Rule r;
  r.name = "R-GP-SS";
  r.constructor = "graph_product";
  r.premises = {{Role::EachPart, atom(AtomKind::FP), kHolds}};
  r.conclusions = {{atom(AtomKind::Semistable), kHolds}, {atom(AtomKind::Semistable), kFails}};
  r.citation = kGraphP;
  r.pattern = "graph_product on a connected graph: each vertex group finitely presented => "
              "Semistable, or not Semistable when a non-semistable vertex has a complete "
              "link of finite groups";
  r.match = [](const GroupRegistry &reg, const FactView &facts,
               const std::string &group) -> std::vector<Firing> {
    const auto *gp = std::get_if<expr::GraphProduct>(&reg.expr(group));
    if (!gp || gp->graph.empty() || !is_connected(gp->graph))
      return {};
    auto built = build_profiles(reg, facts, *gp, false);
    if (!built.spec)
      return {};
    GraphProductSemistability v;
    try {
      v = graph_product_semistable(*built.spec);
    } catch (const InputError &) {
      return {};
    }
    if (v.verdict == GraphProductSemistability::Verdict::Unknown)
      return {};
    Firing f;
    for (auto &u : built.used)
      if (std::find(f.premises.begin(), f.premises.end(), u) == f.premises.end())
        f.premises.push_back(u);
    f.conclusions.push_back(
        {group, atom(AtomKind::Semistable),
         v.verdict == GraphProductSemistability::Verdict::Semistable ? kHolds : kFails});
    return {f};
  };
  return r;
}

/// A commensurated pair names its ambient group together with a subgroup;
/// whatever is established about the pair holds for the ambient group.
Rule pair_to_ambient_rule() {
  Rule r;
  r.name = "P-PAIR-TO-AMBIENT";
  r.constructor = "commensurated";
  r.premises = {{Role::Self, atom(AtomKind::Semistable), kHolds}};
  r.conclusions = {{atom(AtomKind::Semistable), kHolds}};
  r.pattern = "commensurated: any fact of the pair => the same fact of the ambient group";
  r.match = [](const GroupRegistry &reg, const FactView &facts,
               const std::string &group) -> std::vector<Firing> {
    const auto *p = std::get_if<expr::CommensuratedPair>(&reg.expr(group));
    if (!p)
      return {};
    std::vector<Firing> out;
    for (const auto &a : all_atoms()) {
      auto pol = facts.lookup(group, a);
      if (pol)
        out.push_back({{{group, a, *pol}}, {{p->ambient, a, *pol}}});
    }
    return out;
  };
  return r;
}

std::vector<Rule> build_table() {
  using R = Role;
  using K = AtomKind;
  const Atom FG = atom(K::FG), FP = atom(K::FP), Inf = atom(K::Infinite), Fin = atom(K::Finite),
             SS = atom(K::Semistable), SC = atom(K::SCInf), E0 = ends(EndCount::Zero),
             E1 = ends(EndCount::One), EInf = ends(EndCount::Infinite),
             H2F = atom(K::H2FreeAbelian), H2T = atom(K::H2Trivial), H2N = atom(K::H2Nontrivial),
             H1 = atom(K::H1EpsSemistable), RP = atom(K::RecursivelyPresented);
  auto P = [](R r, Atom a, Polarity p = Polarity::Holds) { return Premise{r, a, p}; };
  auto C = [](Atom a, Polarity p = Polarity::Holds) { return Conclusion{a, p}; };

  const Citation stall{"Stall", R"(splits as a non-trivial amalgamated product $A\ast_CB$)"};
  const Citation m1{
      "M1",
      R"(infinite, finitely generated, normal subgroup of infinite index in the finitely presented group $G$, then $G$ is semistable)"};
  const Citation jackson{"J",
                         R"(either $H$ or $G/H$ is 1-ended. Then $G$ is simply connected at $\infty$)"};
  const Citation comm{"MainCM", R"(infinite, finitely generated, commensurated subgroup $Q$)"};
  const Citation comm_sc{
      "MainCM",
      R"(if $G$ and $Q$ are finitely presented and either $Q$ is 1-ended or the pair $(G,Q)$ has one filtered end, then $G$ is simply connected at $\infty$)"};
  const Citation subnorm{"L", R"(subnormal subgroup of the finitely generated group)"};
  const Citation subcomm{"MainA", R"($H$ is subcommensurated in $G$)"};
  const Citation subcomm_sc{
      "MainA",
      R"(If additionally, $H$ is 1-ended and finitely presented and $G$ is finitely generated and recursively presented then $G$ is simply connected at $\infty$.)"};
  const Citation ahnn{
      "MM",
      R"($G=H\ast_\phi$ is the resulting ascending HNN extension. Then $G$ is 1-ended and semistable)"};
  const Citation ahnn_sc{"MM", R"(If additionally, $H$ is 1-ended, then $G$ is simply connected at $\infty$.)"};
  const Citation hnn_fi{"MMFIE", R"($H_1$ is a subgroup of finite index in $H_0$)"};
  const Citation hnn_sc{
      "hnn",
      R"(Suppose $H$ is an ascending HNN extension of a 1-ended, finitely generated, semistable at $\infty$, and simply connected at $\infty$ group $G$. Then $H$ is simply connected at $\infty$.)"};
  const Citation gog_ss{
      "MTComb",
      R"(finite graph of groups where each vertex group is finitely presented with semistable fundamental group)"};
  const Citation gog_fin{"Fsplit",
                         R"(each edge group is finite and each vertex group is finitely presented)"};
  const Citation gog_dec{"SSDecomp", R"(each edge group is infinite and finitely generated)"};
  const Citation fi_amalg{"FIss", R"($C$ has finite index in $A$ and $B$)"};
  const Citation fi_amalg_sc{
      "FIss", R"(If additionally, $C$ is finitely presented and 1-ended, then $G$ is simply connected at $\infty$.)"};
  const Citation one_rel{"OneR", R"(All 1-relator groups are semistable at $\infty$)"};
  const Citation hyp{"WHss", R"(All word hyperbolic groups are semistable at $\infty$)"};
  const Citation metanil{"metanil",
                         R"(All finitely presented virtually metanilpotent groups are semistable at $\infty$)"};
  const Citation nof2{
      "NOF2",
      R"(does not contain a free subgroup of rank 2, and suppose $\mathbb Z\oplus \mathbb Z$ is a quotient)"};
  const Citation relhyp{"HMSSMain",
                        R"(If each $P_i$ has semistable fundamental group at $\infty$ then $G$ has semistable)"};
  const Citation combe{"combE",
                       R"($A\cup B$ generates $G$ and $A\cap B$ is infinite. Then $G$ is 1 or 2-ended)"};
  const Citation mcomb{
      "MComb",
      R"(If the set $A\cup B$ generates $G$ and the group $A\cap B$ contains a finitely generated infinite subgroup then $G$ has semistable fundamental group at $\infty$.)"};
  const Citation gm2{
      "GM2",
      R"($H^2(G,\mathbb ZG)$ is free abelian if and only if $ H_1(\varepsilon\tilde X^2)$ is semistable)"};
  const Citation reduction{"Reduction", R"(isomorphic to the direct sum $\oplus_{i=1}^nA_i$)"};
  const Citation jhom{"JHom", R"(Then $H^2(G, \mathbb ZG)$ is non-trivial)"};
  const Citation sc2ss{"SCtoSS",
                       R"(If $X$ is simply connected at $\infty$ then $X$ is semistable at $\infty$)"};
  const Citation bowditch{
      "stablepro",
      R"(either $G$ is simply connected at $\infty$ or $G$ is virtually a closed surface group)"};
  const Citation scfree{
      "free",
      R"(Every finitely generated infinite ended group contains a free group on 2-generators)"};
  const Citation scfree_solv{"free", R"(So every solvable group is either finite, 1-ended or 2-ended.)"};
  const Citation sc_product{
      "sc",
      R"(isomorphic to $A\times B$ where $A$ and $B$ are finitely generated infinite groups and $A$ is 1-ended. Then $G$ is simply connected at $\infty$.)"};

  std::vector<Rule> t;
  auto add = [&](std::string name, std::string ctor, std::vector<std::string> flags,
                 std::vector<Premise> prem, std::vector<Conclusion> concl,
                 std::optional<Citation> cite) {
    t.push_back(make_rule(std::move(name), std::move(ctor), std::move(flags), std::move(prem),
                          std::move(concl), std::move(cite)));
  };

  // Splittings over finite groups.
  add("R-STALLINGS", "amalgam", {"edge_finite", "reduced"}, {P(R::A, FG), P(R::B, FG)},
      {C(Inf), C(E0, kFails), C(E1, kFails)}, stall);
  add("R-STALLINGS-HNN", "hnn", {}, {P(R::Base, FG), P(R::Assoc, Fin)},
      {C(Inf), C(E0, kFails), C(E1, kFails)}, stall);

  // Normal, subnormal and commensurated subgroups.
  add("R-M1", "extension", {}, {P(R::Kernel, Inf), P(R::Kernel, FG), P(R::Quotient, Inf), P(R::Self, FP)},
      {C(SS)}, m1);
  add("R-M1-PAIR", "commensurated", {"normal", "infinite_index"},
      {P(R::Subgroup, Inf), P(R::Subgroup, FG), P(R::Ambient, FP)}, {C(SS)}, m1);
  add("R-JACKSON", "extension", {},
      {P(R::Kernel, Inf), P(R::Kernel, FP), P(R::Kernel, E1), P(R::Quotient, Inf), P(R::Self, FP)},
      {C(SC)}, jackson);
  add("R-JACKSON-QUOTIENT", "extension", {},
      {P(R::Kernel, Inf), P(R::Kernel, FP), P(R::Quotient, E1), P(R::Self, FP)}, {C(SC)}, jackson);
  add("R-COMM", "commensurated", {"infinite_index"},
      {P(R::Subgroup, Inf), P(R::Subgroup, FG), P(R::Ambient, FG)}, {C(E1), C(SS)}, comm);
  add("R-COMM-SC", "commensurated", {"infinite_index"},
      {P(R::Subgroup, Inf), P(R::Subgroup, FP), P(R::Subgroup, E1), P(R::Ambient, FP)}, {C(SC)},
      comm_sc);
  add("R-SUBNORM", "commensurated", {"subnormal", "infinite_index"},
      {P(R::Subgroup, Inf), P(R::Subgroup, FG), P(R::Ambient, FG)}, {C(E1), C(SS)}, subnorm);
  add("R-SUBNORM-EXT", "extension", {},
      {P(R::Kernel, Inf), P(R::Kernel, FG), P(R::Quotient, Inf), P(R::Self, FG)}, {C(E1), C(SS)},
      subnorm);
  add("R-SUBCOMM", "commensurated", {"subcommensurated", "infinite_index"},
      {P(R::Subgroup, Inf), P(R::Subgroup, FG), P(R::Ambient, FG)}, {C(E1), C(SS)}, subcomm);
  add("R-SUBCOMM-SC", "commensurated", {"subcommensurated", "infinite_index"},
      {P(R::Subgroup, Inf), P(R::Subgroup, FP), P(R::Subgroup, E1), P(R::Ambient, FG),
       P(R::Ambient, RP)},
      {C(SC)}, subcomm_sc);

  // HNN extensions.
  add("R-AHNN", "hnn", {"ascending"}, {P(R::Base, Inf), P(R::Base, FP)}, {C(E1), C(SS)}, ahnn);
  add("R-AHNN-SC", "hnn", {"ascending"}, {P(R::Base, Inf), P(R::Base, FP), P(R::Base, E1)},
      {C(SC)}, ahnn_sc);
  add("R-AHNN-SC-FG", "hnn", {"ascending"},
      {P(R::Base, E1), P(R::Base, FG), P(R::Base, SS), P(R::Base, SC)}, {C(SC)}, hnn_sc);
  add("R-HNN-FI", "hnn", {"finite_index_image"}, {P(R::Base, Inf), P(R::Base, FG)}, {C(E1)},
      hnn_fi);

  // Graphs of groups.
  add("R-FI-AMALG", "amalgam", {"c_index_finite_in_both"},
      {P(R::A, FG), P(R::A, Inf), P(R::B, FG)}, {C(E1), C(SS)}, fi_amalg);
  add("R-FI-AMALG-SC", "amalgam", {"c_index_finite_in_both"},
      {P(R::A, FG), P(R::B, FG), P(R::C, FP), P(R::C, E1)}, {C(SC)}, fi_amalg_sc);
  add("R-GOG-SS", "amalgam", {},
      {P(R::A, FP), P(R::A, SS), P(R::B, FP), P(R::B, SS), P(R::C, FG)}, {C(SS)}, gog_ss);
  add("R-GOG-SS-HNN", "hnn", {}, {P(R::Base, FP), P(R::Base, SS), P(R::Assoc, FG)}, {C(SS)},
      gog_ss);
  add("R-GOG-FIN", "amalgam", {"edge_finite"}, {P(R::A, FP), P(R::B, FP), P(R::A, SS, kFails)},
      {C(SS, kFails)}, gog_fin);
  add("R-GOG-FIN-B", "amalgam", {"edge_finite"}, {P(R::A, FP), P(R::B, FP), P(R::B, SS, kFails)},
      {C(SS, kFails)}, gog_fin);
  add("R-GOG-FIN-HNN", "hnn", {}, {P(R::Base, FP), P(R::Assoc, Fin), P(R::Base, SS, kFails)},
      {C(SS, kFails)}, gog_fin);
  add("R-GOG-DEC", "amalgam", {"reduced"},
      {P(R::C, Inf), P(R::C, FG), P(R::A, FP), P(R::A, E1), P(R::A, SS), P(R::B, FP), P(R::B, E1),
       P(R::B, SS)},
      {C(E1), C(SS)}, gog_dec);
  add("R-COMBE", "amalgam", {},
      {P(R::A, FG), P(R::A, E0, kFails), P(R::A, EInf, kFails), P(R::B, FG), P(R::B, E0, kFails),
       P(R::B, EInf, kFails), P(R::C, Inf)},
      {C(E0, kFails), C(EInf, kFails)}, combe);
  add("R-MCOMB", "amalgam", {},
      {P(R::A, FG), P(R::A, E0, kFails), P(R::A, EInf, kFails), P(R::A, SS), P(R::B, FG),
       P(R::B, E0, kFails), P(R::B, EInf, kFails), P(R::B, SS), P(R::C, Inf), P(R::C, FG)},
      {C(SS)}, mcomb);

  // Classes of groups.
  add("R-1REL", "", {}, {P(R::Self, atom(K::OneRelator))}, {C(SS)}, one_rel);
  add("R-HYP", "", {}, {P(R::Self, atom(K::WordHyperbolic))}, {C(SS)}, hyp);
  add("R-METANIL", "", {}, {P(R::Self, FP), P(R::Self, atom(K::VirtuallyMetanilpotent))}, {C(SS)},
      metanil);
  add("R-NOF2", "", {},
      {P(R::Self, FP), P(R::Self, atom(K::NoF2Subgroup)), P(R::Self, atom(K::HasZxZQuotient))},
      {C(E1), C(SS)}, nof2);
  add("R-RELHYP", "", {}, {P(R::Self, FP), P(R::Self, atom(K::RelHypWithSemistablePeripherals))},
      {C(SS)}, relhyp);
  add("R-SCFREE", "", {}, {P(R::Self, FG), P(R::Self, atom(K::NoF2Subgroup))}, {C(EInf, kFails)},
      scfree);
  add("R-SCFREE-CONTRA", "", {}, {P(R::Self, FG), P(R::Self, EInf)},
      {C(atom(K::NoF2Subgroup), kFails), C(atom(K::Solvable), kFails)}, scfree);
  add("R-SCFREE-SOLV", "", {}, {P(R::Self, FG), P(R::Self, atom(K::Solvable))}, {C(EInf, kFails)},
      scfree_solv);
  add("R-SC-PRODUCT", "direct_product", {},
      {P(R::First, FG), P(R::First, Inf), P(R::First, E1), P(R::Second, FG), P(R::Second, Inf),
       P(R::Self, RP)},
      {C(SC)}, sc_product);
  add("R-SC-PRODUCT-2", "direct_product", {},
      {P(R::First, FG), P(R::First, Inf), P(R::Second, FG), P(R::Second, Inf), P(R::Second, E1),
       P(R::Self, RP)},
      {C(SC)}, sc_product);

  // Simple connectivity, pro-groups and cohomology.
  add("R-SC2SS", "", {}, {P(R::Self, SC)}, {C(SS)}, sc2ss);
  add("R-BOWDITCH", "", {},
      {P(R::Self, FP), P(R::Self, atom(K::ProGroupStable)), P(R::Self, H2T)}, {C(SC)}, bowditch);
  add("R-GM2", "", {}, {P(R::Self, FP), P(R::Self, SS)}, {C(H1), C(H2F)}, gm2);
  add("R-GM2-H1", "", {}, {P(R::Self, FP), P(R::Self, H1)}, {C(H2F)}, gm2);
  add("R-GM2-CONVERSE", "", {}, {P(R::Self, FP), P(R::Self, H2F)}, {C(H1)}, gm2);
  add("R-GM2-NEG", "", {}, {P(R::Self, FP), P(R::Self, H2F, kFails)},
      {C(H1, kFails), C(SS, kFails)}, gm2);
  add("R-GM2-NEG-H1", "", {}, {P(R::Self, FP), P(R::Self, H1, kFails)}, {C(H2F, kFails)}, gm2);
  add("R-H2RED-FINITE", "", {}, {P(R::Self, FP), P(R::Self, Fin)}, {C(H2T)}, reduction);
  add("R-H2RED-TRIVIAL", "amalgam", {"edge_finite"},
      {P(R::Self, FP), P(R::A, H2T), P(R::B, H2T)}, {C(H2T)}, reduction);
  add("R-H2RED-FREE", "amalgam", {"edge_finite"},
      {P(R::Self, FP), P(R::A, H2F), P(R::B, H2F)}, {C(H2F)}, reduction);
  add("R-H2RED-NONTRIVIAL", "amalgam", {"edge_finite"},
      {P(R::Self, FP), P(R::A, Inf), P(R::A, H2N)}, {C(H2N)}, reduction);
  add("R-H2RED-NONTRIVIAL-B", "amalgam", {"edge_finite"},
      {P(R::Self, FP), P(R::B, Inf), P(R::B, H2N)}, {C(H2N)}, reduction);
  add("R-JHOM", "amalgam", {},
      {P(R::A, FP), P(R::A, E1), P(R::B, FP), P(R::B, E1), P(R::C, FG), P(R::C, E0, kFails),
       P(R::C, E1, kFails)},
      {C(H2N)}, jhom);
  add("R-JHOM-HNN", "hnn", {},
      {P(R::Base, FP), P(R::Base, E1), P(R::Assoc, FG), P(R::Assoc, E0, kFails),
       P(R::Assoc, E1, kFails)},
      {C(H2N)}, jhom);

  // Graph products.
  t.push_back(graph_product_ends_rule("R-GP-ENDS", kOV, false));
  t.push_back(graph_product_ends_rule("R-GP-2ENDS", kOV2, true));
  t.push_back(graph_product_semistability_rule());

  // Plumbing: the vocabulary's own bookkeeping.
  add("P-FINITE", "", {}, {P(R::Self, Fin)}, {C(Inf, kFails), C(E0), C(FG), C(FP)}, std::nullopt);
  add("P-NOT-FINITE", "", {}, {P(R::Self, Fin, kFails)}, {C(Inf)}, std::nullopt);
  add("P-INFINITE", "", {}, {P(R::Self, Inf)}, {C(Fin, kFails), C(E0, kFails)}, std::nullopt);
  add("P-NOT-INFINITE", "", {}, {P(R::Self, Inf, kFails)}, {C(Fin)}, std::nullopt);
  for (auto e : kAllEndCounts) {
    std::vector<Conclusion> others;
    for (auto o : kAllEndCounts)
      if (o != e)
        others.push_back(C(ends(o), kFails));
    if (e == EndCount::Zero)
      others.push_back(C(Fin));
    else
      others.push_back(C(Inf));
    add("P-ENDS-" + std::string(to_string(e)), "", {}, {P(R::Self, ends(e))}, others,
        std::nullopt);
  }
  add("P-FP", "", {}, {P(R::Self, FP)}, {C(FG), C(RP)}, std::nullopt);
  add("P-NOT-FG", "", {}, {P(R::Self, FG, kFails)}, {C(FP, kFails)}, std::nullopt);
  add("P-ONE-RELATOR", "", {}, {P(R::Self, atom(K::OneRelator))}, {C(FP)}, std::nullopt);
  add("P-SOLVABLE", "", {}, {P(R::Self, atom(K::Solvable))}, {C(atom(K::NoF2Subgroup))},
      std::nullopt);
  add("P-H2-TRIVIAL", "", {}, {P(R::Self, H2T)}, {C(H2N, kFails), C(H2F)}, std::nullopt);
  add("P-H2-NOT-TRIVIAL", "", {}, {P(R::Self, H2T, kFails)}, {C(H2N)}, std::nullopt);
  add("P-H2-NONTRIVIAL", "", {}, {P(R::Self, H2N)}, {C(H2T, kFails)}, std::nullopt);
  add("P-H2-NOT-NONTRIVIAL", "", {}, {P(R::Self, H2N, kFails)}, {C(H2T)}, std::nullopt);
  add("P-H2-NOT-FREE", "", {}, {P(R::Self, H2F, kFails)}, {C(H2T, kFails)}, std::nullopt);
  add("P-SC-STABLE", "", {}, {P(R::Self, SC)}, {C(atom(K::ProGroupStable))}, std::nullopt);

  // Plumbing: closure properties of the constructors.
  add("P-AMALGAM-FG", "amalgam", {}, {P(R::A, FG), P(R::B, FG)}, {C(FG)}, std::nullopt);
  add("P-AMALGAM-FP", "amalgam", {}, {P(R::A, FP), P(R::B, FP), P(R::C, FG)}, {C(FP)},
      std::nullopt);
  add("P-AMALGAM-INFINITE", "amalgam", {}, {P(R::A, Inf)}, {C(Inf)}, std::nullopt);
  add("P-AMALGAM-INFINITE-B", "amalgam", {}, {P(R::B, Inf)}, {C(Inf)}, std::nullopt);
  add("P-HNN-FG", "hnn", {}, {P(R::Base, FG)}, {C(FG)}, std::nullopt);
  add("P-HNN-FP", "hnn", {}, {P(R::Base, FP), P(R::Assoc, FG)}, {C(FP)}, std::nullopt);
  add("P-EXTENSION-FG", "extension", {}, {P(R::Kernel, FG), P(R::Quotient, FG)}, {C(FG)},
      std::nullopt);
  add("P-EXTENSION-FP", "extension", {}, {P(R::Kernel, FP), P(R::Quotient, FP)}, {C(FP)},
      std::nullopt);
  add("P-EXTENSION-INFINITE", "extension", {}, {P(R::Kernel, Inf)}, {C(Inf)}, std::nullopt);
  add("P-EXTENSION-INFINITE-Q", "extension", {}, {P(R::Quotient, Inf)}, {C(Inf)}, std::nullopt);
  add("P-EXTENSION-FINITE", "extension", {}, {P(R::Kernel, Fin), P(R::Quotient, Fin)}, {C(Fin)},
      std::nullopt);
  add("P-PRODUCT-FG", "direct_product", {}, {P(R::EachPart, FG)}, {C(FG)}, std::nullopt);
  add("P-PRODUCT-FP", "direct_product", {}, {P(R::EachPart, FP)}, {C(FP)}, std::nullopt);
  add("P-PRODUCT-INFINITE", "direct_product", {}, {P(R::AnyPart, Inf)}, {C(Inf)}, std::nullopt);
  add("P-PRODUCT-FINITE", "direct_product", {}, {P(R::EachPart, Fin)}, {C(Fin)}, std::nullopt);
  add("P-GP-FG", "graph_product", {}, {P(R::EachPart, FG)}, {C(FG)}, std::nullopt);
  add("P-GP-FP", "graph_product", {}, {P(R::EachPart, FP)}, {C(FP)}, std::nullopt);
  add("P-GP-INFINITE", "graph_product", {}, {P(R::AnyPart, Inf)}, {C(Inf)}, std::nullopt);
  add("P-SUBGROUP-INFINITE", "commensurated", {}, {P(R::Subgroup, Inf)}, {C(Inf)}, std::nullopt);
  t.push_back(pair_to_ambient_rule());
  return t;
}

} // namespace

const std::vector<Rule> &builtin_rules() {
  static const std::vector<Rule> table = build_table();
  return table;
}

GraphProductProfiles graph_product_profiles(const GroupRegistry &registry, const FactView &facts,
                                            const std::string &group, bool need_orders) {
  const auto *gp = std::get_if<expr::GraphProduct>(&registry.expr(group));
  if (!gp)
    return {};
  return build_profiles(registry, facts, *gp, need_orders);
}

const Rule *find_rule(std::string_view name) {
  for (const auto &r : builtin_rules())
    if (r.name == name)
      return &r;
  return nullptr;
}

} // namespace ginf
