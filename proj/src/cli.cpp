#include "ginf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "ginf/coxeter.hpp"
#include "ginf/dot.hpp"
#include "ginf/error.hpp"
#include "ginf/graph_product.hpp"
#include "ginf/group_registry.hpp"
#include "ginf/inference.hpp"
#include "ginf/pro_sequence.hpp"

namespace ginf::cli {

using nlohmann::json;

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i)
    os << std::setw(2) << static_cast<int>(digest[i]);
  return os.str();
}

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw InputError("cannot write '" + path + "'");
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

std::size_t parse_count(const std::string &text, const std::string &what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) {
        return c >= '0' && c <= '9';
      }))
    throw InputError("expected a non-negative integer for " + what + ", got '" + text + "'");
  try {
    return std::stoul(text);
  } catch (const std::exception &) {
    throw InputError(what + " is out of range: " + text);
  }
}

std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(')
      ++depth;
    if (c == ')')
      --depth;
    if (depth < 0)
      throw InputError("unbalanced parentheses in oracle spec");
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0)
    throw InputError("unbalanced parentheses in oracle spec");
  out.push_back(trim(cur));
  return out;
}

std::pair<GroupRegistry, std::string> load_group(const std::string &ref) {
  auto hash = ref.rfind('#');
  if (hash == std::string::npos)
    throw InputError("expected <file>#<group>, got '" + ref + "'");
  auto reg = parse_document(read_file(ref.substr(0, hash)));
  std::string group = ref.substr(hash + 1);
  if (!reg.contains(group))
    throw DanglingReference(group);
  return {std::move(reg), group};
}

} // namespace

OraclePtr parse_oracle_spec(std::string_view spec_text, const Budgets &budgets) {
  const std::string spec = trim(spec_text);
  for (auto [prefix, kind] : {std::pair{"direct(", CompositionKind::DirectProduct},
                              std::pair{"freeprod(", CompositionKind::FreeProduct}}) {
    const std::string p = prefix;
    if (spec.rfind(p, 0) == 0) {
      if (spec.back() != ')')
        throw InputError("missing ')' in oracle spec '" + spec + "'");
      std::vector<OraclePtr> parts;
      for (const auto &part :
           split_top_level(std::string_view(spec).substr(p.size(), spec.size() - p.size() - 1)))
        parts.push_back(parse_oracle_spec(part, budgets));
      return compose_oracles(kind, std::move(parts));
    }
  }
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw InputError("unrecognized oracle spec '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "z")
    return free_abelian_oracle(parse_count(arg, "rank"));
  if (kind == "free")
    return free_oracle(parse_count(arg, "rank"));
  if (kind == "cyclic") {
    auto m = parse_count(arg, "order");
    if (m < 2)
      throw InputError("cyclic order must be at least 2");
    return cyclic_oracle(m);
  }
  if (kind == "dihedral") {
    auto m = parse_count(arg, "m");
    if (m < 2)
      throw InputError("dihedral m must be at least 2");
    return dihedral_oracle(m);
  }
  if (kind == "coxeter") {
    auto [reg, g] = load_group(arg);
    const auto *c = std::get_if<expr::Coxeter>(&reg.expr(g));
    if (!c)
      throw InputError("group '" + g + "' is not a coxeter group");
    return coxeter_oracle(CoxeterSystem(c->diagram), budgets.orbit);
  }
  if (kind == "raag") {
    auto [reg, g] = load_group(arg);
    auto graph = raag_graph(reg, g);
    if (!graph)
      throw InputError("group '" + g + "' is not a right-angled Artin group");
    return cyclic_graph_product_oracle(*graph, std::vector<std::size_t>(graph->size(), 0));
  }
  if (kind == "gp") {
    auto [reg, g] = load_group(arg);
    const auto *gp = std::get_if<expr::GraphProduct>(&reg.expr(g));
    if (!gp)
      throw InputError("group '" + g + "' is not a graph product");
    std::vector<std::size_t> orders;
    for (const auto &v : gp->vertex_groups) {
      const auto &e = reg.expr(v);
      if (auto *f = std::get_if<expr::Finite>(&e); f && f->order >= 2)
        orders.push_back(f->order);
      else if (auto *fa = std::get_if<expr::FreeAbelian>(&e); fa && fa->rank == 1)
        orders.push_back(0);
      else if (auto *fr = std::get_if<expr::Free>(&e); fr && fr->rank == 1)
        orders.push_back(0);
      else
        throw InputError("vertex group '" + v + "' is not cyclic");
    }
    return cyclic_graph_product_oracle(gp->graph, std::move(orders));
  }
  throw InputError("unknown oracle kind '" + kind + "'");
}

namespace {

// ---- report pieces ---------------------------------------------------------

json citation_json(const std::optional<Citation> &c) {
  if (!c)
    return nullptr;
  return {{"tag", c->tag}, {"quote", c->quote}};
}

json names_json(const LabeledGraph &g, const VertexSet &vs) { return vertex_names(g, vs); }

std::optional<Citation> structural_citation(const GroupRegistry &reg, const std::string &group,
                                            AtomKind kind) {
  for (const auto &f : structural_facts(reg, group))
    if (f.atom.kind == kind && f.citation)
      return f.citation;
  return std::nullopt;
}

std::optional<Citation> rule_citation(std::string_view name) {
  const Rule *r = find_rule(name);
  return r ? r->citation : std::nullopt;
}

struct Report {
  std::string command;
  std::string digest;
  json sections = json::array();
  json warnings = json::array();

  void warn(const std::string &w) { warnings.push_back(w); }

  std::string dump() const {
    json j = {{"schemaVersion", kSchemaVersion},
              {"command", command},
              {"inputDigest", "sha256:" + digest},
              {"sections", sections},
              {"warnings", warnings}};
    return j.dump(2) + "\n";
  }
};

json coxeter_section(const GroupRegistry &reg, const std::string &group, Report &report) {
  const auto &diagram = std::get<expr::Coxeter>(reg.expr(group)).diagram;
  CoxeterSystem sys(diagram);
  json s = {{"kind", "coxeter"}, {"group", group}, {"vertices", diagram.vertices()}};

  auto ft = is_finite_type(sys);
  json comps = json::array();
  for (const auto &c : ft.components)
    comps.push_back({{"vertices", names_json(diagram, c.vertices)}, {"family", c.tag.to_string()}});
  auto order = ft.order();
  s["finiteType"] = {{"isFinite", ft.is_finite},
                     {"components", comps},
                     {"order", order ? json(order->str()) : json(nullptr)}};

  try {
    auto ends = coxeter_ends(sys);
    json e = {{"value", to_string(ends.ends)}};
    if (ends.separator)
      e["separator"] = names_json(diagram, *ends.separator);
    if (ends.two_ended)
      e["twoEnded"] = {{"core", names_json(diagram, ends.two_ended->core)},
                       {"x", diagram.name(ends.two_ended->x)},
                       {"y", diagram.name(ends.two_ended->y)}};
    e["citation"] = citation_json(structural_citation(reg, group, AtomKind::Ends));
    s["ends"] = e;
  } catch (const DiagramTooLarge &ex) {
    s["ends"] = nullptr;
    report.warn(group + ": ends undetermined: " + ex.what());
  }
  return s;
}

json artin_section(const GroupRegistry &reg, const std::string &group) {
  const auto &diagram = std::get<expr::Artin>(reg.expr(group)).diagram;
  json s = {{"kind", "artin"}, {"group", group}, {"vertices", diagram.vertices()}};
  if (diagram.empty()) {
    s["ends"] = nullptr;
    return s;
  }
  auto a = artin_one_ended(diagram);
  s["ends"] = {{"value", to_string(a.ends)},
               {"oneEndedCriterion", a.one_ended},
               {"citation", citation_json(structural_citation(reg, group, AtomKind::Ends))}};
  return s;
}

json raag_section(const GroupRegistry &reg, const LabeledGraph &graph, const std::string &group,
                  const Budgets &budgets, Report &report) {
  auto l = flag_complex(graph);
  json s = {{"kind", "raag"},
            {"group", group},
            {"flagComplex",
             {{"vertices", l.vertices().size()},
              {"edges", l.edges().size()},
              {"triangles", l.triangles().size()}}}};
  try {
    auto r = raag_simply_connected_at_infinity(l, budgets.tietze);
    json sc = {{"answer", to_string(r.answer)},
               {"reason", r.reason},
               {"tietzeSteps", r.tietze_steps}};
    if (r.cut_vertex)
      sc["cutVertex"] = l.vertices()[*r.cut_vertex];
    if (r.h1)
      sc["h1"] = r.h1->to_string();
    sc["citation"] = citation_json(structural_citation(reg, group, AtomKind::SCInf));
    s["scInf"] = sc;
    if (r.answer == Tri::Unknown)
      report.warn(group + ": simple connectivity at infinity left open by the bounded Tietze "
                          "search (heuristic)");
  } catch (const InputError &ex) {
    s["scInf"] = nullptr;
    s["note"] = ex.what();
  }
  return s;
}

json graph_product_section(const GroupRegistry &reg, const InferenceResult &result,
                           const std::string &group, Report &report) {
  const auto &gp = std::get<expr::GraphProduct>(reg.expr(group));
  ResultFacts facts(result);
  json s = {{"kind", "graph_product"}, {"group", group}, {"vertices", gp.graph.vertices()},
            {"vertexGroups", gp.vertex_groups}};

  auto with_orders = graph_product_profiles(reg, facts, group, true);
  s["ends"] = nullptr;
  if (!with_orders.spec) {
    report.warn(group + ": ends undetermined: a finite vertex group is trivial or of unknown "
                        "order");
  } else {
    try {
      auto e = graph_product_ends(*with_orders.spec);
      json j = {{"value", to_string(e.ends)}, {"witness", to_string(e.witness)}};
      if (e.vertex)
        j["vertex"] = gp.graph.name(*e.vertex);
      if (!e.gamma1.empty())
        j["gamma1"] = names_json(gp.graph, e.gamma1);
      if (!e.gamma2.empty())
        j["gamma2"] = names_json(gp.graph, e.gamma2);
      if (e.witness == GraphProductEnds::Witness::VisualSplitting)
        j["intersection"] = names_json(gp.graph, e.intersection);
      j["citation"] =
          citation_json(rule_citation(e.ends == EndCount::Two ? "R-GP-2ENDS" : "R-GP-ENDS"));
      s["ends"] = j;
    } catch (const InputError &ex) {
      report.warn(group + ": ends undetermined: " + ex.what());
    }
  }

  s["semistability"] = nullptr;
  if (gp.graph.empty() || !is_connected(gp.graph)) {
    s["semistabilityNote"] = "criterion needs a connected graph";
  } else if (auto all = graph_product_profiles(reg, facts, group, false); all.spec) {
    auto v = graph_product_semistable(*all.spec);
    json j = {{"verdict", to_string(v.verdict)}, {"reason", v.reason}};
    if (v.vertex)
      j["vertex"] = gp.graph.name(*v.vertex);
    j["citation"] = citation_json(rule_citation("R-GP-SS"));
    s["semistability"] = j;
  }
  return s;
}

json fact_json(const FactRef &f) {
  return {{"group", f.group}, {"atom", to_string(f.atom)}, {"holds", f.polarity == Polarity::Holds}};
}

json inference_section(const InferenceResult &r) {
  json facts = json::array();
  for (const auto &[key, entry] : r.facts) {
    json f = fact_json({key.first, key.second, entry.polarity});
    f["certificate"] = entry.certificate;
    facts.push_back(f);
  }
  json certs = json::array();
  for (std::size_t i = 0; i < r.certificates.size(); ++i) {
    const auto &c = r.certificates[i];
    json j = {{"index", i},
              {"fact", to_string(c.fact)},
              {"kind", to_string(c.kind)},
              {"children", c.children},
              {"citation", citation_json(c.citation)}};
    if (c.leaf()) {
      j["provenance"] = c.provenance;
    } else {
      j["rule"] = c.rule;
      j["appliedTo"] = c.applied_to;
    }
    certs.push_back(j);
  }
  return {{"kind", "inference"},
          {"ruleTableVersion", kRuleTableVersion},
          {"facts", facts},
          {"certificates", certs},
          {"annotations", r.annotations}};
}

json contradiction_section(const ContradictionDetected &e) {
  return {{"kind", "contradiction"},
          {"fact", e.fact()},
          {"holdsCertificate", e.holds_certificate()},
          {"failsCertificate", e.fails_certificate()}};
}

void require_constructor(const GroupRegistry &reg, const std::string &group,
                         std::string_view ctor) {
  if (!reg.contains(group))
    throw DanglingReference(group);
  if (constructor_name(reg.expr(group)) != ctor)
    throw InputError("group '" + group + "' is a " + std::string(constructor_name(reg.expr(group))) +
                     ", not a " + std::string(ctor));
}

// ---- subcommands -----------------------------------------------------------

int cmd_analyze(const std::string &file, const Budgets &budgets, std::ostream &out,
                std::ostream &err) {
  const std::string text = read_file(file);
  Report report{"analyze", sha256_hex(text)};
  auto reg = parse_document(text);
  reg.validate();

  InferenceResult result;
  try {
    result = infer(reg);
  } catch (const ContradictionDetected &e) {
    report.sections.push_back(contradiction_section(e));
    out << report.dump();
    err << "error: " << e.what() << "\n--- holds ---\n"
        << e.holds_certificate() << "--- fails ---\n"
        << e.fails_certificate();
    return kExitContradiction;
  }

  for (const auto &g : reg.dependency_order()) {
    const auto &e = reg.expr(g);
    if (std::holds_alternative<expr::Coxeter>(e))
      report.sections.push_back(coxeter_section(reg, g, report));
    else if (std::holds_alternative<expr::Artin>(e))
      report.sections.push_back(artin_section(reg, g));
    else if (std::holds_alternative<expr::GraphProduct>(e))
      report.sections.push_back(graph_product_section(reg, result, g, report));
    if (auto raag = raag_graph(reg, g); raag && !raag->empty())
      report.sections.push_back(raag_section(reg, *raag, g, budgets, report));
  }
  report.sections.push_back(inference_section(result));
  for (const auto &a : result.annotations)
    report.warn(a);
  out << report.dump();
  return kExitOk;
}

int cmd_coxeter(const std::string &file, const std::string &group, const std::string &dot,
                std::ostream &out) {
  const std::string text = read_file(file);
  Report report{"coxeter", sha256_hex(text)};
  auto reg = parse_document(text);
  require_constructor(reg, group, "coxeter");
  report.sections.push_back(coxeter_section(reg, group, report));
  if (!dot.empty())
    write_file(dot, render_dot(std::get<expr::Coxeter>(reg.expr(group)).diagram, group));
  out << report.dump();
  return kExitOk;
}

int cmd_graph_product(const std::string &file, const std::string &group, const std::string &dot,
                      const Budgets &budgets, std::ostream &out) {
  const std::string text = read_file(file);
  Report report{"graph-product", sha256_hex(text)};
  auto reg = parse_document(text);
  require_constructor(reg, group, "graph_product");
  auto result = infer(reg);
  report.sections.push_back(graph_product_section(reg, result, group, report));
  if (auto raag = raag_graph(reg, group); raag && !raag->empty())
    report.sections.push_back(raag_section(reg, *raag, group, budgets, report));
  if (!dot.empty())
    write_file(dot, render_dot(std::get<expr::GraphProduct>(reg.expr(group)).graph, group));
  out << report.dump();
  return kExitOk;
}

int cmd_cayley(const std::string &spec, std::size_t radius, const std::vector<std::size_t> &window,
               std::size_t segments, const std::string &dot, const Budgets &budgets,
               std::ostream &out) {
  Report report{"cayley", sha256_hex(spec + "\n" + std::to_string(radius))};
  auto oracle = parse_oracle_spec(spec, budgets);
  auto ball = build_ball(*oracle, radius, budgets.element_cap);
  std::size_t r_min = 1, r_max = radius >= 2 ? radius - 2 : 0;
  if (window.size() == 2) {
    r_min = window[0];
    r_max = window[1];
  }
  auto est = estimate_ends(ball, r_min, r_max);

  json gens = json::array();
  for (const auto &g : ball.generators)
    gens.push_back(g.name);
  auto invariants = check_ball_invariants(ball);
  json summary = {{"kind", "ball"},
                  {"oracle", oracle->description()},
                  {"generators", gens},
                  {"radius", radius},
                  {"elements", ball.size()},
                  {"sphereSizes", ball.sphere_sizes()},
                  {"exhausted", ball.exhausted()},
                  {"invariants", invariants ? json(*invariants) : json("ok")}};
  report.sections.push_back(summary);

  json per = json::array();
  for (auto [r, c] : est.per_radius)
    per.push_back({{"r", r}, {"components", c}});
  json e = {{"kind", "end_estimate"},
            {"window", {est.r_min, est.r_max}},
            {"perRadius", per},
            {"verdict", to_string(est.verdict)},
            {"stabilized", est.stabilized ? json(to_string(*est.stabilized)) : json(nullptr)},
            {"note", est.note}};
  report.sections.push_back(e);
  if (est.verdict == EndEstimate::Verdict::GrowingToInfinity)
    report.warn("GrowingToInfinity is a heuristic verdict: " + est.note);
  else if (est.verdict == EndEstimate::Verdict::Stabilized)
    report.warn("Stabilized is an empirical verdict on a finite ball");

  json segs = json::array();
  for (const auto &w : sample_geodesic_segments(ball, segments)) {
    std::string word;
    for (auto g : w)
      word += (word.empty() ? "" : " ") + ball.generators[g].name;
    segs.push_back(word);
  }
  report.sections.push_back({{"kind", "geodesic_segments"}, {"words", segs}});

  if (!dot.empty())
    write_file(dot, render_dot(ball, "ball", est.r_max));
  out << report.dump();
  return kExitOk;
}

int cmd_tower(const std::string &file, std::size_t base, std::ostream &out) {
  const std::string text = read_file(file);
  Report report{"tower", sha256_hex(text)};
  auto towers = parse_towers(text);
  for (std::size_t i = 0; i < towers.size(); ++i) {
    const auto &t = towers[i];
    json s = {{"kind", "tower"},
              {"name", t.name().empty() ? "#" + std::to_string(i) : t.name()}};
    MLVerdict v;
    if (t.kind() == AbelianTower::Kind::Constant) {
      v = ml_decide_constant(t.bonding(0));
      s["method"] = "exact (constant bonding)";
    } else {
      const std::size_t len = *t.length();
      if (base + 1 >= len)
        throw IndexOutOfRange("tower '" + s["name"].get<std::string>() + "' has " +
                              std::to_string(len) + " groups; base " + std::to_string(base) +
                              " leaves no window");
      v = ml_check_window(t, base, len - 1 - base).verdict;
      s["method"] = "window";
    }
    s["verdict"] = {{"kind", to_string(v.kind)},
                    {"m", v.m},
                    {"phi", v.phi ? json(*v.phi) : json(nullptr)},
                    {"stepIndex", v.step_index ? json(v.step_index->str()) : json(nullptr)},
                    {"window", v.window}};
    auto lim1 = lim1_report(v);
    s["lim1"] = {{"statement", lim1.text},
                 {"quote", lim1.citation.empty() ? json(nullptr) : json(lim1.citation)}};
    if (v.kind == MLVerdict::Kind::InconclusiveWindow)
      report.warn(s["name"].get<std::string>() + ": window too short to decide");
    report.sections.push_back(s);
  }
  out << report.dump();
  return kExitOk;
}

int cmd_explain(const std::string &file, const std::string &group, const std::string &atom_text,
                std::ostream &out, std::ostream &err) {
  auto reg = parse_document(read_file(file));
  auto atom = parse_atom(atom_text);
  if (!atom)
    throw InputError("unknown atom '" + atom_text + "'");
  if (!reg.contains(group))
    throw DanglingReference(group);
  InferenceResult result;
  try {
    result = infer(reg);
  } catch (const ContradictionDetected &e) {
    err << "error: " << e.what() << "\n--- holds ---\n"
        << e.holds_certificate() << "--- fails ---\n"
        << e.fails_certificate();
    return kExitContradiction;
  }
  out << explain(result, group, *atom);
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Ends, semistability and simple connectivity at infinity of finitely generated "
               "groups",
               "ginf"};
  app.require_subcommand(1);
  app.fallthrough();
  Budgets budgets;
  app.add_option("--budget", budgets.orbit, "braid-orbit budget of Coxeter word oracles");
  app.add_option("--element-cap", budgets.element_cap, "maximum number of ball elements");
  app.add_option("--tietze-budget", budgets.tietze, "Tietze search budget for RAAG presentations");

  std::string file, group, atom, dot, oracle;
  std::size_t radius = 0, segments = 4, base = 0;
  std::vector<std::size_t> window;

  auto *analyze = app.add_subcommand("analyze", "full report for a group document");
  analyze->add_option("file", file, "group document")->required();

  auto *coxeter = app.add_subcommand("coxeter", "finite type and ends of a Coxeter group");
  coxeter->add_option("file", file, "group document")->required();
  coxeter->add_option("--group", group, "group name")->required();
  coxeter->add_option("--dot", dot, "write the diagram as DOT");

  auto *gp = app.add_subcommand("graph-product", "ends and semistability of a graph product");
  gp->add_option("file", file, "group document")->required();
  gp->add_option("--group", group, "group name")->required();
  gp->add_option("--dot", dot, "write the graph as DOT");

  auto *cayley = app.add_subcommand("cayley", "empirical end count from a Cayley ball");
  cayley->add_option("--oracle", oracle, "oracle specification")->required();
  cayley->add_option("--radius", radius, "ball radius")->required();
  cayley->add_option("--window", window, "radius window r_min r_max")->expected(2);
  cayley->add_option("--segments", segments, "number of geodesic segments to sample");
  cayley->add_option("--dot", dot, "write the ball as DOT");

  auto *tower = app.add_subcommand("tower", "Mittag-Leffler verdicts for abelian towers");
  tower->add_option("file", file, "tower document")->required();
  tower->add_option("--base", base, "index m of the image chain");

  auto *expl = app.add_subcommand("explain", "derivation tree of one fact");
  expl->add_option("file", file, "group document")->required();
  expl->add_option("--group", group, "group name")->required();
  expl->add_option("--atom", atom, "atom, e.g. Semistable or Ends(One)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*analyze)
      return cmd_analyze(file, budgets, out, err);
    if (*coxeter)
      return cmd_coxeter(file, group, dot, out);
    if (*gp)
      return cmd_graph_product(file, group, dot, budgets, out);
    if (*cayley)
      return cmd_cayley(oracle, radius, window, segments, dot, budgets, out);
    if (*tower)
      return cmd_tower(file, base, out);
    if (*expl)
      return cmd_explain(file, group, atom, out, err);
  } catch (const ContradictionDetected &e) {
    err << "error: " << e.what() << "\n--- holds ---\n"
        << e.holds_certificate() << "--- fails ---\n"
        << e.fails_certificate();
    return kExitContradiction;
  } catch (const BudgetError &e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InputError &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInputError;
}

} // namespace ginf::cli
