#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <regex>

#include "ginf/error.hpp"
#include "ginf/group_registry.hpp"
#include "tokenizer.hpp"

namespace ginf {

namespace {

using detail::Tok;
using detail::Token;
using detail::tokenize;

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  GroupRegistry run() {
    struct PendingAssert {
      AttributeAssertion a;
      Token at;
    };
    std::vector<PendingAssert> asserts;
    while (peek().kind != Tok::End) {
      const Token &kw = peek();
      if (kw.kind == Tok::Ident && kw.text == "group") {
        next();
        Token name = expect_ident("group name");
        expect_punct("=");
        auto e = parse_expr();
        if (registry_.contains(name.text))
          throw DuplicateName(name.text);
        registry_.add(name.text, std::move(e));
      } else if (kw.kind == Tok::Ident && kw.text == "assert") {
        Token at = next();
        Token target = expect_ident("group name");
        expect_punct(":");
        Polarity pol = Polarity::Holds;
        if (peek().kind == Tok::Ident && peek().text == "not") {
          next();
          pol = Polarity::Fails;
        }
        Atom atom = parse_atom_tokens();
        asserts.push_back({{target.text, atom, pol, AssertionSource::User}, at});
      } else {
        fail(kw, "expected 'group' or 'assert'");
      }
    }
    add_implicit_builtins();
    registry_.validate();
    for (auto &p : asserts)
      registry_.add_assertion(std::move(p.a));
    return std::move(registry_);
  }

private:
  [[noreturn]] void fail(const Token &t, const std::string &what) {
    throw SyntaxError(t.line, t.col, what + (t.kind == Tok::End ? " (at end of input)" : " near '" + t.text + "'"));
  }

  const Token &peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool at_punct(const char *p) const {
    return peek().kind == Tok::Punct && peek().text == p;
  }

  void expect_punct(const char *p) {
    if (!at_punct(p))
      fail(peek(), std::string("expected '") + p + "'");
    next();
  }

  Token expect_ident(const char *what) {
    if (peek().kind != Tok::Ident)
      fail(peek(), std::string("expected ") + what);
    return next();
  }

  long long expect_number(const char *what) {
    if (peek().kind != Tok::Number)
      fail(peek(), std::string("expected ") + what);
    Token t = next();
    long long v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc())
      fail(t, "number out of range");
    return v;
  }

  Atom parse_atom_tokens() {
    Token t = expect_ident("property atom");
    std::string text = t.text;
    if (at_punct("(")) {
      next();
      Token arg = peek();
      if (arg.kind != Tok::Ident && arg.kind != Tok::Number)
        fail(arg, "expected end count");
      next();
      expect_punct(")");
      text += "(" + arg.text + ")";
    }
    auto atom = parse_atom(text);
    if (!atom)
      fail(t, "unknown property atom '" + text + "'");
    return *atom;
  }

  std::vector<std::string> parse_ref_list(std::size_t min, std::size_t max) {
    expect_punct("(");
    std::vector<std::string> refs;
    refs.push_back(expect_ident("group reference").text);
    while (at_punct(",")) {
      next();
      refs.push_back(expect_ident("group reference").text);
    }
    Token close = peek();
    expect_punct(")");
    if (refs.size() < min || refs.size() > max)
      fail(close, "wrong number of arguments");
    return refs;
  }

  std::vector<std::string> parse_flags(std::initializer_list<const char *> allowed) {
    std::vector<std::string> flags;
    while (at_punct("[")) {
      next();
      Token f = expect_ident("flag");
      bool ok = false;
      for (auto a : allowed)
        ok = ok || f.text == a;
      if (!ok)
        fail(f, "unknown flag");
      expect_punct("]");
      flags.push_back(f.text);
    }
    return flags;
  }

  static bool has(const std::vector<std::string> &flags, const char *f) {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
  }

  std::uint64_t parse_count_arg(long long min) {
    expect_punct("(");
    Token t = peek();
    long long v = expect_number("integer");
    if (v < min)
      fail(t, "value must be at least " + std::to_string(min));
    expect_punct(")");
    return static_cast<std::uint64_t>(v);
  }

  GroupExpr parse_expr() {
    Token ctor = expect_ident("constructor");
    const std::string &c = ctor.text;
    if (c == "coxeter")
      return expr::Coxeter{parse_diagram(true, nullptr)};
    if (c == "artin")
      return expr::Artin{parse_diagram(true, nullptr)};
    if (c == "graph_product") {
      expr::GraphProduct gp;
      gp.graph = parse_diagram(false, &gp.vertex_groups);
      return gp;
    }
    if (c == "amalgam") {
      auto r = parse_ref_list(3, 3);
      auto f = parse_flags({"edge_finite", "c_index_finite_in_both", "reduced"});
      return expr::Amalgam{r[0], r[1], r[2], has(f, "edge_finite"),
                           has(f, "c_index_finite_in_both"), has(f, "reduced")};
    }
    if (c == "hnn") {
      auto r = parse_ref_list(2, 2);
      auto f = parse_flags({"ascending", "finite_index_image"});
      return expr::Hnn{r[0], r[1], has(f, "ascending"), has(f, "finite_index_image")};
    }
    if (c == "extension") {
      auto r = parse_ref_list(2, 2);
      return expr::Extension{r[0], r[1]};
    }
    if (c == "direct_product")
      return expr::DirectProduct{parse_ref_list(1, std::numeric_limits<std::size_t>::max())};
    if (c == "commensurated") {
      auto r = parse_ref_list(2, 2);
      auto f = parse_flags({"infinite_index", "normal", "subnormal", "subcommensurated"});
      return expr::CommensuratedPair{r[0], r[1], has(f, "infinite_index"), has(f, "normal"),
                                     has(f, "subnormal"), has(f, "subcommensurated")};
    }
    if (c == "known") {
      expect_punct("(");
      Token n = expect_ident("catalog name");
      expect_punct(")");
      return expr::Known{n.text};
    }
    if (c == "finite")
      return expr::Finite{parse_count_arg(1)};
    if (c == "free")
      return expr::Free{static_cast<std::uint32_t>(parse_count_arg(0))};
    if (c == "free_abelian")
      return expr::FreeAbelian{static_cast<std::uint32_t>(parse_count_arg(0))};
    fail(ctor, "unknown constructor");
  }

  // { verts a b c; edge a b 3; ... }
  LabeledGraph parse_diagram(bool labeled, std::vector<std::string> *vertex_groups) {
    expect_punct("{");
    std::vector<std::string> names;
    struct PendingEdge {
      Token u, v;
      long long label;
    };
    std::vector<PendingEdge> edges;
    while (!at_punct("}")) {
      Token kw = expect_ident("'verts' or 'edge'");
      if (kw.text == "verts") {
        while (!at_punct(";")) {
          Token v = expect_ident("vertex name");
          if (std::find(names.begin(), names.end(), v.text) != names.end())
            throw DuplicateName(v.text);
          names.push_back(v.text);
          if (vertex_groups) {
            expect_punct(":");
            vertex_groups->push_back(expect_ident("vertex group").text);
          }
        }
      } else if (kw.text == "edge") {
        Token u = expect_ident("vertex name");
        Token v = expect_ident("vertex name");
        long long label = 2;
        if (labeled)
          label = expect_number("edge label");
        edges.push_back({u, v, label});
      } else {
        fail(kw, "expected 'verts' or 'edge'");
      }
      expect_punct(";");
    }
    expect_punct("}");
    LabeledGraph g(std::move(names));
    for (const auto &e : edges) {
      if (e.label < 2)
        throw InvalidEdgeLabel(e.label);
      if (e.label > std::numeric_limits<int>::max())
        fail(e.u, "edge label too large");
      g.add_edge(g.require_index(e.u.text), g.require_index(e.v.text),
                 static_cast<int>(e.label));
    }
    return g;
  }

  void add_implicit_builtins() {
    static const std::regex cyclic("Z([0-9]+)");
    static const std::regex free_group("F([0-9]+)");
    std::vector<std::string> missing;
    for (const auto &[name, entry] : registry_.entries())
      for (const auto &ref : references(entry.expr))
        if (!registry_.contains(ref))
          missing.push_back(ref);
    for (const auto &ref : missing) {
      if (registry_.contains(ref))
        continue;
      std::smatch m;
      if (ref == "Z")
        registry_.add(ref, expr::FreeAbelian{1});
      else if (std::regex_match(ref, m, cyclic) && std::stoull(m[1]) >= 1)
        registry_.add(ref, expr::Finite{std::stoull(m[1])});
      else if (std::regex_match(ref, m, free_group))
        registry_.add(ref, expr::Free{static_cast<std::uint32_t>(std::stoul(m[1]))});
      else
        throw DanglingReference(ref);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  GroupRegistry registry_;
};

} // namespace

GroupRegistry parse_document(std::string_view text) {
  return Parser(tokenize(text)).run();
}

} // namespace ginf
