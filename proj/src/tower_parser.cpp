#include <charconv>

#include "ginf/error.hpp"
#include "ginf/pro_sequence.hpp"
#include "tokenizer.hpp"

namespace ginf {

namespace {

using detail::Tok;
using detail::Token;

class TowerParser {
public:
  explicit TowerParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<AbelianTower> run() {
    std::vector<AbelianTower> out;
    while (peek().kind != Tok::End)
      out.push_back(tower());
    return out;
  }

private:
  const Token &peek() const { return toks_[pos_]; }
  const Token &next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const Token &t, const std::string &what) const {
    throw SyntaxError(t.line, t.col, what);
  }

  bool accept(std::string_view text) {
    if (peek().kind != Tok::End && peek().text == text) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(std::string_view text) {
    if (!accept(text))
      fail(peek(), "expected '" + std::string(text) + "'");
  }

  std::string ident() {
    if (peek().kind != Tok::Ident)
      fail(peek(), "expected a name");
    return next().text;
  }

  BigInt integer() {
    if (peek().kind != Tok::Number)
      fail(peek(), "expected an integer");
    return BigInt(next().text);
  }

  std::size_t count() {
    const Token &t = peek();
    BigInt v = integer();
    if (v < 0 || v > 1'000'000)
      fail(t, "expected a small non-negative integer");
    return static_cast<std::size_t>(v);
  }

  // Rows written as [a b c] [d e f]; commas between entries are optional.
  IntMatrix matrix(std::size_t rows, std::size_t cols, const Token &where) {
    std::vector<std::vector<BigInt>> rs;
    while (accept("[")) {
      std::vector<BigInt> row;
      while (!accept("]")) {
        row.push_back(integer());
        accept(",");
      }
      rs.push_back(std::move(row));
    }
    if (rs.size() != rows)
      fail(where, "expected " + std::to_string(rows) + " rows, found " +
                      std::to_string(rs.size()));
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (rs[r].size() != cols)
        fail(where, "row " + std::to_string(r) + " needs " + std::to_string(cols) + " entries");
      for (std::size_t c = 0; c < cols; ++c)
        m(r, c) = rs[r][c];
    }
    return m;
  }

  AbelianTower tower() {
    if (peek().text != "tower")
      fail(peek(), "expected 'tower'");
    next();
    if (accept("constant")) {
      std::string name = peek().kind == Tok::Ident ? ident() : std::string{};
      expect("{");
      expect("rank");
      std::size_t n = count();
      expect(";");
      const Token &where = peek();
      expect("matrix");
      IntMatrix a = matrix(n, n, where);
      expect(";");
      expect("}");
      return AbelianTower::constant(std::move(a), std::move(name));
    }

    std::string name = peek().kind == Tok::Ident ? ident() : std::string{};
    expect("{");
    expect("ranks");
    expect(":");
    std::vector<std::size_t> ranks;
    while (peek().kind == Tok::Number)
      ranks.push_back(count());
    expect(";");
    if (ranks.empty())
      fail(peek(), "tower needs at least one rank");
    std::vector<std::optional<IntMatrix>> bonds(ranks.size() - 1);
    while (!accept("}")) {
      const Token &where = peek();
      expect("bond");
      std::size_t k = count();
      expect(":");
      if (k >= bonds.size())
        fail(where, "bond " + std::to_string(k) + " has no target group");
      if (bonds[k])
        fail(where, "bond " + std::to_string(k) + " given twice");
      bonds[k] = matrix(ranks[k], ranks[k + 1], where);
      expect(";");
    }
    std::vector<IntMatrix> mats;
    for (std::size_t k = 0; k < bonds.size(); ++k) {
      if (!bonds[k])
        throw InvalidStructure("tower is missing bond " + std::to_string(k));
      mats.push_back(std::move(*bonds[k]));
    }
    return AbelianTower::explicit_tower(std::move(ranks), std::move(mats), std::move(name));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

} // namespace

std::vector<AbelianTower> parse_towers(std::string_view text) {
  return TowerParser(detail::tokenize(text)).run();
}

} // namespace ginf
