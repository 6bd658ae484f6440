#ifndef GINF_SRC_TOKENIZER_HPP
#define GINF_SRC_TOKENIZER_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "ginf/error.hpp"

namespace ginf::detail {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n')
        advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    std::size_t l = line, co = col, start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      advance(j - i);
      out.push_back({Tok::Ident, std::string(src.substr(start, j - start)), l, co});
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      std::size_t j = i + 1;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      if (c == '-' && j == i + 1)
        throw SyntaxError(l, co, "stray '-'");
      advance(j - i);
      out.push_back({Tok::Number, std::string(src.substr(start, j - start)), l, co});
    } else if (std::string_view("{}()[],;:=").find(c) != std::string_view::npos) {
      advance(1);
      out.push_back({Tok::Punct, std::string(1, c), l, co});
    } else {
      throw SyntaxError(l, co, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

} // namespace ginf::detail

#endif // GINF_SRC_TOKENIZER_HPP
