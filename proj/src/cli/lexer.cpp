#include "orealg/cli/lexer.hpp"

#include <cctype>

#include "orealg/error.hpp"

namespace orealg::cli {

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    SourcePos start = pos;
    std::size_t j = i;
    if (std::isalpha(c) || c == '_') {
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), start});
    } else if (std::isdigit(c)) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), start});
    } else if (std::string_view("+-*/^()[]<>,;=:").find(static_cast<char>(c)) != std::string_view::npos) {
      j = i + 1;
      out.push_back({Tok::Punct, std::string(1, static_cast<char>(c)), start});
    } else {
      throw Error(ErrorCode::SyntaxError, start.str() + ": unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
    }
    advance(j - i);
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

}  // namespace orealg::cli
