#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace orealg::cli {

struct SourcePos {
  int line = 1;
  int column = 1;
  std::string str() const { return std::to_string(line) + ":" + std::to_string(column); }
};

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

/// Splits problem text into identifiers, integers, and single-character
/// punctuation. `#` starts a comment running to the end of the line.
std::vector<Token> tokenize(std::string_view src);

}  // namespace orealg::cli
