#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace infoenergy {

enum class TokenKind { word, number, terminator };

// Normalized form shared by every number token.
inline constexpr const char* kNumberSymbol = "<num>";
// Normalized form of every sentence terminator.
inline constexpr const char* kTerminatorSymbol = "<term>";

struct Token {
  std::string surface;
  std::string normalized;  // lower-cased; numbers collapse to kNumberSymbol
  int char_length = 0;     // codepoints in surface; always 1 for terminators
  TokenKind kind = TokenKind::word;
};

// Invariant: exactly one terminator token, in final position, and at least
// one non-terminator token before it.
struct Sentence {
  std::vector<Token> tokens;

  std::size_t word_count() const {
    return tokens.empty() ? 0 : tokens.size() - 1;
  }
};

struct DocMeta {
  std::string id;
  std::string author;
  std::string title;
  int date_year = 0;
};

struct Document {
  std::vector<Sentence> sentences;
  DocMeta meta;

  bool empty() const { return sentences.empty(); }

  // Non-terminator tokens.
  std::size_t word_count() const {
    std::size_t n = 0;
    for (const auto& s : sentences) n += s.word_count();
    return n;
  }

  // All tokens, terminators included.
  std::size_t token_count() const {
    std::size_t n = 0;
    for (const auto& s : sentences) n += s.tokens.size();
    return n;
  }
};

}  // namespace infoenergy
