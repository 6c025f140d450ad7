#pragma once

#include <cctype>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "infoenergy/text.hpp"
#include "infoenergy/wordlists.hpp"

namespace infoenergy {

struct TokenizerOptions {
  // nullptr selects builtin_abbreviations().
  const std::set<std::string>* abbreviations = nullptr;
};

namespace detail {

inline constexpr char32_t kReplacement = 0xFFFD;

// Minimal UTF-8 decoder; malformed bytes decode to U+FFFD one byte at a time.
inline char32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto byte = [&](std::size_t j) {
    return static_cast<unsigned char>(s[j]);
  };
  unsigned char c = byte(i);
  if (c < 0x80) {
    ++i;
    return c;
  }
  int extra = 0;
  char32_t cp = 0;
  if ((c & 0xE0) == 0xC0) {
    cp = c & 0x1F;
    extra = 1;
  } else if ((c & 0xF0) == 0xE0) {
    cp = c & 0x0F;
    extra = 2;
  } else if ((c & 0xF8) == 0xF0) {
    cp = c & 0x07;
    extra = 3;
  } else {
    ++i;
    return kReplacement;
  }
  if (i + extra >= s.size()) {
    ++i;
    return kReplacement;
  }
  for (int k = 1; k <= extra; ++k) {
    unsigned char cc = byte(i + k);
    if ((cc & 0xC0) != 0x80) {
      ++i;
      return kReplacement;
    }
    cp = (cp << 6) | (cc & 0x3F);
  }
  i += extra + 1;
  return cp;
}

inline void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

inline bool is_terminator_char(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?' || cp == 0x2026;  // …
}

inline bool is_apostrophe(char32_t cp) {
  return cp == U'\'' || cp == 0x2019 || cp == 0x02BC;
}

// Non-ASCII punctuation that must not be mistaken for a letter.
inline bool is_unicode_punct(char32_t cp) {
  switch (cp) {
    case 0x00A0:  // nbsp
    case 0x00AB:
    case 0x00BB:  // guillemets
    case 0x2010:
    case 0x2011:
    case 0x2012:
    case 0x2013:
    case 0x2014:
    case 0x2015:  // dashes
    case 0x2018:
    case 0x2019:
    case 0x201A:
    case 0x201C:
    case 0x201D:
    case 0x201E:  // quotes
    case 0x2022:
    case 0x2026:
    case 0x2039:
    case 0x203A:
      return true;
    default:
      return false;
  }
}

inline bool is_letter(char32_t cp) {
  if (cp < 0x80) {
    return std::isalpha(static_cast<int>(cp)) != 0;
  }
  return !is_unicode_punct(cp);
}

// Closers absorbed into a sentence terminator.
inline bool is_closing_char(char32_t cp) {
  return cp == U'"' || cp == U'\'' || cp == U')' || cp == U']' ||
         cp == 0x2019 || cp == 0x201D || cp == 0x00BB || cp == 0x203A;
}

inline char32_t to_lower_ascii(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  return cp;
}

}  // namespace detail

// Splits raw text into sentences and tokens. Words are maximal runs of
// letters joined by internal apostrophes/hyphens; runs containing a digit
// become number tokens normalized to kNumberSymbol; sentences end at
// {. ! ? …} with closing quotes/brackets absorbed; everything else is
// dropped. A trailing fragment without punctuation receives a synthesized
// terminator. No stemming.
inline Document tokenize(std::string_view raw, const TokenizerOptions& opts = {}) {
  using namespace detail;
  const std::set<std::string>& abbreviations =
      opts.abbreviations ? *opts.abbreviations : builtin_abbreviations();

  // Decode once so the scanner can look ahead by codepoint.
  std::vector<char32_t> cps;
  cps.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) {
    cps.push_back(decode_utf8(raw, i));
  }

  Document doc;
  Sentence current;
  std::vector<char32_t> token_cps;
  bool token_has_digit = false;

  const auto flush_token = [&]() {
    if (token_cps.empty()) return;
    Token tok;
    tok.char_length = static_cast<int>(token_cps.size());
    for (char32_t cp : token_cps) encode_utf8(cp, tok.surface);
    if (token_has_digit) {
      tok.kind = TokenKind::number;
      tok.normalized = kNumberSymbol;
    } else {
      tok.kind = TokenKind::word;
      for (char32_t cp : token_cps) encode_utf8(to_lower_ascii(cp), tok.normalized);
    }
    current.tokens.push_back(std::move(tok));
    token_cps.clear();
    token_has_digit = false;
  };

  const auto close_sentence = [&](std::string terminator_surface) {
    if (current.tokens.empty()) return;  // never emit an empty sentence
    Token term;
    term.surface = std::move(terminator_surface);
    term.normalized = kTerminatorSymbol;
    term.char_length = 1;
    term.kind = TokenKind::terminator;
    current.tokens.push_back(std::move(term));
    doc.sentences.push_back(std::move(current));
    current = Sentence{};
  };

  const std::size_t n = cps.size();
  for (std::size_t i = 0; i < n; ++i) {
    const char32_t cp = cps[i];
    const bool in_token = !token_cps.empty();
    const char32_t prev = in_token ? token_cps.back() : 0;
    const char32_t next = (i + 1 < n) ? cps[i + 1] : 0;

    if (is_ascii_digit(cp)) {
      token_cps.push_back(cp);
      token_has_digit = true;
      continue;
    }
    if (is_letter(cp) && !is_apostrophe(cp)) {
      token_cps.push_back(cp);
      continue;
    }
    // Internal joiners: single hyphen/apostrophe between letters or digits,
    // and , : / . between digits ("3.14", "1,529", "3:16").
    if (in_token) {
      const bool prev_alnum = is_ascii_digit(prev) || is_letter(prev);
      const bool next_alnum = is_ascii_digit(next) || (is_letter(next) && !is_apostrophe(next));
      if ((cp == U'-' || is_apostrophe(cp)) && prev_alnum && next_alnum) {
        token_cps.push_back(cp == U'-' ? cp : U'\'');
        continue;
      }
      if ((cp == U'.' || cp == U',' || cp == U':' || cp == U'/') &&
          token_has_digit && is_ascii_digit(prev) && is_ascii_digit(next)) {
        token_cps.push_back(cp);
        continue;
      }
    }

    if (is_terminator_char(cp)) {
      flush_token();
      if (cp == U'.' && !current.tokens.empty()) {
        // Abbreviation-safe: "Mr." or a single-letter initial keeps the
        // sentence open and drops the period.
        const Token& last = current.tokens.back();
        const bool single_initial =
            last.kind == TokenKind::word && last.char_length == 1;
        if (single_initial || (last.kind == TokenKind::word &&
                               abbreviations.count(last.normalized) > 0)) {
          continue;
        }
      }
      std::string surface;
      encode_utf8(cp == 0x2026 ? U'.' : cp, surface);
      // Absorb runs of terminators plus closing quotes/brackets.
      while (i + 1 < n &&
             (is_terminator_char(cps[i + 1]) || is_closing_char(cps[i + 1]))) {
        ++i;
      }
      close_sentence(std::move(surface));
      continue;
    }

    flush_token();  // any other character separates tokens
  }
  flush_token();
  close_sentence(".");  // trailing fragment without punctuation

  if (doc.sentences.empty()) {
    throw std::invalid_argument("tokenize: empty document");
  }
  return doc;
}

}  // namespace infoenergy
