#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "infoenergy/text.hpp"
#include "infoenergy/wordlists.hpp"

namespace infoenergy {

// Vocabulary ranked by frequency, descending; ties broken lexicographically
// so results are reproducible (any tie order yields the same Z).
struct RankedVocab {
  std::vector<std::pair<std::string, std::int64_t>> entries;

  std::size_t size() const { return entries.size(); }
};

inline RankedVocab make_ranked_vocab(
    const std::unordered_map<std::string, std::int64_t>& counts) {
  RankedVocab vocab;
  vocab.entries.assign(counts.begin(), counts.end());
  std::sort(vocab.entries.begin(), vocab.entries.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
  return vocab;
}

// Z(V) = (1/N) * sum over ranks of rank * freq; Z(empty) = 0.
inline double zipf_average(const RankedVocab& vocab) {
  if (vocab.entries.empty()) return 0.0;
  double acc = 0.0;
  for (std::size_t r = 0; r < vocab.entries.size(); ++r) {
    acc += static_cast<double>(r + 1) *
           static_cast<double>(vocab.entries[r].second);
  }
  return acc / static_cast<double>(vocab.entries.size());
}

// Z_RATIO = [Z(V_ALL) - Z(V_STOP)] / Z(V_ALL) over the text's own counts.
// V_STOP holds the stop words that occur in the text, ranked among
// themselves by their in-text frequencies.
inline double z_ratio(std::span<const Token> tokens,
                      const std::set<std::string>& stoplist) {
  std::unordered_map<std::string, std::int64_t> all;
  std::unordered_map<std::string, std::int64_t> stop;
  for (const Token& token : tokens) {
    if (token.kind == TokenKind::terminator) continue;
    ++all[token.normalized];
    if (stoplist.count(token.normalized) > 0) ++stop[token.normalized];
  }
  if (all.empty()) {
    throw std::invalid_argument("z_ratio: no word tokens");
  }
  const double z_all = zipf_average(make_ranked_vocab(all));
  const double z_stop = zipf_average(make_ranked_vocab(stop));
  return (z_all - z_stop) / z_all;
}

inline double z_ratio(const Document& doc,
                      const std::set<std::string>& stoplist) {
  std::vector<Token> tokens;
  tokens.reserve(doc.token_count());
  for (const Sentence& sentence : doc.sentences) {
    for (const Token& token : sentence.tokens) {
      if (token.kind != TokenKind::terminator) tokens.push_back(token);
    }
  }
  return z_ratio(std::span<const Token>(tokens), stoplist);
}

}  // namespace infoenergy
