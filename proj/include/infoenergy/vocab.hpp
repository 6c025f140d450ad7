#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "infoenergy/text.hpp"

namespace infoenergy {

// Background word-frequency model. Immutable after construction and safe to
// share across parallel workers.
struct VocabModel {
  std::unordered_map<std::string, std::int64_t> counts;  // normalized -> count
  std::int64_t total_words = 0;      // W: word + number tokens
  std::int64_t total_sentences = 0;  // S: one per terminator

  std::size_t vocab_size() const { return counts.size(); }
};

namespace detail {

inline void accumulate_vocab(VocabModel& model, const Document& doc) {
  for (const Sentence& sentence : doc.sentences) {
    for (const Token& token : sentence.tokens) {
      if (token.kind == TokenKind::terminator) continue;
      ++model.counts[token.normalized];
      ++model.total_words;
    }
    ++model.total_sentences;
  }
}

}  // namespace detail

inline VocabModel build_vocab_model(std::span<const Document> documents) {
  VocabModel model;
  for (const Document& doc : documents) detail::accumulate_vocab(model, doc);
  if (model.total_words == 0) {
    throw std::invalid_argument("build_vocab_model: no non-empty documents");
  }
  return model;
}

inline VocabModel build_vocab_model(std::span<const Document* const> documents) {
  VocabModel model;
  for (const Document* doc : documents) detail::accumulate_vocab(model, *doc);
  if (model.total_words == 0) {
    throw std::invalid_argument("build_vocab_model: no non-empty documents");
  }
  return model;
}

// Add-one smoothing over the seen types plus one unseen bucket:
//   Pr(w) = (count(w) + 1) / (W + V + 1),  unseen -> 1 / (W + V + 1).
// Terminators are read units, not vocabulary: Pr = S / (W + S).
inline double probability(const VocabModel& model, const Token& token) {
  if (model.total_words < 1) {
    throw std::invalid_argument("probability: degenerate model (W < 1)");
  }
  if (token.kind == TokenKind::terminator) {
    if (model.total_sentences < 1) {
      throw std::invalid_argument("probability: degenerate model (S < 1)");
    }
    return static_cast<double>(model.total_sentences) /
           static_cast<double>(model.total_words + model.total_sentences);
  }
  const auto it = model.counts.find(token.normalized);
  const std::int64_t count = it == model.counts.end() ? 0 : it->second;
  return static_cast<double>(count + 1) /
         static_cast<double>(model.total_words +
                             static_cast<std::int64_t>(model.vocab_size()) + 1);
}

}  // namespace infoenergy
