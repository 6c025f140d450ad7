#pragma once

#include <stdexcept>
#include <vector>

#include "infoenergy/text.hpp"

namespace infoenergy {

// Greedy split on sentence boundaries: accumulate whole sentences until a
// chunk reaches target_words, then start the next one. A trailing remainder
// of fewer than target_words/2 words is merged into the previous chunk.
// Chunks inherit the parent metadata.
inline std::vector<Document> chunk_document(const Document& doc,
                                            std::size_t target_words = 5000) {
  if (doc.empty()) {
    throw std::invalid_argument("chunk_document: empty document");
  }
  if (target_words == 0) {
    throw std::invalid_argument("chunk_document: target_words must be positive");
  }

  std::vector<Document> chunks;
  Document current;
  current.meta = doc.meta;
  std::size_t current_words = 0;

  for (const Sentence& sentence : doc.sentences) {
    current.sentences.push_back(sentence);
    current_words += sentence.word_count();
    if (current_words >= target_words) {
      chunks.push_back(std::move(current));
      current = Document{};
      current.meta = doc.meta;
      current_words = 0;
    }
  }
  if (!current.sentences.empty()) {
    if (!chunks.empty() && 2 * current_words < target_words) {
      Document& prev = chunks.back();
      prev.sentences.insert(prev.sentences.end(),
                            std::make_move_iterator(current.sentences.begin()),
                            std::make_move_iterator(current.sentences.end()));
    } else {
      chunks.push_back(std::move(current));
    }
  }
  return chunks;
}

}  // namespace infoenergy
