#pragma once

#include <set>
#include <string>

namespace infoenergy {

// Default English stop-word list: high-frequency syntactic glue words.
// Overridable everywhere a stoplist is accepted; one word per line when
// loaded from a file (see corpus_io.hpp).
inline const std::set<std::string>& builtin_stopwords() {
  static const std::set<std::string> words = {
      "a",       "about",   "above",   "after",   "again",    "against",
      "all",     "am",      "an",      "and",     "any",      "are",
      "as",      "at",      "be",      "because", "been",     "before",
      "being",   "below",   "between", "both",    "but",      "by",
      "can",     "cannot",  "could",   "did",     "do",       "does",
      "doing",   "down",    "during",  "each",    "either",   "else",
      "ever",    "every",   "few",     "for",     "from",     "further",
      "had",     "has",     "have",    "having",  "he",       "her",
      "here",    "hers",    "herself", "him",     "himself",  "his",
      "how",     "i",       "if",      "in",      "into",     "is",
      "it",      "its",     "itself",  "let",     "may",      "me",
      "might",   "more",    "most",    "must",    "my",       "myself",
      "neither", "no",      "nor",     "not",     "of",       "off",
      "on",      "once",    "only",    "or",      "other",    "ought",
      "our",     "ours",    "out",     "over",    "own",      "same",
      "shall",   "she",     "should",  "so",      "some",     "such",
      "than",    "that",    "the",     "their",   "theirs",   "them",
      "themselves", "then", "there",   "these",   "they",     "this",
      "those",   "through", "to",      "too",     "under",    "until",
      "unto",    "up",      "upon",    "us",      "very",     "was",
      "we",      "were",    "what",    "when",    "where",    "which",
      "while",   "who",     "whom",    "whose",   "why",      "will",
      "with",    "within",  "without", "would",   "ye",       "yet",
      "you",     "your",    "yours",   "yourself",
  };
  return words;
}

// Lower-cased words whose trailing period does not end a sentence.
inline const std::set<std::string>& builtin_abbreviations() {
  static const std::set<std::string> words = {
      "mr",   "mrs",  "ms",   "dr",    "prof", "rev",  "hon",  "st",
      "capt", "col",  "gen",  "lieut", "sgt",  "esq",  "jr",   "sr",
      "vs",   "etc",  "viz",  "cf",    "al",   "vol",  "ch",   "chap",
      "pp",   "ed",   "sec",  "fig",   "op",   "cit",  "approx",
  };
  return words;
}

}  // namespace infoenergy
