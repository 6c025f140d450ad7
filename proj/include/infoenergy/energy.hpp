#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "infoenergy/impulse.hpp"
#include "infoenergy/text.hpp"
#include "infoenergy/vocab.hpp"

namespace infoenergy {

// Memory smoothing function parameters: unit weight on the most recent tau
// words (the current word is lag 0), exponential tail exp(-k*(lag-tau+1))
// beyond. k = +infinity gives the hard rectangular window used throughout.
// tau = 1 is the single-word window for every k: ordering energy is
// identically zero there.
struct MsfParams {
  int tau = 2;
  double k = std::numeric_limits<double>::infinity();
};

inline void validate(const MsfParams& params) {
  if (params.tau < 1) {
    throw std::invalid_argument("MsfParams: tau must be >= 1");
  }
  if (!(params.k > 0.0)) {
    throw std::invalid_argument("MsfParams: k must be positive");
  }
}

// Weights below this are cut off, bounding work per token.
inline constexpr double kMsfWeightFloor = 1e-12;

inline double msf_weight(const MsfParams& params, std::int64_t lag) {
  validate(params);
  if (lag < 0) {
    throw std::invalid_argument("msf_weight: lag must be non-negative");
  }
  if (lag < params.tau) return 1.0;
  if (params.tau == 1 || !std::isfinite(params.k)) return 0.0;
  return std::exp(-params.k * static_cast<double>(lag - params.tau + 1));
}

// A text rendered as a series of non-negative impulse values. resets holds
// the sorted indices at which the smoothing history is cleared: index i in
// resets means history is empty when value i arrives (0 is a no-op).
struct ImpulseSeries {
  std::vector<double> values;
  std::vector<std::size_t> resets;
};

// Linguistic system response: windowed sum of each value with its
// predecessors, never crossing the most recent reset.
inline std::vector<double> lsr_series(const ImpulseSeries& series,
                                      const MsfParams& params) {
  validate(params);
  const auto& values = series.values;
  std::vector<double> out(values.size());
  std::size_t next_reset = 0;
  std::size_t segment_start = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    while (next_reset < series.resets.size() &&
           series.resets[next_reset] <= i) {
      segment_start = series.resets[next_reset];
      ++next_reset;
    }
    double acc = 0.0;
    for (std::size_t j = i + 1; j-- > segment_start;) {
      const double w = msf_weight(params, static_cast<std::int64_t>(i - j));
      if (w < kMsfWeightFloor) break;  // weights are non-increasing in lag
      acc += w * values[j];
    }
    out[i] = acc;
  }
  return out;
}

// Mean squared LSR over the series. For k = infinity this equals the
// continuous (1/T) * integral of LSR(t)^2 dt with unit word spacing.
inline double information_energy(const ImpulseSeries& series,
                                 const MsfParams& params) {
  if (series.values.empty()) {
    throw std::invalid_argument("information_energy: empty series");
  }
  const std::vector<double> lsr = lsr_series(series, params);
  double acc = 0.0;
  for (const double x : lsr) acc += x * x;
  return acc / static_cast<double>(lsr.size());
}

// Descending stable sort of the values; ties keep their original relative
// order and reset positions are unchanged.
inline ImpulseSeries order_text(const ImpulseSeries& series) {
  ImpulseSeries ordered = series;
  std::stable_sort(ordered.values.begin(), ordered.values.end(),
                   std::greater<double>());
  return ordered;
}

// OE = IE(O(T)) - IE(T); may be negative.
inline double ordering_energy(const ImpulseSeries& series,
                              const MsfParams& params) {
  return information_energy(order_text(series), params) -
         information_energy(series, params);
}

struct EnergyResult {
  double ie_unordered = 0.0;
  double ie_ordered = 0.0;
  double oe = 0.0;  // ie_ordered - ie_unordered, exactly
};

inline EnergyResult energy_result(const ImpulseSeries& series,
                                  const MsfParams& params) {
  EnergyResult r;
  r.ie_unordered = information_energy(series, params);
  r.ie_ordered = information_energy(order_text(series), params);
  r.oe = r.ie_ordered - r.ie_unordered;
  return r;
}

// Impulse series of one sentence, terminator included, no internal resets.
inline ImpulseSeries sentence_series(const Sentence& sentence, ImpulseFnId fn,
                                     const VocabModel& model) {
  ImpulseSeries series;
  series.values.reserve(sentence.tokens.size());
  for (const Token& token : sentence.tokens) {
    series.values.push_back(impulse(fn, token, model));
  }
  return series;
}

// Impulse series of a whole document with the smoothing history zeroed at
// the first token of every sentence.
inline ImpulseSeries document_series(const Document& doc, ImpulseFnId fn,
                                     const VocabModel& model) {
  ImpulseSeries series;
  series.values.reserve(doc.token_count());
  for (const Sentence& sentence : doc.sentences) {
    series.resets.push_back(series.values.size());
    for (const Token& token : sentence.tokens) {
      series.values.push_back(impulse(fn, token, model));
    }
  }
  return series;
}

// Per-sentence protocol: each sentence is evaluated in isolation (the sort
// stays within the sentence) and the results are averaged arithmetically.
inline EnergyResult per_sentence_energy(const Document& doc, ImpulseFnId fn,
                                        const MsfParams& params,
                                        const VocabModel& model) {
  if (doc.empty()) {
    throw std::invalid_argument("per_sentence_energy: empty document");
  }
  EnergyResult mean;
  for (const Sentence& sentence : doc.sentences) {
    const EnergyResult r =
        energy_result(sentence_series(sentence, fn, model), params);
    mean.ie_unordered += r.ie_unordered;
    mean.ie_ordered += r.ie_ordered;
  }
  const double n = static_cast<double>(doc.sentences.size());
  mean.ie_unordered /= n;
  mean.ie_ordered /= n;
  mean.oe = mean.ie_ordered - mean.ie_unordered;
  return mean;
}

// Per-document protocol: one LSR stream over the whole document with a
// reset at each sentence start; the ordered variant uses a single global
// sort with the reset positions pinned.
inline EnergyResult per_document_energy(const Document& doc, ImpulseFnId fn,
                                        const MsfParams& params,
                                        const VocabModel& model) {
  if (doc.empty()) {
    throw std::invalid_argument("per_document_energy: empty document");
  }
  return energy_result(document_series(doc, fn, model), params);
}

}  // namespace infoenergy
