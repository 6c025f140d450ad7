#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "infoenergy/text.hpp"
#include "infoenergy/vocab.hpp"

namespace infoenergy {

// The six word-impulse functions. With l the character length and p the
// corpus probability of a token (natural log throughout):
//   i1: ln(l/p)   i2: -l ln p   i3: -ln p   i4: ln(l) * (-ln p)
//   i5: l         i6: ln l
enum class ImpulseFnId { i1, i2, i3, i4, i5, i6 };

inline constexpr ImpulseFnId kAllImpulseFns[] = {
    ImpulseFnId::i1, ImpulseFnId::i2, ImpulseFnId::i3,
    ImpulseFnId::i4, ImpulseFnId::i5, ImpulseFnId::i6,
};

inline std::string_view to_string(ImpulseFnId fn) {
  switch (fn) {
    case ImpulseFnId::i1: return "i1";
    case ImpulseFnId::i2: return "i2";
    case ImpulseFnId::i3: return "i3";
    case ImpulseFnId::i4: return "i4";
    case ImpulseFnId::i5: return "i5";
    case ImpulseFnId::i6: return "i6";
  }
  return "?";
}

inline std::optional<ImpulseFnId> parse_impulse_fn(std::string_view s) {
  if (s == "i1") return ImpulseFnId::i1;
  if (s == "i2") return ImpulseFnId::i2;
  if (s == "i3") return ImpulseFnId::i3;
  if (s == "i4") return ImpulseFnId::i4;
  if (s == "i5") return ImpulseFnId::i5;
  if (s == "i6") return ImpulseFnId::i6;
  return std::nullopt;
}

// Impulsive value of a token: the work of recognizing it. Non-negative for
// every function since l >= 1 and 0 < p < 1.
inline double impulse(ImpulseFnId fn, const Token& token,
                      const VocabModel& model) {
  if (token.char_length < 1) {
    throw std::invalid_argument("impulse: token char_length < 1");
  }
  const double l = static_cast<double>(token.char_length);
  switch (fn) {
    case ImpulseFnId::i5:
      return l;
    case ImpulseFnId::i6:
      return std::log(l);
    default:
      break;
  }
  const double p = probability(model, token);
  switch (fn) {
    case ImpulseFnId::i1: return std::log(l / p);
    case ImpulseFnId::i2: return -l * std::log(p);
    case ImpulseFnId::i3: return -std::log(p);
    case ImpulseFnId::i4: return std::log(l) * -std::log(p);
    default: break;
  }
  throw std::logic_error("impulse: unknown function id");
}

}  // namespace infoenergy
