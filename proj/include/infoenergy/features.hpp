#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "infoenergy/energy.hpp"
#include "infoenergy/zipf.hpp"

namespace infoenergy {

enum class EnergyMode { per_sentence, per_document };

inline std::optional<EnergyMode> parse_energy_mode(std::string_view s) {
  if (s == "per_sentence") return EnergyMode::per_sentence;
  if (s == "per_document") return EnergyMode::per_document;
  return std::nullopt;
}

inline std::string_view to_string(EnergyMode mode) {
  return mode == EnergyMode::per_sentence ? "per_sentence" : "per_document";
}

// vIE = <IEo, IEu>, optionally expanded with Z_RATIO.
struct FeatureVector {
  double ieo = 0.0;
  double ieu = 0.0;
  std::optional<double> z_ratio;
};

struct FeatureSpec {
  ImpulseFnId fn = ImpulseFnId::i1;
  MsfParams params;
  EnergyMode mode = EnergyMode::per_document;
  bool with_z = false;
  const std::set<std::string>* stoplist = nullptr;  // nullptr -> builtin
};

inline FeatureVector extract_features(const Document& chunk,
                                      const FeatureSpec& spec,
                                      const VocabModel& model) {
  const EnergyResult energy =
      spec.mode == EnergyMode::per_sentence
          ? per_sentence_energy(chunk, spec.fn, spec.params, model)
          : per_document_energy(chunk, spec.fn, spec.params, model);
  FeatureVector fv;
  fv.ieo = energy.ie_ordered;
  fv.ieu = energy.ie_unordered;
  if (spec.with_z) {
    fv.z_ratio = z_ratio(
        chunk, spec.stoplist ? *spec.stoplist : builtin_stopwords());
  }
  return fv;
}

}  // namespace infoenergy
