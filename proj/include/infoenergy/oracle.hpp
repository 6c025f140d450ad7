#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "infoenergy/energy.hpp"

namespace infoenergy {
namespace oracle {

// Random text of n_words with impulses uniform on [0, amplitude].
struct UniformTextSpec {
  std::int64_t n_words = 1;
  double amplitude = 1.0;
  std::uint64_t seed = 0;
};

inline ImpulseSeries gen_uniform_text(const UniformTextSpec& spec) {
  if (spec.n_words < 1) {
    throw std::invalid_argument("gen_uniform_text: n_words must be >= 1");
  }
  if (!(spec.amplitude > 0.0)) {
    throw std::invalid_argument("gen_uniform_text: amplitude must be > 0");
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> dist(0.0, spec.amplitude);
  ImpulseSeries series;
  series.values.reserve(static_cast<std::size_t>(spec.n_words));
  for (std::int64_t i = 0; i < spec.n_words; ++i) {
    series.values.push_back(dist(rng));
  }
  return series;
}

// Closed-form E[IE] for a uniform random text under the two-word window
// (tau = 2, k = infinity): D^2 * [1/3 + (N-1) * 7/6] / N.
inline double expected_uniform_ie(std::int64_t n_words, double amplitude) {
  if (n_words < 1) {
    throw std::invalid_argument("expected_uniform_ie: n_words must be >= 1");
  }
  const double n = static_cast<double>(n_words);
  return amplitude * amplitude * (1.0 / 3.0 + (n - 1.0) * 7.0 / 6.0) / n;
}

// Closed-form ordering energy of a two-word alternating text of even
// cardinality n under tau = 2, k = infinity: ((n-2)/n) * (i1 - i2)^2.
inline double alternating_oe_closed_form(double i1, double i2,
                                         std::int64_t n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument(
        "alternating_oe_closed_form: n must be even and >= 2");
  }
  if (!(i1 >= i2) || !(i2 >= 0.0)) {
    throw std::invalid_argument(
        "alternating_oe_closed_form: need i1 >= i2 >= 0");
  }
  const double diff = i1 - i2;
  return (static_cast<double>(n - 2) / static_cast<double>(n)) * diff * diff;
}

inline ImpulseSeries make_alternating_series(double i1, double i2,
                                             std::int64_t n) {
  ImpulseSeries series;
  series.values.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    series.values.push_back(i % 2 == 0 ? i1 : i2);
  }
  return series;
}

// Continuous-time reference for information_energy: impulses sit at integer
// times, the MSF keeps its discrete semantics extended to real lags, and
// the squared LSR is integrated over [0, N) by the midpoint rule. For
// k = infinity the integrand is piecewise constant on unit intervals, so
// any dt dividing 1 reproduces the discrete value exactly.
inline double continuous_ie_oracle(const ImpulseSeries& series,
                                   const MsfParams& params, double dt = 1e-3) {
  validate(params);
  if (series.values.empty()) {
    throw std::invalid_argument("continuous_ie_oracle: empty series");
  }
  if (!(dt > 0.0)) {
    throw std::invalid_argument("continuous_ie_oracle: dt must be positive");
  }
  const auto& values = series.values;
  const std::size_t n = values.size();

  const auto weight = [&params](double lag) -> double {
    if (lag < static_cast<double>(params.tau)) return 1.0;
    if (params.tau == 1 || !std::isfinite(params.k)) return 0.0;
    return std::exp(-params.k * (lag - static_cast<double>(params.tau) + 1.0));
  };

  // Segment start (most recent reset at or before i) for every word.
  std::vector<std::size_t> segment_start(n, 0);
  {
    std::size_t next_reset = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i) {
      while (next_reset < series.resets.size() &&
             series.resets[next_reset] <= i) {
        start = series.resets[next_reset];
        ++next_reset;
      }
      segment_start[i] = start;
    }
  }

  const auto total_steps =
      static_cast<std::int64_t>(std::llround(static_cast<double>(n) / dt));
  const std::int64_t steps = total_steps > 0 ? total_steps : 1;
  const double h = static_cast<double>(n) / static_cast<double>(steps);

  double integral = 0.0;
  for (std::int64_t s = 0; s < steps; ++s) {
    const double t = (static_cast<double>(s) + 0.5) * h;
    std::size_t i = static_cast<std::size_t>(t);
    if (i >= n) i = n - 1;
    double lsr = 0.0;
    for (std::size_t j = i + 1; j-- > segment_start[i];) {
      const double w = weight(t - static_cast<double>(j));
      if (w == 0.0) break;  // non-increasing in lag
      lsr += w * values[j];
    }
    integral += lsr * lsr * h;
  }
  return integral / static_cast<double>(n);
}

}  // namespace oracle
}  // namespace infoenergy
