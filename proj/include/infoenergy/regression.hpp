#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "infoenergy/features.hpp"

namespace infoenergy {

// Data-matrix row layouts for date estimation:
//   basic:    <1, IEo, IEu, IEo*IEu>
//   expanded: <1, IEu, IEo, Z_RATIO, IEu*IEo, IEu*Z_RATIO, IEo*Z_RATIO>
enum class LsqLayout { basic, expanded };

inline std::optional<LsqLayout> parse_lsq_layout(std::string_view s) {
  if (s == "basic") return LsqLayout::basic;
  if (s == "expanded") return LsqLayout::expanded;
  return std::nullopt;
}

inline std::string_view to_string(LsqLayout layout) {
  return layout == LsqLayout::basic ? "basic" : "expanded";
}

inline constexpr int layout_columns(LsqLayout layout) {
  return layout == LsqLayout::basic ? 4 : 7;
}

inline Eigen::RowVectorXd design_row(const FeatureVector& fv,
                                     LsqLayout layout) {
  if (layout == LsqLayout::basic) {
    Eigen::RowVectorXd row(4);
    row << 1.0, fv.ieo, fv.ieu, fv.ieo * fv.ieu;
    return row;
  }
  if (!fv.z_ratio) {
    throw std::invalid_argument("design_row: expanded layout needs z_ratio");
  }
  const double z = *fv.z_ratio;
  Eigen::RowVectorXd row(7);
  row << 1.0, fv.ieu, fv.ieo, z, fv.ieu * fv.ieo, fv.ieu * z, fv.ieo * z;
  return row;
}

struct LsqModel {
  LsqLayout layout = LsqLayout::basic;
  Eigen::VectorXd coefficients;
};

// Least squares via a rank-revealing orthogonal factorization; rank-deficient
// designs yield the minimum-norm solution.
inline LsqModel fit_date_model(std::span<const FeatureVector> features,
                               std::span<const int> dates, LsqLayout layout) {
  if (features.size() != dates.size()) {
    throw std::invalid_argument("fit_date_model: features/dates size mismatch");
  }
  const int cols = layout_columns(layout);
  const auto rows = static_cast<Eigen::Index>(features.size());
  if (rows < cols) {
    throw std::invalid_argument("fit_date_model: fewer rows than columns");
  }
  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd target(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    design.row(i) = design_row(features[static_cast<std::size_t>(i)], layout);
    target(i) = static_cast<double>(dates[static_cast<std::size_t>(i)]);
  }
  LsqModel model;
  model.layout = layout;
  model.coefficients = design.completeOrthogonalDecomposition().solve(target);
  return model;
}

inline double predict_date(const LsqModel& model, const FeatureVector& fv) {
  return design_row(fv, model.layout).dot(model.coefficients);
}

// Mean absolute error in years.
inline double evaluate_date_model(const LsqModel& model,
                                  std::span<const FeatureVector> features,
                                  std::span<const int> dates) {
  if (features.size() != dates.size()) {
    throw std::invalid_argument(
        "evaluate_date_model: features/dates size mismatch");
  }
  if (features.empty()) {
    throw std::invalid_argument("evaluate_date_model: empty evaluation set");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    acc += std::abs(predict_date(model, features[i]) -
                    static_cast<double>(dates[i]));
  }
  return acc / static_cast<double>(features.size());
}

// Mean squared error of the fitted model on a set; used for the in-sample
// dominance check against the intercept-only predictor.
inline double date_model_mse(const LsqModel& model,
                             std::span<const FeatureVector> features,
                             std::span<const int> dates) {
  if (features.size() != dates.size() || features.empty()) {
    throw std::invalid_argument("date_model_mse: bad evaluation set");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    const double r = predict_date(model, features[i]) -
                     static_cast<double>(dates[i]);
    acc += r * r;
  }
  return acc / static_cast<double>(features.size());
}

}  // namespace infoenergy
