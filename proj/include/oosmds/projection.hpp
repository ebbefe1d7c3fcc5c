#pragma once

#include <Eigen/Core>

#include "oosmds/proximity.hpp"
#include "oosmds/spectral.hpp"

namespace oosmds::projection {

enum class Formula { spectral, ols, landmark };

const char* formula_name(Formula f) noexcept;

struct ProjectionResult {
  Eigen::VectorXd y_hat;
  Formula formula = Formula::spectral;
  double residual_norm = 0.0; // ||X y_hat - b||
};

/// y = Sigma_d^{-1} U_d^t b.
ProjectionResult project_spectral(const spectral::TruncatedGram& tg, const Eigen::VectorXd& b);

/// y solves the normal equations X^tX y = X^t b.
ProjectionResult project_ols(const spectral::Configuration& config, const Eigen::VectorXd& b);

/// Distance-based triangulation y = -1/2 Sigma_d^{-1} U_d^t (a2 - Delta_2 e / n);
/// algebraically the same point as the other two formulas.
ProjectionResult project_landmark(const spectral::Configuration& config,
                                  const spectral::TruncatedGram& tg,
                                  const proximity::DissimilarityMatrix& delta2,
                                  const Eigen::VectorXd& a2_col);

} // namespace oosmds::projection
