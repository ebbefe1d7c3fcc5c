#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "oosmds/errors.hpp"
#include "oosmds/spectral.hpp"

namespace oosmds::restricted {

/// Fixed configuration X, centered cross-similarity vector b and centered
/// self-similarity beta of one new object: the data of
///   min_y  2 ||Xy - b||^2 + (y^t y - beta)^2.
struct OosProblem {
  spectral::Configuration config;
  Eigen::VectorXd b;
  double beta = 0.0;

  Eigen::Index n() const { return config.n(); }
  Eigen::Index dim() const { return config.dim(); }
  const Eigen::MatrixXd& X() const { return config.coords; }
};

/// Multi-object variant: bBlock is n x k, betaBlock is k x k symmetric;
/// the objective is 2 ||XY^t - b||_F^2 + ||YY^t - beta||_F^2 over k x d Y.
struct BatchProblem {
  spectral::Configuration config;
  Eigen::MatrixXd bBlock;
  Eigen::MatrixXd betaBlock;

  Eigen::Index n() const { return config.n(); }
  Eigen::Index dim() const { return config.dim(); }
  Eigen::Index k() const { return bBlock.cols(); }
  const Eigen::MatrixXd& X() const { return config.coords; }
};

struct SolveOptions {
  double tol = 1e-10;
  int max_iter = 200;
  int n_starts = 8;
  std::uint64_t seed = 20240801ull;
};

/// One point of the ridge trace. When lambda falls within the guard band
/// of an eigenvalue of -X^tX the system is not solved: singular_flag is
/// set and y is absent (solution() then throws near_singular). Arc points
/// reconstructed by interpolation carry a y but keep the flag.
struct RidgePoint {
  double lambda = 0.0;
  std::optional<Eigen::VectorXd> y;
  double phi = 0.0;
  bool singular_flag = false;

  const Eigen::VectorXd& solution() const;
};

struct Diagnostics {
  int iterations = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  bool coincident_point = false;
  std::vector<double> objective_trace; // stress majorization path (winning start)
};

struct EmbeddingResult {
  Eigen::VectorXd y_star;
  std::optional<double> lambda_star;
  double objective = 0.0;
  bool hard_case = false;
  Diagnostics diagnostics;
};

/// Ridge trace from lambda = 0 (projection) to lambda* (restricted
/// reconstruction), with interpolated fill-ins near offending lambda.
struct ArcTrace {
  std::vector<RidgePoint> points;
  std::vector<std::size_t> interpolated_indices;
};

/// 2 ||Xy - b||^2 + (y^t y - beta)^2.
double objective(const OosProblem& p, const Eigen::VectorXd& y);

/// 4 X^t (Xy - b) + 4 (y^t y - beta) y.
Eigen::VectorXd objective_gradient(const OosProblem& p, const Eigen::VectorXd& y);

/// Solves (X^tX + lambda I) y = X^t b through the thin SVD of X,
/// y = sum_i sigma_i (u_i^t b) / (sigma_i^2 + lambda) v_i.
RidgePoint ridge_solve(const OosProblem& p, double lambda);

/// Squared norm of the unconstrained (lambda = 0) minimizer.
double r_hat_squared(const OosProblem& p);

/// Global minimizer of the quartic objective via the lambda-parametrized
/// unidimensional search: positive bracket when beta < r^2, subinterval
/// partition of (-inf, 0] by the eigenvalues of -X^tX when beta > r^2,
/// plus closed-form hard-case candidates along eigenvectors on which X^t b
/// has no component. Ties between global minimizers are broken toward the
/// lexicographically largest y (so with b = 0 the first nonzero coordinate
/// of the result is positive).
EmbeddingResult solve_single(const OosProblem& p, const SolveOptions& opts = {});

/// steps+1 ridge points sampled on the interval between 0 and lambda*;
/// samples inside a guard band are linearly interpolated from the nearest
/// valid neighbors and flagged. Collapses to a single point when
/// lambda* = 0.
ArcTrace arc(const OosProblem& p, const EmbeddingResult& result, int steps);

double batch_objective(const BatchProblem& bp, const Eigen::MatrixXd& Y);

/// 4 [(XY^t - b)^t X + (YY^t - beta) Y].
Eigen::MatrixXd batch_gradient(const BatchProblem& bp, const Eigen::MatrixXd& Y);

/// Multi-start local minimization of the batch objective (projection
/// start, per-column single solves with row-sign patterns, seeded
/// perturbations; Polak-Ribiere descent with exact quartic line search).
/// Returns the best k x d local minimizer found.
Eigen::MatrixXd solve_batch(const BatchProblem& bp, const SolveOptions& opts = {});

/// sum_i (||y - x_i|| - delta_i)^2 for the raw-stress variant.
double stress_objective(const spectral::Configuration& config, const Eigen::VectorXd& deltas,
                        const Eigen::VectorXd& y);

/// Minimizes the out-of-sample raw stress by iterative majorization
/// (single-point Guttman step), multi-start from the projection-style
/// start plus seeded perturbations. The per-iteration stress of the
/// winning start is recorded in diagnostics.objective_trace and is
/// non-increasing.
EmbeddingResult stress_oos(const spectral::Configuration& config, const Eigen::VectorXd& deltas,
                           const SolveOptions& opts = {});

} // namespace oosmds::restricted
