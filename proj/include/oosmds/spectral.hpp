#pragma once

#include <Eigen/Core>

#include "oosmds/errors.hpp"
#include "oosmds/proximity.hpp"

namespace oosmds::spectral {

/// Full symmetric eigendecomposition, eigenvalues sorted descending,
/// eigenvector i in column i. Produced by cyclic Jacobi sweeps, so the
/// output is deterministic for identical input.
struct EigenSystem {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  int sweeps = 0;
  double offdiag_residual = 0.0;
};

/// Rank-d PSD truncation of a centered Gram matrix: the d largest
/// (strictly positive) eigenvalues and their vectors.
struct TruncatedGram {
  Eigen::Index d = 0;
  Eigen::VectorXd top_eigenvalues; // Sigma_d^2, descending
  Eigen::MatrixXd top_vectors;     // U_d, n x d
  bool degenerate_spectrum = false;

  Eigen::VectorXd singular_values() const { return top_eigenvalues.cwiseSqrt(); }
  Eigen::MatrixXd gram() const; // U_d Lambda_d U_d^t
};

/// n x d coordinate matrix of the in-sample embedding.
struct Configuration {
  Eigen::MatrixXd coords;
  Eigen::Index n() const { return coords.rows(); }
  Eigen::Index dim() const { return coords.cols(); }
};

struct CmdsResult {
  Configuration configuration;
  TruncatedGram truncated;
  Eigen::VectorXd full_spectrum; // all eigenvalues of B, descending
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Converges when
/// the off-diagonal Frobenius norm drops below 1e-12 * ||B||_F; throws
/// convergence_failure (with the residual) after 100 sweeps otherwise.
EigenSystem symmetric_eigen(const Eigen::MatrixXd& B);

/// Keeps the d largest eigenvalues; requires d strictly positive ones
/// (above 1e-10 * max|lambda|), otherwise a smaller d is needed and
/// insufficient_positive_spectrum is thrown. Sets degenerate_spectrum when
/// lambda_d and lambda_{d+1} agree within 1e-9 relative.
TruncatedGram truncate_psd(const EigenSystem& es, Eigen::Index d);

/// Classical MDS embedding of squared dissimilarities: X = U_d Sigma_d
/// from B = -1/2 P Delta_2 P. Each column of X is sign-fixed so its entry
/// of largest magnitude is positive (ties broken by lowest row index).
CmdsResult cmds_embed(const proximity::DissimilarityMatrix& delta2, Eigen::Index d);

} // namespace oosmds::spectral
