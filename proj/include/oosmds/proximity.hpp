#pragma once

#include <Eigen/Core>

#include "oosmds/errors.hpp"

namespace oosmds::proximity {

/// Symmetric nonnegative matrix with zero diagonal. Holds either raw
/// dissimilarities or their entrywise squares; which one is a matter of
/// usage, not of the type.
class DissimilarityMatrix {
public:
  Eigen::Index size() const { return values_.rows(); }
  const Eigen::MatrixXd& values() const { return values_; }

  /// Entrywise square (turns delta into delta_2).
  DissimilarityMatrix squared() const;

  friend DissimilarityMatrix validate_dissimilarity(const Eigen::MatrixXd& raw);

private:
  explicit DissimilarityMatrix(Eigen::MatrixXd values) : values_(std::move(values)) {}
  Eigen::MatrixXd values_;
};

/// Symmetric similarity matrix. By default entries must satisfy
/// 0 <= gamma_ij <= gamma_ii; validated with allow_indefinite the bound
/// check is skipped and loose() reports that the data violated it.
class SimilarityMatrix {
public:
  Eigen::Index size() const { return values_.rows(); }
  const Eigen::MatrixXd& values() const { return values_; }
  bool loose() const { return loose_; }

  friend SimilarityMatrix validate_similarity(const Eigen::MatrixXd& raw, bool allow_indefinite);

private:
  SimilarityMatrix(Eigen::MatrixXd values, bool loose)
      : values_(std::move(values)), loose_(loose) {}
  Eigen::MatrixXd values_;
  bool loose_ = false;
};

/// Squared dissimilarities of k new objects: a2 against the n in-sample
/// objects (n x k) and alpha2 among themselves (k x k, zero diagonal).
struct OosRawBlock {
  Eigen::MatrixXd a2;
  Eigen::MatrixXd alpha2;
};

/// Blocks of the centered augmented Gram matrix [[B, b], [b^t, beta]].
struct CenteredOosData {
  Eigen::MatrixXd gram;  // n x n
  Eigen::MatrixXd cross; // n x k
  Eigen::MatrixXd self;  // k x k
};

/// Centered cross-similarities of a single new object.
struct CenteredVector {
  Eigen::VectorXd b;
  double beta = 0.0;
};

/// Row means and grand mean of a squared-dissimilarity matrix; everything
/// the centering formulas need besides the new object's own data.
struct CenteringStats {
  Eigen::VectorXd row_means;
  double grand_mean = 0.0;
};

/// Checks squareness, symmetry (absolute tolerance 1e-12, then hard
/// symmetrization (A + A^t)/2), nonnegativity and zero diagonal.
DissimilarityMatrix validate_dissimilarity(const Eigen::MatrixXd& raw);

SimilarityMatrix validate_similarity(const Eigen::MatrixXd& raw, bool allow_indefinite = false);

OosRawBlock validate_oos_block(const Eigen::MatrixXd& a2, const Eigen::MatrixXd& alpha2);

/// B = -1/2 P Delta_2 P with P = I - ee^t/n. Input is interpreted as
/// entrywise-squared dissimilarities.
Eigen::MatrixXd double_center(const DissimilarityMatrix& delta2);

/// B = P Gamma P.
Eigen::MatrixXd center_similarity(const SimilarityMatrix& gamma);

CenteringStats centering_stats(const DissimilarityMatrix& delta2);

/// Centered cross/self similarities of one new object computed from
/// precomputed in-sample stats. Shares its arithmetic with
/// dissim_to_centered_sim so stored stats reproduce results bit-for-bit.
CenteredVector centered_from_stats(const CenteringStats& stats, const Eigen::VectorXd& new_sq,
                                   double new_self_sq = 0.0);

/// b_i = gamma~(xi_i, eta) and beta = gamma~(eta, eta) from squared
/// dissimilarities, i.e. the -1/2 [d2 - row mean - new mean + grand mean]
/// conversion.
CenteredVector dissim_to_centered_sim(const DissimilarityMatrix& delta2,
                                      const Eigen::VectorXd& new_sq, double new_self_sq = 0.0);

/// Weighted double centering tau_w(A2) = -1/2 (I - ew^t) A2 (I - we^t)
/// with w = (1,...,1,0,...,0)/n, applied to the augmented matrix
/// [[Delta_2, a2], [a2^t, alpha2]]. The leading n x n block equals
/// double_center(Delta_2); the centering stays anchored at the original
/// n objects.
CenteredOosData tau_w(const Eigen::MatrixXd& A2, Eigen::Index n);

/// beta = mean(a2) - mean(Delta_2)/2 (single new object).
double beta_shortcut(const DissimilarityMatrix& delta2, const Eigen::VectorXd& a2_col);

/// Centered cross/self similarities of one new object from similarity data.
CenteredVector gamma_tilde_oos(const SimilarityMatrix& gamma, const Eigen::VectorXd& g_new,
                               double g_self);

/// Assembles the augmented squared-dissimilarity matrix consumed by tau_w.
Eigen::MatrixXd assemble_augmented(const DissimilarityMatrix& delta2, const OosRawBlock& block);

} // namespace oosmds::proximity
