#include "oosmds/proximity.hpp"

#include <cmath>
#include <sstream>

namespace oosmds::proximity {

namespace {

constexpr double kSymmetryTol = 1e-12;

void require_square(const Eigen::MatrixXd& raw, const char* what) {
  if (raw.rows() != raw.cols() || raw.rows() < 1) {
    std::ostringstream msg;
    msg << what << ": expected a square matrix, got " << raw.rows() << "x" << raw.cols();
    throw Error(errc::non_square, msg.str());
  }
}

Eigen::MatrixXd symmetrize_checked(const Eigen::MatrixXd& raw, const char* what) {
  require_square(raw, what);
  const Eigen::Index n = raw.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(raw(i, j) - raw(j, i)) > kSymmetryTol) {
        std::ostringstream msg;
        msg << what << ": entries (" << i << "," << j << ") and (" << j << "," << i
            << ") differ by " << std::abs(raw(i, j) - raw(j, i))
            << " (tolerance " << kSymmetryTol << ")";
        throw Error(errc::asymmetric_beyond_tolerance, msg.str());
      }
    }
  }
  return 0.5 * (raw + raw.transpose());
}

} // namespace

DissimilarityMatrix DissimilarityMatrix::squared() const {
  DissimilarityMatrix out(*this);
  out.values_ = values_.cwiseProduct(values_);
  return out;
}

DissimilarityMatrix validate_dissimilarity(const Eigen::MatrixXd& raw) {
  Eigen::MatrixXd values = symmetrize_checked(raw, "dissimilarity matrix");
  const Eigen::Index n = values.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (raw(i, j) < 0.0) {
        std::ostringstream msg;
        msg << "dissimilarity matrix: negative entry " << raw(i, j) << " at (" << i << "," << j
            << ")";
        throw Error(errc::negative_entry, msg.str());
      }
    }
    if (std::abs(values(i, i)) > kSymmetryTol) {
      std::ostringstream msg;
      msg << "dissimilarity matrix: nonzero diagonal entry " << values(i, i) << " at index " << i;
      throw Error(errc::nonzero_diagonal, msg.str());
    }
    values(i, i) = 0.0;
  }
  return DissimilarityMatrix(std::move(values));
}

SimilarityMatrix validate_similarity(const Eigen::MatrixXd& raw, bool allow_indefinite) {
  Eigen::MatrixXd values = symmetrize_checked(raw, "similarity matrix");
  const Eigen::Index n = values.rows();
  bool loose = false;
  for (Eigen::Index i = 0; i < n && !loose; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (values(i, j) < 0.0 || values(i, j) > values(i, i) + kSymmetryTol ||
          values(i, j) > values(j, j) + kSymmetryTol) {
        loose = true;
        break;
      }
    }
  }
  if (loose && !allow_indefinite) {
    throw Error(errc::similarity_bound_violation,
                "similarity matrix: entries violate 0 <= gamma_ij <= gamma_ii "
                "(pass allow_indefinite to accept)");
  }
  return SimilarityMatrix(std::move(values), loose);
}

OosRawBlock validate_oos_block(const Eigen::MatrixXd& a2, const Eigen::MatrixXd& alpha2) {
  if (a2.size() == 0 || a2.cols() < 1) {
    throw Error(errc::dimension_mismatch, "oos block: a2 must be n x k with k >= 1");
  }
  if (alpha2.rows() != a2.cols() || alpha2.cols() != a2.cols()) {
    std::ostringstream msg;
    msg << "oos block: alpha2 is " << alpha2.rows() << "x" << alpha2.cols() << " but a2 has "
        << a2.cols() << " columns";
    throw Error(errc::dimension_mismatch, msg.str());
  }
  if ((a2.array() < 0.0).any()) {
    throw Error(errc::negative_entry, "oos block: negative entry in a2");
  }
  Eigen::MatrixXd alpha = symmetrize_checked(alpha2, "oos block alpha2");
  for (Eigen::Index i = 0; i < alpha.rows(); ++i) {
    for (Eigen::Index j = 0; j < alpha.cols(); ++j) {
      if (alpha(i, j) < 0.0) {
        throw Error(errc::negative_entry, "oos block: negative entry in alpha2");
      }
    }
    if (std::abs(alpha(i, i)) > kSymmetryTol) {
      throw Error(errc::nonzero_diagonal, "oos block: alpha2 diagonal must be zero");
    }
    alpha(i, i) = 0.0;
  }
  return OosRawBlock{a2, std::move(alpha)};
}

Eigen::MatrixXd double_center(const DissimilarityMatrix& delta2) {
  const Eigen::MatrixXd& a = delta2.values();
  const Eigen::Index n = a.rows();
  const Eigen::VectorXd row_means = a.rowwise().mean();
  const double grand = row_means.mean();
  Eigen::MatrixXd b(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      b(i, j) = -0.5 * (a(i, j) - row_means(i) - row_means(j) + grand);
    }
  }
  return b;
}

Eigen::MatrixXd center_similarity(const SimilarityMatrix& gamma) {
  const Eigen::MatrixXd& g = gamma.values();
  const Eigen::Index n = g.rows();
  const Eigen::VectorXd row_means = g.rowwise().mean();
  const double grand = row_means.mean();
  Eigen::MatrixXd b(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      b(i, j) = g(i, j) - row_means(i) - row_means(j) + grand;
    }
  }
  return b;
}

CenteringStats centering_stats(const DissimilarityMatrix& delta2) {
  CenteringStats stats;
  stats.row_means = delta2.values().rowwise().mean();
  stats.grand_mean = stats.row_means.mean();
  return stats;
}

CenteredVector centered_from_stats(const CenteringStats& stats, const Eigen::VectorXd& new_sq,
                                   double new_self_sq) {
  const Eigen::Index n = stats.row_means.size();
  if (new_sq.size() != n) {
    std::ostringstream msg;
    msg << "centered_from_stats: expected " << n << " new squared dissimilarities, got "
        << new_sq.size();
    throw Error(errc::dimension_mismatch, msg.str());
  }
  const double new_mean = new_sq.mean();
  CenteredVector out;
  out.b.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.b(i) = -0.5 * (new_sq(i) - stats.row_means(i) - new_mean + stats.grand_mean);
  }
  out.beta = -0.5 * (new_self_sq - 2.0 * new_mean + stats.grand_mean);
  return out;
}

CenteredVector dissim_to_centered_sim(const DissimilarityMatrix& delta2,
                                      const Eigen::VectorXd& new_sq, double new_self_sq) {
  return centered_from_stats(centering_stats(delta2), new_sq, new_self_sq);
}

CenteredOosData tau_w(const Eigen::MatrixXd& A2, Eigen::Index n) {
  require_square(A2, "tau_w");
  const Eigen::Index total = A2.rows();
  if (n < 1 || total <= n) {
    std::ostringstream msg;
    msg << "tau_w: need 1 <= n < " << total << " (augmented size), got n = " << n;
    throw Error(errc::dimension_mismatch, msg.str());
  }
  const Eigen::Index k = total - n;
  // means over the first n entries of each row/column, w = (1,..,1,0,..,0)/n
  Eigen::VectorXd m(total);
  for (Eigen::Index i = 0; i < total; ++i) {
    m(i) = A2.row(i).head(n).mean();
  }
  const double mm = m.head(n).mean();
  Eigen::MatrixXd centered(total, total);
  for (Eigen::Index i = 0; i < total; ++i) {
    for (Eigen::Index j = 0; j < total; ++j) {
      centered(i, j) = -0.5 * (A2(i, j) - m(i) - m(j) + mm);
    }
  }
  CenteredOosData out;
  out.gram = centered.topLeftCorner(n, n);
  out.cross = centered.topRightCorner(n, k);
  out.self = centered.bottomRightCorner(k, k);
  return out;
}

double beta_shortcut(const DissimilarityMatrix& delta2, const Eigen::VectorXd& a2_col) {
  if (a2_col.size() != delta2.size()) {
    std::ostringstream msg;
    msg << "beta_shortcut: expected " << delta2.size() << " entries, got " << a2_col.size();
    throw Error(errc::dimension_mismatch, msg.str());
  }
  return a2_col.mean() - delta2.values().mean() / 2.0;
}

CenteredVector gamma_tilde_oos(const SimilarityMatrix& gamma, const Eigen::VectorXd& g_new,
                               double g_self) {
  const Eigen::Index n = gamma.size();
  if (g_new.size() != n) {
    std::ostringstream msg;
    msg << "gamma_tilde_oos: expected " << n << " similarities, got " << g_new.size();
    throw Error(errc::dimension_mismatch, msg.str());
  }
  const Eigen::VectorXd row_means = gamma.values().rowwise().mean();
  const double grand = row_means.mean();
  const double new_mean = g_new.mean();
  CenteredVector out;
  out.b.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.b(i) = g_new(i) - row_means(i) - new_mean + grand;
  }
  out.beta = g_self - 2.0 * new_mean + grand;
  return out;
}

Eigen::MatrixXd assemble_augmented(const DissimilarityMatrix& delta2, const OosRawBlock& block) {
  const Eigen::Index n = delta2.size();
  if (block.a2.rows() != n) {
    std::ostringstream msg;
    msg << "assemble_augmented: a2 has " << block.a2.rows() << " rows, expected " << n;
    throw Error(errc::dimension_mismatch, msg.str());
  }
  const Eigen::Index k = block.a2.cols();
  Eigen::MatrixXd A2(n + k, n + k);
  A2.topLeftCorner(n, n) = delta2.values();
  A2.topRightCorner(n, k) = block.a2;
  A2.bottomLeftCorner(k, n) = block.a2.transpose();
  A2.bottomRightCorner(k, k) = block.alpha2;
  return A2;
}

} // namespace oosmds::proximity
