#pragma once

#include <array>
#include <functional>
#include <vector>

#include <Eigen/Core>

#include "oosmds/restricted.hpp"

namespace oosmds::oracle {

/// Axis-aligned evaluation grid.
struct GridSpec {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;
  int resolution = 3; // points per axis

  static GridSpec cube(Eigen::Index dim, double lo, double hi, int resolution);
};

struct GridResult {
  Eigen::VectorXd y;
  double value = 0.0;
};

/// Exhaustive grid evaluation of an arbitrary objective followed by one
/// Nelder-Mead polish from the best grid point. Dimension capped at 4.
GridResult grid_min_fn(const std::function<double(const Eigen::VectorXd&)>& fn,
                       const GridSpec& grid);

/// Brute-force verifier for the quartic objective (d <= 3).
GridResult grid_min(const restricted::OosProblem& p, const GridSpec& grid);

/// Default bounds +-(2 sqrt(max(beta,0)) + 2 r_hat + 1) per axis, covering
/// both norm regimes.
GridSpec default_grid(const restricted::OosProblem& p, int resolution);

/// Stationary points (real roots of the derivative cubic, by closed form)
/// and global minimizer of c4 t^4 + c3 t^3 + c2 t^2 + c1 t + c0, c4 > 0.
struct QuarticStationary {
  std::vector<double> stationary_points;
  double minimizer = 0.0;
  double min_value = 0.0;
};

QuarticStationary quartic_1d_roots(double c4, double c3, double c2, double c1, double c0);

/// Self-contained reproduction of the rotating-hyperplane characterization
/// on the fixed three-point demo data xi1 = (-1,0), xi2 = (1,0),
/// eta = (0,9): f(theta, y) = ||M V(theta) - M(y)||_F^2.
struct HyperplaneDemo {
  struct StationaryPoint {
    double theta = 0.0;
    double y = 0.0;
    double value = 0.0;
    double grad_norm = 0.0;
    std::array<double, 2> hessian_eigenvalues{};
    bool is_saddle = false;
  };

  StationaryPoint saddle;                     // (0, 0), the projection point
  std::array<StationaryPoint, 2> minimizers;  // cos(theta) = 1/27, y = 6 sin(theta)
  double cos_theta_star = 0.0;
  double out_of_sample_value = 0.0;           // |y_*| = 1.5 |y| after undoing the translation
};

HyperplaneDemo pca_hyperplane_demo();

/// f(theta, y) evaluated from the demo matrices themselves (used to
/// cross-check the closed-form expansion).
double hyperplane_demo_objective(double theta, double y);

} // namespace oosmds::oracle
