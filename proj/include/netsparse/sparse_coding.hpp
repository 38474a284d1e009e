#pragma once

#include <Eigen/Dense>
#include <vector>

namespace netsparse {

// Sparse coefficient vector with explicit support. Coefficients outside the
// support are exactly zero.
struct SparseCode {
  Eigen::VectorXd coefficients;
  std::vector<int> support;  // omp(): in selection order; least squares: as given
  double residual_norm = 0.0;
};

struct OmpOptions {
  double residual_tol = 1e-6;
  int max_iters = 0;                // 0 -> min(rows, cols)
  bool signed_correlation = false;  // literal argmax D_i^T r instead of argmax |D_i^T r|
  double no_progress_factor = 1e-12;
  double sv_rcond = 1e-12;
};

// Orthogonal matching pursuit: greedily selects the column with the largest
// residual correlation (ties broken by lowest index), refits by least squares
// on the selected support, and stops once the residual norm drops below
// residual_tol, the support reaches max_iters, or no column makes progress.
SparseCode omp(const Eigen::MatrixXd& dictionary, const Eigen::VectorXd& target,
               const OmpOptions& opts);

// Least-squares fit restricted to the given support; minimum-norm solution on
// rank-deficient subproblems. Empty support yields the zero code.
SparseCode support_least_squares(const Eigen::MatrixXd& dictionary,
                                 const std::vector<int>& support,
                                 const Eigen::VectorXd& target, double sv_rcond = 1e-12);

}  // namespace netsparse
