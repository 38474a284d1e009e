#pragma once

#include <Eigen/Dense>

namespace netsparse::linalg {

// Moore-Penrose pseudo-inverse via SVD. Singular values below
// rcond * sigma_max are treated as zero.
Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& a, double rcond = 1e-12);

// Largest singular value; zero for empty matrices.
double spectral_norm(const Eigen::MatrixXd& a);

// Minimum-norm least-squares solution of a * x = b.
Eigen::VectorXd solve_min_norm(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                               double rcond = 1e-12);

bool all_finite(const Eigen::Ref<const Eigen::MatrixXd>& a);

}  // namespace netsparse::linalg
