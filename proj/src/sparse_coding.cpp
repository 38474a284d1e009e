#include "netsparse/sparse_coding.hpp"

#include <algorithm>
#include <cmath>

#include "netsparse/errors.hpp"
#include "netsparse/linalg.hpp"

namespace netsparse {

namespace {

Eigen::MatrixXd gather_columns(const Eigen::MatrixXd& d, const std::vector<int>& idx) {
  Eigen::MatrixXd sub(d.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) sub.col(static_cast<Eigen::Index>(j)) = d.col(idx[j]);
  return sub;
}

}  // namespace

SparseCode omp(const Eigen::MatrixXd& dictionary, const Eigen::VectorXd& target,
               const OmpOptions& opts) {
  if (!linalg::all_finite(dictionary) || !linalg::all_finite(target))
    throw NonFiniteInput("omp: non-finite dictionary or target");
  if (dictionary.rows() != target.size())
    throw DimensionMismatch("omp: dictionary rows do not match target length");

  const Eigen::Index n = dictionary.rows();
  const Eigen::Index m = dictionary.cols();
  const int cap = opts.max_iters > 0 ? opts.max_iters : static_cast<int>(std::min(n, m));

  SparseCode code;
  code.coefficients = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd residual = target;
  std::vector<char> selected(static_cast<std::size_t>(m), 0);

  double rnorm = residual.norm();
  while (rnorm >= opts.residual_tol && static_cast<int>(code.support.size()) < cap) {
    const Eigen::VectorXd corr = dictionary.transpose() * residual;
    int best = -1;
    double best_score = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      if (selected[static_cast<std::size_t>(i)]) continue;
      const double score = opts.signed_correlation ? corr(i) : std::abs(corr(i));
      if (score > best_score) {
        best_score = score;
        best = static_cast<int>(i);
      }
    }
    // residual orthogonal to every remaining column: stop
    if (best < 0 || std::abs(corr(best)) < opts.no_progress_factor * rnorm) break;

    selected[static_cast<std::size_t>(best)] = 1;
    code.support.push_back(best);

    const Eigen::MatrixXd sub = gather_columns(dictionary, code.support);
    const Eigen::VectorXd ys = linalg::solve_min_norm(sub, target, opts.sv_rcond);
    code.coefficients.setZero();
    for (std::size_t j = 0; j < code.support.size(); ++j)
      code.coefficients(code.support[j]) = ys(static_cast<Eigen::Index>(j));
    residual = target - sub * ys;
    rnorm = residual.norm();
  }
  code.residual_norm = rnorm;
  return code;
}

SparseCode support_least_squares(const Eigen::MatrixXd& dictionary,
                                 const std::vector<int>& support,
                                 const Eigen::VectorXd& target, double sv_rcond) {
  if (!linalg::all_finite(dictionary) || !linalg::all_finite(target))
    throw NonFiniteInput("support_least_squares: non-finite dictionary or target");
  if (dictionary.rows() != target.size())
    throw DimensionMismatch("support_least_squares: dictionary rows do not match target length");
  for (int i : support)
    if (i < 0 || i >= dictionary.cols())
      throw DimensionMismatch("support_least_squares: support index out of range");

  SparseCode code;
  code.coefficients = Eigen::VectorXd::Zero(dictionary.cols());
  code.support = support;
  if (support.empty()) {
    code.residual_norm = target.norm();
    return code;
  }
  const Eigen::MatrixXd sub = gather_columns(dictionary, support);
  const Eigen::VectorXd v = linalg::solve_min_norm(sub, target, sv_rcond);
  for (std::size_t j = 0; j < support.size(); ++j)
    code.coefficients(support[j]) = v(static_cast<Eigen::Index>(j));
  code.residual_norm = (target - sub * v).norm();
  return code;
}

}  // namespace netsparse
