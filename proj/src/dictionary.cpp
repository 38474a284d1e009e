#include "netsparse/dictionary.hpp"

#include <algorithm>
#include <cmath>

#include "netsparse/errors.hpp"
#include "netsparse/linalg.hpp"
#include "netsparse/rng.hpp"

namespace netsparse {

TrainingWindow build_window(const std::vector<Eigen::VectorXd>& history,
                            const Eigen::MatrixXd& nominal_A, int h_backward,
                            int h_forward) {
  if (h_backward < 0 || h_forward < 0 || h_backward + h_forward < 1)
    throw ConfigError("build_window: need h_backward + h_forward >= 1");
  const int needed = std::max(h_backward, h_forward > 0 ? 1 : 0);
  if (static_cast<int>(history.size()) < needed)
    throw InsufficientHistory("build_window: history shorter than required");

  const Eigen::Index n = history.back().size();
  TrainingWindow w;
  w.h_backward = h_backward;
  w.h_forward = h_forward;
  w.columns.resize(n, h_backward + h_forward);
  const std::size_t first = history.size() - static_cast<std::size_t>(h_backward);
  for (int j = 0; j < h_backward; ++j) w.columns.col(j) = history[first + static_cast<std::size_t>(j)];
  Eigen::VectorXd v = history.back();
  for (int j = 0; j < h_forward; ++j) {
    v = nominal_A * v;
    w.columns.col(h_backward + j) = v;
  }
  return w;
}

Eigen::MatrixXd dictionary_update_code_gram(const Eigen::MatrixXd& window_matrix,
                                            const Eigen::MatrixXd& codes, double ridge) {
  const Eigen::Index m = codes.rows();
  Eigen::MatrixXd gram = codes * codes.transpose();
  gram.diagonal().array() += ridge;
  // D = X Y^T G^-1  ->  solve G D^T = (X Y^T)^T
  const Eigen::MatrixXd xyt = window_matrix * codes.transpose();
  return gram.ldlt().solve(xyt.transpose()).transpose();
}

Eigen::MatrixXd dictionary_update_window_gram(const Eigen::MatrixXd& window_matrix,
                                              const Eigen::MatrixXd& codes, double ridge) {
  Eigen::MatrixXd gram = codes.transpose() * codes;
  gram.diagonal().array() += ridge;
  // D = X (ridge I + Y^T Y)^-1 Y^T
  return window_matrix * gram.ldlt().solve(codes.transpose());
}

Eigen::MatrixXd dictionary_update(const Eigen::MatrixXd& window_matrix,
                                  const Eigen::MatrixXd& codes, double ridge) {
  if (ridge <= 0.0) throw ConfigError("dictionary_update: ridge must be positive");
  if (window_matrix.cols() != codes.cols())
    throw DimensionMismatch("dictionary_update: window and codes column counts differ");
  return codes.rows() <= codes.cols()
             ? dictionary_update_code_gram(window_matrix, codes, ridge)
             : dictionary_update_window_gram(window_matrix, codes, ridge);
}

std::vector<int> active_set(const Eigen::MatrixXd& atoms, double zero_tol) {
  std::vector<int> idx;
  for (Eigen::Index j = 0; j < atoms.cols(); ++j)
    if (atoms.col(j).norm() > zero_tol) idx.push_back(static_cast<int>(j));
  return idx;
}

Eigen::MatrixXd code_columns(const Eigen::MatrixXd& dictionary,
                             const Eigen::MatrixXd& targets, const OmpOptions& opts,
                             bool parallel) {
  if (!linalg::all_finite(dictionary) || !linalg::all_finite(targets))
    throw NonFiniteInput("code_columns: non-finite input");
  Eigen::MatrixXd codes(dictionary.cols(), targets.cols());
  const Eigen::Index cols = targets.cols();
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (Eigen::Index i = 0; i < cols; ++i)
      codes.col(i) = omp(dictionary, targets.col(i), opts).coefficients;
  } else {
    for (Eigen::Index i = 0; i < cols; ++i)
      codes.col(i) = omp(dictionary, targets.col(i), opts).coefficients;
  }
  return codes;
}

Dictionary learn(const TrainingWindow& window, const LearnOptions& opts) {
  const Eigen::MatrixXd& x = window.columns;
  const Eigen::Index n = x.rows();
  const Eigen::Index h = x.cols();
  const Eigen::Index m = opts.atom_count;
  if (m < 1 || h < 1) throw ConfigError("learn: need at least one atom and one column");

  // Initialization: window columns, padded with a seeded Gaussian block when
  // there are more atoms than columns.
  Eigen::MatrixXd d(n, m);
  if (m <= h) {
    d = x.leftCols(m);
  } else {
    d.leftCols(h) = x;
    rng::Stream stream(opts.init_seed);
    for (Eigen::Index j = h; j < m; ++j)
      for (Eigen::Index i = 0; i < n; ++i) d(i, j) = stream.next_gaussian();
  }

  OmpOptions omp_opts;
  omp_opts.residual_tol = opts.omp_tol;
  omp_opts.max_iters = opts.omp_max_iters > 0 ? opts.omp_max_iters
                                              : static_cast<int>(std::min(n, m));
  omp_opts.signed_correlation = opts.signed_correlation;

  Dictionary result;
  Eigen::MatrixXd codes;
  for (int iter = 0; iter < opts.max_outer_iters; ++iter) {
    codes = code_columns(d, x, omp_opts, opts.parallel);
    const Eigen::MatrixXd d_new = dictionary_update(x, codes, opts.ridge);
    const double delta = (d_new - d).norm();
    d = d_new;
    result.iterations = iter + 1;
    if (delta < opts.convergence_tol) {
      result.converged = true;
      break;
    }
    result.converged = false;
  }

  // Normalize active columns; rescale code rows so the product is unchanged.
  result.active_set = active_set(d, opts.zero_tol);
  result.sparsity = static_cast<int>(result.active_set.size());
  for (int j : result.active_set) {
    const double norm = d.col(j).norm();
    d.col(j) /= norm;
    codes.row(j) *= norm;
  }
  result.atoms = std::move(d);
  result.code_matrix = std::move(codes);
  return result;
}

}  // namespace netsparse
