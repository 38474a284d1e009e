#pragma once

#include <cstdint>
#include <vector>

#include "netsparse/sparse_coding.hpp"

namespace netsparse {

// Training window X(k): the last h_backward states followed by powers of the
// nominal dynamics applied to the most recent state.
struct TrainingWindow {
  Eigen::MatrixXd columns;  // n x (h_backward + h_forward)
  int h_backward = 0;
  int h_forward = 0;
};

TrainingWindow build_window(const std::vector<Eigen::VectorXd>& history,
                            const Eigen::MatrixXd& nominal_A, int h_backward,
                            int h_forward);

// Learned sparsifying basis. Active columns have unit norm; code_matrix is
// rescaled after normalization so atoms * code_matrix equals the learned
// factorization.
struct Dictionary {
  Eigen::MatrixXd atoms;        // n x m
  std::vector<int> active_set;  // ascending indices of columns with norm > zero_tol
  int sparsity = 0;             // |active_set|
  Eigen::MatrixXd code_matrix;  // m x H
  bool converged = true;
  int iterations = 0;
};

struct LearnOptions {
  int atom_count = 1;
  double omp_tol = 1e-6;
  double ridge = 1e-6;
  double convergence_tol = 1e-6;  // Frobenius norm on successive dictionaries
  int max_outer_iters = 50;
  std::uint64_t init_seed = 0;  // seeds the random block when atom_count > H
  bool signed_correlation = false;
  double zero_tol = 1e-8;  // pre-normalization active-column threshold
  bool parallel = true;
  int omp_max_iters = 0;  // 0 -> min(n, atom_count)
};

// Greedy alternating basis optimization: initialize from the window columns,
// then alternate per-column OMP coding with the ridge dictionary update until
// the dictionary stops moving.
Dictionary learn(const TrainingWindow& window, const LearnOptions& opts);

// Ridge update X Y^T (Y Y^T + ridge I)^-1; dispatches to whichever Gram form
// is smaller. Both forms agree algebraically.
Eigen::MatrixXd dictionary_update(const Eigen::MatrixXd& window_matrix,
                                  const Eigen::MatrixXd& codes, double ridge);
Eigen::MatrixXd dictionary_update_code_gram(const Eigen::MatrixXd& window_matrix,
                                            const Eigen::MatrixXd& codes, double ridge);
Eigen::MatrixXd dictionary_update_window_gram(const Eigen::MatrixXd& window_matrix,
                                              const Eigen::MatrixXd& codes, double ridge);

std::vector<int> active_set(const Eigen::MatrixXd& atoms, double zero_tol);

// Sparse-codes every column of `targets`. Columns are independent, so the
// OpenMP path is bit-identical to the serial one.
Eigen::MatrixXd code_columns(const Eigen::MatrixXd& dictionary,
                             const Eigen::MatrixXd& targets, const OmpOptions& opts,
                             bool parallel);

}  // namespace netsparse
