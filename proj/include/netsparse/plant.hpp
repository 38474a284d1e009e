#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace netsparse {

// Interconnected uncertain LTI system x(k+1) = (A + Atilde) x(k) + E w(k),
// with per-subsystem block structure.
struct SystemModel {
  Eigen::MatrixXd nominal_A;
  Eigen::MatrixXd uncertainty_A;
  Eigen::MatrixXd input_map_E;  // block diagonal per block_sizes
  std::vector<int> block_sizes;
  Eigen::VectorXd initial_state;

  int state_dim() const { return static_cast<int>(nominal_A.rows()); }
  int input_dim() const { return static_cast<int>(input_map_E.cols()); }
};

Eigen::VectorXd step(const SystemModel& model, const Eigen::VectorXd& state,
                     const Eigen::VectorXd& input);

// Consensus-coupled scalar subsystems: off-diagonal couplings alpha, diagonal
// 1 - (L-1) alpha, each coupling perturbed uniformly within
// +-uncertainty_fraction of nominal (diagonal recomputed so rows keep the
// consensus structure). E identity, initial state standard normal.
SystemModel build_consensus_model(int L, double alpha, double uncertainty_fraction,
                                  std::uint64_t seed);

// Exogenous input: iid N(0,1) on the active subsystem channels, zero elsewhere.
struct InputProcess {
  std::vector<int> active;  // 1-based subsystem indices
  std::uint64_t seed = 0;
  int dim = 0;

  Eigen::VectorXd at(int k) const;
};

std::vector<Eigen::VectorXd> split_blocks(const Eigen::VectorXd& x,
                                          const std::vector<int>& block_sizes);

}  // namespace netsparse
