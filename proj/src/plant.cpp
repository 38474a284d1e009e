#include "netsparse/plant.hpp"

#include <numeric>

#include "netsparse/errors.hpp"
#include "netsparse/rng.hpp"

namespace netsparse {

Eigen::VectorXd step(const SystemModel& model, const Eigen::VectorXd& state,
                     const Eigen::VectorXd& input) {
  if (state.size() != model.nominal_A.cols() ||
      model.nominal_A.rows() != model.uncertainty_A.rows() ||
      model.nominal_A.cols() != model.uncertainty_A.cols())
    throw DimensionMismatch("step: state/dynamics dimensions disagree");
  if (input.size() != model.input_map_E.cols() ||
      model.input_map_E.rows() != model.nominal_A.rows())
    throw DimensionMismatch("step: input dimensions disagree");
  return (model.nominal_A + model.uncertainty_A) * state + model.input_map_E * input;
}

SystemModel build_consensus_model(int L, double alpha, double uncertainty_fraction,
                                  std::uint64_t seed) {
  if (L < 1) throw ConfigError("build_consensus_model: L must be >= 1");
  if (uncertainty_fraction < 0.0)
    throw ConfigError("build_consensus_model: uncertainty_fraction must be >= 0");

  SystemModel model;
  model.nominal_A.setConstant(L, L, alpha);
  model.nominal_A.diagonal().setConstant(1.0 - (L - 1) * alpha);

  model.uncertainty_A = Eigen::MatrixXd::Zero(L, L);
  if (uncertainty_fraction > 0.0) {
    rng::Stream stream(rng::derive(seed, {rng::tag_model_uncertainty}));
    for (int i = 0; i < L; ++i) {
      double row_sum = 0.0;
      for (int j = 0; j < L; ++j) {
        if (i == j) continue;
        const double dev = alpha * uncertainty_fraction * (2.0 * stream.next_unit() - 1.0);
        model.uncertainty_A(i, j) = dev;
        row_sum += dev;
      }
      // the diagonal absorbs the perturbation so each row keeps the
      // consensus structure a_ll = 1 - sum_{j != l} a_lj
      model.uncertainty_A(i, i) = -row_sum;
    }
  }

  model.input_map_E = Eigen::MatrixXd::Identity(L, L);
  model.block_sizes.assign(static_cast<std::size_t>(L), 1);

  rng::Stream init(rng::derive(seed, {rng::tag_initial_state}));
  model.initial_state.resize(L);
  for (int i = 0; i < L; ++i) model.initial_state(i) = init.next_gaussian();
  return model;
}

Eigen::VectorXd InputProcess::at(int k) const {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(dim);
  rng::Stream stream(rng::derive(seed, {rng::tag_input, static_cast<std::uint64_t>(k)}));
  for (int id : active) {
    if (id < 1 || id > dim) throw ConfigError("InputProcess: active channel out of range");
    w(id - 1) = stream.next_gaussian();
  }
  return w;
}

std::vector<Eigen::VectorXd> split_blocks(const Eigen::VectorXd& x,
                                          const std::vector<int>& block_sizes) {
  const int total = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  if (total != x.size()) throw DimensionMismatch("split_blocks: block sizes do not sum to n");
  std::vector<Eigen::VectorXd> blocks;
  blocks.reserve(block_sizes.size());
  Eigen::Index offset = 0;
  for (int sz : block_sizes) {
    blocks.push_back(x.segment(offset, sz));
    offset += sz;
  }
  return blocks;
}

}  // namespace netsparse
