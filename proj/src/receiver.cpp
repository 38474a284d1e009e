#include "netsparse/receiver.hpp"

#include <numeric>

#include "netsparse/errors.hpp"
#include "netsparse/linalg.hpp"

namespace netsparse {

Receiver::Receiver(CodecParams params, Eigen::MatrixXd nominal_A, std::vector<int> block_sizes)
    : params_(std::move(params)),
      nominal_A_(std::move(nominal_A)),
      block_sizes_(std::move(block_sizes)),
      gen_{params_.base_seed} {}

void Receiver::verify_config(std::uint64_t tx_digest) const {
  if (tx_digest != params_.digest())
    throw SeedMismatch("receiver: parameter digest differs from the transmitter's");
}

Eigen::VectorXd Receiver::decode_step(const EncodeOutput& msg, int k) {
  const int n = std::accumulate(block_sizes_.begin(), block_sizes_.end(), 0);

  if (msg.mode == EncodeMode::full_state) {
    if (msg.payload.size() != n)
      throw DimensionMismatch("decode_step: full-state payload has wrong length");
    est_history_.push_back(msg.payload);
    while (static_cast<int>(est_history_.size()) > std::max(params_.h_backward, 1))
      est_history_.pop_front();
    return msg.payload;
  }

  if (msg.payload.size() != msg.p)
    throw DimensionMismatch("decode_step: measurement payload does not match header p");
  if (static_cast<int>(est_history_.size()) < params_.warmup_steps())
    throw InsufficientHistory("decode_step: compressed message before warm-up finished");

  std::vector<Eigen::VectorXd> hist(est_history_.begin(), est_history_.end());
  CodecSnapshot snap;
  snap.window = build_window(hist, nominal_A_, params_.h_backward, params_.h_forward);
  snap.dict = learn(snap.window, params_.learn_options(k));

  const Eigen::MatrixXd c = assemble_measurement(gen_, k, msg.p, block_sizes_);
  Eigen::VectorXd x_hat;
  if (params_.receiver_omp_recovery) {
    OmpOptions opts;
    opts.residual_tol = params_.omp_tol;
    opts.max_iters = std::min<int>(msg.p, params_.m);
    opts.signed_correlation = params_.signed_correlation;
    snap.code = omp(c * snap.dict.atoms, msg.payload, opts);
    x_hat = snap.dict.atoms * snap.code.coefficients;
  } else {
    if (msg.p < snap.dict.sparsity) ++undersized_;
    snap.code = support_least_squares(c * snap.dict.atoms, snap.dict.active_set, msg.payload);
    x_hat = snap.dict.atoms * snap.code.coefficients;
  }
  snap.state = x_hat;
  snapshot_ = std::move(snap);

  est_history_.push_back(x_hat);
  while (static_cast<int>(est_history_.size()) > std::max(params_.h_backward, 1))
    est_history_.pop_front();
  return x_hat;
}

}  // namespace netsparse
