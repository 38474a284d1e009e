#pragma once

#include <deque>
#include <optional>

#include "netsparse/comm_graph.hpp"
#include "netsparse/transmitter.hpp"

namespace netsparse {

class Receiver {
 public:
  Receiver(CodecParams params, Eigen::MatrixXd nominal_A, std::vector<int> block_sizes);

  // Throws SeedMismatch when the transmitter's parameter digest differs.
  void verify_config(std::uint64_t tx_digest) const;

  // Warm-up messages relay the state exactly. Compressed messages rebuild the
  // estimate window, relearn the basis, regenerate C(k) from the shared seed,
  // and solve the support-restricted least squares against y(k).
  Eigen::VectorXd decode_step(const EncodeOutput& msg, int k);

  const std::optional<CodecSnapshot>& last_snapshot() const { return snapshot_; }
  const std::deque<Eigen::VectorXd>& history() const { return est_history_; }
  // compressed steps where p(k) < s_hat(k) forced a minimum-norm solution
  int undersized_recoveries() const { return undersized_; }

 private:
  CodecParams params_;
  Eigen::MatrixXd nominal_A_;
  std::vector<int> block_sizes_;
  SeededMatrixGen gen_;
  std::deque<Eigen::VectorXd> est_history_;
  std::optional<CodecSnapshot> snapshot_;
  int undersized_ = 0;
};

}  // namespace netsparse
