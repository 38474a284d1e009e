#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "netsparse/dictionary.hpp"

namespace netsparse {

// Parameters shared verbatim by transmitter and receiver; a digest mismatch
// at session setup means the two sides would learn different bases.
struct CodecParams {
  int m = 1;
  int h_backward = 1;
  int h_forward = 0;
  double omp_tol = 1e-6;
  double ridge = 1e-6;
  double convergence_tol = 1e-6;
  int max_outer_iters = 50;
  double oversampling = 1.3;
  std::uint64_t base_seed = 0;
  bool signed_correlation = false;
  double zero_tol = 1e-8;
  bool parallel = true;
  bool receiver_omp_recovery = false;

  std::uint64_t digest() const;
  LearnOptions learn_options(int k) const;
  int warmup_steps() const;
};

enum class EncodeMode : std::uint8_t { full_state = 0, compressed = 1 };

// Framed record (k, mode, p, s, delta_s, payload). The payload carries the
// full state during warm-up and the measurement vector y(k) afterwards.
struct EncodeOutput {
  int k = 0;
  EncodeMode mode = EncodeMode::full_state;
  int p = 0;
  int sparsity = 0;
  double delta_s = 0.0;
  Eigen::VectorXd payload;
};

// wire format: LE u32 k | u8 mode | u32 p | u32 s | f64 delta_s | u32 len | f64[len]
std::vector<std::uint8_t> frame_encode(const EncodeOutput& out);
EncodeOutput frame_decode(const std::vector<std::uint8_t>& bytes);

// Everything the bound evaluation needs from one compressed step.
struct CodecSnapshot {
  TrainingWindow window;
  Dictionary dict;
  SparseCode code;
  Eigen::VectorXd state;  // x(k) at the transmitter, x_hat(k) at the receiver
};

class Transmitter {
 public:
  Transmitter(CodecParams params, Eigen::MatrixXd nominal_A);

  // Warm-up steps relay the state; afterwards the window is rebuilt, the
  // basis relearned, and the sparse code of x(k) determines (s(k), p(k)).
  EncodeOutput encode_step(const Eigen::VectorXd& x, int k);

  const std::optional<CodecSnapshot>& last_snapshot() const { return snapshot_; }
  const std::deque<Eigen::VectorXd>& history() const { return history_; }
  const CodecParams& params() const { return params_; }

 private:
  CodecParams params_;
  Eigen::MatrixXd nominal_A_;
  std::deque<Eigen::VectorXd> history_;
  std::optional<CodecSnapshot> snapshot_;
};

// ceil(oversampling * sparsity), clamped to [1, state_dim]
int output_dimension(double oversampling, int sparsity, int state_dim);

}  // namespace netsparse
