#include "netsparse/transmitter.hpp"

#include <cmath>
#include <cstring>

#include "netsparse/errors.hpp"
#include "netsparse/rng.hpp"

namespace netsparse {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_f64(std::vector<std::uint8_t>& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
}

std::uint32_t get_u32(const std::vector<std::uint8_t>& in, std::size_t& at) {
  if (at + 4 > in.size()) throw DimensionMismatch("frame_decode: truncated record");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(in[at++]) << (8 * i);
  return v;
}

double get_f64(const std::vector<std::uint8_t>& in, std::size_t& at) {
  if (at + 8 > in.size()) throw DimensionMismatch("frame_decode: truncated record");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(in[at++]) << (8 * i);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

}  // namespace

std::uint64_t CodecParams::digest() const {
  auto fold = [](std::uint64_t h, std::uint64_t w) { return rng::mix(h ^ (w + rng::golden + (h << 6) + (h >> 2))); };
  auto bits = [](double v) {
    std::uint64_t b;
    std::memcpy(&b, &v, 8);
    return b;
  };
  std::uint64_t h = 0x6e657473ull;  // arbitrary non-zero start
  h = fold(h, static_cast<std::uint64_t>(m));
  h = fold(h, static_cast<std::uint64_t>(h_backward));
  h = fold(h, static_cast<std::uint64_t>(h_forward));
  h = fold(h, bits(omp_tol));
  h = fold(h, bits(ridge));
  h = fold(h, bits(convergence_tol));
  h = fold(h, static_cast<std::uint64_t>(max_outer_iters));
  h = fold(h, bits(oversampling));
  h = fold(h, base_seed);
  h = fold(h, static_cast<std::uint64_t>(signed_correlation));
  h = fold(h, bits(zero_tol));
  return h;
}

LearnOptions CodecParams::learn_options(int k) const {
  LearnOptions opts;
  opts.atom_count = m;
  opts.omp_tol = omp_tol;
  opts.ridge = ridge;
  opts.convergence_tol = convergence_tol;
  opts.max_outer_iters = max_outer_iters;
  opts.init_seed = rng::derive(base_seed, {rng::tag_dictionary_init, static_cast<std::uint64_t>(k)});
  opts.signed_correlation = signed_correlation;
  opts.zero_tol = zero_tol;
  opts.parallel = parallel;
  return opts;
}

int CodecParams::warmup_steps() const {
  // the prediction columns need one historical state even when h_backward = 0
  return std::max(h_backward, h_forward > 0 ? 1 : 0);
}

std::vector<std::uint8_t> frame_encode(const EncodeOutput& out) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(25 + static_cast<std::size_t>(out.payload.size()) * 8);
  put_u32(bytes, static_cast<std::uint32_t>(out.k));
  bytes.push_back(static_cast<std::uint8_t>(out.mode));
  put_u32(bytes, static_cast<std::uint32_t>(out.p));
  put_u32(bytes, static_cast<std::uint32_t>(out.sparsity));
  put_f64(bytes, out.delta_s);
  put_u32(bytes, static_cast<std::uint32_t>(out.payload.size()));
  for (Eigen::Index i = 0; i < out.payload.size(); ++i) put_f64(bytes, out.payload(i));
  return bytes;
}

EncodeOutput frame_decode(const std::vector<std::uint8_t>& bytes) {
  std::size_t at = 0;
  EncodeOutput out;
  out.k = static_cast<int>(get_u32(bytes, at));
  if (at >= bytes.size()) throw DimensionMismatch("frame_decode: truncated record");
  const std::uint8_t mode = bytes[at++];
  if (mode > 1) throw DimensionMismatch("frame_decode: unknown mode flag");
  out.mode = static_cast<EncodeMode>(mode);
  out.p = static_cast<int>(get_u32(bytes, at));
  out.sparsity = static_cast<int>(get_u32(bytes, at));
  out.delta_s = get_f64(bytes, at);
  const std::uint32_t len = get_u32(bytes, at);
  out.payload.resize(len);
  for (std::uint32_t i = 0; i < len; ++i) out.payload(i) = get_f64(bytes, at);
  if (at != bytes.size()) throw DimensionMismatch("frame_decode: trailing bytes");
  return out;
}

Transmitter::Transmitter(CodecParams params, Eigen::MatrixXd nominal_A)
    : params_(std::move(params)), nominal_A_(std::move(nominal_A)) {}

EncodeOutput Transmitter::encode_step(const Eigen::VectorXd& x, int k) {
  EncodeOutput out;
  out.k = k;

  if (static_cast<int>(history_.size()) < params_.warmup_steps()) {
    out.mode = EncodeMode::full_state;
    out.payload = x;
    history_.push_back(x);
    while (static_cast<int>(history_.size()) > params_.h_backward && params_.h_backward > 0)
      history_.pop_front();
    return out;
  }

  std::vector<Eigen::VectorXd> hist(history_.begin(), history_.end());
  CodecSnapshot snap;
  snap.window = build_window(hist, nominal_A_, params_.h_backward, params_.h_forward);
  snap.dict = learn(snap.window, params_.learn_options(k));
  snap.code = support_least_squares(snap.dict.atoms, snap.dict.active_set, x);
  snap.state = x;

  out.mode = EncodeMode::compressed;
  out.sparsity = snap.dict.sparsity;
  out.delta_s = snap.code.residual_norm;
  out.p = output_dimension(params_.oversampling, out.sparsity, static_cast<int>(x.size()));
  snapshot_ = std::move(snap);

  history_.push_back(x);
  while (static_cast<int>(history_.size()) > std::max(params_.h_backward, 1))
    history_.pop_front();
  return out;
}

int output_dimension(double oversampling, int sparsity, int state_dim) {
  const double raw = oversampling * sparsity;
  // nudge below the product so a value that is mathematically integral does
  // not round up from one ulp of noise
  int p = static_cast<int>(std::ceil(raw - 1e-12 * std::max(1.0, raw)));
  p = std::max(p, 1);
  return std::min(p, state_dim);
}

}  // namespace netsparse
