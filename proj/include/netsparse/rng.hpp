#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace netsparse::rng {

// splitmix64 finalizer; the basis of both seed derivation and the streams.
constexpr std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ull;

// Domain-separated stream seed: folds (tag, k, subsystem, ...) into the base
// seed so every consumer gets an independent deterministic stream.
inline std::uint64_t derive(std::uint64_t base, std::initializer_list<std::uint64_t> words) {
  std::uint64_t h = mix(base + golden);
  for (std::uint64_t w : words) h = mix(h ^ (w + golden + (h << 6) + (h >> 2)));
  return h;
}

// Counter-based generator (splitmix64 sequence) with Box-Muller normals.
// Identical seeds yield identical sequences on transmitter and receiver.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += golden;
    return mix(state_);
  }

  // uniform in [0, 1)
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] keeps the log finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double two_pi = 6.283185307179586476925286766559;
    spare_ = r * std::sin(two_pi * u2);
    have_spare_ = true;
    return r * std::cos(two_pi * u2);
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

enum Tag : std::uint64_t {
  tag_model_uncertainty = 1,
  tag_initial_state = 2,
  tag_input = 3,
  tag_measurement = 4,
  tag_dictionary_init = 5,
};

}  // namespace netsparse::rng
