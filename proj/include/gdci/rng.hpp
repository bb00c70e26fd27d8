#pragma once

#include <cstdint>
#include <random>

namespace gdci {

// Seeded random stream with explicit substream indices. Identical
// (seed, stream_id) pairs reproduce the same draw sequence bit-for-bit on
// any platform: mt19937_64 and seed_seq are fully specified by the standard,
// and all variates below are derived from raw engine words instead of
// std:: distributions (whose output is implementation-defined).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_; }

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits.
  double uniform();

  // Standard normal via Box-Muller; two uniforms per variate.
  double normal();

  bool bernoulli(double p);

  // Child stream keyed by `key`. Distinct keys (and distinct parents) give
  // decorrelated streams; derivation is order-sensitive, so
  // s.substream(a).substream(b) != s.substream(b).substream(a).
  RngStream substream(std::uint64_t key) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace gdci
