#pragma once

#include <array>
#include <cstdint>

namespace aovauc {

// Seeded random stream with independent substreams.
//
// A (seed, stream_id) pair always reproduces the same value sequence within
// this implementation. Distinct stream_ids hash to unrelated generator
// states, so workers can each own a private substream and produce results
// that do not depend on scheduling. Backed by xoshiro256++ (period 2^256-1)
// seeded through the splitmix64 finalizer.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t next_u64() noexcept;

  // Uniform draw strictly inside (0, 1); safe to pass to log() or quantiles.
  double uniform01() noexcept;

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t uniform_below(std::uint64_t n);

  // N(mu, sigma^2) via the polar method. sigma == 0 returns mu exactly.
  double normal(double mu = 0.0, double sigma = 1.0);

  // Poisson(lambda); inversion for small lambda, transformed rejection
  // (Hoermann's PTRS) above. lambda == 0 returns 0 exactly.
  std::int64_t poisson(double lambda);

 private:
  std::array<std::uint64_t, 4> state_{};
  std::uint64_t seed_ = 0;
  std::uint64_t stream_id_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_normal_ = false;
};

}  // namespace aovauc
