#pragma once

#include <array>
#include <cstdint>

namespace linklab::rng {

// Philox4x32-10 block cipher: 128-bit counter, 64-bit key, 128-bit output.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// Counter-based stream for one Monte Carlo trial. The pair
// (master_seed, trial_index) pins the entire draw sequence, so results are
// independent of worker count and chunking.
class TrialRng {
  public:
    TrialRng(std::uint64_t master_seed, std::uint64_t trial_index)
        : key_{static_cast<std::uint32_t>(master_seed),
               static_cast<std::uint32_t>(master_seed >> 32)},
          trial_(trial_index) {}

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    double next_unit();     // uniform on (0,1), 53-bit resolution, never 0 or 1
    double normal();        // standard normal (Box-Muller, pair cached)
    double gamma(double shape);  // Gamma(shape, scale=1)
    double exponential();   // Exp(1)

  private:
    std::array<std::uint32_t, 2> key_;
    std::uint64_t trial_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int buf_pos_ = 4;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace linklab::rng
