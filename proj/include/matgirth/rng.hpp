#pragma once

#include <cstdint>
#include <random>

namespace matgirth {

// All randomized algorithms draw from generators seeded through derive_seed,
// a pure function of (root seed, stream id, counter).  Each independent
// sub-computation (a repetition of a randomized run, a branch of a driver,
// a generator invocation) gets its own (stream, counter) pair, so results are
// reproducible regardless of evaluation order and are stable run to run.
//
// Stream ids in use:
//   1  even-cut contraction repetitions      (counter = repetition index)
//   2  girth driver branches                 (counter = branch index x)
//   3  cogirth driver branches               (counter = branch index y/beta)
//   4  matching evaluation repetitions       (counter = repetition index)
//   5  instance generators                   (counter = draw phase)
//   6  selftest suites                       (counter = suite index)
//   7  parity join repetitions               (counter = repetition index)
//   8  even-cut connectivity branches        (counter = branch index)
enum : std::uint64_t {
  kStreamEvenCutRun = 1,
  kStreamGirthBranch = 2,
  kStreamCogirthBranch = 3,
  kStreamMatchingRun = 4,
  kStreamGen = 5,
  kStreamSelftest = 6,
  kStreamJoinRun = 7,
  kStreamEvenCutBranch = 8,
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream,
                          std::uint64_t counter);

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t root, std::uint64_t stream,
                    std::uint64_t counter) {
  return Rng(derive_seed(root, stream, counter));
}

// Uniform draw from [0, n), n >= 1, by rejection (unbiased and portable).
std::uint64_t rng_below(Rng& rng, std::uint64_t n);

// Uniform draw from [lo, hi] inclusive.
inline long long rng_int(Rng& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(
                  rng_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline bool rng_bit(Rng& rng) { return rng_below(rng, 2) != 0; }

}  // namespace matgirth
