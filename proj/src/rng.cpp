#include "matgirth/rng.hpp"

namespace matgirth {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream,
                          std::uint64_t counter) {
  std::uint64_t h = splitmix64(root);
  h = splitmix64(h ^ stream);
  h = splitmix64(h ^ counter);
  return h;
}

std::uint64_t rng_below(Rng& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  // Rejection sampling over the largest multiple of n below 2^64.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace matgirth
