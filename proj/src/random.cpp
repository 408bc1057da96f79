#include "covariant/random.hpp"

namespace covariant {

std::uint64_t Rng::mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::substream(std::string_view name) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return Rng(mix(seed_) ^ h);
}

Rng Rng::substream(std::uint64_t index) const { return Rng(mix(seed_ + 0x632be59bd9b4e019ULL * (index + 1))); }

long Rng::uniform(long lo, long hi) {
  // Plain modular reduction with rejection keeps results identical across
  // standard library implementations, unlike std::uniform_int_distribution.
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<long>(draw % span);
}

}  // namespace covariant
