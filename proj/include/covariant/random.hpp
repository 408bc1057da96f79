#ifndef COVARIANT_RANDOM_HPP
#define COVARIANT_RANDOM_HPP

#include "covariant/scalar.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace covariant {

/// Seeded generator. Every consumer derives its own named sub-stream so
/// that adding a new consumer never shifts the numbers another one sees.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const { return seed_; }

  /// Independent stream determined by (seed, name).
  Rng substream(std::string_view name) const;
  Rng substream(std::uint64_t index) const;

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  Scalar uniform_scalar(long lo, long hi) { return Scalar(uniform(lo, hi)); }

  std::mt19937_64& engine() { return engine_; }

 private:
  static std::uint64_t mix(std::uint64_t x);

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace covariant

#endif  // COVARIANT_RANDOM_HPP
