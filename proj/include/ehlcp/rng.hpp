#pragma once

#include <cstdint>

#include "ehlcp/rational.hpp"

namespace ehlcp {

// Splittable counter-based generator: each draw hashes (key, counter), and
// split(tag) derives an independent child stream. Identical seeds give
// identical streams; there is no global state.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc908ull)) {}

  std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  SplitRng split(std::uint64_t tag) const {
    SplitRng child(0);
    child.key_ = mix(key_ ^ mix(tag + 0xbf58476d1ce4e5b9ull));
    child.counter_ = 0;
    return child;
  }

  /// Uniform integer in [lo, hi] inclusive.
  long long uniform_int(long long lo, long long hi);

  /// Rational u/v with u uniform in [lo*den, hi*den] and v = den, where den
  /// is uniform in [1, max_den]. Stays within [lo, hi].
  Rational rational(long long lo, long long hi, int max_den);

  /// Strictly positive variant (resamples zero draws).
  Rational positive_rational(long long hi, int max_den);

  bool coin() { return next_u64() & 1; }

 private:
  static std::uint64_t mix(std::uint64_t z);

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace ehlcp
