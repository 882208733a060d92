#include "ehlcp/rng.hpp"

#include <stdexcept>

namespace ehlcp {

std::uint64_t SplitRng::mix(std::uint64_t z) {
  // splitmix64 finalizer
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long long SplitRng::uniform_int(long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = std::uint64_t(hi - lo) + 1;
  return lo + (long long)(next_u64() % span);
}

Rational SplitRng::rational(long long lo, long long hi, int max_den) {
  const long long den = uniform_int(1, std::max(1, max_den));
  const long long num = uniform_int(lo * den, hi * den);
  return Rational(num, den);
}

Rational SplitRng::positive_rational(long long hi, int max_den) {
  for (;;) {
    Rational r = rational(0, hi, max_den);
    if (r > 0) return r;
  }
}

}  // namespace ehlcp
