#ifndef GAPDEC_UTIL_HPP
#define GAPDEC_UTIL_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace gapdec {

/// splitmix64 step; the standard 64-bit finalizer-style mixer.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// FNV-1a, used for tagging seed streams and hashing configs.
inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Deterministic seed derivation: every random stream in the pipeline is a
/// pure function of the master seed, a purpose tag and integer coordinates.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::initializer_list<std::uint64_t> coords = {}) {
  std::uint64_t h = splitmix64(master ^ fnv1a(tag));
  for (std::uint64_t c : coords) h = splitmix64(h ^ c);
  return h;
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Full round-trip decimal formatting for doubles (17 significant digits).
std::string format_full(double v);

/// Compact formatting for labels and reports (trailing zeros trimmed).
std::string format_short(double v, int digits = 6);

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Results must be
/// written to preassigned slots so output is independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  unsigned threads = 0);

}  // namespace gapdec

#endif
