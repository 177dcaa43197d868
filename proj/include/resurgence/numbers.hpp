#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace resurgence {

// Exact arithmetic everywhere: exponents are arbitrary-precision integers,
// all polyhedral / LP computation runs over exact rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Serialized as "p/q" in lowest terms (cpp_rational keeps canonical form).
inline std::string rat_str(const Rat& q) {
  return rat_num(q).str() + "/" + rat_den(q).str();
}

std::int64_t to_i64_checked(const Int& v, const char* what);

Rat parse_rational(const std::string& text);  // "p/q" or "p"

// Deterministic 64-bit generator (splitmix64). Used instead of <random>
// engines+distributions, whose output is not pinned across platforms.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, bound), bound > 0
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace resurgence
