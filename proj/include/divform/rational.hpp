#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace divform {

// Exact arbitrary-precision rational; the only coefficient field used by
// the core algebra. Floating point is banned from the core on purpose.
using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

inline std::string to_string(const rational& r) { return r.str(); }

// Deterministic splittable RNG. std::mt19937_64 is fully specified by the
// standard, but the <random> distributions are not; we draw bounded ints
// ourselves so identical seeds give identical streams on every platform.
class rng {
  public:
    explicit rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi]; modulo bias is irrelevant at the ranges used here
    long next_int(long lo, long hi) {
        if (hi <= lo)
            return lo;
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next_u64() % span);
    }

    bool next_bool() { return (next_u64() & 1) != 0; }

    // derive an independent stream, e.g. one per oracle trial
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        rng r(seed ^ (0x5851f42d4c957f2dull * (stream + 1)));
        return r.next_u64();
    }

  private:
    std::uint64_t state_;
};

} // namespace divform
