#ifndef MIB_NUMERIC_HPP
#define MIB_NUMERIC_HPP

#include <cmath>
#include <cstdint>
#include <limits>

namespace mib {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Neumaier-compensated accumulator. Every probability / information sum in
// the library runs through one of these so that cross-checks at 1e-10 stay
// well clear of plain-summation error on large tables.
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + comp; }
};

// p * log(p/q) with the 0 log 0 := 0 convention; +inf when p > 0, q = 0.
inline double kl_term(double p, double q) {
    if (p <= 0.0) return 0.0;
    if (q <= 0.0) return kInf;
    return p * std::log(p / q);
}

// x * log(x), 0 at x = 0.
inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// splitmix64; used both as a sequential stream and as a counter-based hash.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) from 53 random bits.
inline double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Small deterministic PRNG with a platform-independent stream.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_); }
    double next_double() { return unit_double(next_u64()); }           // [0,1)
    double next_open() {                                               // (0,1]
        return 1.0 - next_double();
    }

  private:
    std::uint64_t state_;
};

// Order-independent counter hash: the same (seed, a, b, c, d) always yields
// the same draw no matter when it is requested.
inline double counter_uniform(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                              std::uint64_t c, std::uint64_t d) {
    std::uint64_t s = seed;
    std::uint64_t h = splitmix64(s);
    s ^= a + 0x9e3779b97f4a7c15ULL;
    h ^= splitmix64(s);
    s ^= b + 0xc2b2ae3d27d4eb4fULL;
    h ^= splitmix64(s);
    s ^= c + 0x165667b19e3779f9ULL;
    h ^= splitmix64(s);
    s ^= d + 0x27d4eb2f165667c5ULL;
    h ^= splitmix64(s);
    return unit_double(h);
}

}  // namespace mib

#endif
