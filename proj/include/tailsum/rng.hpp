#ifndef TAILSUM_RNG_HPP
#define TAILSUM_RNG_HPP

#include <cmath>
#include <cstdint>

namespace tailsum {

// SplitMix64 finalizer (Steele/Lea/Flood; Vigna's fixed-increment variant).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Counter-based stream: output i is mix64(key + i*increment), so streams are
// stateless functions of (key, counter). Substreams derive a fresh key by
// hashing the parent key with the child index; replicate r of task t under
// seed s always sees the same sequence, independent of thread scheduling.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : key_(mix64(seed)) {}
    RngStream(std::uint64_t seed, std::uint64_t task)
        : key_(mix64(mix64(seed) ^ mix64(task + 0x632BE59BD9B4E019ull))) {}
    RngStream(std::uint64_t seed, std::uint64_t task, std::uint64_t replicate)
        : RngStream(seed, task) {
        key_ = mix64(key_ ^ mix64(replicate + 0x9E3779B97F4A7C15ull));
    }

    RngStream substream(std::uint64_t child) const {
        RngStream s(*this);
        s.key_ = mix64(key_ ^ mix64(child + 0x9E3779B97F4A7C15ull));
        s.ctr_ = 0;
        return s;
    }

    std::uint64_t next_u64() { return mix64(key_ + (++ctr_) * 0xBF58476D1CE4E5B9ull); }

    // Uniform on (0,1): 53-bit mantissa, offset by half an ulp so 0 and 1
    // are unreachable.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Unit-rate exponential by inversion; reproducible across platforms.
    double exponential() { return -std::log(uniform()); }

private:
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
};

// Standard normal quantile (inverse CDF) and CDF.
double norm_quantile(double p);
double norm_cdf(double z);

inline double draw_normal(RngStream& rs) { return norm_quantile(rs.uniform()); }

}  // namespace tailsum

#endif
