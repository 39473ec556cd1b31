#pragma once

#include <cstdint>
#include <vector>

#include "terracini/field.hpp"
#include "terracini/poly.hpp"

namespace terracini {

inline constexpr uint64_t kDefaultPrime = (1ULL << 61) - 1;  // Mersenne, fast and huge
inline constexpr uint64_t kFallbackPrime = (1ULL << 59) - 55; // independent retry prime
inline constexpr const char* kVersion = "0.1.0";

/// Governs the Monte-Carlo-exact protocol: "general points" are uniform
/// random points of (F_p)^m, and every sampled quantity is deterministic
/// given (prime, samples, seed).
struct SampleConfig {
    uint64_t prime = kDefaultPrime;
    uint64_t fallbackPrime = kFallbackPrime;
    int samples = 3;
    uint64_t seed = 0;
    int maxRetries = 64;

    PrimeField field() const { return PrimeField(prime); }
    SampleConfig with_seed(uint64_t s) const {
        SampleConfig c = *this;
        c.seed = s;
        return c;
    }
    SampleConfig with_prime(uint64_t p) const {
        SampleConfig c = *this;
        c.prime = p;
        return c;
    }
};

/// splitmix64; fast, reproducible, and easy to fork into labeled streams.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) via rejection; exact, no modulo bias.
    uint64_t below(uint64_t bound);

private:
    uint64_t state_;
};

uint64_t mix_seed(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0);

// Stream tags keep independent sampling purposes decorrelated while staying
// reproducible. Frame/jacobian points share one tag on purpose: a tangential
// projection then reuses the same centers as the defect computation it is
// cross-checked against.
inline constexpr uint64_t kTagPoints = 1;
inline constexpr uint64_t kTagSpan = 2;
inline constexpr uint64_t kTagCenter = 3;
inline constexpr uint64_t kTagVertex = 4;
inline constexpr uint64_t kTagPipeline = 5;
inline constexpr uint64_t kTagDrop = 6;
inline constexpr uint64_t kTagRetry = 7;
inline constexpr uint64_t kTagRelative = 8;
inline constexpr uint64_t kTagCriterion = 9;

/// A uniform parameter point for the map, with all-zero group assignments
/// rejected (a zero scaling group would map to the irrelevant point).
std::vector<uint64_t> sample_point(const PolyMap& map, const SampleConfig& cfg,
                                   uint64_t rep, uint64_t idx, uint64_t tag = kTagPoints);

/// A uniform nonzero coordinate vector of the given length.
std::vector<uint64_t> sample_vector(const PrimeField& F, size_t len, const SampleConfig& cfg,
                                    uint64_t rep, uint64_t idx, uint64_t tag);

} // namespace terracini
