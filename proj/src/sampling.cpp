#include "terracini/sampling.hpp"

#include "terracini/errors.hpp"

namespace terracini {

uint64_t Rng::below(uint64_t bound) {
    // Accept draws under the largest multiple of bound that fits in 64 bits.
    uint64_t threshold = 0 - (((UINT64_MAX % bound) + 1) % bound); // == floor(2^64/bound)*bound mod 2^64
    while (true) {
        uint64_t x = next();
        if (threshold == 0 || x < threshold) return x % bound;
    }
}

uint64_t mix_seed(uint64_t seed, uint64_t a, uint64_t b, uint64_t c) {
    Rng r(seed ^ (a * 0xd1342543de82ef95ULL) ^ (b * 0xaf251af3b0f025b5ULL) ^
          (c * 0x9e3779b97f4a7c15ULL));
    return r.next();
}

std::vector<uint64_t> sample_point(const PolyMap& map, const SampleConfig& cfg,
                                   uint64_t rep, uint64_t idx, uint64_t tag) {
    Rng rng(mix_seed(cfg.seed, tag, rep, idx));
    const uint64_t p = map.field().modulus();
    std::vector<uint64_t> pt(map.var_count());
    for (auto& v : pt) v = rng.below(p);
    for (const auto& g : map.groups()) {
        int tries = 0;
        while (true) {
            bool allZero = true;
            for (size_t i : g) allZero = allZero && pt[i] == 0;
            if (!allZero) break;
            if (++tries > cfg.maxRetries)
                throw SamplingPathology("could not sample a nonzero group assignment");
            for (size_t i : g) pt[i] = rng.below(p);
        }
    }
    return pt;
}

std::vector<uint64_t> sample_vector(const PrimeField& F, size_t len, const SampleConfig& cfg,
                                    uint64_t rep, uint64_t idx, uint64_t tag) {
    Rng rng(mix_seed(cfg.seed, tag, rep, idx));
    std::vector<uint64_t> v(len);
    int tries = 0;
    while (true) {
        bool allZero = true;
        for (auto& x : v) {
            x = rng.below(F.modulus());
            allZero = allZero && x == 0;
        }
        if (!allZero) return v;
        if (++tries > cfg.maxRetries)
            throw SamplingPathology("could not sample a nonzero vector");
    }
}

} // namespace terracini
