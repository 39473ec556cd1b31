#pragma once

#include <cstdint>

namespace terracini {

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(uint64_t n);

/// Arithmetic in Z/pZ for a prime p < 2^62. Values are canonical residues in
/// [0, p); products go through 128-bit intermediates so no valid modulus can
/// overflow. All operations are exact: there is no tolerance anywhere.
class PrimeField {
public:
    explicit PrimeField(uint64_t p);

    uint64_t modulus() const { return p_; }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p_);
    }
    uint64_t pow(uint64_t a, uint64_t e) const;
    uint64_t inv(uint64_t a) const; // a != 0; p prime so a^(p-2) works

    /// Maps a (possibly negative) machine integer to its residue.
    uint64_t from_int(long long v) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    uint64_t p_;
};

} // namespace terracini
