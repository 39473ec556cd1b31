#include "terracini/field.hpp"

#include "terracini/errors.hpp"

namespace terracini {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are deterministic for every n < 2^64.
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(uint64_t p) : p_(p) {
    if (p >= (1ULL << 62))
        throw SpecError("field modulus must be below 2^62, got " + std::to_string(p));
    if (!is_prime_u64(p))
        throw SpecError("field modulus must be prime, got " + std::to_string(p));
}

uint64_t PrimeField::pow(uint64_t a, uint64_t e) const {
    return powmod_u64(a % p_, e, p_);
}

uint64_t PrimeField::inv(uint64_t a) const {
    if (a == 0) throw SpecError("division by zero in prime field");
    return powmod_u64(a, p_ - 2, p_);
}

uint64_t PrimeField::from_int(long long v) const {
    long long m = static_cast<long long>(p_);
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<uint64_t>(r);
}

} // namespace terracini
