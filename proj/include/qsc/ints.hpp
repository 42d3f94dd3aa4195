#ifndef QSC_INTS_HPP
#define QSC_INTS_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsc {

using BigInt = boost::multiprecision::cpp_int;

// (a * b) mod m without overflow, m < 2^63.
inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// q^k as u64; caller guarantees no overflow at the scales used.
inline uint64_t ipow_u64(uint64_t q, uint32_t k) {
    uint64_t r = 1;
    while (k--) r *= q;
    return r;
}

bool is_prime_u64(uint64_t n);

// Prime factorization, ascending, with multiplicity collapsed (distinct primes).
std::vector<uint64_t> prime_factors_u64(uint64_t n);

} // namespace qsc

#endif
