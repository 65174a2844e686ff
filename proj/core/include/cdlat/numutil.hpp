#ifndef CDLAT_NUMUTIL_HPP
#define CDLAT_NUMUTIL_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace cdlat {

long long gcd_ll(long long a, long long b);

bool is_prime(long long n);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<long long, int>> factorize(long long n);

/// Least k >= 1 with r^k == 1 (mod m). Throws NotCoprime when gcd(r, m) != 1.
long long multiplicative_order(long long r, long long m);

/// a^e mod m without overflow for m <= 2^31.
long long pow_mod(long long a, long long e, long long m);

/// True when n == p^k for the given prime p (k >= 0).
bool is_prime_power_of(long long n, long long p);

} // namespace cdlat

#endif
