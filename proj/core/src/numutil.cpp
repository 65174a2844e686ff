#include "cdlat/numutil.hpp"

#include "cdlat/errors.hpp"

namespace cdlat {

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long long pow_mod(long long a, long long e, long long m) {
    a %= m;
    if (a < 0) a += m;
    long long acc = 1 % m;
    while (e > 0) {
        if (e & 1) acc = acc * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return acc;
}

long long multiplicative_order(long long r, long long m) {
    if (m < 1) throw InvalidParameters("modulus must be positive");
    if (gcd_ll(r, m) != 1)
        throw NotCoprime("multiplicative_order(" + std::to_string(r) + ", " +
                         std::to_string(m) + "): arguments are not coprime");
    if (m == 1) return 1;
    long long x = ((r % m) + m) % m;
    long long d = 1;
    long long acc = x;
    while (acc != 1) {
        acc = acc * x % m;
        ++d;
    }
    return d;
}

bool is_prime_power_of(long long n, long long p) {
    if (n < 1 || p < 2) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

} // namespace cdlat
