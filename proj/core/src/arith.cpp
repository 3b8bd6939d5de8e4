#include "frobalg/arith.hpp"

#include "frobalg/errors.hpp"

#include <string>

namespace frobalg {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t next_prime(std::uint64_t n)
{
    std::uint64_t c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
    unsigned __int128 result = 1 % mod;
    unsigned __int128 b = base % mod;
    while (exp) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n)
{
    if (n < 2) throw InvalidParameter("multiplicative_order: modulus must be >= 2");
    a %= n;
    if (a == 0) throw InvalidParameter("multiplicative_order: element not invertible");
    std::uint64_t x = a;
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (x == 1) return k;
        x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * a % n);
    }
    throw InvalidParameter("multiplicative_order: element not invertible");
}

std::uint64_t smallest_primitive_root(std::uint64_t p)
{
    if (!is_prime(p)) throw InvalidParameter("smallest_primitive_root: " + std::to_string(p) + " is not prime");
    if (p == 2) return 1;
    const auto factors = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool generator = true;
        for (auto f : factors) {
            if (pow_mod(g, (p - 1) / f, p) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) return g;
    }
    throw InvariantViolation("no primitive root found");
}

Integer binomial(unsigned n, unsigned k)
{
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Integer integer_pow(const Integer& base, unsigned exp)
{
    Integer r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

Integer factorial(unsigned n)
{
    Integer out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

} // namespace frobalg
