#pragma once

// Independent reference computations. Nothing here calls the library's
// enumeration, echelon or series code; each oracle recomputes its answer from
// first principles with the simplest correct method.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Multisets of size n from m letters, by the recurrence M(m,n) = M(m-1,n) + M(m,n-1).
inline Int multisets(unsigned m, unsigned n)
{
    std::vector<std::vector<Int>> t(m + 1, std::vector<Int>(n + 1, 0));
    for (unsigned i = 0; i <= m; ++i) t[i][0] = 1;
    for (unsigned i = 1; i <= m; ++i)
        for (unsigned j = 1; j <= n; ++j) t[i][j] = t[i - 1][j] + t[i][j - 1];
    return t[m][n];
}

// l_{p,k} counted as head choices times tail multisets.
inline Int layer_dimension(unsigned p, unsigned k)
{
    if (k == 1) return 2 * (p - 1);
    return Int(p - 1) * multisets(p - 1, k - 1);
}

inline Int power(Int b, unsigned e)
{
    Int r = 1;
    while (e--) r *= b;
    return r;
}

// (k-1)(p-1)^{k-1}, written as a sum of k-1 equal terms.
inline Int bound_I(unsigned p, unsigned k)
{
    Int s = 0;
    for (unsigned t = 1; t < k; ++t) s += power(p - 1, k - 1);
    return s;
}

// Unrolls b_k = (p-1) b_{k-1} + p M(p-1, k-2), b_1 = 0, which sums to the closed form.
inline Int bound_J(unsigned p, unsigned k)
{
    Int b = 0;
    for (unsigned d = 2; d <= k; ++d) b = Int(p - 1) * b + Int(p) * multisets(p - 1, d - 2);
    return b;
}

inline Int lower_bound(unsigned p, unsigned k)
{
    return layer_dimension(p, k) - bound_I(p, k) - bound_J(p, k);
}

// All (head, sorted tail) pairs of degree k >= 2 by brute-force product and dedup.
inline std::set<std::pair<unsigned, std::vector<unsigned>>> brute_basis(unsigned p, unsigned k)
{
    std::set<std::pair<unsigned, std::vector<unsigned>>> out;
    std::vector<unsigned> digits(k - 1, 1);
    for (unsigned head = 1; head < p; ++head) {
        std::fill(digits.begin(), digits.end(), 1u);
        while (true) {
            auto sorted = digits;
            std::sort(sorted.begin(), sorted.end());
            out.insert({head, sorted});
            std::size_t i = 0;
            while (i < digits.size() && digits[i] == p - 1) digits[i++] = 1;
            if (i == digits.size()) break;
            ++digits[i];
        }
    }
    return out;
}

// Some nonempty sub-multiset S of tail has head + sum(S) = 0 mod p, by trying every subset of positions.
inline bool subset_sum_hits_zero(unsigned p, unsigned head, const std::vector<unsigned>& tail)
{
    const std::size_t n = tail.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        unsigned s = head;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s += tail[i];
        if (s % p == 0) return true;
    }
    return false;
}

struct Params {
    std::uint64_t q, omega, r;
};

inline std::uint64_t order_mod(std::uint64_t a, std::uint64_t n)
{
    std::uint64_t x = a % n, k = 1;
    while (x != 1) {
        x = x * a % n;
        ++k;
    }
    return k;
}

// Trial search: least prime q = 1 mod p with q > p, least generator g of GF(q)*,
// omega = g^{(q-1)/p} by repeated multiplication, least primitive root r mod p.
inline Params lazard_params(unsigned p)
{
    std::uint64_t q = p + 1;
    while (!(is_prime(q) && q % p == 1)) ++q;
    std::uint64_t g = 2;
    while (order_mod(g, q) != q - 1) ++g;
    std::uint64_t omega = 1;
    for (std::uint64_t i = 0; i < (q - 1) / p; ++i) omega = omega * g % q;
    std::uint64_t r = 2;
    while (order_mod(r, p) != p - 1) ++r;
    return {q, omega, r};
}

// Rank of a matrix over GF(q) by plain dense Gaussian elimination.
inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t q)
{
    if (m.empty()) return 0;
    auto inv = [q](std::int64_t a) {
        std::int64_t r = 1, e = q - 2;
        a %= q;
        while (e) {
            if (e & 1) r = r * a % q;
            a = a * a % q;
            e >>= 1;
        }
        return r;
    };
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && ((m[piv][c] % q) + q) % q == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        const std::int64_t s = inv(((m[rank][c] % q) + q) % q);
        for (auto& v : m[rank]) v = ((v % q) + q) % q * s % q;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank) continue;
            const std::int64_t f = ((m[i][c] % q) + q) % q;
            if (!f) continue;
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % q + q) % q;
        }
        ++rank;
    }
    return rank;
}

// Truncated free associative algebra on X (0) and Y (1) over Q.
using Word = std::vector<std::uint8_t>;
using Poly = std::map<Word, Rat>;

inline void add_to(Poly& a, const Poly& b, const Rat& s = 1)
{
    for (const auto& [w, c] : b) {
        a[w] += s * c;
        if (a[w] == 0) a.erase(w);
    }
}

inline Poly multiply(const Poly& a, const Poly& b, unsigned c)
{
    Poly out;
    for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) {
            if (u.size() + v.size() > c) continue;
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out[w] += x * y;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline Poly exp_letter(std::uint8_t letter, unsigned c)
{
    Poly out;
    Int fact = 1;
    for (unsigned n = 0; n <= c; ++n) {
        if (n) fact *= n;
        out[Word(n, letter)] = Rat(Int(1), fact);
    }
    return out;
}

// log(exp X exp Y) up to total degree c.
inline Poly bch_log(unsigned c)
{
    Poly z = multiply(exp_letter(0, c), exp_letter(1, c), c);
    z.erase(Word{});
    Poly out, zn = z;
    for (unsigned n = 1; n <= c; ++n) {
        add_to(out, zn, Rat(n % 2 ? 1 : -1, n));
        zn = multiply(zn, z, c);
    }
    return out;
}

// Associative expansion of the left-normed bracket [w1, ..., wm].
inline Poly expand_left_normed(const Word& w)
{
    Poly cur{{Word{w[0]}, Rat(1)}};
    for (std::size_t i = 1; i < w.size(); ++i) {
        Poly next;
        for (const auto& [u, c] : cur) {
            Word a = u, b{w[i]};
            a.push_back(w[i]);
            b.insert(b.end(), u.begin(), u.end());
            next[a] += c;
            next[b] -= c;
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second == 0 ? next.erase(it) : std::next(it);
        cur = std::move(next);
    }
    return cur;
}

} // namespace oracle
