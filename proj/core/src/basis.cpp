#include "frobalg/basis.hpp"

#include "frobalg/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace frobalg {

namespace {

std::uint64_t small_binomial(unsigned n, unsigned k)
{
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) throw InvalidParameter("binomial overflow");
    }
    return static_cast<std::uint64_t>(r);
}

// Number of non-decreasing sequences of length len over {x, ..., n}.
std::uint64_t tails_from(unsigned x, unsigned n, unsigned len)
{
    if (x > n) return len == 0 ? 1 : 0;
    return small_binomial(n - x + len, len);
}

} // namespace

void require_valid_p(unsigned p)
{
    if (p < 3 || !is_prime(p)) throw InvalidParameter("p must be a prime >= 3, got " + std::to_string(p));
}

BasisElement BasisElement::a(unsigned i)
{
    if (i == 0 || i > 255) throw InvalidParameter("generator index out of range");
    BasisElement b;
    b.is_a_ = true;
    b.head_ = static_cast<std::uint8_t>(i);
    return b;
}

BasisElement BasisElement::v(unsigned i0, std::vector<std::uint8_t> tail)
{
    if (i0 == 0 || i0 > 255) throw InvalidParameter("generator index out of range");
    if (std::find(tail.begin(), tail.end(), 0) != tail.end()) throw InvalidParameter("bracket index 0");
    BasisElement b;
    b.head_ = static_cast<std::uint8_t>(i0);
    std::sort(tail.begin(), tail.end());
    b.tail_ = std::move(tail);
    return b;
}

BasisElement BasisElement::with_a(unsigned j) const
{
    if (is_a_) throw InvalidArgument("with_a on an a-generator");
    BasisElement b = *this;
    const auto jj = static_cast<std::uint8_t>(j);
    b.tail_.insert(std::upper_bound(b.tail_.begin(), b.tail_.end(), jj), jj);
    return b;
}

std::string BasisElement::to_string() const
{
    std::ostringstream out;
    if (is_a_) {
        out << 'a' << unsigned(head_);
        return out.str();
    }
    if (tail_.empty()) {
        out << 'v' << unsigned(head_);
        return out.str();
    }
    out << "[v" << unsigned(head_);
    for (auto m : tail_) out << ",a" << unsigned(m);
    out << ']';
    return out.str();
}

std::strong_ordering operator<=>(const BasisElement& x, const BasisElement& y)
{
    if (auto c = x.degree() <=> y.degree(); c != 0) return c;
    if (x.is_a_ != y.is_a_) return x.is_a_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = x.head_ <=> y.head_; c != 0) return c;
    return std::lexicographical_compare_three_way(x.tail_.begin(), x.tail_.end(), y.tail_.begin(), y.tail_.end());
}

Integer dimension_formula(unsigned p, unsigned k)
{
    require_valid_p(p);
    if (k < 1) throw InvalidParameter("degree must be >= 1");
    if (k == 1) return Integer(2 * (p - 1));
    return Integer(p - 1) * binomial(k + p - 3, k - 1);
}

std::size_t layer_size(unsigned p, unsigned k)
{
    const Integer d = dimension_formula(p, k);
    if (d > std::numeric_limits<std::uint32_t>::max()) throw InvalidParameter("degree component too large");
    return static_cast<std::size_t>(d);
}

std::vector<BasisElement> enumerate_basis(unsigned p, unsigned k)
{
    const std::size_t n = layer_size(p, k);
    std::vector<BasisElement> out;
    out.reserve(n);
    if (k == 1) {
        for (unsigned i = 1; i < p; ++i) out.push_back(BasisElement::a(i));
        for (unsigned i = 1; i < p; ++i) out.push_back(BasisElement::v(i));
        return out;
    }
    const unsigned len = k - 1;
    for (unsigned i0 = 1; i0 < p; ++i0) {
        std::vector<std::uint8_t> tail(len, 1);
        while (true) {
            out.push_back(BasisElement::v(i0, tail));
            // Next non-decreasing tuple: bump the last entry below p-1, reset the rest to it.
            std::size_t pos = len;
            while (pos > 0 && tail[pos - 1] == p - 1) --pos;
            if (pos == 0) break;
            const std::uint8_t nv = tail[pos - 1] + 1;
            std::fill(tail.begin() + static_cast<std::ptrdiff_t>(pos) - 1, tail.end(), nv);
        }
    }
    return out;
}

unsigned weight(const BasisElement& b, unsigned p)
{
    unsigned s = b.head();
    for (auto m : b.tail()) s += m;
    return s % p;
}

bool valid_for(const BasisElement& b, unsigned p)
{
    if (b.head() == 0 || b.head() >= p) return false;
    return std::all_of(b.tail().begin(), b.tail().end(), [p](std::uint8_t m) { return m > 0 && m < p; });
}

BasisIndex basis_index(const BasisElement& b, unsigned p)
{
    if (!valid_for(b, p)) throw InvalidArgument(b.to_string() + " is not a basis element for p = " + std::to_string(p));
    const unsigned k = b.degree();
    if (b.is_a()) return {1, b.head() - 1u};
    if (k == 1) return {1, (p - 1) + b.head() - 1u};
    const unsigned n = p - 1;
    const unsigned len = k - 1;
    std::uint64_t ord = (b.head() - 1) * tails_from(1, n, len);
    unsigned prev = 1;
    for (unsigned i = 0; i < len; ++i) {
        const unsigned m = b.tail()[i];
        for (unsigned x = prev; x < m; ++x) ord += tails_from(x, n, len - i - 1);
        prev = m;
    }
    return {k, static_cast<std::size_t>(ord)};
}

BasisElement basis_element(unsigned p, unsigned degree, std::size_t ordinal)
{
    if (degree == 1) {
        if (ordinal < p - 1) return BasisElement::a(static_cast<unsigned>(ordinal) + 1);
        if (ordinal < 2 * (p - 1)) return BasisElement::v(static_cast<unsigned>(ordinal - (p - 1)) + 1);
        throw InvalidArgument("ordinal out of range");
    }
    const unsigned n = p - 1;
    const unsigned len = degree - 1;
    const std::uint64_t per_head = tails_from(1, n, len);
    if (ordinal >= per_head * n) throw InvalidArgument("ordinal out of range");
    const auto head = static_cast<unsigned>(ordinal / per_head) + 1;
    std::uint64_t rest = ordinal % per_head;
    std::vector<std::uint8_t> tail(len);
    unsigned x = 1;
    for (unsigned i = 0; i < len; ++i) {
        while (true) {
            const std::uint64_t c = tails_from(x, n, len - i - 1);
            if (rest < c) break;
            rest -= c;
            ++x;
        }
        tail[i] = static_cast<std::uint8_t>(x);
    }
    return BasisElement::v(head, std::move(tail));
}

} // namespace frobalg
