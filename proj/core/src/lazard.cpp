#include "frobalg/lazard.hpp"

#include "frobalg/arith.hpp"
#include "frobalg/errors.hpp"

#include <map>
#include <random>
#include <sstream>

namespace frobalg {

namespace {

// Right-nested [w1,[w2,...,wm]] = (-1)^{m-1} [wm,...,w1] (left-normed). Returns
// false if the bracket vanishes; otherwise canonicalises to a word starting XY.
bool canonical_left_normed(const Word& right_nested, Word& out, int& sign)
{
    out.assign(right_nested.rbegin(), right_nested.rend());
    sign = (out.size() % 2 == 1) ? 1 : -1;
    if (out.size() < 2) return true;
    if (out[0] == out[1]) return false;
    if (out[0] == 1) {
        std::swap(out[0], out[1]);
        sign = -sign;
    }
    return true;
}

void dynkin_terms(unsigned c, Word& word, unsigned n, const Integer& fact, std::map<Word, Rational>& acc)
{
    const unsigned m = static_cast<unsigned>(word.size());
    for (unsigned t = 1; m + t <= c; ++t) {
        for (unsigned r = 0; r <= t; ++r) {
            const unsigned s = t - r;
            word.insert(word.end(), r, 0);
            word.insert(word.end(), s, 1);
            const Integer f = fact * factorial(r) * factorial(s);
            Word canon;
            int sign = 0;
            if (canonical_left_normed(word, canon, sign)) {
                Rational coeff(Integer(1), Integer(n + 1) * (m + t) * f);
                if ((n % 2 == 1) != (sign < 0)) coeff = -coeff;
                acc[canon] += coeff;
            }
            dynkin_terms(c, word, n + 1, f, acc);
            word.resize(m);
        }
    }
}

} // namespace

std::string word_to_string(const Word& w)
{
    std::string s = w.size() > 1 ? "[" : "";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += w[i] ? 'Y' : 'X';
    }
    return w.size() > 1 ? s + "]" : s;
}

BCHSeries generate_bch(unsigned c)
{
    if (c == 0) throw InvalidParameter("BCH truncation must be >= 1");
    std::map<Word, Rational> acc;
    Word word;
    dynkin_terms(c, word, 0, Integer(1), acc);
    BCHSeries series{c, {}};
    for (auto& [w, coeff] : acc)
        if (coeff != 0) series.terms.push_back({w, coeff});
    std::stable_sort(series.terms.begin(), series.terms.end(),
                     [](const BchTerm& a, const BchTerm& b) { return a.word.size() < b.word.size(); });
    return series;
}

std::string BCHSeries::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms) {
        Rational c = t.coeff;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        if (c < 0) c = -c;
        if (c != 1) out << c << "*";
        out << word_to_string(t.word);
        first = false;
    }
    return first ? "0" : out.str();
}

LazardGroup::LazardGroup(std::shared_ptr<const QuotientAlgebra> q, std::optional<unsigned> truncation)
    : q_(std::move(q))
{
    if (!q_) throw InvalidArgument("missing quotient algebra");
    const Field& K = q_->field();
    if (K.characteristic() <= q_->p())
        throw UnsupportedField("characteristic " + std::to_string(K.characteristic()) + " is not greater than p = " +
                               std::to_string(q_->p()));
    series_ = generate_bch(truncation.value_or(std::max(1u, q_->nilpotency_class())));

    trie_.emplace_back();
    const Integer ch = K.characteristic();
    for (const auto& t : series_.terms) {
        Integer num = boost::multiprecision::numerator(t.coeff) % ch;
        Integer den = boost::multiprecision::denominator(t.coeff) % ch;
        if (den == 0) throw UnsupportedField("BCH denominator " + boost::multiprecision::denominator(t.coeff).str() +
                                             " is not invertible in " + K.describe());
        if (num < 0) num += ch;
        const FieldElement value =
            K.mul(K.from_int(static_cast<std::int64_t>(num)), K.inv(K.from_int(static_cast<std::int64_t>(den))));
        int node = 0;
        for (auto letter : t.word) {
            if (trie_[static_cast<std::size_t>(node)].child[letter] < 0) {
                trie_[static_cast<std::size_t>(node)].child[letter] = static_cast<int>(trie_.size());
                trie_.emplace_back();
            }
            node = trie_[static_cast<std::size_t>(node)].child[letter];
        }
        trie_[static_cast<std::size_t>(node)].terminal = true;
        trie_[static_cast<std::size_t>(node)].coeff = value;
    }
}

GroupElement LazardGroup::identity() const
{
    return {q_->zero_vector()};
}

GroupElement LazardGroup::multiply(const GroupElement& x, const GroupElement& y) const
{
    const Field& K = q_->field();
    if (x.coords.size() != dimension() || y.coords.size() != dimension())
        throw InvalidArgument("group element of wrong dimension");
    auto is_zero = [&](const DenseVector& v) {
        for (auto c : v)
            if (c != K.zero()) return false;
        return true;
    };
    const DenseVector* letters[2] = {&x.coords, &y.coords};
    DenseVector out = q_->zero_vector();
    std::vector<std::pair<int, DenseVector>> stack;
    for (int l = 0; l < 2; ++l)
        if (trie_[0].child[l] >= 0) stack.emplace_back(trie_[0].child[l], *letters[l]);
    while (!stack.empty()) {
        auto [node, value] = std::move(stack.back());
        stack.pop_back();
        if (is_zero(value)) continue;
        const Node& n = trie_[static_cast<std::size_t>(node)];
        if (n.terminal)
            for (std::size_t i = 0; i < out.size(); ++i) out[i] = K.add(out[i], K.mul(n.coeff, value[i]));
        for (int l = 0; l < 2; ++l)
            if (n.child[l] >= 0) stack.emplace_back(n.child[l], q_->bracket(value, *letters[l]));
    }
    return {std::move(out)};
}

GroupElement LazardGroup::inverse(const GroupElement& x) const
{
    GroupElement out = x;
    for (auto& c : out.coords) c = q_->field().neg(c);
    return out;
}

GroupElement LazardGroup::commutator(const GroupElement& x, const GroupElement& y) const
{
    return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

GroupElement LazardGroup::power(const GroupElement& x, std::uint64_t n) const
{
    GroupElement result = identity(), base = x;
    for (; n; n >>= 1) {
        if (n & 1) result = multiply(result, base);
        if (n > 1) base = multiply(base, base);
    }
    return result;
}

GroupElement LazardGroup::lift_f(const GroupElement& x) const
{
    return {q_->apply_f(x.coords)};
}

GroupElement LazardGroup::lift_h(const GroupElement& x) const
{
    return {q_->apply_h(x.coords)};
}

namespace {

GroupElement random_element(const LazardGroup& g, std::mt19937_64& rng)
{
    const auto size = g.algebra().field().cardinality();
    GroupElement x{DenseVector(g.dimension())};
    for (auto& c : x.coords) c = FieldElement{static_cast<std::uint32_t>(rng() % size)};
    return x;
}

GroupElement unit(const LazardGroup& g, std::size_t i)
{
    GroupElement e = g.identity();
    e.coords[i] = g.algebra().field().one();
    return e;
}

CheckResult count_failures(std::string name, unsigned trials, unsigned failures, const std::string& what)
{
    return {std::move(name), failures == 0,
            std::to_string(trials) + " " + what + ", " + std::to_string(failures) + " failures"};
}

// Order of a linear map given by apply, checked on the unit vectors: apply^n = id
// and apply^{n/l} != id for every prime l dividing n.
bool has_exact_order(const LazardGroup& g, unsigned n, GroupElement (LazardGroup::*apply)(const GroupElement&) const)
{
    auto is_identity_power = [&](unsigned k) {
        for (std::size_t i = 0; i < g.dimension(); ++i) {
            GroupElement x = unit(g, i);
            for (unsigned j = 0; j < k; ++j) x = (g.*apply)(x);
            if (!(x == unit(g, i))) return false;
        }
        return true;
    };
    if (!is_identity_power(n)) return false;
    for (auto l : prime_factors(n))
        if (is_identity_power(n / static_cast<unsigned>(l))) return false;
    return true;
}

} // namespace

CheckResults LazardGroup::verify(unsigned trials, std::uint64_t seed) const
{
    const QuotientAlgebra& q = *q_;
    const Field& K = q.field();
    const unsigned p = q.p();
    std::mt19937_64 rng(seed);
    CheckResults out;

    unsigned failures = 0;
    for (unsigned t = 0; t < trials; ++t) {
        const auto x = random_element(*this, rng), y = random_element(*this, rng), z = random_element(*this, rng);
        if (!(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)))) ++failures;
    }
    out.push_back(count_failures("group.associativity", trials, failures, "random triples"));

    failures = 0;
    for (unsigned t = 0; t < trials; ++t) {
        const auto x = random_element(*this, rng);
        const auto e = identity();
        if (!(multiply(x, e) == x) || !(multiply(e, x) == x) || !(multiply(x, inverse(x)) == e) ||
            !(multiply(inverse(x), x) == e))
            ++failures;
    }
    out.push_back(count_failures("group.identity_inverse", trials, failures, "random elements"));

    failures = 0;
    for (unsigned t = 0; t < trials; ++t)
        if (!(power(random_element(*this, rng), K.cardinality()) == identity())) ++failures;
    out.push_back(count_failures("group.exponent", trials, failures, "random q-th powers"));

    unsigned f_fail = 0, h_fail = 0;
    for (unsigned t = 0; t < trials; ++t) {
        const auto x = random_element(*this, rng), y = random_element(*this, rng);
        const auto xy = multiply(x, y);
        if (!(lift_f(xy) == multiply(lift_f(x), lift_f(y)))) ++f_fail;
        if (!(lift_h(xy) == multiply(lift_h(x), lift_h(y)))) ++h_fail;
    }
    out.push_back(count_failures("group.f_automorphism", trials, f_fail, "random pairs"));
    out.push_back(count_failures("group.h_automorphism", trials, h_fail, "random pairs"));

    const bool f_order = has_exact_order(*this, p, &LazardGroup::lift_f);
    const bool h_order = has_exact_order(*this, p - 1, &LazardGroup::lift_h);
    out.push_back({"group.automorphism_orders", f_order && h_order,
                   std::string("f order ") + (f_order ? "" : "not ") + std::to_string(p) + ", h order " +
                       (h_order ? "" : "not ") + std::to_string(p - 1)});

    {
        DenseMatrix m(dimension(), DenseVector(dimension(), K.zero()));
        for (std::size_t j = 0; j < dimension(); ++j) {
            const auto img = lift_f(unit(*this, j));
            for (std::size_t i = 0; i < dimension(); ++i) m[i][j] = i == j ? K.sub(img.coords[i], K.one()) : img.coords[i];
        }
        const auto fixed = nullspace(q.params()->field, m, dimension()).size();
        out.push_back({"group.f_fixed_trivial", fixed == 0, "fixed space of lifted f has dimension " + std::to_string(fixed)});
    }

    {
        DenseMatrix basis;
        for (unsigned k = 1; k <= q.computed_degree(); ++k)
            for (auto& v : h_fixed_basis(q, k)) basis.push_back(std::move(v));
        unsigned comm_fail = 0, closed_fail = 0, samples = 0;
        if (!basis.empty()) {
            auto sample = [&] {
                GroupElement x = identity();
                for (const auto& b : basis) {
                    const FieldElement c{static_cast<std::uint32_t>(rng() % K.cardinality())};
                    for (std::size_t i = 0; i < x.coords.size(); ++i) x.coords[i] = K.add(x.coords[i], K.mul(c, b[i]));
                }
                return x;
            };
            for (unsigned t = 0; t < trials; ++t, ++samples) {
                const auto x = sample(), y = sample();
                const auto xy = multiply(x, y);
                if (!(xy == multiply(y, x))) ++comm_fail;
                if (!(lift_h(xy) == xy)) ++closed_fail;
            }
        }
        out.push_back({"group.h_fixed_abelian", comm_fail == 0 && closed_fail == 0,
                       std::to_string(samples) + " pairs from a fixed space of dimension " + std::to_string(basis.size()) +
                           ", " + std::to_string(comm_fail) + " non-commuting, " + std::to_string(closed_fail) +
                           " products not fixed"});
    }

    {
        const unsigned c = q.nilpotency_class();
        const std::size_t gens = q.dimension(1);
        auto depth_commutator = [&](const std::vector<std::size_t>& tuple) {
            GroupElement x = unit(*this, tuple[0]);
            for (std::size_t i = 1; i < tuple.size(); ++i) x = commutator(x, unit(*this, tuple[i]));
            return x;
        };
        auto next_tuple = [&](std::vector<std::size_t>& t) {
            for (std::size_t i = t.size(); i-- > 0;) {
                if (++t[i] < gens) return true;
                t[i] = 0;
            }
            return false;
        };
        bool nontrivial = false;
        std::vector<std::size_t> tuple(c, 0);
        do {
            if (!(depth_commutator(tuple) == identity())) {
                nontrivial = true;
                break;
            }
        } while (next_tuple(tuple));

        const Integer total = integer_pow(Integer(gens), c + 1);
        const bool exhaustive = total <= 4096;
        bool trivial = true;
        std::size_t tested = 0;
        tuple.assign(c + 1, 0);
        if (exhaustive) {
            do {
                ++tested;
                if (!(depth_commutator(tuple) == identity())) trivial = false;
            } while (trivial && next_tuple(tuple));
        } else {
            for (unsigned t = 0; t < trials && trivial; ++t, ++tested) {
                for (auto& i : tuple) i = rng() % gens;
                if (!(depth_commutator(tuple) == identity())) trivial = false;
            }
        }
        out.push_back({"group.commutator_depth", nontrivial && trivial,
                       "class " + std::to_string(c) + ": depth " + std::to_string(c) +
                           (nontrivial ? " nontrivial" : " trivial") + ", depth " + std::to_string(c + 1) +
                           (trivial ? " trivial" : " nontrivial") + " on " + std::to_string(tested) +
                           (exhaustive ? " tuples (exhaustive)" : " sampled tuples")});
    }
    return out;
}

CheckResults verify_group(const ParamsPtr& params, unsigned trials, std::uint64_t seed)
{
    auto q = std::make_shared<const QuotientAlgebra>(QuotientAlgebra::build(params));
    return LazardGroup(q).verify(trials, seed);
}

} // namespace frobalg
