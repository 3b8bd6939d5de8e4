// One line per acceptance criterion; exit status is nonzero if any criterion fails.

#include "frobalg/basis.hpp"
#include "frobalg/ideals.hpp"
#include "frobalg/lazard.hpp"
#include "frobalg/suite.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace frobalg;

namespace {

constexpr unsigned kTrials = 1000;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (passed) detail << "failed: ";
            else detail << "; ";
            detail << what;
            passed = false;
        }
    }
};

std::map<unsigned, SuiteReport>& suite_reports()
{
    static std::map<unsigned, SuiteReport> reports;
    return reports;
}

const SuiteReport& suite(unsigned p)
{
    auto& reports = suite_reports();
    auto it = reports.find(p);
    if (it == reports.end())
        it = reports.emplace(p, run_invariant_suite(find_parameters(p, FieldMode::lazard), {kTrials, kSeed, false})).first;
    return it->second;
}

void require_checks(Outcome& o, unsigned p, std::initializer_list<const char*> names)
{
    const auto& report = suite(p);
    for (const char* name : names) {
        bool found = false;
        for (const auto& c : report.checks)
            if (c.name == name) {
                found = true;
                o.require(c.passed, "p=" + std::to_string(p) + " " + c.name + ": " + c.detail);
            }
        o.require(found, "p=" + std::to_string(p) + " missing check " + name);
    }
}

void criterion1(Outcome& o)
{
    for (unsigned p : {3u, 5u, 7u, 11u})
        for (unsigned k = 1; k <= std::min(p - 1, 8u); ++k) {
            const auto basis = enumerate_basis(p, k);
            const std::set<BasisElement> distinct(basis.begin(), basis.end());
            const oracle::Int expected = k == 1 ? oracle::Int(2 * (p - 1)) : oracle::Int(p - 1) * oracle::multisets(p - 1, k - 1);
            const std::string at = "p=" + std::to_string(p) + " k=" + std::to_string(k);
            o.require(oracle::Int(basis.size()) == expected, at + " size");
            o.require(distinct.size() == basis.size(), at + " duplicates");
            o.require(dimension_formula(p, k) == expected, at + " formula");
        }
    o.detail << "p in {3,5,7,11}, k <= min(p-1,8)";
}

void criterion2(Outcome& o)
{
    for (unsigned p : {3u, 5u, 7u, 11u}) {
        const auto params = find_parameters(p, FieldMode::lazard);
        for (unsigned k = 1; k <= std::min(p - 1, 8u); ++k) {
            const std::string at = "p=" + std::to_string(p) + " k=" + std::to_string(k);
            const auto basis = enumerate_basis(p, k);
            std::set<BasisElement> seen;
            for (const auto& b : basis) {
                if (seen.count(b)) continue;
                const auto orbit = h_orbit(b, p, params->r);
                const std::set<BasisElement> members(orbit.begin(), orbit.end());
                o.require(orbit.size() == p - 1 && members.size() == p - 1, at + " orbit of " + b.to_string());
                seen.insert(members.begin(), members.end());
            }
            o.require(seen.size() == basis.size(), at + " orbits cover basis");
            o.require(complement_centralizer_basis(params, k).size() == basis.size() / (p - 1), at + " complement size");
        }
    }
    o.detail << "orbit length p-1 and complement size l/(p-1)";
}

void criterion3(Outcome& o)
{
    for (unsigned p : {3u, 5u, 7u}) {
        const auto params = find_parameters(p, FieldMode::lazard);
        const auto recursive = compute_ideal_I(params, 6);
        for (unsigned k = 1; k <= 6; ++k) {
            std::vector<AlgebraElement> comb;
            for (const auto& b : ideal_I_combinatorial(p, k)) {
                o.require(oracle::subset_sum_hits_zero(p, b.head(), std::vector<unsigned>(b.tail().begin(), b.tail().end())),
                          "p=" + std::to_string(p) + " " + b.to_string() + " subset oracle");
                comb.emplace_back(params, b);
            }
            o.require(echelonize(comb, params, k).same_subspace(recursive.layer(k)),
                      "p=" + std::to_string(p) + " k=" + std::to_string(k) + " span mismatch");
        }
        o.require(recursive.dimension(2) == p - 1, "p=" + std::to_string(p) + " i2");
    }
    o.detail << "p in {3,5,7}, k <= 6, i2 = p-1";
}

void criterion4(Outcome& o)
{
    for (unsigned p : {3u, 5u, 7u, 11u}) {
        const auto q = suite(p).quotient;
        for (const auto& layer : q->layers()) {
            const unsigned k = layer.degree;
            const std::string at = "p=" + std::to_string(p) + " k=" + std::to_string(k);
            o.require(oracle::Int(layer.i_layer.rank()) <= oracle::bound_I(p, k), at + " i bound");
            o.require(oracle::Int(layer.j_layer.rank()) <= oracle::bound_J(p, k), at + " j bound");
            if (k == 2) o.require(oracle::Int(layer.i_layer.rank()) == oracle::bound_I(p, 2), at + " i2 equality");
        }
    }
    const auto j3 = compute_ideal_J(find_parameters(3, FieldMode::lazard), 2);
    o.require(j3.dimension(2) == 3 && bound_J(3, 2) == 3, "j_{3,2} = 3");
    o.detail << "all computed layers for p in {3,5,7,11}, j_{3,2} = 3";
}

void criterion5(Outcome& o)
{
    const auto q3 = suite(3).quotient;
    o.require(q3->field().cardinality() == 7, "p=3 field GF(7)");
    o.require(q3->dimension(1) == 4 && q3->dimension(2) == 0 && q3->computed_degree() == 2, "p=3 dims [4,0]");
    o.require(q3->nilpotency_class() == 1, "p=3 class 1");
    for (unsigned p : {3u, 5u, 7u, 11u}) {
        require_checks(o, p,
                       {"quotient.lower_bound", "quotient.class_cap", "quotient.kernel_centralizer_trivial",
                        "quotient.complement_centralizer_abelian"});
        const auto q = suite(p).quotient;
        for (const auto& layer : q->layers())
            if (layer.degree >= 2 && oracle::lower_bound(p, layer.degree) > 0)
                o.require(oracle::Int(layer.dimension()) >= oracle::lower_bound(p, layer.degree),
                          "p=" + std::to_string(p) + " lower bound oracle");
        o.require(q->nilpotency_class() <= p - 1, "p=" + std::to_string(p) + " class cap");
    }
    o.detail << "classes 3:" << suite(3).quotient->nilpotency_class() << " 5:" << suite(5).quotient->nilpotency_class()
             << " 7:" << suite(7).quotient->nilpotency_class() << " 11:" << suite(11).quotient->nilpotency_class();
}

void criterion6(Outcome& o)
{
    const std::map<unsigned, unsigned> expected{{2, 5}, {3, 11}, {4, 37}};
    std::map<unsigned, unsigned> bound;
    for (const auto& [n, p] : expected) {
        const auto r = search_min_prime(n, SearchMode::bound, 100);
        o.require(r && r->p == p, "bound class " + std::to_string(n));
        if (r) {
            bound[n] = r->p;
            o.require(r->witness == oracle::lower_bound(r->p, n) && r->witness > 0, "bound witness " + std::to_string(n));
        }
        unsigned oracle_p = 3;
        while (!(oracle::is_prime(oracle_p) && oracle::lower_bound(oracle_p, n) > 0)) ++oracle_p;
        o.require(oracle_p == p, "oracle scan class " + std::to_string(n));
    }
    for (unsigned n : {2u, 3u}) {
        const auto r = search_min_prime(n, SearchMode::exact, 11);
        o.require(r && bound.count(n) && r->p <= bound[n], "exact class " + std::to_string(n));
        if (r) o.detail << "exact(" << n << ")=" << r->p << " ";
    }
    o.detail << "bound 5, 11, 37";
}

void criterion7(Outcome& o)
{
    const auto gf11 = std::make_shared<const QuotientAlgebra>(QuotientAlgebra::build(params_for_field(5, make_prime_field(11))));
    const auto gf16 = std::make_shared<const QuotientAlgebra>(QuotientAlgebra::build(find_parameters(5, FieldMode::noncoprime)));
    o.require(gf16->field().cardinality() == 16, "GF(16) field");
    for (const auto& q : {gf11, gf16}) {
        const std::string name = q->field().describe();
        o.require(verify_covering(*q), name + " covering");
        for (const auto& row : covering_table(*q)) {
            o.require(row.holds(), name + " degree " + std::to_string(row.degree));
            o.detail << (o.detail.tellp() > 0 ? " " : "") << name << " k=" << row.degree << ":" << row.fixed_dim << "=" << row.image_dim;
        }
    }
    // Fixed space of h recomputed as the nullity of H - 1 over GF(11).
    for (unsigned k = 1; k <= gf11->computed_degree(); ++k) {
        const auto h = gf11->h_matrix(k);
        const std::size_t n = gf11->dimension(k);
        std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = std::stoll(gf11->field().to_string(h[i][j])) - (i == j ? 1 : 0);
        const std::size_t fixed = n - oracle::rank_mod(m, 11);
        for (const auto& row : covering_table(*gf11))
            if (row.degree == k) o.require(row.fixed_dim == fixed, "GF(11) fixed dim oracle k=" + std::to_string(k));
    }
}

void criterion8(Outcome& o)
{
    for (unsigned p : {3u, 5u, 7u, 11u})
        require_checks(o, p,
                       {"algebra.antisymmetry", "algebra.jacobi", "algebra.metabelian", "action.f_automorphism",
                        "action.h_automorphism", "action.frobenius_relation"});
    o.detail << kTrials << " seeded trials per check, p in {3,5,7,11}";
}

oracle::Poly expand(const BCHSeries& s)
{
    oracle::Poly out;
    for (const auto& t : s.terms) oracle::add_to(out, oracle::expand_left_normed(t.word), t.coeff);
    return out;
}

void criterion9(Outcome& o)
{
    for (unsigned p : {3u, 5u})
        for (const auto& c : verify_group(find_parameters(p, FieldMode::lazard), kTrials, kSeed))
            o.require(c.passed, "p=" + std::to_string(p) + " " + c.name + ": " + c.detail);
    for (unsigned c = 1; c <= 6; ++c) o.require(expand(generate_bch(c)) == oracle::bch_log(c), "BCH class " + std::to_string(c));
    o.detail << "p in {3,5}, " << kTrials << " trials, BCH classes 1..6";
}

} // namespace

int main()
{
    const std::vector<std::function<void(Outcome&)>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                               criterion6, criterion7, criterion8, criterion9};
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i](o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all &= o.passed;
        std::cout << "criterion " << i + 1 << ": " << (o.passed ? "PASS" : "FAIL") << " (" << o.detail.str() << ") ["
                  << static_cast<long long>(secs * 1000) << " ms]" << std::endl;
    }
    return all ? 0 : 1;
}
