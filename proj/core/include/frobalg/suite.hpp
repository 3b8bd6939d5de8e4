#pragma once

#include "frobalg/checks.hpp"
#include "frobalg/quotient.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace frobalg {

struct SuiteOptions {
    unsigned trials = 1000;
    std::uint64_t seed = 0;
    /// Run the group checks when the characteristic allows it.
    bool group_checks = true;
};

struct SuiteReport {
    std::shared_ptr<const QuotientAlgebra> quotient;
    CheckResults checks;
    std::vector<std::string> notices;

    bool passed() const { return all_passed(checks); }
};

/// Random element with up to `terms` monomials in each degree 1..max_degree.
AlgebraElement random_element(const ParamsPtr& params, unsigned max_degree, unsigned terms, std::mt19937_64& rng);

/// Random vector in the quotient's global coordinates.
DenseVector random_vector(const QuotientAlgebra& q, std::mt19937_64& rng);

/// Every algebra, action, ideal and quotient invariant, plus the group checks.
/// Identical params and options give identical reports.
SuiteReport run_invariant_suite(const ParamsPtr& params, const SuiteOptions& options = {});

} // namespace frobalg
