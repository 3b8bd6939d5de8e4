#pragma once

#include "frobalg/ideals.hpp"

#include <optional>
#include <vector>

namespace frobalg {

/// One degree of L_p / T_p with T_p = I_p + J_p.
struct QuotientLayer {
    unsigned degree = 0;
    std::size_t l = 0;            ///< dim L_{p,k}
    EchelonForm i_layer;          ///< I_p in degree k
    EchelonForm j_layer;          ///< J_p in degree k
    EchelonForm t_layer;          ///< I_p + J_p in degree k
    std::vector<std::uint32_t> reps;  ///< coset representatives: non-pivot columns of t_layer
    std::vector<std::int32_t> rep_pos;  ///< column -> position in reps, -1 for pivot columns
    std::size_t offset = 0;       ///< global index of reps[0]

    std::size_t dimension() const { return reps.size(); }
};

/// [e_a, e_b] has coefficient c on e_d (global representative indices).
struct StructureConstant {
    std::uint32_t a, b, d;
    FieldElement c;
};

struct QuotientOptions {
    /// Also compute layers up to this degree when the quotient vanishes earlier.
    std::optional<unsigned> max_degree;
    /// Quotient by the zero ideal instead of I_p + J_p, i.e. L_p itself truncated
    /// at max_degree (which is then required). Used as a negative control.
    bool zero_ideal = false;
    /// Stop after this degree even if the quotient has not vanished yet. The
    /// result is then the quotient truncated above cap_degree and complete()
    /// is false unless a zero layer was reached.
    std::optional<unsigned> cap_degree;
};

/// L_p / (I_p + J_p) with deterministic coset representatives.
///
/// Vectors in the quotient are dense over the global representative basis,
/// ordered by degree and then by canonical basis order.
class QuotientAlgebra {
public:
    /// Builds degree by degree until the first vanishing layer. Throws
    /// InvariantViolation if degree p is still nonzero (class above p - 1).
    static QuotientAlgebra build(ParamsPtr params, const QuotientOptions& options = {});

    const ParamsPtr& params() const { return params_; }
    const Field& field() const { return params_->K(); }
    unsigned p() const { return params_->p; }

    /// Largest degree with a nonzero layer.
    unsigned nilpotency_class() const { return class_; }
    /// True if a zero layer was computed, so the class is exact.
    bool complete() const { return complete_; }
    /// Degrees 1..computed_degree() are available.
    unsigned computed_degree() const { return static_cast<unsigned>(layers_.size()); }
    const std::vector<QuotientLayer>& layers() const { return layers_; }
    const QuotientLayer& layer(unsigned k) const;
    /// 0 for degrees beyond the computed range (the quotient is generated in degree 1).
    std::size_t dimension(unsigned k) const;
    std::size_t total_dimension() const { return total_dim_; }

    unsigned rep_degree(std::size_t index) const;
    BasisElement rep_element(std::size_t index) const;

    /// Coordinates of v + T_{p,k} over the degree-k representatives.
    DenseVector reduce(unsigned k, const SparseRow& v) const;
    /// Same, embedded in the global coordinate space.
    DenseVector reduce_global(unsigned k, const SparseRow& v) const;
    /// Coset of an element of L_p (any degrees).
    DenseVector image(const AlgebraElement& x) const;

    DenseVector zero_vector() const { return DenseVector(total_dim_, field().zero()); }
    DenseVector bracket(const DenseVector& x, const DenseVector& y) const;
    const std::vector<StructureConstant>& structure_constants() const { return constants_; }

    /// Induced automorphisms on global coordinates.
    DenseVector apply_f(const DenseVector& x) const;
    DenseVector apply_h(const DenseVector& x) const;
    /// Matrix of induced h on layer k: column j is the image of the j-th representative.
    DenseMatrix h_matrix(unsigned k) const;

private:
    QuotientAlgebra() = default;
    void compute_structure_constants();

    ParamsPtr params_;
    std::vector<QuotientLayer> layers_;
    unsigned class_ = 0;
    bool complete_ = false;
    std::size_t total_dim_ = 0;
    std::vector<StructureConstant> constants_;
    // constants_by_first_[a] lists (b, d, c) with [e_a, e_b] = ... + c e_d, both orders stored
    std::vector<std::vector<StructureConstant>> by_first_;
    std::vector<FieldElement> f_scale_;
    std::vector<SparseRow> h_images_;  // per global rep, sparse over global coordinates
};

/// Per-degree quotient dimensions only, stopping at the first zero layer or after
/// stop_degree (whichever comes first). Used by the exact prime search.
std::vector<std::size_t> quotient_dimensions(const ParamsPtr& params, unsigned stop_degree);

/// l_{p,k} - bound_I(p,k) - bound_J(p,k); may be negative.
Integer lower_bound(unsigned p, unsigned k);

/// lower_bound(p, k) * (k-1)! / p^k. Tends to 1 as p grows with k fixed, so the
/// leading term in p is p^k/(k-1)!.
double lower_bound_growth(unsigned p, unsigned k);

enum class SearchMode { bound, exact };

struct SearchResult {
    unsigned p;
    Integer witness;  ///< lower bound value (bound mode) or computed class (exact mode)
};

/// Least prime p <= p_max (p >= 3) with lower_bound(p, n) > 0 (bound mode) or
/// with quotient class >= n over the lazard-mode field (exact mode).
std::optional<SearchResult> search_min_prime(unsigned n, SearchMode mode, unsigned p_max, unsigned threads = 1);

/// No quotient layer has a nonzero vector fixed by the induced f.
bool verify_kernel_centralizer_trivial(const QuotientAlgebra& q);

/// Fixed points of the induced h pairwise commute.
bool verify_complement_centralizer_abelian(const QuotientAlgebra& q);

struct CoveringRow {
    unsigned degree;
    std::size_t fixed_dim;  ///< dim of the fixed space of induced h on the layer
    std::size_t image_dim;  ///< rank of the orbit sums reduced mod T_p
    bool holds() const { return fixed_dim == image_dim; }
};

std::vector<CoveringRow> covering_table(const QuotientAlgebra& q);
bool verify_covering(const QuotientAlgebra& q);

/// Fixed space of the induced h on layer k, embedded in global coordinates.
DenseMatrix h_fixed_basis(const QuotientAlgebra& q, unsigned k);

} // namespace frobalg
