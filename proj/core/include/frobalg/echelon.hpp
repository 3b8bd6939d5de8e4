#pragma once

#include "frobalg/field.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace frobalg {

struct Entry {
    std::uint32_t col;
    FieldElement val;
    friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sorted by column, no zero values.
using SparseRow = std::vector<Entry>;

using DenseVector = std::vector<FieldElement>;
using DenseMatrix = std::vector<DenseVector>;

/// Row echelon basis of a subspace of K^ncols.
///
/// Every stored row has leading coefficient 1 at its pivot column and is zero
/// in the pivot columns of all earlier rows. finalize() brings the rows to
/// reduced row echelon form sorted by pivot; that form depends only on the
/// subspace, so two finalized forms compare equal iff the subspaces agree.
class EchelonForm {
public:
    EchelonForm(std::shared_ptr<const Field> field, std::size_t ncols);

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    const Field& field() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }

    /// Adds row to the spanning set; true if the rank grew.
    bool insert(const SparseRow& row);

    /// Brings the rows to reduced row echelon form, sorted by pivot.
    void finalize();
    bool is_reduced() const { return reduced_; }

    /// Residual of v after eliminating every pivot column. Zero iff v is in the span.
    SparseRow reduce(const SparseRow& v) const;
    bool contains(const SparseRow& v) const { return reduce(v).empty(); }

    const std::vector<SparseRow>& rows() const { return rows_; }
    bool is_pivot(std::uint32_t col) const { return pivot_row_[col] >= 0; }
    /// Pivot columns in increasing order.
    std::vector<std::uint32_t> pivots() const;
    /// Non-pivot columns in increasing order.
    std::vector<std::uint32_t> free_columns() const;

    /// Compares finalized forms; throws InvalidArgument if either is not finalized.
    bool same_subspace(const EchelonForm& other) const;

private:
    std::shared_ptr<const Field> field_;
    std::size_t ncols_;
    std::vector<SparseRow> rows_;
    std::vector<std::int32_t> pivot_row_;
    bool reduced_ = true;
};

/// Sparse row from a dense vector.
SparseRow to_sparse(const DenseVector& v, const Field& field);
DenseVector to_dense(const SparseRow& v, std::size_t ncols, const Field& field);

/// Basis of { x : M x = 0 } for an m x n matrix given by rows.
DenseMatrix nullspace(const std::shared_ptr<const Field>& field, const DenseMatrix& m, std::size_t ncols);

std::size_t rank_of(const std::shared_ptr<const Field>& field, const std::vector<SparseRow>& rows, std::size_t ncols);

} // namespace frobalg
