#include "frobalg/echelon.hpp"

#include "frobalg/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace frobalg {

namespace {

// Dense accumulator reused across reductions on the same thread.
struct Scratch {
    std::vector<FieldElement> values;
    std::vector<std::uint8_t> queued;

    void ensure(std::size_t n)
    {
        if (values.size() < n) {
            values.resize(n);
            queued.resize(n, 0);
        }
    }
};

Scratch& scratch()
{
    thread_local Scratch s;
    return s;
}

} // namespace

EchelonForm::EchelonForm(std::shared_ptr<const Field> field, std::size_t ncols)
    : field_(std::move(field)), ncols_(ncols), pivot_row_(ncols, -1)
{
    if (!field_) throw InvalidArgument("EchelonForm requires a field");
}

SparseRow EchelonForm::reduce(const SparseRow& v) const
{
    const Field& K = *field_;
    Scratch& s = scratch();
    s.ensure(ncols_);
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
    for (const auto& e : v) {
        if (e.col >= ncols_) throw InvalidArgument("column index out of range");
        if (e.val == K.zero()) continue;
        if (!s.queued[e.col]) {
            s.queued[e.col] = 1;
            s.values[e.col] = e.val;
            heap.push(e.col);
        } else {
            s.values[e.col] = K.add(s.values[e.col], e.val);
        }
    }
    SparseRow out;
    while (!heap.empty()) {
        const std::uint32_t c = heap.top();
        heap.pop();
        s.queued[c] = 0;
        const FieldElement val = s.values[c];
        s.values[c] = K.zero();
        if (val == K.zero()) continue;
        const std::int32_t pr = pivot_row_[c];
        if (pr < 0) {
            out.push_back({c, val});
            continue;
        }
        const SparseRow& row = rows_[static_cast<std::size_t>(pr)];
        for (std::size_t i = 1; i < row.size(); ++i) {
            const auto col = row[i].col;
            if (!s.queued[col]) {
                s.queued[col] = 1;
                s.values[col] = K.zero();
                heap.push(col);
            }
            s.values[col] = K.sub_mul(s.values[col], val, row[i].val);
        }
    }
    return out;
}

bool EchelonForm::insert(const SparseRow& row)
{
    SparseRow r = reduce(row);
    if (r.empty()) return false;
    const Field& K = *field_;
    const FieldElement inv = K.inv(r.front().val);
    for (auto& e : r) e.val = K.mul(e.val, inv);
    pivot_row_[r.front().col] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(r));
    reduced_ = false;
    return true;
}

void EchelonForm::finalize()
{
    if (reduced_) return;
    std::sort(rows_.begin(), rows_.end(), [](const SparseRow& a, const SparseRow& b) { return a.front().col < b.front().col; });
    for (std::size_t i = 0; i < rows_.size(); ++i) pivot_row_[rows_[i].front().col] = static_cast<std::int32_t>(i);
    for (std::size_t i = rows_.size(); i-- > 0;) {
        const Entry lead = rows_[i].front();
        SparseRow tail(rows_[i].begin() + 1, rows_[i].end());
        SparseRow reduced = reduce(tail);
        SparseRow row;
        row.reserve(reduced.size() + 1);
        row.push_back(lead);
        row.insert(row.end(), reduced.begin(), reduced.end());
        rows_[i] = std::move(row);
    }
    reduced_ = true;
}

std::vector<std::uint32_t> EchelonForm::pivots() const
{
    std::vector<std::uint32_t> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.front().col);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint32_t> EchelonForm::free_columns() const
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < ncols_; ++c)
        if (pivot_row_[c] < 0) out.push_back(c);
    return out;
}

bool EchelonForm::same_subspace(const EchelonForm& other) const
{
    if (!reduced_ || !other.reduced_) throw InvalidArgument("same_subspace requires finalized echelon forms");
    return ncols_ == other.ncols_ && rows_ == other.rows_;
}

SparseRow to_sparse(const DenseVector& v, const Field& field)
{
    SparseRow out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != field.zero()) out.push_back({static_cast<std::uint32_t>(i), v[i]});
    return out;
}

DenseVector to_dense(const SparseRow& v, std::size_t ncols, const Field& field)
{
    DenseVector out(ncols, field.zero());
    for (const auto& e : v) out[e.col] = e.val;
    return out;
}

DenseMatrix nullspace(const std::shared_ptr<const Field>& field, const DenseMatrix& m, std::size_t ncols)
{
    EchelonForm ech(field, ncols);
    for (const auto& row : m) ech.insert(to_sparse(row, *field));
    ech.finalize();
    DenseMatrix basis;
    for (auto f : ech.free_columns()) {
        DenseVector x(ncols, field->zero());
        x[f] = field->one();
        for (const auto& row : ech.rows())
            for (const auto& e : row)
                if (e.col == f) x[row.front().col] = field->neg(e.val);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t rank_of(const std::shared_ptr<const Field>& field, const std::vector<SparseRow>& rows, std::size_t ncols)
{
    EchelonForm ech(field, ncols);
    for (const auto& r : rows) ech.insert(r);
    return ech.rank();
}

} // namespace frobalg
