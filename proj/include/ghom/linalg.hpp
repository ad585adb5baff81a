#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace gh {

// Sparse matrix with exact rational entries. Rows are kept as sorted
// (column, value) lists; duplicate insertions accumulate.
class SparseMatQ {
public:
    SparseMatQ() = default;
    SparseMatQ(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int row, int col, const mpq_class& value);
    bool empty_row(int row) const { return data_[row].empty(); }
    long long num_entries() const;

    // Appends the columns of `other` on the right; row counts must agree.
    void append_columns(const SparseMatQ& other);

    const std::vector<std::pair<int, mpq_class>>& row(int r) const {
        return data_[r];
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::vector<std::pair<int, mpq_class>>> data_;
};

// Exact rank over the rationals by incremental Gaussian elimination.
int rank(const SparseMatQ& m);

// Dimension of the kernel of m acting on column vectors.
int kernel_dim(const SparseMatQ& m);

// Cohomology dimensions of a cochain complex presented by quotients.
//
// Degrees d in [lo, hi] carry a free module of dimension `basis[d]`, an
// optional relation matrix `relations[d]` whose columns span the subspace to
// quotient out, and a differential matrix `diff[d]` mapping degree d to
// degree d+1 (rows indexed by the degree-d+1 basis, columns by the degree-d
// basis). Matrices for degrees outside the range are treated as zero; the
// complex is assumed zero outside [lo, hi].
struct PresentedComplex {
    int lo = 0;
    int hi = -1;
    std::map<int, int> basis;
    std::map<int, SparseMatQ> diff;
    std::map<int, SparseMatQ> relations;
};

std::map<int, int> cohomology_dims(const PresentedComplex& cx);

}  // namespace gh
