#pragma once

#include <vector>

#include "mcmlab/field.hpp"

namespace mcmlab {

/// Dense matrix over the coefficient field.  Row-major storage; empty
/// matrices (0 rows and/or 0 columns) are valid.
struct ExactMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<FieldElem> a;

    ExactMatrix() = default;
    ExactMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    FieldElem& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const FieldElem& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

struct KernelRank {
    int rank = 0;
    /// Kernel basis in reduced echelon form, one vector (length = cols)
    /// per free column, ordered by ascending free-column index.
    std::vector<std::vector<FieldElem>> kernel_basis;
};

/// Reduces m in place to reduced row echelon form.  Pivot selection is
/// deterministic: columns are scanned left to right and within a column the
/// first nonzero entry from the top (among unused rows) is the pivot.
/// Returns the pivot column indices.
std::vector<int> rref(const Field& k, ExactMatrix& m);

/// Rank and canonical kernel basis of m.  rank + |kernel_basis| == cols.
KernelRank kernel_and_rank(const Field& k, ExactMatrix m);

int rank_of(const Field& k, ExactMatrix m);

ExactMatrix transpose(const Field& k, const ExactMatrix& m);

ExactMatrix mat_mul(const Field& k, const ExactMatrix& a, const ExactMatrix& b);

/// Appends the columns of b to a (row counts must match).
ExactMatrix hcat(const ExactMatrix& a, const ExactMatrix& b);

/// Solves m x = rhs; returns empty when inconsistent.
bool solve(const Field& k, const ExactMatrix& m, const std::vector<FieldElem>& rhs,
           std::vector<FieldElem>& solution);

}  // namespace mcmlab
