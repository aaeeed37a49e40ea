#include "mcmlab/matrix.hpp"

#include <stdexcept>

namespace mcmlab {

std::vector<int> rref(const Field& k, ExactMatrix& m) {
    std::vector<int> pivots;
    int prow = 0;
    for (int c = 0; c < m.cols && prow < m.rows; ++c) {
        int sel = -1;
        for (int r = prow; r < m.rows; ++r) {
            if (!k.is_zero(m.at(r, c))) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != prow)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(prow, j));
        FieldElem piv_inv = k.inv(m.at(prow, c));
        for (int j = c; j < m.cols; ++j) m.at(prow, j) = k.mul(m.at(prow, j), piv_inv);
        for (int r = 0; r < m.rows; ++r) {
            if (r == prow || k.is_zero(m.at(r, c))) continue;
            FieldElem f = m.at(r, c);
            for (int j = c; j < m.cols; ++j)
                m.at(r, j) = k.sub(m.at(r, j), k.mul(f, m.at(prow, j)));
        }
        pivots.push_back(c);
        ++prow;
    }
    return pivots;
}

KernelRank kernel_and_rank(const Field& k, ExactMatrix m) {
    std::vector<int> pivots = rref(k, m);
    KernelRank out;
    out.rank = static_cast<int>(pivots.size());

    std::vector<int> pivot_of_col(m.cols, -1);
    for (int i = 0; i < out.rank; ++i) pivot_of_col[pivots[i]] = i;

    for (int c = 0; c < m.cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<FieldElem> v(m.cols, k.zero());
        v[c] = k.one();
        for (int j = 0; j < m.cols; ++j) {
            int pr = pivot_of_col[j];
            if (pr >= 0) v[j] = k.neg(m.at(pr, c));
        }
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

int rank_of(const Field& k, ExactMatrix m) { return static_cast<int>(rref(k, m).size()); }

ExactMatrix transpose(const Field&, const ExactMatrix& m) {
    ExactMatrix t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

ExactMatrix mat_mul(const Field& k, const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
    ExactMatrix out(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int j = 0; j < a.cols; ++j) {
            const FieldElem& f = a.at(r, j);
            if (k.is_zero(f)) continue;
            for (int c = 0; c < b.cols; ++c)
                out.at(r, c) = k.add(out.at(r, c), k.mul(f, b.at(j, c)));
        }
    return out;
}

ExactMatrix hcat(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows != b.rows && a.cols != 0 && b.cols != 0)
        throw std::invalid_argument("hcat: row mismatch");
    int rows = a.cols == 0 ? (b.cols == 0 ? std::max(a.rows, b.rows) : b.rows)
                           : (b.cols == 0 ? a.rows : a.rows);
    ExactMatrix out(rows, a.cols + b.cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < a.cols; ++c) out.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols; ++c) out.at(r, a.cols + c) = b.at(r, c);
    }
    return out;
}

bool solve(const Field& k, const ExactMatrix& m, const std::vector<FieldElem>& rhs,
           std::vector<FieldElem>& solution) {
    if (static_cast<int>(rhs.size()) != m.rows) throw std::invalid_argument("solve: rhs size");
    ExactMatrix aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = rhs[r];
    }
    std::vector<int> pivots = rref(k, aug);
    if (!pivots.empty() && pivots.back() == m.cols) return false;  // inconsistent
    solution.assign(m.cols, k.zero());
    for (size_t i = 0; i < pivots.size(); ++i) {
        // The pivot row for pivots[i] is row i after rref.
        solution[pivots[i]] = aug.at(static_cast<int>(i), m.cols);
    }
    return true;
}

}  // namespace mcmlab
