#include "oracle.hpp"

#include <map>
#include <stdexcept>

namespace mcmlab::testing {

std::vector<std::pair<Monomial, int>> full_basis(int nvars, const std::vector<int>& twists, int j) {
    std::vector<std::pair<Monomial, int>> out;
    for (size_t i = 0; i < twists.size(); ++i)
        for (const auto& m : monomials_of_degree(nvars, j - twists[i]))
            out.emplace_back(m, static_cast<int>(i));
    return out;
}

namespace {

std::vector<FieldElem> expand(const Field& k, const PolyVec& v,
                              const std::vector<std::pair<Monomial, int>>& basis) {
    std::map<std::pair<int, std::vector<int>>, int> index;
    for (size_t b = 0; b < basis.size(); ++b)
        index[{basis[b].second, basis[b].first.e}] = static_cast<int>(b);
    std::vector<FieldElem> out(basis.size(), k.zero());
    for (size_t pos = 0; pos < v.size(); ++pos)
        for (const auto& t : v[pos].terms()) {
            auto it = index.find({static_cast<int>(pos), t.m.e});
            if (it == index.end()) throw std::runtime_error("oracle: term outside basis degree");
            out[it->second] = k.add(out[it->second], t.c);
        }
    return out;
}

// Columns spanning (span of cols + I*frame)_j inside the degree-j piece.
ExactMatrix span_matrix(const GradedRing& ring, Side side, const std::vector<PolyVec>& cols,
                        const std::vector<int>& twists, int j,
                        const std::vector<std::pair<Monomial, int>>& basis) {
    const Field& k = ring.field();
    int n = ring.nvars();
    std::vector<std::vector<FieldElem>> columns;
    auto add_multiples = [&](const PolyVec& g) {
        auto d = vec_degree(g, twists);
        if (!d) return;
        for (const auto& m : monomials_of_degree(n, j - *d))
            columns.push_back(expand(k, vec_mul_term(k, g, m, k.one()), basis));
    };
    for (const auto& c : cols) add_multiples(c);
    if (side == Side::R) {
        for (const auto& f : ring.ideal_gens())
            for (size_t i = 0; i < twists.size(); ++i) {
                PolyVec v = vec_zero(static_cast<int>(twists.size()));
                v[i] = f;
                add_multiples(v);
            }
    }
    ExactMatrix mat(static_cast<int>(basis.size()), static_cast<int>(columns.size()));
    for (size_t c = 0; c < columns.size(); ++c)
        for (size_t r = 0; r < basis.size(); ++r) mat.at(static_cast<int>(r), static_cast<int>(c)) = columns[c][r];
    return mat;
}

}  // namespace

bool oracle_member(const GradedRing& ring, Side side, const std::vector<PolyVec>& cols,
                   const std::vector<int>& twists, const PolyVec& v) {
    if (vec_is_zero(v)) return true;
    auto dv = vec_degree(v, twists);
    if (!dv) throw std::invalid_argument("oracle_member: zero or mixed-degree vector");
    auto basis = full_basis(ring.nvars(), twists, *dv);
    ExactMatrix mat = span_matrix(ring, side, cols, twists, *dv, basis);
    std::vector<FieldElem> rhs = expand(ring.field(), v, basis);
    std::vector<FieldElem> sol;
    return solve(ring.field(), mat, rhs, sol);
}

int oracle_quotient_dim(const GradedRing& ring, Side side, const std::vector<PolyVec>& cols,
                        const std::vector<int>& twists, int j) {
    auto basis = full_basis(ring.nvars(), twists, j);
    ExactMatrix mat = span_matrix(ring, side, cols, twists, j, basis);
    return static_cast<int>(basis.size()) - rank_of(ring.field(), mat);
}

bool oracle_member_ideal(const GradedRing& ring, Side side, const std::vector<Poly>& gens,
                         const Poly& f) {
    std::vector<PolyVec> cols;
    for (const auto& g : gens) cols.push_back(PolyVec{g});
    return oracle_member(ring, side, cols, {0}, PolyVec{f});
}

}  // namespace mcmlab::testing
