#pragma once

#include <optional>
#include <vector>

#include "mcmlab/ring.hpp"

namespace mcmlab {

/// One element of a tracked Groebner basis: the vector itself, its lead,
/// and a cofactor expressing it as a combination of the input columns
/// (including quotient-augmentation columns when working over R).
struct GBElem {
    PolyVec v;
    VecLead lead;
    PolyVec cof;
};

/// Groebner data for the span of a set of homogeneous columns inside a
/// twisted free module.  Monomial order: degrevlex; module order:
/// position-over-term with positions compared by ascending index.
/// Over R the span is represented by its preimage in the free S-module
/// (input columns plus f*e_i for f in the ideal basis), so membership and
/// normal forms modulo the quotient are decided over S.
struct ModuleGB {
    int rank = 0;
    std::vector<int> twists;
    Side side = Side::S;
    int ncols = 0;  // original (non-augmentation) column count
    /// Tracked completion list; the original columns come first.
    std::vector<GBElem> elems;
    /// Reduced Groebner basis (lead coefficients 1, tails reduced),
    /// sorted by ascending lead.
    std::vector<PolyVec> reduced;
    /// Cofactors of S-pair reductions to zero; these generate the syzygy
    /// module of the (augmented) input columns.
    std::vector<PolyVec> syz_cofactors;
};

/// Completes the span of `cols` to a Groebner basis with cofactor and
/// syzygy tracking.  Columns must be homogeneous w.r.t. `twists`.
ModuleGB module_groebner(const GradedRing& ring, Side side, const std::vector<PolyVec>& cols,
                         const std::vector<int>& twists);

/// Canonical fully reduced representative of v modulo the span (and the
/// ideal, over R).  Uses the reduced basis; idempotent.
PolyVec normal_form(const GradedRing& ring, const ModuleGB& gb, const PolyVec& v);

bool in_span(const GradedRing& ring, const ModuleGB& gb, const PolyVec& v);

/// Generators of the syzygy module of `cols` (over R when side == R:
/// S-syzygies of the augmented matrix projected to the first block).
/// Not minimalized; entries are normal forms modulo the ideal over R.
std::vector<PolyVec> syzygy_generators(const GradedRing& ring, Side side,
                                       const std::vector<PolyVec>& cols,
                                       const std::vector<int>& twists);

/// Expresses `target` as a combination of `cols` (modulo the ideal over
/// R); returns the cofactor vector, or nullopt when target is not in the
/// span.  Deterministic.
std::optional<PolyVec> lift_through(const GradedRing& ring, Side side,
                                    const std::vector<PolyVec>& cols,
                                    const std::vector<int>& twists, const PolyVec& target);

/// Same, against a precomputed basis (avoids recompleting the span).
std::optional<PolyVec> lift_through_gb(const GradedRing& ring, const ModuleGB& gb,
                                       const PolyVec& target);

/// Ideal-level wrappers (rank-1 module, twist 0).
std::vector<Poly> ideal_groebner(const GradedRing& ring, Side side, const std::vector<Poly>& gens);
Poly poly_normal_form(const GradedRing& ring, const ModuleGB& gb, const Poly& f);

/// Reduces every entry to its normal form modulo the ring ideal (identity
/// over S).
Poly reduce_mod_ideal(const GradedRing& ring, const Poly& f);
PolyVec reduce_mod_ideal(const GradedRing& ring, const PolyVec& v);

// ---- Staircase utilities -------------------------------------------------

/// Lead monomials of a module GB, bucketed per ambient position.
std::vector<std::vector<Monomial>> lead_staircase(const ModuleGB& gb);

/// Standard monomials x^a e_i of internal degree j: monomials not
/// divisible by any staircase lead in their position.  Ordered by
/// (position asc, degrevlex desc).
std::vector<std::pair<Monomial, int>> standard_monomials(
    const std::vector<std::vector<Monomial>>& staircase, const std::vector<int>& twists, int j,
    int nvars);

/// Krull dimension of the quotient by a monomial staircase: max over
/// positions of the dimension of S modulo that position's monomial ideal.
/// Returns -1 for the zero quotient.
int staircase_dimension(const std::vector<std::vector<Monomial>>& staircase, int nvars);

/// True when every position's staircase contains a pure power of every
/// variable (finite k-dimension).  `max_powers`, when non-null, receives
/// per-variable exponent bounds (max over positions).
bool staircase_finite_colength(const std::vector<std::vector<Monomial>>& staircase, int nvars,
                               std::vector<int>* max_powers);

}  // namespace mcmlab
