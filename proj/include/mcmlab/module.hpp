#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "mcmlab/groebner.hpp"
#include "mcmlab/matrix.hpp"
#include "mcmlab/ring.hpp"

namespace mcmlab {

/// Matrix with polynomial entries, stored column-wise; column c is an
/// element of the target free module (rows entries).
struct PolyMatrix {
    int rows = 0;
    std::vector<PolyVec> cols;

    PolyMatrix() = default;
    PolyMatrix(int r, int c) : rows(r), cols(static_cast<size_t>(c), vec_zero(r)) {}

    int ncols() const { return static_cast<int>(cols.size()); }
    const Poly& at(int r, int c) const { return cols[c][r]; }
    Poly& at(int r, int c) { return cols[c][r]; }

    static PolyMatrix identity(const Field& k, int n, int nvars);
    static PolyMatrix from_cols(int rows, std::vector<PolyVec> cols);
};

PolyMatrix pm_mul(const Field& k, const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pm_hcat(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pm_transpose(const PolyMatrix& a);
PolyVec pm_apply(const Field& k, const PolyMatrix& a, const PolyVec& v);
bool pm_is_zero_mod(const GradedRing& ring, Side side, const PolyMatrix& a);
PolyMatrix pm_reduce(const GradedRing& ring, Side side, const PolyMatrix& a);
PolyMatrix pm_scale(const Field& k, const FieldElem& c, const PolyMatrix& a);

/// A finitely generated graded module over S or R, presented as the
/// cokernel of a homogeneous relation matrix into a twisted free module.
/// Generators e_i sit in internal degree twists[i].  Instances are
/// immutable; Groebner data for the relation span (which drives graded
/// pieces, normal forms and zero tests) is computed lazily and shared.
class FreePresentation {
public:
    FreePresentation() = default;
    FreePresentation(const GradedRing* ring, Side side, std::vector<int> twists,
                     std::vector<PolyVec> rels);

    const GradedRing& ring() const { return *ring_; }
    const GradedRing* ring_ptr() const { return ring_; }
    Side side() const { return side_; }
    const std::vector<int>& twists() const { return twists_; }
    const std::vector<PolyVec>& rels() const { return rels_; }
    int ngens() const { return static_cast<int>(twists_.size()); }
    int nrels() const { return static_cast<int>(rels_.size()); }
    int min_twist() const;
    int max_twist() const;

    /// Groebner basis of the relation span (with quotient augmentation
    /// over R); lazily cached.
    const ModuleGB& span_gb() const;
    const std::vector<std::vector<Monomial>>& staircase() const;

    /// dim_k M_j, exact.
    int hilbert(int j) const;
    /// Standard-monomial basis of M_j.
    std::vector<std::pair<Monomial, int>> basis(int j) const;
    /// Coordinates of an element (given in the generator frame) against
    /// basis(j); the element must be homogeneous of internal degree j.
    std::vector<FieldElem> expand(const PolyVec& elem, int j) const;
    /// Matrix of multiplication by a homogeneous f: M_j -> M_{j+deg f}.
    ExactMatrix mult_map(const Poly& f, int j) const;

    bool elem_is_zero(const PolyVec& elem) const;
    bool is_zero_module() const;

private:
    const GradedRing* ring_ = nullptr;
    Side side_ = Side::S;
    std::vector<int> twists_;
    std::vector<PolyVec> rels_;

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

struct MinimalizeResult {
    FreePresentation minimal;
    /// Indices of the surviving original generators.
    std::vector<int> kept;
    /// For each original generator, its expression in the surviving
    /// generator frame.
    std::vector<PolyVec> old_in_new;
};

/// Minimal presentation: unit entries cancelled, zero and redundant
/// relations pruned.  After minimalization no relation entry is a nonzero
/// constant, so the generators form a minimal generating set.
MinimalizeResult minimalize(const FreePresentation& m);

/// Indices of a minimal generating subset of the given homogeneous
/// vectors (as a module over the chosen side, inside the twisted free
/// ambient).  Greedy by ascending degree with exact degreewise linear
/// algebra, so the result is deterministic.
std::vector<int> minimal_generators(const GradedRing& ring, Side side,
                                    const std::vector<PolyVec>& vecs,
                                    const std::vector<int>& ambient_twists);

/// The module span(U)/span(W) inside a common free ambient; gens are the
/// columns of U with relations pulled back through U.  Exact when
/// span(W) <= span(U), which homology callers guarantee.
FreePresentation subquotient(const GradedRing& ring, Side side,
                             const std::vector<int>& ambient_twists,
                             const std::vector<PolyVec>& numerator,
                             const std::vector<PolyVec>& denominator);

/// Generators (in the source generator frame) of the kernel of the map
/// with matrix f into a module presented by dst_rels on dst_twists.
std::vector<PolyVec> map_kernel_gens(const GradedRing& ring, Side side, const PolyMatrix& f,
                                     const std::vector<int>& dst_twists,
                                     const std::vector<PolyVec>& dst_rels, int src_ngens);

/// M(shift): generator degrees drop by shift ((M(a))_j = M_{a+j}).
FreePresentation twist_module(const FreePresentation& m, int shift);
FreePresentation direct_sum(const FreePresentation& a, const FreePresentation& b);

/// Basis of the space of degree-0 module maps M -> N (each returned as a
/// matrix on generator frames).
std::vector<PolyMatrix> hom_space_basis(const FreePresentation& m, const FreePresentation& n);

bool map_is_surjective(const FreePresentation& m, const FreePresentation& n, const PolyMatrix& f);

/// Exact isomorphism test by mutual surjections (graded Nakayama closes
/// the argument for finitely generated modules).  Deterministic given the
/// seed used for the random Hom-combination search.
bool modules_isomorphic(const FreePresentation& a, const FreePresentation& b,
                        unsigned long long seed = 1);

/// The free module itself as a presentation (no relations).
FreePresentation free_module(const GradedRing* ring, Side side, std::vector<int> twists);
/// The residue field k as a module over the chosen side.
FreePresentation residue_field(const GradedRing* ring, Side side);
/// The ring as a module over itself (side R) or S (side S).
FreePresentation ring_as_module(const GradedRing* ring, Side side);

/// Krull dimension of the presented module (via the lead-term staircase);
/// -1 for the zero module.
int module_dimension(const FreePresentation& m);
/// True when dim_k M is finite.
bool module_finite_length(const FreePresentation& m);
/// Total k-dimension; only valid when finite length.
int module_length(const FreePresentation& m);

}  // namespace mcmlab
