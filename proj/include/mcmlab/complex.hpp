#pragma once

#include <vector>

#include "mcmlab/module.hpp"

namespace mcmlab {

/// Bounded complex of graded free modules with degree-0 homogeneous
/// differentials, homological convention d_i : C_i -> C_{i-1}.  Construct
/// through make(), which checks homogeneity and d o d = 0 (modulo the
/// ideal over R).
class FreeComplex {
public:
    FreeComplex() = default;

    static FreeComplex make(const GradedRing* ring, Side side, int lo,
                            std::vector<std::vector<int>> twists, std::vector<PolyMatrix> diffs);

    const GradedRing& ring() const { return *ring_; }
    const GradedRing* ring_ptr() const { return ring_; }
    Side side() const { return side_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(twists_.size()) - 1; }
    int length() const { return static_cast<int>(twists_.size()); }
    bool empty() const { return twists_.empty(); }

    int rank(int i) const;
    const std::vector<int>& twists_at(int i) const;
    /// d_i : C_i -> C_{i-1}; valid for lo < i <= hi.
    const PolyMatrix& diff(int i) const;

    /// Drops zero-rank modules at both ends.
    FreeComplex trimmed() const;

private:
    const GradedRing* ring_ = nullptr;
    Side side_ = Side::S;
    int lo_ = 0;
    std::vector<std::vector<int>> twists_;
    std::vector<PolyMatrix> diffs_;
    static const std::vector<int> kEmptyTwists;
    static const PolyMatrix kEmptyMatrix;
};

/// Degreewise map of complexes; maps[i - lo] : src_i -> dst_i on the
/// overlap of the supports.  Construct through make(), which checks that
/// every square commutes.
struct ComplexMap {
    FreeComplex src;
    FreeComplex dst;
    int lo = 0;
    std::vector<PolyMatrix> maps;

    static ComplexMap make(FreeComplex src, FreeComplex dst, int lo, std::vector<PolyMatrix> maps);
    const PolyMatrix& at(int i) const;
};

/// Identity map on a complex.
ComplexMap identity_map(const FreeComplex& c);

/// Suspension: (shift(X, s))_i = X_{i-s}, differentials scaled by (-1)^s.
FreeComplex shift_complex(const FreeComplex& x, int s);

/// Mapping cone: C_i = src_{i-1} (+) dst_i with
/// d(a, b) = (-d_src a, f(a) + d_dst b); the source block comes first.
FreeComplex cone(const ComplexMap& f);

/// Tensor product of free complexes with the standard signs
/// d(a@b) = da@b + (-1)^{|a|} a@db; the summands of (A@B)_i are ordered by
/// ascending A-degree, pairs (a-gen, b-gen) with the a index major.
FreeComplex tensor_complexes(const FreeComplex& a, const FreeComplex& b);

/// Koszul complex on homogeneous elements with coefficients in the target
/// complex (the exterior-algebra complex tensored onto it).  Basis
/// e_{i_1<...<i_k} ordered lexicographically by index list;
/// d(e_T) = sum_j (-1)^{j+1} r_{i_j} e_{T minus i_j}.
FreeComplex koszul_complex(const GradedRing* ring, Side side, const std::vector<Poly>& elements,
                           const FreeComplex& target);
/// The Koszul complex on the ring itself (target = ring in degree 0).
FreeComplex koszul_of_ring(const GradedRing* ring, Side side, const std::vector<Poly>& elements);

/// Bounded complex of finitely presented modules (used for homology of
/// non-free data such as Hom complexes and Koszul complexes on modules).
struct FpComplex {
    const GradedRing* ring = nullptr;
    Side side = Side::S;
    int lo = 0;
    std::vector<FreePresentation> mods;
    std::vector<PolyMatrix> diffs;  // diffs[k] : mods[k+1] -> mods[k]

    static FpComplex make(const GradedRing* ring, Side side, int lo,
                          std::vector<FreePresentation> mods, std::vector<PolyMatrix> diffs,
                          bool validate = true);
    int hi() const { return lo + static_cast<int>(mods.size()) - 1; }
};

FpComplex to_fp_complex(const FreeComplex& c);

/// Koszul complex on elements with coefficients in a module.
FpComplex koszul_on_module(const std::vector<Poly>& elements, const FreePresentation& target);

struct HomologyData {
    /// Minimal presentation of H_i.
    FreePresentation pres;
    /// Cycle representatives of the generators, in the C_i generator frame.
    std::vector<PolyVec> reps;
    std::vector<int> ambient_twists;
};

HomologyData homology_at(const FpComplex& c, int i);
HomologyData homology_at(const FreeComplex& c, int i);

/// Largest/smallest i with H_i != 0; nullopt when the complex is acyclic.
std::optional<int> homology_sup(const FpComplex& c);
std::optional<int> homology_inf(const FpComplex& c);
std::optional<int> homology_sup(const FreeComplex& c);
std::optional<int> homology_inf(const FreeComplex& c);

/// sup - inf of the nonzero homology range (nullopt when acyclic).
std::optional<int> amplitude(const FreeComplex& c);

/// Removes contractible free summands (unit entries in differentials)
/// until the complex is minimal.  Witness maps OUT of the complex, when
/// supplied, are transformed alongside so they keep commuting.
FreeComplex prune_complex(const FreeComplex& c, std::vector<PolyMatrix>* witness_out = nullptr,
                          int* witness_lo = nullptr);

/// Hom_S(-, S(-n)) of an S-free complex: transpose differentials with the
/// sign (d^dual f) = (-1)^{|f|+1} f o d, generator twists a |-> n - a, and
/// homological degree p |-> -p.
FreeComplex dual_into_omega(const FreeComplex& c);

}  // namespace mcmlab
