#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mcmlab/polynomial.hpp"

namespace mcmlab {

/// Which ring a matrix, module or complex lives over: the ambient
/// polynomial ring S, or the quotient R = S/I.
enum class Side { S, R };

/// The ambient standard-graded polynomial ring S = k[x_1..x_n] together
/// with a homogeneous ideal I presenting R = S/I.  The reduced Groebner
/// basis of I (degrevlex) and the Krull dimension of R are computed at
/// construction and cached.  Immutable.
class GradedRing {
public:
    GradedRing(Field field, std::vector<std::string> vars, std::vector<Poly> ideal_gens);

    const Field& field() const { return field_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Poly>& ideal_gens() const { return ideal_gens_; }
    /// Reduced Groebner basis of I.
    const std::vector<Poly>& ideal_gb() const { return ideal_gb_; }
    /// Krull dimension d of R = S/I.
    int dim() const { return dim_; }
    /// Codimension c = n - d.
    int codim() const { return nvars() - dim_; }
    bool ideal_is_zero() const { return ideal_gb_.empty(); }

    /// Human-readable ring description, e.g. "k[x,y]/(x*y)".
    std::string describe() const;

    /// Allows injecting a precomputed (cached) reduced basis; the basis is
    /// trusted as-is, so callers must pass data produced by this library.
    static GradedRing with_precomputed_gb(Field field, std::vector<std::string> vars,
                                          std::vector<Poly> ideal_gens, std::vector<Poly> gb);

private:
    GradedRing() : field_(32003) {}
    void finish_init();

    Field field_;
    std::vector<std::string> vars_;
    std::vector<Poly> ideal_gens_;
    std::vector<Poly> ideal_gb_;
    int dim_ = 0;
};

struct SopResult {
    int dim = 0;
    std::vector<Poly> sop;          // d homogeneous linear forms
    int colength = 0;               // dim_k R/(sop), the finiteness witness
    std::vector<int> max_powers;    // per variable: e with x^e in the staircase of I+(sop)
    int attempts = 0;
};

/// Krull dimension together with a system of parameters made of linear
/// forms.  Deterministic for a fixed (ring, seed): variable subsets are
/// tried first in lexicographic order, then staggered integer-coefficient
/// sums, then seeded random draws.  Throws after the attempt budget is
/// exhausted (possible only over tiny fields).
SopResult krull_dim_and_sop(const GradedRing& ring, unsigned long long seed);

}  // namespace mcmlab
