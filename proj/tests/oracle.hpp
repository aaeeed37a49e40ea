#pragma once

// Independent degreewise linear-algebra oracles used by the test suites.
// These deliberately avoid the Groebner machinery: membership and quotient
// dimensions are decided by expanding monomial multiples of the generators
// in the full monomial basis of the ambient free module and solving.

#include <vector>

#include "mcmlab/groebner.hpp"
#include "mcmlab/matrix.hpp"
#include "mcmlab/ring.hpp"

namespace mcmlab::testing {

/// All (monomial, position) pairs of internal degree j in the twisted free
/// module, ordered position-ascending then degrevlex-descending.
std::vector<std::pair<Monomial, int>> full_basis(int nvars, const std::vector<int>& twists, int j);

/// Is v in the span of cols (plus I * frame over R) in its own degree?
bool oracle_member(const GradedRing& ring, Side side, const std::vector<PolyVec>& cols,
                   const std::vector<int>& twists, const PolyVec& v);

/// dim_k of (free/span)_j.
int oracle_quotient_dim(const GradedRing& ring, Side side, const std::vector<PolyVec>& cols,
                        const std::vector<int>& twists, int j);

/// Ideal-level conveniences (rank-1, twist-0 frame).
bool oracle_member_ideal(const GradedRing& ring, Side side, const std::vector<Poly>& gens,
                         const Poly& f);

}  // namespace mcmlab::testing
