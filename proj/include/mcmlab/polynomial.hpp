#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcmlab/field.hpp"
#include "mcmlab/monomial.hpp"

namespace mcmlab {

struct Term {
    Monomial m;
    FieldElem c;
};

/// Multivariate polynomial in canonical form: terms sorted in descending
/// degrevlex order, no zero coefficients.  Two equal polynomials have
/// identical term lists.  The term vector is exposed for the arithmetic
/// kernels below; construct through make()/monomial()/constant() to keep
/// the canonical form.
struct Poly {
    std::vector<Term> t;

    const std::vector<Term>& terms() const { return t; }
    bool is_zero() const { return t.empty(); }
    const Term& lead() const { return t.front(); }

    static Poly make(const Field& k, std::vector<Term> terms);
    static Poly zero() { return Poly(); }
    static Poly constant(const Field& k, const FieldElem& c, int nvars);
    static Poly monomial(const Field& k, const Monomial& m, const FieldElem& c);
    static Poly variable(const Field& k, int index, int nvars);

    /// Total degree of the leading term; -1 for the zero polynomial.
    int degree() const { return t.empty() ? -1 : t.front().m.degree(); }
    bool is_homogeneous() const;
    /// True for a nonzero constant.
    bool is_unit() const { return t.size() == 1 && t.front().m.is_one(); }

    bool equals(const Field& k, const Poly& o) const;

    std::string str(const Field& k, const std::vector<std::string>& vars) const;
};

Poly poly_add(const Field& k, const Poly& a, const Poly& b);
Poly poly_sub(const Field& k, const Poly& a, const Poly& b);
Poly poly_neg(const Field& k, const Poly& a);
Poly poly_mul(const Field& k, const Poly& a, const Poly& b);
Poly poly_scale(const Field& k, const FieldElem& c, const Poly& a);
/// a * c x^m
Poly poly_mul_term(const Field& k, const Poly& a, const Monomial& m, const FieldElem& c);
Poly poly_pow(const Field& k, const Poly& a, int e);

/// Element of a free module, one polynomial component per generator.
using PolyVec = std::vector<Poly>;

bool vec_is_zero(const PolyVec& v);
PolyVec vec_add(const Field& k, const PolyVec& a, const PolyVec& b);
PolyVec vec_sub(const Field& k, const PolyVec& a, const PolyVec& b);
PolyVec vec_scale(const Field& k, const FieldElem& c, const PolyVec& a);
PolyVec vec_mul_term(const Field& k, const PolyVec& a, const Monomial& m, const FieldElem& c);
PolyVec vec_mul_poly(const Field& k, const PolyVec& a, const Poly& p);
PolyVec vec_zero(int rank);
PolyVec vec_unit(const Field& k, int rank, int pos, int nvars);

/// True when every component is homogeneous and all nonzero components
/// agree on internal degree (component degree + generator twist).  The
/// zero vector is homogeneous.
bool vec_is_homogeneous(const PolyVec& v, const std::vector<int>& twists);

/// Internal degree of a nonzero homogeneous vector; nullopt for zero.
std::optional<int> vec_degree(const PolyVec& v, const std::vector<int>& twists);

/// Leading position/term under the position-over-term order: positions are
/// compared by ascending index (lower index wins), ties by degrevlex.
struct VecLead {
    int pos = -1;  // -1 for the zero vector
    Monomial m;
    FieldElem c;
};
VecLead vec_lead(const PolyVec& v);

}  // namespace mcmlab
