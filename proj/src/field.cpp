#include "mcmlab/field.hpp"

#include <stdexcept>

namespace mcmlab {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long mod_reduce(long long v, long long p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid inverse of a modulo p, for a in [1, p-1].
long long mod_inv(long long a, long long p) {
    long long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::runtime_error("field: non-invertible element");
    return mod_reduce(t, p);
}

}  // namespace

Field::Field(long long characteristic) : p_(characteristic) {
    if (p_ == 0) return;
    if (p_ == 2) throw std::invalid_argument("field: characteristic 2 is not supported");
    if (!is_prime(p_)) throw std::invalid_argument("field: characteristic must be 0 or an odd prime");
}

FieldElem Field::from_int(long long v) const {
    FieldElem e;
    if (p_)
        e.fp = mod_reduce(v, p_);
    else
        e.q = mpq_class(static_cast<long>(v));
    return e;
}

FieldElem Field::from_rational(const mpq_class& v) const {
    if (p_) throw std::invalid_argument("field: rational literal over F_p");
    FieldElem e;
    e.q = v;
    e.q.canonicalize();
    return e;
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
    FieldElem e;
    if (p_)
        e.fp = mod_reduce(a.fp + b.fp, p_);
    else
        e.q = a.q + b.q;
    return e;
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
    FieldElem e;
    if (p_)
        e.fp = mod_reduce(a.fp - b.fp, p_);
    else
        e.q = a.q - b.q;
    return e;
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
    FieldElem e;
    if (p_)
        e.fp = mod_reduce(a.fp * b.fp, p_);
    else
        e.q = a.q * b.q;
    return e;
}

FieldElem Field::neg(const FieldElem& a) const {
    FieldElem e;
    if (p_)
        e.fp = mod_reduce(-a.fp, p_);
    else
        e.q = -a.q;
    return e;
}

FieldElem Field::inv(const FieldElem& a) const {
    FieldElem e;
    if (p_) {
        if (a.fp == 0) throw std::domain_error("field: inverse of zero");
        e.fp = mod_inv(a.fp, p_);
    } else {
        if (a.q == 0) throw std::domain_error("field: inverse of zero");
        e.q = 1 / a.q;
    }
    return e;
}

FieldElem Field::div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

bool Field::is_zero(const FieldElem& a) const { return p_ ? a.fp == 0 : a.q == 0; }

bool Field::is_one(const FieldElem& a) const { return p_ ? a.fp == 1 : a.q == 1; }

bool Field::eq(const FieldElem& a, const FieldElem& b) const {
    return p_ ? a.fp == b.fp : a.q == b.q;
}

std::string Field::str(const FieldElem& a) const {
    if (p_) return std::to_string(a.fp);
    return a.q.get_str();
}

FieldElem Field::from_string(const std::string& s) const {
    if (p_) {
        // The value may exceed long long for pathological inputs; go through mpz.
        mpz_class z(s);
        mpz_class r = z % mpz_class(static_cast<long>(p_));
        long long v = r.get_si();
        return from_int(v);
    }
    return from_rational(mpq_class(s));
}

}  // namespace mcmlab
