#pragma once

#include <gmpxx.h>

#include <string>

namespace mcmlab {

/// Element of the coefficient field.  For a prime characteristic p the
/// value is the canonical residue in [0, p-1]; in characteristic zero the
/// value is an exact rational in lowest terms with positive denominator.
struct FieldElem {
    long long fp = 0;
    mpq_class q;
};

/// The coefficient field k: either F_p for a configurable odd prime p, or
/// the rationals (characteristic 0).  All arithmetic is exact.  Field
/// objects are immutable and cheap to copy by reference; every operation
/// is a pure function.
class Field {
public:
    /// characteristic = 0 selects the rationals; otherwise an odd prime.
    explicit Field(long long characteristic);

    long long characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    FieldElem zero() const { return FieldElem{}; }
    FieldElem one() const { return from_int(1); }
    FieldElem from_int(long long v) const;
    FieldElem from_rational(const mpq_class& v) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem div(const FieldElem& a, const FieldElem& b) const;

    bool is_zero(const FieldElem& a) const;
    bool is_one(const FieldElem& a) const;
    bool eq(const FieldElem& a, const FieldElem& b) const;

    std::string str(const FieldElem& a) const;
    /// Parses an integer literal (optionally signed) into the field.
    FieldElem from_string(const std::string& s) const;

    bool operator==(const Field& other) const { return p_ == other.p_; }

private:
    long long p_;
};

}  // namespace mcmlab
