#pragma once

#include <map>
#include <string>

#include "sva/field.hpp"
#include "sva/poly.hpp"

namespace sva {

/// Element of the fraction field of the declared symbol tower, kept in a
/// canonical normal form: i and every radical appear to power <= 1, the
/// denominator is a radical- and i-free polynomial with leading coefficient 1,
/// and numerator/denominator are coprime. Zero is (0, 1); equality of normal
/// forms is structural.
class Scalar {
public:
    Scalar() = default; // invalid until assigned; use Field::of / Field::var

    static Scalar make(const Field& f, Poly num, Poly den);

    const Field& field() const { return field_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    /// Constant in Q (no symbols at all)?
    bool is_rational() const;
    Rational rational_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    Scalar conj() const; // i -> -i; parameters and radicals fixed
    Scalar pow(int e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Total order usable as a map key (compares within a unified field).
    static int cmp(const Scalar& a, const Scalar& b);

    bool uses_var(size_t v) const { return num_.uses_var(v) || den_.uses_var(v); }
    bool radical_free() const;

    /// Rebuild this scalar in another field under a variable substitution
    /// (old variable index -> value in the target field). Unmapped variables
    /// must exist under the same name in the target.
    Scalar substituted(const Field& target, const std::map<size_t, Scalar>& map) const;

    std::string str() const;

private:
    Field field_;
    Poly num_, den_{Rational(1)};
};

inline Scalar operator*(long c, const Scalar& s) { return s.field().of(c) * s; }

} // namespace sva
