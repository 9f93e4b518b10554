#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sva/rational.hpp"

namespace sva {

/// Exponent vector with implicit trailing zeros, so polynomials built over a
/// smaller symbol table stay valid verbatim when the field is extended.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<uint16_t> e) : exp_(std::move(e)) { trim(); }

    uint16_t exp(size_t v) const { return v < exp_.size() ? exp_[v] : 0; }
    void set_exp(size_t v, uint16_t e);
    size_t width() const { return exp_.size(); }
    bool is_one() const { return exp_.empty(); }
    uint32_t total_degree() const;

    Monomial operator*(const Monomial& o) const;

    // Graded-lex total order (degree first, then exponents from variable 0).
    static int cmp(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& o) const { return cmp(*this, o) == 0; }
    bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }

private:
    void trim();
    std::vector<uint16_t> exp_;
};

/// Sparse multivariate polynomial over Q, terms sorted leading-first.
class Poly {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    Poly() = default;
    explicit Poly(const Rational& c);
    static Poly variable(size_t v, uint16_t e = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    Rational constant_value() const; // requires is_constant()
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly mul_term(const Monomial& m, const Rational& c) const;
    Poly mul_rat(const Rational& c) const;
    Poly pow(uint32_t e) const;
    bool operator==(const Poly& o) const;

    uint16_t degree_in(size_t v) const;
    bool uses_var(size_t v) const;
    size_t max_var() const; // one past the largest used variable index, 0 if constant

    /// Split as A + B*x_v with A, B free of x_v; requires degree_in(v) <= 1.
    void split_linear(size_t v, Poly& a, Poly& b) const;
    /// Coefficients of powers of x_v (index = exponent).
    std::vector<Poly> collect(size_t v) const;
    static Poly assemble(size_t v, const std::vector<Poly>& coeffs);

    /// Rational c such that (*this)/c has coprime integer coefficients and a
    /// positive leading one. Zero polynomial yields 1.
    Rational content() const;

    std::string str(const std::vector<std::string>& names) const;

    static void add_term(std::vector<Term>& acc, const Monomial& m, const Rational& c);
    static Poly from_terms(std::vector<Term> t); // sorts and merges

private:
    std::vector<Term> terms_; // sorted by Monomial::cmp descending, nonzero coeffs
};

/// gcd of multivariate polynomials over Q (primitive PRS). Result is
/// integer-primitive with positive leading coefficient; gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Exact division; aborts if the division is not exact.
Poly poly_div_exact(const Poly& a, const Poly& b);

/// True if b divides a exactly.
bool poly_divides(const Poly& b, const Poly& a);

} // namespace sva
