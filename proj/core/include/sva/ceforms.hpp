#pragma once

#include <cstdint>
#include <map>
#include <memory>

#include "sva/qla.hpp"

namespace sva {

SVA_ERROR(NotAlmostComplex);

using LiePtr = std::shared_ptr<const LieData>;

/// Left-invariant exterior form on a Lie algebra: coefficients over the
/// monomial basis v^{i1...ip} of the dual exterior algebra, mixed degrees
/// allowed. Monomials are encoded as index bitmasks.
class InvariantForm {
public:
    InvariantForm() = default;
    explicit InvariantForm(LiePtr base);
    static InvariantForm monomial(LiePtr base, const std::vector<size_t>& idx, const Scalar& c);

    const LiePtr& base() const { return base_; }
    const std::map<uint32_t, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Homogeneous component of the given degree.
    InvariantForm degree_part(size_t p) const;
    size_t max_degree() const;

    InvariantForm operator+(const InvariantForm& o) const;
    InvariantForm operator-(const InvariantForm& o) const;
    InvariantForm operator-() const;
    InvariantForm scaled(const Scalar& s) const;
    InvariantForm wedge(const InvariantForm& o) const;
    bool operator==(const InvariantForm& o) const;

    /// Evaluate a homogeneous p-form on p vectors (coordinate lists).
    Scalar eval(const std::vector<std::vector<Scalar>>& vectors) const;

    std::string str() const;

    void add_term(uint32_t mask, const Scalar& c);

private:
    LiePtr base_;
    std::map<uint32_t, Scalar> terms_;
};

/// Chevalley-Eilenberg differential: d a(X,Y) = -a([X,Y]) on 1-forms,
/// extended as an antiderivation. d^2 = 0 iff Jacobi holds.
InvariantForm ce_d(const InvariantForm& a);

/// Interior product by the vector with the given coordinates, as the
/// antiderivation with i_X v^j = v^j(X).
InvariantForm contract(const std::vector<Scalar>& x, const InvariantForm& a);

/// d^c of a 2-form in the convention d^c w = -dw(J., J., J.), for an almost
/// complex structure J given as a matrix on the base; requires J^2 = -1.
InvariantForm dc(const InvariantForm& omega, const Matrix& j);

struct Report;

/// Residuals of the invariant SU(n)-structure system
///   d psi - theta ^ psi = 0,  d theta = 0,  d d^c omega = 0,
/// the compatibility omega ^ psi = 0, and h + d^c omega = 0 when a torsion
/// form is supplied.
Report verify_su_structure(const InvariantForm& omega, const InvariantForm& psi,
                           const InvariantForm& theta, const Matrix& j,
                           const InvariantForm* h = nullptr);

} // namespace sva
