#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sva/linalg.hpp"
#include "sva/scalar.hpp"

namespace sva {

SVA_ERROR(AntisymmetryFailure);
SVA_ERROR(JacobiFailure);
SVA_ERROR(InvarianceFailure);
SVA_ERROR(DegeneratePairing);
SVA_ERROR(DimensionMismatch);
SVA_ERROR(NotComplementary);
SVA_ERROR(NotClosed);

/// Plain Lie algebra data: basis names and structure constants. Used directly
/// for invariant-form calculus and as the base of a Courant double.
class LieData {
public:
    LieData(Field field, std::vector<std::string> names,
            std::vector<std::vector<std::vector<Scalar>>> bracket);

    const Field& field() const { return field_; }
    size_t dim() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Scalar>& bracket_coeffs(size_t i, size_t j) const { return bracket_[i][j]; }

    /// Structure-constant builder; unspecified brackets are zero and the
    /// (j,i) entries are filled by antisymmetry.
    class Builder {
    public:
        Builder(const Field& f, std::vector<std::string> names);
        Builder& set(size_t i, size_t j, std::vector<std::pair<size_t, Scalar>> coeffs);
        Builder& set(const std::string& x, const std::string& y,
                     std::vector<std::pair<std::string, std::string>> coeffs);
        LieData build() const; // verifies antisymmetry and Jacobi
    private:
        Field field_;
        std::vector<std::string> names_;
        std::vector<std::vector<std::vector<Scalar>>> c_;
    };

    void check_antisymmetry() const;
    void check_jacobi() const;

private:
    Field field_;
    std::vector<std::string> names_;
    std::vector<std::vector<std::vector<Scalar>>> bracket_; // [i][j] -> coeff vector
};

class QuadraticLieAlgebra;
using AlgebraPtr = std::shared_ptr<const QuadraticLieAlgebra>;

/// Element of a quadratic Lie algebra, as exact coordinates over its basis.
class Vec {
public:
    Vec() = default;
    Vec(AlgebraPtr alg, std::vector<Scalar> coeffs);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& operator[](size_t k) const { return coeffs_[k]; }
    size_t dim() const { return coeffs_.size(); }
    bool is_zero() const;

    Vec operator+(const Vec& o) const;
    Vec operator-(const Vec& o) const;
    Vec operator-() const;
    Vec scaled(const Scalar& s) const;
    Vec conj() const; // coefficient-wise i -> -i
    bool operator==(const Vec& o) const;

    std::string str() const;

private:
    AlgebraPtr alg_;
    std::vector<Scalar> coeffs_;
};

/// Linear subspace in canonical reduced-echelon representation, so equality
/// of subspaces is decidable structurally.
class Subspace {
public:
    Subspace() = default;
    Subspace(AlgebraPtr alg, const std::vector<Vec>& spanning);

    const AlgebraPtr& algebra() const { return alg_; }
    size_t dim() const { return basis_.rows(); }
    size_t ambient_dim() const { return basis_.cols(); }
    const Matrix& basis_matrix() const { return basis_; }
    Vec basis_vector(size_t k) const;
    std::vector<Vec> basis() const;

    bool contains(const Vec& v) const;
    bool contains(const Subspace& s) const;
    bool operator==(const Subspace& o) const;
    Subspace conjugated() const;

private:
    AlgebraPtr alg_;
    Matrix basis_; // rows = canonical RREF basis
};

class InvariantForm; // ceforms.hpp

/// Finite-dimensional Lie algebra with an invariant nondegenerate pairing.
class QuadraticLieAlgebra : public std::enable_shared_from_this<QuadraticLieAlgebra> {
public:
    /// Verifies antisymmetry, Jacobi, invariance of the pairing, symmetry and
    /// nondegeneracy of the Gram matrix; throws the named failures otherwise.
    static AlgebraPtr build(LieData lie, Matrix gram);

    const Field& field() const { return lie_.field(); }
    size_t dim() const { return lie_.dim(); }
    const std::vector<std::string>& names() const { return lie_.names(); }
    const LieData& lie() const { return lie_; }
    const Matrix& gram() const { return gram_; }

    Vec zero() const;
    Vec basis_vector(size_t i) const;
    Vec vec(std::vector<Scalar> coeffs) const;
    /// Element from a name -> coefficient-expression list.
    Vec parse_vec(const std::vector<std::pair<std::string, std::string>>& entries) const;

    Vec bracket(const Vec& a, const Vec& b) const;
    Scalar pair(const Vec& a, const Vec& b) const;

    Subspace full_subspace() const;
    Subspace span(const std::vector<Vec>& vecs) const;
    Subspace orthogonal_complement(const Subspace& s) const;
    /// The pairing restricted to s, as a dim(s) x dim(s) Gram matrix.
    Matrix restricted_gram(const Subspace& s) const;

private:
    QuadraticLieAlgebra(LieData lie, Matrix gram);
    LieData lie_;
    Matrix gram_;
};

/// Split each vector along pairwise-complementary subspaces that span the
/// ambient algebra; throws NotComplementary otherwise.
std::vector<Vec> project(const std::vector<Subspace>& decomposition, const Vec& a);

/// Quadratic Lie algebra on h + h* with the half-polarized pairing
/// <v+α, w+β> = (α(w)+β(v))/2 and the bracket twisted by a closed 3-form.
AlgebraPtr courant_double(const LieData& h, const InvariantForm& h3);

} // namespace sva
