#include "sva/qla.hpp"

#include <cassert>
#include <sstream>

#include "sva/ceforms.hpp"

namespace sva {

// ---------------------------------------------------------------------------
// LieData

LieData::LieData(Field field, std::vector<std::string> names,
                 std::vector<std::vector<std::vector<Scalar>>> bracket)
    : field_(std::move(field)), names_(std::move(names)), bracket_(std::move(bracket)) {
    assert(bracket_.size() == names_.size());
}

LieData::Builder::Builder(const Field& f, std::vector<std::string> names)
    : field_(f), names_(std::move(names)) {
    size_t n = names_.size();
    c_.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, f.of(0))));
}

LieData::Builder& LieData::Builder::set(size_t i, size_t j, std::vector<std::pair<size_t, Scalar>> coeffs) {
    for (auto& [k, v] : coeffs) {
        c_[i][j][k] = v;
        c_[j][i][k] = -v;
    }
    return *this;
}

LieData::Builder& LieData::Builder::set(const std::string& x, const std::string& y,
                                        std::vector<std::pair<std::string, std::string>> coeffs) {
    auto index = [&](const std::string& n) {
        for (size_t k = 0; k < names_.size(); ++k)
            if (names_[k] == n) return k;
        throw UndeclaredSymbol("basis element '" + n + "'");
    };
    std::vector<std::pair<size_t, Scalar>> out;
    for (auto& [name, expr] : coeffs) out.emplace_back(index(name), field_.parse(expr));
    return set(index(x), index(y), std::move(out));
}

LieData LieData::Builder::build() const {
    LieData lie(field_, names_, c_);
    lie.check_antisymmetry();
    lie.check_jacobi();
    return lie;
}

void LieData::check_antisymmetry() const {
    size_t n = dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (bracket_[i][j][k] + bracket_[j][i][k] != field_.of(0))
                    throw AntisymmetryFailure("[" + names_[i] + "," + names_[j] + "] vs [" + names_[j] +
                                              "," + names_[i] + "]");
}

void LieData::check_jacobi() const {
    size_t n = dim();
    auto br = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
        std::vector<Scalar> r(n, field_.of(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (a[i].is_zero() || b[j].is_zero()) continue;
                Scalar c = a[i] * b[j];
                for (size_t k = 0; k < n; ++k)
                    if (!bracket_[i][j][k].is_zero()) r[k] += c * bracket_[i][j][k];
            }
        return r;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                std::vector<Scalar> ei(n, field_.of(0)), ej(n, field_.of(0)), ek(n, field_.of(0));
                ei[i] = ej[j] = ek[k] = field_.of(1);
                auto t1 = br(bracket_[i][j], ek);
                auto t2 = br(bracket_[j][k], ei);
                auto t3 = br(bracket_[k][i], ej);
                for (size_t m = 0; m < n; ++m)
                    if (!(t1[m] + t2[m] + t3[m]).is_zero())
                        throw JacobiFailure("jacobiator of (" + names_[i] + "," + names_[j] + "," +
                                            names_[k] + ") has component " + names_[m]);
            }
}

// ---------------------------------------------------------------------------
// Vec

Vec::Vec(AlgebraPtr alg, std::vector<Scalar> coeffs) : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != alg_->dim()) throw DimensionMismatch("vector length vs algebra dimension");
}

bool Vec::is_zero() const {
    for (auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

static void check_same_algebra(const Vec& a, const Vec& b) {
    if (a.algebra() != b.algebra()) throw DimensionMismatch("vectors from different algebras");
}

Vec Vec::operator+(const Vec& o) const {
    check_same_algebra(*this, o);
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); ++k) c.push_back(coeffs_[k] + o.coeffs_[k]);
    return Vec(alg_, std::move(c));
}

Vec Vec::operator-(const Vec& o) const { return *this + (-o); }

Vec Vec::operator-() const {
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (auto& x : coeffs_) c.push_back(-x);
    return Vec(alg_, std::move(c));
}

Vec Vec::scaled(const Scalar& s) const {
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (auto& x : coeffs_) c.push_back(x * s);
    return Vec(alg_, std::move(c));
}

Vec Vec::conj() const {
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (auto& x : coeffs_) c.push_back(x.conj());
    return Vec(alg_, std::move(c));
}

bool Vec::operator==(const Vec& o) const {
    if (alg_ != o.alg_) return false;
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != o.coeffs_[k]) return false;
    return true;
}

std::string Vec::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[k].str() << ")*" << alg_->names()[k];
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(AlgebraPtr alg, const std::vector<Vec>& spanning) : alg_(std::move(alg)) {
    const Field& f = alg_->field();
    Matrix m(spanning.size(), alg_->dim(), f);
    for (size_t r = 0; r < spanning.size(); ++r) {
        if (spanning[r].algebra() != alg_) throw DimensionMismatch("spanning vector from another algebra");
        for (size_t c = 0; c < alg_->dim(); ++c) m.at(r, c) = spanning[r][c];
    }
    auto pivots = m.rref();
    basis_ = Matrix(pivots.size(), alg_->dim(), f);
    for (size_t r = 0; r < pivots.size(); ++r)
        for (size_t c = 0; c < alg_->dim(); ++c) basis_.at(r, c) = m.at(r, c);
}

Vec Subspace::basis_vector(size_t k) const {
    std::vector<Scalar> c;
    for (size_t j = 0; j < basis_.cols(); ++j) c.push_back(basis_.at(k, j));
    return Vec(alg_, std::move(c));
}

std::vector<Vec> Subspace::basis() const {
    std::vector<Vec> out;
    for (size_t k = 0; k < dim(); ++k) out.push_back(basis_vector(k));
    return out;
}

bool Subspace::contains(const Vec& v) const {
    Matrix m(dim() + 1, ambient_dim(), alg_->field());
    for (size_t r = 0; r < dim(); ++r)
        for (size_t c = 0; c < ambient_dim(); ++c) m.at(r, c) = basis_.at(r, c);
    for (size_t c = 0; c < ambient_dim(); ++c) m.at(dim(), c) = v[c];
    return m.rank() == dim();
}

bool Subspace::contains(const Subspace& s) const {
    for (size_t k = 0; k < s.dim(); ++k)
        if (!contains(s.basis_vector(k))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const { return alg_ == o.alg_ && basis_ == o.basis_; }

Subspace Subspace::conjugated() const {
    std::vector<Vec> rows;
    for (size_t k = 0; k < dim(); ++k) rows.push_back(basis_vector(k).conj());
    return Subspace(alg_, rows);
}

// ---------------------------------------------------------------------------
// QuadraticLieAlgebra

QuadraticLieAlgebra::QuadraticLieAlgebra(LieData lie, Matrix gram)
    : lie_(std::move(lie)), gram_(std::move(gram)) {}

AlgebraPtr QuadraticLieAlgebra::build(LieData lie, Matrix gram) {
    const Field& f = lie.field();
    size_t n = lie.dim();
    if (gram.rows() != n || gram.cols() != n) throw DimensionMismatch("Gram matrix size");

    lie.check_antisymmetry();
    lie.check_jacobi();

    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            if (gram.at(i, j) != gram.at(j, i))
                throw DegeneratePairing("Gram matrix is not symmetric at (" + lie.names()[i] + "," +
                                        lie.names()[j] + ")");
    if (gram.det().is_zero()) throw DegeneratePairing("Gram matrix has zero determinant");

    // invariance <[a,b],c> + <b,[a,c]> = 0 on basis triples
    auto pair_basis = [&](const std::vector<Scalar>& v, size_t c) {
        Scalar s = f.of(0);
        for (size_t k = 0; k < n; ++k)
            if (!v[k].is_zero() && !gram.at(k, c).is_zero()) s += v[k] * gram.at(k, c);
        return s;
    };
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = b; c < n; ++c) {
                Scalar lhs = pair_basis(lie.bracket_coeffs(a, b), c) + pair_basis(lie.bracket_coeffs(a, c), b);
                if (!lhs.is_zero())
                    throw InvarianceFailure("<[" + lie.names()[a] + "," + lie.names()[b] + "]," +
                                            lie.names()[c] + "> + <" + lie.names()[b] + ",[" +
                                            lie.names()[a] + "," + lie.names()[c] + "]> != 0");
            }

    return AlgebraPtr(new QuadraticLieAlgebra(std::move(lie), std::move(gram)));
}

Vec QuadraticLieAlgebra::zero() const {
    return Vec(shared_from_this(), std::vector<Scalar>(dim(), field().of(0)));
}

Vec QuadraticLieAlgebra::basis_vector(size_t i) const {
    std::vector<Scalar> c(dim(), field().of(0));
    c[i] = field().of(1);
    return Vec(shared_from_this(), std::move(c));
}

Vec QuadraticLieAlgebra::vec(std::vector<Scalar> coeffs) const {
    return Vec(shared_from_this(), std::move(coeffs));
}

Vec QuadraticLieAlgebra::parse_vec(const std::vector<std::pair<std::string, std::string>>& entries) const {
    std::vector<Scalar> c(dim(), field().of(0));
    for (auto& [name, expr] : entries) {
        size_t idx = dim();
        for (size_t k = 0; k < dim(); ++k)
            if (names()[k] == name) idx = k;
        if (idx == dim()) throw UndeclaredSymbol("basis element '" + name + "'");
        c[idx] += field().parse(expr);
    }
    return Vec(shared_from_this(), std::move(c));
}

Vec QuadraticLieAlgebra::bracket(const Vec& a, const Vec& b) const {
    if (a.algebra().get() != this || b.algebra().get() != this)
        throw DimensionMismatch("bracket arguments from another algebra");
    size_t n = dim();
    std::vector<Scalar> r(n, field().of(0));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            const auto& coeffs = lie_.bracket_coeffs(i, j);
            for (size_t k = 0; k < n; ++k)
                if (!coeffs[k].is_zero()) r[k] += c * coeffs[k];
        }
    }
    return Vec(shared_from_this(), std::move(r));
}

Scalar QuadraticLieAlgebra::pair(const Vec& a, const Vec& b) const {
    if (a.algebra().get() != this || b.algebra().get() != this)
        throw DimensionMismatch("pairing arguments from another algebra");
    Scalar s = field().of(0);
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim(); ++j)
            if (!b[j].is_zero() && !gram_.at(i, j).is_zero()) s += a[i] * b[j] * gram_.at(i, j);
    }
    return s;
}

Subspace QuadraticLieAlgebra::full_subspace() const {
    std::vector<Vec> rows;
    for (size_t i = 0; i < dim(); ++i) rows.push_back(basis_vector(i));
    return Subspace(shared_from_this(), rows);
}

Subspace QuadraticLieAlgebra::span(const std::vector<Vec>& vecs) const {
    return Subspace(shared_from_this(), vecs);
}

Subspace QuadraticLieAlgebra::orthogonal_complement(const Subspace& s) const {
    // kernel of the (dim s) x n map v -> <s_k, v>
    size_t n = dim(), m = s.dim();
    Matrix sys(m, n, field());
    for (size_t r = 0; r < m; ++r) {
        Vec row = s.basis_vector(r);
        for (size_t c = 0; c < n; ++c) {
            Scalar val = field().of(0);
            for (size_t k = 0; k < n; ++k)
                if (!row[k].is_zero() && !gram_.at(k, c).is_zero()) val += row[k] * gram_.at(k, c);
            sys.at(r, c) = val;
        }
    }
    auto pivots = sys.rref();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> kernel;
    for (size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Scalar> v(n, field().of(0));
        v[fc] = field().of(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -sys.at(r, fc);
        kernel.emplace_back(shared_from_this(), std::move(v));
    }
    return Subspace(shared_from_this(), kernel);
}

Matrix QuadraticLieAlgebra::restricted_gram(const Subspace& s) const {
    Matrix g(s.dim(), s.dim(), field());
    for (size_t i = 0; i < s.dim(); ++i)
        for (size_t j = 0; j < s.dim(); ++j) g.at(i, j) = pair(s.basis_vector(i), s.basis_vector(j));
    return g;
}

// ---------------------------------------------------------------------------

std::vector<Vec> project(const std::vector<Subspace>& decomposition, const Vec& a) {
    if (decomposition.empty()) throw NotComplementary("empty decomposition");
    AlgebraPtr alg = a.algebra();
    const Field& f = alg->field();
    size_t n = alg->dim(), total = 0;
    for (auto& s : decomposition) {
        if (s.algebra() != alg) throw DimensionMismatch("subspace from another algebra");
        total += s.dim();
    }
    if (total != n) throw NotComplementary("subspace dimensions do not sum to the ambient dimension");

    Matrix sys(n, n, f);
    size_t col = 0;
    for (auto& s : decomposition)
        for (size_t k = 0; k < s.dim(); ++k, ++col) {
            Vec b = s.basis_vector(k);
            for (size_t r = 0; r < n; ++r) sys.at(r, col) = b[r];
        }
    std::vector<Scalar> x;
    try {
        x = sys.solve(a.coeffs());
    } catch (const NotInvertible&) {
        throw NotComplementary("subspaces overlap or fail to span");
    }
    std::vector<Vec> parts;
    col = 0;
    for (auto& s : decomposition) {
        Vec part = alg->zero();
        for (size_t k = 0; k < s.dim(); ++k, ++col) part = part + s.basis_vector(k).scaled(x[col]);
        parts.push_back(part);
    }
    return parts;
}

AlgebraPtr courant_double(const LieData& h, const InvariantForm& h3) {
    const Field& f = h.field();
    size_t n = h.dim();
    if (!ce_d(h3).is_zero()) throw NotClosed("the twisting 3-form is not closed");

    std::vector<std::string> names = h.names();
    for (auto& nm : h.names()) names.push_back(nm + "^");

    size_t N = 2 * n;
    std::vector<std::vector<std::vector<Scalar>>> c(
        N, std::vector<std::vector<Scalar>>(N, std::vector<Scalar>(N, f.of(0))));

    std::vector<std::vector<Scalar>> basis_coords(n);
    for (size_t i = 0; i < n; ++i) {
        basis_coords[i].assign(n, f.of(0));
        basis_coords[i][i] = f.of(1);
    }

    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            // [e_i, e_j] = [e_i,e_j]_h + i_{e_j} i_{e_i} H3
            const auto& hb = h.bracket_coeffs(i, j);
            for (size_t k = 0; k < n; ++k) c[i][j][k] = hb[k];
            InvariantForm tw = contract(basis_coords[j], contract(basis_coords[i], h3));
            for (auto& [mask, coeff] : tw.terms()) {
                size_t k = 0;
                while (!((mask >> k) & 1)) ++k;
                c[i][j][n + k] = c[i][j][n + k] + coeff;
            }
            // [e_i, e^j] = -e^j([e_i, .]) ; [e^j, e_i] by antisymmetry
            for (size_t m = 0; m < n; ++m) {
                Scalar v = -h.bracket_coeffs(i, m)[j];
                c[i][n + j][n + m] = v;
                c[n + j][i][n + m] = -v;
            }
        }

    Matrix gram(N, N, f);
    for (size_t i = 0; i < n; ++i) {
        gram.at(i, n + i) = f.of(1, 2);
        gram.at(n + i, i) = f.of(1, 2);
    }
    return QuadraticLieAlgebra::build(LieData(f, std::move(names), std::move(c)), std::move(gram));
}

} // namespace sva
