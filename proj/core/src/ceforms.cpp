#include "sva/ceforms.hpp"

#include <bit>
#include <cassert>
#include <sstream>

#include "sva/report.hpp"

namespace sva {

InvariantForm::InvariantForm(LiePtr base) : base_(std::move(base)) {}

InvariantForm InvariantForm::monomial(LiePtr base, const std::vector<size_t>& idx, const Scalar& c) {
    InvariantForm f(base);
    uint32_t mask = 0;
    for (auto i : idx) {
        assert(i < base->dim());
        if (mask & (1u << i)) return f; // repeated index
        mask |= 1u << i;
    }
    // permutation sign by insertion sort
    int sign = 1;
    std::vector<size_t> sorted;
    for (auto i : idx) {
        size_t pos = sorted.size();
        while (pos > 0 && sorted[pos - 1] > i) --pos;
        if ((sorted.size() - pos) & 1) sign = -sign;
        sorted.insert(sorted.begin() + pos, i);
    }
    f.add_term(mask, sign < 0 ? -c : c);
    return f;
}

void InvariantForm::add_term(uint32_t mask, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        terms_.emplace(mask, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

InvariantForm InvariantForm::degree_part(size_t p) const {
    InvariantForm f(base_);
    for (auto& [mask, c] : terms_)
        if (size_t(std::popcount(mask)) == p) f.add_term(mask, c);
    return f;
}

size_t InvariantForm::max_degree() const {
    size_t d = 0;
    for (auto& [mask, c] : terms_) d = std::max(d, size_t(std::popcount(mask)));
    return d;
}

InvariantForm InvariantForm::operator+(const InvariantForm& o) const {
    InvariantForm f = *this;
    if (!f.base_) f.base_ = o.base_;
    for (auto& [mask, c] : o.terms_) f.add_term(mask, c);
    return f;
}

InvariantForm InvariantForm::operator-() const {
    InvariantForm f(base_);
    for (auto& [mask, c] : terms_) f.add_term(mask, -c);
    return f;
}

InvariantForm InvariantForm::operator-(const InvariantForm& o) const { return *this + (-o); }

InvariantForm InvariantForm::scaled(const Scalar& s) const {
    InvariantForm f(base_);
    for (auto& [mask, c] : terms_) f.add_term(mask, c * s);
    return f;
}

InvariantForm InvariantForm::wedge(const InvariantForm& o) const {
    InvariantForm f(base_ ? base_ : o.base_);
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) {
            if (ma & mb) continue;
            // sign: move each bit of mb past the higher bits of ma
            int sign = 1;
            for (size_t k = 0; k < 32; ++k)
                if ((mb >> k) & 1) {
                    uint32_t above = ma >> (k + 1);
                    if (std::popcount(above) & 1) sign = -sign;
                }
            Scalar c = ca * cb;
            f.add_term(ma | mb, sign < 0 ? -c : c);
        }
    return f;
}

bool InvariantForm::operator==(const InvariantForm& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (auto& [mask, c] : terms_) {
        auto it = o.terms_.find(mask);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

Scalar InvariantForm::eval(const std::vector<std::vector<Scalar>>& vectors) const {
    const Field& f = base_->field();
    size_t p = vectors.size();
    Scalar total = f.of(0);
    // expand the determinant pairing <v^{i1..ip}, (X_1..X_p)> over permutations
    std::vector<size_t> idx(p);
    for (auto& [mask, c] : terms_) {
        if (size_t(std::popcount(mask)) != p) continue;
        size_t t = 0;
        for (size_t k = 0; k < 32 && t < p; ++k)
            if ((mask >> k) & 1) idx[t++] = k;
        // det of matrix M[r][s] = v^{idx[r]}(X_s) = vectors[s][idx[r]]
        Matrix m(p, p, f);
        for (size_t r = 0; r < p; ++r)
            for (size_t s = 0; s < p; ++s) m.at(r, s) = vectors[s][idx[r]];
        total += c * m.det();
    }
    return total;
}

std::string InvariantForm::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [mask, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (mask) {
            os << "*";
            bool dot = false;
            for (size_t k = 0; k < 32; ++k)
                if ((mask >> k) & 1) {
                    if (dot) os << "^";
                    os << base_->names()[k] << "'";
                    dot = true;
                }
        }
    }
    return os.str();
}

InvariantForm ce_d(const InvariantForm& a) {
    LiePtr base = a.base();
    const Field& f = base->field();
    size_t n = base->dim();

    // d v^k = -(1/2) c_{ij}^k v^i ^ v^j
    std::vector<InvariantForm> d1(n, InvariantForm(base));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            const auto& c = base->bracket_coeffs(i, j);
            for (size_t k = 0; k < n; ++k)
                if (!c[k].is_zero()) d1[k].add_term((1u << i) | (1u << j), -c[k]);
        }

    InvariantForm out(base);
    for (auto& [mask, coeff] : a.terms()) {
        int sign = 1;
        for (size_t k = 0; k < 32; ++k) {
            if ((mask >> k) & 1) {
                // d passes the factors before v^k
                uint32_t rest = mask & ~(1u << k);
                for (auto& [dm, dc] : d1[k].terms()) {
                    if (dm & rest) continue;
                    // wedge dm into rest with the antiderivation sign
                    InvariantForm piece(base);
                    piece.add_term(dm, sign < 0 ? -(coeff * dc) : coeff * dc);
                    InvariantForm restf(base);
                    restf.add_term(rest, f.of(1));
                    out = out + piece.wedge(restf);
                }
                sign = -sign;
            }
        }
    }
    return out;
}

InvariantForm contract(const std::vector<Scalar>& x, const InvariantForm& a) {
    LiePtr base = a.base();
    InvariantForm out(base);
    for (auto& [mask, coeff] : a.terms()) {
        int sign = 1;
        for (size_t k = 0; k < 32; ++k)
            if ((mask >> k) & 1) {
                if (!x[k].is_zero()) out.add_term(mask & ~(1u << k), sign < 0 ? -(coeff * x[k]) : coeff * x[k]);
                sign = -sign;
            }
    }
    return out;
}

InvariantForm dc(const InvariantForm& omega, const Matrix& j) {
    LiePtr base = omega.base();
    const Field& f = base->field();
    size_t n = base->dim();
    Matrix j2 = j * j;
    if (!(j2 == Matrix::identity(n, f).scaled(f.of(-1)))) throw NotAlmostComplex("J^2 != -Id");

    InvariantForm d = ce_d(omega).degree_part(3);
    // (d^c w)(X,Y,Z) = -dw(JX, JY, JZ); evaluate on basis triples
    InvariantForm out(base);
    std::vector<std::vector<Scalar>> jcols(n);
    for (size_t cidx = 0; cidx < n; ++cidx) {
        jcols[cidx].assign(n, f.of(0));
        for (size_t r = 0; r < n; ++r) jcols[cidx][r] = j.at(r, cidx);
    }
    for (size_t a3 = 0; a3 < n; ++a3)
        for (size_t b3 = a3 + 1; b3 < n; ++b3)
            for (size_t c3 = b3 + 1; c3 < n; ++c3) {
                Scalar v = -d.eval({jcols[a3], jcols[b3], jcols[c3]});
                out.add_term((1u << a3) | (1u << b3) | (1u << c3), v);
            }
    return out;
}

Report verify_su_structure(const InvariantForm& omega, const InvariantForm& psi,
                           const InvariantForm& theta, const Matrix& j, const InvariantForm* h) {
    Report rep;
    rep.title = "invariant SU(n)-structure system";
    auto residual = [&](const std::string& label, const InvariantForm& r) {
        rep.add(label, r.is_zero(), r.is_zero() ? "" : "residual = " + r.str());
    };
    residual("d(psi) - theta^psi = 0", ce_d(psi) - theta.wedge(psi));
    residual("d(theta) = 0", ce_d(theta));
    InvariantForm dcw = dc(omega, j);
    residual("d(d^c omega) = 0", ce_d(dcw));
    residual("omega ^ psi = 0", omega.wedge(psi));
    if (h) residual("h = -d^c omega", *h + dcw);
    return rep;
}

} // namespace sva
