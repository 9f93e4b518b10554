#include "sva/poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace sva {

void Monomial::trim() {
    while (!exp_.empty() && exp_.back() == 0) exp_.pop_back();
}

void Monomial::set_exp(size_t v, uint16_t e) {
    if (v >= exp_.size()) {
        if (e == 0) return;
        exp_.resize(v + 1, 0);
    }
    exp_[v] = e;
    trim();
}

uint32_t Monomial::total_degree() const {
    uint32_t d = 0;
    for (auto e : exp_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<uint16_t> e(std::max(exp_.size(), o.exp_.size()), 0);
    for (size_t v = 0; v < e.size(); ++v) {
        uint32_t s = uint32_t(exp(v)) + uint32_t(o.exp(v));
        assert(s <= 0xffff);
        e[v] = uint16_t(s);
    }
    return Monomial(std::move(e));
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    size_t w = std::max(a.exp_.size(), b.exp_.size());
    for (size_t v = 0; v < w; ++v) {
        uint16_t ea = a.exp(v), eb = b.exp(v);
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.push_back({Monomial(), c});
}

Poly Poly::variable(size_t v, uint16_t e) {
    Poly p;
    if (e == 0) return Poly(Rational(1));
    Monomial m;
    m.set_exp(v, e);
    p.terms_.push_back({m, Rational(1)});
    return p;
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    assert(terms_.size() == 1 && terms_[0].mono.is_one());
    return terms_[0].coeff;
}

static bool term_before(const Poly::Term& a, const Poly::Term& b) {
    return Monomial::cmp(a.mono, b.mono) > 0; // descending
}

Poly Poly::from_terms(std::vector<Term> t) {
    std::sort(t.begin(), t.end(), term_before);
    Poly p;
    for (auto& term : t) {
        if (!p.terms_.empty() && p.terms_.back().mono == term.mono)
            p.terms_.back().coeff += term.coeff;
        else
            p.terms_.push_back(std::move(term));
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    }
    return p;
}

void Poly::add_term(std::vector<Term>& acc, const Monomial& m, const Rational& c) {
    if (c != 0) acc.push_back({m, c});
}

Poly Poly::operator-() const {
    Poly p(*this);
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = Monomial::cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

Poly Poly::mul_rat(const Rational& c) const { return mul_term(Monomial(), c); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (auto& a : terms_)
        for (auto& b : o.terms_) acc.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return from_terms(std::move(acc));
}

Poly Poly::pow(uint32_t e) const {
    Poly r{Rational(1)};
    Poly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

uint16_t Poly::degree_in(size_t v) const {
    uint16_t d = 0;
    for (auto& t : terms_) d = std::max(d, t.mono.exp(v));
    return d;
}

bool Poly::uses_var(size_t v) const {
    for (auto& t : terms_)
        if (t.mono.exp(v) != 0) return true;
    return false;
}

size_t Poly::max_var() const {
    size_t w = 0;
    for (auto& t : terms_) w = std::max(w, t.mono.width());
    return w;
}

void Poly::split_linear(size_t v, Poly& a, Poly& b) const {
    std::vector<Term> ta, tb;
    for (auto& t : terms_) {
        uint16_t e = t.mono.exp(v);
        assert(e <= 1);
        if (e == 0) {
            ta.push_back(t);
        } else {
            Monomial m = t.mono;
            m.set_exp(v, 0);
            tb.push_back({m, t.coeff});
        }
    }
    a = from_terms(std::move(ta));
    b = from_terms(std::move(tb));
}

std::vector<Poly> Poly::collect(size_t v) const {
    std::vector<std::vector<Term>> buckets(size_t(degree_in(v)) + 1);
    for (auto& t : terms_) {
        uint16_t e = t.mono.exp(v);
        Monomial m = t.mono;
        m.set_exp(v, 0);
        buckets[e].push_back({m, t.coeff});
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
    return out;
}

Poly Poly::assemble(size_t v, const std::vector<Poly>& coeffs) {
    std::vector<Term> acc;
    for (size_t e = 0; e < coeffs.size(); ++e)
        for (auto& t : coeffs[e].terms()) {
            Monomial m = t.mono;
            m.set_exp(v, uint16_t(m.exp(v) + e));
            acc.push_back({m, t.coeff});
        }
    return from_terms(std::move(acc));
}

Rational Poly::content() const {
    if (terms_.empty()) return Rational(1);
    Integer gn = 0, ld = 1;
    for (auto& t : terms_) {
        gn = boost::multiprecision::gcd(gn, rat_num(t.coeff));
        ld = ld / boost::multiprecision::gcd(ld, rat_den(t.coeff)) * rat_den(t.coeff);
    }
    Rational c(gn, ld);
    if (terms_.front().coeff < 0) c = -c;
    return c;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool printed = false;
        if (c != 1 || t.mono.is_one()) {
            os << c.str();
            printed = true;
        }
        for (size_t v = 0; v < t.mono.width(); ++v) {
            uint16_t e = t.mono.exp(v);
            if (!e) continue;
            if (printed) os << "*";
            os << (v < names.size() ? names[v] : "#" + std::to_string(v));
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// multivariate gcd (primitive PRS)

namespace {

size_t lowest_var(const Poly& p) {
    size_t best = SIZE_MAX;
    for (auto& t : p.terms())
        for (size_t v = 0; v < t.mono.width(); ++v)
            if (t.mono.exp(v)) {
                best = std::min(best, v);
                break;
            }
    return best;
}

Poly int_primitive(const Poly& p) { return p.mul_rat(Rational(1) / p.content()); }

Monomial monomial_content(const Poly& p) {
    Monomial m = p.terms().front().mono;
    for (auto& t : p.terms()) {
        std::vector<uint16_t> e;
        for (size_t v = 0; v < m.width(); ++v) e.push_back(std::min(m.exp(v), t.mono.exp(v)));
        m = Monomial(std::move(e));
        if (m.is_one()) break;
    }
    return m;
}

Poly strip_monomial(const Poly& p, const Monomial& m) {
    if (m.is_one()) return p;
    std::vector<Poly::Term> acc;
    for (auto& t : p.terms()) {
        std::vector<uint16_t> e;
        for (size_t v = 0; v < t.mono.width(); ++v) e.push_back(uint16_t(t.mono.exp(v) - m.exp(v)));
        acc.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Poly::from_terms(std::move(acc));
}

// content of p viewed as univariate in v, as a poly in the remaining vars
Poly content_in(const Poly& p, size_t v) {
    Poly g;
    for (auto& c : p.collect(v)) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

// textbook pseudo-remainder: lc_v(b)^(deg_a - deg_b + 1) * a mod b
Poly prem(Poly a, const Poly& b, size_t v) {
    auto bc = b.collect(v);
    int db = int(bc.size()) - 1;
    const Poly& lb = bc.back();
    int e = int(a.degree_in(v)) - db + 1;
    while (true) {
        auto ac = a.collect(v);
        int da = int(ac.size()) - 1;
        if (a.is_zero() || da < db) break;
        Poly la = ac.back();
        Monomial shift;
        shift.set_exp(v, uint16_t(da - db));
        a = a * lb - (b * la).mul_term(shift, Rational(1));
        --e;
    }
    for (; e > 0; --e) a = a * lb;
    return a;
}

size_t pick_common_var(const Poly& a, const Poly& b, bool* found) {
    size_t best = 0;
    uint32_t best_score = UINT32_MAX;
    *found = false;
    size_t w = std::max(a.max_var(), b.max_var());
    for (size_t v = 0; v < w; ++v) {
        uint16_t da = a.degree_in(v), db = b.degree_in(v);
        if (!da || !db) continue;
        uint32_t score = uint32_t(std::max(da, db));
        if (score < best_score) {
            best_score = score;
            best = v;
            *found = true;
        }
    }
    return best;
}

} // namespace

Poly poly_gcd(const Poly& a0, const Poly& b0) {
    if (a0.is_zero()) return b0.is_zero() ? Poly() : int_primitive(b0);
    if (b0.is_zero()) return int_primitive(a0);
    if (a0.is_constant() || b0.is_constant()) return Poly(Rational(1));

    Monomial ma = monomial_content(a0), mb = monomial_content(b0);
    std::vector<uint16_t> me;
    for (size_t v = 0; v < std::min(ma.width(), mb.width()); ++v)
        me.push_back(std::min(ma.exp(v), mb.exp(v)));
    Monomial mg{std::move(me)};
    Poly a = strip_monomial(a0, ma), b = strip_monomial(b0, mb);
    Poly common = Poly::variable(0, 0).mul_term(mg, Rational(1));

    if (a.is_constant() || b.is_constant()) return int_primitive(common);

    bool found;
    size_t v = pick_common_var(a, b, &found);
    if (!found) return int_primitive(common); // no shared variable: coprime up to mg

    Poly ca = content_in(a, v), cb = content_in(b, v);
    a = poly_div_exact(a, ca);
    b = poly_div_exact(b, cb);
    Poly cg = poly_gcd(ca, cb) * common;

    // subresultant polynomial remainder sequence
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    Poly g{Rational(1)}, h{Rational(1)};
    while (true) {
        int delta = int(a.degree_in(v)) - int(b.degree_in(v));
        Poly r = prem(a, b, v);
        if (r.is_zero()) break;
        if (!r.uses_var(v)) return int_primitive(cg);
        a = b;
        b = poly_div_exact(r, g * h.pow(uint32_t(delta)));
        g = a.collect(v).back();
        if (delta > 0) h = delta == 1 ? g : poly_div_exact(g.pow(uint32_t(delta)), h.pow(uint32_t(delta - 1)));
    }
    Poly pp = poly_div_exact(b, content_in(b, v));
    return int_primitive(cg * pp);
}

namespace {

bool div_exact_impl(const Poly& a, const Poly& b, Poly& out) {
    if (a.is_zero()) { out = Poly(); return true; }
    if (b.is_constant()) {
        out = a.mul_rat(Rational(1) / b.constant_value());
        return true;
    }
    size_t v = lowest_var(b);
    auto bc = b.collect(v);
    int db = int(bc.size()) - 1;
    const Poly& lb = bc.back();
    Poly rem = a;
    std::vector<Poly> q(std::max<int>(int(a.degree_in(v)) - db + 1, 0));
    while (!rem.is_zero()) {
        auto rc = rem.collect(v);
        int dr = int(rc.size()) - 1;
        if (dr < db) return false;
        Poly qc;
        if (!div_exact_impl(rc.back(), lb, qc)) return false;
        q[size_t(dr - db)] = qc;
        Monomial shift;
        shift.set_exp(v, uint16_t(dr - db));
        rem = rem - (b * qc).mul_term(shift, Rational(1));
        if (!rem.is_zero() && int(rem.collect(v).size()) - 1 >= dr) return false;
    }
    out = Poly::assemble(v, q);
    return true;
}

} // namespace

Poly poly_div_exact(const Poly& a, const Poly& b) {
    Poly out;
    bool ok = div_exact_impl(a, b, out);
    assert(ok && "poly_div_exact: inexact division");
    (void)ok;
    return out;
}

bool poly_divides(const Poly& b, const Poly& a) {
    Poly out;
    return div_exact_impl(a, b, out);
}

} // namespace sva
