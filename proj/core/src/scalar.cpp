#include "sva/scalar.hpp"

#include <cassert>
#include <cctype>
#include <sstream>

namespace sva {

// ---------------------------------------------------------------------------
// Field

Field::Field() {
    static const std::shared_ptr<const Data> base = [] {
        auto d = std::make_shared<Data>();
        d->syms.push_back({"i", Kind::Imaginary, {}, {}});
        return d;
    }();
    data_ = base;
}

std::optional<size_t> Field::find(const std::string& name) const {
    for (size_t v = 0; v < data_->syms.size(); ++v)
        if (data_->syms[v].name == name) return v;
    return std::nullopt;
}

std::vector<std::string> Field::names() const {
    std::vector<std::string> n;
    for (auto& s : data_->syms) n.push_back(s.name);
    return n;
}

Field Field::with_parameter(const std::string& name) const {
    if (find(name)) throw Error("DuplicateSymbol", name);
    auto d = std::make_shared<Data>(*data_);
    d->syms.push_back({name, Kind::Parameter, {}, {}});
    Field f;
    f.data_ = std::move(d);
    return f;
}

Field Field::with_radical(const std::string& name, const Scalar& square) const {
    if (find(name)) throw Error("DuplicateSymbol", name);
    if (!extends(*this, square.field()))
        throw Error("FieldMismatch", "radical square must live in the base field");
    if (square.is_zero()) throw Error("BadRadical", name + "^2 = 0");
    auto d = std::make_shared<Data>(*data_);
    d->syms.push_back({name, Kind::Radical, square.num(), square.den()});
    Field f;
    f.data_ = std::move(d);
    return f;
}

Field Field::ensure_radical(const std::string& name_hint, const Scalar& square, size_t* var_out) const {
    for (size_t v = 0; v < size(); ++v) {
        auto& s = symbol(v);
        if (s.kind == Kind::Radical && s.sq_num == square.num() && s.sq_den == square.den()) {
            if (var_out) *var_out = v;
            return *this;
        }
    }
    std::string name = name_hint;
    for (int k = 2; find(name); ++k) name = name_hint + std::to_string(k);
    Field f = with_radical(name, square);
    if (var_out) *var_out = f.size() - 1;
    return f;
}

Scalar Field::var(const std::string& name) const {
    auto v = find(name);
    if (!v) throw UndeclaredSymbol(name);
    return Scalar::make(*this, Poly::variable(*v), Poly(Rational(1)));
}

Scalar Field::i() const { return Scalar::make(*this, Poly::variable(0), Poly(Rational(1))); }

Scalar Field::of(long num, long den) const { return of(Rational(num, den)); }

Scalar Field::of(const Rational& q) const { return Scalar::make(*this, Poly(q), Poly(Rational(1))); }

bool Field::extends(const Field& a, const Field& b) {
    if (a.data_ == b.data_) return true;
    if (b.size() > a.size()) return false;
    for (size_t v = 0; v < b.size(); ++v) {
        auto& sa = a.symbol(v);
        auto& sb = b.symbol(v);
        if (sa.name != sb.name || sa.kind != sb.kind) return false;
        if (sa.kind == Kind::Radical && (!(sa.sq_num == sb.sq_num) || !(sa.sq_den == sb.sq_den))) return false;
    }
    return true;
}

Field Field::unify(const Field& a, const Field& b) {
    if (extends(a, b)) return a;
    if (extends(b, a)) return b;
    throw Error("FieldMismatch", "scalars belong to incompatible fields");
}

// ---------------------------------------------------------------------------
// normal form

namespace {

// Rewrite powers >= 2 of i and of radicals; returns num', den' with
// p == num'/den' and all special variables of degree <= 1 in num' (den' may
// still contain earlier radicals and is reduced recursively by the caller).
void reduce_powers(const Field& f, Poly& p, Poly& den_acc) {
    // radicals from the most recently declared down, then i; a radical's
    // square only involves earlier symbols, so one sweep terminates.
    for (size_t vi = f.size(); vi-- > 0;) {
        auto& sym = f.symbol(vi);
        if (sym.kind == Field::Kind::Parameter) continue;
        if (p.degree_in(vi) <= 1) continue;
        if (sym.kind == Field::Kind::Imaginary) {
            std::vector<Poly::Term> acc;
            for (auto& t : p.terms()) {
                uint16_t e = t.mono.exp(0);
                Monomial m = t.mono;
                m.set_exp(0, e & 1);
                Rational c = t.coeff;
                if ((e / 2) & 1) c = -c;
                Poly::add_term(acc, m, c);
            }
            p = Poly::from_terms(std::move(acc));
        } else {
            uint16_t kmax = 0;
            for (auto& t : p.terms()) kmax = std::max<uint16_t>(kmax, t.mono.exp(vi) / 2);
            if (kmax == 0) continue;
            std::vector<Poly> num_pows(kmax + 1), den_pows(kmax + 1);
            num_pows[0] = den_pows[0] = Poly(Rational(1));
            for (uint16_t k = 1; k <= kmax; ++k) {
                num_pows[k] = num_pows[k - 1] * Poly(sym.sq_num);
                den_pows[k] = den_pows[k - 1] * Poly(sym.sq_den);
            }
            Poly out;
            for (auto& t : p.terms()) {
                uint16_t e = t.mono.exp(vi), k = e / 2;
                Monomial m = t.mono;
                m.set_exp(vi, e & 1);
                Poly piece = num_pows[k] * den_pows[kmax - k];
                out = out + piece.mul_term(m, t.coeff);
            }
            p = out;
            den_acc = den_acc * den_pows[kmax];
        }
    }
}

bool fully_reduced(const Field& f, const Poly& p) {
    for (size_t v = 0; v < f.size(); ++v)
        if (f.symbol(v).kind != Field::Kind::Parameter && p.degree_in(v) > 1) return false;
    return true;
}

void reduce_fraction(const Field& f, Poly& num, Poly& den) {
    while (!fully_reduced(f, num) || !fully_reduced(f, den)) {
        Poly dn{Rational(1)}, dd{Rational(1)};
        reduce_powers(f, num, dn);
        reduce_powers(f, den, dd);
        num = num * dd;
        den = den * dn;
    }
}

bool has_special(const Field& f, const Poly& p, size_t* var_out) {
    for (size_t v = f.size(); v-- > 0;) {
        if (f.symbol(v).kind == Field::Kind::Parameter) continue;
        if (p.uses_var(v)) {
            *var_out = v;
            return true;
        }
    }
    return false;
}

} // namespace

Scalar Scalar::make(const Field& f, Poly num, Poly den) {
    reduce_fraction(f, num, den);
    if (den.is_zero()) throw DivisionByZero("denominator is zero");

    // clear i and radicals out of the denominator by conjugation
    size_t v;
    while (has_special(f, den, &v)) {
        Poly a, b;
        den.split_linear(v, a, b);
        // (a + b r)(a - b r) = a^2 - b^2 r^2
        Poly conj = a - Poly::variable(v) * b;
        Poly n2 = num * conj;
        Poly d2;
        if (f.symbol(v).kind == Field::Kind::Imaginary) {
            d2 = a * a + b * b;
        } else {
            auto& sym = f.symbol(v);
            d2 = a * a * Poly(sym.sq_den) - b * b * Poly(sym.sq_num);
            n2 = n2 * Poly(sym.sq_den);
        }
        reduce_fraction(f, n2, d2);
        if (d2.is_zero())
            throw NotInvertible("zero divisor met while clearing '" + f.symbol(v).name +
                                "' from a denominator (inconsistent radical tower?)");
        num = std::move(n2);
        den = std::move(d2);
    }

    if (num.is_zero()) {
        Scalar s;
        s.field_ = f;
        return s;
    }
    // The denominator is free of i and radicals, so the gcd lives in the
    // parameter subring; splitting the numerator by its special-symbol
    // monomials keeps the gcd computation in few variables.
    std::map<std::vector<uint16_t>, std::vector<Poly::Term>> comps;
    for (auto& t : num.terms()) {
        std::vector<uint16_t> key;
        Monomial rest = t.mono;
        for (size_t v = 0; v < f.size(); ++v) {
            if (f.symbol(v).kind == Field::Kind::Parameter) continue;
            if (v < key.size() + 1) key.resize(v + 1, 0);
            key[v] = t.mono.exp(v);
            rest.set_exp(v, 0);
        }
        while (!key.empty() && key.back() == 0) key.pop_back();
        comps[key].push_back({rest, t.coeff});
    }
    Poly g = den;
    for (auto& [key, terms] : comps) {
        if (g.is_constant()) break;
        g = poly_gcd(g, Poly::from_terms(std::move(terms)));
    }
    if (!g.is_constant()) {
        num = poly_div_exact(num, g);
        den = poly_div_exact(den, g);
    }
    Rational lc = den.leading().coeff;
    num = num.mul_rat(Rational(1) / lc);
    den = den.mul_rat(Rational(1) / lc);

    Scalar s;
    s.field_ = f;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    return s;
}

bool Scalar::is_one() const { return den_ == Poly(Rational(1)) && num_ == Poly(Rational(1)); }

bool Scalar::is_rational() const { return num_.is_constant() && den_.is_constant(); }

Rational Scalar::rational_value() const {
    assert(is_rational());
    if (num_.is_zero()) return Rational(0);
    return num_.constant_value() / den_.constant_value();
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    s.num_ = -s.num_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Field f = Field::unify(field_, o.field_);
    if (den_ == o.den_) return make(f, num_ + o.num_, den_);
    return make(f, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    Field f = Field::unify(field_, o.field_);
    if (is_zero() || o.is_zero()) return f.of(0);
    return make(f, num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero("scalar division by zero");
    Field f = Field::unify(field_, o.field_);
    return make(f, num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return make(field_, den_, num_);
}

Scalar Scalar::conj() const {
    std::vector<Poly::Term> acc;
    for (auto& t : num_.terms()) {
        Rational c = t.coeff;
        if (t.mono.exp(0) & 1) c = -c;
        Poly::add_term(acc, t.mono, c);
    }
    return make(field_, Poly::from_terms(std::move(acc)), den_);
}

Scalar Scalar::pow(int e) const {
    Scalar base = e < 0 ? inverse() : *this;
    unsigned n = unsigned(e < 0 ? -e : e);
    Scalar r = field_.of(1);
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }

int Scalar::cmp(const Scalar& a, const Scalar& b) {
    auto cmp_poly = [](const Poly& x, const Poly& y) {
        auto &tx = x.terms(), &ty = y.terms();
        if (tx.size() != ty.size()) return tx.size() < ty.size() ? -1 : 1;
        for (size_t i = 0; i < tx.size(); ++i) {
            int c = Monomial::cmp(tx[i].mono, ty[i].mono);
            if (c) return c;
            if (tx[i].coeff != ty[i].coeff) return tx[i].coeff < ty[i].coeff ? -1 : 1;
        }
        return 0;
    };
    int c = cmp_poly(a.num_, b.num_);
    return c ? c : cmp_poly(a.den_, b.den_);
}

bool Scalar::radical_free() const {
    for (size_t v = 0; v < field_.size(); ++v)
        if (field_.symbol(v).kind == Field::Kind::Radical && uses_var(v)) return false;
    return true;
}

Scalar Scalar::substituted(const Field& target, const std::map<size_t, Scalar>& map) const {
    auto eval = [&](const Poly& p) {
        Scalar acc = target.of(0);
        for (auto& t : p.terms()) {
            Scalar term = target.of(t.coeff);
            for (size_t v = 0; v < t.mono.width(); ++v) {
                uint16_t e = t.mono.exp(v);
                if (!e) continue;
                Scalar base;
                auto it = map.find(v);
                if (it != map.end()) {
                    base = it->second;
                } else {
                    base = target.var(field_.symbol(v).name);
                }
                term = term * base.pow(e);
            }
            acc = acc + term;
        }
        return acc;
    };
    return eval(num_) / eval(den_);
}

std::string Scalar::str() const {
    auto names = field_.names();
    if (is_zero()) return "0";
    std::string n = num_.str(names);
    if (den_ == Poly(Rational(1))) return n;
    std::string d = den_.str(names);
    bool npar = num_.terms().size() > 1;
    bool dpar = den_.terms().size() > 1 || !den_.leading().mono.is_one() || true;
    std::string out = npar ? "(" + n + ")" : n;
    out += "/";
    out += dpar ? "(" + d + ")" : d;
    return out;
}

// ---------------------------------------------------------------------------
// expression parser

namespace {

struct Parser {
    const Field& f;
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(uint8_t(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at position " + std::to_string(pos) + " in '" + s + "'");
    }

    Scalar expr() {
        Scalar v = term();
        while (true) {
            skip();
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }
    Scalar term() {
        Scalar v = factor();
        while (true) {
            skip();
            if (eat('*'))
                v = v * factor();
            else if (eat('/'))
                v = v / factor();
            else
                return v;
        }
    }
    Scalar factor() {
        skip();
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        Scalar v = atom();
        skip();
        if (eat('^')) {
            skip();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(uint8_t(s[pos]))) ++pos;
            if (start == pos) fail("expected integer exponent");
            v = v.pow(std::stoi(s.substr(start, pos - start)));
        }
        return v;
    }
    Scalar atom() {
        skip();
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos < s.size() && std::isdigit(uint8_t(s[pos]))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(uint8_t(s[pos]))) ++pos;
            return f.of(Rational(Integer(s.substr(start, pos - start))));
        }
        if (pos < s.size() && (std::isalpha(uint8_t(s[pos])) || s[pos] == '_')) {
            size_t start = pos;
            while (pos < s.size() && (std::isalnum(uint8_t(s[pos])) || s[pos] == '_')) ++pos;
            std::string name = s.substr(start, pos - start);
            auto v = f.find(name);
            if (!v) throw UndeclaredSymbol(name);
            return f.var(name);
        }
        fail("unexpected character");
    }
};

} // namespace

Scalar Field::parse(const std::string& expr) const {
    Parser p{*this, expr};
    Scalar v = p.expr();
    p.skip();
    if (p.pos != expr.size()) p.fail("trailing input");
    return v;
}

} // namespace sva
