#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sva/poly.hpp"

namespace sva {

class Scalar;

/// Error hierarchy shared by the whole library. Verification failures are
/// report content, not exceptions; exceptions mean a precondition was broken.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define SVA_ERROR(Name)                                                       \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name, what) {}        \
    }

SVA_ERROR(UndeclaredSymbol);
SVA_ERROR(DivisionByZero);
SVA_ERROR(NotInvertible);
SVA_ERROR(ParseError);

/// Immutable scalar field description: Q(i), a list of commuting parameters,
/// and declared square-root symbols r with a relation r^2 = f over the
/// previously declared symbols. Variable 0 is always the imaginary unit.
class Field {
public:
    enum class Kind { Imaginary, Parameter, Radical };

    struct Symbol {
        std::string name;
        Kind kind;
        Poly sq_num, sq_den; // radical only: r^2 = sq_num/sq_den
    };

    Field(); // just Q(i)

    size_t size() const { return data_->syms.size(); }
    const Symbol& symbol(size_t v) const { return data_->syms[v]; }
    std::optional<size_t> find(const std::string& name) const;
    std::vector<std::string> names() const;

    Field with_parameter(const std::string& name) const;
    Field with_radical(const std::string& name, const Scalar& square) const;
    /// Reuse an existing radical with the same square, else declare one.
    Field ensure_radical(const std::string& name_hint, const Scalar& square, size_t* var_out = nullptr) const;

    Scalar var(const std::string& name) const;
    Scalar i() const;
    Scalar of(long num, long den = 1) const;
    Scalar of(const Rational& q) const;

    /// Minimal expression grammar: rationals, i, declared symbols, + - * /,
    /// ^ with nonnegative integer exponents, and parentheses.
    Scalar parse(const std::string& expr) const;

    /// a extends b when b's symbol list is a prefix of a's.
    static bool extends(const Field& a, const Field& b);
    /// The larger of two prefix-compatible fields; throws otherwise.
    static Field unify(const Field& a, const Field& b);
    bool same(const Field& o) const { return data_ == o.data_; }

private:
    struct Data {
        std::vector<Symbol> syms;
    };
    std::shared_ptr<const Data> data_;
    friend class Scalar;
};

} // namespace sva
