#pragma once

/// Exact arithmetic over the supported commutative base rings:
/// the integers (GMP bignums), Z/n for any n >= 2, and the rationals.
/// Every ring is a small value-semantic context object; elements are
/// plain values and all operations are pure.

#include <cctype>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "sphere/errors.hpp"

namespace sphere {

/// Requirements every ring context satisfies. Equality of elements is
/// canonical-representation equality; there is no tolerance anywhere.
template <typename R>
concept ring_type = requires(const R r, const typename R::Elem a, const typename R::Elem b) {
    typename R::Elem;
    { r.zero() } -> std::convertible_to<typename R::Elem>;
    { r.one() } -> std::convertible_to<typename R::Elem>;
    { r.add(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.sub(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.mul(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.neg(a) } -> std::convertible_to<typename R::Elem>;
    { r.eq(a, b) } -> std::convertible_to<bool>;
    { r.is_invertible(a) } -> std::convertible_to<bool>;
    { r.invert(a) } -> std::convertible_to<typename R::Elem>;
    { r.str(a) } -> std::convertible_to<std::string>;
    { r.finite() } -> std::convertible_to<bool>;
    { r.descriptor() } -> std::convertible_to<std::string>;
};

/// Z/n with runtime modulus. Residues are stored reduced in [0, n).
/// n is capped so that products fit in int64 before reduction.
class ZmodRing {
public:
    using Elem = std::int64_t;

    explicit ZmodRing(std::int64_t n) : n_(n) {
        if (n < 2) throw ParseError("zmod modulus must be >= 2");
        if (n > (std::int64_t{1} << 31)) throw ParseError("zmod modulus too large");
    }

    std::int64_t modulus() const { return n_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % n_; }
    Elem from_int(long long v) const {
        Elem r = static_cast<Elem>(v % n_);
        return r < 0 ? r + n_ : r;
    }

    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= n_ ? s - n_ : s; }
    Elem sub(Elem a, Elem b) const { Elem s = a - b; return s < 0 ? s + n_ : s; }
    Elem neg(Elem a) const { return a == 0 ? 0 : n_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % n_; }

    bool eq(Elem a, Elem b) const { return a == b; }
    bool is_zero(Elem a) const { return a == 0; }

    // gcd test: Z/n is a first-class ring for composite n, never assumed a field.
    bool is_invertible(Elem a) const { return std::gcd(a, n_) == 1; }

    Elem invert(Elem a) const {
        // extended Euclid
        std::int64_t t = 0, new_t = 1, r = n_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (r != 1) throw NotInvertible(std::to_string(a) + " not invertible mod " + std::to_string(n_));
        return t < 0 ? t + n_ : t;
    }

    std::string str(Elem a) const { return std::to_string(a); }

    Elem parse(std::string_view s) const;

    bool finite() const { return true; }
    std::int64_t size() const { return n_; }
    Elem nth(std::int64_t i) const { return i; }

    Elem sample(std::mt19937_64& rng) const {
        return static_cast<Elem>(rng() % static_cast<std::uint64_t>(n_));
    }

    int cmp(Elem a, Elem b) const { return a < b ? -1 : a > b ? 1 : 0; }

    std::string descriptor() const { return "zmod:" + std::to_string(n_); }

    bool operator==(const ZmodRing& o) const { return n_ == o.n_; }

private:
    std::int64_t n_;
};

/// The ring of integers, backed by GMP. Doubling chains and 5-fold
/// products overflow 64-bit over Z with moderate coefficients, so
/// arbitrary precision is not optional.
class ZRing {
public:
    using Elem = mpz_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }

    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a == 0; }

    bool is_invertible(const Elem& a) const { return a == 1 || a == -1; }
    Elem invert(const Elem& a) const {
        if (!is_invertible(a)) throw NotInvertible(str(a) + " not invertible in Z");
        return a;
    }

    std::string str(const Elem& a) const { return a.get_str(); }
    Elem parse(std::string_view s) const;

    bool finite() const { return false; }

    /// Seeded sampling draws from a fixed symmetric window; reports record the seed.
    Elem sample(std::mt19937_64& rng) const {
        return Elem(static_cast<long>(static_cast<std::int64_t>(rng() % 101) - 50));
    }

    int cmp(const Elem& a, const Elem& b) const { return ::cmp(a, b) < 0 ? -1 : ::cmp(a, b) > 0 ? 1 : 0; }

    std::string descriptor() const { return "int"; }

    bool operator==(const ZRing&) const { return true; }
};

/// The rationals, stored in lowest terms with positive denominator
/// (mpq_class canonical form).
class QRing {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }

    Elem add(const Elem& a, const Elem& b) const { Elem r = a + b; r.canonicalize(); return r; }
    Elem sub(const Elem& a, const Elem& b) const { Elem r = a - b; r.canonicalize(); return r; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { Elem r = a * b; r.canonicalize(); return r; }

    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a == 0; }

    bool is_invertible(const Elem& a) const { return a != 0; }
    Elem invert(const Elem& a) const {
        if (a == 0) throw NotInvertible("0 not invertible in Q");
        return 1 / a;
    }

    std::string str(const Elem& a) const { return a.get_str(); }
    Elem parse(std::string_view s) const;

    bool finite() const { return false; }

    Elem sample(std::mt19937_64& rng) const {
        long num = static_cast<long>(static_cast<std::int64_t>(rng() % 41) - 20);
        long den = static_cast<long>(rng() % 9 + 1);
        Elem r(num, den);
        r.canonicalize();
        return r;
    }

    int cmp(const Elem& a, const Elem& b) const { return ::cmp(a, b) < 0 ? -1 : ::cmp(a, b) > 0 ? 1 : 0; }

    std::string descriptor() const { return "rat"; }

    bool operator==(const QRing&) const { return true; }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline mpz_class parse_mpz(std::string_view s) {
    s = trim(s);
    if (s.empty()) throw ParseError("empty integer literal");
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), std::string(s).c_str(), 10) != 0)
        throw ParseError("bad integer literal '" + std::string(s) + "'");
    return v;
}

} // namespace detail

inline ZmodRing::Elem ZmodRing::parse(std::string_view s) const {
    mpz_class v = detail::parse_mpz(s);
    mpz_class m(static_cast<long>(n_));
    mpz_class r = v % m;
    if (r < 0) r += m;
    return static_cast<Elem>(r.get_si());
}

inline ZRing::Elem ZRing::parse(std::string_view s) const { return detail::parse_mpz(s); }

inline QRing::Elem QRing::parse(std::string_view s) const {
    s = detail::trim(s);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Elem(detail::parse_mpz(s));
    mpz_class num = detail::parse_mpz(s.substr(0, slash));
    mpz_class den = detail::parse_mpz(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    Elem r(num, den);
    r.canonicalize();
    return r;
}

/// Runtime ring descriptor, the textual syntax is `int`, `zmod:<n>`, `rat`.
struct RingDesc {
    enum class Kind { integers, modular, rationals };
    Kind kind = Kind::integers;
    std::int64_t n = 0; // modulus when kind == modular

    static RingDesc parse(std::string_view s) {
        s = detail::trim(s);
        if (s == "int") return {Kind::integers, 0};
        if (s == "rat") return {Kind::rationals, 0};
        if (s.substr(0, 5) == "zmod:") {
            mpz_class n = detail::parse_mpz(s.substr(5));
            if (n < 2 || n > (std::int64_t{1} << 31)) throw ParseError("bad modulus in '" + std::string(s) + "'");
            return {Kind::modular, n.get_si()};
        }
        throw ParseError("unknown ring descriptor '" + std::string(s) + "' (expected int, zmod:<n>, rat)");
    }

    std::string str() const {
        switch (kind) {
            case Kind::integers: return "int";
            case Kind::rationals: return "rat";
            case Kind::modular: return "zmod:" + std::to_string(n);
        }
        return "?";
    }
};

/// Instantiate the right ring type for a descriptor and call f with it.
template <typename F>
decltype(auto) with_ring(const RingDesc& d, F&& f) {
    switch (d.kind) {
        case RingDesc::Kind::integers: return f(ZRing{});
        case RingDesc::Kind::rationals: return f(QRing{});
        case RingDesc::Kind::modular: return f(ZmodRing{d.n});
    }
    throw ParseError("corrupt ring descriptor");
}

// --- tiny ring-expression evaluator ---------------------------------------
//
// Grammar:  expr   := term (('+' | '-') term)*
//           term   := factor ('*' factor)*
//           factor := '-' factor | '(' expr ')' | literal
// Literals are integers, or a/b over the rationals. Total on valid input.

namespace detail {

template <ring_type R>
class ExprParser {
public:
    ExprParser(const R& ring, std::string_view s) : ring_(ring), s_(s) {}

    typename R::Elem run() {
        auto v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input in ring expression");
        return v;
    }

private:
    const R& ring_;
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    typename R::Elem expr() {
        auto v = term();
        for (;;) {
            if (eat('+')) v = ring_.add(v, term());
            else if (eat('-')) v = ring_.sub(v, term());
            else return v;
        }
    }

    typename R::Elem term() {
        auto v = factor();
        while (eat('*')) v = ring_.mul(v, factor());
        return v;
    }

    typename R::Elem factor() {
        if (eat('-')) return ring_.neg(factor());
        if (eat('(')) {
            auto v = expr();
            if (!eat(')')) throw ParseError("missing ')' in ring expression");
            return v;
        }
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
            ++pos_;
        if (pos_ == start) throw ParseError("expected literal in ring expression");
        return ring_.parse(s_.substr(start, pos_ - start));
    }
};

} // namespace detail

/// Evaluate a +,-,* expression with constants, exactly, in the given ring.
template <ring_type R>
typename R::Elem ring_eval(const R& ring, std::string_view expr) {
    return detail::ExprParser<R>(ring, expr).run();
}

} // namespace sphere
