#ifndef ZARISKI_RATFUNC_HPP
#define ZARISKI_RATFUNC_HPP

#include <optional>
#include <stdexcept>

#include "dense_poly.hpp"
#include "factor.hpp"

namespace zariski {

// Rational function in one variable: num/den with den monic and gcd = 1.
struct RatFunc {
    UPoly num, den;

    RatFunc() : num(), den(upoly_const(Rat(1))) {}
    RatFunc(UPoly n, UPoly d) { assign(std::move(n), std::move(d)); }
    explicit RatFunc(const UPoly& n) : num(n), den(upoly_const(Rat(1))) {}
    explicit RatFunc(const Rat& a) : num(upoly_const(a)), den(upoly_const(Rat(1))) {}

    void assign(UPoly n, UPoly d) {
        if (d.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (n.is_zero()) { num = {}; den = upoly_const(Rat(1)); return; }
        UPoly g = upoly_gcd_q(n, d);
        if (g.deg() > 0) { n = dp_div(QQ, n, g); d = dp_div(QQ, d, g); }
        Rat lc = dp_lc(QQ, d);
        num = dp_scale(QQ, n, inv(lc));
        den = dp_scale(QQ, d, inv(lc));
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.deg() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.num, a.den * b.den);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num * b.den, a.den * b.num);
    }
    RatFunc operator-() const { RatFunc r; r.num = -num; r.den = den; return r; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
};

// A place of the affine/projective line: a monic irreducible polynomial or
// the point at infinity.
struct LinePlace {
    UPoly pi;        // monic irreducible; empty when infinite
    bool infinite = false;

    static LinePlace at_infinity() { return LinePlace{{}, true}; }
    static LinePlace finite(UPoly p) { return LinePlace{std::move(p), false}; }
    static LinePlace rational(const Rat& t0) {
        return finite(upoly({-t0, Rat(1)}));
    }
    int degree() const { return infinite ? 1 : pi.deg(); }

    friend bool operator==(const LinePlace& a, const LinePlace& b) {
        if (a.infinite != b.infinite) return false;
        return a.infinite || a.pi == b.pi;
    }
};

// Order of vanishing of f at a place (negative = pole order). At infinity
// the order is deg(den) - deg(num).
inline int ord_at(const RatFunc& f, const LinePlace& v) {
    if (f.is_zero())
        throw std::invalid_argument("ord_at: zero function (order +infinity)");
    if (v.infinite) return f.den.deg() - f.num.deg();
    if (v.pi.deg() < 1)
        throw std::invalid_argument("ord_at: invalid place");
    return upoly_ord(f.num, v.pi) - upoly_ord(f.den, v.pi);
}

} // namespace zariski

#endif
