#ifndef ZARISKI_EXTFIELD_HPP
#define ZARISKI_EXTFIELD_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dense_poly.hpp"

namespace zariski {

// Element of Q[a]/(minpoly), minpoly monic irreducible. Single extension
// level only; callers collapse towers to a primitive element first.
struct ExtElem {
    std::shared_ptr<const UPoly> minpoly;
    std::vector<Rat> c;  // length deg(minpoly), low-to-high

    int ext_deg() const { return minpoly->deg(); }

    bool is_zero() const {
        for (const auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }
};

enum class ExtOp { add, mul, inv };

// The field Q[a]/(m). Elements made through this share one minpoly instance.
struct ExtField {
    using Elem = ExtElem;
    std::shared_ptr<const UPoly> m;

    explicit ExtField(UPoly minpoly)
        : m(std::make_shared<UPoly>(std::move(minpoly))) {
        if (m->deg() < 1) throw std::invalid_argument("ExtField: constant minpoly");
        if (!dp_lc(QQ, *m).is_one())
            throw std::invalid_argument("ExtField: minpoly must be monic");
    }

    int deg() const { return m->deg(); }

    Elem make(std::vector<Rat> coeffs) const {
        coeffs.resize(deg(), Rat(0));
        return Elem{m, std::move(coeffs)};
    }
    Elem from_upoly(const UPoly& f) const {
        UPoly r = dp_rem(QQ, f, *m);
        std::vector<Rat> c = r.c;
        c.resize(deg(), Rat(0));
        return Elem{m, std::move(c)};
    }
    Elem zero() const { return make({}); }
    Elem one() const { return make({Rat(1)}); }
    Elem from_rat(const Rat& a) const { return make({a}); }
    Elem gen() const { return from_upoly(upoly_x()); }

    UPoly rep(const Elem& a) const { return upoly(a.c); }

    void check(const Elem& a) const {
        if (!a.minpoly || !dp_eq(QQ, *a.minpoly, *m))
            throw std::invalid_argument("ExtField: mismatched minimal polynomials");
    }

    Elem add(const Elem& a, const Elem& b) const {
        check(a); check(b);
        std::vector<Rat> r(deg());
        for (int i = 0; i < deg(); i++) r[i] = a.c[i] + b.c[i];
        return Elem{m, std::move(r)};
    }
    Elem sub(const Elem& a, const Elem& b) const {
        check(a); check(b);
        std::vector<Rat> r(deg());
        for (int i = 0; i < deg(); i++) r[i] = a.c[i] - b.c[i];
        return Elem{m, std::move(r)};
    }
    Elem neg(const Elem& a) const {
        check(a);
        std::vector<Rat> r(deg());
        for (int i = 0; i < deg(); i++) r[i] = -a.c[i];
        return Elem{m, std::move(r)};
    }
    Elem mul(const Elem& a, const Elem& b) const {
        check(a); check(b);
        return from_upoly(dp_mul(QQ, rep(a), rep(b)));
    }
    Elem inv(const Elem& a) const {
        check(a);
        if (a.is_zero()) throw std::domain_error("ExtField: inverse of zero");
        UPoly s, t;
        UPoly g = dp_xgcd(QQ, rep(a), *m, s, t);
        if (g.deg() != 0)
            throw std::domain_error("ExtField: minpoly not irreducible (gcd found)");
        return from_upoly(s);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { check(a); return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const {
        check(a); check(b);
        for (int i = 0; i < deg(); i++)
            if (a.c[i] != b.c[i]) return false;
        return true;
    }
};

// spec-facing entry point
inline ExtElem ext_arith(const ExtElem& a, const ExtElem& b, ExtOp op) {
    if (!a.minpoly) throw std::invalid_argument("ext_arith: element without minpoly");
    ExtField K(*a.minpoly);
    switch (op) {
        case ExtOp::add: return K.add(a, b);
        case ExtOp::mul: return K.mul(a, b);
        case ExtOp::inv: return K.inv(a);
    }
    throw std::invalid_argument("ext_arith: unknown op");
}

} // namespace zariski

#endif
