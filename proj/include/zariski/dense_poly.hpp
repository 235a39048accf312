#ifndef ZARISKI_DENSE_POLY_HPP
#define ZARISKI_DENSE_POLY_HPP

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rat.hpp"

namespace zariski {

// ---------------------------------------------------------------------------
// Field objects. Generic polynomial / linear-algebra code is parameterized on
// a small "field" structure instead of the element type alone, so fields that
// carry runtime context (a modulus, a minimal polynomial) fit the same code
// paths as Q.
// ---------------------------------------------------------------------------

struct RatField {
    using Elem = Rat;
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
};

inline const RatField QQ{};

// Z/p for word-sized odd primes (factorization mod p, cover-criterion kernels).
struct PrimeField {
    using Elem = std::uint64_t;
    std::uint64_t p;

    explicit PrimeField(std::uint64_t p_) : p(p_) {}
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem reduce(long long v) const {
        long long r = v % static_cast<long long>(p);
        return r < 0 ? r + p : r;
    }
    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p);
    }
    Elem neg(Elem a) const { return a ? p - a : 0; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
};

// ---------------------------------------------------------------------------
// Dense univariate polynomials over a field object.
// Coefficients low-to-high; no trailing zeros; zero polynomial is empty.
// ---------------------------------------------------------------------------

template <class F>
struct DPoly {
    std::vector<typename F::Elem> c;

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const typename F::Elem& operator[](size_t i) const { return c[i]; }
    typename F::Elem& operator[](size_t i) { return c[i]; }
};

template <class F>
DPoly<F> dp_make(const F& K, std::vector<typename F::Elem> cs) {
    DPoly<F> r{std::move(cs)};
    while (!r.c.empty() && K.is_zero(r.c.back())) r.c.pop_back();
    return r;
}

template <class F>
DPoly<F> dp_const(const F& K, const typename F::Elem& a) {
    return dp_make(K, {a});
}

template <class F>
DPoly<F> dp_x(const F& K) {
    return dp_make(K, {K.zero(), K.one()});
}

template <class F>
typename F::Elem dp_lc(const F& K, const DPoly<F>& f) {
    return f.is_zero() ? K.zero() : f.c.back();
}

template <class F>
bool dp_eq(const F& K, const DPoly<F>& a, const DPoly<F>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); i++)
        if (!K.eq(a.c[i], b.c[i])) return false;
    return true;
}

template <class F>
DPoly<F> dp_add(const F& K, const DPoly<F>& a, const DPoly<F>& b) {
    std::vector<typename F::Elem> r(std::max(a.c.size(), b.c.size()), K.zero());
    for (size_t i = 0; i < a.c.size(); i++) r[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) r[i] = K.add(r[i], b.c[i]);
    return dp_make(K, std::move(r));
}

template <class F>
DPoly<F> dp_neg(const F& K, const DPoly<F>& a) {
    DPoly<F> r = a;
    for (auto& x : r.c) x = K.neg(x);
    return r;
}

template <class F>
DPoly<F> dp_sub(const F& K, const DPoly<F>& a, const DPoly<F>& b) {
    return dp_add(K, a, dp_neg(K, b));
}

template <class F>
DPoly<F> dp_mul(const F& K, const DPoly<F>& a, const DPoly<F>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<typename F::Elem> r(a.c.size() + b.c.size() - 1, K.zero());
    for (size_t i = 0; i < a.c.size(); i++)
        for (size_t j = 0; j < b.c.size(); j++)
            r[i + j] = K.add(r[i + j], K.mul(a.c[i], b.c[j]));
    return dp_make(K, std::move(r));
}

template <class F>
DPoly<F> dp_scale(const F& K, const DPoly<F>& a, const typename F::Elem& s) {
    if (K.is_zero(s)) return {};
    DPoly<F> r = a;
    for (auto& x : r.c) x = K.mul(x, s);
    return r;
}

template <class F>
DPoly<F> dp_shift(const F& K, const DPoly<F>& a, int k) {
    // multiply by x^k
    if (a.is_zero()) return {};
    std::vector<typename F::Elem> r(a.c.size() + k, K.zero());
    for (size_t i = 0; i < a.c.size(); i++) r[i + k] = a.c[i];
    return dp_make(K, std::move(r));
}

template <class F>
void dp_divmod(const F& K, const DPoly<F>& a, const DPoly<F>& b,
               DPoly<F>& q, DPoly<F>& r) {
    if (b.is_zero()) throw std::domain_error("DPoly: division by zero polynomial");
    r = a;
    q = {};
    if (a.deg() < b.deg()) return;
    q.c.assign(a.deg() - b.deg() + 1, K.zero());
    auto lcb = dp_lc(K, b);
    while (!r.is_zero() && r.deg() >= b.deg()) {
        auto t = K.div(dp_lc(K, r), lcb);
        int d = r.deg() - b.deg();
        q.c[d] = t;
        // r -= t * x^d * b
        for (int i = 0; i <= b.deg(); i++)
            r.c[i + d] = K.sub(r.c[i + d], K.mul(t, b.c[i]));
        while (!r.c.empty() && K.is_zero(r.c.back())) r.c.pop_back();
    }
    while (!q.c.empty() && K.is_zero(q.c.back())) q.c.pop_back();
}

template <class F>
DPoly<F> dp_div(const F& K, const DPoly<F>& a, const DPoly<F>& b) {
    DPoly<F> q, r;
    dp_divmod(K, a, b, q, r);
    return q;
}

template <class F>
DPoly<F> dp_rem(const F& K, const DPoly<F>& a, const DPoly<F>& b) {
    DPoly<F> q, r;
    dp_divmod(K, a, b, q, r);
    return r;
}

template <class F>
DPoly<F> dp_monic(const F& K, const DPoly<F>& a) {
    if (a.is_zero()) return a;
    return dp_scale(K, a, K.div(K.one(), dp_lc(K, a)));
}

template <class F>
DPoly<F> dp_gcd(const F& K, DPoly<F> a, DPoly<F> b) {
    while (!b.is_zero()) {
        DPoly<F> r = dp_rem(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return dp_monic(K, a);
}

// extended euclid: returns g = gcd, sets s,t with s*a + t*b = g (g monic)
template <class F>
DPoly<F> dp_xgcd(const F& K, const DPoly<F>& a, const DPoly<F>& b,
                 DPoly<F>& s, DPoly<F>& t) {
    DPoly<F> r0 = a, r1 = b;
    DPoly<F> s0 = dp_const(K, K.one()), s1{};
    DPoly<F> t0{}, t1 = dp_const(K, K.one());
    while (!r1.is_zero()) {
        DPoly<F> q, r;
        dp_divmod(K, r0, r1, q, r);
        DPoly<F> s2 = dp_sub(K, s0, dp_mul(K, q, s1));
        DPoly<F> t2 = dp_sub(K, t0, dp_mul(K, q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) { s = {}; t = {}; return r0; }
    auto ilc = K.div(K.one(), dp_lc(K, r0));
    s = dp_scale(K, s0, ilc);
    t = dp_scale(K, t0, ilc);
    return dp_scale(K, r0, ilc);
}

template <class F>
DPoly<F> dp_derivative(const F& K, const DPoly<F>& a) {
    if (a.deg() < 1) return {};
    std::vector<typename F::Elem> r(a.c.size() - 1, K.zero());
    for (size_t i = 1; i < a.c.size(); i++) {
        auto k = K.zero();
        for (size_t j = 0; j < i; j++) k = K.add(k, K.one());
        r[i - 1] = K.mul(a.c[i], k);
    }
    return dp_make(K, std::move(r));
}

template <class F>
typename F::Elem dp_eval(const F& K, const DPoly<F>& a, const typename F::Elem& x) {
    auto r = K.zero();
    for (size_t i = a.c.size(); i-- > 0;) r = K.add(K.mul(r, x), a.c[i]);
    return r;
}

template <class F>
DPoly<F> dp_pow_mod(const F& K, DPoly<F> base, Int e, const DPoly<F>& m) {
    DPoly<F> r = dp_const(K, K.one());
    base = dp_rem(K, base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = dp_rem(K, dp_mul(K, r, base), m);
        base = dp_rem(K, dp_mul(K, base, base), m);
        e >>= 1;
    }
    return r;
}

// compose a(b(x))
template <class F>
DPoly<F> dp_compose(const F& K, const DPoly<F>& a, const DPoly<F>& b) {
    DPoly<F> r{};
    for (size_t i = a.c.size(); i-- > 0;)
        r = dp_add(K, dp_mul(K, r, b), dp_const(K, a.c[i]));
    return r;
}

// ---------------------------------------------------------------------------
// UPoly: the concrete rational-coefficient case, with operator sugar.
// ---------------------------------------------------------------------------

using UPoly = DPoly<RatField>;

inline UPoly upoly(std::vector<Rat> cs) { return dp_make(QQ, std::move(cs)); }
inline UPoly upoly_const(const Rat& a) { return dp_const(QQ, a); }
inline UPoly upoly_x() { return dp_x(QQ); }

inline UPoly operator+(const UPoly& a, const UPoly& b) { return dp_add(QQ, a, b); }
inline UPoly operator-(const UPoly& a, const UPoly& b) { return dp_sub(QQ, a, b); }
inline UPoly operator*(const UPoly& a, const UPoly& b) { return dp_mul(QQ, a, b); }
inline UPoly operator-(const UPoly& a) { return dp_neg(QQ, a); }
inline bool operator==(const UPoly& a, const UPoly& b) { return dp_eq(QQ, a, b); }
inline bool operator!=(const UPoly& a, const UPoly& b) { return !dp_eq(QQ, a, b); }

inline UPoly operator*(const Rat& s, const UPoly& a) { return dp_scale(QQ, a, s); }

// valuation of f at monic irreducible pi: largest k with pi^k | f
inline int upoly_ord(const UPoly& f, const UPoly& pi) {
    if (f.is_zero()) throw std::domain_error("upoly_ord: zero polynomial");
    int n = 0;
    UPoly g = f;
    while (true) {
        UPoly q, r;
        dp_divmod(QQ, g, pi, q, r);
        if (!r.is_zero()) return n;
        g = q;
        n++;
    }
}

// reverse coefficients against a declared degree bound: x^bound * f(1/x)
inline UPoly upoly_reverse(const UPoly& f, int bound) {
    if (f.deg() > bound) throw std::domain_error("upoly_reverse: degree exceeds bound");
    std::vector<Rat> r(bound + 1, Rat(0));
    for (int i = 0; i <= f.deg(); i++) r[bound - i] = f.c[i];
    return upoly(std::move(r));
}

inline std::string upoly_str(const UPoly& f, const std::string& var = "t") {
    if (f.is_zero()) return "0";
    std::string s;
    for (int i = f.deg(); i >= 0; i--) {
        if (f.c[i].is_zero()) continue;
        Rat c = f.c[i];
        bool first = s.empty();
        if (!first) s += c.sign() > 0 ? " + " : " - ";
        else if (c.sign() < 0) s += "-";
        Rat a = abs(c);
        if (i == 0 || !a.is_one()) s += a.str();
        if (i > 0) {
            if (!a.is_one()) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace zariski

#endif
