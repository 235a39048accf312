#ifndef ZARISKI_RAT_HPP
#define ZARISKI_RAT_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace zariski {

using Int = mpz_class;

// Exact rational number. Always reduced, denominator > 0, zero is 0/1.
// Thin value wrapper over mpq_class so generic code never sees GMP
// expression templates.
struct Rat {
    mpq_class v;

    Rat() : v(0) {}
    Rat(long n) : v(n) {}
    Rat(const Int& n) : v(n) {}
    Rat(const Int& num, const Int& den) : v(num, den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}
    explicit Rat(const mpq_class& q) : v(q) { v.canonicalize(); }

    static Rat from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rat: cannot parse \"" + s + "\"");
        q.canonicalize();
        return Rat(q);
    }

    Int num() const { return v.get_num(); }
    Int den() const { return v.get_den(); }
    bool is_zero() const { return sgn(v) == 0; }
    bool is_one() const { return v == 1; }
    bool is_integer() const { return v.get_den() == 1; }
    int sign() const { return sgn(v); }

    std::string str() const {
        return v.get_den() == 1 ? v.get_num().get_str() : v.get_str();
    }

    Rat operator-() const { return Rat(mpq_class(-v)); }
    Rat& operator+=(const Rat& o) { v += o.v; return *this; }
    Rat& operator-=(const Rat& o) { v -= o.v; return *this; }
    Rat& operator*=(const Rat& o) { v *= o.v; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v /= o.v;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v == b.v; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v != b.v; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v < b.v; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v <= b.v; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v > b.v; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v >= b.v; }
};

inline Rat abs(const Rat& a) { return Rat(mpq_class(::abs(a.v))); }

inline Rat inv(const Rat& a) {
    if (a.is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(mpq_class(1 / a.v));
}

inline Rat pow(const Rat& a, long e) {
    if (e < 0) return pow(inv(a), -e);
    Rat r(1), b = a;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Truncated square root test: returns true and sets r if a = r^2.
inline bool rat_sqrt(const Rat& a, Rat& r) {
    if (a.sign() < 0) return false;
    Int n = a.num(), d = a.den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    r = Rat(sn, sd);
    return true;
}

} // namespace zariski

#endif
