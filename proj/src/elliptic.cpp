#include "zariski/elliptic.hpp"

#include <algorithm>
#include <map>

#include "zariski/factor.hpp"

namespace zariski {

namespace {

// ---------------------------------------------------------------------------
// residue ring Q[t]/(g) — used both with g = pi (a field) and g = pi^N
// ---------------------------------------------------------------------------

struct QuotRing {
    UPoly g;  // monic

    UPoly reduce(const UPoly& f) const { return dp_rem(QQ, f, g); }
    UPoly mul(const UPoly& a, const UPoly& b) const { return reduce(a * b); }
    UPoly inv(const UPoly& a) const {
        UPoly s, t;
        UPoly d = dp_xgcd(QQ, reduce(a), g, s, t);
        if (d.deg() != 0)
            throw std::domain_error("QuotRing: element not invertible");
        return reduce(s);
    }
    // image of a rational function regular at the place
    UPoly of_ratfunc(const RatFunc& f) const {
        return mul(reduce(f.num), inv(f.den));
    }
};

// valuation of a residue mod pi^bound, capped at bound
int ord_capped(const UPoly& rep, const UPoly& pi, int bound) {
    if (rep.is_zero()) return bound;
    return std::min(bound, upoly_ord(rep, pi));
}

int ord_or_inf(const UPoly& f, const UPoly& pi) {
    return f.is_zero() ? kInfOrd : upoly_ord(f, pi);
}

// deterministic sign choice on K = Q[t]/(pi): true if the first nonzero
// coefficient is positive
bool canonical_sign(const UPoly& a) {
    for (const auto& c : a.c)
        if (!c.is_zero()) return c.sign() > 0;
    return true;
}

struct LocalCubic {
    // x^3 + A x^2 + B x + C with coefficients in Q[t]
    UPoly A, B, C;

    UPoly eval_mod(const QuotRing& R, const UPoly& z) const {
        UPoly r = R.reduce(z + R.reduce(A));
        r = R.reduce(R.mul(r, z) + R.reduce(B));
        r = R.reduce(R.mul(r, z) + R.reduce(C));
        return r;
    }
    UPoly deriv_mod(const QuotRing& R, const UPoly& z) const {
        // 3z^2 + 2Az + B
        UPoly r = R.reduce(Rat(3) * R.mul(z, z) + Rat(2) * R.mul(R.reduce(A), z) +
                           R.reduce(B));
        return r;
    }
    UPoly eval_exact(const UPoly& z) const {
        return ((z + A) * z + B) * z + C;
    }
};

} // namespace

// ---------------------------------------------------------------------------
// model and invariants
// ---------------------------------------------------------------------------

void validate_model(const WeierstrassModel& m) {
    if (m.chi < 1) throw std::invalid_argument("model: chi must be positive");
    if (m.a2.deg() > 2 * m.chi || m.a4.deg() > 4 * m.chi || m.a6.deg() > 6 * m.chi)
        throw std::invalid_argument("model: coefficient degree exceeds 2*i*chi bound");
}

SurfaceInvariants invariants_c4_c6_delta(const WeierstrassModel& m) {
    validate_model(m);
    const UPoly &a2 = m.a2, &a4 = m.a4, &a6 = m.a6;
    UPoly b2 = Rat(4) * a2;
    UPoly b4 = Rat(2) * a4;
    UPoly b6 = Rat(4) * a6;
    UPoly b8 = Rat(4) * (a2 * a6) - a4 * a4;
    SurfaceInvariants inv;
    inv.c4 = b2 * b2 - Rat(24) * b4;
    inv.c6 = -(b2 * b2 * b2) + Rat(36) * (b2 * b4) - Rat(216) * b6;
    inv.delta = -(b2 * b2 * b8) - Rat(8) * (b4 * b4 * b4) - Rat(27) * (b6 * b6) +
                Rat(9) * (b2 * b4 * b6);
    if (inv.delta.is_zero())
        throw std::domain_error("model is not an elliptic fibration (delta = 0)");
    return inv;
}

std::string KodairaType::str() const {
    switch (kind) {
        case KodairaKind::In: return "I" + std::to_string(n);
        case KodairaKind::II: return "II";
        case KodairaKind::III: return "III";
        case KodairaKind::IV: return "IV";
        case KodairaKind::I0star: return "I0*";
        case KodairaKind::Instar: return "I" + std::to_string(n) + "*";
        case KodairaKind::Unsupported: return "unsupported";
    }
    return "?";
}

static int kodaira_components(const KodairaType& t) {
    switch (t.kind) {
        case KodairaKind::In: return std::max(1, t.n);
        case KodairaKind::II: return 1;
        case KodairaKind::III: return 2;
        case KodairaKind::IV: return 3;
        case KodairaKind::I0star: return 5;
        case KodairaKind::Instar: return t.n + 5;
        case KodairaKind::Unsupported: return 0;
    }
    return 0;
}

static FiberReport classify_one(const LinePlace& place, int vc4, int vc6, int vd) {
    if (vc4 >= 4 && vc6 >= 6 && vd >= 12)
        throw std::domain_error("model not minimal at place");
    KodairaType ty;
    if (vc4 == 0) {
        ty = {KodairaKind::In, vd};
    } else if (vd == 2 && vc4 >= 1) {
        ty = {KodairaKind::II, 0};
    } else if (vd == 3 && vc4 == 1) {
        ty = {KodairaKind::III, 0};
    } else if (vd == 4 && vc6 == 2) {
        ty = {KodairaKind::IV, 0};
    } else if (vc4 >= 2 && vc6 >= 3 && vd == 6) {
        ty = {KodairaKind::I0star, 0};
    } else if (vc4 == 2 && vc6 == 3 && vd > 6) {
        ty = {KodairaKind::Instar, vd - 6};
    } else {
        ty = {KodairaKind::Unsupported, 0};
    }
    FiberReport rep;
    rep.place = place;
    rep.type = ty;
    rep.components = kodaira_components(ty);
    rep.ord_c4 = vc4;
    rep.ord_c6 = vc6;
    rep.ord_delta = vd;
    return rep;
}

std::vector<FiberReport> classify_fibers(const WeierstrassModel& m) {
    SurfaceInvariants inv = invariants_c4_c6_delta(m);
    std::vector<FiberReport> reps;
    Factorization fd = factor_univariate(inv.delta);
    for (const auto& [pi, mult] : fd.factors) {
        int vc4 = ord_or_inf(inv.c4, pi);
        int vc6 = ord_or_inf(inv.c6, pi);
        reps.push_back(classify_one(LinePlace::finite(pi), vc4, vc6, mult));
    }
    std::sort(reps.begin(), reps.end(), [](const FiberReport& a, const FiberReport& b) {
        const UPoly &pa = a.place.pi, &pb = b.place.pi;
        if (pa.deg() != pb.deg()) return pa.deg() < pb.deg();
        for (int i = pa.deg(); i >= 0; i--)
            if (pa.c[i] != pb.c[i]) return pa.c[i] < pb.c[i];
        return false;
    });
    int vd_inf = 12 * m.chi - inv.delta.deg();
    if (vd_inf > 0) {
        int vc4_inf = inv.c4.is_zero() ? kInfOrd : 4 * m.chi - inv.c4.deg();
        int vc6_inf = inv.c6.is_zero() ? kInfOrd : 6 * m.chi - inv.c6.deg();
        reps.push_back(classify_one(LinePlace::at_infinity(), vc4_inf, vc6_inf, vd_inf));
    }
    return reps;
}

// ---------------------------------------------------------------------------
// group structure
// ---------------------------------------------------------------------------

bool on_curve(const WeierstrassModel& m, const Section& p) {
    if (p.is_zero) return true;
    RatFunc rhs = ((p.x + RatFunc(m.a2)) * p.x + RatFunc(m.a4)) * p.x + RatFunc(m.a6);
    return p.y * p.y == rhs;
}

Section negate(const Section& p) {
    if (p.is_zero) return p;
    return Section::finite(p.x, -p.y);
}

Section group_law(const WeierstrassModel& m, const Section& p, const Section& q) {
    if (!on_curve(m, p) || !on_curve(m, q))
        throw std::invalid_argument("group_law: section not on the curve");
    if (p.is_zero) return q;
    if (q.is_zero) return p;
    RatFunc lambda;
    if (p.x == q.x) {
        if (p.y == -q.y) return Section::zero();
        // tangent
        lambda = (RatFunc(Rat(3)) * (p.x * p.x) + RatFunc(Rat(2) * m.a2) * p.x +
                  RatFunc(m.a4)) /
                 (RatFunc(Rat(2)) * p.y);
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    RatFunc x3 = lambda * lambda - RatFunc(m.a2) - p.x - q.x;
    RatFunc y3 = lambda * (p.x - x3) - p.y;
    return Section::finite(x3, y3);
}

Section scalar_mul(const WeierstrassModel& m, long n, const Section& p) {
    Section base = n < 0 ? negate(p) : p;
    unsigned long k = n < 0 ? -static_cast<unsigned long>(n) : n;
    Section acc = Section::zero();
    while (k) {
        if (k & 1) acc = group_law(m, acc, base);
        base = group_law(m, base, base);
        k >>= 1;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// infinity chart
// ---------------------------------------------------------------------------

WeierstrassModel model_at_infinity(const WeierstrassModel& m) {
    validate_model(m);
    WeierstrassModel r;
    r.chi = m.chi;
    r.a2 = upoly_reverse(m.a2, 2 * m.chi);
    r.a4 = upoly_reverse(m.a4, 4 * m.chi);
    r.a6 = upoly_reverse(m.a6, 6 * m.chi);
    return r;
}

// u^weight * f(1/u) as a reduced rational function in u
static RatFunc ratfunc_inf_chart(const RatFunc& f, int weight) {
    if (f.is_zero()) return f;
    int dn = f.num.deg(), dd = f.den.deg();
    UPoly rn = upoly_reverse(f.num, dn);
    UPoly rd = upoly_reverse(f.den, dd);
    int k = weight + dd - dn;
    if (k >= 0) return RatFunc(dp_shift(QQ, rn, k), rd);
    return RatFunc(rn, dp_shift(QQ, rd, -k));
}

Section section_at_infinity(const WeierstrassModel& m, const Section& p) {
    (void)m;
    if (p.is_zero) return p;
    return Section::finite(ratfunc_inf_chart(p.x, 2), ratfunc_inf_chart(p.y, 3));
}

// ---------------------------------------------------------------------------
// intersections
// ---------------------------------------------------------------------------

static int half_pole(int pole, const char* what) {
    if (pole % 2 != 0)
        throw std::domain_error(std::string("non-minimal section data: odd pole order in ") + what);
    return pole / 2;
}

int intersect_with_zero(const WeierstrassModel& m, const Section& p) {
    if (p.is_zero)
        throw std::invalid_argument("intersect_with_zero: section must be finite");
    if (!on_curve(m, p))
        throw std::invalid_argument("intersect_with_zero: section not on the curve");
    int total = 0;
    if (p.x.den.deg() > 0) {
        Factorization fd = factor_univariate(p.x.den);
        for (const auto& [pi, mult] : fd.factors)
            total += pi.deg() * half_pole(mult, "x");
    }
    int ord_inf_chart = p.x.is_zero() ? 0 : ord_at(p.x, LinePlace::at_infinity()) + 2;
    if (ord_inf_chart < 0) total += half_pole(-ord_inf_chart, "x at infinity");
    return total;
}

static int ord_rf(const RatFunc& f, const UPoly& pi) {
    return f.is_zero() ? kInfOrd : upoly_ord(f.num, pi) - upoly_ord(f.den, pi);
}

// Local intersection number of two distinct sections above one finite place.
// At a smooth meeting point the fiber coordinate gives the contact order
// directly (x where y != 0, y at a smooth two-torsion point, w = x/y at the
// zero point). When both sections pass through the singular point of the
// fiber, the contact in the Weierstrass chart overcounts intersections that
// separate on the smooth model; there the multiplicity is read off from
// P + (-Q) against the zero section, which fiberwise translation makes an
// equality of local multiplicities.

int intersect_sections(const WeierstrassModel& m, const Section& p, const Section& q) {
    if (p.is_zero || q.is_zero)
        throw std::invalid_argument("intersect_sections: sections must be finite");
    if (p == q)
        throw std::invalid_argument(
            "self-intersection not defined for distinct-section pairing");
    if (!on_curve(m, p) || !on_curve(m, q))
        throw std::invalid_argument("intersect_sections: section not on the curve");

    Section r = group_law(m, p, negate(q));  // never zero here

    auto local_mult = [](const LocalCubic& f, const UPoly& pi, const Section& pp,
                         const Section& qq, const Section& rr) -> int {
        bool pole_p = ord_rf(pp.x, pi) < 0, pole_q = ord_rf(qq.x, pi) < 0;
        if (pole_p != pole_q) return 0;
        if (pole_p) {
            RatFunc wdiff = pp.x / pp.y - qq.x / qq.y;
            if (wdiff.is_zero())
                throw std::domain_error(
                    "intersect_sections: coincident section branches");
            return ord_at(wdiff, LinePlace::finite(pi));
        }
        RatFunc xdiff = pp.x - qq.x;
        int oxd = xdiff.is_zero() ? kInfOrd : ord_rf(xdiff, pi);
        if (oxd < 1) return 0;
        RatFunc ydiff = pp.y - qq.y;
        int oyd = ydiff.is_zero() ? kInfOrd : ord_rf(ydiff, pi);
        if (oyd < 1) return 0;  // different sheets
        int oyp = pp.y.is_zero() ? kInfOrd : ord_rf(pp.y, pi);
        if (oyp == 0) {
            if (oxd >= kInfOrd)
                throw std::domain_error("intersect_sections: coincident sections");
            return oxd;
        }
        // meet at (x0, 0): smooth two-torsion point or fiber singular point
        QuotRing K{pi};
        UPoly xv = K.of_ratfunc(pp.x);
        UPoly fp = K.reduce(Rat(3) * K.mul(xv, xv) + Rat(2) * K.mul(K.reduce(f.A), xv) +
                            K.reduce(f.B));
        if (!fp.is_zero()) {
            if (oyd >= kInfOrd)
                throw std::domain_error("intersect_sections: tangent section branches");
            return oyd;  // smooth: y is the fiber coordinate
        }
        // both through the fiber's singular point: translate to the zero
        // section and read half the pole order of x there
        int oxr = ord_rf(rr.x, pi);
        if (oxr >= 0) return 0;
        return half_pole(-oxr, "translated section");
    };

    // candidate places: zeros of x_p - x_q and common poles
    std::vector<UPoly> places;
    RatFunc xdiff = p.x - q.x;
    if (xdiff.is_zero()) {
        // same x, opposite y: meet where y vanishes
        if (!p.y.is_zero() && p.y.num.deg() > 0)
            for (const auto& [pi, mult] : factor_univariate(p.y.num).factors)
                places.push_back(pi);
    } else if (xdiff.num.deg() > 0) {
        for (const auto& [pi, mult] : factor_univariate(xdiff.num).factors)
            places.push_back(pi);
    }
    UPoly gden = dp_gcd(QQ, p.x.den, q.x.den);
    if (gden.deg() > 0)
        for (const auto& [pi, mult] : factor_univariate(gden).factors) {
            bool seen = false;
            for (const auto& other : places)
                if (other == pi) { seen = true; break; }
            if (!seen) places.push_back(pi);
        }

    LocalCubic fin{m.a2, m.a4, m.a6};
    int total = 0;
    for (const auto& pi : places)
        total += pi.deg() * local_mult(fin, pi, p, q, r);

    // infinity chart, place u = 0
    WeierstrassModel mi = model_at_infinity(m);
    LocalCubic finf{mi.a2, mi.a4, mi.a6};
    total += local_mult(finf, upoly_x(), section_at_infinity(m, p),
                        section_at_infinity(m, q), section_at_infinity(m, r));
    return total;
}

// ---------------------------------------------------------------------------
// fiber components
// ---------------------------------------------------------------------------

namespace {

struct FiberLocal {
    UPoly pi;          // the finite place (after moving to the u-chart if needed)
    LocalCubic cubic;  // x^3 + a2 x^2 + a4 x + a6 over Q[t]
    Section sec;       // section in the same chart
};

FiberLocal fiber_local_data(const WeierstrassModel& m, const Section& p,
                            const FiberReport& rep) {
    if (rep.place.infinite) {
        WeierstrassModel mi = model_at_infinity(m);
        return FiberLocal{upoly_x(), LocalCubic{mi.a2, mi.a4, mi.a6},
                          section_at_infinity(m, p)};
    }
    return FiberLocal{rep.place.pi, LocalCubic{m.a2, m.a4, m.a6}, p};
}

// the multiple root of the reduced cubic over K = Q[t]/(pi): the fiber's
// singular x, as a representative polynomial of degree < deg(pi)
UPoly fiber_singular_x(const QuotRing& K, const LocalCubic& f, bool triple) {
    if (triple) {
        // all three roots equal -x0, sum = -A
        return K.reduce(Rat(-1, 3) * f.A);
    }
    // double root: linear gcd of fbar and fbar'
    struct KF {
        using Elem = UPoly;
        const QuotRing* R;
        Elem zero() const { return {}; }
        Elem one() const { return upoly_const(Rat(1)); }
        Elem add(const Elem& a, const Elem& b) const { return R->reduce(a + b); }
        Elem sub(const Elem& a, const Elem& b) const { return R->reduce(a - b); }
        Elem mul(const Elem& a, const Elem& b) const { return R->mul(a, b); }
        Elem div(const Elem& a, const Elem& b) const { return R->mul(a, R->inv(b)); }
        Elem neg(const Elem& a) const { return R->reduce(-a); }
        bool is_zero(const Elem& a) const { return R->reduce(a).is_zero(); }
        bool eq(const Elem& a, const Elem& b) const { return R->reduce(a - b).is_zero(); }
    } Kf{&K};
    DPoly<KF> fbar = dp_make(Kf, std::vector<UPoly>{K.reduce(f.C), K.reduce(f.B),
                                                    K.reduce(f.A), Kf.one()});
    DPoly<KF> fder = dp_make(Kf, std::vector<UPoly>{K.reduce(f.B),
                                                    K.reduce(Rat(2) * f.A),
                                                    K.reduce(upoly_const(Rat(3)))});
    DPoly<KF> g = dp_gcd(Kf, fbar, fder);
    if (g.deg() != 1)
        throw std::domain_error("fiber_singular_x: node locus not a single point");
    return K.mul(K.reduce(-g.c[0]), K.inv(g.c[1]));
}

bool through_singular_point(const QuotRing& K, const FiberLocal& L, const UPoly& x0) {
    if (L.sec.is_zero) return false;
    if (!L.sec.x.is_zero() &&
        upoly_ord(L.sec.x.num, L.pi) - upoly_ord(L.sec.x.den, L.pi) < 0)
        return false;
    UPoly xv = K.of_ratfunc(L.sec.x);
    if (!K.reduce(xv - x0).is_zero()) return false;
    UPoly yv = K.of_ratfunc(L.sec.y);
    return yv.is_zero();
}

int component_In(const FiberLocal& L, const QuotRing&, const UPoly& x0, int n) {
    if (n == 2) return 1;
    int prec = n + 1;
    UPoly piN = L.pi;
    for (int i = 1; i < prec; i++) piN = piN * L.pi;
    QuotRing R{piN};

    // Newton-lift the critical point of the cubic from x0
    UPoly xc = x0;
    for (int it = 0; it < 2 * prec + 4; it++) {
        UPoly d = L.cubic.deriv_mod(R, xc);
        if (d.is_zero()) break;
        UPoly fpp = R.reduce(Rat(6) * xc + Rat(2) * R.reduce(L.cubic.A));
        xc = R.reduce(xc - R.mul(d, R.inv(fpp)));
    }
    if (!L.cubic.deriv_mod(R, xc).is_zero())
        throw std::domain_error("component_at: Newton lift of the node failed");

    UPoly e = L.cubic.eval_mod(R, xc);
    if (ord_capped(e, L.pi, prec) != n)
        throw std::domain_error("component_at: inconsistent I_n depth");

    UPoly X = R.reduce(R.of_ratfunc(L.sec.x) - xc);
    UPoly Y = R.of_ratfunc(L.sec.y);
    int dx = ord_capped(X, L.pi, prec);
    int dy = ord_capped(Y, L.pi, prec);
    int dmin = std::min(dx, dy);
    if (dx != dy) {
        if (n % 2 != 0 || dmin != n / 2)
            throw std::domain_error("component_at: valuation pattern inconsistent with I_n");
        return n / 2;
    }
    int d = dx;
    if (2 * d > n)
        throw std::domain_error("component_at: valuation pattern inconsistent with I_n");
    // leading residues and the branch value s = y/X mod pi
    QuotRing Kq{L.pi};
    UPoly piD = upoly_const(Rat(1));
    for (int i = 0; i < d; i++) piD = piD * L.pi;
    UPoly Xd = Kq.reduce(dp_div(QQ, X, piD));
    UPoly Yd = Kq.reduce(dp_div(QQ, Y, piD));
    UPoly s = Kq.mul(Yd, Kq.inv(Xd));
    UPoly h0 = Kq.reduce(Rat(3) * x0 + L.cubic.A);
    if (!Kq.reduce(Kq.mul(s, s) - h0).is_zero()) {
        if (2 * d != n)
            throw std::domain_error("component_at: branch residue inconsistent with I_n");
        return n / 2;
    }
    if (2 * d == n) return n / 2;
    return canonical_sign(s) ? n - d : d;
}

int component_IV(const FiberLocal& L, const QuotRing& K, const UPoly& x0) {
    // K is the residue field of the place
    // IV: depth-2 constant term; the sign of y/pi against a fixed square
    // root of delta = f(x0)/pi^2 picks the component
    UPoly fx0 = L.cubic.eval_exact(x0);
    if (ord_or_inf(fx0, L.pi) < 2)
        throw std::domain_error("component_at: inconsistent IV data");
    UPoly delta = K.reduce(dp_div(QQ, dp_div(QQ, fx0, L.pi), L.pi));
    // r = (y/pi) mod pi ; y has valuation exactly 1 here
    const RatFunc& y = L.sec.y;
    if (y.is_zero() || upoly_ord(y.num, L.pi) - upoly_ord(y.den, L.pi) != 1)
        throw std::domain_error("component_at: section valuation inconsistent with IV");
    UPoly r = K.mul(K.reduce(dp_div(QQ, y.num, L.pi)), K.inv(K.reduce(y.den)));
    if (!K.reduce(K.mul(r, r) - delta).is_zero())
        throw std::domain_error("component_at: IV residue is not a square root");
    return canonical_sign(r) ? 1 : 2;
}

} // namespace

int component_at(const WeierstrassModel& m, const Section& p, const FiberReport& rep) {
    bool supported = rep.type.kind == KodairaKind::In ||
                     rep.type.kind == KodairaKind::III ||
                     rep.type.kind == KodairaKind::IV;
    if (!supported)
        throw std::domain_error("contribution unavailable: fiber type " + rep.type.str());
    if (p.is_zero) return 0;
    if (!on_curve(m, p))
        throw std::invalid_argument("component_at: section not on the curve");
    if (rep.components <= 1) return 0;

    FiberLocal L = fiber_local_data(m, p, rep);
    QuotRing K{L.pi};
    bool triple = rep.type.kind != KodairaKind::In;
    UPoly x0 = fiber_singular_x(K, L.cubic, triple);
    if (!through_singular_point(K, L, x0)) return 0;
    switch (rep.type.kind) {
        case KodairaKind::III: return 1;
        case KodairaKind::IV: return component_IV(L, K, x0);
        case KodairaKind::In: return component_In(L, QuotRing{L.pi}, x0, rep.type.n);
        default: break;
    }
    throw std::domain_error("component_at: unreachable");
}

Rat contribution(const FiberReport& rep, int i, int j) {
    if (i < 0 || j < 0 || i >= rep.components || j >= rep.components)
        throw std::invalid_argument("contribution: component index out of range");
    if (i == 0 || j == 0) return Rat(0);
    switch (rep.type.kind) {
        case KodairaKind::In: {
            int n = rep.type.n;
            int lo = std::min(i, j), hi = std::max(i, j);
            return Rat(static_cast<long>(lo) * (n - hi), n);
        }
        case KodairaKind::III:
            return Rat(1, 2);
        case KodairaKind::IV:
            return i == j ? Rat(2, 3) : Rat(1, 3);
        default:
            throw std::domain_error("contribution unavailable: fiber type " +
                                    rep.type.str());
    }
}

// ---------------------------------------------------------------------------
// heights
// ---------------------------------------------------------------------------

namespace {

// contribution term Contr_v(P, Q) at one reducible fiber, with the cheap
// "misses the singular point" shortcut that works for every type
Rat fiber_contribution(const WeierstrassModel& m, const FiberReport& rep,
                       const Section& p, const Section& q) {
    if (rep.components <= 1 && rep.type.kind != KodairaKind::Unsupported) return Rat(0);
    FiberLocal Lp = fiber_local_data(m, p, rep);
    QuotRing K{Lp.pi};
    bool triple;
    switch (rep.type.kind) {
        case KodairaKind::In: triple = false; break;
        case KodairaKind::II:
        case KodairaKind::III:
        case KodairaKind::IV:
        case KodairaKind::I0star:
        case KodairaKind::Instar:
        case KodairaKind::Unsupported: triple = true; break;
        default: triple = true; break;
    }
    // For additive types the singular point is the triple root; for I_n the
    // double root. II has a cusp too (m_v = 1) but contributes nothing.
    if (rep.type.kind == KodairaKind::II) return Rat(0);
    UPoly x0;
    if (rep.type.kind == KodairaKind::Unsupported) {
        // no type information: fall back to "does the section avoid the
        // singular locus" via gcd(fbar, fbar'), trying double-root form
        try {
            x0 = fiber_singular_x(K, Lp.cubic, false);
        } catch (const std::domain_error&) {
            x0 = fiber_singular_x(K, Lp.cubic, true);
        }
    } else {
        x0 = fiber_singular_x(K, Lp.cubic, triple);
    }
    bool p_through = through_singular_point(K, Lp, x0);
    if (!p_through) return Rat(0);
    FiberLocal Lq = fiber_local_data(m, q, rep);
    bool q_through = through_singular_point(K, Lq, x0);
    if (!q_through) return Rat(0);
    int ci = component_at(m, p, rep);
    int cj = component_at(m, q, rep);
    return contribution(rep, ci, cj);
}

} // namespace

// classification is pure in the model; memoize it, keyed by the coefficients
static const std::vector<FiberReport>& classified(const WeierstrassModel& m) {
    thread_local std::map<std::string, std::vector<FiberReport>> cache;
    std::string key = upoly_str(m.a2) + "|" + upoly_str(m.a4) + "|" +
                      upoly_str(m.a6) + "|" + std::to_string(m.chi);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, classify_fibers(m)).first;
    return it->second;
}

Rat height(const WeierstrassModel& m, const Section& p, const Section& q) {
    if (p.is_zero || q.is_zero) return Rat(0);
    const std::vector<FiberReport>& reps = classified(m);
    Rat contr(0);
    for (const auto& rep : reps)
        contr += Rat(rep.place.degree()) * fiber_contribution(m, rep, p, q);
    Rat chi(m.chi);
    if (p == q)
        return Rat(2) * chi + Rat(2 * intersect_with_zero(m, p)) - contr;
    return chi + Rat(intersect_with_zero(m, p)) + Rat(intersect_with_zero(m, q)) -
           Rat(intersect_sections(m, p, q)) - contr;
}

bool is_narrow(const WeierstrassModel& m, const Section& p) {
    if (p.is_zero) return true;
    if (!on_curve(m, p))
        throw std::invalid_argument("is_narrow: section not on the curve");
    for (const auto& rep : classified(m)) {
        bool reducible = rep.components >= 2 ||
                         rep.type.kind == KodairaKind::Unsupported;
        if (!reducible) continue;
        FiberLocal L = fiber_local_data(m, p, rep);
        QuotRing K{L.pi};
        UPoly x0;
        if (rep.type.kind == KodairaKind::In) {
            x0 = fiber_singular_x(K, L.cubic, false);
        } else {
            x0 = fiber_singular_x(K, L.cubic, true);
        }
        if (through_singular_point(K, L, x0)) {
            bool supported = rep.type.kind == KodairaKind::In ||
                             rep.type.kind == KodairaKind::III ||
                             rep.type.kind == KodairaKind::IV;
            if (!supported)
                throw std::domain_error(
                    "is_narrow: section meets an unsupported fiber nontrivially (" +
                    rep.type.str() + ")");
            return false;
        }
    }
    return true;
}

Mat<Rat> gram_matrix(const WeierstrassModel& m, const std::vector<Section>& basis) {
    int n = static_cast<int>(basis.size());
    Mat<Rat> g(n, n);
    for (int i = 0; i < n; i++)
        for (int j = i; j < n; j++) {
            Rat h = height(m, basis[i], basis[j]);
            g.at(i, j) = h;
            g.at(j, i) = h;
        }
    return g;
}

// ---------------------------------------------------------------------------
// root enumeration
// ---------------------------------------------------------------------------

std::vector<std::vector<long>> enumerate_roots(const Mat<Rat>& gram) {
    int n = gram.rows;
    if (n != gram.cols) throw std::invalid_argument("enumerate_roots: not square");
    if (n == 0 || n > 8) throw std::invalid_argument("enumerate_roots: rank must be 1..8");
    // positive definiteness via leading principal minors
    for (int k = 1; k <= n; k++) {
        Mat<Rat> sub(k, k);
        for (int i = 0; i < k; i++)
            for (int j = 0; j < k; j++) sub.at(i, j) = gram.at(i, j);
        if (mat_det(QQ, sub).sign() <= 0)
            throw std::domain_error("enumerate_roots: gram not positive definite");
    }
    Mat<Rat> inv = mat_inverse(QQ, gram);
    std::vector<long> bound(n);
    for (int i = 0; i < n; i++) {
        Rat b = Rat(2) * inv.at(i, i);
        long bi = 0;
        while (Rat(bi) * Rat(bi) < b) bi++;
        bound[i] = bi;
    }
    std::vector<std::vector<long>> out;
    std::vector<long> v(n, 0);
    for (int i = 0; i < n; i++) v[i] = -bound[i];
    while (true) {
        Rat norm(0);
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++)
                norm += Rat(v[i]) * gram.at(i, j) * Rat(v[j]);
        if (norm == Rat(2)) out.push_back(v);
        int k = n - 1;
        while (k >= 0 && v[k] == bound[k]) { v[k] = -bound[k]; k--; }
        if (k < 0) break;
        v[k]++;
    }
    return out;
}

} // namespace zariski
