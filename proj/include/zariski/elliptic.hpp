#ifndef ZARISKI_ELLIPTIC_HPP
#define ZARISKI_ELLIPTIC_HPP

#include <string>
#include <vector>

#include "linalg.hpp"
#include "ratfunc.hpp"

namespace zariski {

// Order sentinel for identically-zero invariants ("valuation infinity").
constexpr int kInfOrd = 1 << 20;

// y^2 = x^3 + a2 x^2 + a4 x + a6 over Q(t), relatively minimal, with
// Euler characteristic chi (1 for a rational elliptic surface). The degree
// bounds deg a_i <= 2*i*chi keep the chart swap at infinity polynomial.
struct WeierstrassModel {
    UPoly a2, a4, a6;
    int chi = 1;
};

void validate_model(const WeierstrassModel& m);

struct Section {
    bool is_zero = true;
    RatFunc x, y;

    static Section zero() { return Section{}; }
    static Section finite(RatFunc xx, RatFunc yy) {
        return Section{false, std::move(xx), std::move(yy)};
    }
    friend bool operator==(const Section& a, const Section& b) {
        if (a.is_zero != b.is_zero) return false;
        return a.is_zero || (a.x == b.x && a.y == b.y);
    }
    friend bool operator!=(const Section& a, const Section& b) { return !(a == b); }
};

enum class KodairaKind { In, II, III, IV, I0star, Instar, Unsupported };

struct KodairaType {
    KodairaKind kind = KodairaKind::Unsupported;
    int n = 0;  // for In / Instar

    std::string str() const;
    friend bool operator==(const KodairaType& a, const KodairaType& b) {
        return a.kind == b.kind && a.n == b.n;
    }
};

struct FiberReport {
    LinePlace place;
    KodairaType type;
    int components = 0;       // m_v (0 when unknown/unsupported)
    int ord_c4 = 0, ord_c6 = 0, ord_delta = 0;  // kInfOrd = identically zero
};

struct SurfaceInvariants {
    UPoly c4, c6, delta;
};

SurfaceInvariants invariants_c4_c6_delta(const WeierstrassModel& m);

// One report per finite place dividing delta, plus infinity when
// ord_inf(delta) > 0. Deterministic order: finite places by (degree,
// coefficient lex), infinity last.
std::vector<FiberReport> classify_fibers(const WeierstrassModel& m);

bool on_curve(const WeierstrassModel& m, const Section& p);

Section negate(const Section& p);
Section group_law(const WeierstrassModel& m, const Section& p, const Section& q);
Section scalar_mul(const WeierstrassModel& m, long n, const Section& p);

// the u = 1/t chart: a_i(u) = u^{2 i chi} a_i(1/u), x = u^2 x(1/u), y = u^3 y(1/u)
WeierstrassModel model_at_infinity(const WeierstrassModel& m);
Section section_at_infinity(const WeierstrassModel& m, const Section& p);

// (P . O): half pole orders of x, including the infinity chart
int intersect_with_zero(const WeierstrassModel& m, const Section& p);

// (P . Q) for distinct finite sections
int intersect_sections(const WeierstrassModel& m, const Section& p, const Section& q);

// Fiber component hit by a section: 0 is the identity component. Supported
// fiber types: I_n, III, IV.
int component_at(const WeierstrassModel& m, const Section& p, const FiberReport& rep);

// Contr_v value for component indices i, j of a supported fiber type.
Rat contribution(const FiberReport& rep, int i, int j);

// Shioda height pairing; either argument equal to the zero section gives 0.
Rat height(const WeierstrassModel& m, const Section& p, const Section& q);

bool is_narrow(const WeierstrassModel& m, const Section& p);

Mat<Rat> gram_matrix(const WeierstrassModel& m, const std::vector<Section>& basis);

// All integer vectors v with v^T G v = 2, G positive definite of rank <= 8.
// Lexicographic output order; roots come in +/- pairs.
std::vector<std::vector<long>> enumerate_roots(const Mat<Rat>& gram);

} // namespace zariski

#endif
