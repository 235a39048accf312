#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace zariski;
using namespace zt;

static const FiberReport* find_at(const std::vector<FiberReport>& reps,
                                  const LinePlace& v) {
    for (const auto& r : reps)
        if (r.place == v) return &r;
    return nullptr;
}

TEST_CASE("invariants on constant and simple models") {
    WeierstrassModel m;  // y^2 = x^3 + x
    m.a2 = up({0});
    m.a4 = up({1});
    m.a6 = up({0});
    SurfaceInvariants inv = invariants_c4_c6_delta(m);
    CHECK(inv.delta == up({-64}));
    // constant delta: no singular fibers over the affine line; as a chi = 1
    // model it is degenerate at infinity (non-minimal pattern) and aborts
    CHECK_THROWS_AS(classify_fibers(m), std::domain_error);
}

TEST_CASE("y^2 = x^3 + t") {
    WeierstrassModel m;
    m.a2 = up({0});
    m.a4 = up({0});
    m.a6 = up({0, 1});
    SurfaceInvariants inv = invariants_c4_c6_delta(m);
    CHECK(inv.c4.is_zero());
    CHECK(inv.delta == up({0, 0, -432}));
    auto reps = classify_fibers(m);
    const FiberReport* at0 = find_at(reps, LinePlace::rational(Rat(0)));
    REQUIRE(at0 != nullptr);
    CHECK(at0->type.kind == KodairaKind::II);
    CHECK(at0->ord_delta == 2);
    CHECK(at0->ord_c6 == 1);
    CHECK(at0->ord_c4 == kInfOrd);
}

TEST_CASE("1728 delta = c4^3 - c6^2 identically") {
    for (const WeierstrassModel& m :
         {paper_model(), knt_model(), i6_model(), iv_model()}) {
        SurfaceInvariants inv = invariants_c4_c6_delta(m);
        CHECK(Rat(1728) * inv.delta == inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6);
    }
}

TEST_CASE("bundled surface: two I2, one III, delta census 12") {
    auto reps = classify_fibers(paper_model());
    int i2 = 0, iii = 0, census = 0;
    for (const auto& r : reps) {
        census += r.place.degree() * r.ord_delta;
        if (r.type.kind == KodairaKind::In && r.type.n == 2) i2++;
        if (r.type.kind == KodairaKind::III) iii++;
    }
    CHECK(i2 == 2);
    CHECK(iii == 1);
    CHECK(census == 12);
    // the two I2 sit over t = 0 and t = 2025; the III at infinity
    const FiberReport* a = find_at(reps, LinePlace::rational(Rat(0)));
    const FiberReport* b = find_at(reps, LinePlace::rational(Rat(2025)));
    const FiberReport* c = find_at(reps, LinePlace::at_infinity());
    REQUIRE(a); REQUIRE(b); REQUIRE(c);
    CHECK(a->type.kind == KodairaKind::In);
    CHECK(a->type.n == 2);
    CHECK(a->components == 2);
    CHECK(b->type.n == 2);
    CHECK(c->type.kind == KodairaKind::III);
    CHECK(c->ord_c4 == 1);
    CHECK(c->ord_delta == 3);
    // the remaining multiplicative place is a single quintic orbit
    bool quintic_i1 = false;
    for (const auto& r : reps)
        if (!r.place.infinite && r.place.pi.deg() == 5 &&
            r.type.kind == KodairaKind::In && r.type.n == 1)
            quintic_i1 = true;
    CHECK(quintic_i1);
}

TEST_CASE("kNT-type surface: III + four I2 + I1") {
    auto reps = classify_fibers(knt_model());
    int i2 = 0, iii = 0, i1 = 0, census = 0;
    for (const auto& r : reps) {
        census += r.place.degree() * r.ord_delta;
        if (r.type.kind == KodairaKind::In && r.type.n == 2) i2++;
        if (r.type.kind == KodairaKind::In && r.type.n == 1) i1++;
        if (r.type.kind == KodairaKind::III) iii++;
    }
    CHECK(census == 12);
    CHECK(iii == 1);
    CHECK(i2 == 4);
    CHECK(i1 == 1);
    const FiberReport* inf = find_at(reps, LinePlace::at_infinity());
    REQUIRE(inf);
    CHECK(inf->type.kind == KodairaKind::In);
    CHECK(inf->type.n == 2);
    const FiberReport* at0 = find_at(reps, LinePlace::rational(Rat(0)));
    REQUIRE(at0);
    CHECK(at0->type.kind == KodairaKind::III);
}

TEST_CASE("I6 model and IV model censuses") {
    auto reps = classify_fibers(i6_model());
    const FiberReport* at0 = find_at(reps, LinePlace::rational(Rat(0)));
    REQUIRE(at0);
    CHECK(at0->type.kind == KodairaKind::In);
    CHECK(at0->type.n == 6);
    CHECK(at0->components == 6);
    const FiberReport* inf = find_at(reps, LinePlace::at_infinity());
    REQUIRE(inf);
    CHECK(inf->type.kind == KodairaKind::In);
    CHECK(inf->type.n == 2);

    auto reps2 = classify_fibers(iv_model());
    const FiberReport* iv = find_at(reps2, LinePlace::rational(Rat(0)));
    REQUIRE(iv);
    CHECK(iv->type.kind == KodairaKind::IV);
    CHECK(iv->components == 3);
    const FiberReport* ii = find_at(reps2, LinePlace::rational(Rat(1)));
    REQUIRE(ii);
    CHECK(ii->type.kind == KodairaKind::II);
    const FiberReport* i0s = find_at(reps2, LinePlace::at_infinity());
    REQUIRE(i0s);
    CHECK(i0s->type.kind == KodairaKind::I0star);
    CHECK(i0s->components == 5);
}

TEST_CASE("unsupported pattern is reported with raw orders") {
    WeierstrassModel m;  // y^2 = x^3 + t^2: IV at 0, IV*-pattern at infinity
    m.a2 = up({0});
    m.a4 = up({0});
    m.a6 = up({0, 0, 1});
    auto reps = classify_fibers(m);
    const FiberReport* inf = find_at(reps, LinePlace::at_infinity());
    REQUIRE(inf);
    CHECK(inf->type.kind == KodairaKind::Unsupported);
    CHECK(inf->ord_delta == 8);
    CHECK(inf->ord_c6 == 4);
}

TEST_CASE("non-minimal model aborts") {
    WeierstrassModel m;  // y^2 = x^3 + t^4 x + t^6
    m.a2 = up({0});
    m.a4 = up({0, 0, 0, 0, 1});
    m.a6 = up({0, 0, 0, 0, 0, 0, 1});
    CHECK_THROWS_WITH_AS(classify_fibers(m), "model not minimal at place",
                         std::domain_error);
}

TEST_CASE("degree bounds enforced") {
    WeierstrassModel m;
    m.a2 = up({0, 0, 0, 1});  // cubic a2 breaks the chart swap
    m.a4 = up({0});
    m.a6 = up({1});
    CHECK_THROWS(invariants_c4_c6_delta(m));
}

TEST_CASE("delta identically zero rejected") {
    WeierstrassModel m;  // y^2 = x^2 (x + 1) is not an elliptic fibration
    m.a2 = up({1});
    m.a4 = up({0});
    m.a6 = up({0});
    CHECK_THROWS_WITH_AS(invariants_c4_c6_delta(m),
                         "model is not an elliptic fibration (delta = 0)",
                         std::domain_error);
}
