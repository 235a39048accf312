#ifndef ZARISKI_TESTS_HELPERS_HPP
#define ZARISKI_TESTS_HELPERS_HPP

#include <initializer_list>
#include <vector>

#include "zariski/elliptic.hpp"

namespace zt {

using namespace zariski;

inline UPoly up(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.push_back(Rat(v));
    return upoly(std::move(c));
}

inline UPoly upq(std::initializer_list<const char*> coeffs) {
    std::vector<Rat> c;
    for (const char* v : coeffs) c.push_back(Rat::from_string(v));
    return upoly(std::move(c));
}

inline RatFunc rf(std::initializer_list<const char*> num,
                  std::initializer_list<const char*> den = {"1"}) {
    return RatFunc(upq(num), upq(den));
}

// y^2 = x^3 + (271350 - 98 t) x^2 + t(t-5825)(t-2025) x + 36 t^2 (t-2025)^2
inline WeierstrassModel paper_model() {
    WeierstrassModel m;
    m.a2 = up({271350, -98});
    m.a4 = up({0, 11795625, -7850, 1});       // t^3 - 7850 t^2 + 11795625 t
    m.a6 = up({0, 0, 147622500, -145800, 36});  // 36 t^2 (t-2025)^2
    m.chi = 1;
    return m;
}

inline std::vector<Section> paper_sections() {
    // s1..s5 of the bundled surface
    std::vector<Section> s;
    s.push_back(Section::finite(rf({"0", "-81", "1/25"}),
                                rf({"0", "31185", "-158/5", "1/125"})));
    s.push_back(Section::finite(rf({"-669375/4", "75/2", "1/100"}),
                                rf({"-431746875/8", "368625/8", "-229/40", "-1/1000"})));
    s.push_back(Section::finite(rf({"0", "-32"}), rf({"0", "-6930", "2"})));
    s.push_back(Section::finite(rf({"70875", "-35"}),
                                rf({"41461875", "-18450", "-1"})));
    s.push_back(Section::finite(rf({"0"}), rf({"0", "-12150", "6"})));
    return s;
}

// narrow generators as integer combinations of s1..s5
inline std::vector<std::vector<long>> paper_narrow_combos() {
    return {{2, -1, 0, 0, 0},
            {-1, 2, -1, -1, 0},
            {0, -1, 2, 0, 0},
            {0, -1, 0, 2, 0},
            {0, 0, 0, 0, 2}};
}

inline Section combine(const WeierstrassModel& m, const std::vector<Section>& basis,
                       const std::vector<long>& coeffs) {
    Section acc = Section::zero();
    for (size_t i = 0; i < coeffs.size(); i++)
        acc = group_law(m, acc, scalar_mul(m, coeffs[i], basis[i]));
    return acc;
}

// y^2 = x^3 + t(2t-1) x^2 + t(t-1)(t-2)(t+2) x : III + 4 I2 + I1, MW0 = A1^3,
// 2-torsion (0,0)
inline WeierstrassModel knt_model() {
    WeierstrassModel m;
    m.a2 = up({0, -1, 2});
    m.a4 = up({0, 4, -4, -1, 1});  // t(t-1)(t-2)(t+2) = t^4 - t^3 - 4 t^2 + 4 t
    m.a6 = up({0});
    m.chi = 1;
    return m;
}

// y^2 = x^3 + (1 - t + t^2) x^2 - t^3 x : I6 at t = 0, I2 at infinity,
// section (t, t), 2-torsion (0,0)
inline WeierstrassModel i6_model() {
    WeierstrassModel m;
    m.a2 = up({1, -1, 1});
    m.a4 = up({0, 0, 0, -1});
    m.a6 = up({0});
    m.chi = 1;
    return m;
}

// y^2 = x^3 + t^2 (1 - t) : IV at 0, II at 1, I0* at infinity, section (t, t)
inline WeierstrassModel iv_model() {
    WeierstrassModel m;
    m.a2 = up({0});
    m.a4 = up({0});
    m.a6 = up({0, 0, 1, -1});
    m.chi = 1;
    return m;
}

} // namespace zt

#endif
