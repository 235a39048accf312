#include "zariski/factor.hpp"

#include <algorithm>
#include <map>

#include "zariski/rng.hpp"

namespace zariski {

namespace {

using ZPoly = std::vector<Int>;  // dense, low-to-high, integer coefficients

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++)
            r[i + j] += a[i] * b[j];
    return r;
}

// exact division over Z; returns false if not divisible
bool zdivide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    ZPoly r = a;
    q.assign(std::max<int>(0, zdeg(a) - zdeg(b) + 1), Int(0));
    while (zdeg(r) >= zdeg(b)) {
        Int qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(),
                    r.back().get_mpz_t(), b.back().get_mpz_t());
        if (rem != 0) return false;
        int d = zdeg(r) - zdeg(b);
        q[d] = qc;
        for (int i = 0; i <= zdeg(b); i++) r[i + d] -= qc * b[i];
        if (r.back() != 0) return false;
        ztrim(r);
        if (r.empty()) break;
    }
    return r.empty();
}

Int zcontent(const ZPoly& f) {
    Int g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly zprimitive(ZPoly f) {
    Int g = zcontent(f);
    if (g > 1)
        for (auto& c : f) c /= g;
    if (!f.empty() && f.back() < 0)
        for (auto& c : f) c = -c;
    return f;
}

ZPoly upoly_to_z(const UPoly& f, Rat& content) {
    // f = content * primitive integer polynomial
    Int l = 1;
    for (const auto& c : f.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    ZPoly z(f.c.size());
    for (size_t i = 0; i < f.c.size(); i++) z[i] = f.c[i].num() * (l / f.c[i].den());
    Int g = zcontent(z);
    if (g == 0) { content = Rat(0); return {}; }
    for (auto& c : z) c /= g;
    bool negate = z.back() < 0;
    if (negate)
        for (auto& c : z) c = -c;
    content = Rat(negate ? -g : g, l);
    return z;
}

UPoly z_to_upoly(const ZPoly& f) {
    std::vector<Rat> c(f.size());
    for (size_t i = 0; i < f.size(); i++) c[i] = Rat(f[i]);
    return upoly(std::move(c));
}

using FpPoly = DPoly<PrimeField>;

FpPoly z_mod_p(const PrimeField& K, const ZPoly& f) {
    std::vector<uint64_t> c(f.size());
    for (size_t i = 0; i < f.size(); i++) {
        Int m = f[i] % Int(static_cast<unsigned long>(K.p));
        if (m < 0) m += Int(static_cast<unsigned long>(K.p));
        c[i] = m.get_ui();
    }
    return dp_make(K, std::move(c));
}

// Cantor–Zassenhaus equal-degree splitting of a product of degree-d
// irreducibles, p odd.
void equal_degree_split(const PrimeField& K, const FpPoly& f, int d,
                        Rng& rng, std::vector<FpPoly>& out) {
    if (f.deg() == d) { out.push_back(dp_monic(K, f)); return; }
    Int pd = 1;
    for (int i = 0; i < d; i++) pd *= Int(static_cast<unsigned long>(K.p));
    Int e = (pd - 1) / 2;
    while (true) {
        std::vector<uint64_t> rc(f.deg());
        for (auto& x : rc) x = rng.below(K.p);
        FpPoly r = dp_make(K, std::move(rc));
        if (r.is_zero()) continue;
        FpPoly g = dp_gcd(K, r, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(K, g, d, rng, out);
            equal_degree_split(K, dp_div(K, f, g), d, rng, out);
            return;
        }
        FpPoly h = dp_pow_mod(K, r, e, f);
        h = dp_sub(K, h, dp_const(K, K.one()));
        g = dp_gcd(K, h, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(K, g, d, rng, out);
            equal_degree_split(K, dp_div(K, f, g), d, rng, out);
            return;
        }
    }
}

// full factorization of a squarefree monic f over F_p
std::vector<FpPoly> fp_factor_squarefree(const PrimeField& K, FpPoly f, Rng& rng) {
    std::vector<FpPoly> out;
    FpPoly x = dp_x(K);
    FpPoly h = x;
    int d = 0;
    while (f.deg() > 0) {
        d++;
        if (2 * d > f.deg()) { out.push_back(dp_monic(K, f)); break; }
        h = dp_pow_mod(K, h, Int(static_cast<unsigned long>(K.p)), f);
        FpPoly g = dp_gcd(K, dp_sub(K, h, x), f);
        if (g.deg() > 0) {
            equal_degree_split(K, g, d, rng, out);
            f = dp_div(K, f, g);
            h = dp_rem(K, h, f);
        }
    }
    return out;
}

// symmetric representative in (-m/2, m/2]
Int zsym(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZPoly zmod_sym(const ZPoly& f, const Int& m) {
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); i++) r[i] = zsym(f[i], m);
    ztrim(r);
    return r;
}

ZPoly zmod(const ZPoly& f, const Int& m) {
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); i++) {
        r[i] = f[i] % m;
        if (r[i] < 0) r[i] += m;
    }
    ztrim(r);
    return r;
}

// Linear multifactor Hensel lifting.
// Input: primitive f over Z, pairwise-coprime monic g_i over F_p with
// f ≡ lc(f) * prod g_i (mod p). Lifts to the same congruence mod p^K,
// p^K > bound, keeping the g_i monic.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const PrimeField& Kp,
                               std::vector<FpPoly> gs, const Int& bound) {
    const Int p(static_cast<unsigned long>(Kp.p));
    size_t r = gs.size();

    // Bezout data over F_p: sigma_i * prod_{j != i} g_j ≡ 1 (mod g_i)
    std::vector<FpPoly> sigma(r);
    for (size_t i = 0; i < r; i++) {
        FpPoly prod = dp_const(Kp, Kp.one());
        for (size_t j = 0; j < r; j++)
            if (j != i) prod = dp_rem(Kp, dp_mul(Kp, prod, gs[j]), gs[i]);
        FpPoly s, t;
        FpPoly g = dp_xgcd(Kp, prod, gs[i], s, t);
        if (g.deg() != 0)
            throw std::domain_error("hensel_lift: factors not coprime mod p");
        sigma[i] = dp_rem(Kp, s, gs[i]);
    }

    std::vector<ZPoly> G(r);
    for (size_t i = 0; i < r; i++) {
        G[i].resize(gs[i].c.size());
        for (size_t j = 0; j < gs[i].c.size(); j++)
            G[i][j] = Int(static_cast<unsigned long>(gs[i].c[j]));
    }

    Int lc = f.back();
    Int q = p;  // current modulus
    while (q <= 2 * bound) {
        // error e = (f - lc * prod G_i) / q, then distribute mod p
        ZPoly prod{Int(1)};
        for (const auto& g : G) prod = zmul(prod, g);
        for (auto& c : prod) c *= lc;
        ZPoly e(std::max(f.size(), prod.size()), Int(0));
        for (size_t i = 0; i < f.size(); i++) e[i] += f[i];
        for (size_t i = 0; i < prod.size(); i++) e[i] -= prod[i];
        ztrim(e);
        Int qp = q * p;
        if (!e.empty()) {
            for (auto& c : e) {
                Int quo, rem;
                mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
                if (rem != 0) throw std::domain_error("hensel_lift: inconsistent error");
                c = quo;
            }
            // lc is a unit mod p (p chosen not dividing lc)
            Int lcinv;
            mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), p.get_mpz_t());
            for (auto& c : e) c = c * lcinv;
            FpPoly eF = z_mod_p(Kp, e);
            for (size_t i = 0; i < r; i++) {
                FpPoly gi = z_mod_p(Kp, G[i]);
                FpPoly di = dp_rem(Kp, dp_mul(Kp, eF, sigma[i]), gi);
                // G_i += q * d_i  (keeps G_i monic: deg d_i < deg g_i)
                for (size_t j = 0; j < di.c.size(); j++)
                    G[i][j] += q * Int(static_cast<unsigned long>(di.c[j]));
            }
        }
        q = qp;
        for (auto& g : G) {
            g = zmod(g, q);
            // keep monic representatives
        }
    }
    return G;
}

// Zassenhaus factorization of a primitive squarefree integer polynomial.
std::vector<ZPoly> z_factor_squarefree(ZPoly f) {
    std::vector<ZPoly> out;
    if (zdeg(f) <= 0) return out;
    if (zdeg(f) == 1) { out.push_back(zprimitive(f)); return out; }

    Rng rng(0x5eedf0cdULL);

    // choose an odd prime keeping f squarefree with invertible lc
    static const uint64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
                                      41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                                      83, 89, 97, 101, 103, 107, 109, 113, 127,
                                      131, 137, 139, 149, 151, 157, 163, 167};
    const PrimeField* chosen = nullptr;
    static std::vector<PrimeField> pool;
    if (pool.empty())
        for (uint64_t p : primes) pool.emplace_back(p);
    FpPoly fbar;
    for (const auto& K : pool) {
        if (f.back() % Int(static_cast<unsigned long>(K.p)) == 0) continue;
        FpPoly g = z_mod_p(K, f);
        if (g.deg() != zdeg(f)) continue;
        FpPoly d = dp_derivative(K, g);
        if (d.is_zero()) continue;
        if (dp_gcd(K, g, d).deg() == 0) { chosen = &K; fbar = g; break; }
    }
    if (!chosen)
        throw std::domain_error("z_factor_squarefree: no suitable prime found");
    const PrimeField& Kp = *chosen;

    std::vector<FpPoly> modular = fp_factor_squarefree(Kp, dp_monic(Kp, fbar), rng);
    if (modular.size() == 1) { out.push_back(zprimitive(f)); return out; }
    std::sort(modular.begin(), modular.end(), [](const FpPoly& a, const FpPoly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.c < b.c;
    });

    // Landau–Mignotte: |coef of any factor| <= 2^n * sqrt(n+1) * maxcoef * |lc|
    Int maxc = 0;
    for (const auto& c : f) {
        Int a = c >= 0 ? c : Int(-c);
        if (a > maxc) maxc = a;
    }
    Int bound = maxc * Int(::abs(f.back()));
    Int root = sqrt(Int(zdeg(f) + 1)) + 1;
    bound *= root;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), zdeg(f) + 1);

    std::vector<ZPoly> lifted = hensel_lift(f, Kp, modular, bound);
    Int q = Int(static_cast<unsigned long>(Kp.p));
    while (q <= 2 * bound) q *= Int(static_cast<unsigned long>(Kp.p));

    // subset recombination
    std::vector<int> live(lifted.size());
    for (size_t i = 0; i < lifted.size(); i++) live[i] = static_cast<int>(i);
    ZPoly rem = f;

    for (size_t csz = 1; csz <= live.size() && !live.empty(); ) {
        if (csz > live.size() / 2 + (live.size() % 2)) break;
        bool found = false;
        std::vector<int> idx(csz);
        for (size_t i = 0; i < csz; i++) idx[i] = static_cast<int>(i);
        while (true) {
            ZPoly cand{rem.back()};  // lc * prod subset, centered mod q
            for (size_t i = 0; i < csz; i++) cand = zmul(cand, lifted[live[idx[i]]]);
            cand = zmod_sym(cand, q);
            cand = zprimitive(cand);
            ZPoly quo;
            if (!cand.empty() && zdivide(rem, cand, quo)) {
                out.push_back(cand);
                rem = zprimitive(quo);
                std::vector<int> nl;
                for (size_t i = 0, k = 0; i < live.size(); i++) {
                    if (k < csz && static_cast<int>(i) == idx[k]) { k++; continue; }
                    nl.push_back(live[i]);
                }
                live = std::move(nl);
                found = true;
                break;
            }
            // next combination
            int pos = static_cast<int>(csz) - 1;
            while (pos >= 0 && idx[pos] == static_cast<int>(live.size() - csz + pos)) pos--;
            if (pos < 0) break;
            idx[pos]++;
            for (size_t i = pos + 1; i < csz; i++) idx[i] = idx[i - 1] + 1;
        }
        if (!found) csz++;
    }
    if (zdeg(rem) > 0) out.push_back(zprimitive(rem));
    return out;
}

} // namespace

UPoly upoly_gcd_q(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return dp_monic(QQ, b);
    if (b.is_zero()) return dp_monic(QQ, a);
    Rat ca, cb;
    ZPoly u = upoly_to_z(a, ca), v = upoly_to_z(b, cb);
    if (zdeg(u) < zdeg(v)) std::swap(u, v);
    while (!v.empty()) {
        // pseudo-remainder: lc(v)^(du-dv+1) * u mod v, then primitive part
        int du = zdeg(u), dv = zdeg(v);
        Int l = v.back();
        Int scale = 1;
        for (int i = 0; i < du - dv + 1; i++) scale *= l;
        ZPoly r = u;
        for (auto& c : r) c *= scale;
        while (zdeg(r) >= dv) {
            Int q = r.back() / v.back();
            int d = zdeg(r) - dv;
            for (int i = 0; i <= dv; i++) r[i + d] -= q * v[i];
            if (!r.empty() && r.back() != 0)
                throw std::logic_error("upoly_gcd_q: pseudo-division failed");
            ztrim(r);
            if (r.empty()) break;
        }
        u = std::move(v);
        v = zprimitive(r);
    }
    return dp_monic(QQ, z_to_upoly(u));
}

UPoly upoly_squarefree_part(const UPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    UPoly d = dp_derivative(QQ, f);
    if (d.is_zero()) return upoly_const(Rat(1));
    return dp_monic(QQ, dp_div(QQ, f, dp_gcd(QQ, f, d)));
}

Factorization factor_univariate(const UPoly& f) {
    if (f.is_zero())
        throw std::invalid_argument("factor_univariate: zero polynomial");
    Factorization fa;
    fa.lc = dp_lc(QQ, f);
    if (f.deg() == 0) return fa;

    // Yun squarefree decomposition of the monic part
    UPoly g = dp_monic(QQ, f);
    std::vector<std::pair<UPoly, int>> sqf;  // (squarefree part, multiplicity)
    {
        UPoly gp = dp_derivative(QQ, g);
        UPoly a = dp_gcd(QQ, g, gp);
        UPoly b = dp_div(QQ, g, a);
        UPoly c = dp_div(QQ, gp, a);
        int m = 1;
        while (b.deg() > 0) {
            UPoly d = dp_sub(QQ, c, dp_derivative(QQ, b));
            UPoly part = dp_gcd(QQ, b, d);
            if (part.deg() > 0) sqf.push_back({part, m});
            b = dp_div(QQ, b, part);
            c = dp_div(QQ, d, part);
            m++;
        }
    }

    for (const auto& [part, mult] : sqf) {
        Rat cont;
        ZPoly z = upoly_to_z(part, cont);
        for (const auto& irr : z_factor_squarefree(z)) {
            UPoly m = dp_monic(QQ, z_to_upoly(irr));
            fa.factors.push_back({m, mult});
        }
    }
    std::sort(fa.factors.begin(), fa.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
                  for (int i = a.first.deg(); i >= 0; i--) {
                      if (a.first.c[i] != b.first.c[i]) return a.first.c[i] < b.first.c[i];
                  }
                  return a.second < b.second;
              });
    return fa;
}

UPoly factorization_expand(const Factorization& fa) {
    UPoly r = upoly_const(fa.lc);
    for (const auto& [m, e] : fa.factors)
        for (int i = 0; i < e; i++) r = r * m;
    return r;
}

bool upoly_is_irreducible(const UPoly& f) {
    if (f.deg() <= 0) return false;
    if (f.deg() == 1) return true;
    Factorization fa = factor_univariate(f);
    return fa.factors.size() == 1 && fa.factors[0].second == 1;
}

} // namespace zariski
