#include "zariski/poly.hpp"

#include <optional>
#include <stdexcept>

namespace zariski {

int Poly::total_degree() const {
    if (terms.empty()) return -1;
    const auto& e = terms.rbegin()->first;  // grlex max
    return std::accumulate(e.begin(), e.end(), 0);
}

int Poly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, e[var]);
    return terms.empty() ? -1 : d;
}

int Poly::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); i++)
        if (vars[i] == name) return i;
    return -1;
}

void Poly::add_term(const std::vector<int>& exp, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms.find(exp);
    if (it == terms.end()) {
        terms.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Poly Poly::constant(std::vector<std::string> vars, const Rat& c) {
    Poly p(std::move(vars));
    p.add_term(std::vector<int>(p.nvars(), 0), c);
    return p;
}

Poly Poly::variable(std::vector<std::string> vars, int idx) {
    Poly p(std::move(vars));
    std::vector<int> e(p.nvars(), 0);
    e[idx] = 1;
    p.add_term(e, Rat(1));
    return p;
}

static void check_vars(const Poly& a, const Poly& b) {
    if (a.vars != b.vars)
        throw std::invalid_argument("Poly: mismatched variable lists");
}

Poly operator+(const Poly& a, const Poly& b) {
    check_vars(a, b);
    Poly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    check_vars(a, b);
    Poly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, -c);
    return r;
}

Poly operator-(const Poly& a) {
    Poly r(a.vars);
    for (const auto& [e, c] : a.terms) r.terms.emplace(e, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    check_vars(a, b);
    Poly r(a.vars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); i++) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly operator*(const Rat& s, const Poly& a) {
    Poly r(a.vars);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a.terms) r.terms.emplace(e, s * c);
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    return a.vars == b.vars && a.terms == b.terms;
}

Poly poly_pow(const Poly& a, int e) {
    Poly r = Poly::constant(a.vars, Rat(1));
    for (int i = 0; i < e; i++) r = r * a;
    return r;
}

Poly poly_exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_exact_div: zero divisor");
    Poly r = a, q(a.vars);
    check_vars(a, b);
    const auto& eb = b.terms.rbegin()->first;
    const Rat& cb = b.terms.rbegin()->second;
    while (!r.is_zero()) {
        const auto& er = r.terms.rbegin()->first;
        const Rat& cr = r.terms.rbegin()->second;
        std::vector<int> e(er.size());
        for (size_t i = 0; i < e.size(); i++) {
            e[i] = er[i] - eb[i];
            if (e[i] < 0) throw std::domain_error("poly_exact_div: not divisible");
        }
        Rat c = cr / cb;
        q.add_term(e, c);
        Poly t(a.vars);
        t.add_term(e, c);
        r = r - t * b;
    }
    return q;
}

Poly poly_derivative(const Poly& a, int var) {
    Poly r(a.vars);
    for (const auto& [e, c] : a.terms) {
        if (e[var] == 0) continue;
        std::vector<int> e2 = e;
        e2[var] -= 1;
        r.add_term(e2, Rat(e[var]) * c);
    }
    return r;
}

Poly poly_subst(const Poly& a, const std::vector<std::string>& target_vars,
                const std::vector<Poly>& images) {
    if (images.size() != a.vars.size())
        throw std::invalid_argument("poly_subst: image count mismatch");
    Poly r(target_vars);
    for (const auto& [e, c] : a.terms) {
        Poly term = Poly::constant(target_vars, c);
        for (size_t i = 0; i < e.size(); i++)
            if (e[i] > 0) term = term * poly_pow(images[i], e[i]);
        r = r + term;
    }
    return r;
}

Poly poly_eval_partial(const Poly& a, const std::vector<std::optional<Rat>>& vals) {
    std::vector<std::string> kept;
    std::vector<int> keep_idx;
    for (int i = 0; i < a.nvars(); i++)
        if (!vals[i]) { kept.push_back(a.vars[i]); keep_idx.push_back(i); }
    Poly r(kept);
    for (const auto& [e, c] : a.terms) {
        Rat coef = c;
        for (int i = 0; i < a.nvars(); i++)
            if (vals[i]) coef *= pow(*vals[i], e[i]);
        std::vector<int> e2(keep_idx.size());
        for (size_t k = 0; k < keep_idx.size(); k++) e2[k] = e[keep_idx[k]];
        r.add_term(e2, coef);
    }
    return r;
}

Rat poly_eval(const Poly& a, const std::vector<Rat>& point) {
    Rat r(0);
    for (const auto& [e, c] : a.terms) {
        Rat t = c;
        for (size_t i = 0; i < point.size(); i++) t *= pow(point[i], e[i]);
        r += t;
    }
    return r;
}

UPoly poly_to_upoly(const Poly& a, int var) {
    std::vector<Rat> c;
    for (const auto& [e, coef] : a.terms) {
        for (size_t i = 0; i < e.size(); i++)
            if (static_cast<int>(i) != var && e[i] != 0)
                throw std::invalid_argument("poly_to_upoly: polynomial not univariate");
        if (e[var] >= static_cast<int>(c.size())) c.resize(e[var] + 1, Rat(0));
        c[e[var]] = coef;
    }
    return upoly(std::move(c));
}

Poly upoly_to_poly(const UPoly& f, std::vector<std::string> vars, int var) {
    Poly r(std::move(vars));
    for (int i = 0; i <= f.deg(); i++) {
        if (f.c[i].is_zero()) continue;
        std::vector<int> e(r.nvars(), 0);
        e[var] = i;
        r.terms.emplace(e, f.c[i]);
    }
    return r;
}

// coefficients of a as a polynomial in vars[var], entries over the full
// variable list with var-exponent zero
static std::vector<Poly> coeffs_in(const Poly& a, int var) {
    int d = a.degree_in(var);
    std::vector<Poly> cs(d + 1, Poly(a.vars));
    for (const auto& [e, c] : a.terms) {
        std::vector<int> e2 = e;
        int k = e2[var];
        e2[var] = 0;
        cs[k].add_term(e2, c);
    }
    return cs;
}

Poly poly_resultant(const Poly& f, const Poly& g, const std::string& var) {
    int vi = f.var_index(var);
    if (vi < 0 || g.var_index(var) != vi || f.vars != g.vars)
        throw std::invalid_argument("poly_resultant: variable not shared by inputs");
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("poly_resultant: zero input");
    int m = f.degree_in(vi), n = g.degree_in(vi);
    if (m < 1 && n < 1)
        throw std::invalid_argument("poly_resultant: neither input involves the variable");
    std::vector<Poly> fc = coeffs_in(f, vi), gc = coeffs_in(g, vi);

    // Sylvester matrix, f-rows first; entries in the remaining variables.
    int N = m + n;
    std::vector<Poly> M(size_t(N) * N, Poly(f.vars));
    for (int i = 0; i < n; i++)
        for (int k = 0; k <= m; k++) M[size_t(i) * N + (i + m - k)] = fc[k];
    for (int i = 0; i < m; i++)
        for (int k = 0; k <= n; k++) M[size_t(n + i) * N + (i + n - k)] = gc[k];

    // Bareiss; divisions are exact in Q[vars]
    Poly prev = Poly::constant(f.vars, Rat(1));
    int sign = 1;
    for (int col = 0; col < N; col++) {
        int piv = -1;
        for (int i = col; i < N; i++)
            if (!M[size_t(i) * N + col].is_zero()) { piv = i; break; }
        if (piv < 0) return Poly(f.vars);  // zero resultant
        if (piv != col) {
            for (int j = 0; j < N; j++)
                std::swap(M[size_t(piv) * N + j], M[size_t(col) * N + j]);
            sign = -sign;
        }
        if (col == N - 1) break;
        for (int i = col + 1; i < N; i++) {
            for (int j = col + 1; j < N; j++) {
                Poly t = M[size_t(col) * N + col] * M[size_t(i) * N + j] -
                         M[size_t(i) * N + col] * M[size_t(col) * N + j];
                M[size_t(i) * N + j] = poly_exact_div(t, prev);
            }
            M[size_t(i) * N + col] = Poly(f.vars);
        }
        prev = M[size_t(col) * N + col];
    }
    Poly det = M[size_t(N - 1) * N + (N - 1)];
    return sign < 0 ? -det : det;
}

Poly poly_homogenize(const Poly& a, const std::string& newvar, int deg) {
    std::vector<std::string> vs = a.vars;
    vs.push_back(newvar);
    Poly r(vs);
    for (const auto& [e, c] : a.terms) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (d > deg) throw std::invalid_argument("poly_homogenize: degree too small");
        std::vector<int> e2 = e;
        e2.push_back(deg - d);
        r.terms.emplace(e2, c);
    }
    return r;
}

std::string poly_str(const Poly& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (auto it = a.terms.rbegin(); it != a.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!s.empty()) s += c.sign() > 0 ? " + " : " - ";
        else if (c.sign() < 0) s += "-";
        Rat ac = abs(c);
        bool allzero = std::accumulate(e.begin(), e.end(), 0) == 0;
        bool printed = false;
        if (allzero || !ac.is_one()) { s += ac.str(); printed = true; }
        for (size_t i = 0; i < e.size(); i++) {
            if (e[i] == 0) continue;
            if (printed) s += "*";
            s += a.vars[i];
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
            printed = true;
        }
    }
    return s;
}

} // namespace zariski
