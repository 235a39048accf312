#ifndef ZARISKI_POLY_HPP
#define ZARISKI_POLY_HPP

#include <map>
#include <optional>
#include <numeric>
#include <string>
#include <vector>

#include "dense_poly.hpp"

namespace zariski {

// Graded lexicographic order on exponent vectors of equal length.
struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse multivariate polynomial over Q with a declared, ordered variable
// list (one to three variables in practice). No zero coefficients stored.
// Term order: graded lex with the declared variable order; it is the basis
// of every deterministic pivot downstream.
struct Poly {
    std::vector<std::string> vars;
    std::map<std::vector<int>, Rat, GrlexLess> terms;

    Poly() = default;
    explicit Poly(std::vector<std::string> vs) : vars(std::move(vs)) {}

    bool is_zero() const { return terms.empty(); }
    int nvars() const { return static_cast<int>(vars.size()); }

    // total degree; -1 for the zero polynomial
    int total_degree() const;
    int degree_in(int var) const;
    int var_index(const std::string& name) const;  // -1 if absent

    void add_term(const std::vector<int>& exp, const Rat& c);

    static Poly constant(std::vector<std::string> vars, const Rat& c);
    static Poly variable(std::vector<std::string> vars, int idx);
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Rat& s, const Poly& a);
bool operator==(const Poly& a, const Poly& b);
inline bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

Poly poly_pow(const Poly& a, int e);

// exact division; throws std::domain_error when b does not divide a
Poly poly_exact_div(const Poly& a, const Poly& b);

Poly poly_derivative(const Poly& a, int var);

// substitute each variable by a polynomial over target variable list
Poly poly_subst(const Poly& a, const std::vector<std::string>& target_vars,
                const std::vector<Poly>& images);

// evaluate some variables at rationals, keeping the rest
Poly poly_eval_partial(const Poly& a, const std::vector<std::optional<Rat>>& vals);

Rat poly_eval(const Poly& a, const std::vector<Rat>& point);

// view a polynomial that involves only variable `var` as univariate
UPoly poly_to_upoly(const Poly& a, int var);
Poly upoly_to_poly(const UPoly& f, std::vector<std::string> vars, int var);

// Res_var(f, g): Sylvester determinant with the f-block first, computed by
// fraction-free elimination over the remaining variables.
Poly poly_resultant(const Poly& f, const Poly& g, const std::string& var);

// homogenize an affine polynomial (in the first nvars-1... no: explicit):
// given a polynomial in vars and a new variable name, homogenize to the
// given total degree
Poly poly_homogenize(const Poly& a, const std::string& newvar, int deg);

std::string poly_str(const Poly& a);

} // namespace zariski

#endif
