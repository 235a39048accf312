#ifndef ZARISKI_FACTOR_HPP
#define ZARISKI_FACTOR_HPP

#include <utility>
#include <vector>

#include "dense_poly.hpp"

namespace zariski {

struct Factorization {
    Rat lc;                                  // leading coefficient of the input
    std::vector<std::pair<UPoly, int>> factors;  // monic irreducible, multiplicity
};

// Factor a nonzero univariate rational polynomial into monic irreducible
// factors over Q. Squarefree (Yun), then Zassenhaus per squarefree part:
// factor mod a good odd prime, Hensel lift past the Mignotte bound,
// recombine subsets.
Factorization factor_univariate(const UPoly& f);

// product of lc and factors^mult; used by round-trip tests
UPoly factorization_expand(const Factorization& fa);

bool upoly_is_irreducible(const UPoly& f);

// squarefree part (product of distinct irreducible factors)
UPoly upoly_squarefree_part(const UPoly& f);

// monic gcd over Q via a primitive pseudo-remainder sequence; avoids the
// coefficient blowup of plain rational Euclid
UPoly upoly_gcd_q(const UPoly& a, const UPoly& b);

} // namespace zariski

#endif
