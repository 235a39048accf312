#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zariski/extfield.hpp"
#include "zariski/linalg.hpp"
#include "zariski/rng.hpp"

using namespace zariski;

TEST_CASE("rank basics") {
    Mat<Rat> id(3, 3);
    for (int i = 0; i < 3; i++) id.at(i, i) = Rat(1);
    CHECK(rank_exact(QQ, id) == 3);

    // Vandermonde at 1,2,3,4
    Mat<Rat> v(4, 4);
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) v.at(i, j) = pow(Rat(i + 1), j);
    CHECK(rank_exact(QQ, v) == 4);

    Mat<Rat> empty;
    CHECK(rank_exact(QQ, empty) == 0);
}

static Mat<Rat> monomial_eval_deg3_at_parabola() {
    // rows: monomials x^a y^b with a+b<=3 (grlex order), cols: points (i, i^2)
    Mat<Rat> m(10, 8);
    int row = 0;
    for (int d = 0; d <= 3; d++)
        for (int a = d; a >= 0; a--) {
            int b = d - a;
            for (int i = 1; i <= 8; i++)
                m.at(row, i - 1) = pow(Rat(i), a) * pow(Rat(i * i), b);
            row++;
        }
    return m;
}

TEST_CASE("10x8 cubic evaluation matrix at (i, i^2) has rank 7") {
    Mat<Rat> m = monomial_eval_deg3_at_parabola();
    CHECK(rank_exact(QQ, m) == 7);
    // independent oracle: kernel of transpose acting on monomial space is
    // (y - x^2) * {1, x, y}, dimension 3
    auto ker = kernel_basis(QQ, mat_transpose(m));
    CHECK(ker.size() == 3);
}

TEST_CASE("rank equals rank of transpose; mod-p cross-check") {
    Rng rng(99);
    for (int it = 0; it < 30; it++) {
        int r = 2 + static_cast<int>(rng.below(4));
        int c = 2 + static_cast<int>(rng.below(4));
        Mat<Rat> m(r, c);
        for (int i = 0; i < r; i++)
            for (int j = 0; j < c; j++) m.at(i, j) = Rat(rng.range(-9, 9));
        int rk = rank_exact(QQ, m);
        CHECK(rk == rank_exact(QQ, mat_transpose(m)));
        // probabilistic: rank mod three 30-bit primes equals rational rank
        for (uint64_t p : {740506043ull, 824143553ull, 549755813ull + 76ull}) {
            PrimeField K(p);
            Mat<uint64_t> mp(r, c);
            for (int i = 0; i < r; i++)
                for (int j = 0; j < c; j++)
                    mp.at(i, j) = K.reduce(m.at(i, j).num().get_si());
            CHECK(rank_exact(K, mp) == rk);
        }
    }
}

TEST_CASE("rank over an extension field") {
    // columns are (1, a), (1, a+1) over Q[a]/(a^2-2): independent
    ExtField K(upoly({Rat(-2), Rat(0), Rat(1)}));
    Mat<ExtElem> m(2, 2, K.zero());
    m.at(0, 0) = K.one();
    m.at(0, 1) = K.one();
    m.at(1, 0) = K.gen();
    m.at(1, 1) = K.add(K.gen(), K.one());
    CHECK(rank_exact(K, m) == 2);
    m.at(1, 1) = K.gen();
    CHECK(rank_exact(K, m) == 1);
}

TEST_CASE("det and inverse") {
    Mat<Rat> m(2, 2);
    m.at(0, 0) = Rat(2); m.at(0, 1) = Rat(-1);
    m.at(1, 0) = Rat(-1); m.at(1, 1) = Rat(2);
    CHECK(mat_det(QQ, m) == Rat(3));
    Mat<Rat> inv = mat_inverse(QQ, m);
    CHECK(inv.at(0, 0) == Rat(2, 3));
    CHECK(inv.at(0, 1) == Rat(1, 3));
}
