#include "toricfano/lattice.hpp"

#include <doctest.h>

using namespace toricfano;

namespace {

// Cofactor expansion; slow but independent of the elimination code.
Integer det_cofactor(const IntMatrix& M) {
    std::size_t n = M.rows();
    if (n == 0) return 1;
    if (n == 1) return M.at(0, 0);
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != c) minor.at(r - 1, kk++) = M.at(r, k);
        Integer term = M.at(0, c) * det_cofactor(minor);
        total += (c % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

}  // namespace

TEST_CASE("smith form of a textbook matrix") {
    IntMatrix M{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    auto sf = smith_normal_form(M);
    CHECK(sf.S == (IntMatrix{{2, 0, 0}, {0, 6, 0}, {0, 0, 12}}));
    CHECK(sf.L * M * sf.R == sf.S);
    CHECK(is_unimodular(sf.L));
    CHECK(is_unimodular(sf.R));
}

TEST_CASE("smith form of rectangular and singular matrices") {
    IntMatrix A{{1, 2, 3}, {2, 4, 6}};
    auto sf = smith_normal_form(A);
    CHECK(sf.S == (IntMatrix{{1, 0, 0}, {0, 0, 0}}));
    CHECK(sf.L * A * sf.R == sf.S);

    IntMatrix Z(2, 3);
    CHECK(smith_normal_form(Z).S == Z);
}

TEST_CASE("determinant agrees with cofactor expansion") {
    IntMatrix M{{3, -1, 2, 0}, {1, 4, -2, 5}, {0, 2, 7, -3}, {6, -5, 1, 2}};
    CHECK(determinant(M) == det_cofactor(M));
    CHECK(determinant(IntMatrix::identity(5)) == 1);
    CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("unimodular inverse") {
    IntMatrix U{{2, 1, 0}, {1, 1, 0}, {0, 3, 1}};
    auto inv = inverse_unimodular(U);
    REQUIRE(inv);
    CHECK(U * *inv == IntMatrix::identity(3));
    CHECK(*inv * U == IntMatrix::identity(3));
    CHECK_FALSE(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}));
    CHECK_FALSE(inverse_unimodular(IntMatrix{{1, 2, 3}}));
}

TEST_CASE("basis extension and primitivity") {
    CHECK(extends_to_basis({{1, 0, 0}, {0, 1, 0}}));
    CHECK(extends_to_basis({{1, 1, 0}, {1, -1, 1}}));
    CHECK_FALSE(extends_to_basis({{1, 0, 0}, {1, 2, 0}}));  // index 2 sublattice
    CHECK_FALSE(extends_to_basis({{2, 0}}));
    CHECK(is_primitive({3, 5}));
    CHECK_FALSE(is_primitive({4, -6}));
    CHECK(gcd_of({4, -6, 10}) == 2);
}

TEST_CASE("unimodular map from a basis") {
    std::vector<LatticeVector> src{{1, 0}, {0, 1}};
    std::vector<LatticeVector> dst{{1, 1}, {0, 1}};
    auto U = solve_unimodular_from_basis(src, dst);
    REQUIRE(U);
    CHECK(*U * src[0] == dst[0]);
    CHECK(*U * src[1] == dst[1]);
    CHECK_FALSE(solve_unimodular_from_basis(src, {{2, 0}, {0, 1}}));
}

TEST_CASE("rational solve") {
    auto x = solve_rational(IntMatrix{{2, 1}, {1, 3}}, {Rational(1), Rational(2)});
    REQUIRE(x);
    CHECK((*x)[0] == Rational(1, 5));
    CHECK((*x)[1] == Rational(3, 5));
    CHECK_FALSE(solve_rational(IntMatrix{{1, 2}, {2, 4}}, {Rational(1), Rational(1)}));
}
