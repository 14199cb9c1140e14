#include "independent_checks.hpp"
#include "toricfano/fixtures.hpp"
#include "toricfano/ring_iso.hpp"

#include <doctest.h>

using namespace toricfano;


TEST_CASE("70 and 141: two bounded isomorphisms, neither preserves c1") {
    auto ps = load_fixture_set(4);
    auto A = build_presentation(find_by_id(ps, 70));
    auto B = build_presentation(find_by_id(ps, 141));
    CHECK(degree_gate(find_by_id(ps, 70), find_by_id(ps, 141)));
    auto isos = find_ring_isos_bounded(A, B, {2});
    REQUIRE(isos.size() == 2);
    for (const auto& w : isos) {
        CHECK(abs(determinant(w.L)) == 1);
        CHECK(checks::maps_ideal(A, B, w.L));
        auto inv = inverse_unimodular(w.L);
        REQUIRE(inv);
        CHECK(checks::maps_ideal(B, A, *inv));
        CHECK_FALSE(w.c1_preserving);
        CHECK_FALSE(check_c1_preserving(w.L, A, B));
    }
}

TEST_CASE("50 to 57: explicit map is a ring isomorphism") {
    auto ps = load_fixture_set(4);
    auto A = build_presentation(find_by_id(ps, 50));
    auto B = build_presentation(find_by_id(ps, 57));
    IntMatrix L{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, -1}, {2, 1, 1, 0}};
    CHECK(is_ring_isomorphism(A, B, L));
    CHECK(checks::maps_ideal(A, B, L));
    CHECK_FALSE(check_c1_preserving(L, A, B));
    CHECK(check_pontryagin_preserving(L, A, B));
    CHECK_FALSE(degree_gate(find_by_id(ps, 50), find_by_id(ps, 57)));
}

TEST_CASE("non-isomorphisms are rejected") {
    auto ps = load_fixture_set(4);
    auto A = build_presentation(find_by_id(ps, 50));
    auto B = build_presentation(find_by_id(ps, 57));
    CHECK_FALSE(is_ring_isomorphism(A, B, IntMatrix::identity(4)));
    CHECK_FALSE(is_ring_isomorphism(A, B, IntMatrix{{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK_THROWS_AS(check_c1_preserving(IntMatrix::identity(4), A, B), PreconditionError);
}

TEST_CASE("automorphisms of P1 x P1") {
    auto F = build_presentation(fixtures::hirzebruch0());
    auto isos = find_ring_isos_bounded(F, F, {1});
    // x -> +-x or +-y, y correspondingly: 8 signed permutations.
    CHECK(isos.size() == 8);
    int c1 = 0;
    for (const auto& w : isos) c1 += w.c1_preserving;
    CHECK(c1 == 2);  // identity and the swap
}

TEST_CASE("Hirzebruch surfaces are not ring isomorphic") {
    auto F0 = build_presentation(fixtures::hirzebruch0());
    auto F1 = build_presentation(fixtures::hirzebruch1());
    CHECK(find_ring_isos_bounded(F0, F1, {3}).empty());
}

TEST_CASE("linear map application") {
    IntMatrix L{{1, 1}, {0, 1}};  // x -> x, y -> x + y
    auto f = parse_polynomial("xy", {"x", "y"});
    CHECK(apply_linear_map(f, L) == parse_polynomial("x^2 + xy", {"x", "y"}));
}
