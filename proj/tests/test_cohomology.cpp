#include "toricfano/cohomology.hpp"
#include "toricfano/fixtures.hpp"

#include <doctest.h>

using namespace toricfano;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

std::vector<RatPoly> canon(const std::vector<RatPoly>& gens, int n) {
    return canonical_generators(buchberger(gens, MonomialOrder::grlex_default(n)));
}

// Same ideal: each basis reduces the other's generators to zero.
bool same_ideal(const std::vector<RatPoly>& a, const std::vector<RatPoly>& b, int n) {
    auto ord = MonomialOrder::grlex_default(n);
    auto Ga = buchberger(a, ord), Gb = buchberger(b, ord);
    for (const auto& f : a)
        if (!ideal_member(f, Gb)) return false;
    for (const auto& f : b)
        if (!ideal_member(f, Ga)) return false;
    return true;
}

}  // namespace

TEST_CASE("worked Groebner basis with the printed generators") {
    auto printed = parse_polynomial_list("x^4, (x-y)z, (-2y+z)z, (-2x+y)y, x^3y", xyz);
    auto expected = parse_polynomial_list("x^4, (x-y)z, (-2y+z)z, (-2x+y)y, x^3y, x^2z", xyz);
    CHECK(canon(printed, 3) == canon(expected, 3));
    // x^2 z is needed: it is not a combination of the leading terms of the input.
    auto ord = MonomialOrder::grlex_default(3);
    auto G = buchberger(printed, ord);
    CHECK(G.generators.size() == 6);
}

TEST_CASE("presentation of the cube-like 3-fold in database order") {
    SmoothFanoPolytope P(12, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 1}, {0, 1, -1}, {0, -1, 0}});
    auto pres = build_presentation(P);
    REQUIRE(pres.num_generators() == 3);
    auto table = parse_polynomial_list("x^2, z(z-y), y(y-x)", xyz);
    CHECK(same_ideal(pres.full_ideal_gens(), table, 3));
    // The generator set is already a reduced basis.
    CHECK(canon(table, 3).size() == 3);
    CHECK(canon(pres.full_ideal_gens(), 3) == canon(table, 3));
}

TEST_CASE("vertex-derived presentation of ID 24 matches its table ideal") {
    auto ps = load_fixture_set(4);
    auto pres = build_presentation(find_by_id(ps, 24));
    auto table = parse_polynomial_list("z(x-y), y(y+z-3x), z(z-2x), x^4, x^3y", xyz);
    CHECK(same_ideal(pres.full_ideal_gens(), table, 3));
}

TEST_CASE("ID 12 fixture: generators, substitution, ideal") {
    auto ps = load_fixture_set(3);
    auto pres = build_presentation(find_by_id(ps, 12));
    CHECK(pres.names() == xyz);
    CHECK(pres.substitution().size() == 6);
    // Linear relations: sum of <v_i, e_j> mu_i = 0 for every coordinate.
    const auto& P = pres.polytope();
    for (int j = 0; j < P.dim(); ++j) {
        RatPoly sum;
        for (int i = 0; i < P.num_vertices(); ++i)
            sum += pres.substitution()[static_cast<std::size_t>(i)].scaled(Rational(P.vertex(i)[static_cast<std::size_t>(j)]));
        CHECK(sum.is_zero());
    }
    // Stanley-Reisner monomials map into the ideal.
    const auto& G = pres.gb_rational();
    for (const auto& s : P.minimal_nonfaces()) {
        RatPoly prod = RatPoly::constant(1);
        for (int i : s) prod = prod * pres.substitution()[static_cast<std::size_t>(i)];
        CHECK(ideal_member(prod, G));
    }
}

TEST_CASE("graded dimensions sum to the facet count") {
    for (int d = 2; d <= 4; ++d)
        for (const auto& P : load_fixture_set(d)) {
            CAPTURE(*P.id());
            auto dims = graded_dimensions(build_presentation(P));
            REQUIRE(dims.size() == static_cast<std::size_t>(d + 1));
            long sum = 0;
            for (int x : dims) sum += x;
            CHECK(sum == static_cast<long>(P.facets().size()));
            CHECK(dims.front() == 1);
            CHECK(dims.back() == 1);
            CHECK(dims[1] == P.num_vertices() - d);
            for (int k = 0; k <= d; ++k) CHECK(dims[static_cast<std::size_t>(k)] == dims[static_cast<std::size_t>(d - k)]);
        }
}

TEST_CASE("degrees: dual volume against c1^d in the ring") {
    for (int d = 2; d <= 3; ++d)
        for (const auto& P : load_fixture_set(d)) {
            CAPTURE(*P.id());
            CHECK(degree_anticanonical(P) == degree_via_ring(build_presentation(P)));
        }
}

TEST_CASE("degrees from the tables") {
    auto d3 = load_fixture_set(3);
    CHECK(degree_anticanonical(find_by_id(d3, 11)) == 52);
    CHECK(degree_anticanonical(find_by_id(d3, 18)) == 44);
    CHECK(degree_anticanonical(find_by_id(d3, 10)) == 44);
    CHECK(degree_anticanonical(find_by_id(d3, 13)) == 40);
    auto d4 = load_fixture_set(4);
    CHECK(degree_anticanonical(find_by_id(d4, 147)) == 625);
    CHECK(degree_anticanonical(find_by_id(d4, 70)) == 513);
    CHECK(degree_anticanonical(find_by_id(d4, 141)) == 513);
}

TEST_CASE("projective space") {
    for (int d = 1; d <= 4; ++d) {
        auto P = fixtures::simplex(d);
        auto pres = build_presentation(P);
        // H = Z[x]/(x^{d+1}), c1 = (d+1)x, degree (d+1)^d.
        Integer expect = 1;
        for (int i = 0; i < d; ++i) expect *= d + 1;
        CHECK(degree_anticanonical(P) == expect);
        CHECK(degree_via_ring(pres) == expect);
        CHECK(chern_c1(pres) == variable(0).scaled(Rational(d + 1)));
        auto c = chern_total(pres);
        for (int k = 0; k <= d; ++k)
            CHECK(c[static_cast<std::size_t>(k)] == variable(0).pow(k).scaled(Rational(binomial(d + 1, k))));
    }
}

TEST_CASE("Pontryagin classes of the projective plane") {
    auto pres = build_presentation(fixtures::simplex(2));
    auto p = pontryagin_total(pres);
    REQUIRE(p.size() == 2);
    CHECK(p[0] == RatPoly::constant(1));
    CHECK(p[1] == variable(0).pow(2).scaled(Rational(3)));  // (1+x^2)^3
}

TEST_CASE("product degree identity") {
    auto a = fixtures::hexagon(), b = fixtures::segment();
    CHECK(degree_of_product_check(a, b));
    CHECK(degree_anticanonical(direct_sum(a, b)) == binomial(3, 1) * 6 * 2);
}

TEST_CASE("ring from an explicit ideal") {
    auto R = CohomologyPresentation::from_ideal({"x", "y"}, parse_polynomial_list("x^2, y^2", {"x", "y"}), 2);
    CHECK(graded_dimensions(R) == std::vector<int>{1, 2, 1});
    CHECK_FALSE(R.has_polytope());
    auto S = R.with_names({"a", "b"});
    CHECK(S.display(variable(0)) == "a");
}
