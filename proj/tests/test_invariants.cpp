#include "golden_tables.hpp"
#include "toricfano/fixtures.hpp"
#include "toricfano/invariants.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace toricfano;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};
const std::vector<std::string> abc{"a", "b", "c"};

ParamPoly generic_square(int n) {
    ParamPoly f;
    for (int i = 0; i < n; ++i) f += ParamPoly::term(Monomial::variable(i), variable(i));
    return f * f;
}

// All primitive vectors of [-B,B]^n with first nonzero entry positive.
std::vector<CoeffVector> box_vectors(int n, int B) {
    std::vector<CoeffVector> out;
    CoeffVector a(static_cast<std::size_t>(n), -B);
    while (true) {
        auto first = std::find_if(a.begin(), a.end(), [](long v) { return v != 0; });
        if (first != a.end() && *first > 0) {
            long g = 0;
            for (long v : a) g = std::gcd(g, v);
            if (g == 1) out.push_back(a);
        }
        std::size_t i = 0;
        while (i < a.size() && a[i] == B) a[i++] = -B;
        if (i == a.size()) break;
        ++a[i];
    }
    return out;
}

// Straight normal form of the k-th power, no search machinery involved.
bool vanishes_directly(const CohomologyPresentation& pres, const CoeffVector& a, int k) {
    return normal_form(linear_poly(a).pow(k), pres.gb_rational()).is_zero();
}

std::set<CoeffVector> as_set(const std::vector<CoeffVector>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("parametric square in the database-order 3-fold") {
    auto ord = MonomialOrder::grlex_default(3);
    auto G = buchberger(parse_polynomial_list("x^2, z(z-y), y(y-x)", xyz), ord);
    auto nf = normal_form(generic_square(3), G);
    // (2a+b)b xy + 2ac xz + (2b+c)c yz
    auto xy = Monomial::variable(0) * Monomial::variable(1);
    auto xz = Monomial::variable(0) * Monomial::variable(2);
    auto yz = Monomial::variable(1) * Monomial::variable(2);
    ParamPoly expected = ParamPoly::term(xy, parse_polynomial("(2a+b)b", abc)) +
                         ParamPoly::term(xz, parse_polynomial("2ac", abc)) +
                         ParamPoly::term(yz, parse_polynomial("(2b+c)c", abc));
    CHECK(nf == expected);

    SmoothFanoPolytope P(12, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 1}, {0, 1, -1}, {0, -1, 0}});
    CHECK(kve_normal_form(build_presentation(P), 2) == expected);
}

TEST_CASE("parametric square with the printed 4-fold generators") {
    auto ord = MonomialOrder::grlex_default(3);
    auto G = buchberger(parse_polynomial_list("x^4, (x-y)z, (-2y+z)z, (-2x+y)y, x^3y", xyz), ord);
    auto nf = normal_form(generic_square(3), G);
    auto x2 = Monomial::variable(0, 2);
    auto xy = Monomial::variable(0) * Monomial::variable(1);
    auto xz = Monomial::variable(0) * Monomial::variable(2);
    ParamPoly expected = ParamPoly::term(x2, parse_polynomial("a^2", abc)) +
                         ParamPoly::term(xy, parse_polynomial("2b(a+b)", abc)) +
                         ParamPoly::term(xz, parse_polynomial("2c(a+b+c)", abc));
    CHECK(nf == expected);
}

TEST_CASE("parametric normal form agrees with pointwise evaluation") {
    auto ps = load_fixture_set(3);
    for (int id : {6, 12, 16, 21}) {
        auto pres = build_presentation(find_by_id(ps, id));
        int n = pres.num_generators();
        auto conds = kve_condition_polynomials(pres, 2);
        for (const auto& a : box_vectors(n, 2)) {
            bool all_zero = true;
            for (const auto& c : conds) {
                std::vector<RatPoly> pt;
                for (long v : a) pt.push_back(RatPoly::constant(Rational(v)));
                if (!substitute(c, pt).is_zero()) all_zero = false;
            }
            CHECK(all_zero == vanishes_directly(pres, a, 2));
        }
    }
}

TEST_CASE("integer s.v.e. search agrees with brute force inside the box") {
    for (int d = 2; d <= 3; ++d)
        for (const auto& P : load_fixture_set(d)) {
            auto pres = build_presentation(P);
            int n = pres.num_generators();
            SearchOptions opt;
            opt.bound = 2;
            opt.stability_scan = false;
            for (int k = 2; k <= 3; ++k) {
                CAPTURE(*P.id());
                CAPTURE(k);
                auto rep = sve_integer_bounded(pres, k, opt);
                std::set<CoeffVector> brute;
                for (const auto& a : box_vectors(n, 2))
                    if (vanishes_directly(pres, a, k)) brute.insert(a);
                CHECK(as_set(rep.solutions) == brute);
                for (const auto& a : rep.solutions) CHECK(power_vanishes(pres, a, k));
            }
        }
}

TEST_CASE("mod p k-v.e. agrees with brute force") {
    for (const auto& P : load_fixture_set(3)) {
        auto pres = build_presentation(P);
        int n = pres.num_generators();
        for (std::uint32_t p : {2u, 3u}) {
            for (int k = 2; k <= 3; ++k) {
                CAPTURE(*P.id());
                auto rep = kve_mod_p(pres, k, p);
                std::set<CoeffVector> brute;
                CoeffVector a(static_cast<std::size_t>(n), 0);
                while (true) {
                    std::size_t i = 0;
                    while (i < a.size() && a[i] == static_cast<long>(p) - 1) a[i++] = 0;
                    if (i == a.size()) break;
                    ++a[i];
                    auto first = std::find_if(a.begin(), a.end(), [](long v) { return v != 0; });
                    if (*first != 1) continue;
                    std::vector<ModPoly> gens;
                    auto f = to_mod_p(linear_poly(a).pow(k), p);
                    if (normal_form(f, pres.gb_mod(p)).is_zero()) brute.insert(a);
                }
                CHECK(as_set(rep.solutions) == brute);
            }
        }
    }
}

TEST_CASE("Hirzebruch surfaces: same s.v.e. count, different mbn") {
    auto check = [](const SmoothFanoPolytope& P, int mbn) {
        auto pres = build_presentation(P);
        auto rep = sve_integer_bounded(pres, 2);
        CHECK(rep.solutions.size() == 2);
        CHECK(rep.completeness != Completeness::HeuristicInfinite);
        auto m = maximal_basis_number(pres, rep);
        CHECK(m.lower == mbn);
        CHECK(m.upper == mbn);
    };
    check(fixtures::hirzebruch0(), 2);
    check(fixtures::hirzebruch1(), 1);
}

TEST_CASE("hexagon and pentagon mbn") {
    auto hex = build_presentation(fixtures::hexagon());
    auto mh = maximal_basis_number(hex, sve_integer_bounded(hex, 2));
    CHECK(mh.lower == 3);
    CHECK(mh.exact());
    auto pen = build_presentation(fixtures::pentagon());
    auto mp = maximal_basis_number(pen, sve_integer_bounded(pen, 2));
    CHECK(mp.lower == 2);
    CHECK(mp.exact());
}

TEST_CASE("an indefinite surface form has infinitely many s.v.e.") {
    // On the pentagon surface the square is a rank 3 form of signature (1,2) with a rational
    // isotropic vector, so the isotropic cone carries infinitely many primitive points.
    auto pen = build_presentation(fixtures::pentagon());
    auto rep = sve_integer_bounded(pen, 2);
    CHECK(rep.completeness == Completeness::HeuristicInfinite);
    CHECK(rep.scan_bound > rep.bound);
    for (const auto& a : rep.solutions) CHECK(vanishes_directly(pen, a, 2));
}

TEST_CASE("mod p report bookkeeping") {
    auto pres = build_presentation(fixtures::hirzebruch0());
    auto rep = kve_mod_p(pres, 2, 2);
    // x, y and x + y square to zero mod 2 in Z[x,y]/(x^2,y^2).
    CHECK(rep.solutions.size() == 3);
    CHECK(rep.is_subspace);
    CHECK(rep.span_dim == 2);
    CHECK(rep.all_nonzero(2));
    auto rep3 = kve_mod_p(pres, 2, 3);
    CHECK(rep3.solutions.size() == 2);
    CHECK_FALSE(rep3.is_subspace);
}

TEST_CASE("d=3 invariant tables") {
    auto ps = load_fixture_set(3);
    auto cells = golden::check_invariant_tables(std::string(TORICFANO_GOLDEN_DIR) + "/invariant_tables.txt", ps, 5,
                                               [](const std::string& t) { return t.rfind("d3", 0) == 0; });
    REQUIRE(cells.size() > 30);
    for (const auto& c : cells) {
        CAPTURE(c.table);
        CAPTURE(c.id);
        CAPTURE(c.column);
        CAPTURE(c.expected);
        CAPTURE(c.actual);
        CHECK(c.passed);
    }
}

TEST_CASE("cell reading") {
    auto items = golden::read_mod_p_cell("x+z,(y,u)", {"x", "y", "z", "u"}, 2);
    // x+z plus the three nonzero elements of span(y,u).
    CHECK(items.size() == 4);
    auto ints = golden::read_integer_cell("x, x-2z", xyz);
    CHECK(as_set(ints) == std::set<CoeffVector>{{1, 0, 0}, {1, 0, -2}});
    CHECK(golden::read_integer_cell("empty", xyz).empty());
}

TEST_CASE("fingerprint is stable under renaming and separates the Hirzebruch surfaces") {
    auto a = fingerprint(fixtures::hirzebruch0());
    auto b = fingerprint(fixtures::hirzebruch1());
    CHECK_FALSE(a.equivalent(b));
    auto pres = build_presentation(fixtures::hirzebruch1());
    CHECK(fingerprint(pres.with_names({"p", "q"})).key() == b.key());
}
