#include "property_checks.hpp"

#include <doctest.h>

using namespace toricfano;

namespace {

void require_ok(const props::Result& r) {
    INFO(props::describe(r, 20));
    CHECK(r.cases > 0);
    CHECK(r.ok());
}

std::vector<SmoothFanoPolytope> all_fixtures() {
    std::vector<SmoothFanoPolytope> ps;
    for (int d = 2; d <= 4; ++d)
        for (auto& P : load_fixture_set(d)) ps.push_back(std::move(P));
    return ps;
}

}  // namespace

TEST_CASE("Smith form identities on random matrices") { require_ok(props::smith_identities(11, 400)); }

TEST_CASE("Smith form recovers a planted diagonal") {
    props::Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix D(3, 3);
        D.at(0, 0) = 2;
        D.at(1, 1) = 6;
        D.at(2, 2) = 30;
        IntMatrix U = IntMatrix::identity(3), V = IntMatrix::identity(3);
        for (int s = 0; s < 8; ++s) {
            auto i = static_cast<std::size_t>(rng.uniform(0, 2)), j = static_cast<std::size_t>(rng.uniform(0, 2));
            if (i == j) continue;
            IntMatrix E = IntMatrix::identity(3);
            E.at(i, j) = rng.uniform(-3, 3);
            if (s % 2) U = U * E; else V = E * V;
        }
        CHECK(smith_normal_form(U * D * V).S == D);
    }
}

TEST_CASE("normal form idempotence and multiplicativity") {
    std::vector<SmoothFanoPolytope> ps;
    auto d3 = load_fixture_set(3), d4 = load_fixture_set(4);
    for (int id : {6, 9, 12, 15}) ps.push_back(find_by_id(d3, id));
    for (int id : {24, 50, 141}) ps.push_back(find_by_id(d4, id));
    require_ok(props::normal_form_laws(ps, 3, 25));
}

TEST_CASE("mbn is additive on products of the four surfaces") {
    auto s = load_fixture_set(2);
    require_ok(props::mbn_additivity(s));
}

TEST_CASE("product degree binomial identity") {
    auto pool = load_fixture_set(2);
    for (auto& P : load_fixture_set(3)) pool.push_back(std::move(P));
    pool.push_back(fixtures::segment());
    require_ok(props::product_degrees(pool, 7, 15, 5));
}

TEST_CASE("every equivalence witness re-verifies") {
    for (int d = 3; d <= 4; ++d) {
        auto ps = load_fixture_set(d);
        require_ok(props::equivalence_witnesses(ps, classify(ps, Relation::SignEquiv)));
    }
}

TEST_CASE("every iso witness re-verifies") {
    auto ps = load_fixture_set(4);
    for (auto [a, b] : std::vector<std::pair<int, int>>{{70, 141}, {141, 70}}) {
        auto A = build_presentation(find_by_id(ps, a));
        auto B = build_presentation(find_by_id(ps, b));
        require_ok(props::iso_witnesses(A, B, find_ring_isos_bounded(A, B, {2})));
    }
    auto F = build_presentation(fixtures::hexagon());
    require_ok(props::iso_witnesses(F, F, find_ring_isos_bounded(F, F, {1})));
}

TEST_CASE("graded dimensions sum to the facet count") {
    auto ps = all_fixtures();
    for (int v : {1, 2}) ps.push_back(fixtures::family_Y(v, 3));
    for (int v = 1; v <= 4; ++v) ps.push_back(fixtures::family_Z(v, 3));
    for (int v = 1; v <= 8; ++v) ps.push_back(fixtures::family_W(v, 4));
    ps.push_back(fixtures::del_pezzo4());
    ps.push_back(fixtures::hexagon_power(2));
    require_ok(props::graded_dimension_sums(ps));
}

TEST_CASE("fingerprint keys survive unimodular moves") {
    auto ps = load_fixture_set(3);
    props::Rng rng(9);
    for (int trial = 0; trial < 6; ++trial) {
        const auto& P = ps[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(ps.size()) - 1))];
        IntMatrix U = IntMatrix::identity(3);
        U.at(0, 1) = rng.uniform(-2, 2);
        U.at(2, 0) = rng.uniform(-2, 2);
        std::vector<LatticeVector> moved;
        for (const auto& v : P.vertices()) moved.push_back(U * v);
        std::shuffle(moved.begin(), moved.end(), rng.engine());
        SmoothFanoPolytope Q(std::nullopt, moved, "moved");
        CHECK(fingerprint(P).key() == fingerprint(Q).key());
        auto w = unimodular_equivalent(P, Q);
        REQUIRE(w);
        CHECK(checks::witness_holds(P, Q, *w));
    }
}
