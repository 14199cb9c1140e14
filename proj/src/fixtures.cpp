#include "toricfano/fixtures.hpp"

#include <algorithm>
#include <cstdlib>

namespace toricfano {

std::string data_dir() {
    if (const char* env = std::getenv("TORICFANO_DATA")) return env;
#ifdef TORICFANO_DATA_DIR
    return TORICFANO_DATA_DIR;
#else
    return "data";
#endif
}

std::vector<SmoothFanoPolytope> load_fixture_set(int dim) {
    return load_polytopes(data_dir() + "/fixtures_d" + std::to_string(dim) + ".txt");
}

const SmoothFanoPolytope& find_by_id(const std::vector<SmoothFanoPolytope>& ps, int id) {
    auto it = std::find_if(ps.begin(), ps.end(), [&](const auto& p) { return p.id() == id; });
    if (it == ps.end()) throw std::out_of_range("no polytope with id " + std::to_string(id));
    return *it;
}

std::vector<int> ids_of(const std::vector<SmoothFanoPolytope>& ps) {
    std::vector<int> out;
    for (const auto& p : ps) out.push_back(p.id().value_or(0));
    return out;
}

namespace fixtures {

namespace {

LatticeVector unit(int d, int i, long s = 1) {
    LatticeVector v(static_cast<std::size_t>(d), 0);
    v[static_cast<std::size_t>(i)] = s;
    return v;
}

LatticeVector lv(std::initializer_list<long> xs) {
    LatticeVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

LatticeVector plus(LatticeVector a, const LatticeVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

}  // namespace

SmoothFanoPolytope segment() { return SmoothFanoPolytope(std::nullopt, {lv({1}), lv({-1})}, "segment"); }

SmoothFanoPolytope simplex(int d) {
    std::vector<LatticeVector> vs;
    for (int i = 0; i < d; ++i) vs.push_back(unit(d, i));
    vs.push_back(LatticeVector(static_cast<std::size_t>(d), -1));
    return SmoothFanoPolytope(std::nullopt, std::move(vs), "simplex" + std::to_string(d));
}

SmoothFanoPolytope hexagon() {
    return SmoothFanoPolytope(std::nullopt, {lv({1, 0}), lv({0, 1}), lv({-1, 1}), lv({-1, 0}), lv({0, -1}), lv({1, -1})},
                              "P6");
}

SmoothFanoPolytope pentagon() {
    return SmoothFanoPolytope(std::nullopt, {lv({1, 0}), lv({0, 1}), lv({-1, 1}), lv({0, -1}), lv({1, -1})}, "P5");
}

SmoothFanoPolytope hirzebruch0() {
    return SmoothFanoPolytope(4, {lv({1, 0}), lv({0, 1}), lv({-1, 0}), lv({0, -1})}, "F0");
}

SmoothFanoPolytope hirzebruch1() {
    return SmoothFanoPolytope(3, {lv({1, 0}), lv({0, 1}), lv({1, -1}), lv({-1, 0})}, "F1");
}

SmoothFanoPolytope del_pezzo4() {
    std::vector<LatticeVector> vs;
    for (int i = 0; i < 4; ++i) vs.push_back(unit(4, i));
    for (int i = 0; i < 4; ++i) vs.push_back(unit(4, i, -1));
    vs.push_back(lv({1, 1, 1, 1}));
    vs.push_back(lv({-1, -1, -1, -1}));
    return SmoothFanoPolytope(63, std::move(vs), "DP4");
}

SmoothFanoPolytope direct_sum_all(const std::vector<SmoothFanoPolytope>& parts) {
    if (parts.empty()) throw DimensionError("empty direct sum");
    SmoothFanoPolytope acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parts[i]);
    return acc;
}

SmoothFanoPolytope hexagon_power(int k) {
    return direct_sum_all(std::vector<SmoothFanoPolytope>(static_cast<std::size_t>(k), hexagon()));
}

SmoothFanoPolytope skew_bipyramid(const SmoothFanoPolytope& Q, const LatticeVector& w, const std::string& label) {
    const int d = Q.dim() + 1;
    std::vector<LatticeVector> vs;
    for (const auto& v : Q.vertices()) {
        LatticeVector x(1, 0);
        x.insert(x.end(), v.begin(), v.end());
        vs.push_back(std::move(x));
    }
    vs.push_back(unit(d, 0));
    LatticeVector apex = unit(d, 0, -1);
    for (std::size_t i = 0; i < w.size(); ++i) apex[i + 1] += w[i];
    vs.push_back(std::move(apex));
    return SmoothFanoPolytope(std::nullopt, std::move(vs), label);
}

SmoothFanoPolytope family_Y(int variant, int d) {
    if (d < 3 || d % 2 == 0) throw DimensionError("Y family needs odd d >= 3");
    auto base = hexagon_power((d - 1) / 2);
    LatticeVector w(static_cast<std::size_t>(d - 1), 0);
    if (variant == 2) w[0] = 1;
    else if (variant != 1) throw DimensionError("Y variant must be 1 or 2");
    return skew_bipyramid(base, w, "Y" + std::to_string(variant) + "^" + std::to_string(d));
}

SmoothFanoPolytope family_Z(int variant, int d) {
    if (d < 3 || d % 2 == 0) throw DimensionError("Z family needs odd d >= 3");
    std::vector<SmoothFanoPolytope> parts;
    if (variant == 5) {
        if (d < 5) throw DimensionError("Z5 needs d >= 5");
        parts.push_back(family_Y(2, 3));
        parts.push_back(pentagon());
        for (int k = 0; k < (d - 5) / 2; ++k) parts.push_back(hexagon());
    } else {
        LatticeVector w = lv({0, 0});
        switch (variant) {
            case 1: break;
            case 2: w = lv({1, 0}); break;
            case 3: w = lv({0, 1}); break;
            case 4: w = lv({0, -1}); break;
            default: throw DimensionError("Z variant must be in 1..5");
        }
        parts.push_back(skew_bipyramid(pentagon(), w, "Z" + std::to_string(variant)));
        for (int k = 0; k < (d - 3) / 2; ++k) parts.push_back(hexagon());
    }
    auto P = direct_sum_all(parts);
    return SmoothFanoPolytope(std::nullopt, P.vertices(), "Z" + std::to_string(variant) + "^" + std::to_string(d));
}

SmoothFanoPolytope family_W(int variant, int d) {
    if (d < 4 || d % 2 == 1) throw DimensionError("W family needs even d >= 4");
    if (variant < 1 || variant > 9) throw DimensionError("W variant must be in 1..9");
    if (variant == 9 && d < 6) throw DimensionError("W9 needs d >= 6");
    std::vector<LatticeVector> vs;
    // hexagons on coordinates (3,4), (5,6), ...
    auto hex = hexagon();
    for (int k = 0; 2 + 2 * k < d; ++k)
        for (const auto& h : hex.vertices()) {
            LatticeVector v(static_cast<std::size_t>(d), 0);
            v[static_cast<std::size_t>(2 + 2 * k)] = h[0];
            v[static_cast<std::size_t>(3 + 2 * k)] = h[1];
            vs.push_back(std::move(v));
        }
    const LatticeVector zero(static_cast<std::size_t>(d), 0);
    LatticeVector star = zero, ostar = zero;
    auto e = [&](int i, long s = 1) { return unit(d, i - 1, s); };
    switch (variant) {
        case 1: break;
        case 2: star = e(2); break;
        case 3: star = e(2); ostar = e(3); break;
        case 4: star = e(3); break;
        case 5: star = e(3); ostar = e(3); break;
        case 6: star = e(3); ostar = e(4); break;
        case 7: star = e(3); ostar = e(3, -1); break;
        case 8: star = e(3); ostar = e(4, -1); break;
        case 9: star = e(3); ostar = e(5); break;
    }
    vs.push_back(e(1));
    vs.push_back(plus(e(1, -1), star));
    vs.push_back(e(2));
    vs.push_back(plus(e(2, -1), ostar));
    return SmoothFanoPolytope(std::nullopt, std::move(vs), "W" + std::to_string(variant) + "^" + std::to_string(d));
}

}  // namespace fixtures
}  // namespace toricfano
