#pragma once

#include "toricfano/polytope.hpp"

#include <string>
#include <vector>

namespace toricfano {

// Directory holding fixtures_d{2,3,4}.txt; TORICFANO_DATA overrides the build-time default.
std::string data_dir();
std::vector<SmoothFanoPolytope> load_fixture_set(int dim);
const SmoothFanoPolytope& find_by_id(const std::vector<SmoothFanoPolytope>& ps, int id);
std::vector<int> ids_of(const std::vector<SmoothFanoPolytope>& ps);

namespace fixtures {

SmoothFanoPolytope segment();
SmoothFanoPolytope simplex(int d);
SmoothFanoPolytope hexagon();   // e1, e2, -e1+e2, -e1, -e2, e1-e2
SmoothFanoPolytope pentagon();  // e1, e2, -e1+e2, -e2, e1-e2
SmoothFanoPolytope hirzebruch0();
SmoothFanoPolytope hirzebruch1();
SmoothFanoPolytope del_pezzo4();

SmoothFanoPolytope direct_sum_all(const std::vector<SmoothFanoPolytope>& parts);
SmoothFanoPolytope hexagon_power(int k);

// Skew bipyramid over Q: apices e_1 and -e_1 + w where w lies in the span of Q.
SmoothFanoPolytope skew_bipyramid(const SmoothFanoPolytope& Q, const LatticeVector& w, const std::string& label);

// Named families of the Picard-number classification, d odd (Y, Z) or even (W).
SmoothFanoPolytope family_Y(int variant, int d);
SmoothFanoPolytope family_Z(int variant, int d);
SmoothFanoPolytope family_W(int variant, int d);

}  // namespace fixtures
}  // namespace toricfano
