#pragma once

#include "toricfano/cohomology.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace toricfano {

// Column i of L holds the image of generator i of the source in the target generators.
struct RingIsoWitness {
    IntMatrix L;
    bool c1_preserving = false;
    bool pontryagin_preserving = false;
};

std::vector<RatPoly> generator_images(const IntMatrix& L);
RatPoly apply_linear_map(const RatPoly& f, const IntMatrix& L);

// |det L| = 1 and L carries the ideal of A into the ideal of B, and L^-1 carries B's ideal back.
bool is_ring_isomorphism(const CohomologyPresentation& A, const CohomologyPresentation& B, const IntMatrix& L);

struct IsoSearchOptions {
    int bound = 2;
    std::size_t limit = SIZE_MAX;  // stop after this many hits
};

// Every L with entries in [-bound, bound] inducing a graded ring isomorphism A -> B, sorted row-major.
// The c1 / Pontryagin flags are only computed when both rings come from polytopes.
std::vector<RingIsoWitness> find_ring_isos_bounded(const CohomologyPresentation& A, const CohomologyPresentation& B,
                                                   const IsoSearchOptions& opt = {});

// L(c1(A)) = c1(B); with relaxed, L(c1(A)) = -c1(B) is accepted too. Throws PreconditionError on an invalid map.
bool check_c1_preserving(const IntMatrix& L, const CohomologyPresentation& A, const CohomologyPresentation& B,
                         bool relaxed = false);
// NF(L(p_k(A))) = NF(p_k(B)) for all k. Throws PreconditionError on an invalid map.
bool check_pontryagin_preserving(const IntMatrix& L, const CohomologyPresentation& A, const CohomologyPresentation& B);

bool degree_gate(const SmoothFanoPolytope& P1, const SmoothFanoPolytope& P2);

}  // namespace toricfano
