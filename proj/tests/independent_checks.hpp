#pragma once

// Witness checks written against the definitions only, kept apart from the library's own verifiers.

#include "toricfano/equivalence.hpp"
#include "toricfano/ring_iso.hpp"

#include <algorithm>
#include <set>

namespace checks {

using namespace toricfano;

// Facet-preserving bijection, |det U| = 1, U v_i = eps_i w_pi(i).
inline bool witness_holds(const SmoothFanoPolytope& A, const SmoothFanoPolytope& B, const EquivalenceWitness& w) {
    if (A.num_vertices() != B.num_vertices() || w.pi.size() != static_cast<std::size_t>(A.num_vertices()) ||
        w.eps.size() != w.pi.size())
        return false;
    std::set<int> image(w.pi.begin(), w.pi.end());
    if (image.size() != w.pi.size() || *image.begin() < 0 || *image.rbegin() >= B.num_vertices()) return false;
    std::set<IndexSet> fb(B.facets().begin(), B.facets().end());
    if (fb.size() != A.facets().size()) return false;
    for (auto f : A.facets()) {
        for (auto& i : f) i = w.pi[static_cast<std::size_t>(i)];
        std::sort(f.begin(), f.end());
        if (!fb.count(f)) return false;
    }
    if (abs(determinant(w.U)) != 1) return false;
    for (int i = 0; i < A.num_vertices(); ++i) {
        auto e = w.eps[static_cast<std::size_t>(i)];
        if (e != 1 && e != -1) return false;
        auto rhs = B.vertex(w.pi[static_cast<std::size_t>(i)]);
        for (auto& x : rhs) x *= e;
        if (w.U * A.vertex(i) != rhs) return false;
    }
    return true;
}

// Every ideal generator of A lands in the ideal of B under L.
inline bool maps_ideal(const CohomologyPresentation& A, const CohomologyPresentation& B, const IntMatrix& L) {
    std::vector<RatPoly> imgs;
    for (std::size_t c = 0; c < L.cols(); ++c) {
        RatPoly f;
        for (std::size_t r = 0; r < L.rows(); ++r)
            f += variable(static_cast<int>(r)).scaled(Rational(L.at(r, c)));
        imgs.push_back(f);
    }
    for (const auto& g : A.full_ideal_gens())
        if (!ideal_member(substitute(g, imgs), B.gb_rational())) return false;
    return true;
}

// Ring isomorphism from first principles: unimodular, ideal into ideal both ways.
inline bool iso_holds(const CohomologyPresentation& A, const CohomologyPresentation& B, const IntMatrix& L) {
    auto inv = inverse_unimodular(L);
    return inv && maps_ideal(A, B, L) && maps_ideal(B, A, *inv);
}

}  // namespace checks
