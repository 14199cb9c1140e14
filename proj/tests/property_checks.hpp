#pragma once

// Randomised and exhaustive property sweeps shared by the property suite and the acceptance run.
// Each returns the number of cases examined and a description of every failure.

#include "independent_checks.hpp"
#include "toricfano/fixtures.hpp"
#include "toricfano/invariants.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace props {

using namespace toricfano;

struct Result {
    long cases = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    void expect(bool cond, const std::string& what) {
        ++cases;
        if (!cond) failures.push_back(what);
    }
};

class Rng {
public:
    explicit Rng(unsigned seed) : g_(seed) {}
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
    std::mt19937& engine() { return g_; }

private:
    std::mt19937 g_;
};

inline IntMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long range) {
    IntMatrix M(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) M.at(i, j) = rng.uniform(-range, range);
    return M;
}

inline RatPoly random_poly(Rng& rng, int nvars, int max_degree) {
    RatPoly f;
    long terms = rng.uniform(1, 5);
    for (long t = 0; t < terms; ++t) {
        Monomial m;
        long deg = rng.uniform(0, max_degree);
        for (long k = 0; k < deg; ++k) m.e[static_cast<std::size_t>(rng.uniform(0, nvars - 1))]++;
        f += RatPoly::term(m, Rational(rng.uniform(-4, 4)));
    }
    return f;
}

// L M R = S, L and R unimodular, S diagonal with a divisibility chain; |det M| = prod S for square M.
inline Result smith_identities(unsigned seed, int trials) {
    Rng rng(seed);
    Result res;
    for (int t = 0; t < trials; ++t) {
        auto r = static_cast<std::size_t>(rng.uniform(1, 5));
        auto c = static_cast<std::size_t>(rng.uniform(1, 5));
        auto M = random_matrix(rng, r, c, t % 2 ? 3 : 40);
        auto sf = smith_normal_form(M);
        std::string tag = "smith " + M.to_string();
        res.expect(sf.L * M * sf.R == sf.S, tag + ": LMR != S");
        res.expect(is_unimodular(sf.L) && is_unimodular(sf.R), tag + ": transforms not unimodular");
        res.expect(sf.S.is_diagonal(), tag + ": not diagonal");
        std::size_t k = std::min(r, c);
        bool chain = true;
        for (std::size_t i = 0; i < k; ++i) {
            if (sf.S.at(i, i) < 0) chain = false;
            if (i + 1 < k) {
                if (sf.S.at(i, i) == 0 ? sf.S.at(i + 1, i + 1) != 0 : sf.S.at(i + 1, i + 1) % sf.S.at(i, i) != 0)
                    chain = false;
            }
        }
        res.expect(chain, tag + ": divisibility chain broken");
        if (r == c) {
            Integer prod = 1;
            for (std::size_t i = 0; i < k; ++i) prod *= sf.S.at(i, i);
            res.expect(prod == abs(determinant(M)), tag + ": product of invariants != |det|");
        }
    }
    return res;
}

// NF(NF f) = NF f, f - NF f in I, NF(fg) = NF(NF f NF g), NF additive, NF supported on standard monomials.
inline Result normal_form_laws(const std::vector<SmoothFanoPolytope>& ps, unsigned seed, int trials) {
    Rng rng(seed);
    Result res;
    for (const auto& P : ps) {
        auto pres = build_presentation(P);
        const auto& G = pres.gb_rational();
        int n = pres.num_generators();
        for (int t = 0; t < trials; ++t) {
            auto f = random_poly(rng, n, 3), g = random_poly(rng, n, 3);
            auto nf = normal_form(f, G), ng = normal_form(g, G);
            std::string tag = "NF on " + P.name();
            res.expect(normal_form(nf, G) == nf, tag + ": not idempotent");
            res.expect(normal_form(f - nf, G).is_zero(), tag + ": f - NF(f) outside the ideal");
            res.expect(normal_form(f * g, G) == normal_form(nf * ng, G), tag + ": not multiplicative");
            res.expect(normal_form(f + g, G) == nf + ng, tag + ": not additive");
            bool standard = true;
            for (const auto& term : nf.terms()) standard = standard && G.is_standard(term.first);
            res.expect(standard, tag + ": non-standard monomial in NF");
        }
    }
    return res;
}

inline int exact_mbn(const SmoothFanoPolytope& P, bool& exact) {
    auto pres = build_presentation(P);
    auto m = maximal_basis_number(pres, sve_integer_bounded(pres, 2));
    exact = m.exact();
    return m.lower;
}

// mbn(P + Q) = mbn(P) + mbn(Q) for every pair (with repetition) of the given surfaces.
inline Result mbn_additivity(const std::vector<SmoothFanoPolytope>& surfaces) {
    Result res;
    std::vector<int> single;
    for (const auto& P : surfaces) {
        bool exact = false;
        single.push_back(exact_mbn(P, exact));
        res.expect(exact, "mbn of " + P.name() + " not pinned down");
    }
    for (std::size_t i = 0; i < surfaces.size(); ++i)
        for (std::size_t j = i; j < surfaces.size(); ++j) {
            bool exact = false;
            int m = exact_mbn(direct_sum(surfaces[i], surfaces[j]), exact);
            std::ostringstream tag;
            tag << "mbn(" << surfaces[i].name() << " + " << surfaces[j].name() << ") = " << m << ", expected "
                << single[i] + single[j];
            res.expect(exact && m == single[i] + single[j], tag.str());
        }
    return res;
}

// deg(P + Q) = C(p+q, p) deg P deg Q, on random pairs with total dimension <= max_dim.
inline Result product_degrees(const std::vector<SmoothFanoPolytope>& pool, unsigned seed, int trials, int max_dim) {
    Rng rng(seed);
    Result res;
    for (int t = 0; t < trials; ++t) {
        const auto& P = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))];
        const auto& Q = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))];
        if (P.dim() + Q.dim() > max_dim) {
            --t;
            continue;
        }
        Integer expected = binomial(P.dim() + Q.dim(), P.dim()) * degree_anticanonical(P) * degree_anticanonical(Q);
        res.expect(degree_anticanonical(direct_sum(P, Q)) == expected,
                   "degree of " + P.name() + " + " + Q.name() + " != binomial product");
    }
    return res;
}

// Graded Q-dimensions of the cohomology add up to the number of facets.
inline Result graded_dimension_sums(const std::vector<SmoothFanoPolytope>& ps) {
    Result res;
    for (const auto& P : ps) {
        long sum = 0;
        for (int x : graded_dimensions(build_presentation(P))) sum += x;
        res.expect(sum == static_cast<long>(P.facets().size()), "graded dimensions of " + P.name());
    }
    return res;
}

inline Result equivalence_witnesses(const std::vector<SmoothFanoPolytope>& ps, const Partition& part) {
    Result res;
    for (const auto& m : part.merges) {
        std::string tag = ps[m.a].name() + " ~ " + ps[m.b].name();
        res.expect(m.witness.has_value(), tag + ": no witness");
        if (!m.witness) continue;
        res.expect(checks::witness_holds(ps[m.a], ps[m.b], *m.witness), tag + ": witness fails");
        res.expect(checks::witness_holds(ps[m.b], ps[m.a], inverse_witness(*m.witness)), tag + ": inverse fails");
    }
    return res;
}

inline Result iso_witnesses(const CohomologyPresentation& A, const CohomologyPresentation& B,
                            const std::vector<RingIsoWitness>& ws) {
    Result res;
    for (const auto& w : ws) {
        res.expect(checks::iso_holds(A, B, w.L), "iso witness fails: " + w.L.to_string());
        res.expect(w.c1_preserving == check_c1_preserving(w.L, A, B), "c1 flag inconsistent: " + w.L.to_string());
    }
    return res;
}

inline std::string describe(const Result& r, std::size_t max_lines = 5) {
    std::ostringstream os;
    os << r.cases << " cases, " << r.failures.size() << " failures";
    for (std::size_t i = 0; i < r.failures.size() && i < max_lines; ++i) os << "\n    " << r.failures[i];
    return os.str();
}

}  // namespace props
