#pragma once

#include "toricfano/cohomology.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toricfano {

using CoeffVector = std::vector<long>;

enum class Completeness { Exhaustive, BoundedSearch, HeuristicInfinite };
std::string to_string(Completeness c);

struct KveRing {
    enum class Kind { Integer, ModP } kind = Kind::Integer;
    std::uint32_t prime = 0;  // ModP only
    static KveRing integer() { return {}; }
    static KveRing mod(std::uint32_t p) { return {Kind::ModP, p}; }
    std::string label() const { return kind == Kind::Integer ? "Z" : "Z/" + std::to_string(prime); }
    bool operator==(const KveRing&) const = default;
};

struct KveReport {
    int k = 2;
    KveRing ring;
    // Integer: primitive, first nonzero entry positive. ModP: first nonzero entry 1, entries in [0,p).
    std::vector<CoeffVector> solutions;
    Completeness completeness = Completeness::Exhaustive;
    int bound = 0;       // box actually searched (Integer)
    int scan_bound = 0;  // stability box actually searched; equals bound when no scan ran
    // ModP: whether solutions plus zero form a subspace, and a reduced echelon basis of their span.
    bool is_subspace = false;
    std::vector<CoeffVector> span_basis;
    int span_dim = 0;

    bool infinite() const { return completeness == Completeness::HeuristicInfinite; }
    bool all_nonzero(int nvars) const;  // ModP: every nonzero vector is a solution
};

// NF(f^k) for f = sum a_i x_i with the a_i as parameters.
ParamPoly kve_normal_form(const CohomologyPresentation& pres, int k);
// Coefficients of kve_normal_form, each scaled to a primitive integer polynomial in a_1..a_n.
std::vector<RatPoly> kve_condition_polynomials(const CohomologyPresentation& pres, int k);

KveReport kve_mod_p(const CohomologyPresentation& pres, int k, std::uint32_t p);

struct SearchOptions {
    int bound = 5;
    bool stability_scan = true;  // rescan at 2*bound to flag infinitude
    // Cap on inner search nodes per scan; the box shrinks until the estimate fits.
    std::uint64_t node_budget = 60'000'000;
};
KveReport sve_integer_bounded(const CohomologyPresentation& pres, int k, const SearchOptions& opt = {});

// Does f^k vanish? Exact, over Q.
bool power_vanishes(const CohomologyPresentation& pres, const CoeffVector& a, int k);
bool power_vanishes_mod_p(const CohomologyPresentation& pres, const CoeffVector& a, int k, std::uint32_t p);

struct MbnBounds {
    int lower = 0;
    int upper = 0;
    bool exact() const { return lower == upper; }
};
MbnBounds maximal_basis_number(const CohomologyPresentation& pres, const KveReport& sve_integer);

// pres with element_i^power_i adjoined to the ideal.
CohomologyPresentation quotient_refine(const CohomologyPresentation& pres, const std::vector<RatPoly>& elements,
                                       const std::vector<int>& powers);

struct KveEntry {
    int k;
    KveRing ring;
    KveReport report;
};

struct FingerprintOptions {
    SearchOptions search;
    bool refine = true;
};

struct InvariantFingerprint {
    std::vector<long> face_numbers;
    std::vector<int> ideal_degrees;
    std::vector<KveEntry> kve_table;
    int mbn_lower = 0, mbn_upper = 0;
    // Sorted (name, value) summaries of quotient rings.
    std::vector<std::pair<std::string, std::string>> refinements;

    // Canonical comparison key; contains counts, dimensions and degrees only.
    std::string key() const;
    bool equivalent(const InvariantFingerprint& o) const { return key() == o.key(); }
};

InvariantFingerprint fingerprint(const SmoothFanoPolytope& P, const FingerprintOptions& opt = {});
InvariantFingerprint fingerprint(const CohomologyPresentation& pres, const FingerprintOptions& opt = {});

// Coordinate-free summary of a ring given by generators: graded dims, generator degrees, mod-p k-v.e. counts.
std::string ring_summary(const CohomologyPresentation& pres);

std::string format_linear(const CoeffVector& a, const std::vector<std::string>& names);
RatPoly linear_poly(const CoeffVector& a);

}  // namespace toricfano
