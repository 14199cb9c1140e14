#pragma once

#include "toricfano/polytope.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace toricfano {

struct EquivalenceWitness {
    std::vector<int> pi;  // vertex i of P1 goes to vertex pi[i] of P2 (0-based)
    IntMatrix U;
    std::vector<int> eps;  // +1 / -1 per vertex of P1
};

// Calls fn for each bijection mapping facets onto facets, in lexicographic order of images; fn returns false to stop.
void for_each_complex_isomorphism(const SmoothFanoPolytope& P1, const SmoothFanoPolytope& P2,
                                  const std::function<bool(const std::vector<int>&)>& fn);
std::vector<std::vector<int>> complex_isomorphisms(const SmoothFanoPolytope& P1, const SmoothFanoPolytope& P2,
                                                   std::size_t limit = SIZE_MAX);

std::optional<EquivalenceWitness> unimodular_equivalent(const SmoothFanoPolytope& P1, const SmoothFanoPolytope& P2);
std::optional<EquivalenceWitness> sign_equivalent(const SmoothFanoPolytope& P1, const SmoothFanoPolytope& P2);

// Independent re-check: pi is a complex isomorphism, |det U| = 1 and U v_i = eps_i v'_{pi(i)} for all i.
bool verify_witness(const SmoothFanoPolytope& P1, const SmoothFanoPolytope& P2, const EquivalenceWitness& w);
EquivalenceWitness inverse_witness(const EquivalenceWitness& w);

enum class Relation { SignEquiv, UnimodularEquiv, FingerprintEqual };
std::string to_string(Relation r);
Relation parse_relation(const std::string& s);

struct Merge {
    std::size_t a, b;  // indices into the input list
    std::optional<EquivalenceWitness> witness;
};

struct Partition {
    std::vector<std::vector<std::size_t>> classes;  // sorted members, classes ordered by first member
    std::vector<Merge> merges;
};

struct ClassifyOptions {
    // Pairs with different keys are never tested. Must be an invariant of the relation.
    std::function<std::string(std::size_t)> prefilter;
    // FingerprintEqual: the fingerprint key of each input.
    std::vector<std::string> fingerprint_keys;
};

Partition classify(const std::vector<SmoothFanoPolytope>& ps, Relation rel, const ClassifyOptions& opt = {});

// Classes of `coarse` whose members fall into more than one class of `fine`.
std::vector<std::vector<std::size_t>> anomalies(const Partition& coarse, const Partition& fine);

}  // namespace toricfano
