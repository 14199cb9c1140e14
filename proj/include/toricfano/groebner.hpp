#pragma once

#include "toricfano/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricfano {

// Reduced Groebner basis over a field K (Rational or ModP).
template <class K>
struct GroebnerBasis {
    std::vector<Polynomial<K>> generators;  // monic, ascending by leading monomial
    std::vector<Monomial> leads;
    MonomialOrder order;

    // Index of a generator whose lead divides m.
    std::optional<std::size_t> divisor_of(const Monomial& m) const {
        for (std::size_t i = 0; i < leads.size(); ++i)
            if (leads[i].divides(m)) return i;
        return std::nullopt;
    }
    bool is_standard(const Monomial& m) const { return !divisor_of(m); }
};

namespace detail {

template <class K>
K one_of(const Polynomial<K>& sample);

template <>
inline Rational one_of(const RatPoly&) {
    return 1;
}
template <>
inline ModP one_of(const ModPoly& sample) {
    return ModP(1, sample.terms().front().second.p);
}

template <class K>
Polynomial<K> make_monic(const Polynomial<K>& f, const MonomialOrder& ord) {
    if (f.is_zero()) return f;
    return f.scaled(inverse(f.leading_term(ord).second));
}

// c * x^shift * g, with g over the field K and c over C.
template <class C, class K>
Polynomial<C> shift_scale(const Polynomial<K>& g, const Monomial& shift, const C& c) {
    std::vector<typename Polynomial<C>::Term> ts;
    ts.reserve(g.size());
    for (const auto& [m, k] : g.terms()) ts.emplace_back(m * shift, c * k);
    return Polynomial<C>::from_terms(std::move(ts));
}

template <class C, class K>
Polynomial<C> reduce_by(const Polynomial<C>& f, const std::vector<Polynomial<K>>& gens,
                        const std::vector<Monomial>& leads, const MonomialOrder& ord) {
    Polynomial<C> p = f, r;
    while (!p.is_zero()) {
        auto lt = p.leading_term(ord);
        bool reduced = false;
        for (std::size_t i = 0; i < leads.size(); ++i) {
            if (!leads[i].divides(lt.first)) continue;
            p -= shift_scale<C, K>(gens[i], lt.first / leads[i], lt.second);
            reduced = true;
            break;
        }
        if (!reduced) {
            auto t = Polynomial<C>::term(lt.first, lt.second);
            r += t;
            p -= t;
        }
    }
    return r;
}

}  // namespace detail

template <class K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& input, const MonomialOrder& ord) {
    std::vector<Polynomial<K>> G;
    std::vector<Monomial> leads;
    for (const auto& f : input) {
        if (f.is_zero()) continue;
        auto g = detail::make_monic(f, ord);
        leads.push_back(g.leading_term(ord).first);
        G.push_back(std::move(g));
    }
    struct Pair {
        std::size_t i, j;
        int deg;
    };
    std::vector<Pair> pairs;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j, Monomial::lcm(leads[i], leads[j]).degree()});
    };
    for (std::size_t j = 1; j < G.size(); ++j) add_pairs_for(j);

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
            if (a.deg != b.deg) return a.deg < b.deg;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        });
        Pair pr = *it;
        pairs.erase(it);
        if (leads[pr.i].coprime(leads[pr.j])) continue;
        Monomial l = Monomial::lcm(leads[pr.i], leads[pr.j]);
        K one = detail::one_of(G[pr.i]);
        auto s = detail::shift_scale<K, K>(G[pr.i], l / leads[pr.i], one) -
                 detail::shift_scale<K, K>(G[pr.j], l / leads[pr.j], one);
        auto h = detail::reduce_by<K, K>(s, G, leads, ord);
        if (h.is_zero()) continue;
        h = detail::make_monic(h, ord);
        leads.push_back(h.leading_term(ord).first);
        G.push_back(std::move(h));
        add_pairs_for(G.size() - 1);
    }

    // minimal basis: drop generators whose lead is divisible by another lead
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j || !leads[j].divides(leads[i])) continue;
            // equal leads: keep the earlier one
            redundant = leads[j] != leads[i] || j < i;
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<Polynomial<K>> minimal;
    std::vector<Monomial> min_leads;
    for (auto i : keep) {
        minimal.push_back(G[i]);
        min_leads.push_back(leads[i]);
    }
    // interreduce tails
    GroebnerBasis<K> out;
    out.order = ord;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<K>> others;
        std::vector<Monomial> other_leads;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) {
                others.push_back(minimal[j]);
                other_leads.push_back(min_leads[j]);
            }
        auto r = detail::reduce_by<K, K>(minimal[i], others, other_leads, ord);
        out.generators.push_back(detail::make_monic(r, ord));
        out.leads.push_back(min_leads[i]);
    }
    std::vector<std::size_t> idx(out.generators.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return ord.less(out.leads[a], out.leads[b]); });
    GroebnerBasis<K> sorted;
    sorted.order = ord;
    for (auto i : idx) {
        sorted.generators.push_back(out.generators[i]);
        sorted.leads.push_back(out.leads[i]);
    }
    return sorted;
}

template <class C, class K>
Polynomial<C> normal_form(const Polynomial<C>& f, const GroebnerBasis<K>& G) {
    return detail::reduce_by<C, K>(f, G.generators, G.leads, G.order);
}

template <class K>
bool ideal_member(const Polynomial<K>& f, const GroebnerBasis<K>& G) {
    return normal_form(f, G).is_zero();
}

class NonHomogeneousError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Degrees of a minimal homogeneous generating set, ascending.
template <class K>
std::vector<int> minimal_degree_sequence(const std::vector<Polynomial<K>>& gens, const MonomialOrder& ord,
                                         std::vector<std::size_t>* kept_indices = nullptr) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!gens[i].is_homogeneous()) throw NonHomogeneousError("minimal_degree_sequence needs homogeneous input");
        if (!gens[i].is_zero()) idx.push_back(i);
    }
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return gens[a].total_degree() < gens[b].total_degree(); });
    std::vector<Polynomial<K>> kept;
    std::vector<int> degrees;
    std::vector<std::size_t> kept_idx;
    std::optional<GroebnerBasis<K>> gb;
    for (auto i : idx) {
        if (gb && ideal_member(gens[i], *gb)) continue;
        kept.push_back(gens[i]);
        kept_idx.push_back(i);
        degrees.push_back(gens[i].total_degree());
        gb = buchberger(kept, ord);
    }
    if (kept_indices) *kept_indices = kept_idx;
    return degrees;
}

// Reduced basis in the canonical comparison form: primitive integer generators, positive leads.
std::vector<RatPoly> canonical_generators(const GroebnerBasis<Rational>& G);

}  // namespace toricfano
