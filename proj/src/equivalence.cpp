#include "toricfano/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace toricfano {

namespace {

using Mask = std::uint64_t;

struct ComplexData {
    int m = 0;
    std::vector<Mask> facets;            // sorted
    std::vector<int> degree;             // facets through each vertex
    std::vector<std::vector<int>> pair;  // facets through each vertex pair
};

ComplexData complex_data(const SmoothFanoPolytope& P) {
    ComplexData c;
    c.m = P.num_vertices();
    if (c.m > 64) throw DimensionError("too many vertices");
    c.degree.assign(static_cast<std::size_t>(c.m), 0);
    c.pair.assign(static_cast<std::size_t>(c.m), std::vector<int>(static_cast<std::size_t>(c.m), 0));
    for (const auto& f : P.facets()) {
        Mask mk = 0;
        for (int i : f) {
            mk |= Mask{1} << i;
            ++c.degree[static_cast<std::size_t>(i)];
            for (int j : f) ++c.pair[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        c.facets.push_back(mk);
    }
    std::sort(c.facets.begin(), c.facets.end());
    return c;
}

bool is_facet(const ComplexData& c, Mask m) { return std::binary_search(c.facets.begin(), c.facets.end(), m); }

Mask image(Mask m, const std::vector<int>& pi) {
    Mask out = 0;
    for (std::size_t i = 0; i < pi.size(); ++i)
        if (m >> i & 1) out |= Mask{1} << pi[i];
    return out;
}

}  // namespace

void for_each_complex_isomorphism(const SmoothFanoPolytope& P1, const SmoothFanoPolytope& P2,
                                  const std::function<bool(const std::vector<int>&)>& fn) {
    if (P1.dim() != P2.dim() || P1.f_vector() != P2.f_vector()) return;
    const auto A = complex_data(P1), B = complex_data(P2);
    const int m = A.m;
    // facets of P1 that become fully assigned at each step
    std::vector<std::vector<Mask>> closing(static_cast<std::size_t>(m));
    for (Mask f : A.facets) closing[static_cast<std::size_t>(63 - __builtin_clzll(f))].push_back(f);

    std::vector<int> pi(static_cast<std::size_t>(m), -1);
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    bool stop = false;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == m) {
            stop = !fn(pi);
            return;
        }
        for (int j = 0; j < m && !stop; ++j) {
            if (used[static_cast<std::size_t>(j)] || A.degree[static_cast<std::size_t>(i)] != B.degree[static_cast<std::size_t>(j)])
                continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k)
                ok = A.pair[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] ==
                     B.pair[static_cast<std::size_t>(j)][static_cast<std::size_t>(pi[static_cast<std::size_t>(k)])];
            if (!ok) continue;
            pi[static_cast<std::size_t>(i)] = j;
            for (Mask f : closing[static_cast<std::size_t>(i)])
                if (!is_facet(B, image(f, pi))) {
                    ok = false;
                    break;
                }
            if (ok) {
                used[static_cast<std::size_t>(j)] = true;
                self(self, i + 1);
                used[static_cast<std::size_t>(j)] = false;
            }
            pi[static_cast<std::size_t>(i)] = -1;
        }
    };
    rec(rec, 0);
}

std::vector<std::vector<int>> complex_isomorphisms(const SmoothFanoPolytope& P1, const SmoothFanoPolytope& P2,
                                                   std::size_t limit) {
    std::vector<std::vector<int>> out;
    for_each_complex_isomorphism(P1, P2, [&](const std::vector<int>& pi) {
        out.push_back(pi);
        return out.size() < limit;
    });
    return out;
}

namespace {

LatticeVector negated(LatticeVector v) {
    for (auto& x : v) x = -x;
    return v;
}

// Tries all sign patterns on the seed facet (only +1 when signs are fixed).
std::optional<EquivalenceWitness> search(const SmoothFanoPolytope& P1, const SmoothFanoPolytope& P2, bool allow_signs) {
    std::optional<EquivalenceWitness> found;
    const auto& seed = P1.facets().front();
    const int d = P1.dim(), m = P1.num_vertices();
    for_each_complex_isomorphism(P1, P2, [&](const std::vector<int>& pi) {
        const int patterns = allow_signs ? 1 << d : 1;
        for (int s = 0; s < patterns; ++s) {
            std::vector<LatticeVector> src, dst;
            for (int k = 0; k < d; ++k) {
                int i = seed[static_cast<std::size_t>(k)];
                src.push_back(P1.vertex(i));
                const auto& w = P2.vertex(pi[static_cast<std::size_t>(i)]);
                dst.push_back(s >> k & 1 ? negated(w) : w);
            }
            auto U = solve_unimodular_from_basis(src, dst);
            if (!U) continue;
            std::vector<int> eps(static_cast<std::size_t>(m), 0);
            bool ok = true;
            for (int i = 0; i < m && ok; ++i) {
                auto img = *U * P1.vertex(i);
                const auto& w = P2.vertex(pi[static_cast<std::size_t>(i)]);
                if (img == w)
                    eps[static_cast<std::size_t>(i)] = 1;
                else if (allow_signs && img == negated(w))
                    eps[static_cast<std::size_t>(i)] = -1;
                else
                    ok = false;
            }
            if (ok) {
                found = EquivalenceWitness{pi, *U, std::move(eps)};
                return false;
            }
        }
        return true;
    });
    return found;
}

}  // namespace

std::optional<EquivalenceWitness> unimodular_equivalent(const SmoothFanoPolytope& P1, const SmoothFanoPolytope& P2) {
    return search(P1, P2, false);
}

std::optional<EquivalenceWitness> sign_equivalent(const SmoothFanoPolytope& P1, const SmoothFanoPolytope& P2) {
    return search(P1, P2, true);
}

bool verify_witness(const SmoothFanoPolytope& P1, const SmoothFanoPolytope& P2, const EquivalenceWitness& w) {
    const int m = P1.num_vertices(), d = P1.dim();
    if (P2.num_vertices() != m || P2.dim() != d) return false;
    if (static_cast<int>(w.pi.size()) != m || static_cast<int>(w.eps.size()) != m) return false;
    if (w.U.rows() != static_cast<std::size_t>(d) || w.U.cols() != static_cast<std::size_t>(d)) return false;
    std::vector<int> seen(static_cast<std::size_t>(m), 0);
    for (int j : w.pi)
        if (j < 0 || j >= m || seen[static_cast<std::size_t>(j)]++) return false;
    // facets map onto facets
    std::set<IndexSet> target(P2.facets().begin(), P2.facets().end());
    if (target.size() != P1.facets().size()) return false;
    for (const auto& f : P1.facets()) {
        IndexSet g;
        for (int i : f) g.push_back(w.pi[static_cast<std::size_t>(i)]);
        std::sort(g.begin(), g.end());
        if (!target.count(g)) return false;
    }
    Integer det = determinant(w.U);
    if (det != 1 && det != -1) return false;
    for (int i = 0; i < m; ++i) {
        int e = w.eps[static_cast<std::size_t>(i)];
        if (e != 1 && e != -1) return false;
        const auto& v = P1.vertex(i);
        const auto& t = P2.vertex(w.pi[static_cast<std::size_t>(i)]);
        for (int r = 0; r < d; ++r) {
            Integer acc = 0;
            for (int c = 0; c < d; ++c) acc += w.U.at(r, c) * v[static_cast<std::size_t>(c)];
            if (acc != e * t[static_cast<std::size_t>(r)]) return false;
        }
    }
    return true;
}

EquivalenceWitness inverse_witness(const EquivalenceWitness& w) {
    EquivalenceWitness r;
    r.pi.assign(w.pi.size(), 0);
    r.eps.assign(w.eps.size(), 0);
    for (std::size_t i = 0; i < w.pi.size(); ++i) {
        r.pi[static_cast<std::size_t>(w.pi[i])] = static_cast<int>(i);
        r.eps[static_cast<std::size_t>(w.pi[i])] = w.eps[i];
    }
    auto inv = inverse_unimodular(w.U);
    if (!inv) throw PreconditionError("witness matrix is not unimodular");
    r.U = *inv;
    return r;
}

std::string to_string(Relation r) {
    switch (r) {
        case Relation::SignEquiv: return "sign";
        case Relation::UnimodularEquiv: return "unimodular";
        case Relation::FingerprintEqual: return "fingerprint";
    }
    return "?";
}

Relation parse_relation(const std::string& s) {
    if (s == "sign") return Relation::SignEquiv;
    if (s == "unimodular") return Relation::UnimodularEquiv;
    if (s == "fingerprint") return Relation::FingerprintEqual;
    throw std::invalid_argument("unknown relation '" + s + "' (expected sign, unimodular or fingerprint)");
}

Partition classify(const std::vector<SmoothFanoPolytope>& ps, Relation rel, const ClassifyOptions& opt) {
    const std::size_t n = ps.size();
    if (rel == Relation::FingerprintEqual && opt.fingerprint_keys.size() != n)
        throw PreconditionError("fingerprint classification needs one key per polytope");
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::string> keys(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string k = std::to_string(ps[i].dim()) + ":" + std::to_string(ps[i].num_vertices()) + ":" +
                        std::to_string(ps[i].facets().size());
        if (rel == Relation::FingerprintEqual) k += "|" + opt.fingerprint_keys[i];
        if (opt.prefilter) k += "|" + opt.prefilter(i);
        keys[i] = std::move(k);
    }
    Partition part;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            if (keys[i] != keys[j] || find(i) == find(j)) continue;
            std::optional<EquivalenceWitness> w;
            bool same = false;
            if (rel == Relation::FingerprintEqual) {
                same = true;
            } else {
                w = rel == Relation::SignEquiv ? sign_equivalent(ps[i], ps[j]) : unimodular_equivalent(ps[i], ps[j]);
                same = w.has_value();
            }
            if (!same) continue;
            parent[find(j)] = find(i);
            part.merges.push_back({i, j, std::move(w)});
        }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    for (auto& [root, members] : groups) part.classes.push_back(std::move(members));
    std::sort(part.classes.begin(), part.classes.end());
    return part;
}

std::vector<std::vector<std::size_t>> anomalies(const Partition& coarse, const Partition& fine) {
    std::map<std::size_t, std::size_t> cls;
    for (std::size_t c = 0; c < fine.classes.size(); ++c)
        for (auto i : fine.classes[c]) cls[i] = c;
    std::vector<std::vector<std::size_t>> out;
    for (const auto& group : coarse.classes) {
        std::set<std::size_t> seen;
        for (auto i : group) seen.insert(cls.at(i));
        if (seen.size() > 1) out.push_back(group);
    }
    return out;
}

}  // namespace toricfano
