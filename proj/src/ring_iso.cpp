#include "toricfano/ring_iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace toricfano {

std::vector<RatPoly> generator_images(const IntMatrix& L) {
    std::vector<RatPoly> out;
    for (std::size_t c = 0; c < L.cols(); ++c) out.push_back(linear_form(L.column(c)));
    return out;
}

RatPoly apply_linear_map(const RatPoly& f, const IntMatrix& L) { return substitute(f, generator_images(L)); }

bool is_ring_isomorphism(const CohomologyPresentation& A, const CohomologyPresentation& B, const IntMatrix& L) {
    const int n = A.num_generators();
    const auto un = static_cast<std::size_t>(n);
    if (B.num_generators() != n || L.rows() != un || L.cols() != un) return false;
    if (A.top_degree() != B.top_degree()) return false;
    auto inv = inverse_unimodular(L);
    if (!inv) return false;
    const auto& GA = A.gb_rational();
    const auto& GB = B.gb_rational();
    for (const auto& g : A.full_ideal_gens())
        if (!normal_form(apply_linear_map(g, L), GB).is_zero()) return false;
    for (const auto& g : B.full_ideal_gens())
        if (!normal_form(apply_linear_map(g, *inv), GA).is_zero()) return false;
    return true;
}

namespace {

using CoeffVector = std::vector<long>;

// Integer vectors spanning the left kernel of the rational rows.
std::vector<std::vector<Integer>> left_kernel(const std::vector<std::vector<Rational>>& rows, std::size_t width) {
    const std::size_t r = rows.size();
    // augment [rows | I] and eliminate the left block
    std::vector<std::vector<Rational>> M(r, std::vector<Rational>(width + r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < width; ++j) M[i][j] = rows[i][j];
        M[i][width + i] = 1;
    }
    std::size_t pr = 0;
    for (std::size_t c = 0; c < width && pr < r; ++c) {
        std::size_t piv = pr;
        while (piv < r && M[piv][c] == 0) ++piv;
        if (piv == r) continue;
        std::swap(M[pr], M[piv]);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == pr || M[i][c] == 0) continue;
            Rational f = M[i][c] / M[pr][c];
            for (std::size_t j = 0; j < width + r; ++j) M[i][j] -= f * M[pr][j];
        }
        ++pr;
    }
    std::vector<std::vector<Integer>> out;
    for (std::size_t i = pr; i < r; ++i) {
        Integer den = 1;
        for (std::size_t j = 0; j < r; ++j) den = lcm(den, M[i][width + j].get_den());
        std::vector<Integer> v(r);
        for (std::size_t j = 0; j < r; ++j) v[j] = Rational(M[i][width + j] * den).get_num();
        out.push_back(std::move(v));
    }
    return out;
}

int power_order(const CohomologyPresentation& P, const RatPoly& f) {
    const auto& G = P.gb_rational();
    RatPoly acc = f;
    for (int k = 1; k <= P.top_degree() + 1; ++k) {
        if (normal_form(acc, G).is_zero()) return k;
        acc = acc * f;
    }
    return P.top_degree() + 1;
}

class IsoSearch {
public:
    IsoSearch(const CohomologyPresentation& A, const CohomologyPresentation& B, const IsoSearchOptions& opt)
        : A_(A), B_(B), opt_(opt), n_(A.num_generators()), d_(A.top_degree()) {}

    std::vector<IntMatrix> run() {
        if (n_ == 0) return {IntMatrix(0, 0)};
        build_candidates();
        for (const auto& c : cand_)
            if (c.empty()) return {};
        // most constrained variables first
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return cand_[static_cast<std::size_t>(a)].size() < cand_[static_cast<std::size_t>(b)].size();
        });
        build_target_tables();
        build_kernels();
        cols_.assign(static_cast<std::size_t>(n_), {});
        rec(0);
        return found_;
    }

private:
    using Vec = std::vector<std::int64_t>;

    void build_candidates() {
        std::vector<int> ordA;
        for (int i = 0; i < n_; ++i) ordA.push_back(power_order(A_, variable(i)));
        cand_.assign(static_cast<std::size_t>(n_), {});
        const long B = opt_.bound;
        CoeffVector v(static_cast<std::size_t>(n_), -B);
        std::map<int, std::vector<CoeffVector>> by_order;
        for (;;) {
            if (std::any_of(v.begin(), v.end(), [](long x) { return x != 0; })) {
                long g = 0;
                for (long x : v) g = std::gcd(g, x);
                if (g == 1) {
                    std::vector<Integer> c(v.begin(), v.end());
                    by_order[power_order(B_, linear_form(c))].push_back(v);
                }
            }
            std::size_t i = 0;
            while (i < v.size() && v[i] == B) v[i++] = -B;
            if (i == v.size()) break;
            ++v[i];
        }
        for (int i = 0; i < n_; ++i) cand_[static_cast<std::size_t>(i)] = by_order[ordA[static_cast<std::size_t>(i)]];
    }

    // Degree-k monomials of the target with integer-scaled normal form rows.
    void build_target_tables() {
        monos_.assign(static_cast<std::size_t>(d_) + 1, {});
        proj_.assign(static_cast<std::size_t>(d_) + 1, {});
        for (int k = 1; k <= d_; ++k) {
            const auto& tab = B_.degree_table(k);
            monos_[static_cast<std::size_t>(k)] = tab.monomials;
            std::vector<Integer> scale(tab.standard.size(), 1);
            for (const auto& row : tab.rows)
                for (std::size_t j = 0; j < scale.size(); ++j) scale[j] = lcm(scale[j], row[j].get_den());
            for (const auto& row : tab.rows) {
                Vec r(scale.size());
                for (std::size_t j = 0; j < scale.size(); ++j) r[j] = Rational(row[j] * scale[j]).get_num().get_si();
                proj_[static_cast<std::size_t>(k)].push_back(std::move(r));
            }
        }
    }

    // For each level t and degree k: source monomials in the first t+1 ordered variables and kernel relations.
    void build_kernels() {
        levels_.assign(static_cast<std::size_t>(n_), {});
        for (int t = 0; t < n_; ++t) {
            std::vector<bool> allowed(static_cast<std::size_t>(n_), false);
            for (int s = 0; s <= t; ++s) allowed[static_cast<std::size_t>(order_[static_cast<std::size_t>(s)])] = true;
            auto& lvl = levels_[static_cast<std::size_t>(t)];
            lvl.assign(static_cast<std::size_t>(d_) + 1, {});
            for (int k = 2; k <= d_; ++k) {
                const auto& tab = A_.degree_table(k);
                auto& L = lvl[static_cast<std::size_t>(k)];
                std::vector<std::vector<Rational>> rows;
                for (const auto& m : tab.monomials) {
                    bool ok = true;
                    for (int i = 0; i < n_ && ok; ++i) ok = !m.e[static_cast<std::size_t>(i)] || allowed[static_cast<std::size_t>(i)];
                    if (!ok) continue;
                    L.monos.push_back(m);
                    rows.push_back(tab.rows[tab.index_of(m)]);
                }
                for (auto& kv : left_kernel(rows, tab.standard.size())) {
                    Relation rel;
                    for (std::size_t j = 0; j < kv.size(); ++j) {
                        if (kv[j] == 0) continue;
                        // skip relations already enforced one level up
                        rel.terms.emplace_back(L.monos[j], kv[j].get_si());
                    }
                    L.relations.push_back(std::move(rel));
                }
            }
        }
    }

    // Dense image of a source monomial in target degree-k monomials.
    const Vec& image(const Monomial& m) {
        auto it = cache_.find(m);
        if (it != cache_.end() && it->second.stamp == stamp_of(m)) return it->second.dense;
        int k = m.degree();
        Vec out(monos_[static_cast<std::size_t>(k)].size(), 0);
        int v = 0;
        while (!m.e[static_cast<std::size_t>(v)]) ++v;
        const auto& col = cols_[static_cast<std::size_t>(v)];
        if (k == 1) {
            for (int j = 0; j < n_; ++j) {
                if (!col[static_cast<std::size_t>(j)]) continue;
                out[index_of(1, Monomial::variable(j))] = col[static_cast<std::size_t>(j)];
            }
        } else {
            Monomial rest = m / Monomial::variable(v);
            const Vec& prev = image(rest);
            const auto& pm = monos_[static_cast<std::size_t>(k) - 1];
            for (std::size_t a = 0; a < prev.size(); ++a) {
                if (!prev[a]) continue;
                for (int j = 0; j < n_; ++j) {
                    if (!col[static_cast<std::size_t>(j)]) continue;
                    out[index_of(k, pm[a] * Monomial::variable(j))] += prev[a] * col[static_cast<std::size_t>(j)];
                }
            }
        }
        auto& slot = cache_[m];
        slot.dense = std::move(out);
        slot.stamp = stamp_of(m);
        return slot.dense;
    }

    std::size_t index_of(int k, const Monomial& m) const {
        const auto& ms = monos_[static_cast<std::size_t>(k)];
        return static_cast<std::size_t>(std::lower_bound(ms.begin(), ms.end(), m) - ms.begin());
    }

    // Changes whenever a column used by m is reassigned.
    std::uint64_t stamp_of(const Monomial& m) const {
        std::uint64_t s = 0;
        for (int i = 0; i < n_; ++i)
            if (m.e[static_cast<std::size_t>(i)]) s = s * 1000003u + version_[static_cast<std::size_t>(i)];
        return s;
    }

    bool relations_hold(int t) {
        const auto& lvl = levels_[static_cast<std::size_t>(t)];
        const int newest = order_[static_cast<std::size_t>(t)];
        for (int k = 2; k <= d_; ++k) {
            const auto& proj = proj_[static_cast<std::size_t>(k)];
            const std::size_t w = proj.empty() ? 0 : proj.front().size();
            for (const auto& rel : lvl[static_cast<std::size_t>(k)].relations) {
                bool touches = false;
                for (const auto& [m, c] : rel.terms) touches |= m.e[static_cast<std::size_t>(newest)] != 0;
                if (!touches && t > 0) continue;
                Vec acc(w, 0);
                for (const auto& [m, c] : rel.terms) {
                    const Vec& img = image(m);
                    for (std::size_t a = 0; a < img.size(); ++a) {
                        if (!img[a]) continue;
                        const Vec& row = proj[a];
                        for (std::size_t j = 0; j < w; ++j) acc[j] += c * img[a] * row[j];
                    }
                }
                for (auto x : acc)
                    if (x) return false;
            }
        }
        return true;
    }

    void rec(int t) {
        if (found_.size() >= opt_.limit) return;
        if (t == n_) {
            auto L = IntMatrix(n_, n_);
            for (int c = 0; c < n_; ++c)
                for (int r = 0; r < n_; ++r) L.at(r, c) = cols_[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
            Integer det = determinant(L);
            if (det == 1 || det == -1) found_.push_back(std::move(L));
            return;
        }
        const int v = order_[static_cast<std::size_t>(t)];
        for (const auto& c : cand_[static_cast<std::size_t>(v)]) {
            cols_[static_cast<std::size_t>(v)] = c;
            ++version_[static_cast<std::size_t>(v)];
            std::vector<LatticeVector> partial;
            for (int s = 0; s <= t; ++s) {
                const auto& cc = cols_[static_cast<std::size_t>(order_[static_cast<std::size_t>(s)])];
                partial.emplace_back(cc.begin(), cc.end());
            }
            if (!extends_to_basis(partial)) continue;
            if (!relations_hold(t)) continue;
            rec(t + 1);
            if (found_.size() >= opt_.limit) return;
        }
        cols_[static_cast<std::size_t>(v)].clear();
        ++version_[static_cast<std::size_t>(v)];
    }

    struct Relation {
        std::vector<std::pair<Monomial, long>> terms;
    };
    struct Level {
        std::vector<Monomial> monos;
        std::vector<Relation> relations;
    };
    struct Cached {
        Vec dense;
        std::uint64_t stamp = 0;
    };

    const CohomologyPresentation& A_;
    const CohomologyPresentation& B_;
    IsoSearchOptions opt_;
    int n_, d_;
    std::vector<std::vector<CoeffVector>> cand_;
    std::vector<int> order_;
    std::vector<std::vector<Monomial>> monos_;
    std::vector<std::vector<Vec>> proj_;
    std::vector<std::vector<Level>> levels_;
    std::vector<CoeffVector> cols_;
    std::vector<std::uint64_t> version_ = std::vector<std::uint64_t>(kMaxVars, 0);
    std::map<Monomial, Cached> cache_;
    std::vector<IntMatrix> found_;
};

std::vector<Integer> row_major(const IntMatrix& L) {
    std::vector<Integer> out;
    for (std::size_t r = 0; r < L.rows(); ++r)
        for (std::size_t c = 0; c < L.cols(); ++c) out.push_back(L.at(r, c));
    return out;
}

}  // namespace

std::vector<RingIsoWitness> find_ring_isos_bounded(const CohomologyPresentation& A, const CohomologyPresentation& B,
                                                   const IsoSearchOptions& opt) {
    if (A.num_generators() != B.num_generators()) throw DimensionError("presentations have different generator counts");
    if (opt.bound < 1) throw std::invalid_argument("search bound must be at least 1");
    if (A.top_degree() != B.top_degree()) return {};
    auto mats = IsoSearch(A, B, opt).run();
    std::sort(mats.begin(), mats.end(), [](const IntMatrix& a, const IntMatrix& b) { return row_major(a) > row_major(b); });
    std::vector<RingIsoWitness> out;
    for (auto& L : mats) {
        if (!is_ring_isomorphism(A, B, L)) throw InternalConsistencyError("search produced an invalid isomorphism");
        RingIsoWitness w;
        if (A.has_polytope() && B.has_polytope()) {
            w.c1_preserving = check_c1_preserving(L, A, B);
            w.pontryagin_preserving = check_pontryagin_preserving(L, A, B);
        }
        w.L = std::move(L);
        out.push_back(std::move(w));
    }
    return out;
}

bool check_c1_preserving(const IntMatrix& L, const CohomologyPresentation& A, const CohomologyPresentation& B,
                         bool relaxed) {
    if (!is_ring_isomorphism(A, B, L)) throw PreconditionError("not a ring isomorphism");
    auto img = normal_form(apply_linear_map(chern_c1(A), L), B.gb_rational());
    auto target = normal_form(chern_c1(B), B.gb_rational());
    return img == target || (relaxed && img == -target);
}

bool check_pontryagin_preserving(const IntMatrix& L, const CohomologyPresentation& A, const CohomologyPresentation& B) {
    if (!is_ring_isomorphism(A, B, L)) throw PreconditionError("not a ring isomorphism");
    auto pa = pontryagin_total(A), pb = pontryagin_total(B);
    if (pa.size() != pb.size()) return false;
    for (std::size_t k = 0; k < pa.size(); ++k)
        if (normal_form(apply_linear_map(pa[k], L), B.gb_rational()) != pb[k]) return false;
    return true;
}

bool degree_gate(const SmoothFanoPolytope& P1, const SmoothFanoPolytope& P2) {
    return degree_anticanonical(P1) == degree_anticanonical(P2);
}

}  // namespace toricfano
