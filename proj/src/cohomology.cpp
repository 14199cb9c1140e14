#include "toricfano/cohomology.hpp"

#include <algorithm>
#include <array>

namespace toricfano {

namespace {

constexpr std::array<std::uint32_t, 4> kPruningPrimes{2, 3, 5, 7};

// Keeps a generator unless it is redundant over Q and over every pruning prime.
std::vector<RatPoly> prune_generators(const std::vector<RatPoly>& gens, const MonomialOrder& ord) {
    std::vector<std::size_t> kept;
    minimal_degree_sequence(gens, ord, &kept);
    std::vector<bool> keep(gens.size(), false);
    for (auto i : kept) keep[i] = true;
    for (auto p : kPruningPrimes) {
        for (;;) {
            std::vector<ModPoly> sub;
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (keep[i]) sub.push_back(to_mod_p(gens[i], p));
            auto gb = buchberger(sub, ord);
            bool changed = false;
            for (std::size_t i = 0; i < gens.size() && !changed; ++i)
                if (!keep[i] && !ideal_member(to_mod_p(gens[i], p), gb)) keep[i] = changed = true;
            if (!changed) break;
        }
    }
    std::vector<RatPoly> out;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (keep[i]) out.push_back(gens[i]);
    return out;
}

// Product truncated above generator degree top.
RatPoly truncated_product(const RatPoly& a, const RatPoly& b, int top) {
    std::vector<RatPoly::Term> ts;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            if (ma.degree() + mb.degree() <= top) ts.emplace_back(ma * mb, ca * cb);
    return RatPoly::from_terms(std::move(ts));
}

RatPoly homogeneous_part(const RatPoly& f, int k) {
    std::vector<RatPoly::Term> ts;
    for (const auto& t : f.terms())
        if (t.first.degree() == k) ts.push_back(t);
    return RatPoly::from_terms(std::move(ts));
}

void check_integral(const RatPoly& f, const char* what) {
    for (const auto& t : f.terms())
        if (t.second.get_den() != 1) throw InternalConsistencyError(std::string(what) + " has a non-integral coefficient");
}

}  // namespace

std::vector<std::string> default_generator_names(int n) {
    static const std::vector<std::string> base{"x", "y", "z", "u", "v", "w", "s", "t", "r", "q", "p", "o", "n", "m", "l", "k"};
    if (n > static_cast<int>(base.size())) throw DimensionError("too many generators");
    return {base.begin(), base.begin() + n};
}

std::size_t DegreeTable::index_of(const Monomial& m) const {
    auto it = std::lower_bound(monomials.begin(), monomials.end(), m);
    if (it == monomials.end() || *it != m) throw std::out_of_range("monomial not in degree table");
    return static_cast<std::size_t>(it - monomials.begin());
}

CohomologyPresentation CohomologyPresentation::from_ideal(std::vector<std::string> names, std::vector<RatPoly> gens,
                                                          int top_degree) {
    CohomologyPresentation pres;
    const int n = static_cast<int>(names.size());
    if (n > kMaxVars) throw DimensionError("too many generators");
    pres.names_ = std::move(names);
    pres.order_ = MonomialOrder::grlex_default(n);
    pres.top_degree_ = top_degree;
    for (auto& g : gens)
        if (!g.is_homogeneous()) throw NonHomogeneousError("ideal generators must be homogeneous");
    pres.full_gens_ = gens;
    pres.gens_ = std::move(gens);
    for (int i = 0; i < n; ++i) pres.free_.push_back(i);
    return pres;
}

const SmoothFanoPolytope& CohomologyPresentation::polytope() const {
    if (!polytope_) throw PreconditionError("presentation has no underlying polytope");
    return *polytope_;
}

CohomologyPresentation CohomologyPresentation::with_names(std::vector<std::string> names) const {
    if (names.size() != names_.size()) throw DimensionError("name count mismatch");
    CohomologyPresentation c = *this;
    c.names_ = std::move(names);
    return c;
}

const GroebnerBasis<Rational>& CohomologyPresentation::gb_rational() const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->q) cache_->q = buchberger(full_gens_, order_);
    return *cache_->q;
}

const GroebnerBasis<ModP>& CohomologyPresentation::gb_mod(std::uint32_t p) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->mod.find(p);
    if (it == cache_->mod.end()) {
        std::vector<ModPoly> gens;
        for (const auto& g : full_gens_) gens.push_back(to_mod_p(g, p));
        it = cache_->mod.emplace(p, buchberger(gens, order_)).first;
    }
    return it->second;
}

const DegreeTable& CohomologyPresentation::degree_table(int k) const {
    const auto& G = gb_rational();
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->tables.find(k);
    if (it != cache_->tables.end()) return it->second;
    DegreeTable t;
    t.degree = k;
    t.monomials = monomials_of_degree(num_generators(), k);
    std::sort(t.monomials.begin(), t.monomials.end());
    for (const auto& m : t.monomials)
        if (G.is_standard(m)) t.standard.push_back(m);
    for (const auto& m : t.monomials) {
        auto nf = normal_form(RatPoly::term(m, 1), G);
        std::vector<Rational> row(t.standard.size());
        for (const auto& [sm, c] : nf.terms()) {
            auto pos = std::lower_bound(t.standard.begin(), t.standard.end(), sm);
            row[static_cast<std::size_t>(pos - t.standard.begin())] = c;
        }
        t.rows.push_back(std::move(row));
    }
    return cache_->tables.emplace(k, std::move(t)).first->second;
}

CohomologyPresentation build_presentation(const SmoothFanoPolytope& P) {
    CohomologyPresentation pres;
    pres.polytope_ = std::make_shared<const SmoothFanoPolytope>(P);
    const int m = P.num_vertices(), d = P.dim();
    const int n = m - d;
    if (n > kMaxVars) throw DimensionError("Picard number exceeds supported variable count");
    pres.eliminated_ = P.facets().front();
    for (int i = 0; i < m; ++i)
        if (!std::binary_search(pres.eliminated_.begin(), pres.eliminated_.end(), i)) pres.free_.push_back(i);
    pres.names_ = default_generator_names(n);
    pres.order_ = MonomialOrder::grlex_default(n);
    pres.top_degree_ = d;

    std::vector<LatticeVector> basis;
    for (int i : pres.eliminated_) basis.push_back(P.vertex(i));
    auto inv = inverse_unimodular(IntMatrix::from_columns(basis));
    if (!inv) throw InternalConsistencyError("eliminated facet is not a lattice basis");

    pres.substitution_.assign(static_cast<std::size_t>(m), RatPoly{});
    for (int k = 0; k < n; ++k) pres.substitution_[static_cast<std::size_t>(pres.free_[static_cast<std::size_t>(k)])] = variable(k);
    // sum_{j in E} v_j x_j = - sum_{j free} v_j x_j
    for (int k = 0; k < n; ++k) {
        LatticeVector coeffs = *inv * P.vertex(pres.free_[static_cast<std::size_t>(k)]);
        for (std::size_t r = 0; r < pres.eliminated_.size(); ++r) {
            auto& s = pres.substitution_[static_cast<std::size_t>(pres.eliminated_[r])];
            s += RatPoly::term(Monomial::variable(k), Rational(-coeffs[r]));
        }
    }
    // the linear relations hold identically
    for (int c = 0; c < d; ++c) {
        RatPoly rel;
        for (int j = 0; j < m; ++j)
            rel += pres.substitution_[static_cast<std::size_t>(j)].scaled(Rational(P.vertex(j)[static_cast<std::size_t>(c)]));
        if (!rel.is_zero()) throw InternalConsistencyError("linear relation not satisfied");
    }

    for (const auto& S : P.minimal_nonfaces()) {
        RatPoly g = RatPoly::constant(1);
        for (int i : S) g = g * pres.substitution_[static_cast<std::size_t>(i)];
        pres.full_gens_.push_back(std::move(g));
    }
    pres.gens_ = prune_generators(pres.full_gens_, pres.order_);
    return pres;
}

namespace {

void require_polytope(const CohomologyPresentation& pres) {
    if (!pres.has_polytope()) throw PreconditionError("characteristic classes need a polytope presentation");
}

}  // namespace

RatPoly chern_c1(const CohomologyPresentation& pres) {
    require_polytope(pres);
    RatPoly c;
    for (const auto& s : pres.substitution()) c += s;
    return c;
}

std::vector<RatPoly> chern_total(const CohomologyPresentation& pres) {
    require_polytope(pres);
    const int d = pres.top_degree();
    RatPoly total = RatPoly::constant(1);
    for (const auto& s : pres.substitution()) total = truncated_product(total, RatPoly::constant(1) + s, d);
    std::vector<RatPoly> out;
    for (int k = 0; k <= d; ++k) {
        auto part = normal_form(homogeneous_part(total, k), pres.gb_rational());
        check_integral(part, "Chern class");
        out.push_back(std::move(part));
    }
    return out;
}

std::vector<RatPoly> pontryagin_total(const CohomologyPresentation& pres) {
    require_polytope(pres);
    const int d = pres.top_degree();
    RatPoly total = RatPoly::constant(1);
    for (const auto& s : pres.substitution()) total = truncated_product(total, RatPoly::constant(1) + s * s, d);
    std::vector<RatPoly> out;
    for (int k = 0; 2 * k <= d; ++k) {
        auto part = normal_form(homogeneous_part(total, 2 * k), pres.gb_rational());
        check_integral(part, "Pontryagin class");
        out.push_back(std::move(part));
    }
    return out;
}

Integer degree_anticanonical(const SmoothFanoPolytope& P) { return normalized_volume(dual_polytope(P)); }

Integer degree_via_ring(const CohomologyPresentation& pres) {
    const auto& P = pres.polytope();
    const auto& G = pres.gb_rational();
    const int d = P.dim();
    const auto& E = pres.eliminated_indices();

    // facet disjoint from the eliminated one, else the one with least overlap
    const IndexSet* best = nullptr;
    std::size_t best_overlap = 0;
    for (const auto& f : P.facets()) {
        IndexSet inter;
        std::set_intersection(f.begin(), f.end(), E.begin(), E.end(), std::back_inserter(inter));
        if (!best || inter.size() < best_overlap) {
            best = &f;
            best_overlap = inter.size();
            if (best_overlap == 0) break;
        }
    }
    RatPoly xs = RatPoly::constant(1);
    for (int i : *best) xs = xs * pres.substitution()[static_cast<std::size_t>(i)];
    auto nf_sigma = normal_form(xs, G);
    auto nf_c1 = normal_form(chern_c1(pres).pow(d), G);
    if (nf_sigma.is_zero()) throw InternalConsistencyError("facet class reduces to zero");
    if (nf_sigma.size() != 1 || nf_c1.size() > 1) throw InternalConsistencyError("top graded piece is not of rank one");
    if (nf_c1.is_zero()) throw InternalConsistencyError("c1^d vanishes");
    const auto& [ms, cs] = nf_sigma.terms().front();
    const auto& [mc, cc] = nf_c1.terms().front();
    if (ms != mc) throw InternalConsistencyError("top classes are not proportional");
    Rational ratio = cc / cs;
    if (ratio.get_den() != 1 || ratio <= 0) throw InternalConsistencyError("degree ratio is not a positive integer");
    return ratio.get_num();
}

Integer binomial(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

bool degree_of_product_check(const SmoothFanoPolytope& P, const SmoothFanoPolytope& Q) {
    auto S = direct_sum(P, Q);
    return degree_anticanonical(S) == binomial(P.dim() + Q.dim(), P.dim()) * degree_anticanonical(P) * degree_anticanonical(Q);
}

std::vector<int> graded_dimensions(const CohomologyPresentation& pres) {
    const auto& G = pres.gb_rational();
    std::vector<int> dims;
    for (int k = 0; k <= pres.top_degree(); ++k) {
        int c = 0;
        for (const auto& m : monomials_of_degree(pres.num_generators(), k))
            if (G.is_standard(m)) ++c;
        dims.push_back(c);
    }
    return dims;
}

}  // namespace toricfano
