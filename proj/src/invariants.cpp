#include "toricfano/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace toricfano {

std::string to_string(Completeness c) {
    switch (c) {
        case Completeness::Exhaustive: return "exhaustive";
        case Completeness::BoundedSearch: return "bounded";
        case Completeness::HeuristicInfinite: return "heuristic-infinite";
    }
    return "?";
}

bool KveReport::all_nonzero(int nvars) const {
    if (ring.kind != KveRing::Kind::ModP) return false;
    std::uint64_t total = 1;
    for (int i = 0; i < nvars; ++i) total *= ring.prime;
    return solutions.size() == (total - 1) / (ring.prime - 1);
}

RatPoly linear_poly(const CoeffVector& a) {
    std::vector<Integer> c(a.begin(), a.end());
    return linear_form(c);
}

std::string format_linear(const CoeffVector& a, const std::vector<std::string>& names) {
    // Variable order, no '*': "x - 2z".
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        long c = a[i];
        if (c == 0) continue;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        long m = c < 0 ? -c : c;
        if (m != 1) s += std::to_string(m);
        s += names[i];
    }
    return s.empty() ? "0" : s;
}

namespace {

long mod_norm(long v, long p) {
    v %= p;
    return v < 0 ? v + p : v;
}

// k!/alpha! for a monomial alpha of degree k.
Integer multinomial(const Monomial& m) {
    Integer r = 1;
    int acc = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        int e = m.e[static_cast<std::size_t>(i)];
        for (int j = 1; j <= e; ++j) {
            ++acc;
            r = r * acc / j;
        }
    }
    return r;
}

// ---------------------------------------------------------------- mod p evaluation

struct ModTable {
    std::uint32_t p = 2;
    int nvars = 0;
    struct Row {
        std::vector<std::pair<int, int>> powers;  // (variable, exponent)
        std::uint32_t mult;
        std::vector<std::uint32_t> values;  // over standard monomials
    };
    std::vector<Row> rows;
    std::size_t width = 0;
};

ModTable build_mod_table(const CohomologyPresentation& pres, int k, std::uint32_t p) {
    const auto& G = pres.gb_mod(p);
    ModTable t;
    t.p = p;
    t.nvars = pres.num_generators();
    auto monos = monomials_of_degree(t.nvars, k);
    std::vector<Monomial> standard;
    for (const auto& m : monos)
        if (G.is_standard(m)) standard.push_back(m);
    std::sort(standard.begin(), standard.end());
    t.width = standard.size();
    for (const auto& m : monos) {
        Integer mu = multinomial(m);
        auto mult = static_cast<std::uint32_t>(mpz_class(mu % p).get_ui());
        if (mult == 0) continue;
        auto nf = normal_form(ModPoly::term(m, ModP(1, p)), G);
        if (nf.is_zero()) continue;
        ModTable::Row row;
        row.mult = mult;
        for (int i = 0; i < t.nvars; ++i)
            if (m.e[static_cast<std::size_t>(i)]) row.powers.emplace_back(i, m.e[static_cast<std::size_t>(i)]);
        row.values.assign(t.width, 0);
        for (const auto& [sm, c] : nf.terms()) {
            auto pos = std::lower_bound(standard.begin(), standard.end(), sm) - standard.begin();
            row.values[static_cast<std::size_t>(pos)] = c.v;
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

bool vanishes_mod(const ModTable& t, const std::vector<std::uint32_t>& a, std::vector<std::uint64_t>& acc) {
    const std::uint64_t p = t.p;
    acc.assign(t.width, 0);
    for (const auto& row : t.rows) {
        std::uint64_t c = row.mult;
        for (auto [v, e] : row.powers) {
            for (int j = 0; j < e && c; ++j) c = c * a[static_cast<std::size_t>(v)] % p;
        }
        if (!c) continue;
        for (std::size_t j = 0; j < t.width; ++j) acc[j] = (acc[j] + c * row.values[j]) % p;
    }
    return std::all_of(acc.begin(), acc.end(), [](std::uint64_t x) { return x == 0; });
}

// Reduced row echelon basis of the span of vectors over F_p.
std::vector<CoeffVector> rref_mod(std::vector<CoeffVector> rows, long p) {
    std::vector<CoeffVector> basis;
    if (rows.empty()) return basis;
    const std::size_t n = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && mod_norm(rows[piv][c], p) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        long inv = 1;
        long a = mod_norm(rows[r][c], p);
        while (a * inv % p != 1) ++inv;
        for (auto& x : rows[r]) x = mod_norm(x * inv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            long f = mod_norm(rows[i][c], p);
            if (!f) continue;
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = mod_norm(rows[i][j] - f * rows[r][j], p);
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

// All solutions mod p including scalar multiples, as packed base-p codes.
struct ModSolutions {
    std::uint32_t p;
    int n;
    std::vector<std::vector<std::uint32_t>> full;  // every nonzero solution
};

ModSolutions all_mod_solutions(const KveReport& r, int n) {
    ModSolutions s{r.ring.prime, n, {}};
    for (const auto& v : r.solutions)
        for (std::uint32_t c = 1; c < r.ring.prime; ++c) {
            std::vector<std::uint32_t> w(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v[static_cast<std::size_t>(i)] * c % r.ring.prime);
            s.full.push_back(std::move(w));
        }
    return s;
}

// ---------------------------------------------------------------- integer search

// Integer tensor T(i1..ik) = NF(x_i1 ... x_ik), columns scaled to integers.
struct IntTensor {
    int n = 0, k = 2;
    std::size_t width = 0;
    std::vector<std::int64_t> data;  // symmetric, indexed by the sorted multi-index
    std::size_t index(int i, int j) const { return (static_cast<std::size_t>(i) * n + j) * width; }
    std::size_t index(int i, int j, int l) const { return ((static_cast<std::size_t>(i) * n + j) * n + l) * width; }
};

IntTensor build_int_tensor(const CohomologyPresentation& pres, int k) {
    if (k != 2 && k != 3) throw std::invalid_argument("integer k-v.e. search supports k = 2 or 3");
    const auto& tab = pres.degree_table(k);
    IntTensor T;
    T.n = pres.num_generators();
    T.k = k;
    T.width = tab.standard.size();
    std::vector<Integer> scale(T.width, 1);
    for (const auto& row : tab.rows)
        for (std::size_t j = 0; j < T.width; ++j) scale[j] = lcm(scale[j], row[j].get_den());
    std::size_t cells = T.width;
    for (int i = 0; i < k; ++i) cells *= static_cast<std::size_t>(T.n);
    T.data.assign(cells, 0);
    auto fill = [&](const std::vector<int>& idx) {
        Monomial m;
        for (int v : idx) m.e[static_cast<std::size_t>(v)]++;
        const auto& row = tab.rows[tab.index_of(m)];
        std::size_t off = k == 2 ? T.index(idx[0], idx[1]) : T.index(idx[0], idx[1], idx[2]);
        for (std::size_t j = 0; j < T.width; ++j) {
            Rational v = row[j] * scale[j];
            if (!v.get_num().fits_slong_p()) throw std::overflow_error("degree table entry too large");
            T.data[off + j] = v.get_num().get_si();
        }
    };
    const int n = T.n;
    if (k == 2) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) fill({i, j});
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l) fill({i, j, l});
    }
    return T;
}

struct PrefixFilter {
    long p;
    std::vector<std::unordered_set<std::uint64_t>> viable;  // per prefix length
    bool ok(int len, std::uint64_t code) const { return viable[static_cast<std::size_t>(len)].count(code) > 0; }
};

PrefixFilter make_filter(const ModSolutions& s) {
    PrefixFilter f{s.p, std::vector<std::unordered_set<std::uint64_t>>(static_cast<std::size_t>(s.n) + 1)};
    for (const auto& v : s.full) {
        std::uint64_t code = 0;
        for (int t = 0; t < s.n; ++t) {
            code = code * s.p + v[static_cast<std::size_t>(t)];
            f.viable[static_cast<std::size_t>(t) + 1].insert(code);
        }
    }
    return f;
}

class IntegerSearch {
public:
    IntegerSearch(const IntTensor& T, std::vector<PrefixFilter> filters, int bound, std::uint64_t budget)
        : T_(T), filters_(std::move(filters)), B_(bound), budget_(budget) {
        const std::size_t n = static_cast<std::size_t>(T.n), w = T.width;
        a_.assign(n, 0);
        codes_.assign(filters_.size() * (n + 1), 0);
        V_.assign((n + 1) * w, 0);
        if (T.k == 2) {
            Bs_.assign((n + 1) * n * w, 0);
        } else {
            Bs_.assign((n + 1) * n * w, 0);
            R_.assign((n + 1) * n * n * w, 0);
        }
    }

    // false when the node budget ran out
    bool run() {
        if (T_.n == 0) return true;
        return rec(0, true);
    }
    const std::vector<CoeffVector>& solutions() const { return out_; }

private:
    std::int64_t* V(int t) { return &V_[static_cast<std::size_t>(t) * T_.width]; }
    std::int64_t* Bq(int t, int u) { return &Bs_[(static_cast<std::size_t>(t) * T_.n + u) * T_.width]; }
    std::int64_t* R(int t, int u, int v) {
        return &R_[((static_cast<std::size_t>(t) * T_.n + u) * T_.n + v) * T_.width];
    }

    bool prefix_ok(int t, long val) {
        for (std::size_t f = 0; f < filters_.size(); ++f) {
            const long p = filters_[f].p;
            std::uint64_t prev = codes_[f * (T_.n + 1) + static_cast<std::size_t>(t)];
            std::uint64_t code = prev * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(mod_norm(val, p));
            if (!filters_[f].ok(t + 1, code)) return false;
            codes_[f * (T_.n + 1) + static_cast<std::size_t>(t) + 1] = code;
        }
        return true;
    }

    // State at level t+1 from level t with a_t = x.
    void advance(int t, long x) {
        const int n = T_.n;
        const std::size_t w = T_.width;
        const std::int64_t* v0 = V(t);
        std::int64_t* v1 = V(t + 1);
        if (T_.k == 2) {
            const std::int64_t* bt = Bq(t, t);
            const std::int64_t* ctt = &T_.data[T_.index(t, t)];
            for (std::size_t j = 0; j < w; ++j) v1[j] = v0[j] + x * (2 * bt[j] + x * ctt[j]);
            for (int u = t + 1; u < n; ++u) {
                const std::int64_t* b0 = Bq(t, u);
                std::int64_t* b1 = Bq(t + 1, u);
                const std::int64_t* c = &T_.data[T_.index(t, u)];
                for (std::size_t j = 0; j < w; ++j) b1[j] = b0[j] + x * c[j];
            }
        } else {
            const std::int64_t* qt = Bq(t, t);
            const std::int64_t* rtt = R(t, t, t);
            const std::int64_t* cttt = &T_.data[T_.index(t, t, t)];
            for (std::size_t j = 0; j < w; ++j) v1[j] = v0[j] + x * (3 * qt[j] + x * (3 * rtt[j] + x * cttt[j]));
            for (int u = t + 1; u < n; ++u) {
                const std::int64_t* q0 = Bq(t, u);
                std::int64_t* q1 = Bq(t + 1, u);
                const std::int64_t* rtu = R(t, t, u);
                const std::int64_t* c = &T_.data[T_.index(t, t, u)];
                for (std::size_t j = 0; j < w; ++j) q1[j] = q0[j] + x * (2 * rtu[j] + x * c[j]);
                for (int v = u; v < n; ++v) {
                    const std::int64_t* r0 = R(t, u, v);
                    std::int64_t* r1 = R(t + 1, u, v);
                    const std::int64_t* cc = &T_.data[T_.index(t, u, v)];
                    for (std::size_t j = 0; j < w; ++j) r1[j] = r0[j] + x * cc[j];
                }
            }
        }
    }

    bool leaf_zero(int t, long x) {
        const std::size_t w = T_.width;
        const std::int64_t* v0 = V(t);
        if (T_.k == 2) {
            const std::int64_t* bt = Bq(t, t);
            const std::int64_t* ctt = &T_.data[T_.index(t, t)];
            for (std::size_t j = 0; j < w; ++j)
                if (v0[j] + x * (2 * bt[j] + x * ctt[j]) != 0) return false;
        } else {
            const std::int64_t* qt = Bq(t, t);
            const std::int64_t* rtt = R(t, t, t);
            const std::int64_t* cttt = &T_.data[T_.index(t, t, t)];
            for (std::size_t j = 0; j < w; ++j)
                if (v0[j] + x * (3 * qt[j] + x * (3 * rtt[j] + x * cttt[j])) != 0) return false;
        }
        return true;
    }

    bool rec(int t, bool all_zero) {
        const int n = T_.n;
        const long lo = all_zero ? 0 : -B_;
        for (long x = lo; x <= B_; ++x) {
            if (++nodes_ > budget_) return false;
            if (t == n - 1 && all_zero && x == 0) continue;
            if (!prefix_ok(t, x)) continue;
            a_[static_cast<std::size_t>(t)] = x;
            if (t == n - 1) {
                if (!leaf_zero(t, x)) continue;
                long g = 0;
                for (long v : a_) g = std::gcd(g, v);
                if (g == 1) out_.push_back(a_);
            } else {
                advance(t, x);
                if (!rec(t + 1, all_zero && x == 0)) return false;
            }
        }
        return true;
    }

    const IntTensor& T_;
    std::vector<PrefixFilter> filters_;
    long B_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    CoeffVector a_;
    std::vector<std::uint64_t> codes_;
    std::vector<std::int64_t> V_, Bs_, R_;
    std::vector<CoeffVector> out_;
};

void sort_integer_solutions(std::vector<CoeffVector>& sols) {
    auto key = [](const CoeffVector& v) {
        long mx = 0, l1 = 0;
        for (long x : v) {
            mx = std::max(mx, std::labs(x));
            l1 += std::labs(x);
        }
        return std::make_pair(mx, l1);
    };
    std::sort(sols.begin(), sols.end(), [&](const CoeffVector& a, const CoeffVector& b) {
        auto ka = key(a), kb = key(b);
        if (ka != kb) return ka < kb;
        return a > b;
    });
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

std::vector<PrefixFilter> filters_for(const CohomologyPresentation& pres, int k) {
    std::vector<PrefixFilter> fs;
    const int n = pres.num_generators();
    for (std::uint32_t p : {2u, 3u, 5u}) {
        if (ipow(p, n) > 400'000) continue;
        auto rep = kve_mod_p(pres, k, p);
        fs.push_back(make_filter(all_mod_solutions(rep, n)));
    }
    return fs;
}

std::optional<std::vector<CoeffVector>> bounded_run(const IntTensor& T, const std::vector<PrefixFilter>& fs, int B,
                                                    std::uint64_t budget) {
    IntegerSearch s(T, fs, B, budget);
    if (!s.run()) return std::nullopt;
    return s.solutions();
}

template <class T>
std::string join_ints(const std::vector<T>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

// ---------------------------------------------------------------- public API

ParamPoly kve_normal_form(const CohomologyPresentation& pres, int k) {
    const int n = pres.num_generators();
    std::vector<ParamPoly::Term> ts;
    for (int i = 0; i < n; ++i) ts.emplace_back(Monomial::variable(i), variable(i));
    auto f = ParamPoly::from_terms(std::move(ts));
    ParamPoly fk = ParamPoly::constant(RatPoly::constant(1));
    for (int i = 0; i < k; ++i) fk = fk * f;
    return normal_form(fk, pres.gb_rational());
}

std::vector<RatPoly> kve_condition_polynomials(const CohomologyPresentation& pres, int k) {
    auto nf = kve_normal_form(pres, k);
    auto pord = MonomialOrder::grlex_default(pres.num_generators());
    std::vector<RatPoly> out;
    for (const auto& [m, c] : nf.terms()) out.push_back(primitive_integer_form(c, pord));
    return out;
}

KveReport kve_mod_p(const CohomologyPresentation& pres, int k, std::uint32_t p) {
    const int n = pres.num_generators();
    KveReport rep;
    rep.k = k;
    rep.ring = KveRing::mod(p);
    rep.completeness = Completeness::Exhaustive;
    auto tab = build_mod_table(pres, k, p);
    std::vector<std::uint32_t> a(static_cast<std::size_t>(n), 0);
    std::vector<std::uint64_t> acc;
    // normalized vectors: leading entry 1 at position lead, zeros before
    for (int lead = 0; lead < n; ++lead) {
        std::fill(a.begin(), a.end(), 0);
        a[static_cast<std::size_t>(lead)] = 1;
        const int free_count = n - lead - 1;
        const std::uint64_t total = ipow(p, free_count);
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (int i = n - 1; i > lead; --i) {
                a[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            if (vanishes_mod(tab, a, acc)) rep.solutions.emplace_back(a.begin(), a.end());
        }
    }
    std::sort(rep.solutions.begin(), rep.solutions.end(), std::greater<>());
    rep.span_basis = rref_mod(rep.solutions, p);
    rep.span_dim = static_cast<int>(rep.span_basis.size());
    rep.is_subspace = rep.solutions.size() == (ipow(p, rep.span_dim) - 1) / (p - 1);
    return rep;
}

KveReport sve_integer_bounded(const CohomologyPresentation& pres, int k, const SearchOptions& opt) {
    if (opt.bound < 1) throw std::invalid_argument("search bound must be at least 1");
    KveReport rep;
    rep.k = k;
    rep.ring = KveRing::integer();
    auto T = build_int_tensor(pres, k);
    auto fs = filters_for(pres, k);
    std::optional<std::vector<CoeffVector>> base;
    int B = opt.bound;
    for (; B >= 1; --B)
        if ((base = bounded_run(T, fs, B, opt.node_budget))) break;
    if (!base) throw std::runtime_error("integer search exceeded its budget even at bound 1");
    rep.solutions = *base;
    rep.bound = rep.scan_bound = B;
    rep.completeness = Completeness::BoundedSearch;
    if (opt.stability_scan) {
        for (int S : {2 * B, (3 * B + 1) / 2}) {
            if (S <= B) continue;
            auto scan = bounded_run(T, fs, S, opt.node_budget);
            if (!scan) continue;
            rep.scan_bound = S;
            if (scan->size() > base->size()) rep.completeness = Completeness::HeuristicInfinite;
            break;
        }
    }
    sort_integer_solutions(rep.solutions);
    return rep;
}

bool power_vanishes(const CohomologyPresentation& pres, const CoeffVector& a, int k) {
    return normal_form(linear_poly(a).pow(k), pres.gb_rational()).is_zero();
}

bool power_vanishes_mod_p(const CohomologyPresentation& pres, const CoeffVector& a, int k, std::uint32_t p) {
    return normal_form(to_mod_p(linear_poly(a).pow(k), p), pres.gb_mod(p)).is_zero();
}

MbnBounds maximal_basis_number(const CohomologyPresentation& pres, const KveReport& sve) {
    MbnBounds b;
    // An s.v.e. basis stays independent mod every prime, so each mod-p span bounds it.
    const int n = pres.num_generators();
    b.upper = n;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        double cells = std::pow(static_cast<double>(p), n);
        if (p > 2 && cells > 400000) break;
        b.upper = std::min(b.upper, kve_mod_p(pres, 2, p).span_dim);
    }
    const auto& cand = sve.solutions;
    // mod-2 bitmasks for a quick independence test
    std::vector<std::uint32_t> mask;
    for (const auto& v : cand) {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] & 1) m |= 1u << i;
        mask.push_back(m);
    }
    std::vector<LatticeVector> chosen;
    std::uint64_t nodes = 0;
    const std::uint64_t budget = 2'000'000;
    auto rec = [&](auto&& self, std::size_t start, std::vector<std::uint32_t> gf2) -> void {
        b.lower = std::max(b.lower, static_cast<int>(chosen.size()));
        if (b.lower >= b.upper || ++nodes > budget) return;
        if (static_cast<int>(chosen.size() + (cand.size() - start)) <= b.lower) return;
        for (std::size_t i = start; i < cand.size(); ++i) {
            // reduce against the current GF(2) echelon
            std::uint32_t m = mask[i];
            for (auto g : gf2)
                if ((m ^ g) < m) m ^= g;
            if (!m) continue;
            LatticeVector v(cand[i].begin(), cand[i].end());
            chosen.push_back(v);
            if (extends_to_basis(chosen)) {
                auto next = gf2;
                next.push_back(m);
                std::sort(next.begin(), next.end(), std::greater<>());
                self(self, i + 1, std::move(next));
            }
            chosen.pop_back();
            if (b.lower >= b.upper || nodes > budget) return;
        }
    };
    rec(rec, 0, {});
    return b;
}

CohomologyPresentation quotient_refine(const CohomologyPresentation& pres, const std::vector<RatPoly>& elements,
                                       const std::vector<int>& powers) {
    if (elements.size() != powers.size()) throw DimensionError("element and power lists differ in length");
    if (elements.empty()) return pres;
    auto gens = pres.full_ideal_gens();
    for (std::size_t i = 0; i < elements.size(); ++i) gens.push_back(elements[i].pow(powers[i]));
    return CohomologyPresentation::from_ideal(pres.names(), std::move(gens), pres.top_degree());
}

namespace {

std::vector<int> graded_dims_mod(const CohomologyPresentation& pres, std::uint32_t p) {
    const auto& G = pres.gb_mod(p);
    std::vector<int> dims;
    for (int k = 0; k <= pres.top_degree(); ++k) {
        int c = 0;
        for (const auto& m : monomials_of_degree(pres.num_generators(), k))
            if (G.is_standard(m)) ++c;
        dims.push_back(c);
    }
    return dims;
}

std::string mod_summary(const KveReport& r) {
    return std::to_string(r.solutions.size()) + (r.is_subspace ? "s" : "n") + std::to_string(r.span_dim);
}

}  // namespace

std::string ring_summary(const CohomologyPresentation& pres) {
    std::ostringstream os;
    os << "Q[" << join_ints(graded_dimensions(pres)) << "]";
    os << "F2[" << join_ints(graded_dims_mod(pres, 2)) << "]";
    os << "F3[" << join_ints(graded_dims_mod(pres, 3)) << "]";
    os << "deg[" << join_ints(minimal_degree_sequence(pres.full_ideal_gens(), pres.order())) << "]";
    for (auto [k, p] : std::vector<std::pair<int, std::uint32_t>>{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}})
        os << k << "/" << p << ":" << mod_summary(kve_mod_p(pres, k, p)) << ";";
    return os.str();
}

std::string InvariantFingerprint::key() const {
    std::ostringstream os;
    os << "f[" << join_ints(face_numbers) << "]deg[" << join_ints(ideal_degrees) << "]";
    for (const auto& e : kve_table) {
        os << e.k << "/" << e.ring.label() << ":";
        if (e.ring.kind == KveRing::Kind::ModP)
            os << mod_summary(e.report);
        else if (e.report.infinite())
            os << "inf";
        else if (e.report.scan_bound <= e.report.bound)
            os << "b" << e.report.solutions.size();
        else
            os << e.report.solutions.size();
        os << ";";
    }
    os << "mbn[" << mbn_lower << "," << mbn_upper << "]";
    for (const auto& [name, value] : refinements) os << "|" << name << "=" << value;
    return os.str();
}

namespace {
constexpr std::size_t kMaxRefineElements = 64;
}

InvariantFingerprint fingerprint(const CohomologyPresentation& pres, const FingerprintOptions& opt) {
    InvariantFingerprint fp;
    if (pres.has_polytope()) fp.face_numbers = pres.polytope().f_vector();
    fp.ideal_degrees = minimal_degree_sequence(pres.full_ideal_gens(), pres.order());
    const int n = pres.num_generators();
    const int d = pres.top_degree();
    const std::vector<std::pair<int, KveRing>> cells{{2, KveRing::integer()}, {2, KveRing::mod(2)},
                                                     {3, KveRing::integer()}, {3, KveRing::mod(2)},
                                                     {3, KveRing::mod(3)},    {4, KveRing::mod(2)}};
    for (const auto& [k, ring] : cells) {
        if (k > d) continue;
        KveReport r = ring.kind == KveRing::Kind::Integer ? sve_integer_bounded(pres, k, opt.search)
                                                          : kve_mod_p(pres, k, ring.prime);
        fp.kve_table.push_back({k, ring, std::move(r)});
    }
    const KveReport* sve = nullptr;
    const KveReport* cve = nullptr;
    const KveReport* sve2 = nullptr;
    for (const auto& e : fp.kve_table) {
        if (e.ring.kind == KveRing::Kind::Integer && e.k == 2) sve = &e.report;
        if (e.ring.kind == KveRing::Kind::Integer && e.k == 3) cve = &e.report;
        if (e.ring == KveRing::mod(2) && e.k == 2) sve2 = &e.report;
    }
    if (sve) {
        auto m = maximal_basis_number(pres, *sve);
        fp.mbn_lower = m.lower;
        fp.mbn_upper = m.upper;
    }
    if (!opt.refine) return fp;

    auto refine_by = [&](const std::string& tag, const KveReport* r) {
        // only sets that the stability scan confirmed finite, and small enough to enumerate quotients
        if (!r || r->infinite() || r->solutions.empty() || r->scan_bound <= r->bound) return;
        if (r->solutions.size() > kMaxRefineElements) return;
        std::vector<std::string> single, square;
        std::vector<RatPoly> all;
        for (const auto& v : r->solutions) {
            auto f = linear_poly(v);
            all.push_back(f);
            single.push_back(ring_summary(quotient_refine(pres, {f}, {1})));
            square.push_back(ring_summary(quotient_refine(pres, {f}, {2})));
        }
        std::sort(single.begin(), single.end());
        std::sort(square.begin(), square.end());
        auto join = [](const std::vector<std::string>& v) {
            std::string s;
            for (const auto& x : v) s += "{" + x + "}";
            return s;
        };
        fp.refinements.emplace_back(tag + "/x", join(single));
        fp.refinements.emplace_back(tag + "/x2", join(square));
        fp.refinements.emplace_back(tag + "/span",
                                    ring_summary(quotient_refine(pres, all, std::vector<int>(all.size(), 1))));
    };
    refine_by("sve", sve);
    refine_by("cve", cve);
    if (sve2 && !sve2->solutions.empty()) {
        std::vector<ModPoly> gens;
        for (const auto& g : pres.full_ideal_gens()) gens.push_back(to_mod_p(g, 2));
        for (const auto& v : sve2->span_basis) gens.push_back(to_mod_p(linear_poly(v), 2));
        auto G = buchberger(gens, pres.order());
        std::vector<int> dims;
        for (int k = 0; k <= d; ++k) {
            int c = 0;
            for (const auto& m : monomials_of_degree(n, k))
                if (G.is_standard(m)) ++c;
            dims.push_back(c);
        }
        fp.refinements.emplace_back("sve2/span", join_ints(dims) + "/" +
                                                     join_ints(minimal_degree_sequence(gens, pres.order())));
    }
    std::sort(fp.refinements.begin(), fp.refinements.end());
    return fp;
}

InvariantFingerprint fingerprint(const SmoothFanoPolytope& P, const FingerprintOptions& opt) {
    return fingerprint(build_presentation(P), opt);
}

}  // namespace toricfano
