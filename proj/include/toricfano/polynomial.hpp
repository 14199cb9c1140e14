#pragma once

#include "toricfano/lattice.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace toricfano {

inline constexpr int kMaxVars = 16;

struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};

    static Monomial variable(int i, int power = 1) {
        Monomial m;
        m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(power);
        return m;
    }
    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const { return degree() == 0; }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[static_cast<std::size_t>(i)] > o.e[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            int s = e[static_cast<std::size_t>(i)] + o.e[static_cast<std::size_t>(i)];
            if (s > 255) throw DimensionError("exponent overflow");
            r.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s);
        }
        return r;
    }
    // Exact quotient; caller guarantees o divides *this.
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
    // Storage order only; not a monomial order.
    auto operator<=>(const Monomial&) const = default;
};

// Graded lexicographic order: total degree first, then exponents compared from
// the largest variable down.
class MonomialOrder {
public:
    MonomialOrder() = default;
    // ascending[0] is the smallest variable.
    static MonomialOrder grlex(std::vector<int> ascending);
    static MonomialOrder grlex_default(int nvars);

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    int nvars() const { return static_cast<int>(desc_.size()); }
    const std::vector<int>& descending() const { return desc_; }
    bool operator==(const MonomialOrder&) const = default;

private:
    std::vector<int> desc_;
};

std::strong_ordering grlex_compare(const Monomial& m1, const Monomial& m2, const std::vector<int>& ascending_vars);

// ---------------------------------------------------------------- coefficients

// Element of Z/p with its modulus carried along (no global state).
struct ModP {
    std::uint32_t v = 0;
    std::uint32_t p = 2;

    ModP() = default;
    ModP(long long value, std::uint32_t prime) : p(prime) {
        long long r = value % static_cast<long long>(prime);
        if (r < 0) r += prime;
        v = static_cast<std::uint32_t>(r);
    }
    static ModP from_rational(const Rational& q, std::uint32_t prime);

    ModP operator+(const ModP& o) const { return raw((v + o.v) % p); }
    ModP operator-(const ModP& o) const { return raw((v + p - o.v) % p); }
    ModP operator-() const { return raw((p - v) % p); }
    ModP operator*(const ModP& o) const {
        return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * o.v % p));
    }
    ModP& operator+=(const ModP& o) { return *this = *this + o; }
    ModP& operator-=(const ModP& o) { return *this = *this - o; }
    ModP& operator*=(const ModP& o) { return *this = *this * o; }
    bool operator==(const ModP& o) const { return v == o.v; }

private:
    ModP raw(std::uint32_t x) const {
        ModP r;
        r.v = x;
        r.p = p;
        return r;
    }
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const ModP& a) { return a.v == 0; }
inline Rational inverse(const Rational& q) { return 1 / q; }
ModP inverse(const ModP& a);
std::string coeff_to_string(const Rational& q);
std::string coeff_to_string(const ModP& a);

// ---------------------------------------------------------------- polynomials

template <class C>
class Polynomial;
template <class C>
bool is_zero(const Polynomial<C>& p);

template <class C>
class Polynomial {
public:
    using Term = std::pair<Monomial, C>;

    Polynomial() = default;
    static Polynomial constant(const C& c) { return term(Monomial{}, c); }
    static Polynomial term(const Monomial& m, const C& c) {
        Polynomial p;
        if (!toricfano::is_zero(c)) p.terms_.emplace_back(m, c);
        return p;
    }
    static Polynomial from_terms(std::vector<Term> ts) {
        Polynomial p;
        p.terms_ = std::move(ts);
        p.normalize();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    C coefficient(const Monomial& m, const C& zero) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& k) { return t.first < k; });
        return (it != terms_.end() && it->first == m) ? it->second : zero;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.first.degree());
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.front().first.degree();
        return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first.degree() == d; });
    }

    // Index of the leading term under ord; requires nonzero.
    std::size_t leading_index(const MonomialOrder& ord) const {
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (ord.less(terms_[best].first, terms_[i].first)) best = i;
        return best;
    }
    const Term& leading_term(const MonomialOrder& ord) const { return terms_[leading_index(ord)]; }

    Polynomial operator+(const Polynomial& o) const { return merge(o, false); }
    Polynomial operator-(const Polynomial& o) const { return merge(o, true); }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Term> prod;
        prod.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) prod.emplace_back(a.first * b.first, a.second * b.second);
        return from_terms(std::move(prod));
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    template <class S>
    Polynomial scaled(const S& s) const {
        std::vector<Term> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) ts.emplace_back(t.first, t.second * s);
        return from_terms(std::move(ts));
    }
    Polynomial shifted(const Monomial& m) const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.first = t.first * m;
        return r;
    }
    Polynomial pow(int k) const {
        Polynomial r = constant(one_like());
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    template <class D, class F>
    Polynomial<D> map_coefficients(F&& f) const {
        std::vector<typename Polynomial<D>::Term> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) ts.emplace_back(t.first, f(t.second));
        return Polynomial<D>::from_terms(std::move(ts));
    }

private:
    template <class>
    friend class Polynomial;

    C one_like() const;

    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second = out.back().second + t.second;
            else
                out.push_back(std::move(t));
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return toricfano::is_zero(t.second); }),
                  out.end());
        terms_ = std::move(out);
    }

    Polynomial merge(const Polynomial& o, bool subtract) const {
        Polynomial r;
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
                r.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
                r.terms_.emplace_back(o.terms_[j].first, subtract ? C(-o.terms_[j].second) : o.terms_[j].second);
                ++j;
            } else {
                C c = subtract ? C(terms_[i].second - o.terms_[j].second) : C(terms_[i].second + o.terms_[j].second);
                if (!toricfano::is_zero(c)) r.terms_.emplace_back(terms_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

using RatPoly = Polynomial<Rational>;
using ModPoly = Polynomial<ModP>;
// Coefficients are polynomials in parameters a_1..a_s over Q.
using ParamPoly = Polynomial<RatPoly>;

template <class C>
bool is_zero(const Polynomial<C>& p) {
    return p.is_zero();
}

template <>
inline Rational Polynomial<Rational>::one_like() const {
    return 1;
}
template <>
inline ModP Polynomial<ModP>::one_like() const {
    return ModP(1, terms_.empty() ? 2u : terms_.front().second.p);
}
template <>
inline RatPoly Polynomial<RatPoly>::one_like() const {
    return RatPoly::constant(1);
}

// Rational coefficient scaled into a parametric coefficient.
inline RatPoly operator*(const RatPoly& p, const Rational& q) { return p.scaled(q); }

RatPoly variable(int i);
RatPoly linear_form(const std::vector<Integer>& coeffs);
ModPoly to_mod_p(const RatPoly& f, std::uint32_t p);
RatPoly lift_mod_p(const ModPoly& f);
// Clears denominators, makes content 1 and the leading coefficient positive.
RatPoly primitive_integer_form(const RatPoly& f, const MonomialOrder& ord);
// Substitutes x_i -> images[i].
template <class C>
Polynomial<C> substitute(const Polynomial<C>& f, const std::vector<Polynomial<C>>& images);

// Display: descending order, integer coefficients after clearing denominators.
std::string to_string(const RatPoly& f, const std::vector<std::string>& names, const MonomialOrder& ord);
std::string to_string(const ModPoly& f, const std::vector<std::string>& names, const MonomialOrder& ord);
std::string to_string(const ParamPoly& f, const std::vector<std::string>& names, const MonomialOrder& ord,
                      const std::vector<std::string>& param_names);
std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

class PolynomialParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Grammar: sums of products with implicit multiplication, parentheses and ^.
// Variable names are a letter optionally followed by digits.
RatPoly parse_polynomial(const std::string& text, const std::vector<std::string>& names);
std::vector<RatPoly> parse_polynomial_list(const std::string& text, const std::vector<std::string>& names);

std::vector<Monomial> monomials_of_degree(int nvars, int degree);

template <class C>
Polynomial<C> substitute(const Polynomial<C>& f, const std::vector<Polynomial<C>>& images) {
    Polynomial<C> out;
    for (const auto& [m, c] : f.terms()) {
        Polynomial<C> t = Polynomial<C>::constant(c);
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            if (m.e[i] == 0) continue;
            if (i >= images.size()) throw DimensionError("substitution misses a variable");
            for (int k = 0; k < m.e[i]; ++k) t = t * images[i];
        }
        out += t;
    }
    return out;
}

}  // namespace toricfano
