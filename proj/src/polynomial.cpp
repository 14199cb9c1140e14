#include "toricfano/groebner.hpp"
#include "toricfano/polynomial.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace toricfano {

MonomialOrder MonomialOrder::grlex(std::vector<int> ascending) {
    std::vector<int> seen(ascending.size(), 0);
    for (int v : ascending) {
        if (v < 0 || v >= static_cast<int>(ascending.size()) || seen[static_cast<std::size_t>(v)]++)
            throw DimensionError("variable order is not a permutation");
    }
    MonomialOrder o;
    o.desc_.assign(ascending.rbegin(), ascending.rend());
    return o;
}

MonomialOrder MonomialOrder::grlex_default(int nvars) {
    std::vector<int> asc(static_cast<std::size_t>(nvars));
    std::iota(asc.begin(), asc.end(), 0);
    return grlex(std::move(asc));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    for (int v : desc_) {
        auto ea = a.e[static_cast<std::size_t>(v)], eb = b.e[static_cast<std::size_t>(v)];
        if (ea != eb) return ea <=> eb;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering grlex_compare(const Monomial& m1, const Monomial& m2, const std::vector<int>& ascending_vars) {
    return MonomialOrder::grlex(ascending_vars).compare(m1, m2);
}

ModP ModP::from_rational(const Rational& q, std::uint32_t prime) {
    mpz_class num = q.get_num() % prime, den = q.get_den() % prime;
    if (den == 0) throw std::domain_error("denominator vanishes mod " + std::to_string(prime));
    ModP n(num.get_si(), prime), d(den.get_si(), prime);
    return n * inverse(d);
}

ModP inverse(const ModP& a) {
    if (a.v == 0) throw std::domain_error("inverse of zero mod p");
    // Fermat
    std::uint64_t result = 1, base = a.v, e = a.p - 2;
    while (e) {
        if (e & 1) result = result * base % a.p;
        base = base * base % a.p;
        e >>= 1;
    }
    return ModP(static_cast<long long>(result), a.p);
}

std::string coeff_to_string(const Rational& q) { return q.get_str(); }
std::string coeff_to_string(const ModP& a) { return std::to_string(a.v); }

RatPoly variable(int i) { return RatPoly::term(Monomial::variable(i), 1); }

RatPoly linear_form(const std::vector<Integer>& coeffs) {
    std::vector<RatPoly::Term> ts;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) ts.emplace_back(Monomial::variable(static_cast<int>(i)), Rational(coeffs[i]));
    return RatPoly::from_terms(std::move(ts));
}

ModPoly to_mod_p(const RatPoly& f, std::uint32_t p) {
    return f.map_coefficients<ModP>([p](const Rational& q) { return ModP::from_rational(q, p); });
}

RatPoly lift_mod_p(const ModPoly& f) {
    return f.map_coefficients<Rational>([](const ModP& a) {
        long v = static_cast<long>(a.v);
        if (2 * v > static_cast<long>(a.p)) v -= static_cast<long>(a.p);
        return Rational(v);
    });
}

RatPoly primitive_integer_form(const RatPoly& f, const MonomialOrder& ord) {
    if (f.is_zero()) return f;
    mpz_class den = 1, num = 0;
    for (const auto& t : f.terms()) den = lcm(den, t.second.get_den());
    for (const auto& t : f.terms()) num = gcd(num, t.second.get_num() * (den / t.second.get_den()));
    Rational scale(den, num);
    scale.canonicalize();
    if (f.leading_term(ord).second < 0) scale = -scale;
    return f.scaled(scale);
}

std::vector<RatPoly> canonical_generators(const GroebnerBasis<Rational>& G) {
    std::vector<RatPoly> out;
    for (const auto& g : G.generators) out.push_back(primitive_integer_form(g, G.order));
    return out;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    Monomial m;
    // recursive composition enumeration
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == nvars - 1) {
            m.e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(left);
            out.push_back(m);
            return;
        }
        for (int k = left; k >= 0; --k) {
            m.e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(k);
            self(self, var + 1, left - k);
        }
        m.e[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

// ---------------------------------------------------------------- display

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += '*';
        s += i < names.size() ? names[i] : "t" + std::to_string(i + 1);
        if (m.e[i] > 1) s += '^' + std::to_string(m.e[i]);
    }
    return s;
}

namespace {

template <class C>
std::vector<typename Polynomial<C>::Term> sorted_desc(const Polynomial<C>& f, const MonomialOrder& ord) {
    auto ts = f.terms();
    std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
    return ts;
}

std::string join_terms(const std::vector<std::pair<mpz_class, std::string>>& parts) {
    if (parts.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, mono] : parts) {
        mpz_class a = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (mono.empty())
            out += a.get_str();
        else if (a == 1)
            out += mono;
        else
            out += a.get_str() + "*" + mono;
    }
    return out;
}

}  // namespace

std::string to_string(const RatPoly& f, const std::vector<std::string>& names, const MonomialOrder& ord) {
    mpz_class den = 1;
    for (const auto& t : f.terms()) den = lcm(den, t.second.get_den());
    std::vector<std::pair<mpz_class, std::string>> parts;
    for (const auto& [m, c] : sorted_desc(f, ord)) {
        Rational v = c * den;
        parts.emplace_back(v.get_num(), monomial_to_string(m, names));
    }
    return join_terms(parts);
}

std::string to_string(const ModPoly& f, const std::vector<std::string>& names, const MonomialOrder& ord) {
    return to_string(lift_mod_p(f), names, ord);
}

std::string to_string(const ParamPoly& f, const std::vector<std::string>& names, const MonomialOrder& ord,
                      const std::vector<std::string>& param_names) {
    if (f.is_zero()) return "0";
    std::string out;
    auto pord = MonomialOrder::grlex_default(static_cast<int>(param_names.size()));
    bool first = true;
    for (const auto& [m, c] : sorted_desc(f, ord)) {
        if (!first) out += " + ";
        first = false;
        std::string coeff = to_string(c, param_names, pord);
        std::string mono = monomial_to_string(m, names);
        out += "(" + coeff + ")";
        if (!mono.empty()) out += "*" + mono;
    }
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& names) : s_(text), names_(names) {}

    RatPoly parse_all() {
        RatPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

    std::vector<RatPoly> parse_list() {
        std::vector<RatPoly> out;
        skip();
        if (pos_ == s_.size()) return out;
        for (;;) {
            out.push_back(expr());
            skip();
            if (pos_ == s_.size()) break;
            if (s_[pos_] != ',') fail("expected ','");
            ++pos_;
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw PolynomialParseError(msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_factor_start() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
    }

    RatPoly expr() {
        skip();
        RatPoly acc;
        bool negate = false;
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            negate = s_[pos_] == '-';
            ++pos_;
        }
        RatPoly t = term();
        acc = negate ? -t : t;
        for (;;) {
            skip();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
            bool minus = s_[pos_] == '-';
            ++pos_;
            RatPoly u = term();
            acc = minus ? acc - u : acc + u;
        }
        return acc;
    }

    RatPoly term() {
        if (!at_factor_start()) fail("expected a factor");
        RatPoly acc = factor();
        for (;;) {
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (at_factor_start()) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    RatPoly factor() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        RatPoly base;
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            base = expr();
            skip();
            if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
            ++pos_;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            base = RatPoly::constant(Rational(mpz_class(s_.substr(start, pos_ - start))));
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_++;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto it = std::find(names_.begin(), names_.end(), name);
            if (it == names_.end()) fail("unknown variable '" + name + "'");
            base = variable(static_cast<int>(it - names_.begin()));
        } else {
            fail("unexpected character");
        }
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
        }
        return base;
    }

    std::string s_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

}  // namespace

RatPoly parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
    return Parser(text, names).parse_all();
}

std::vector<RatPoly> parse_polynomial_list(const std::string& text, const std::vector<std::string>& names) {
    return Parser(text, names).parse_list();
}

}  // namespace toricfano
