#include "toricfano/report.hpp"

#include <sstream>

namespace toricfano {

namespace {

Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Json coeffs_json(const CoeffVector& a) {
    Json out = Json::array();
    for (long x : a) out.push_back(x);
    return out;
}

Json poly_list(const std::vector<RatPoly>& fs, const std::vector<std::string>& names, const MonomialOrder& ord) {
    Json out = Json::array();
    for (const auto& f : fs) out.push_back(to_string(f, names, ord));
    return out;
}

}  // namespace

Json vector_json(const LatticeVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(integer_json(x));
    return out;
}

Json matrix_json(const IntMatrix& M) {
    Json out = Json::array();
    for (std::size_t r = 0; r < M.rows(); ++r) out.push_back(vector_json(M.row(r)));
    return out;
}

std::string display_id(const SmoothFanoPolytope& P) {
    if (P.id()) return std::to_string(*P.id());
    return P.label().empty() ? P.name() : P.label();
}

Json polytope_json(const SmoothFanoPolytope& P) {
    Json j;
    if (P.id()) j["id"] = *P.id();
    if (!P.label().empty()) j["label"] = P.label();
    j["dim"] = P.dim();
    j["num_vertices"] = P.num_vertices();
    Json verts = Json::array();
    for (const auto& v : P.vertices()) verts.push_back(vector_json(v));
    j["vertices"] = verts;
    j["f_vector"] = P.f_vector();
    Json facets = Json::array();
    for (const auto& f : P.facets()) facets.push_back(format_index_set(f));
    j["facets"] = facets;
    Json mnf = Json::array();
    for (const auto& s : P.minimal_nonfaces()) mnf.push_back(format_index_set(s));
    j["minimal_nonfaces"] = mnf;
    return j;
}

Json presentation_json(const CohomologyPresentation& pres) {
    const auto& names = pres.names();
    const auto& ord = pres.order();
    Json j;
    j["generators"] = names;
    if (pres.has_polytope()) {
        Json sub = Json::object();
        const auto& s = pres.substitution();
        for (std::size_t i = 0; i < s.size(); ++i)
            sub["v" + std::to_string(i + 1)] = to_string(s[i], names, ord);
        j["substitution"] = sub;
    }
    j["ideal"] = poly_list(pres.ideal_gens(), names, ord);
    j["groebner_basis"] = poly_list(canonical_generators(pres.gb_rational()), names, ord);
    j["graded_dimensions"] = graded_dimensions(pres);
    return j;
}

Json kve_json(const KveReport& r, const std::vector<std::string>& names) {
    Json j;
    j["k"] = r.k;
    j["ring"] = r.ring.label();
    j["completeness"] = to_string(r.completeness);
    j["count"] = r.solutions.size();
    Json sols = Json::array();
    for (const auto& a : r.solutions) sols.push_back(format_linear(a, names));
    j["solutions"] = sols;
    if (r.ring.kind == KveRing::Kind::Integer) {
        j["bound"] = r.bound;
        j["scan_bound"] = r.scan_bound;
        Json vecs = Json::array();
        for (const auto& a : r.solutions) vecs.push_back(coeffs_json(a));
        j["vectors"] = vecs;
    } else {
        j["is_subspace"] = r.is_subspace;
        j["span_dim"] = r.span_dim;
        Json span = Json::array();
        for (const auto& a : r.span_basis) span.push_back(format_linear(a, names));
        j["span"] = span;
        j["all_nonzero"] = r.all_nonzero(static_cast<int>(names.size()));
    }
    return j;
}

Json mbn_json(const MbnBounds& m) {
    Json j;
    j["lower"] = m.lower;
    j["upper"] = m.upper;
    j["exact"] = m.exact();
    return j;
}

Json fingerprint_json(const InvariantFingerprint& fp, const std::vector<std::string>& names) {
    Json j;
    j["face_numbers"] = fp.face_numbers;
    j["ideal_degrees"] = fp.ideal_degrees;
    Json table = Json::array();
    for (const auto& e : fp.kve_table) table.push_back(kve_json(e.report, names));
    j["kve"] = table;
    j["mbn"] = mbn_json({fp.mbn_lower, fp.mbn_upper});
    Json refs = Json::array();
    for (const auto& [name, value] : fp.refinements) refs.push_back(Json::array({name, value}));
    j["refinements"] = refs;
    j["key"] = fp.key();
    return j;
}

Json witness_json(const EquivalenceWitness& w) {
    Json j;
    Json pi = Json::array();
    for (int x : w.pi) pi.push_back(x + 1);
    j["pi"] = pi;
    j["U"] = matrix_json(w.U);
    j["eps"] = w.eps;
    return j;
}

Json iso_json(const RingIsoWitness& w) {
    Json j;
    j["L"] = matrix_json(w.L);
    j["c1_preserving"] = w.c1_preserving;
    j["pontryagin_preserving"] = w.pontryagin_preserving;
    return j;
}

Json id_json(const SmoothFanoPolytope& P) {
    if (P.id()) return *P.id();
    return display_id(P);
}

Json partition_json(const Partition& part, const std::vector<SmoothFanoPolytope>& ps) {
    Json j;
    j["class_count"] = part.classes.size();
    Json classes = Json::array();
    Json nontrivial = Json::array();
    for (const auto& c : part.classes) {
        Json members = Json::array();
        for (auto i : c) members.push_back(id_json(ps[i]));
        if (c.size() > 1) nontrivial.push_back(members);
        classes.push_back(std::move(members));
    }
    j["classes"] = classes;
    j["merged_classes"] = nontrivial;
    Json merges = Json::array();
    for (const auto& m : part.merges) {
        Json e;
        e["a"] = id_json(ps[m.a]);
        e["b"] = id_json(ps[m.b]);
        if (m.witness) e["witness"] = witness_json(*m.witness);
        merges.push_back(std::move(e));
    }
    j["merges"] = merges;
    return j;
}

namespace {

void collect_mismatches(const Json& expected, const Json& actual, const std::string& path,
                        std::vector<std::string>& out) {
    if (expected.is_object()) {
        if (!actual.is_object()) {
            out.push_back(path.empty() ? "/" : path);
            return;
        }
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            std::string sub = path + "/" + it.key();
            auto found = actual.find(it.key());
            if (found == actual.end())
                out.push_back(sub);
            else
                collect_mismatches(it.value(), *found, sub, out);
        }
        return;
    }
    if (expected.is_array()) {
        if (!actual.is_array() || actual.size() != expected.size()) {
            out.push_back(path.empty() ? "/" : path);
            return;
        }
        for (std::size_t i = 0; i < expected.size(); ++i)
            collect_mismatches(expected[i], actual[i], path + "/" + std::to_string(i), out);
        return;
    }
    if (expected != actual) out.push_back(path.empty() ? "/" : path);
}

}  // namespace

std::vector<std::string> golden_mismatches(const Json& expected, const Json& actual) {
    std::vector<std::string> out;
    collect_mismatches(expected, actual, "", out);
    return out;
}

std::string TextTable::render() const {
    std::vector<std::size_t> width(header_.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
        if (row.size() > width.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    widen(header_);
    for (const auto& r : rows_) widen(r);
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& row) {
        std::string s;
        for (std::size_t i = 0; i < width.size(); ++i) {
            std::string cell = i < row.size() ? row[i] : "";
            s += cell;
            if (i + 1 < width.size()) s += std::string(width[i] - cell.size() + 2, ' ');
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        os << s << '\n';
    };
    line(header_);
    std::size_t total = 0;
    for (auto w : width) total += w + 2;
    os << std::string(total >= 2 ? total - 2 : 0, '-') << '\n';
    for (const auto& r : rows_) line(r);
    return os.str();
}

}  // namespace toricfano
