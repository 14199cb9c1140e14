#include "toricfano/polytope.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace toricfano {

ParseError::ParseError(const std::string& msg, int line)
    : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& c : checks) {
        if (c.passed) continue;
        if (!first) os << "; ";
        first = false;
        os << c.name;
        if (!c.detail.empty()) os << " (" << c.detail << ')';
    }
    return first ? std::string("ok") : os.str();
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("invalid smooth Fano polytope: " + report.summary()), report_(std::move(report)) {}

namespace {

template <class T>
T det_generic(std::vector<std::vector<T>> a) {
    const std::size_t n = a.size();
    T det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            T f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

// Normal of the affine hull of d points in dimension d (zero if degenerate).
std::vector<Rational> hyperplane_normal(const std::vector<std::vector<Rational>>& pts) {
    const std::size_t d = pts.size();
    std::vector<Rational> n(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<std::vector<Rational>> minor;
        for (std::size_t i = 1; i < d; ++i) {
            std::vector<Rational> row;
            for (std::size_t c = 0; c < d; ++c)
                if (c != j) row.push_back(pts[i][c] - pts[0][c]);
            minor.push_back(std::move(row));
        }
        Rational m = det_generic(minor);
        n[j] = (j % 2 == 0) ? m : Rational(-m);
    }
    return n;
}

Integer int_det(const std::vector<LatticeVector>& cols) { return determinant(IntMatrix::from_columns(cols)); }

std::vector<Rational> to_rational(const LatticeVector& v) { return {v.begin(), v.end()}; }

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Calls f(subset) for every k-subset of {0..m-1} in lexicographic order.
template <class F>
void for_each_subset(int m, int k, F&& f) {
    if (k > m || k < 0) return;
    IndexSet s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
    for (;;) {
        f(s);
        int i = k - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) return;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::size_t affine_rank(const std::vector<std::vector<Rational>>& pts) {
    if (pts.empty()) return 0;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rational> r(pts[i].size());
        for (std::size_t c = 0; c < r.size(); ++c) r[c] = pts[i][c] - pts[0][c];
        rows.push_back(std::move(r));
    }
    std::size_t rank = 0;
    const std::size_t cols = pts[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

struct HyperplaneScan {
    std::vector<IndexSet> facets;            // supporting hyperplanes meeting exactly d vertices
    std::vector<IndexSet> fat_faces;         // supporting hyperplanes meeting more than d vertices
    std::vector<bool> origin_inside;
};

HyperplaneScan scan_hyperplanes(const std::vector<std::vector<Rational>>& pts, std::size_t d) {
    HyperplaneScan out;
    const int m = static_cast<int>(pts.size());
    std::set<IndexSet> seen_fat;
    for_each_subset(m, static_cast<int>(d), [&](const IndexSet& s) {
        std::vector<std::vector<Rational>> sub;
        for (int i : s) sub.push_back(pts[static_cast<std::size_t>(i)]);
        auto n = hyperplane_normal(sub);
        if (std::all_of(n.begin(), n.end(), [](const Rational& x) { return x == 0; })) return;
        Rational h = dot(n, sub[0]);
        bool pos = false, neg = false;
        IndexSet on;
        for (int i = 0; i < m; ++i) {
            Rational v = dot(n, pts[static_cast<std::size_t>(i)]) - h;
            if (v == 0)
                on.push_back(i);
            else if (v > 0)
                pos = true;
            else
                neg = true;
        }
        if (pos && neg) return;
        if (on.size() > d) {
            // only record once, from its lexicographically first spanning subset
            if (seen_fat.insert(on).second) out.fat_faces.push_back(on);
            return;
        }
        out.facets.push_back(s);
        // origin value is -h; it must sit strictly on the side of the other vertices
        out.origin_inside.push_back(pos ? (-h > 0) : (-h < 0));
    });
    return out;
}

}  // namespace

ValidationReport validate_smooth_fano(const std::vector<LatticeVector>& vertices) {
    ValidationReport rep;
    auto add = [&](const std::string& name, bool ok, const std::string& detail = {}) {
        rep.checks.push_back({name, ok, ok ? std::string() : detail});
    };
    const std::size_t m = vertices.size();
    const std::size_t d = m ? vertices[0].size() : 0;
    bool shape = m > 0 && d > 0 &&
                 std::all_of(vertices.begin(), vertices.end(), [&](const auto& v) { return v.size() == d; });
    add("shape", shape, "vertices must share a positive dimension");
    if (!shape) return rep;

    std::string bad;
    for (std::size_t i = 0; i < m; ++i)
        if (!is_primitive(vertices[i])) bad += (bad.empty() ? "" : ",") + std::to_string(i + 1);
    add("primitive", bad.empty(), "non-primitive vertices " + bad);

    bad.clear();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (vertices[i] == vertices[j]) bad += (bad.empty() ? "" : ",") + std::to_string(j + 1);
    add("distinct", bad.empty(), "repeated vertices " + bad);

    std::vector<std::vector<Rational>> pts;
    for (const auto& v : vertices) pts.push_back(to_rational(v));
    bool full = m >= d + 1 && affine_rank(pts) == d;
    add("full_dimensional", full, "vertices lie in an affine hyperplane");
    if (!full) return rep;

    auto scan = scan_hyperplanes(pts, d);
    add("simplicial", scan.fat_faces.empty(),
        scan.fat_faces.empty() ? "" : "face " + format_index_set(scan.fat_faces.front()) + " has more than d vertices");

    std::vector<bool> covered(m, false);
    for (const auto& f : scan.facets)
        for (int i : f) covered[static_cast<std::size_t>(i)] = true;
    for (const auto& f : scan.fat_faces)
        for (int i : f) covered[static_cast<std::size_t>(i)] = true;
    bad.clear();
    for (std::size_t i = 0; i < m; ++i)
        if (!covered[i]) bad += (bad.empty() ? "" : ",") + std::to_string(i + 1);
    add("convex_position", bad.empty(), "points not on the boundary " + bad);

    bool interior = !scan.facets.empty() || !scan.fat_faces.empty();
    for (bool o : scan.origin_inside)
        if (!o) interior = false;
    // a non-simplicial supporting plane also bounds the polytope; check it too
    for (const auto& f : scan.fat_faces) {
        std::vector<std::vector<Rational>> sub;
        for (std::size_t k = 0; k < d; ++k) sub.push_back(pts[static_cast<std::size_t>(f[k])]);
        auto n = hyperplane_normal(sub);
        Rational h = dot(n, sub[0]);
        Rational sgn = 0;
        for (std::size_t i = 0; i < m && sgn == 0; ++i) sgn = dot(n, pts[i]) - h;
        if ((sgn > 0 && -h <= 0) || (sgn < 0 && -h >= 0)) interior = false;
    }
    add("interior_origin", interior, "origin is not strictly inside");

    bad.clear();
    for (const auto& f : scan.facets) {
        std::vector<LatticeVector> cols;
        for (int i : f) cols.push_back(vertices[static_cast<std::size_t>(i)]);
        Integer det = int_det(cols);
        if (abs(det) != 1) {
            if (!bad.empty()) bad += ", ";
            bad += format_index_set(f) + " det " + det.get_str();
        }
    }
    add("facet_unimodular", bad.empty(), bad);
    return rep;
}

std::vector<IndexSet> enumerate_facets(const std::vector<LatticeVector>& vertices) {
    if (vertices.empty()) throw DimensionError("no vertices");
    const std::size_t d = vertices[0].size();
    std::vector<std::vector<Rational>> pts;
    for (const auto& v : vertices) pts.push_back(to_rational(v));
    if (vertices.size() < d + 1 || affine_rank(pts) != d) {
        ValidationReport rep;
        rep.checks.push_back({"full_dimensional", false, "vertices are not full-dimensional"});
        throw ValidationError(rep);
    }
    return scan_hyperplanes(pts, d).facets;
}

std::vector<IndexSet> minimal_nonfaces(const std::vector<IndexSet>& facets, int num_vertices) {
    std::vector<std::uint64_t> masks;
    std::size_t d = 0;
    for (const auto& f : facets) {
        std::uint64_t mk = 0;
        for (int i : f) mk |= std::uint64_t{1} << i;
        masks.push_back(mk);
        d = std::max(d, f.size());
    }
    auto is_face = [&](std::uint64_t s) {
        return std::any_of(masks.begin(), masks.end(), [&](std::uint64_t f) { return (s & f) == s; });
    };
    std::vector<IndexSet> out;
    for (int k = 1; k <= std::min<int>(num_vertices, static_cast<int>(d) + 1); ++k)
        for_each_subset(num_vertices, k, [&](const IndexSet& s) {
            std::uint64_t mk = 0;
            for (int i : s) mk |= std::uint64_t{1} << i;
            if (is_face(mk)) return;
            for (int i : s)
                if (!is_face(mk & ~(std::uint64_t{1} << i))) return;
            out.push_back(s);
        });
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_index_set(const IndexSet& s) {
    bool wide = std::any_of(s.begin(), s.end(), [](int i) { return i >= 9; });
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (wide && k) out += ',';
        out += std::to_string(s[k] + 1);
    }
    return out;
}

SmoothFanoPolytope::SmoothFanoPolytope(std::optional<int> id, std::vector<LatticeVector> vertices, std::string label)
    : id_(id), label_(std::move(label)), vertices_(std::move(vertices)) {
    ValidationReport rep = validate_smooth_fano(vertices_);
    if (!rep.ok()) throw ValidationError(rep);
    if (vertices_.size() > 64) throw DimensionError("at most 64 vertices supported");
    dim_ = static_cast<int>(vertices_[0].size());
    facets_ = enumerate_facets(vertices_);
    minimal_nonfaces_ = toricfano::minimal_nonfaces(facets_, num_vertices());
}

std::string SmoothFanoPolytope::name() const {
    if (!label_.empty()) return label_;
    if (id_) return std::to_string(*id_);
    return "?";
}

bool SmoothFanoPolytope::is_face(const IndexSet& s) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const IndexSet& f) { return std::includes(f.begin(), f.end(), s.begin(), s.end()); });
}

std::vector<long> SmoothFanoPolytope::f_vector() const {
    std::vector<std::set<IndexSet>> faces(static_cast<std::size_t>(dim_));
    for (const auto& f : facets_)
        for (std::uint64_t mk = 1; mk < (std::uint64_t{1} << f.size()); ++mk) {
            IndexSet s;
            for (std::size_t k = 0; k < f.size(); ++k)
                if (mk >> k & 1) s.push_back(f[k]);
            faces[s.size() - 1].insert(s);
        }
    std::vector<long> out;
    for (const auto& layer : faces) out.push_back(static_cast<long>(layer.size()));
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

long parse_long(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'", line);
    }
}

}  // namespace

std::vector<PolytopeRecord> parse_records(const std::string& text) {
    std::vector<PolytopeRecord> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_content = [&](std::vector<std::string>& toks) {
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            toks = tokens_of(line);
            if (!toks.empty()) return true;
        }
        return false;
    };
    std::vector<std::string> toks;
    while (next_content(toks)) {
        PolytopeRecord rec;
        rec.line = lineno;
        if (toks.size() < 6 || toks[0] != "id" || toks[2] != "dim" || toks[4] != "vertices")
            throw ParseError("expected 'id <int> dim <int> vertices <int>'", lineno);
        rec.id = static_cast<int>(parse_long(toks[1], lineno));
        long d = parse_long(toks[3], lineno);
        long m = parse_long(toks[5], lineno);
        if (toks.size() == 8 && toks[6] == "name")
            rec.label = toks[7];
        else if (toks.size() != 6)
            throw ParseError("unexpected trailing tokens in header", lineno);
        if (d < 1 || m < 1) throw ParseError("dimension and vertex count must be positive", lineno);
        rec.dim = static_cast<int>(d);
        for (long k = 0; k < m; ++k) {
            if (!next_content(toks)) throw ParseError("unexpected end of input inside record", lineno);
            if (static_cast<long>(toks.size()) != d)
                throw ParseError("expected " + std::to_string(d) + " coordinates", lineno);
            LatticeVector v;
            for (const auto& t : toks) v.emplace_back(parse_long(t, lineno));
            rec.vertices.push_back(std::move(v));
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<SmoothFanoPolytope> parse_polytopes(const std::string& text) {
    std::vector<SmoothFanoPolytope> out;
    for (auto& rec : parse_records(text)) {
        try {
            out.emplace_back(rec.id, std::move(rec.vertices), rec.label);
        } catch (const ValidationError& e) {
            throw ParseError("record id " + std::to_string(rec.id) + ": " + e.what(), rec.line);
        }
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<SmoothFanoPolytope> load_polytopes(const std::string& path) {
    auto text = read_text_file(path);
    try {
        return parse_polytopes(text);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line());
    }
}

std::string format_polytopes(const std::vector<SmoothFanoPolytope>& ps) {
    std::ostringstream os;
    for (std::size_t k = 0; k < ps.size(); ++k) {
        const auto& p = ps[k];
        if (k) os << '\n';
        os << "id " << p.id().value_or(0) << " dim " << p.dim() << " vertices " << p.num_vertices();
        if (!p.label().empty()) os << " name " << p.label();
        os << '\n';
        for (const auto& v : p.vertices()) {
            for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
            os << '\n';
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- duals and volumes

RationalPolytope::RationalPolytope(std::vector<Point> vertices, std::vector<IndexSet> facets)
    : dim_(vertices.empty() ? 0 : static_cast<int>(vertices[0].size())),
      vertices_(std::move(vertices)),
      facets_(std::move(facets)) {}

RationalPolytope RationalPolytope::from_vertices(std::vector<Point> vertices) {
    if (vertices.empty()) throw DimensionError("empty polytope");
    const std::size_t d = vertices[0].size();
    if (vertices.size() < d + 1 || affine_rank(vertices) != d) throw DimensionError("polytope is not full-dimensional");
    std::set<IndexSet> facets;
    const int m = static_cast<int>(vertices.size());
    for_each_subset(m, static_cast<int>(d), [&](const IndexSet& s) {
        std::vector<std::vector<Rational>> sub;
        for (int i : s) sub.push_back(vertices[static_cast<std::size_t>(i)]);
        auto n = hyperplane_normal(sub);
        if (std::all_of(n.begin(), n.end(), [](const Rational& x) { return x == 0; })) return;
        Rational h = dot(n, sub[0]);
        bool pos = false, neg = false;
        IndexSet on;
        for (int i = 0; i < m; ++i) {
            Rational v = dot(n, vertices[static_cast<std::size_t>(i)]) - h;
            if (v == 0) on.push_back(i);
            else if (v > 0) pos = true;
            else neg = true;
        }
        if (!(pos && neg)) facets.insert(on);
    });
    RationalPolytope q;
    q.dim_ = static_cast<int>(d);
    q.vertices_ = std::move(vertices);
    q.facets_.assign(facets.begin(), facets.end());
    return q;
}

bool RationalPolytope::is_lattice() const {
    for (const auto& v : vertices_)
        for (const auto& c : v)
            if (c.get_den() != 1) return false;
    return true;
}

RationalPolytope dual_polytope(const SmoothFanoPolytope& P) {
    const std::size_t d = static_cast<std::size_t>(P.dim());
    std::vector<RationalPolytope::Point> verts;
    for (const auto& f : P.facets()) {
        // rows v_i^T u = -1
        IntMatrix A(d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) A.at(r, c) = P.vertex(f[r])[c];
        auto u = solve_rational(A, std::vector<Rational>(d, Rational(-1)));
        if (!u) throw PreconditionError("degenerate facet in dual computation");
        for (const auto& c : *u)
            if (c.get_den() != 1) throw PreconditionError("polytope is not reflexive");
        verts.push_back(std::move(*u));
    }
    std::vector<IndexSet> facets;
    for (int i = 0; i < P.num_vertices(); ++i) {
        IndexSet s;
        for (std::size_t k = 0; k < P.facets().size(); ++k)
            if (std::binary_search(P.facets()[k].begin(), P.facets()[k].end(), i)) s.push_back(static_cast<int>(k));
        facets.push_back(std::move(s));
    }
    return RationalPolytope(std::move(verts), std::move(facets));
}

namespace {

struct Triangulator {
    const RationalPolytope& Q;

    std::vector<std::vector<Rational>> points(const IndexSet& s) const {
        std::vector<std::vector<Rational>> out;
        for (int i : s) out.push_back(Q.vertices()[static_cast<std::size_t>(i)]);
        return out;
    }

    // Pulling triangulation of a face of dimension k, fanned from its first vertex.
    std::vector<IndexSet> run(const IndexSet& face, std::size_t k) const {
        if (k == 0) return {IndexSet{face.front()}};
        const int apex = face.front();
        std::set<IndexSet> subfaces;
        for (const auto& g : Q.facets()) {
            IndexSet inter;
            std::set_intersection(face.begin(), face.end(), g.begin(), g.end(), std::back_inserter(inter));
            if (inter.size() < k || inter == face) continue;
            if (std::binary_search(inter.begin(), inter.end(), apex)) continue;
            if (affine_rank(points(inter)) != k - 1) continue;
            subfaces.insert(inter);
        }
        std::vector<IndexSet> out;
        for (const auto& sf : subfaces)
            for (auto simplex : run(sf, k - 1)) {
                simplex.push_back(apex);
                out.push_back(std::move(simplex));
            }
        return out;
    }
};

}  // namespace

Integer normalized_volume(const RationalPolytope& Q) {
    const std::size_t d = static_cast<std::size_t>(Q.dim());
    if (d == 0 || Q.vertices().size() < d + 1 || affine_rank(Q.vertices()) != d)
        throw DimensionError("polytope is not full-dimensional");
    Triangulator tri{Q};
    Rational total = 0;
    for (const auto& facet : Q.facets()) {
        for (const auto& simplex : tri.run(facet, d - 1)) {
            std::vector<std::vector<Rational>> m;
            for (int i : simplex) m.push_back(Q.vertices()[static_cast<std::size_t>(i)]);
            total += abs(det_generic(m));
        }
    }
    if (total.get_den() != 1) throw PreconditionError("normalized volume is not an integer");
    return total.get_num();
}

SmoothFanoPolytope direct_sum(const SmoothFanoPolytope& P, const SmoothFanoPolytope& Q) {
    const std::size_t p = static_cast<std::size_t>(P.dim()), q = static_cast<std::size_t>(Q.dim());
    std::vector<LatticeVector> verts;
    for (const auto& v : P.vertices()) {
        LatticeVector w(v);
        w.resize(p + q, 0);
        verts.push_back(std::move(w));
    }
    for (const auto& v : Q.vertices()) {
        LatticeVector w(p, 0);
        w.insert(w.end(), v.begin(), v.end());
        verts.push_back(std::move(w));
    }
    return SmoothFanoPolytope(std::nullopt, std::move(verts), "(" + P.name() + "+" + Q.name() + ")");
}

}  // namespace toricfano
