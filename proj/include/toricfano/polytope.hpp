#pragma once

#include "toricfano/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricfano {

// Sorted 0-based vertex indices.
using IndexSet = std::vector<int>;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line);
    int line() const { return line_; }

private:
    int line_;
};

struct ValidationCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool ok() const;
    std::string summary() const;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

class RationalPolytope {
public:
    using Point = std::vector<Rational>;

    // Facets computed by brute force over vertex hyperplanes.
    static RationalPolytope from_vertices(std::vector<Point> vertices);
    // Facets supplied as vertex-index sets.
    RationalPolytope(std::vector<Point> vertices, std::vector<IndexSet> facets);

    int dim() const { return dim_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<IndexSet>& facets() const { return facets_; }
    bool is_lattice() const;

private:
    RationalPolytope() = default;
    int dim_ = 0;
    std::vector<Point> vertices_;
    std::vector<IndexSet> facets_;
};

class SmoothFanoPolytope {
public:
    // Throws ValidationError when any invariant fails.
    SmoothFanoPolytope(std::optional<int> id, std::vector<LatticeVector> vertices, std::string label = {});

    std::optional<int> id() const { return id_; }
    const std::string& label() const { return label_; }
    std::string name() const;
    int dim() const { return dim_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    const std::vector<LatticeVector>& vertices() const { return vertices_; }
    const LatticeVector& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
    const std::vector<IndexSet>& facets() const { return facets_; }
    const std::vector<IndexSet>& minimal_nonfaces() const { return minimal_nonfaces_; }
    bool is_face(const IndexSet& s) const;
    // f_0 .. f_{d-1}
    std::vector<long> f_vector() const;

private:
    std::optional<int> id_;
    std::string label_;
    int dim_ = 0;
    std::vector<LatticeVector> vertices_;
    std::vector<IndexSet> facets_;
    std::vector<IndexSet> minimal_nonfaces_;
};

// One unvalidated record of the text format.
struct PolytopeRecord {
    int id = 0;
    int dim = 0;
    std::vector<LatticeVector> vertices;
    std::string label;
    int line = 0;  // header line
};
std::vector<PolytopeRecord> parse_records(const std::string& text);
std::string read_text_file(const std::string& path);

std::vector<SmoothFanoPolytope> parse_polytopes(const std::string& text);
std::vector<SmoothFanoPolytope> load_polytopes(const std::string& path);
std::string format_polytopes(const std::vector<SmoothFanoPolytope>& ps);

ValidationReport validate_smooth_fano(const std::vector<LatticeVector>& vertices);

// Facets as sorted index sets in lexicographic order. Throws ValidationError if not full-dimensional.
std::vector<IndexSet> enumerate_facets(const std::vector<LatticeVector>& vertices);
std::vector<IndexSet> minimal_nonfaces(const std::vector<IndexSet>& facets, int num_vertices);

RationalPolytope dual_polytope(const SmoothFanoPolytope& P);
Integer normalized_volume(const RationalPolytope& Q);
SmoothFanoPolytope direct_sum(const SmoothFanoPolytope& P, const SmoothFanoPolytope& Q);

// 1-based rendering such as "14" or "1235"; indices above 9 are comma separated.
std::string format_index_set(const IndexSet& s);

}  // namespace toricfano
