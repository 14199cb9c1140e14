#pragma once

#include "toricfano/groebner.hpp"
#include "toricfano/polytope.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace toricfano {

class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Normal forms of all monomials of one degree, as rows over the standard monomials.
struct DegreeTable {
    int degree = 0;
    std::vector<Monomial> monomials;           // all monomials of this degree
    std::vector<Monomial> standard;            // standard monomials (basis of the graded piece)
    std::vector<std::vector<Rational>> rows;   // rows[i][j]: coefficient of standard[j] in NF(monomials[i])
    std::size_t index_of(const Monomial& m) const;
};

std::vector<std::string> default_generator_names(int n);

// Z[free generators]/I with the substitution map of the eliminated variables.
class CohomologyPresentation {
public:
    // Ring given directly by generators (quotients, hand-written rings). top_degree bounds the grading.
    static CohomologyPresentation from_ideal(std::vector<std::string> names, std::vector<RatPoly> gens, int top_degree);

    bool has_polytope() const { return polytope_ != nullptr; }
    const SmoothFanoPolytope& polytope() const;
    int num_generators() const { return static_cast<int>(names_.size()); }
    int top_degree() const { return top_degree_; }
    const std::vector<std::string>& names() const { return names_; }
    const MonomialOrder& order() const { return order_; }

    const std::vector<int>& free_indices() const { return free_; }
    const std::vector<int>& eliminated_indices() const { return eliminated_; }
    // Class of every vertex as a linear form in the free generators.
    const std::vector<RatPoly>& substitution() const { return substitution_; }
    const std::vector<RatPoly>& ideal_gens() const { return gens_; }
    // Unpruned images of all minimal nonfaces.
    const std::vector<RatPoly>& full_ideal_gens() const { return full_gens_; }

    const GroebnerBasis<Rational>& gb_rational() const;
    const GroebnerBasis<ModP>& gb_mod(std::uint32_t p) const;
    const DegreeTable& degree_table(int k) const;

    CohomologyPresentation with_names(std::vector<std::string> names) const;
    std::string display(const RatPoly& f) const { return to_string(f, names_, order_); }

private:
    friend CohomologyPresentation build_presentation(const SmoothFanoPolytope& P);
    CohomologyPresentation() = default;

    struct Cache {
        std::mutex mutex;
        std::optional<GroebnerBasis<Rational>> q;
        std::map<std::uint32_t, GroebnerBasis<ModP>> mod;
        std::map<int, DegreeTable> tables;
    };

    std::shared_ptr<const SmoothFanoPolytope> polytope_;
    std::vector<std::string> names_;
    MonomialOrder order_;
    int top_degree_ = 0;
    std::vector<int> free_, eliminated_;
    std::vector<RatPoly> substitution_;
    std::vector<RatPoly> gens_, full_gens_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

CohomologyPresentation build_presentation(const SmoothFanoPolytope& P);

// Characteristic classes throw PreconditionError for rings given only by generators.
RatPoly chern_c1(const CohomologyPresentation& pres);
// Index k holds p_k (generator degree 2k), k = 0..floor(d/2); each reduced to normal form over Q.
std::vector<RatPoly> pontryagin_total(const CohomologyPresentation& pres);
// Total Chern class components c_0..c_d, normal forms over Q.
std::vector<RatPoly> chern_total(const CohomologyPresentation& pres);

Integer degree_anticanonical(const SmoothFanoPolytope& P);
Integer degree_via_ring(const CohomologyPresentation& pres);
bool degree_of_product_check(const SmoothFanoPolytope& P, const SmoothFanoPolytope& Q);

// Q-dimensions of the graded pieces, degrees 0..top_degree.
std::vector<int> graded_dimensions(const CohomologyPresentation& pres);

Integer binomial(int n, int k);

}  // namespace toricfano
