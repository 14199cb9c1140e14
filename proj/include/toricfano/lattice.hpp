#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricfano {

using Integer = mpz_class;
using Rational = mpq_class;
using LatticeVector = std::vector<Integer>;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    // Vectors become columns.
    static IntMatrix from_columns(const std::vector<LatticeVector>& cols);
    static IntMatrix from_rows(const std::vector<LatticeVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    LatticeVector row(std::size_t r) const;
    LatticeVector column(std::size_t c) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    LatticeVector operator*(const LatticeVector& v) const;
    bool operator==(const IntMatrix& o) const = default;

    bool is_diagonal() const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

struct SmithForm {
    IntMatrix S;
    IntMatrix L;
    IntMatrix R;
};

// L*M*R = S with S diagonal, s1 | s2 | ..., non-negative diagonal.
SmithForm smith_normal_form(const IntMatrix& M);

// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& M);

bool is_unimodular(const IntMatrix& M);

// Inverse of a unimodular matrix; nullopt if |det| != 1.
std::optional<IntMatrix> inverse_unimodular(const IntMatrix& M);

// True iff the vectors are part of a Z-basis of Z^d (all k x k minors have gcd 1).
bool extends_to_basis(const std::vector<LatticeVector>& vectors);

// U with U*src[i] = dst[i]; nullopt when U is not integral or not unimodular.
std::optional<IntMatrix> solve_unimodular_from_basis(const std::vector<LatticeVector>& src,
                                                     const std::vector<LatticeVector>& dst);

// Rational solution of the square system A x = b; nullopt if singular.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& A, const std::vector<Rational>& b);

Integer gcd_of(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);
std::string vector_to_string(const LatticeVector& v);

}  // namespace toricfano
