#include "toricfano/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace toricfano {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<LatticeVector>& cols) {
    if (cols.empty()) return {};
    IntMatrix m(cols[0].size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != m.rows_) throw DimensionError("columns of unequal length");
        for (std::size_t r = 0; r < m.rows_; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<LatticeVector>& rows) {
    if (rows.empty()) return {};
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw DimensionError("rows of unequal length");
        for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

LatticeVector IntMatrix::row(std::size_t r) const {
    return LatticeVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

LatticeVector IntMatrix::column(std::size_t c) const {
    LatticeVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += a * o.at(k, j);
        }
    return p;
}

LatticeVector IntMatrix::operator*(const LatticeVector& v) const {
    if (cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
    LatticeVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) out[i] += at(i, k) * v[k];
    return out;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && at(r, c) != 0) return false;
    return true;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << ',';
        os << vector_to_string(row(r));
    }
    os << ']';
    return os.str();
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

// row[dst] -= q * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(dst, c) -= q * m.at(src, c);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, dst) -= q * m.at(r, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = -m.at(r, c);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
    const std::size_t rows = M.rows(), cols = M.cols();
    IntMatrix S = M;
    IntMatrix L = IntMatrix::identity(rows);
    IntMatrix R = IntMatrix::identity(cols);
    const std::size_t n = std::min(rows, cols);

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // pivot: smallest nonzero |entry| in the trailing block, first by position
            bool found = false;
            std::size_t pr = t, pc = t;
            Integer best;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c) {
                    if (S.at(r, c) == 0) continue;
                    Integer a = abs(S.at(r, c));
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pr = r;
                        pc = c;
                    }
                }
            if (!found) goto done;
            swap_rows(S, t, pr);
            swap_rows(L, t, pr);
            swap_cols(S, t, pc);
            swap_cols(R, t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (S.at(r, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), S.at(r, t).get_mpz_t(), S.at(t, t).get_mpz_t());
                add_row(S, r, t, q);
                add_row(L, r, t, q);
                if (S.at(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (S.at(t, c) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), S.at(t, c).get_mpz_t(), S.at(t, t).get_mpz_t());
                add_col(S, c, t, q);
                add_col(R, c, t, q);
                if (S.at(t, c) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: fold any entry not divisible by the pivot into row t
            bool divides = true;
            for (std::size_t r = t + 1; r < rows && divides; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (S.at(r, c) % S.at(t, t) != 0) {
                        add_row(S, t, r, -1);
                        add_row(L, t, r, -1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (S.at(t, t) < 0) {
            negate_row(S, t);
            negate_row(L, t);
        }
    }
done:
    return {std::move(S), std::move(L), std::move(R)};
}

Integer determinant(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw DimensionError("determinant of non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    IntMatrix A = M;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && A.at(p, k) == 0) ++p;
            if (p == n) return 0;
            swap_rows(A, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                A.at(i, j) = v;
            }
        prev = A.at(k, k);
    }
    return sign * A.at(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& M) {
    return M.rows() == M.cols() && abs(determinant(M)) == 1;
}

std::optional<IntMatrix> inverse_unimodular(const IntMatrix& M) {
    if (!is_unimodular(M)) return std::nullopt;
    // L M R = I, so M^{-1} = R L
    SmithForm sf = smith_normal_form(M);
    return sf.R * sf.L;
}

bool extends_to_basis(const std::vector<LatticeVector>& vectors) {
    if (vectors.empty()) return true;
    const std::size_t d = vectors[0].size();
    for (const auto& v : vectors)
        if (v.size() != d) throw DimensionError("vectors of unequal dimension");
    if (vectors.size() > d) throw DimensionError("more vectors than the ambient dimension");
    SmithForm sf = smith_normal_form(IntMatrix::from_rows(vectors));
    for (std::size_t i = 0; i < vectors.size(); ++i)
        if (sf.S.at(i, i) != 1) return false;
    return true;
}

std::optional<IntMatrix> solve_unimodular_from_basis(const std::vector<LatticeVector>& src,
                                                     const std::vector<LatticeVector>& dst) {
    if (src.size() != dst.size()) throw DimensionError("source and target counts differ");
    IntMatrix A = IntMatrix::from_columns(src);
    if (A.rows() != A.cols()) throw DimensionError("source is not square");
    auto Ainv = inverse_unimodular(A);
    if (!Ainv) throw PreconditionError("source vectors do not form a Z-basis");
    IntMatrix B = IntMatrix::from_columns(dst);
    if (B.rows() != A.rows() || B.cols() != A.cols()) throw DimensionError("target shape mismatch");
    IntMatrix U = B * *Ainv;
    if (!is_unimodular(U)) return std::nullopt;
    return U;
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& A, const std::vector<Rational>& b) {
    const std::size_t n = A.rows();
    if (A.cols() != n || b.size() != n) throw DimensionError("solve_rational shape mismatch");
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r][c] = A.at(r, c);
        aug[r][n] = b[r];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && aug[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(aug[p], aug[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || aug[r][c] == 0) continue;
            Rational f = aug[r][c] / aug[c][c];
            for (std::size_t k = c; k <= n; ++k) aug[r][k] -= f * aug[c][k];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = aug[r][n] / aug[r][r];
    return x;
}

Integer gcd_of(const LatticeVector& v) {
    Integer g = 0;
    for (const auto& e : v) g = gcd(g, e);
    return g;
}

bool is_primitive(const LatticeVector& v) { return gcd_of(v) == 1; }

std::string vector_to_string(const LatticeVector& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
    return os.str();
}

}  // namespace toricfano
