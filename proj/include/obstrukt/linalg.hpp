#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "obstrukt/scalar.hpp"

namespace obstrukt {

using Vec = std::vector<Scalar>;
// sorted by index, no stored zeros
using SVec = std::vector<std::pair<size_t, Scalar>>;

Vec zeros(size_t n);
Vec unit(size_t n, size_t i);
bool is_zero(const Vec& v);
bool is_zero(const SVec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);

SVec to_sparse(const Vec& v);
Vec to_dense(const SVec& v, size_t n);
void axpy(SVec& y, const Scalar& a, const SVec& x);
SVec scaled(const SVec& v, const Scalar& a);

class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), d_(rows * cols) {}

    static Matrix identity(size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, size_t cols);
    static Matrix from_cols(const std::vector<Vec>& cols, size_t rows);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Scalar& at(size_t i, size_t j) { return d_[i * c_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return d_[i * c_ + j]; }

    Vec row(size_t i) const;
    Vec col(size_t j) const;
    SVec col_sparse(size_t j) const;
    Vec apply(const Vec& x) const;
    Matrix transpose() const;
    bool is_zero() const;

    // row-major flattening, used for pair-space coordinates
    Vec flatten() const { return d_; }
    static Matrix unflatten(const Vec& v, size_t rows, size_t cols, size_t offset = 0);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    size_t r_ = 0, c_ = 0;
    std::vector<Scalar> d_;
};

struct Rref {
    Matrix m;
    std::vector<size_t> pivots;
};

Rref rref_full(const Matrix& m);
Matrix rref(const Matrix& m);
size_t rank(const Matrix& m);

// Row space in canonical reduced row-echelon form, zero rows dropped.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(size_t ambient, const std::vector<Vec>& vectors);
    static Subspace row_space(const Matrix& m);
    static Subspace full(size_t ambient);

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }
    Vec vector(size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;
    // coordinates w.r.t. the rref basis; v must lie in the subspace
    Vec coords(const Vec& v) const;
    Vec combine(const Vec& coords) const;
    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

private:
    size_t ambient_ = 0;
    Matrix basis_;
    std::vector<size_t> pivots_;
    friend Subspace subspace_from_rref(size_t, Rref&&);
};

Subspace kernel_basis(const Matrix& m);
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

class QuotientSpace {
public:
    QuotientSpace() = default;
    QuotientSpace(size_t ambient, Subspace denominator);

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return reps_.size(); }
    const Subspace& denominator() const { return den_; }
    const std::vector<size_t>& representatives() const { return reps_; }

    Vec project(const Vec& v) const;
    Vec lift(const Vec& coords) const;

private:
    size_t ambient_ = 0;
    Subspace den_;
    std::vector<size_t> reps_;
};

QuotientSpace quotient(size_t ambient, const Subspace& s);

// Incremental reduced echelon form over sparse rows; suited to tall systems
// with few unknowns.
class SparseEchelon {
public:
    explicit SparseEchelon(size_t cols) : cols_(cols) {}
    void add_row(SVec row);
    size_t rank() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    Subspace kernel() const;
    Subspace row_space() const;

private:
    size_t cols_;
    std::vector<SVec> rows_;          // normalized, pivot = first entry
    std::unordered_map<size_t, size_t> by_pivot_;
    void reduce(SVec& v) const;
};

// Solves sum_j x_j col_j = t for columns added in order. The solution uses
// only the greedy left-to-right independent columns, which matches the
// canonical rref choice with free variables set to zero.
class ColumnSolver {
public:
    ColumnSolver() = default;
    explicit ColumnSolver(size_t target_dim) : dim_(target_dim) {}

    // returns true when the column was independent of the previous ones
    bool add_column(const SVec& col);
    size_t num_columns() const { return ncols_; }
    size_t rank() const { return basis_.size(); }
    std::optional<Vec> solve(const SVec& target) const;
    bool in_span(const SVec& target) const;

private:
    struct Entry {
        SVec v;
        SVec cert;
    };
    size_t dim_ = 0, ncols_ = 0;
    std::vector<Entry> basis_;
    std::unordered_map<size_t, size_t> by_lead_;
    bool reduce(SVec& v, SVec* cert) const;
};

}  // namespace obstrukt
