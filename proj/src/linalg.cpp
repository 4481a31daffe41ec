#include "obstrukt/linalg.hpp"

#include "obstrukt/errors.hpp"

namespace obstrukt {

Vec zeros(size_t n) { return Vec(n); }

Vec unit(size_t n, size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

bool is_zero(const SVec& v) { return v.empty(); }

Vec operator+(const Vec& a, const Vec& b) {
    require_dims(a.size() == b.size(), "vector add");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    require_dims(a.size() == b.size(), "vector sub");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= s;
    return r;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
    require_dims(y.size() == x.size(), "axpy");
    if (a.is_zero()) return;
    for (size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] += a * x[i];
}

SVec to_sparse(const Vec& v) {
    SVec s;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.emplace_back(i, v[i]);
    return s;
}

Vec to_dense(const SVec& v, size_t n) {
    Vec d(n);
    for (const auto& [i, x] : v) {
        require_dims(i < n, "sparse index out of range");
        d[i] = x;
    }
    return d;
}

void axpy(SVec& y, const Scalar& a, const SVec& x) {
    if (a.is_zero() || x.empty()) return;
    SVec out;
    out.reserve(y.size() + x.size());
    size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(std::move(y[i++]));
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.emplace_back(x[j].first, a * x[j].second);
            ++j;
        } else {
            Scalar s = y[i].second + a * x[j].second;
            if (!s.is_zero()) out.emplace_back(y[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

SVec scaled(const SVec& v, const Scalar& a) {
    SVec r;
    if (a.is_zero()) return r;
    r.reserve(v.size());
    for (const auto& [i, x] : v) r.emplace_back(i, x * a);
    return r;
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, size_t cols) {
    Matrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        require_dims(rows[i].size() == cols, "from_rows");
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, size_t rows) {
    Matrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        require_dims(cols[j].size() == rows, "from_cols");
        for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(size_t i) const { return Vec(d_.begin() + i * c_, d_.begin() + (i + 1) * c_); }

Vec Matrix::col(size_t j) const {
    Vec v(r_);
    for (size_t i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
}

SVec Matrix::col_sparse(size_t j) const {
    SVec v;
    for (size_t i = 0; i < r_; ++i)
        if (!at(i, j).is_zero()) v.emplace_back(i, at(i, j));
    return v;
}

Vec Matrix::apply(const Vec& x) const {
    require_dims(x.size() == c_, "matrix apply");
    Vec y(r_);
    for (size_t j = 0; j < c_; ++j) {
        if (x[j].is_zero()) continue;
        for (size_t i = 0; i < r_; ++i) {
            const Scalar& a = at(i, j);
            if (!a.is_zero()) y[i] += a * x[j];
        }
    }
    return y;
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : d_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::unflatten(const Vec& v, size_t rows, size_t cols, size_t offset) {
    require_dims(v.size() >= offset + rows * cols, "unflatten");
    Matrix m(rows, cols);
    for (size_t k = 0; k < rows * cols; ++k) m.d_[k] = v[offset + k];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_dims(c_ == o.r_, "matrix product");
    Matrix p(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.c_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) p.at(i, j) += a * b;
            }
        }
    return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_dims(r_ == o.r_ && c_ == o.c_, "matrix add");
    Matrix s = *this;
    for (size_t k = 0; k < d_.size(); ++k) s.d_[k] += o.d_[k];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_dims(r_ == o.r_ && c_ == o.c_, "matrix sub");
    Matrix s = *this;
    for (size_t k = 0; k < d_.size(); ++k) s.d_[k] -= o.d_[k];
    return s;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix m = *this;
    for (auto& x : m.d_) x *= s;
    return m;
}

bool Matrix::operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }

Rref rref_full(const Matrix& in) {
    Rref out{in, {}};
    Matrix& m = out.m;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t piv = row;
        while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        Scalar inv = m.at(row, col).inv();
        for (size_t j = col; j < m.cols(); ++j)
            if (!m.at(row, j).is_zero()) m.at(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar factor = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j)
                if (!m.at(row, j).is_zero()) m.at(i, j) -= factor * m.at(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

Matrix rref(const Matrix& m) { return rref_full(m).m; }

size_t rank(const Matrix& m) { return rref_full(m).pivots.size(); }

Subspace subspace_from_rref(size_t ambient, Rref&& r) {
    Subspace s(ambient);
    size_t k = r.pivots.size();
    Matrix b(k, ambient);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < ambient; ++j) b.at(i, j) = r.m.at(i, j);
    s.basis_ = std::move(b);
    s.pivots_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::span(size_t ambient, const std::vector<Vec>& vectors) {
    if (vectors.empty()) return Subspace(ambient);
    return subspace_from_rref(ambient, rref_full(Matrix::from_rows(vectors, ambient)));
}

Subspace Subspace::row_space(const Matrix& m) { return subspace_from_rref(m.cols(), rref_full(m)); }

Subspace Subspace::full(size_t ambient) { return row_space(Matrix::identity(ambient)); }

Vec Subspace::coords(const Vec& v) const {
    require_dims(v.size() == ambient_, "subspace coords");
    Vec c(pivots_.size());
    for (size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
}

Vec Subspace::combine(const Vec& c) const {
    require_dims(c.size() == dim(), "subspace combine");
    Vec v(ambient_);
    for (size_t i = 0; i < c.size(); ++i) axpy(v, c[i], basis_.row(i));
    return v;
}

bool Subspace::contains(const Vec& v) const {
    require_dims(v.size() == ambient_, "subspace contains");
    return v == combine(coords(v));
}

Subspace kernel_basis(const Matrix& m) {
    Rref r = rref_full(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (size_t p : r.pivots) is_piv[p] = true;
    std::vector<Vec> gens;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.m.at(i, f);
        gens.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), gens);
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
    require_dims(rhs.size() == m.rows(), "solve: rhs length");
    Matrix aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    Rref r = rref_full(aug);
    Vec x(m.cols());
    for (size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == m.cols()) return std::nullopt;
        x[r.pivots[i]] = r.m.at(i, m.cols());
    }
    return x;
}

QuotientSpace::QuotientSpace(size_t ambient, Subspace denominator) : ambient_(ambient), den_(std::move(denominator)) {
    require_dims(den_.ambient_dim() == ambient, "quotient: ambient dimension");
    std::vector<bool> is_piv(ambient, false);
    for (size_t p : den_.pivots()) is_piv[p] = true;
    for (size_t j = 0; j < ambient; ++j)
        if (!is_piv[j]) reps_.push_back(j);
}

Vec QuotientSpace::project(const Vec& v) const {
    require_dims(v.size() == ambient_, "project");
    Vec w = v;
    const auto& piv = den_.pivots();
    for (size_t i = 0; i < piv.size(); ++i) {
        Scalar c = w[piv[i]];
        if (!c.is_zero()) axpy(w, -c, den_.vector(i));
    }
    Vec out(reps_.size());
    for (size_t k = 0; k < reps_.size(); ++k) out[k] = w[reps_[k]];
    return out;
}

Vec QuotientSpace::lift(const Vec& coords) const {
    require_dims(coords.size() == reps_.size(), "lift");
    Vec v(ambient_);
    for (size_t k = 0; k < reps_.size(); ++k) v[reps_[k]] = coords[k];
    return v;
}

QuotientSpace quotient(size_t ambient, const Subspace& s) { return QuotientSpace(ambient, s); }

void SparseEchelon::reduce(SVec& v) const {
    // rows are fully reduced, so one pass in pivot order suffices
    SVec out;
    while (!v.empty()) {
        auto it = by_pivot_.find(v.front().first);
        if (it == by_pivot_.end()) {
            out.push_back(std::move(v.front()));
            v.erase(v.begin());
            continue;
        }
        Scalar c = v.front().second;
        axpy(v, -c, rows_[it->second]);
    }
    v = std::move(out);
}

void SparseEchelon::add_row(SVec row) {
    for (const auto& e : row) require_dims(e.first < cols_, "echelon row index");
    reduce(row);
    if (row.empty()) return;
    Scalar inv = row.front().second.inv();
    for (auto& e : row) e.second *= inv;
    size_t p = row.front().first;
    for (auto& r : rows_) {
        for (const auto& e : r) {
            if (e.first == p) {
                Scalar c = e.second;
                axpy(r, -c, row);
                break;
            }
            if (e.first > p) break;
        }
    }
    by_pivot_[p] = rows_.size();
    rows_.push_back(std::move(row));
}

Subspace SparseEchelon::row_space() const {
    std::vector<Vec> rows;
    for (const auto& r : rows_) rows.push_back(to_dense(r, cols_));
    return Subspace::span(cols_, rows);
}

Subspace SparseEchelon::kernel() const {
    std::vector<bool> is_piv(cols_, false);
    for (const auto& r : rows_) is_piv[r.front().first] = true;
    std::vector<Vec> gens;
    for (size_t f = 0; f < cols_; ++f) {
        if (is_piv[f]) continue;
        Vec v(cols_);
        v[f] = 1;
        for (const auto& r : rows_)
            for (const auto& e : r)
                if (e.first == f) v[r.front().first] = -e.second;
        gens.push_back(std::move(v));
    }
    return Subspace::span(cols_, gens);
}

bool ColumnSolver::reduce(SVec& v, SVec* cert) const {
    while (!v.empty()) {
        auto it = by_lead_.find(v.front().first);
        if (it == by_lead_.end()) return false;
        const Entry& e = basis_[it->second];
        Scalar c = v.front().second;
        axpy(v, -c, e.v);
        if (cert) axpy(*cert, c, e.cert);
    }
    return true;
}

bool ColumnSolver::add_column(const SVec& col) {
    for (const auto& e : col) require_dims(e.first < dim_, "solver column index");
    size_t j = ncols_++;
    SVec v = col;
    SVec cert;
    // cert accumulates the combination of earlier columns removed from v
    while (!v.empty()) {
        auto it = by_lead_.find(v.front().first);
        if (it == by_lead_.end()) break;
        const Entry& e = basis_[it->second];
        Scalar c = v.front().second;
        axpy(v, -c, e.v);
        axpy(cert, c, e.cert);
    }
    if (v.empty()) return false;
    // v = col_j - cert(cols)
    SVec c2 = scaled(cert, Scalar(-1));
    axpy(c2, Scalar(1), SVec{{j, Scalar(1)}});
    Scalar inv = v.front().second.inv();
    Entry e{scaled(v, inv), scaled(c2, inv)};
    by_lead_[e.v.front().first] = basis_.size();
    basis_.push_back(std::move(e));
    return true;
}

std::optional<Vec> ColumnSolver::solve(const SVec& target) const {
    SVec v = target;
    SVec cert;
    if (!reduce(v, &cert)) return std::nullopt;
    return to_dense(cert, ncols_);
}

bool ColumnSolver::in_span(const SVec& target) const {
    SVec v = target;
    return reduce(v, nullptr);
}

}  // namespace obstrukt
