#include "obstrukt/bimult.hpp"

#include <map>

#include "obstrukt/errors.hpp"

namespace obstrukt {

Vec BiPair::flatten() const {
    Vec a = u.flatten(), b = v.flatten();
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

SVec BiPair::flatten_sparse() const {
    size_t n = dim();
    SVec out;
    for (size_t r = 0; r < n; ++r)
        for (size_t s = 0; s < n; ++s)
            if (!u.at(r, s).is_zero()) out.emplace_back(r * n + s, u.at(r, s));
    for (size_t r = 0; r < n; ++r)
        for (size_t s = 0; s < n; ++s)
            if (!v.at(r, s).is_zero()) out.emplace_back(n * n + r * n + s, v.at(r, s));
    return out;
}

BiPair BiPair::unflatten(const Vec& x, size_t n) {
    require_dims(x.size() == 2 * n * n, "pair coordinates");
    return {Matrix::unflatten(x, n, n, 0), Matrix::unflatten(x, n, n, n * n)};
}

bool is_bimultiplication(const BiPair& p, const AlgebraSC& k) {
    size_t n = k.dim();
    require_dims(p.u.rows() == n && p.u.cols() == n && p.v.rows() == n && p.v.cols() == n,
                 "bimultiplication shape");
    std::vector<SVec> ucol(n), vcol(n);
    for (size_t j = 0; j < n; ++j) {
        ucol[j] = p.u.col_sparse(j);
        vcol[j] = p.v.col_sparse(j);
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            SVec ei{{i, Scalar(1)}}, ej{{j, Scalar(1)}};
            if (k.mul_sparse(ei, ucol[j]) != k.mul_sparse(vcol[i], ej)) return false;
            const SVec& prod = k.product(i, j);
            if (to_sparse(p.u.apply(to_dense(prod, n))) != k.mul_sparse(ucol[i], ej)) return false;
            if (to_sparse(p.v.apply(to_dense(prod, n))) != k.mul_sparse(ei, vcol[j])) return false;
        }
    return true;
}

BiPair mul_product(const BiPair& p1, const BiPair& p2) {
    require_dims(p1.dim() == p2.dim(), "pair product");
    return {p1.u * p2.u, p2.v * p1.v};
}

BiPair epsilon(const Vec& k0, const AlgebraSC& k) { return {k.left_matrix(k0), k.right_matrix(k0)}; }

bool is_permutable(const BiPair& p1, const BiPair& p2) {
    return p2.v * p1.u == p1.u * p2.v && p1.v * p2.u == p2.u * p1.v;
}

bool is_self_permutable(const BiPair& p) { return p.u * p.v == p.v * p.u; }

MulAlgebra compute_mul_algebra(std::shared_ptr<const AlgebraSC> kp) {
    const AlgebraSC& k = *kp;
    size_t n = k.dim(), nn = n * n;
    auto U = [n](size_t r, size_t s) { return r * n + s; };
    auto V = [n, nn](size_t r, size_t s) { return nn + r * n + s; };
    SparseEchelon sys(2 * nn);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::map<size_t, std::map<size_t, Scalar>> c1, c2, c3;
            for (size_t r = 0; r < n; ++r) {
                // e_i u(e_j) - v(e_i) e_j
                for (const auto& [t, c] : k.product(i, r)) c1[t][U(r, j)] += c;
                for (const auto& [t, c] : k.product(r, j)) c1[t][V(r, i)] -= c;
                // u(e_i e_j) - u(e_i) e_j
                for (const auto& [t, c] : k.product(r, j)) c2[t][U(r, i)] -= c;
                // v(e_i e_j) - e_i v(e_j)
                for (const auto& [t, c] : k.product(i, r)) c3[t][V(r, j)] -= c;
            }
            for (const auto& [s, c] : k.product(i, j))
                for (size_t t = 0; t < n; ++t) {
                    c2[t][U(t, s)] += c;
                    c3[t][V(t, s)] += c;
                }
            for (auto* cs : {&c1, &c2, &c3})
                for (auto& [t, row] : *cs) {
                    SVec r;
                    for (auto& [idx, c] : row)
                        if (!c.is_zero()) r.emplace_back(idx, c);
                    if (!r.empty()) sys.add_row(std::move(r));
                }
        }
    MulAlgebra m{kp, sys.kernel()};
    if (!m.contains(BiPair::identity(n))) fail(ErrorKind::Internal, "identity pair missing from Mul(K)");
    return m;
}

Subspace compute_inn(const AlgebraSC& k) {
    std::vector<Vec> gens;
    for (size_t i = 0; i < k.dim(); ++i) gens.push_back(epsilon(k.basis(i), k).flatten());
    return Subspace::span(2 * k.dim() * k.dim(), gens);
}

Subspace compute_anni(const AlgebraSC& k) {
    size_t n = k.dim();
    SparseEchelon sys(n);
    // x = sum x_i e_i with x e_j = 0 and e_j x = 0
    for (size_t j = 0; j < n; ++j) {
        std::map<size_t, std::map<size_t, Scalar>> left, right;
        for (size_t i = 0; i < n; ++i) {
            for (const auto& [t, c] : k.product(i, j)) left[t][i] += c;
            for (const auto& [t, c] : k.product(j, i)) right[t][i] += c;
        }
        for (auto* cs : {&left, &right})
            for (auto& [t, row] : *cs) {
                SVec r;
                for (auto& [idx, c] : row)
                    if (!c.is_zero()) r.emplace_back(idx, c);
                if (!r.empty()) sys.add_row(std::move(r));
            }
    }
    return sys.kernel();
}

OutAlgebra compute_out(std::shared_ptr<const AlgebraSC> k) {
    OutAlgebra o;
    o.mul = compute_mul_algebra(k);
    o.inn = compute_inn(*k);
    std::vector<Vec> gens;
    for (size_t i = 0; i < o.inn.dim(); ++i) {
        Vec v = o.inn.vector(i);
        if (!o.mul.space.contains(v)) fail(ErrorKind::Internal, "inner pair outside Mul(K)");
        gens.push_back(o.mul.space.coords(v));
    }
    o.inn_in_mul = Subspace::span(o.mul.dim(), gens);
    o.q = QuotientSpace(o.mul.dim(), o.inn_in_mul);
    return o;
}

Vec OutAlgebra::product(const Vec& x, const Vec& y) const { return project(mul_product(lift(x), lift(y))); }

AlgebraSC OutAlgebra::structure() const {
    size_t d = dim();
    AlgebraSC a(mul.k->field(), d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) a.set_product(i, j, to_sparse(product(unit(d, i), unit(d, j))));
    return a;
}

InnerLift::InnerLift(std::shared_ptr<const AlgebraSC> k) : k_(std::move(k)) {
    size_t n = k_->dim();
    solver_ = ColumnSolver(2 * n * n);
    for (size_t i = 0; i < n; ++i) {
        // eps(e_i): u = left multiplication, v = right multiplication
        SVec col;
        std::map<size_t, Scalar> acc;
        for (size_t s = 0; s < n; ++s) {
            for (const auto& [r, c] : k_->product(i, s)) acc[r * n + s] += c;
            for (const auto& [r, c] : k_->product(s, i)) acc[n * n + r * n + s] += c;
        }
        for (auto& [idx, c] : acc)
            if (!c.is_zero()) col.emplace_back(idx, c);
        solver_.add_column(col);
    }
}

}  // namespace obstrukt
