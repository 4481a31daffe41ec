#pragma once

#include <memory>

#include "obstrukt/algebra.hpp"

namespace obstrukt {

// (u, v): u plays left multiplication, v right multiplication.
struct BiPair {
    Matrix u, v;

    BiPair() = default;
    BiPair(Matrix u_, Matrix v_) : u(std::move(u_)), v(std::move(v_)) {}
    static BiPair zero(size_t n) { return {Matrix(n, n), Matrix(n, n)}; }
    static BiPair identity(size_t n) { return {Matrix::identity(n), Matrix::identity(n)}; }

    size_t dim() const { return u.rows(); }
    // coordinates in the 2n^2 pair space: u row-major, then v row-major
    Vec flatten() const;
    SVec flatten_sparse() const;
    static BiPair unflatten(const Vec& v, size_t n);

    bool is_zero() const { return u.is_zero() && v.is_zero(); }
    BiPair operator+(const BiPair& o) const { return {u + o.u, v + o.v}; }
    BiPair operator-(const BiPair& o) const { return {u - o.u, v - o.v}; }
    BiPair scaled(const Scalar& s) const { return {u.scaled(s), v.scaled(s)}; }
    bool operator==(const BiPair& o) const { return u == o.u && v == o.v; }
    bool operator!=(const BiPair& o) const { return !(*this == o); }
};

bool is_bimultiplication(const BiPair& p, const AlgebraSC& k);
// (u1 u2, v2 v1)
BiPair mul_product(const BiPair& p1, const BiPair& p2);
BiPair epsilon(const Vec& k0, const AlgebraSC& k);
bool is_permutable(const BiPair& p1, const BiPair& p2);
bool is_self_permutable(const BiPair& p);

struct MulAlgebra {
    std::shared_ptr<const AlgebraSC> k;
    Subspace space;  // inside the 2n^2 pair space

    size_t dim() const { return space.dim(); }
    BiPair element(size_t i) const { return BiPair::unflatten(space.vector(i), k->dim()); }
    bool contains(const BiPair& p) const { return space.contains(p.flatten()); }
    Vec coords(const BiPair& p) const { return space.coords(p.flatten()); }
    BiPair combine(const Vec& c) const { return BiPair::unflatten(space.combine(c), k->dim()); }
};

MulAlgebra compute_mul_algebra(std::shared_ptr<const AlgebraSC> k);
Subspace compute_inn(const AlgebraSC& k);
Subspace compute_anni(const AlgebraSC& k);

struct OutAlgebra {
    MulAlgebra mul;
    Subspace inn;          // pair-space coordinates
    Subspace inn_in_mul;   // coordinates relative to the Mul basis
    QuotientSpace q;       // Mul / Inn

    size_t dim() const { return q.dim(); }
    Vec project(const BiPair& p) const { return q.project(mul.coords(p)); }
    BiPair lift(const Vec& coords) const { return mul.combine(q.lift(coords)); }
    Vec product(const Vec& x, const Vec& y) const;
    AlgebraSC structure() const;
};

OutAlgebra compute_out(std::shared_ptr<const AlgebraSC> k);

// Solves eps(x) = p with the canonical choice (free coordinates zero) without
// materializing Mul(K). Suitable for large K.
class InnerLift {
public:
    explicit InnerLift(std::shared_ptr<const AlgebraSC> k);
    const AlgebraSC& algebra() const { return *k_; }
    std::optional<Vec> lift(const BiPair& p) const { return solver_.solve(p.flatten_sparse()); }
    bool is_inner(const BiPair& p) const { return solver_.in_span(p.flatten_sparse()); }
    size_t inn_dim() const { return solver_.rank(); }

private:
    std::shared_ptr<const AlgebraSC> k_;
    ColumnSolver solver_;
};

}  // namespace obstrukt
