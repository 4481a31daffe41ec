#include "obstrukt/algebra.hpp"

#include <map>

#include "obstrukt/errors.hpp"

namespace obstrukt {

namespace {

std::vector<std::string> default_names(size_t n, std::vector<std::string> names, const char* prefix) {
    if (names.empty())
        for (size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    require_dims(names.size() == n, "basis names");
    return names;
}

SVec normalized(SVec v, size_t dim) {
    std::map<size_t, Scalar> acc;
    for (auto& [k, c] : v) {
        require_dims(k < dim, "structure constant index");
        acc[k] += c;
    }
    SVec out;
    for (auto& [k, c] : acc)
        if (!c.is_zero()) out.emplace_back(k, c);
    return out;
}

}  // namespace

AlgebraSC::AlgebraSC(FieldSpec field, size_t dim, std::vector<std::string> names)
    : field_(field), dim_(dim), names_(default_names(dim, std::move(names), "e")), table_(dim * dim) {}

void AlgebraSC::set_product(size_t i, size_t j, SVec v) {
    require_dims(i < dim_ && j < dim_, "set_product");
    table_[i * dim_ + j] = normalized(std::move(v), dim_);
}

void AlgebraSC::add_product(size_t i, size_t j, size_t k, const Scalar& c) {
    require_dims(i < dim_ && j < dim_ && k < dim_, "add_product");
    axpy(table_[i * dim_ + j], c, SVec{{k, Scalar(1)}});
}

Vec AlgebraSC::mul(const Vec& x, const Vec& y) const {
    require_dims(x.size() == dim_ && y.size() == dim_, "algebra mul");
    Vec r(dim_);
    for (size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [k, v] : product(i, j)) r[k] += c * v;
        }
    }
    return r;
}

SVec AlgebraSC::mul_sparse(const SVec& x, const SVec& y) const {
    Vec r(dim_);
    bool any = false;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) {
            const SVec& p = product(i, j);
            if (p.empty()) continue;
            Scalar c = a * b;
            for (const auto& [k, v] : p) r[k] += c * v;
            any = true;
        }
    if (!any) return {};
    return to_sparse(r);
}

Vec AlgebraSC::basis_times(size_t i, const SVec& y) const {
    Vec r(dim_);
    for (const auto& [j, b] : y)
        for (const auto& [k, v] : product(i, j)) r[k] += b * v;
    return r;
}

Vec AlgebraSC::times_basis(const SVec& x, size_t j) const {
    Vec r(dim_);
    for (const auto& [i, a] : x)
        for (const auto& [k, v] : product(i, j)) r[k] += a * v;
    return r;
}

Matrix AlgebraSC::left_matrix(const Vec& x) const {
    require_dims(x.size() == dim_, "left_matrix");
    Matrix m(dim_, dim_);
    for (size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim_; ++j)
            for (const auto& [k, v] : product(i, j)) m.at(k, j) += x[i] * v;
    }
    return m;
}

Matrix AlgebraSC::right_matrix(const Vec& x) const {
    require_dims(x.size() == dim_, "right_matrix");
    Matrix m(dim_, dim_);
    for (size_t j = 0; j < dim_; ++j) {
        if (x[j].is_zero()) continue;
        for (size_t i = 0; i < dim_; ++i)
            for (const auto& [k, v] : product(i, j)) m.at(k, i) += x[j] * v;
    }
    return m;
}

bool AlgebraSC::operator==(const AlgebraSC& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && table_ == o.table_;
}

LieAlgebraSC::LieAlgebraSC(FieldSpec field, size_t dim, std::vector<std::string> names)
    : field_(field), dim_(dim), names_(default_names(dim, std::move(names), "x")), table_(dim * dim) {}

void LieAlgebraSC::set_bracket(size_t i, size_t j, SVec v) {
    require_dims(i < dim_ && j < dim_, "set_bracket");
    table_[i * dim_ + j] = normalized(std::move(v), dim_);
}

void LieAlgebraSC::set_antisymmetric(size_t i, size_t j, const SVec& v) {
    set_bracket(i, j, v);
    set_bracket(j, i, scaled(v, Scalar(-1)));
}

Vec LieAlgebraSC::bracket(const Vec& x, const Vec& y) const {
    require_dims(x.size() == dim_ && y.size() == dim_, "bracket");
    Vec r(dim_);
    for (size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [k, v] : bracket(i, j)) r[k] += c * v;
        }
    }
    return r;
}

Matrix LieAlgebraSC::ad(const Vec& x) const {
    Matrix m(dim_, dim_);
    for (size_t j = 0; j < dim_; ++j) {
        Vec c = bracket(x, unit(dim_, j));
        for (size_t k = 0; k < dim_; ++k) m.at(k, j) = c[k];
    }
    return m;
}

BimoduleSC::BimoduleSC(std::shared_ptr<const AlgebraSC> a, size_t m)
    : over(std::move(a)), dim(m), left(over->dim(), Matrix(m, m)), right(over->dim(), Matrix(m, m)) {}

Matrix BimoduleSC::left_of(const Vec& a) const {
    require_dims(a.size() == left.size(), "bimodule left_of");
    Matrix r(dim, dim);
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) r = r + left[i].scaled(a[i]);
    return r;
}

Matrix BimoduleSC::right_of(const Vec& a) const {
    require_dims(a.size() == right.size(), "bimodule right_of");
    Matrix r(dim, dim);
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) r = r + right[i].scaled(a[i]);
    return r;
}

bool BimoduleSC::right_trivial() const {
    for (const auto& r : right)
        if (!r.is_zero()) return false;
    return true;
}

BimoduleSC BimoduleSC::regular(std::shared_ptr<const AlgebraSC> a) {
    BimoduleSC m(a, a->dim());
    for (size_t i = 0; i < a->dim(); ++i) {
        m.left[i] = a->left_matrix(a->basis(i));
        m.right[i] = a->right_matrix(a->basis(i));
    }
    return m;
}

BimoduleSC BimoduleSC::zero_actions(std::shared_ptr<const AlgebraSC> a, size_t m) { return BimoduleSC(std::move(a), m); }

LieModule::LieModule(std::shared_ptr<const LieAlgebraSC> gg, size_t m)
    : g(std::move(gg)), dim(m), action(g->dim(), Matrix(m, m)) {}

Matrix LieModule::action_of(const Vec& x) const {
    require_dims(x.size() == action.size(), "lie module action_of");
    Matrix r(dim, dim);
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) r = r + action[i].scaled(x[i]);
    return r;
}

LieModule LieModule::trivial(std::shared_ptr<const LieAlgebraSC> g, size_t m) { return LieModule(std::move(g), m); }

LieModule LieModule::adjoint(std::shared_ptr<const LieAlgebraSC> g) {
    LieModule m(g, g->dim());
    for (size_t i = 0; i < g->dim(); ++i) m.action[i] = g->ad(unit(g->dim(), i));
    return m;
}

std::vector<Violation> validate_associative(const AlgebraSC& a) {
    std::vector<Violation> out;
    size_t n = a.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const SVec& ij = a.product(i, j);
            for (size_t k = 0; k < n; ++k) {
                Vec lhs = a.times_basis(ij, k);
                Vec rhs = a.basis_times(i, a.product(j, k));
                if (lhs != rhs) out.push_back({{i, j, k}, "(e_i e_j) e_k = e_i (e_j e_k)", lhs - rhs});
            }
        }
    return out;
}

std::vector<Violation> validate_jacobi(const LieAlgebraSC& g) {
    std::vector<Violation> out;
    size_t n = g.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec s = to_dense(g.bracket(i, j), n) + to_dense(g.bracket(j, i), n);
            if (!is_zero(s)) out.push_back({{i, j}, "antisymmetry", s});
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
                Vec s = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
                if (!is_zero(s)) out.push_back({{i, j, k}, "jacobi", s});
            }
    return out;
}

std::vector<Violation> validate_bimodule(const BimoduleSC& m) {
    std::vector<Violation> out;
    const AlgebraSC& a = *m.over;
    size_t n = a.dim();
    require_dims(m.left.size() == n && m.right.size() == n, "bimodule tensors");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec ij = to_dense(a.product(i, j), n);
            Matrix l = m.left_of(ij) - m.left[i] * m.left[j];
            if (!l.is_zero()) out.push_back({{i, j}, "(a1 a2).m = a1.(a2.m)", l.flatten()});
            Matrix r = m.right_of(ij) - m.right[j] * m.right[i];
            if (!r.is_zero()) out.push_back({{i, j}, "m.(a1 a2) = (m.a1).a2", r.flatten()});
            Matrix c = m.right[j] * m.left[i] - m.left[i] * m.right[j];
            if (!c.is_zero()) out.push_back({{i, j}, "(a1.m).a2 = a1.(m.a2)", c.flatten()});
        }
    return out;
}

std::vector<Violation> validate_lie_module(const LieModule& m) {
    std::vector<Violation> out;
    const LieAlgebraSC& g = *m.g;
    size_t n = g.dim();
    require_dims(m.action.size() == n, "lie module tensors");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Matrix lhs = m.action_of(to_dense(g.bracket(i, j), n));
            Matrix rhs = m.action[i] * m.action[j] - m.action[j] * m.action[i];
            if (lhs != rhs) out.push_back({{i, j}, "rho([x,y]) = [rho x, rho y]", (lhs - rhs).flatten()});
        }
    return out;
}

bool is_unit(const AlgebraSC& a, size_t idx) {
    if (idx >= a.dim()) return false;
    for (size_t j = 0; j < a.dim(); ++j) {
        SVec e{{j, Scalar(1)}};
        if (a.product(idx, j) != e || a.product(j, idx) != e) return false;
    }
    return true;
}

LieAlgebraSC lieify(const AlgebraSC& k) {
    LieAlgebraSC g(k.field(), k.dim(), k.names());
    for (size_t i = 0; i < k.dim(); ++i)
        for (size_t j = 0; j < k.dim(); ++j) {
            SVec b = k.product(i, j);
            axpy(b, Scalar(-1), k.product(j, i));
            g.set_bracket(i, j, b);
        }
    return g;
}

AlgebraSC direct_sum(const AlgebraSC& a, const AlgebraSC& b) {
    if (a.field() != b.field()) fail(ErrorKind::FieldMismatch, "direct_sum over different fields");
    std::vector<std::string> names = a.names();
    for (const auto& s : b.names()) names.push_back(s + "'");
    size_t na = a.dim();
    AlgebraSC s(a.field(), na + b.dim(), names);
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < na; ++j) s.set_product(i, j, a.product(i, j));
    for (size_t i = 0; i < b.dim(); ++i)
        for (size_t j = 0; j < b.dim(); ++j) {
            SVec p;
            for (const auto& [k, c] : b.product(i, j)) p.emplace_back(k + na, c);
            s.set_product(na + i, na + j, p);
        }
    return s;
}

}  // namespace obstrukt
