#include "fixtures.hpp"

namespace fx {

AlgPtr null_algebra(size_t n, FieldSpec f) {
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    return std::make_shared<AlgebraSC>(f, n, names);
}

AlgPtr unital1(FieldSpec f) {
    auto a = std::make_shared<AlgebraSC>(f, 1, std::vector<std::string>{"1"});
    a->set_product(0, 0, SVec{{0, Scalar(1)}});
    a->unital_idx = 0;
    return a;
}

AlgPtr truncated_poly(size_t k, FieldSpec f) {
    std::vector<std::string> names{"1"};
    for (size_t i = 1; i < k; ++i) names.push_back(i == 1 ? "t" : "t^" + std::to_string(i));
    auto a = std::make_shared<AlgebraSC>(f, k, names);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; i + j < k; ++j) a->set_product(i, j, SVec{{i + j, Scalar(1)}});
    a->unital_idx = 0;
    return a;
}

AlgPtr dual_numbers(FieldSpec f) { return truncated_poly(2, f); }

AlgPtr upper2(FieldSpec f) {
    auto a = std::make_shared<AlgebraSC>(f, 3, std::vector<std::string>{"e11", "e12", "e22"});
    a->set_product(0, 0, SVec{{0, Scalar(1)}});
    a->set_product(0, 1, SVec{{1, Scalar(1)}});
    a->set_product(1, 2, SVec{{1, Scalar(1)}});
    a->set_product(2, 2, SVec{{2, Scalar(1)}});
    return a;
}

AlgPtr strict_upper3(FieldSpec f) {
    auto a = std::make_shared<AlgebraSC>(f, 3, std::vector<std::string>{"e12", "e13", "e23"});
    a->set_product(0, 2, SVec{{1, Scalar(1)}});
    return a;
}

ExtensionSC make_extension(AlgPtr b, const std::vector<Vec>& kvecs, const std::vector<Vec>& section,
                           std::vector<std::string> anames) {
    size_t nb = b->dim(), nk = kvecs.size(), na = section.size();
    ColumnSolver s(nb);
    for (const auto& v : section) s.add_column(to_sparse(v));
    for (const auto& v : kvecs) s.add_column(to_sparse(v));
    auto split = [&](const Vec& x) {
        auto c = s.solve(to_sparse(x));
        if (!c) fail(ErrorKind::InputError, "section and kernel do not span B");
        return *c;
    };
    auto a = std::make_shared<AlgebraSC>(b->field(), na, anames);
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < na; ++j) {
            Vec c = split(b->mul(section[i], section[j]));
            a->set_product(i, j, to_sparse(Vec(c.begin(), c.begin() + na)));
        }
    auto k = std::make_shared<AlgebraSC>(b->field(), nk);
    for (size_t i = 0; i < nk; ++i)
        for (size_t j = 0; j < nk; ++j) {
            Vec c = split(b->mul(kvecs[i], kvecs[j]));
            k->set_product(i, j, to_sparse(Vec(c.begin() + na, c.end())));
        }
    ExtensionSC e{a, k, b, Matrix::from_cols(kvecs, nb), Matrix(na, nb), Matrix::from_cols(section, nb)};
    for (size_t j = 0; j < nb; ++j) {
        Vec c = split(unit(nb, j));
        for (size_t i = 0; i < na; ++i) e.beta.at(i, j) = c[i];
    }
    return e;
}

ExtensionSC ext_dual_bent() { return make_extension(dual_numbers(), {vec({0, 1})}, {vec({1, 1})}, {"1"}); }

ExtensionSC ext_upper2() {
    return make_extension(upper2(), {vec({0, 1, 0})}, {vec({1, 0, 0}), vec({0, 0, 1})}, {"e1", "e2"});
}

ExtensionSC ext_poly3_over_poly2() {
    return make_extension(truncated_poly(3), {vec({0, 0, 1})}, {vec({1, 0, 0}), vec({0, 1, 1})}, {"1", "t"});
}

ExtensionSC ext_strict_upper3() {
    return make_extension(strict_upper3(), {vec({0, 1, 0})}, {vec({1, 0, 0}), vec({0, 0, 1})}, {"x", "y"});
}

ExtensionSC ext_poly3_bent() {
    return make_extension(truncated_poly(3), {vec({0, 1, 0}), vec({0, 0, 1})}, {vec({1, 1, 0})}, {"1"});
}

std::shared_ptr<const LieAlgebraSC> heisenberg() {
    auto g = std::make_shared<LieAlgebraSC>(FieldSpec::rationals(), 3, std::vector<std::string>{"x", "y", "h"});
    g->set_antisymmetric(0, 1, SVec{{2, Scalar(1)}});
    return g;
}

std::shared_ptr<const LieAlgebraSC> sl2() {
    auto g = std::make_shared<LieAlgebraSC>(FieldSpec::rationals(), 3, std::vector<std::string>{"E", "F", "H"});
    g->set_antisymmetric(0, 1, SVec{{2, Scalar(1)}});
    g->set_antisymmetric(2, 0, SVec{{0, Scalar(2)}});
    g->set_antisymmetric(2, 1, SVec{{1, Scalar(-2)}});
    return g;
}

std::shared_ptr<const LieAlgebraSC> abelian(size_t n) {
    return std::make_shared<LieAlgebraSC>(FieldSpec::rationals(), n);
}

Vec vec(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Scalar(x));
    return v;
}

Scalar random_scalar(std::mt19937_64& rng, int lo, int hi) {
    return Scalar(static_cast<long>(std::uniform_int_distribution<int>(lo, hi)(rng)));
}

Vec random_vec(std::mt19937_64& rng, size_t n) {
    Vec v(n);
    for (auto& x : v) x = random_scalar(rng);
    return v;
}

Cochain random_cochain(std::mt19937_64& rng, size_t adim, size_t degree, size_t vdim) {
    Cochain c(adim, degree, vdim);
    for (auto& x : c.flat()) x = random_scalar(rng);
    return c;
}

Matrix random_matrix(std::mt19937_64& rng, size_t r, size_t c) {
    Matrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = random_scalar(rng);
    return m;
}

}  // namespace fx
