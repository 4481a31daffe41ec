#include <doctest.h>

#include "../oracles/oracle.hpp"
#include "../support/fixtures.hpp"

using namespace obstrukt;

namespace {

Matrix scalar_matrix(size_t n, long a) { return Matrix::identity(n).scaled(Scalar(a)); }

Matrix shift2() {
    Matrix s(2, 2);
    s.at(0, 1) = 1;
    return s;
}

}  // namespace

TEST_CASE("bimultiplication predicate") {
    auto d = fx::dual_numbers();
    CHECK(is_bimultiplication(BiPair::zero(2), *d));
    CHECK(is_bimultiplication(BiPair::identity(2), *d));
    auto f = fx::unital1();
    CHECK_FALSE(is_bimultiplication(BiPair(scalar_matrix(1, 2), scalar_matrix(1, 3)), *f));
    CHECK(is_bimultiplication(BiPair(scalar_matrix(1, 2), scalar_matrix(1, 2)), *f));
    CHECK_THROWS_AS(is_bimultiplication(BiPair::zero(3), *d), Error);
}

TEST_CASE("Mul, Inn, Anni and Out dimensions") {
    struct Row {
        fx::AlgPtr a;
        size_t mul, inn, anni, out;
    };
    std::vector<Row> rows = {{fx::null_algebra(1), 2, 0, 1, 2},
                             {fx::unital1(), 1, 1, 0, 0},
                             {fx::dual_numbers(), 2, 2, 0, 0}};
    for (const auto& r : rows) {
        auto mul = compute_mul_algebra(r.a);
        CHECK(mul.dim() == r.mul);
        CHECK(compute_inn(*r.a).dim() == r.inn);
        CHECK(compute_anni(*r.a).dim() == r.anni);
        CHECK(compute_out(r.a).dim() == r.out);
        CHECK(mul.contains(BiPair::identity(r.a->dim())));
    }
    for (auto a : {fx::upper2(), fx::strict_upper3(), fx::null_algebra(2), fx::truncated_poly(3)}) {
        auto oa = oracle::from(*a);
        CHECK(compute_mul_algebra(a).dim() == oracle::mul_dim(oa));
        CHECK(compute_anni(*a).dim() == oracle::anni_dim(oa));
        CHECK(compute_inn(*a).dim() + compute_anni(*a).dim() == a->dim());
        auto out = compute_out(a);
        CHECK(out.dim() == out.mul.dim() - compute_inn(*a).dim());
    }
}

TEST_CASE("products of bimultiplications") {
    auto z = fx::null_algebra(1);
    BiPair p(scalar_matrix(1, 2), scalar_matrix(1, 3));
    BiPair q(scalar_matrix(1, 5), scalar_matrix(1, 7));
    CHECK(mul_product(p, q) == BiPair(scalar_matrix(1, 10), scalar_matrix(1, 21)));
    CHECK(mul_product(p, BiPair::identity(1)) == p);
    CHECK(mul_product(BiPair::zero(1), p) == BiPair::zero(1));

    auto u = fx::upper2();
    auto mul = compute_mul_algebra(u);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 10; ++t) {
        BiPair x = mul.combine(fx::random_vec(rng, mul.dim()));
        BiPair y = mul.combine(fx::random_vec(rng, mul.dim()));
        CHECK(mul.contains(mul_product(x, y)));
    }
}

TEST_CASE("epsilon is a homomorphism onto an ideal") {
    auto d = fx::dual_numbers();
    CHECK(epsilon(fx::vec({0, 0}), *d) == BiPair::zero(2));
    CHECK(epsilon(fx::vec({1, 0}), *d) == BiPair::identity(2));
    Matrix nil(2, 2);
    nil.at(1, 0) = 1;
    CHECK(epsilon(fx::vec({0, 1}), *d) == BiPair(nil, nil));

    std::mt19937_64 rng(4);
    for (auto a : {fx::upper2(), fx::strict_upper3(), fx::truncated_poly(3)}) {
        auto mul = compute_mul_algebra(a);
        auto inn = compute_inn(*a);
        for (size_t i = 0; i < a->dim(); ++i)
            for (size_t j = 0; j < a->dim(); ++j)
                CHECK(epsilon(to_dense(a->product(i, j), a->dim()), *a) ==
                      mul_product(epsilon(a->basis(i), *a), epsilon(a->basis(j), *a)));
        for (int t = 0; t < 5; ++t) {
            BiPair p = mul.combine(fx::random_vec(rng, mul.dim()));
            BiPair q = epsilon(fx::random_vec(rng, a->dim()), *a);
            CHECK(inn.contains(mul_product(p, q).flatten()));
            CHECK(inn.contains(mul_product(q, p).flatten()));
            CHECK(is_self_permutable(q));
        }
    }
}

TEST_CASE("Out product does not depend on representatives") {
    auto a = fx::strict_upper3();
    auto out = compute_out(a);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 5; ++t) {
        Vec x = fx::random_vec(rng, out.dim()), y = fx::random_vec(rng, out.dim());
        BiPair px = out.lift(x) + epsilon(fx::random_vec(rng, 3), *a);
        BiPair py = out.lift(y) + epsilon(fx::random_vec(rng, 3), *a);
        CHECK(out.project(mul_product(px, py)) == out.product(x, y));
    }
    CHECK(validate_associative(out.structure()).empty());
}

TEST_CASE("permutability") {
    auto z = fx::null_algebra(2);
    BiPair p(shift2(), shift2().transpose());
    CHECK(is_bimultiplication(p, *z));
    CHECK_FALSE(is_self_permutable(p));
    CHECK(is_permutable(BiPair::zero(2), p));
    auto d = fx::dual_numbers();
    CHECK(is_permutable(epsilon(fx::vec({1, 2}), *d), epsilon(fx::vec({3, -1}), *d)));
}

TEST_CASE("inner lift solves eps(x) = p") {
    auto a = std::make_shared<AlgebraSC>(direct_sum(*fx::upper2(), *fx::null_algebra(1)));
    InnerLift il(a);
    CHECK(il.inn_dim() == compute_inn(*a).dim());
    Vec k = fx::vec({1, -2, 3, 5});
    auto x = il.lift(epsilon(k, *a));
    REQUIRE(x);
    CHECK(epsilon(*x, *a) == epsilon(k, *a));
    CHECK_FALSE(il.is_inner(BiPair(Matrix::identity(4), Matrix(4, 4))));
}
