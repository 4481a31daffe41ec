#include "doctest.h"
#include "obstrukt/linalg.hpp"

using namespace obstrukt;

namespace {
Matrix mat(std::vector<std::vector<long>> rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Scalar(rows[i][j]);
    return m;
}
}  // namespace

TEST_CASE("scalar arithmetic stays exact") {
    Scalar a(1, 3), b(1, 6);
    CHECK((a + b) == Scalar(1, 2));
    CHECK((a * b).str() == "1/18");
    Scalar big(INT64_MAX);
    Scalar sq = big * big;
    CHECK((sq / big) == big);
    CHECK((sq - sq).is_zero());
    auto f7 = FieldSpec::prime(7);
    Scalar x = Scalar::parse("3", f7);
    CHECK((x * x.inv()).is_one());
    CHECK(Scalar::parse("1/2", f7) == Scalar::parse("4", f7));
    CHECK_THROWS(FieldSpec::prime(8));
}

TEST_CASE("rref examples") {
    CHECK(rref(Matrix::identity(2)) == Matrix::identity(2));
    CHECK(rref(mat({{2, 4}, {1, 2}})) == mat({{1, 2}, {0, 0}}));
    CHECK(rref(Matrix(3, 3)) == Matrix(3, 3));
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(Matrix(2, 3)).dim() == 3);
    CHECK(kernel_basis(Matrix::identity(4)).dim() == 0);
    auto k = kernel_basis(mat({{1, 1}}));
    REQUIRE(k.dim() == 1);
    CHECK(k.contains(Vec{Scalar(1), Scalar(-1)}));
}

TEST_CASE("solve examples") {
    auto x = solve(Matrix::identity(2), Vec{Scalar(5), Scalar(7)});
    REQUIRE(x);
    CHECK(*x == Vec{Scalar(5), Scalar(7)});
    auto y = solve(mat({{1, 1}}), Vec{Scalar(3)});
    REQUIRE(y);
    CHECK(*y == Vec{Scalar(3), Scalar(0)});
    CHECK_FALSE(solve(mat({{1}, {1}}), Vec{Scalar(1), Scalar(2)}));
    CHECK_THROWS(solve(mat({{1}, {1}}), Vec{Scalar(1)}));
}

TEST_CASE("quotient examples") {
    auto s = Subspace::span(2, {Vec{Scalar(1), Scalar(0)}});
    auto q = quotient(2, s);
    CHECK(q.dim() == 1);
    CHECK(q.project(Vec{Scalar(3), Scalar(4)}) == Vec{Scalar(4)});
    CHECK(is_zero(q.project(Vec{Scalar(9), Scalar(0)})));
    auto q0 = quotient(3, Subspace(3));
    Vec v{Scalar(1), Scalar(2), Scalar(3)};
    CHECK(q0.project(v) == v);
}
