#include <doctest.h>

#include "../support/fixtures.hpp"

using namespace obstrukt;

namespace {

Connection inner_connection(fx::AlgPtr a) {
    Connection c(a, a);
    for (size_t i = 0; i < a->dim(); ++i) c.pairs[i] = epsilon(a->basis(i), *a);
    return c;
}

Matrix diag(std::initializer_list<long> xs) {
    Matrix m(xs.size(), xs.size());
    size_t i = 0;
    for (long x : xs) {
        m.at(i, i) = x;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("flatness") {
    auto n = fx::null_algebra(2);
    CHECK(is_flat(Connection(n, fx::dual_numbers())));
    auto d = fx::dual_numbers();
    Connection c = inner_connection(d);
    CHECK(is_flat(c));
    c.pairs[1] = c.pairs[1] + BiPair::identity(2);
    std::optional<PairWitness> w;
    CHECK_FALSE(is_flat(c, &w));
    REQUIRE(w);
    CHECK((w->i == 1 || w->j == 1));
}

TEST_CASE("regularity") {
    auto a = fx::null_algebra(2);
    auto k = fx::null_algebra(2);
    CHECK(is_regular(Connection(a, k)));
    Connection c(a, k);
    c.pairs[0] = BiPair(diag({1, 2}), diag({3, 4}));
    c.pairs[1] = BiPair(diag({0, 5}), diag({-1, 1}));
    CHECK(is_regular(c));
    Matrix s(2, 2);
    s.at(0, 1) = 1;
    c.pairs[1] = BiPair(s, s.transpose());
    std::optional<PairWitness> w;
    CHECK_FALSE(is_regular(c, &w));
    REQUIRE(w);
}

TEST_CASE("couplings from connections") {
    auto d = fx::dual_numbers();
    auto cp = coupling_from_connection(inner_connection(d));
    CHECK(cp.lift.pairs.size() == 2);

    // A = F, K null 1-dim: mu(1) = (2, 2) has curvature (2, 2), not inner
    auto f = fx::unital1();
    auto z = fx::null_algebra(1);
    Connection c(f, z);
    c.pairs[0] = BiPair(diag({2}), diag({2}));
    try {
        coupling_from_connection(c);
        FAIL("expected CurvatureNotInner");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CurvatureNotInner);
    }
    c.pairs[0] = BiPair::identity(1);
    CHECK_NOTHROW(coupling_from_connection(c));
}

TEST_CASE("twisted differential") {
    auto d = fx::dual_numbers();
    auto m = BimoduleSC::regular(d);
    Connection rho = representation_connection(m);
    CHECK(is_flat(rho));
    std::mt19937_64 rng(6);
    for (size_t n = 0; n <= 3; ++n) {
        auto f = fx::random_cochain(rng, 2, n, 2);
        CHECK(twisted_delta(rho, f) == hdelta(m, f));
        CHECK(twisted_delta(rho, twisted_delta(rho, f)).is_zero());
        CHECK(twisted_delta(rho, Cochain(2, n, 2)).is_zero());
    }

    // a non-flat connection: Delta Delta k = u(x)^2 k on a null algebra
    auto a = fx::null_algebra(1);
    auto k = fx::null_algebra(2);
    Connection c(a, k);
    c.pairs[0] = BiPair(diag({1, 2}), Matrix(2, 2));
    Cochain k0(1, 0, 2);
    k0.set(0, fx::vec({1, 1}));
    CHECK(twisted_delta(c, twisted_delta(c, k0)).value(0) == fx::vec({1, 4}));
}

TEST_CASE("perturbing by an inner term keeps the coupling") {
    auto a = fx::upper2();
    auto k = std::make_shared<AlgebraSC>(direct_sum(*fx::upper2(), *fx::null_algebra(1)));
    Connection c(a, k);
    for (size_t i = 0; i < 3; ++i) {
        Vec v(4);
        v[i] = 1;
        c.pairs[i] = epsilon(v, *k);
    }
    CHECK(is_flat(c));
    std::mt19937_64 rng(10);
    Matrix l = fx::random_matrix(rng, 4, 3);
    Connection p = perturb_connection(c, l);
    CHECK(p.invalid_pairs().empty());
    CHECK_NOTHROW(coupling_from_connection(p));
}
