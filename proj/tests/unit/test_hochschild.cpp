#include <doctest.h>

#include "../oracles/oracle.hpp"
#include "../support/fixtures.hpp"

using namespace obstrukt;

TEST_CASE("Hochschild differential") {
    auto d = fx::dual_numbers();
    auto m = BimoduleSC::regular(d);
    std::mt19937_64 rng(12);
    for (size_t n = 0; n <= 3; ++n) {
        auto f = fx::random_cochain(rng, 2, n, 2);
        CHECK(hdelta(m, hdelta(m, f)).is_zero());
        CHECK(hdelta(m, HCochain(2, n, 2)).is_zero());
    }
    // degree 0: (delta m0)(a) = a m0 - m0 a
    auto u = fx::upper2();
    auto mu = BimoduleSC::regular(u);
    HCochain m0(3, 0, 3);
    m0.set(0, fx::vec({1, 2, 3}));
    auto dm = hdelta(mu, m0);
    for (size_t a = 0; a < 3; ++a)
        CHECK(dm.value({a}) == u->mul(u->basis(a), fx::vec({1, 2, 3})) - u->mul(fx::vec({1, 2, 3}), u->basis(a)));
    CHECK_THROWS_AS(hdelta(m, HCochain(2, 5, 2)), Error);
    CHECK_THROWS_AS(cohomology_dim(m, 5), Error);
}

TEST_CASE("cocycles and coboundaries") {
    auto d = fx::dual_numbers();
    auto m = BimoduleSC::regular(d);
    CHECK(is_cocycle(m, HCochain(2, 3, 2)));
    CHECK(is_coboundary(m, HCochain(2, 3, 2)));
    std::mt19937_64 rng(14);
    auto g = fx::random_cochain(rng, 2, 2, 2);
    auto f = hdelta(m, g);
    auto pre = is_coboundary(m, f);
    REQUIRE(pre);
    CHECK(hdelta(m, *pre) == f);
    CHECK_FALSE(is_coboundary(m, HCochain(2, 0, 2)));

    auto z = fx::null_algebra(1);
    auto mz = BimoduleSC::zero_actions(z, 1);
    HCochain one(1, 3, 1);
    one.set(0, fx::vec({1}));
    CHECK(is_cocycle(mz, one));
    CHECK_FALSE(is_coboundary(mz, one));
    CHECK_THROWS_AS(class_of(m, fx::random_cochain(rng, 2, 3, 2)), Error);
}

TEST_CASE("cohomology dimensions agree with the rank oracle") {
    struct Case {
        fx::AlgPtr a;
        BimoduleSC m;
    };
    auto f = fx::unital1();
    auto z = fx::null_algebra(1);
    auto d = fx::dual_numbers();
    auto u = fx::upper2();
    auto s = fx::strict_upper3();
    std::vector<Case> cases = {{f, BimoduleSC::regular(f)},
                               {z, BimoduleSC::zero_actions(z, 1)},
                               {d, BimoduleSC::regular(d)},
                               {u, BimoduleSC::regular(u)},
                               {s, BimoduleSC::zero_actions(s, 1)}};
    for (const auto& c : cases) {
        auto oa = oracle::from(*c.a);
        auto om = oracle::from(c.m);
        for (size_t n = 0; n <= 3; ++n) CHECK(cohomology_dim(c.m, n) == oracle::hh_dim(oa, om, n));
    }
    for (size_t n = 1; n <= 3; ++n) CHECK(cohomology_dim(BimoduleSC::regular(f), n) == 0);
    for (size_t n = 0; n <= 3; ++n) CHECK(cohomology_dim(BimoduleSC::zero_actions(z, 1), n) == 1);
}

TEST_CASE("normalized cochains give the same cohomology") {
    auto d = fx::dual_numbers();
    auto m = BimoduleSC::regular(d);
    for (size_t n = 1; n <= 3; ++n) CHECK(cohomology_dim_normalized(m, n) == cohomology_dim(m, n));
    auto t = fx::truncated_poly(3);
    auto mt = BimoduleSC::regular(t);
    CHECK(cohomology_dim_normalized(mt, 2) == cohomology_dim(mt, 2));
}

TEST_CASE("classes") {
    auto z = fx::null_algebra(2);
    auto m = BimoduleSC::zero_actions(z, 1);
    CohomologySpace h3(m, 3);
    CHECK(h3.dim() == 8);
    std::mt19937_64 rng(16);
    auto f = fx::random_cochain(rng, 2, 3, 1);
    auto c = h3.class_of(f);
    CHECK(c.coords.size() == 8);
    CHECK(h3.same_class(f, f + hdelta(m, fx::random_cochain(rng, 2, 2, 1))));

    auto d = fx::dual_numbers();
    auto md = BimoduleSC::regular(d);
    CohomologySpace hd(md, 2);
    auto g = fx::random_cochain(rng, 2, 1, 2);
    CHECK(hd.same_class(hdelta(md, g), HCochain(2, 2, 2)));
    CHECK(hd.cocycle_dim() - hd.coboundary_dim() == hd.dim());
}
