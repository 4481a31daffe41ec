#include <doctest.h>

#include "../oracles/oracle.hpp"
#include "../support/fixtures.hpp"

using namespace obstrukt;

// The reference computations on classical values.
TEST_CASE("oracle: Hochschild dimensions") {
    auto f = fx::unital1();
    auto of = oracle::from(*f);
    auto mf = oracle::from(BimoduleSC::regular(f));
    CHECK(oracle::hh_dim(of, mf, 0) == 1);
    for (size_t n = 1; n <= 4; ++n) CHECK(oracle::hh_dim(of, mf, n) == 0);

    auto z = fx::null_algebra(1);
    auto oz = oracle::from(*z);
    auto mz = oracle::from(BimoduleSC::zero_actions(z, 1));
    for (size_t n = 0; n <= 4; ++n) CHECK(oracle::hh_dim(oz, mz, n) == 1);
}

TEST_CASE("oracle: Chevalley-Eilenberg dimensions") {
    auto ab = oracle::from(LieModule::trivial(fx::abelian(3), 1));
    CHECK(oracle::ce_dim(ab, 0) == 1);
    CHECK(oracle::ce_dim(ab, 1) == 3);
    CHECK(oracle::ce_dim(ab, 2) == 3);
    CHECK(oracle::ce_dim(ab, 3) == 1);
    auto h = oracle::from(LieModule::trivial(fx::heisenberg(), 1));
    CHECK(oracle::ce_dim(h, 0) == 1);
    CHECK(oracle::ce_dim(h, 1) == 2);
    CHECK(oracle::ce_dim(h, 2) == 2);
    CHECK(oracle::ce_dim(h, 3) == 1);
    auto s = oracle::from(LieModule::trivial(fx::sl2(), 1));
    CHECK(oracle::ce_dim(s, 1) == 0);
    CHECK(oracle::ce_dim(s, 2) == 0);
    CHECK(oracle::ce_dim(s, 3) == 1);
    auto sa = oracle::from(LieModule::adjoint(fx::sl2()));
    CHECK(oracle::ce_dim(sa, 0) == 0);
    CHECK(oracle::ce_dim(sa, 1) == 0);
}

TEST_CASE("oracle: Mul and Anni dimensions") {
    CHECK(oracle::mul_dim(oracle::from(*fx::null_algebra(1))) == 2);
    CHECK(oracle::mul_dim(oracle::from(*fx::unital1())) == 1);
    CHECK(oracle::mul_dim(oracle::from(*fx::dual_numbers())) == 2);
    CHECK(oracle::anni_dim(oracle::from(*fx::null_algebra(2))) == 2);
    CHECK(oracle::anni_dim(oracle::from(*fx::dual_numbers())) == 0);
    CHECK(oracle::anni_dim(oracle::from(*fx::strict_upper3())) == 1);
}
