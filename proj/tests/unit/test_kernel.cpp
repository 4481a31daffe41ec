#include <doctest.h>

#include "../support/fixtures.hpp"

using namespace obstrukt;

namespace {

HCochain constant_cochain(size_t adim, size_t degree, const Vec& v) {
    return HCochain::from_function(adim, degree, v.size(), [&](const std::vector<size_t>&) { return v; });
}

void check_theorem_kernel(const TheoremKernel& tk, const HCochain& f) {
    CHECK(validate_kernel_spec(tk.spec, &tk.spec.nucleus.rep).empty());
    Curvature r = curvature(tk.spec.coupling.lift);
    CHECK(hindrance_lifts(tk.spec.coupling.lift, tk.hbar, r));
    CHECK(obstruction_cocycle(tk.spec.coupling.lift, tk.hbar, tk.spec.nucleus) == f);
    auto rep = kernel_obstruction(tk.spec);
    CHECK(rep.f == f);
}

}  // namespace

TEST_CASE("thm3 kernel over null1 with trivial module") {
    auto a = fx::null_algebra(1);
    auto m = BimoduleSC::zero_actions(a, 1);
    auto f = constant_cochain(1, 3, fx::vec({1}));
    auto tk = build_kernel_thm3(a, m, f);
    CHECK(tk.spec.k->dim() == 8);
    CHECK(thm3_dimension(1, 1) == 8);
    CHECK(tk.spec.nucleus.dim() == 1);
    check_theorem_kernel(tk, f);
    auto rep = kernel_obstruction(tk.spec);
    CHECK_FALSE(rep.vanishes);
    CHECK(rep.cls.coords == fx::vec({1}));
}

TEST_CASE("thm3 kernel dimension formula") {
    CHECK(thm3_dimension(3, 1) == 78);
    auto a = fx::strict_upper3();
    auto m = BimoduleSC::zero_actions(a, 1);
    HCochain f(3, 3, 1);
    auto tk = build_kernel_thm3(a, m, f);
    CHECK(tk.spec.k->dim() == 78);
    check_theorem_kernel(tk, f);
}

TEST_CASE("thm3 kernel for a coboundary over the dual numbers") {
    auto a = fx::dual_numbers();
    auto m = BimoduleSC::regular(a);
    std::mt19937_64 rng(11);
    auto g = fx::random_cochain(rng, 2, 2, 2);
    auto f = hdelta(m, g);
    auto kf = build_kernel_thm3(a, m, f);
    check_theorem_kernel(kf, f);
    auto rep = kernel_obstruction(kf.spec);
    CHECK(rep.vanishes);
    REQUIRE(rep.primitive);
    CHECK(hdelta(m, *rep.primitive) == rep.f);

    auto k0 = build_kernel_thm3(a, m, HCochain(2, 3, 2));
    CHECK(kernels_isomorphic(kf.spec, k0.spec, thm3_coboundary_shift(kf, g)));
    CHECK_FALSE(kernels_isomorphic(kf.spec, k0.spec, Matrix::identity(kf.spec.k->dim())));
}

TEST_CASE("thm3 rejects non-cocycles") {
    auto a = fx::dual_numbers();
    auto m = BimoduleSC::regular(a);
    std::mt19937_64 rng(3);
    auto f = fx::random_cochain(rng, 2, 3, 2);
    REQUIRE_FALSE(is_cocycle(m, f));
    try {
        build_kernel_thm3(a, m, f);
        FAIL("expected NotCocycle");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotCocycle);
    }
}

TEST_CASE("thm4 kernel over a null algebra") {
    auto a = fx::null_algebra(2);
    auto m = BimoduleSC::zero_actions(a, 1);
    std::mt19937_64 rng(5);
    auto f = fx::random_cochain(rng, 2, 3, 1);
    auto tk = build_kernel_thm4_finite(a, m, f);
    CHECK(tk.spec.k->dim() == thm4_dimension(2, 1));
    CHECK(thm4_dimension(2, 1) == 1 + 2 + 2 + 8);
    check_theorem_kernel(tk, f);
    CHECK(kernel_obstruction(tk.spec).cls.coords.size() == cohomology_dim(m, 3));
}

TEST_CASE("thm4 kernel with a nontrivial left action") {
    auto a = fx::strict_upper3();
    BimoduleSC m(a, 2);
    // e12 sends the second basis vector to the first; e13, e23 act by zero
    m.left[0].at(0, 1) = 1;
    REQUIRE(validate_bimodule(m).empty());
    std::mt19937_64 rng(9);
    auto g = fx::random_cochain(rng, 3, 2, 2);
    auto f = hdelta(m, g);
    auto tk = build_kernel_thm4_finite(a, m, f);
    check_theorem_kernel(tk, f);
}

TEST_CASE("kernel arithmetic over a common nucleus") {
    auto a = fx::null_algebra(1);
    auto m = BimoduleSC::zero_actions(a, 1);
    auto f1 = constant_cochain(1, 3, fx::vec({1}));
    auto f2 = constant_cochain(1, 3, fx::vec({2}));
    auto k1 = build_kernel_thm3(a, m, f1);
    auto k2 = build_kernel_thm3(a, m, f2);

    auto add = verify_obs_additivity(k1.spec, k2.spec);
    CHECK(add.sum_is_kernel);
    CHECK(add.additive);
    CHECK(add.cls_sum == fx::vec({3}));

    auto s3 = kernel_scale(Scalar(3), k1.spec);
    CHECK(validate_kernel_spec(s3, &m).empty());
    CHECK(kernel_obstruction(s3).cls.coords == fx::vec({3}));
    auto s0 = kernel_scale(Scalar(0), k1.spec);
    CHECK(kernel_obstruction(s0).vanishes);

    auto one = kernel_scale(Scalar(1), k1.spec);
    CHECK(kernels_isomorphic(one, k1.spec, scale_one_map(k1.spec)));

    auto t = trivial_kernel(a, m);
    CHECK(kernel_obstruction(t).vanishes);
    auto kt = kernel_sum(k1.spec, t);
    CHECK(kernels_isomorphic(kt, k1.spec, sum_with_trivial_map(k1.spec)));
    CHECK(kernels_equivalent_witness(kt, k1.spec, t, t, induced_sum_map(kt, t, k1.spec, t,
                                                                       sum_with_trivial_map(k1.spec),
                                                                       Matrix::identity(1))));
}

TEST_CASE("kernel sums commute and associate up to isomorphism") {
    auto a = fx::dual_numbers();
    auto m = BimoduleSC::regular(a);
    std::mt19937_64 rng(31);
    auto k1 = build_kernel_thm3(a, m, hdelta(m, fx::random_cochain(rng, 2, 2, 2))).spec;
    auto k2 = build_kernel_thm3(a, m, HCochain(2, 3, 2)).spec;
    auto k3 = trivial_kernel(a, m);
    auto s12 = kernel_sum(k1, k2), s21 = kernel_sum(k2, k1);
    CHECK(s12.k->dim() == k1.k->dim() + k2.k->dim() - 2);
    CHECK(kernels_isomorphic(s12, s21, sum_swap_map(k1, k2)));
    auto left = kernel_sum(s12, k3), right = kernel_sum(k1, kernel_sum(k2, k3));
    CHECK(kernels_isomorphic(left, right, sum_assoc_map(k1, k2, k3)));
    CHECK(kernels_isomorphic(k1, k1, Matrix::identity(k1.k->dim())));
}

TEST_CASE("cohomologous cocycles give equivalent theorem kernels") {
    auto a = fx::null_algebra(2);
    auto m = BimoduleSC::zero_actions(a, 1);
    std::mt19937_64 rng(33);
    auto f = fx::random_cochain(rng, 2, 3, 1);
    auto g = fx::random_cochain(rng, 2, 2, 1);
    auto kf = build_kernel_thm3(a, m, f);
    auto kg = build_kernel_thm3(a, m, f - hdelta(m, g));
    auto t = trivial_kernel(a, m);
    Matrix sigma = induced_sum_map(kf.spec, t, kg.spec, t, thm3_coboundary_shift(kf, g), Matrix::identity(1));
    CHECK(kernels_equivalent_witness(kf.spec, kg.spec, t, t, sigma));
    CHECK(kernels_isomorphic(kf.spec, kg.spec, thm3_coboundary_shift(kf, g)));
}

TEST_CASE("kernel sum refuses different nuclei") {
    auto a = fx::null_algebra(1);
    auto k1 = build_kernel_thm3(a, BimoduleSC::zero_actions(a, 1), HCochain(1, 3, 1));
    auto k2 = build_kernel_thm3(a, BimoduleSC::zero_actions(a, 2), HCochain(1, 3, 2));
    CHECK_THROWS_AS(kernel_sum(k1.spec, k2.spec), Error);
}

TEST_CASE("bimodule extension of a cocycle") {
    auto a = fx::null_algebra(2);
    auto q = BimoduleSC::zero_actions(a, 1);
    std::mt19937_64 rng(1);
    auto f = fx::random_cochain(rng, 2, 3, 1);
    auto x = bimodule_ext_from_cocycle(a, q, f);
    CHECK(validate_bimodule(x.e).empty());
    CHECK(connecting_cochain(x) == f);
    auto h = canonical_h_e(x);
    auto dh = hdelta(x.e, h);
    Matrix to_q(1, x.e.dim);
    to_q.at(0, x.e.dim - 1) = 1;
    CHECK(dh.mapped(to_q) == f);
    CHECK(x.pi * x.gamma == Matrix::identity(4));

    auto x0 = bimodule_ext_from_cocycle(a, q, HCochain(2, 3, 1));
    CHECK(connecting_cochain(x0).is_zero());
    CHECK(hdelta(x0.e, canonical_h_e(x0)).is_zero());
}

TEST_CASE("bimodule extensions of cohomologous cocycles are isomorphic") {
    auto a = fx::dual_numbers();
    BimoduleSC q(a, 2);
    // left action by multiplication, zero right action
    q.left = BimoduleSC::regular(a).left;
    REQUIRE(validate_bimodule(q).empty());
    std::mt19937_64 rng(35);
    auto g = fx::random_cochain(rng, 2, 2, 2);
    auto xf = bimodule_ext_from_cocycle(a, q, hdelta(q, g));
    auto x0 = bimodule_ext_from_cocycle(a, q, HCochain(2, 3, 2));
    CHECK(validate_bimodule(xf.e).empty());
    // (p, q) -> (p, q + g(p))
    Matrix phi = Matrix::identity(6);
    for (size_t p = 0; p < 4; ++p) {
        Vec gv = g.value({p / 2, p % 2});
        for (size_t t = 0; t < 2; ++t) phi.at(4 + t, p) += gv[t];
    }
    for (size_t c = 0; c < 2; ++c) {
        CHECK(phi * xf.e.left[c] == x0.e.left[c] * phi);
        CHECK(phi * xf.e.right[c] == x0.e.right[c] * phi);
    }
}
