#include <doctest.h>

#include "../support/fixtures.hpp"

using namespace obstrukt;

namespace {

std::vector<ExtensionSC> all_extensions() {
    return {fx::ext_dual_bent(), fx::ext_upper2(), fx::ext_poly3_over_poly2(), fx::ext_strict_upper3(),
            fx::ext_poly3_bent()};
}

bool curvature_equal(const Curvature& a, const Curvature& b) { return a.values == b.values; }

}  // namespace

TEST_CASE("curvature") {
    auto d = fx::dual_numbers();
    Connection flat(d, d);
    for (size_t i = 0; i < 2; ++i) flat.pairs[i] = epsilon(d->basis(i), *d);
    CHECK(curvature(flat).is_zero());

    auto ec = extension_coupling(fx::ext_poly3_bent());
    Curvature r = curvature(ec.mu);
    CHECK_FALSE(r.is_zero());
    // R(1,1) = eps(t + t^2) in K = span(t, t^2)
    CHECK(r.at(0, 0) == epsilon(fx::vec({1, 1}), *ec.mu.k));
    CHECK(r.at(0, 0) != r.at(0, 0).scaled(Scalar(-1)));
}

TEST_CASE("hindrance lifting") {
    auto ec = extension_coupling(fx::ext_poly3_bent());
    auto cp = coupling_from_connection(ec.mu);
    Curvature r = curvature(ec.mu);
    auto h = lift_hindrance(cp, r);
    CHECK(hindrance_lifts(ec.mu, h, r));
    // eps(t^2) = 0, so the canonical lift drops the t^2 term that the section produces
    CHECK(h.value({0, 0}) == fx::vec({1, 0}));
    CHECK(ec.h.value({0, 0}) == fx::vec({1, 1}));
    CHECK(compute_anni(*ec.mu.k).contains((ec.h - h).value({0, 0})));

    // zero curvature lifts to zero
    auto z = fx::null_algebra(1);
    auto kz = fx::null_algebra(2);
    Connection c(z, kz);
    auto cz = coupling_from_connection(c);
    CHECK(lift_hindrance(cz, curvature(c)).is_zero());

    // hindrances differ by Anni-valued maps
    auto tk = build_kernel_thm3(fx::dual_numbers(), BimoduleSC::regular(fx::dual_numbers()), HCochain(2, 3, 2));
    std::mt19937_64 rng(21);
    auto g = fx::random_cochain(rng, 2, 2, 2);
    Hindrance h2 = tk.hbar + g.mapped(tk.spec.nucleus.anni_id);
    CHECK(hindrance_lifts(tk.spec.coupling.lift, h2, curvature(tk.spec.coupling.lift)));

    // a curvature value outside Inn(K) is refused
    auto f1 = fx::unital1();
    Curvature bad{1, {BiPair(Matrix::identity(1), Matrix::identity(1))}};
    Connection cf(f1, z);
    cf.pairs[0] = BiPair::identity(1);
    auto cpf = coupling_from_connection(cf);
    try {
        lift_hindrance(cpf, bad);
        FAIL("expected NotInner");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInner);
    }
}

TEST_CASE("extensions give vanishing obstruction cocycles") {
    for (const auto& e : all_extensions()) {
        CHECK_NOTHROW(validate_extension(e));
        auto ec = extension_coupling(e);
        CHECK(hindrance_lifts(ec.mu, ec.h, curvature(ec.mu)));
        CHECK(obstruction_cocycle_k(ec.mu, ec.h).is_zero());
        auto cp = coupling_from_connection(ec.mu);
        auto nu = central_representation(cp);
        auto rep = obstruction_class(cp, nu);
        CHECK(rep.vanishes);
        CHECK(is_cocycle(nu.rep, rep.f));
    }
}

TEST_CASE("section changes keep the coupling") {
    auto e = fx::ext_poly3_bent();
    auto ec = extension_coupling(e);
    ExtensionSC e2 = e;
    Matrix l(2, 1);
    l.at(0, 0) = 3;
    l.at(1, 0) = -1;
    e2.gamma = e.gamma + e.alpha * l;
    auto ec2 = extension_coupling(e2);
    CHECK(ec2.mu.pairs[0] != ec.mu.pairs[0]);
    auto il = InnerLift(e.k);
    CHECK(il.is_inner(ec2.mu.pairs[0] - ec.mu.pairs[0]));

    ExtensionSC split = fx::ext_dual_bent();
    split.gamma.at(1, 0) = 0;
    CHECK(extension_coupling(split).h.is_zero());

    ExtensionSC bad = fx::ext_dual_bent();
    bad.gamma.at(0, 0) = 0;
    try {
        extension_coupling(bad);
        FAIL("expected SectionNotSection");
    } catch (const Error& x) {
        CHECK(x.kind() == ErrorKind::SectionNotSection);
    }
}

TEST_CASE("crossed products round trip") {
    for (const auto& e : all_extensions()) {
        auto ec = extension_coupling(e);
        auto cross = crossed_product(e.a, e.k, ec.mu, ec.h);
        CHECK(cross.b->dim() == e.a->dim() + e.k->dim());
        CHECK(validate_associative(*cross.b).empty());
        auto back = extension_coupling(cross);
        CHECK(back.mu.pairs == ec.mu.pairs);
        CHECK(back.h == ec.h);
        // (a, k) -> gamma(a) + alpha(k) is an algebra isomorphism onto B
        size_t ad = e.a->dim(), kd = e.k->dim();
        Matrix phi(e.b->dim(), ad + kd);
        for (size_t j = 0; j < ad; ++j)
            for (size_t r = 0; r < e.b->dim(); ++r) phi.at(r, j) = e.gamma.at(r, j);
        for (size_t j = 0; j < kd; ++j)
            for (size_t r = 0; r < e.b->dim(); ++r) phi.at(r, ad + j) = e.alpha.at(r, j);
        CHECK(rank(phi) == e.b->dim());
        for (size_t i = 0; i < ad + kd; ++i)
            for (size_t j = 0; j < ad + kd; ++j)
                CHECK(phi.apply(to_dense(cross.b->product(i, j), ad + kd)) == e.b->mul(phi.col(i), phi.col(j)));
    }
}

TEST_CASE("crossed product demands a vanishing cochain") {
    auto a = fx::dual_numbers();
    auto m = BimoduleSC::regular(a);
    std::mt19937_64 rng(23);
    auto g = fx::random_cochain(rng, 2, 2, 2);
    auto f = hdelta(m, g);
    REQUIRE_FALSE(f.is_zero());
    auto tk = build_kernel_thm3(a, m, f);
    const auto& mu = tk.spec.coupling.lift;
    try {
        crossed_product(a, tk.spec.k, mu, tk.hbar);
        FAIL("expected ObstructionNonzero");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ObstructionNonzero);
    }
    auto pre = is_coboundary(m, f);
    REQUIRE(pre);
    Hindrance h = tk.hbar - pre->mapped(tk.spec.nucleus.anni_id);
    auto cross = crossed_product(a, tk.spec.k, mu, h);
    CHECK(cross.b->dim() == 2 + tk.spec.k->dim());
}

TEST_CASE("central representations") {
    auto d = fx::dual_numbers();
    Connection c(d, d);
    for (size_t i = 0; i < 2; ++i) c.pairs[i] = epsilon(d->basis(i), *d);
    auto nu = central_representation(coupling_from_connection(c));
    CHECK(nu.dim() == 0);
    CHECK(obstruction_class(coupling_from_connection(c), nu).f.is_zero());

    auto z = fx::null_algebra(2);
    auto m = BimoduleSC::zero_actions(z, 2);
    m.left[0].at(0, 1) = 1;
    REQUIRE(validate_bimodule(m).empty());
    Connection rc = representation_connection(m);
    auto nz = central_representation(coupling_from_connection(rc));
    CHECK(nz.rep.left == m.left);
    CHECK(nz.rep.right == m.right);

    auto tk = build_kernel_thm3(d, BimoduleSC::regular(d), HCochain(2, 3, 2));
    std::mt19937_64 rng(25);
    Matrix l = fx::random_matrix(rng, tk.spec.k->dim(), 2);
    auto c2 = coupling_from_connection(perturb_connection(tk.spec.coupling.lift, l));
    auto n2 = central_representation(c2, tk.spec.nucleus.anni_id);
    CHECK(n2.rep.left == tk.spec.nucleus.rep.left);
    CHECK(n2.rep.right == tk.spec.nucleus.rep.right);
}

TEST_CASE("lift independence") {
    auto d = fx::dual_numbers();
    auto m = BimoduleSC::regular(d);
    std::mt19937_64 rng(27);
    auto g0 = fx::random_cochain(rng, 2, 2, 2);
    auto tk = build_kernel_thm3(d, m, hdelta(m, g0));
    const auto& cp = tk.spec.coupling;
    Matrix zero(tk.spec.k->dim(), 2);
    CHECK(verify_independence(cp, tk.spec.nucleus, zero, tk.hbar, HCochain(2, 2, 2)).ok());
    for (int t = 0; t < 3; ++t) {
        Matrix l = fx::random_matrix(rng, tk.spec.k->dim(), 2);
        auto g = fx::random_cochain(rng, 2, 2, 2);
        auto rep = verify_independence(cp, tk.spec.nucleus, l, tk.hbar, g);
        CHECK(rep.lifted_is_law);
        CHECK(rep.curvature_identity);
        CHECK(rep.hindrance_lifts);
        CHECK(rep.cocycle_unchanged);
        CHECK(rep.hindrance_ambiguity);
    }
}

TEST_CASE("obstruction cocycle properties on a theorem kernel") {
    auto a = fx::strict_upper3();
    auto m = BimoduleSC::zero_actions(a, 1);
    std::mt19937_64 rng(29);
    HCochain f(3, 3, 1);
    f.set({0, 0, 0}, fx::vec({1}));
    REQUIRE(is_cocycle(m, f));
    REQUIRE_FALSE(is_coboundary(m, f));
    auto tk = build_kernel_thm3(a, m, f);
    const auto& mu = tk.spec.coupling.lift;
    const auto& k = *tk.spec.k;
    auto fk = obstruction_cocycle_k(mu, tk.hbar);
    for (size_t t = 0; t < fk.num_tuples(); ++t) {
        Vec v = fk.value(t);
        for (int s = 0; s < 5; ++s) {
            Vec x = fx::random_vec(rng, k.dim());
            CHECK(is_zero(k.mul(v, x)));
            CHECK(is_zero(k.mul(x, v)));
        }
    }
    auto fn = obstruction_cocycle(mu, tk.hbar, tk.spec.nucleus);
    CHECK(hdelta(tk.spec.nucleus.rep, fn).is_zero());
    // a2.(a3.k) - (a2a3).k = h(a2,a3) k and (k.a2).a3 - k.(a2a3) = k h(a2,a3)
    for (size_t a2 = 0; a2 < 3; ++a2)
        for (size_t a3 = 0; a3 < 3; ++a3) {
            Vec kx = fx::random_vec(rng, k.dim());
            Vec a23 = to_dense(a->product(a2, a3), 3);
            Vec h = tk.hbar.value({a2, a3});
            CHECK(mu[a2].u.apply(mu[a3].u.apply(kx)) - mu.at(a23).u.apply(kx) == k.mul(h, kx));
            CHECK(mu[a3].v.apply(mu[a2].v.apply(kx)) - mu.at(a23).v.apply(kx) == k.mul(kx, h));
        }
    auto rep = kernel_obstruction(tk.spec);
    CHECK_FALSE(rep.vanishes);
    CohomologySpace h3(m, 3);
    Matrix l = fx::random_matrix(rng, k.dim(), 3);
    auto c2 = coupling_from_connection(perturb_connection(mu, l));
    auto rep2 = obstruction_class(c2, central_representation(c2, tk.spec.nucleus.anni_id));
    CHECK(h3.same_class(rep.f, rep2.f));
}
