#include "obstrukt/obstruction.hpp"

#include "obstrukt/errors.hpp"

namespace obstrukt {

namespace {

std::string pair_name(const AlgebraSC& a, size_t i, size_t j) {
    return "(" + a.names()[i] + ", " + a.names()[j] + ")";
}

Matrix columns_of(const Subspace& s) {
    Matrix m(s.ambient_dim(), s.dim());
    for (size_t j = 0; j < s.dim(); ++j) {
        Vec v = s.vector(j);
        for (size_t i = 0; i < v.size(); ++i) m.at(i, j) = v[i];
    }
    return m;
}

Vec coords_or_fail(const ColumnSolver& s, const Vec& v, const std::string& what) {
    auto x = s.solve(to_sparse(v));
    if (!x) fail(ErrorKind::InvalidExtension, what);
    return *x;
}

}  // namespace

bool Curvature::is_zero() const {
    for (const auto& p : values)
        if (!p.is_zero()) return false;
    return true;
}

Curvature curvature(const Connection& mu) {
    size_t n = mu.a->dim();
    Curvature r{n, {}};
    r.values.reserve(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            r.values.push_back(mul_product(mu[i], mu[j]) - mu.at(to_dense(mu.a->product(i, j), n)));
    return r;
}

Hindrance lift_hindrance(const Coupling& c, const Curvature& r) {
    const auto& a = *c.lift.a;
    size_t n = a.dim(), kd = c.lift.k->dim();
    Hindrance h(n, 2, kd);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto x = c.inner->lift(r.at(i, j));
            if (!x) fail(ErrorKind::NotInner, "curvature at " + pair_name(a, i, j) + " is not inner");
            h.set({i, j}, *x);
        }
    return h;
}

bool hindrance_lifts(const Connection& mu, const Hindrance& h, const Curvature& r) {
    size_t n = mu.a->dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (epsilon(h.value({i, j}), *mu.k) != r.at(i, j)) return false;
    return true;
}

Nucleus::Nucleus(Matrix id, BimoduleSC r) : anni_id(std::move(id)), rep(std::move(r)) {
    auto s = std::make_shared<ColumnSolver>(anni_id.rows());
    for (size_t j = 0; j < anni_id.cols(); ++j)
        if (!s->add_column(anni_id.col_sparse(j)))
            fail(ErrorKind::DimensionMismatch, "nucleus identification is not injective");
    solver = std::move(s);
}

std::optional<Vec> Nucleus::coords(const Vec& k) const { return solver->solve(to_sparse(k)); }

Nucleus central_representation(const Coupling& c, const std::optional<Matrix>& anni_id) {
    const AlgebraSC& k = *c.lift.k;
    Subspace anni = compute_anni(k);
    Matrix id = anni_id ? *anni_id : columns_of(anni);
    require_dims(id.rows() == k.dim(), "nucleus identification rows");
    if (id.cols() != anni.dim()) fail(ErrorKind::NucleusMismatch, "identification does not match dim Anni(K)");
    for (size_t j = 0; j < id.cols(); ++j)
        if (!anni.contains(id.col(j))) fail(ErrorKind::NucleusMismatch, "identification leaves Anni(K)");
    Nucleus nu(id, BimoduleSC(c.lift.a, id.cols()));
    for (size_t i = 0; i < c.lift.a->dim(); ++i)
        for (size_t j = 0; j < id.cols(); ++j) {
            Vec x = id.col(j);
            auto l = nu.coords(c.lift[i].u.apply(x));
            auto r = nu.coords(c.lift[i].v.apply(x));
            if (!l || !r) fail(ErrorKind::Internal, "bimultiplication does not preserve Anni(K)");
            for (size_t t = 0; t < id.cols(); ++t) {
                nu.rep.left[i].at(t, j) = (*l)[t];
                nu.rep.right[i].at(t, j) = (*r)[t];
            }
        }
    return nu;
}

Cochain obstruction_cocycle_k(const Connection& mu, const Hindrance& h) {
    require_dims(h.degree() == 2, "hindrance degree");
    return twisted_delta(mu, h);
}

HCochain obstruction_cocycle(const Connection& mu, const Hindrance& h, const Nucleus& n) {
    Cochain fk = obstruction_cocycle_k(mu, h);
    HCochain f(mu.a->dim(), 3, n.dim());
    for (size_t t = 0; t < fk.num_tuples(); ++t) {
        auto x = n.coords(fk.value(t));
        if (!x) {
            auto tup = fk.decode(t);
            fail(ErrorKind::ValueEscapesAnnihilator,
                 "f(" + mu.a->names()[tup[0]] + ", " + mu.a->names()[tup[1]] + ", " + mu.a->names()[tup[2]] +
                     ") is not in Anni(K)");
        }
        f.set(t, *x);
    }
    return f;
}

ObstructionReport obstruction_class(const Coupling& c, const Nucleus& n) {
    ObstructionReport r;
    r.curv = curvature(c.lift);
    r.h = lift_hindrance(c, r.curv);
    r.f = obstruction_cocycle(c.lift, r.h, n);
    CohomologySpace h3(n.rep, 3);
    r.cls = h3.class_of(r.f);
    r.vanishes = is_zero(r.cls.coords);
    if (r.vanishes) {
        r.primitive = is_coboundary(n.rep, r.f);
        if (!r.primitive) fail(ErrorKind::Internal, "zero class without a primitive");
    }
    return r;
}

Cochain lift_change_term(const Connection& mu, const Matrix& l) {
    size_t n = mu.a->dim(), kd = mu.k->dim();
    Cochain lc(n, 1, kd);
    for (size_t i = 0; i < n; ++i) lc.set(i, l.col(i));
    Cochain d = twisted_delta(mu, lc);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) d.add(d.encode({i, j}), Scalar(1), mu.k->mul(l.col(i), l.col(j)));
    return d;
}

IndependenceReport verify_independence(const Coupling& c, const Nucleus& nu, const Matrix& l, const Hindrance& h,
                                       const HCochain& g) {
    const Connection& mu = c.lift;
    size_t n = mu.a->dim();
    require_dims(g.adim() == n && g.degree() == 2 && g.vdim() == nu.dim(), "hindrance perturbation shape");
    IndependenceReport rep;
    Connection mu2 = perturb_connection(mu, l);
    rep.lifted_is_law = is_regular(mu2);
    if (rep.lifted_is_law) {
        try {
            coupling_from_connection(mu2, c.inner);
        } catch (const Error&) {
            rep.lifted_is_law = false;
        }
    }
    Curvature r1 = curvature(mu), r2 = curvature(mu2);
    Cochain term = lift_change_term(mu, l);
    rep.curvature_identity = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (r2.at(i, j) - r1.at(i, j) != epsilon(term.value({i, j}), *mu.k)) rep.curvature_identity = false;
    Hindrance h2 = h + term;
    rep.hindrance_lifts = hindrance_lifts(mu2, h2, r2);
    rep.cocycle_unchanged = obstruction_cocycle_k(mu2, h2) == obstruction_cocycle_k(mu, h);
    // h - h_g = i o g
    Hindrance ig(n, 2, mu.k->dim());
    for (size_t t = 0; t < g.num_tuples(); ++t) ig.set(t, nu.embed(g.value(t)));
    Hindrance hg = h - ig;
    HCochain diff = obstruction_cocycle(mu, h, nu) - obstruction_cocycle(mu, hg, nu);
    rep.hindrance_ambiguity = diff == hdelta(nu.rep, g);
    return rep;
}

void validate_extension(const ExtensionSC& e) {
    size_t ad = e.a->dim(), kd = e.k->dim(), bd = e.b->dim();
    require_dims(e.alpha.rows() == bd && e.alpha.cols() == kd, "alpha shape");
    require_dims(e.beta.rows() == ad && e.beta.cols() == bd, "beta shape");
    require_dims(e.gamma.rows() == bd && e.gamma.cols() == ad, "gamma shape");
    if (rank(e.alpha) != kd) fail(ErrorKind::InvalidExtension, "alpha is not injective");
    if (rank(e.beta) != ad) fail(ErrorKind::InvalidExtension, "beta is not surjective");
    if (!(e.beta * e.alpha).is_zero()) fail(ErrorKind::InvalidExtension, "beta o alpha != 0");
    if (kd + ad != bd) fail(ErrorKind::InvalidExtension, "image of alpha differs from kernel of beta");
    if (e.beta * e.gamma != Matrix::identity(ad)) fail(ErrorKind::SectionNotSection, "beta o gamma != id");
    for (size_t i = 0; i < kd; ++i)
        for (size_t j = 0; j < kd; ++j)
            if (e.alpha.apply(to_dense(e.k->product(i, j), kd)) != e.b->mul(e.alpha.col(i), e.alpha.col(j)))
                fail(ErrorKind::InvalidExtension, "alpha is not multiplicative");
    for (size_t i = 0; i < bd; ++i)
        for (size_t j = 0; j < bd; ++j)
            if (e.beta.apply(to_dense(e.b->product(i, j), bd)) !=
                e.a->mul(e.beta.col(i), e.beta.col(j)))
                fail(ErrorKind::InvalidExtension, "beta is not multiplicative");
}

ExtensionCoupling extension_coupling(const ExtensionSC& e) {
    validate_extension(e);
    size_t ad = e.a->dim(), kd = e.k->dim();
    ColumnSolver alpha_inv(e.b->dim());
    for (size_t j = 0; j < kd; ++j) alpha_inv.add_column(e.alpha.col_sparse(j));
    Connection mu(e.a, e.k);
    for (size_t i = 0; i < ad; ++i) {
        Vec g = e.gamma.col(i);
        for (size_t j = 0; j < kd; ++j) {
            Vec k = e.alpha.col(j);
            Vec u = coords_or_fail(alpha_inv, e.b->mul(g, k), "gamma(a) alpha(k) outside alpha(K)");
            Vec v = coords_or_fail(alpha_inv, e.b->mul(k, g), "alpha(k) gamma(a) outside alpha(K)");
            for (size_t t = 0; t < kd; ++t) {
                mu.pairs[i].u.at(t, j) = u[t];
                mu.pairs[i].v.at(t, j) = v[t];
            }
        }
    }
    Hindrance h(ad, 2, kd);
    for (size_t i = 0; i < ad; ++i)
        for (size_t j = 0; j < ad; ++j) {
            Vec r = e.b->mul(e.gamma.col(i), e.gamma.col(j)) - e.gamma.apply(to_dense(e.a->product(i, j), ad));
            auto x = alpha_inv.solve(to_sparse(r));
            if (!x)
                fail(ErrorKind::ProductEscapesKernel,
                     "gamma(a1)gamma(a2) - gamma(a1a2) leaves alpha(K) at " + pair_name(*e.a, i, j));
            h.set({i, j}, *x);
        }
    return {mu, h};
}

ExtensionSC crossed_product(std::shared_ptr<const AlgebraSC> a, std::shared_ptr<const AlgebraSC> k,
                            const Connection& mu, const Hindrance& h) {
    size_t ad = a->dim(), kd = k->dim(), bd = ad + kd;
    require_dims(mu.a->dim() == ad && mu.k->dim() == kd, "crossed product connection");
    require_dims(h.adim() == ad && h.degree() == 2 && h.vdim() == kd, "crossed product hindrance");
    if (!hindrance_lifts(mu, h, curvature(mu)))
        fail(ErrorKind::InvalidExtension, "hindrance does not lift the curvature");
    if (!obstruction_cocycle_k(mu, h).is_zero())
        fail(ErrorKind::ObstructionNonzero, "obstruction cocycle is not zero as a cochain");
    std::vector<std::string> names = a->names();
    for (const auto& s : k->names()) names.push_back(s);
    auto b = std::make_shared<AlgebraSC>(a->field(), bd, names);
    auto shift = [ad](const Vec& v) {
        SVec out;
        for (size_t t = 0; t < v.size(); ++t)
            if (!v[t].is_zero()) out.emplace_back(ad + t, v[t]);
        return out;
    };
    for (size_t i = 0; i < ad; ++i)
        for (size_t j = 0; j < ad; ++j) {
            SVec p = a->product(i, j);
            for (auto& e : shift(h.value({i, j}))) p.push_back(e);
            b->set_product(i, j, p);
        }
    for (size_t i = 0; i < ad; ++i)
        for (size_t s = 0; s < kd; ++s) {
            b->set_product(i, ad + s, shift(mu[i].u.col(s)));
            b->set_product(ad + s, i, shift(mu[i].v.col(s)));
        }
    for (size_t s = 0; s < kd; ++s)
        for (size_t t = 0; t < kd; ++t) {
            SVec p;
            for (const auto& [x, c] : k->product(s, t)) p.emplace_back(ad + x, c);
            b->set_product(ad + s, ad + t, p);
        }
    if (!validate_associative(*b).empty())
        fail(ErrorKind::InvalidExtension, "crossed product is not associative; the connection is not a law");
    ExtensionSC e{a, k, b, Matrix(bd, kd), Matrix(ad, bd), Matrix(bd, ad)};
    for (size_t s = 0; s < kd; ++s) e.alpha.at(ad + s, s) = 1;
    for (size_t i = 0; i < ad; ++i) {
        e.beta.at(i, i) = 1;
        e.gamma.at(i, i) = 1;
    }
    return e;
}

}  // namespace obstrukt
