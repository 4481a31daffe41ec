#include "obstrukt/kernel.hpp"

#include <map>

#include "obstrukt/errors.hpp"

namespace obstrukt {

namespace {

SVec from_map(const std::map<size_t, Scalar>& acc) {
    SVec out;
    for (const auto& [i, c] : acc)
        if (!c.is_zero()) out.emplace_back(i, c);
    return out;
}

Matrix inclusion(size_t rows, size_t offset, size_t cols) {
    Matrix m(rows, cols);
    for (size_t j = 0; j < cols; ++j) m.at(offset + j, j) = 1;
    return m;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    size_t n = m.rows();
    ColumnSolver s(n);
    for (size_t j = 0; j < n; ++j)
        if (!s.add_column(m.col_sparse(j))) return std::nullopt;
    Matrix inv(n, n);
    for (size_t j = 0; j < n; ++j) {
        Vec x = *s.solve(SVec{{j, Scalar(1)}});
        for (size_t i = 0; i < n; ++i) inv.at(i, j) = x[i];
    }
    return inv;
}

// big algebra with a connection, divided by a central subspace
KernelSpec quotient_kernel(std::shared_ptr<const AlgebraSC> a, const AlgebraSC& big, const Connection& conn,
                           const Subspace& ideal, const Matrix& anni_big) {
    QuotientSpace q(big.dim(), ideal);
    size_t d = q.dim();
    std::vector<std::string> names;
    for (size_t r : q.representatives()) names.push_back(big.names()[r]);
    auto k = std::make_shared<AlgebraSC>(big.field(), d, names);
    std::vector<Vec> lifts;
    for (size_t i = 0; i < d; ++i) lifts.push_back(q.lift(unit(d, i)));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) k->set_product(i, j, to_sparse(q.project(big.mul(lifts[i], lifts[j]))));
    Connection mu(a, k);
    for (size_t x = 0; x < a->dim(); ++x)
        for (size_t j = 0; j < d; ++j) {
            Vec u = q.project(conn[x].u.apply(lifts[j]));
            Vec v = q.project(conn[x].v.apply(lifts[j]));
            for (size_t t = 0; t < d; ++t) {
                mu.pairs[x].u.at(t, j) = u[t];
                mu.pairs[x].v.at(t, j) = v[t];
            }
        }
    Matrix id(d, anni_big.cols());
    for (size_t j = 0; j < anni_big.cols(); ++j) {
        Vec p = q.project(anni_big.col(j));
        for (size_t t = 0; t < d; ++t) id.at(t, j) = p[t];
    }
    return make_kernel_spec(mu, id);
}

void require_common_nucleus(const KernelSpec& k1, const KernelSpec& k2) {
    if (!(*k1.a == *k2.a)) fail(ErrorKind::NucleusMismatch, "kernels over different algebras");
    const auto& r1 = k1.nucleus.rep;
    const auto& r2 = k2.nucleus.rep;
    if (r1.dim != r2.dim || r1.left != r2.left || r1.right != r2.right)
        fail(ErrorKind::NucleusMismatch, "kernels carry different central representations");
}

Connection block_connection(std::shared_ptr<const AlgebraSC> a, std::shared_ptr<const AlgebraSC> big,
                            const std::vector<const std::vector<BiPair>*>& parts,
                            const std::vector<size_t>& dims) {
    Connection c(a, big);
    for (size_t x = 0; x < a->dim(); ++x) {
        size_t off = 0;
        for (size_t p = 0; p < parts.size(); ++p) {
            const BiPair& bp = (*parts[p])[x];
            for (size_t r = 0; r < dims[p]; ++r)
                for (size_t s = 0; s < dims[p]; ++s) {
                    c.pairs[x].u.at(off + r, off + s) = bp.u.at(r, s);
                    c.pairs[x].v.at(off + r, off + s) = bp.v.at(r, s);
                }
            off += dims[p];
        }
    }
    return c;
}

std::vector<BiPair> rep_pairs(const BimoduleSC& m) {
    std::vector<BiPair> out;
    for (size_t x = 0; x < m.left.size(); ++x) out.emplace_back(m.left[x], m.right[x]);
    return out;
}

Subspace sum_ideal(const KernelSpec& k1, const KernelSpec& k2) {
    size_t d1 = k1.k->dim(), d2 = k2.k->dim();
    std::vector<Vec> gens;
    for (size_t j = 0; j < k1.nucleus.dim(); ++j) {
        Vec v(d1 + d2);
        Vec a = k1.nucleus.anni_id.col(j), b = k2.nucleus.anni_id.col(j);
        for (size_t t = 0; t < d1; ++t) v[t] = a[t];
        for (size_t t = 0; t < d2; ++t) v[d1 + t] = -b[t];
        gens.push_back(std::move(v));
    }
    return Subspace::span(d1 + d2, gens);
}

}  // namespace

KernelSpec make_kernel_spec(const Connection& lift, const Matrix& anni_id) {
    auto bad = lift.invalid_pairs();
    if (!bad.empty()) fail(ErrorKind::InvalidExtension, "lift value at " + lift.a->names()[bad[0]] + " is not a bimultiplication");
    std::optional<PairWitness> w;
    if (!is_regular(lift, &w))
        fail(ErrorKind::InvalidExtension,
             "lift is not regular at (" + lift.a->names()[w->i] + ", " + lift.a->names()[w->j] + ")");
    KernelSpec ks;
    ks.a = lift.a;
    ks.k = lift.k;
    ks.coupling = coupling_from_connection(lift);
    ks.nucleus = central_representation(ks.coupling, anni_id);
    return ks;
}

std::vector<std::string> validate_kernel_spec(const KernelSpec& ks, const BimoduleSC* expected) {
    std::vector<std::string> issues;
    if (!validate_associative(*ks.k).empty()) issues.push_back("K is not associative");
    if (!ks.coupling.lift.invalid_pairs().empty()) issues.push_back("lift leaves Mul(K)");
    if (!is_regular(ks.coupling.lift)) issues.push_back("lift is not regular");
    Subspace anni = compute_anni(*ks.k);
    std::vector<Vec> cols;
    for (size_t j = 0; j < ks.nucleus.dim(); ++j) cols.push_back(ks.nucleus.anni_id.col(j));
    if (!(Subspace::span(ks.k->dim(), cols) == anni)) issues.push_back("identification does not span Anni(K)");
    if (!validate_bimodule(ks.nucleus.rep).empty()) issues.push_back("central representation is not a bimodule");
    if (expected && (expected->dim != ks.nucleus.rep.dim || expected->left != ks.nucleus.rep.left ||
                     expected->right != ks.nucleus.rep.right))
        issues.push_back("central representation differs from the expected one");
    return issues;
}

ObstructionReport kernel_obstruction(const KernelSpec& ks) { return obstruction_class(ks.coupling, ks.nucleus); }

size_t thm3_dimension(size_t alpha, size_t m) {
    return m + 2 + alpha + alpha * alpha + alpha * alpha * alpha + alpha * alpha * (alpha + 1);
}

TheoremKernel build_kernel_thm3(std::shared_ptr<const AlgebraSC> ap, const BimoduleSC& m, const HCochain& f) {
    const AlgebraSC& a = *ap;
    size_t al = a.dim(), md = m.dim, as = al + 1;
    require_dims(m.over->dim() == al, "module over a different algebra");
    require_dims(f.adim() == al && f.degree() == 3 && f.vdim() == md, "cocycle shape");
    if (!is_cocycle(m, f)) fail(ErrorKind::NotCocycle, "input cochain is not a 3-cocycle");

    const size_t E = md, F = md + 1, B1 = md + 2, B2 = B1 + al, B3 = B2 + al * al, BP = B3 + al * al * al;
    const size_t dim = BP + al * al * as;
    auto i1 = [&](size_t x) { return B1 + x; };
    auto i2 = [&](size_t x, size_t y) { return B2 + x * al + y; };
    auto i3 = [&](size_t x, size_t y, size_t z) { return B3 + (x * al + y) * al + z; };
    auto pp = [&](size_t x, size_t y, size_t s) { return BP + (x * al + y) * as + s; };
    const size_t ONE = al;  // slot of the formal unit in A*

    std::vector<std::string> names;
    for (size_t j = 0; j < md; ++j) names.push_back("m:" + std::to_string(j));
    names.push_back("e");
    names.push_back("f");
    const auto& an = a.names();
    for (size_t x = 0; x < al; ++x) names.push_back("e⊗" + an[x]);
    for (size_t x = 0; x < al; ++x)
        for (size_t y = 0; y < al; ++y) names.push_back("e⊗" + an[x] + "⊗" + an[y]);
    for (size_t x = 0; x < al; ++x)
        for (size_t y = 0; y < al; ++y)
            for (size_t z = 0; z < al; ++z) names.push_back("e⊗" + an[x] + "⊗" + an[y] + "⊗" + an[z]);
    for (size_t x = 0; x < al; ++x)
        for (size_t y = 0; y < al; ++y)
            for (size_t s = 0; s < as; ++s) names.push_back(an[x] + "⊗" + an[y] + "⊗" + (s == ONE ? "1" : an[s]));

    auto k = std::make_shared<AlgebraSC>(a.field(), dim, names);
    auto add = [&](std::map<size_t, Scalar>& acc, size_t idx, const Scalar& c) { acc[idx] += c; };

    for (size_t x : {E, F}) {
        for (size_t y : {E, F}) k->set_product(x, y, SVec{{y, Scalar(1)}});
        for (size_t v = B1; v < BP; ++v) k->set_product(x, v, SVec{{v, Scalar(1)}});
    }
    // e (a1 (x) a2 (x) s) and (e (x) b)(a1 (x) a2 (x) s)
    for (size_t x = 0; x < al; ++x)
        for (size_t y = 0; y < al; ++y)
            for (size_t s = 0; s < as; ++s) {
                std::map<size_t, Scalar> acc;
                if (s == ONE) {
                    add(acc, i2(x, y), Scalar(1));
                } else {
                    for (const auto& [t, c] : a.product(y, s)) add(acc, i2(x, t), c);
                    for (const auto& [t, c] : a.product(x, y)) add(acc, i2(t, s), -c);
                    add(acc, i3(x, y, s), Scalar(1));
                }
                k->set_product(E, pp(x, y, s), from_map(acc));
                for (size_t b = 0; b < al; ++b) {
                    std::map<size_t, Scalar> acc2;
                    if (s == ONE) {
                        add(acc2, i3(b, x, y), Scalar(1));
                    } else {
                        for (const auto& [t, c] : a.product(y, s)) add(acc2, i3(b, x, t), c);
                        for (const auto& [t, c] : a.product(x, y)) add(acc2, i3(b, t, s), -c);
                        for (const auto& [t, c] : a.product(b, x)) add(acc2, i3(t, y, s), c);
                    }
                    k->set_product(i1(b), pp(x, y, s), from_map(acc2));
                }
            }

    Connection mu(ap, k);
    for (size_t q = 0; q < al; ++q) {
        Matrix& u = mu.pairs[q].u;
        Matrix& v = mu.pairs[q].v;
        for (size_t j = 0; j < md; ++j)
            for (size_t t = 0; t < md; ++t) {
                u.at(t, j) = m.left[q].at(t, j);
                v.at(t, j) = m.right[q].at(t, j);
            }
        for (size_t x = 0; x < al; ++x)
            for (size_t y = 0; y < al; ++y)
                for (size_t s = 0; s < as; ++s) {
                    size_t col = pp(x, y, s);
                    // q(x (x) y (x) s) = qx (x) y (x) s - q (x) xy (x) s + q (x) x (x) ys
                    for (const auto& [t, c] : a.product(q, x)) u.at(pp(t, y, s), col) += c;
                    for (const auto& [t, c] : a.product(x, y)) u.at(pp(q, t, s), col) -= c;
                    if (s == ONE) {
                        u.at(pp(q, x, y), col) += 1;
                    } else {
                        for (const auto& [t, c] : a.product(y, s)) u.at(pp(q, x, t), col) += c;
                    }
                    Vec fv = f.value({q, x, y});
                    if (s != ONE) fv = m.right[s].apply(fv);
                    for (size_t t = 0; t < md; ++t) u.at(t, col) += fv[t];
                    // (x (x) y (x) s) q = x (x) y (x) sq
                    if (s == ONE) {
                        v.at(pp(x, y, q), col) += 1;
                    } else {
                        for (const auto& [t, c] : a.product(s, q)) v.at(pp(x, y, t), col) += c;
                    }
                }
        v.at(i1(q), E) += 1;
        for (size_t x = 0; x < al; ++x) {
            for (const auto& [t, c] : a.product(x, q)) v.at(i1(t), i1(x)) += c;
            v.at(i2(x, q), i1(x)) += 1;
            for (size_t y = 0; y < al; ++y) {
                size_t col = i2(x, y);
                for (const auto& [t, c] : a.product(y, q)) v.at(i2(x, t), col) += c;
                for (const auto& [t, c] : a.product(x, y)) v.at(i2(t, q), col) -= c;
                v.at(i3(x, y, q), col) += 1;
                for (size_t z = 0; z < al; ++z) {
                    size_t col3 = i3(x, y, z);
                    for (const auto& [t, c] : a.product(z, q)) v.at(i3(x, y, t), col3) += c;
                    for (const auto& [t, c] : a.product(y, z)) v.at(i3(x, t, q), col3) -= c;
                    for (const auto& [t, c] : a.product(x, y)) v.at(i3(t, z, q), col3) += c;
                }
            }
        }
    }

    TheoremKernel tk;
    tk.spec = make_kernel_spec(mu, inclusion(dim, 0, md));
    tk.components = {{"M", 0, md},
                     {"C", E, 2},
                     {"E⊗A'", B1, al},
                     {"E⊗A'⊗A'", B2, al * al},
                     {"E⊗A'⊗A'⊗A'", B3, al * al * al},
                     {"A⊗A⊗A*", BP, al * al * as}};
    tk.hbar = Hindrance(al, 2, dim);
    for (size_t x = 0; x < al; ++x)
        for (size_t y = 0; y < al; ++y) tk.hbar.set({x, y}, unit(dim, pp(x, y, ONE)));
    return tk;
}

Thm4Kernel::Thm4Kernel(Thm4Data d) : d_(std::move(d)) {
    base_1_ = d_.m + 2;
    base_2_ = base_1_ + d_.alpha;
    base_w_ = base_2_ + d_.alpha * d_.alpha;
    if (d_.names.empty())
        for (size_t i = 0; i < d_.alpha; ++i) d_.names.push_back("u" + std::to_string(i));
    if (d_.module_names.empty())
        for (size_t i = 0; i < d_.m; ++i) d_.module_names.push_back(std::to_string(i));
}

std::vector<Component> Thm4Kernel::components() const {
    return {{"M", 0, d_.m},
            {"C", d_.m, 2},
            {"U'", base_1_, d_.alpha},
            {"U'⊗U'", base_2_, d_.alpha * d_.alpha},
            {"U⊗U", base_w_, d_.alpha * d_.alpha}};
}

std::string Thm4Kernel::label(size_t k) const {
    const auto& n = d_.names;
    size_t al = d_.alpha;
    if (k < d_.m) return "m:" + d_.module_names[k];
    if (k == e_index()) return "e";
    if (k == f_index()) return "f";
    if (k < base_2_) return n[k - base_1_] + "'";
    if (k < base_w_) return n[(k - base_2_) / al] + "'⊗" + n[(k - base_2_) % al] + "'";
    return n[(k - base_w_) / al] + "⊗" + n[(k - base_w_) % al];
}

SVec Thm4Kernel::bilinear(size_t base, const SVec& x, const SVec& y) const {
    SVec out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) axpy(out, a * b, SVec{{base + i * d_.alpha + j, Scalar(1)}});
    return out;
}

SVec Thm4Kernel::product(size_t i, size_t j) const {
    size_t m = d_.m, al = d_.alpha;
    if (i < m || j < m) return {};
    bool i_c = i == e_index() || i == f_index();
    if (i_c && j < base_w_) return SVec{{j, Scalar(1)}};
    if (j >= base_w_) {
        size_t u1 = (j - base_w_) / al, u2 = (j - base_w_) % al;
        if (i == e_index()) return SVec{{u2_index(u1, u2), Scalar(1)}};
        if (i >= base_1_ && i < base_2_) {
            size_t u = i - base_1_;
            // u'(u1 (x) u2) = (u u1)' (x) u2' - u' (x) (u1 u2)'
            SVec out = bilinear(base_2_, d_.mul(u, u1), SVec{{u2, Scalar(1)}});
            axpy(out, Scalar(-1), bilinear(base_2_, SVec{{u, Scalar(1)}}, d_.mul(u1, u2)));
            return out;
        }
    }
    return {};
}

SVec Thm4Kernel::mul(const SVec& x, const SVec& y) const {
    SVec out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) {
            SVec p = product(i, j);
            if (!p.empty()) axpy(out, a * b, p);
        }
    return out;
}

SVec Thm4Kernel::act_left(size_t u, const SVec& k) const {
    size_t m = d_.m, al = d_.alpha;
    SVec out;
    Vec mv(m);
    bool any_m = false;
    for (const auto& [idx, c] : k) {
        if (idx < m) {
            mv[idx] += c;
            any_m = true;
        } else if (idx >= base_w_) {
            size_t u1 = (idx - base_w_) / al, u2 = (idx - base_w_) % al;
            axpy(out, c, bilinear(base_w_, d_.mul(u, u1), SVec{{u2, Scalar(1)}}));
            axpy(out, -c, bilinear(base_w_, SVec{{u, Scalar(1)}}, d_.mul(u1, u2)));
            Vec fv = d_.cocycle(u, u1, u2);
            for (size_t t = 0; t < m; ++t) fv[t] *= c;
            axpy(out, Scalar(1), to_sparse(fv));
        }
    }
    if (any_m) axpy(out, Scalar(1), to_sparse(d_.act(u, mv)));
    return out;
}

SVec Thm4Kernel::act_right(const SVec& k, size_t u) const {
    SVec out;
    for (const auto& [idx, c] : k) {
        if (idx == e_index()) {
            axpy(out, c, SVec{{u1_index(u), Scalar(1)}});
        } else if (idx >= base_1_ && idx < base_2_) {
            size_t u1 = idx - base_1_;
            for (const auto& [t, cc] : d_.mul(u1, u)) axpy(out, c * cc, SVec{{u1_index(t), Scalar(1)}});
            axpy(out, c, SVec{{u2_index(u1, u), Scalar(1)}});
        }
    }
    return out;
}

SVec Thm4Kernel::act_left(const SVec& u, const SVec& k) const {
    SVec out;
    for (const auto& [i, c] : u) axpy(out, c, act_left(i, k));
    return out;
}

SVec Thm4Kernel::act_right(const SVec& k, const SVec& u) const {
    SVec out;
    for (const auto& [i, c] : u) axpy(out, c, act_right(k, i));
    return out;
}

size_t thm4_dimension(size_t alpha, size_t m) { return m + 2 + alpha + 2 * alpha * alpha; }

TheoremKernel build_kernel_thm4_finite(std::shared_ptr<const AlgebraSC> ap, const BimoduleSC& m, const HCochain& f) {
    const AlgebraSC& a = *ap;
    require_dims(m.over->dim() == a.dim(), "module over a different algebra");
    require_dims(f.adim() == a.dim() && f.degree() == 3 && f.vdim() == m.dim, "cocycle shape");
    if (!m.right_trivial()) fail(ErrorKind::InputError, "the simplified kernel needs a zero right action");
    if (!is_cocycle(m, f)) fail(ErrorKind::NotCocycle, "input cochain is not a 3-cocycle");
    Thm4Data d;
    d.alpha = a.dim();
    d.m = m.dim;
    d.mul = [ap](size_t i, size_t j) { return ap->product(i, j); };
    d.act = [&m](size_t u, const Vec& v) { return m.left[u].apply(v); };
    d.cocycle = [&f](size_t x, size_t y, size_t z) { return f.value({x, y, z}); };
    d.names = a.names();
    Thm4Kernel t(d);
    size_t dim = t.dim();
    std::vector<std::string> names;
    for (size_t i = 0; i < dim; ++i) names.push_back(t.label(i));
    auto k = std::make_shared<AlgebraSC>(a.field(), dim, names);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            SVec p = t.product(i, j);
            if (!p.empty()) k->set_product(i, j, p);
        }
    Connection mu(ap, k);
    for (size_t q = 0; q < a.dim(); ++q)
        for (size_t j = 0; j < dim; ++j) {
            SVec e{{j, Scalar(1)}};
            for (const auto& [r, c] : t.act_left(q, e)) mu.pairs[q].u.at(r, j) = c;
            for (const auto& [r, c] : t.act_right(e, q)) mu.pairs[q].v.at(r, j) = c;
        }
    TheoremKernel tk;
    tk.spec = make_kernel_spec(mu, inclusion(dim, 0, m.dim));
    tk.components = t.components();
    tk.hbar = Hindrance(a.dim(), 2, dim);
    for (size_t x = 0; x < a.dim(); ++x)
        for (size_t y = 0; y < a.dim(); ++y) tk.hbar.set({x, y}, unit(dim, t.w_index(x, y)));
    return tk;
}

KernelSpec kernel_sum(const KernelSpec& k1, const KernelSpec& k2) {
    require_common_nucleus(k1, k2);
    auto big = std::make_shared<AlgebraSC>(direct_sum(*k1.k, *k2.k));
    size_t d1 = k1.k->dim(), d2 = k2.k->dim();
    Connection conn = block_connection(k1.a, big, {&k1.coupling.lift.pairs, &k2.coupling.lift.pairs}, {d1, d2});
    Matrix anni(d1 + d2, k1.nucleus.dim());
    for (size_t j = 0; j < k1.nucleus.dim(); ++j)
        for (size_t t = 0; t < d1; ++t) anni.at(t, j) = k1.nucleus.anni_id.at(t, j);
    return quotient_kernel(k1.a, *big, conn, sum_ideal(k1, k2), anni);
}

KernelSpec kernel_scale(const Scalar& lambda, const KernelSpec& ks) {
    size_t d = ks.k->dim(), n = ks.nucleus.dim();
    auto null_n = std::make_shared<AlgebraSC>(ks.k->field(), n);
    auto big = std::make_shared<AlgebraSC>(direct_sum(*ks.k, *null_n));
    auto rp = rep_pairs(ks.nucleus.rep);
    Connection conn = block_connection(ks.a, big, {&ks.coupling.lift.pairs, &rp}, {d, n});
    std::vector<Vec> gens;
    for (size_t j = 0; j < n; ++j) {
        Vec v(d + n);
        Vec col = ks.nucleus.anni_id.col(j);
        for (size_t t = 0; t < d; ++t) v[t] = col[t];
        v[d + j] = -lambda;
        gens.push_back(std::move(v));
    }
    Matrix anni = inclusion(d + n, d, n);
    return quotient_kernel(ks.a, *big, conn, Subspace::span(d + n, gens), anni);
}

KernelSpec trivial_kernel(std::shared_ptr<const AlgebraSC> a, const BimoduleSC& rep) {
    auto null_n = std::make_shared<AlgebraSC>(a->field(), rep.dim);
    Connection c(a, null_n);
    for (size_t x = 0; x < a->dim(); ++x) c.pairs[x] = BiPair(rep.left[x], rep.right[x]);
    return make_kernel_spec(c, Matrix::identity(rep.dim));
}

bool kernels_isomorphic(const KernelSpec& k1, const KernelSpec& k2, const Matrix& sigma) {
    size_t d1 = k1.k->dim(), d2 = k2.k->dim();
    if (sigma.rows() != d2 || sigma.cols() != d1 || d1 != d2) return false;
    if (!(*k1.a == *k2.a)) return false;
    auto inv = inverse(sigma);
    if (!inv) return false;
    for (size_t i = 0; i < d1; ++i)
        for (size_t j = 0; j < d1; ++j)
            if (sigma.apply(to_dense(k1.k->product(i, j), d1)) != k2.k->mul(sigma.col(i), sigma.col(j)))
                return false;
    if (sigma * k1.nucleus.anni_id != k2.nucleus.anni_id) return false;
    for (size_t x = 0; x < k1.a->dim(); ++x) {
        const BiPair& p1 = k1.coupling.lift[x];
        const BiPair& p2 = k2.coupling.lift[x];
        BiPair moved(sigma * p1.u * *inv, sigma * p1.v * *inv);
        if (!k2.coupling.inner->is_inner(moved - p2)) return false;
    }
    return true;
}

bool kernels_equivalent_witness(const KernelSpec& k1, const KernelSpec& k2, const KernelSpec& s1,
                                const KernelSpec& s2, const Matrix& sigma) {
    if (!kernel_obstruction(s1).vanishes || !kernel_obstruction(s2).vanishes) return false;
    return kernels_isomorphic(kernel_sum(k1, s1), kernel_sum(k2, s2), sigma);
}

Matrix induced_sum_map(const KernelSpec& src1, const KernelSpec& src2, const KernelSpec& dst1,
                       const KernelSpec& dst2, const Matrix& s1, const Matrix& s2) {
    size_t a1 = src1.k->dim(), a2 = src2.k->dim(), b1 = dst1.k->dim(), b2 = dst2.k->dim();
    require_dims(s1.rows() == b1 && s1.cols() == a1 && s2.rows() == b2 && s2.cols() == a2, "summand map shapes");
    QuotientSpace qs(a1 + a2, sum_ideal(src1, src2));
    QuotientSpace qd(b1 + b2, sum_ideal(dst1, dst2));
    Matrix out(qd.dim(), qs.dim());
    for (size_t j = 0; j < qs.dim(); ++j) {
        Vec l = qs.lift(unit(qs.dim(), j));
        Vec x(a1), y(a2);
        for (size_t t = 0; t < a1; ++t) x[t] = l[t];
        for (size_t t = 0; t < a2; ++t) y[t] = l[a1 + t];
        Vec sx = s1.apply(x), sy = s2.apply(y);
        Vec img(b1 + b2);
        for (size_t t = 0; t < b1; ++t) img[t] = sx[t];
        for (size_t t = 0; t < b2; ++t) img[b1 + t] = sy[t];
        Vec p = qd.project(img);
        for (size_t t = 0; t < p.size(); ++t) out.at(t, j) = p[t];
    }
    return out;
}

namespace {

Vec concat(const Vec& x, const Vec& y) {
    Vec out = x;
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

Matrix columns_of(const QuotientSpace& src, size_t rows, const std::function<Vec(const Vec&)>& image) {
    Matrix out(rows, src.dim());
    for (size_t j = 0; j < src.dim(); ++j) {
        Vec v = image(src.lift(unit(src.dim(), j)));
        for (size_t t = 0; t < rows; ++t) out.at(t, j) = v[t];
    }
    return out;
}

}  // namespace

Matrix sum_swap_map(const KernelSpec& k1, const KernelSpec& k2) {
    size_t d1 = k1.k->dim(), d2 = k2.k->dim();
    QuotientSpace qs(d1 + d2, sum_ideal(k1, k2));
    QuotientSpace qd(d1 + d2, sum_ideal(k2, k1));
    return columns_of(qs, qd.dim(), [&](const Vec& l) {
        return qd.project(concat(Vec(l.begin() + d1, l.end()), Vec(l.begin(), l.begin() + d1)));
    });
}

Matrix sum_assoc_map(const KernelSpec& k1, const KernelSpec& k2, const KernelSpec& k3) {
    KernelSpec s12 = kernel_sum(k1, k2), s23 = kernel_sum(k2, k3);
    size_t d1 = k1.k->dim(), d2 = k2.k->dim(), d3 = k3.k->dim();
    QuotientSpace q12(d1 + d2, sum_ideal(k1, k2)), q23(d2 + d3, sum_ideal(k2, k3));
    QuotientSpace qs(q12.dim() + d3, sum_ideal(s12, k3)), qd(d1 + q23.dim(), sum_ideal(k1, s23));
    return columns_of(qs, qd.dim(), [&](const Vec& l) {
        Vec w(l.begin(), l.begin() + q12.dim()), z(l.begin() + q12.dim(), l.end());
        Vec xy = q12.lift(w);
        Vec x(xy.begin(), xy.begin() + d1), y(xy.begin() + d1, xy.end());
        return qd.project(concat(x, q23.project(concat(y, z))));
    });
}

Matrix sum_with_trivial_map(const KernelSpec& ks) {
    KernelSpec t = trivial_kernel(ks.a, ks.nucleus.rep);
    size_t d = ks.k->dim(), n = ks.nucleus.dim();
    QuotientSpace q(d + n, sum_ideal(ks, t));
    Matrix out(d, q.dim());
    for (size_t j = 0; j < q.dim(); ++j) {
        Vec l = q.lift(unit(q.dim(), j));
        Vec k(l.begin(), l.begin() + d), nv(l.begin() + d, l.end());
        Vec img = k + ks.nucleus.embed(nv);
        for (size_t t = 0; t < d; ++t) out.at(t, j) = img[t];
    }
    return out;
}

Matrix scale_one_map(const KernelSpec& ks) {
    size_t d = ks.k->dim(), n = ks.nucleus.dim();
    std::vector<Vec> gens;
    for (size_t j = 0; j < n; ++j) {
        Vec v(d + n);
        Vec col = ks.nucleus.anni_id.col(j);
        for (size_t t = 0; t < d; ++t) v[t] = col[t];
        v[d + j] = Scalar(-1);
        gens.push_back(std::move(v));
    }
    QuotientSpace q(d + n, Subspace::span(d + n, gens));
    Matrix out(d, q.dim());
    for (size_t j = 0; j < q.dim(); ++j) {
        Vec l = q.lift(unit(q.dim(), j));
        Vec k(l.begin(), l.begin() + d), nv(l.begin() + d, l.end());
        Vec img = k + ks.nucleus.embed(nv);
        for (size_t t = 0; t < d; ++t) out.at(t, j) = img[t];
    }
    return out;
}

Matrix thm3_coboundary_shift(const TheoremKernel& kf, const HCochain& g) {
    const AlgebraSC& a = *kf.spec.a;
    const BimoduleSC& m = kf.spec.nucleus.rep;
    size_t al = a.dim(), md = m.dim, as = al + 1, dim = kf.spec.k->dim();
    require_dims(g.adim() == al && g.degree() == 2 && g.vdim() == md, "shift cochain shape");
    size_t bp = 0;
    for (const auto& c : kf.components)
        if (c.label == "A⊗A⊗A*") bp = c.offset;
    Matrix s = Matrix::identity(dim);
    for (size_t x = 0; x < al; ++x)
        for (size_t y = 0; y < al; ++y)
            for (size_t t = 0; t < as; ++t) {
                Vec gv = g.value({x, y});
                if (t != al) gv = m.right[t].apply(gv);
                size_t col = bp + (x * al + y) * as + t;
                Vec img = kf.spec.nucleus.embed(gv);
                for (size_t r = 0; r < dim; ++r) s.at(r, col) += img[r];
            }
    return s;
}

AdditivityReport verify_obs_additivity(const KernelSpec& k1, const KernelSpec& k2) {
    AdditivityReport r;
    KernelSpec s = kernel_sum(k1, k2);
    r.sum_is_kernel = validate_kernel_spec(s, &k1.nucleus.rep).empty();
    r.cls1 = kernel_obstruction(k1).cls.coords;
    r.cls2 = kernel_obstruction(k2).cls.coords;
    r.cls_sum = kernel_obstruction(s).cls.coords;
    r.additive = r.cls_sum == r.cls1 + r.cls2;
    return r;
}

BimoduleExt bimodule_ext_from_cocycle(std::shared_ptr<const AlgebraSC> ap, const BimoduleSC& q, const HCochain& f) {
    const AlgebraSC& a = *ap;
    size_t al = a.dim(), qd = q.dim, pd = al * al, ed = pd + qd;
    require_dims(q.over->dim() == al, "module over a different algebra");
    require_dims(f.adim() == al && f.degree() == 3 && f.vdim() == qd, "cocycle shape");
    if (!is_cocycle(q, f)) fail(ErrorKind::NotCocycle, "input cochain is not a 3-cocycle");
    BimoduleExt x{ap, q, BimoduleSC(ap, ed), Matrix(pd, ed), Matrix(ed, pd), f};
    for (size_t c = 0; c < al; ++c) {
        Matrix& l = x.e.left[c];
        Matrix& r = x.e.right[c];
        for (size_t a1 = 0; a1 < al; ++a1)
            for (size_t a2 = 0; a2 < al; ++a2) {
                size_t col = a1 * al + a2;
                for (const auto& [t, v] : a.product(c, a1)) l.at(t * al + a2, col) += v;
                for (const auto& [t, v] : a.product(a1, a2)) l.at(c * al + t, col) -= v;
                Vec fv = f.value({c, a1, a2});
                for (size_t s = 0; s < qd; ++s) l.at(pd + s, col) += fv[s];
            }
        for (size_t s = 0; s < qd; ++s)
            for (size_t t = 0; t < qd; ++t) {
                l.at(pd + t, pd + s) = q.left[c].at(t, s);
                r.at(pd + t, pd + s) = q.right[c].at(t, s);
            }
    }
    for (size_t p = 0; p < pd; ++p) {
        x.pi.at(p, p) = 1;
        x.gamma.at(p, p) = 1;
    }
    return x;
}

HCochain connecting_cochain(const BimoduleExt& x) {
    size_t al = x.a->dim(), pd = al * al, qd = x.q.dim;
    HCochain out(al, 3, qd);
    for (size_t c = 0; c < al; ++c)
        for (size_t p = 0; p < pd; ++p) {
            Vec gp = x.gamma.col(p);
            Vec lhs = x.e.left[c].apply(gp);
            Vec ap(pd);
            Vec pe = x.pi.apply(lhs);
            for (size_t t = 0; t < pd; ++t) ap[t] = pe[t];
            Vec diff = lhs - x.gamma.apply(ap);
            Vec qv(diff.begin() + pd, diff.end());
            for (size_t t = 0; t < pd; ++t)
                if (!diff[t].is_zero()) fail(ErrorKind::Internal, "connecting cochain leaves Q");
            out.set({c, p / al, p % al}, qv);
        }
    return out;
}

Cochain canonical_h_e(const BimoduleExt& x) {
    size_t al = x.a->dim(), ed = x.e.dim;
    Cochain h(al, 2, ed);
    for (size_t a1 = 0; a1 < al; ++a1)
        for (size_t a2 = 0; a2 < al; ++a2) h.set({a1, a2}, unit(ed, a1 * al + a2));
    return h;
}

}  // namespace obstrukt
