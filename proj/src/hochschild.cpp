#include "obstrukt/hochschild.hpp"

#include <map>

#include "obstrukt/errors.hpp"

namespace obstrukt {

namespace {

void check_degree(size_t n) {
    if (n > kMaxHochschildDegree)
        fail(ErrorKind::InputError, "Hochschild degree " + std::to_string(n) + " exceeds the supported bound " +
                                        std::to_string(kMaxHochschildDegree));
}

size_t ipow(size_t b, size_t e) {
    size_t r = 1;
    while (e--) r *= b;
    return r;
}

// for every k, the (x, y, c) with e_x e_y = ... + c e_k + ...
std::vector<std::vector<std::tuple<size_t, size_t, Scalar>>> inverse_products(const AlgebraSC& a) {
    std::vector<std::vector<std::tuple<size_t, size_t, Scalar>>> inv(a.dim());
    for (size_t x = 0; x < a.dim(); ++x)
        for (size_t y = 0; y < a.dim(); ++y)
            for (const auto& [k, c] : a.product(x, y)) inv[k].emplace_back(x, y, c);
    return inv;
}

SVec from_map(const std::map<size_t, Scalar>& acc) {
    SVec out;
    for (const auto& [i, c] : acc)
        if (!c.is_zero()) out.emplace_back(i, c);
    return out;
}

bool has_unit_slot(size_t tuple, size_t adim, size_t n, size_t unit) {
    for (size_t k = 0; k < n; ++k) {
        if (tuple % adim == unit) return true;
        tuple /= adim;
    }
    return false;
}

}  // namespace

std::vector<SVec> delta_columns(const BimoduleSC& m, size_t n) {
    check_degree(n);
    const AlgebraSC& a = *m.over;
    size_t ad = a.dim(), md = m.dim;
    size_t ntup = ipow(ad, n), stride = ipow(ad, n);  // stride of the first slot in degree n+1
    auto inv = inverse_products(a);
    std::vector<SVec> cols;
    cols.reserve(ntup * md);
    std::vector<size_t> t(n);
    for (size_t ti = 0; ti < ntup; ++ti) {
        {
            size_t r = ti;
            for (size_t k = n; k-- > 0;) {
                t[k] = r % ad;
                r /= ad;
            }
        }
        for (size_t j = 0; j < md; ++j) {
            std::map<size_t, Scalar> acc;
            // a1 . f(a2..): output tuple (a1, t)
            for (size_t a1 = 0; a1 < ad; ++a1)
                for (size_t y = 0; y < md; ++y) {
                    const Scalar& c = m.left[a1].at(y, j);
                    if (!c.is_zero()) acc[(a1 * stride + ti) * md + y] += c;
                }
            // (-1)^i f(.. a_i a_{i+1} ..), slot i of t is the product
            for (size_t i = 0; i < n; ++i) {
                Scalar sign = (i % 2 == 0) ? Scalar(-1) : Scalar(1);
                for (const auto& [x, y, c] : inv[t[i]]) {
                    size_t idx = 0;
                    for (size_t s = 0; s < n; ++s) {
                        if (s == i) {
                            idx = idx * ad + x;
                            idx = idx * ad + y;
                        } else {
                            idx = idx * ad + t[s];
                        }
                    }
                    acc[idx * md + j] += sign * c;
                }
            }
            // (-1)^{n+1} f(..) . a_{n+1}
            Scalar last = (n % 2 == 0) ? Scalar(-1) : Scalar(1);
            for (size_t an = 0; an < ad; ++an)
                for (size_t y = 0; y < md; ++y) {
                    const Scalar& c = m.right[an].at(y, j);
                    if (!c.is_zero()) acc[(ti * ad + an) * md + y] += last * c;
                }
            cols.push_back(from_map(acc));
        }
    }
    return cols;
}

HCochain hdelta(const BimoduleSC& m, const HCochain& f) {
    require_dims(f.adim() == m.over->dim() && f.vdim() == m.dim, "hochschild cochain shape");
    auto cols = delta_columns(m, f.degree());
    HCochain out(m.over->dim(), f.degree() + 1, m.dim);
    Vec& d = out.flat();
    const Vec& src = f.flat();
    for (size_t c = 0; c < cols.size(); ++c) {
        if (src[c].is_zero()) continue;
        for (const auto& [r, v] : cols[c]) d[r] += src[c] * v;
    }
    return out;
}

bool is_cocycle(const BimoduleSC& m, const HCochain& f) { return hdelta(m, f).is_zero(); }

std::optional<HCochain> is_coboundary(const BimoduleSC& m, const HCochain& f) {
    require_dims(f.adim() == m.over->dim() && f.vdim() == m.dim, "hochschild cochain shape");
    if (f.degree() == 0) return std::nullopt;
    size_t n = f.degree() - 1;
    ColumnSolver s(f.flat().size());
    for (const auto& c : delta_columns(m, n)) s.add_column(c);
    auto x = s.solve(to_sparse(f.flat()));
    if (!x) return std::nullopt;
    return HCochain::from_flat(m.over->dim(), n, m.dim, std::move(*x));
}

namespace {

size_t column_rank(const std::vector<SVec>& cols, size_t rows, const std::vector<bool>* keep = nullptr) {
    ColumnSolver s(rows);
    for (size_t i = 0; i < cols.size(); ++i)
        if (!keep || (*keep)[i]) s.add_column(cols[i]);
    return s.rank();
}

}  // namespace

size_t cohomology_dim(const BimoduleSC& m, size_t n) {
    check_degree(n);
    size_t ad = m.over->dim();
    size_t cn = ipow(ad, n) * m.dim;
    size_t rank_n = column_rank(delta_columns(m, n), ipow(ad, n + 1) * m.dim);
    size_t rank_prev = n == 0 ? 0 : column_rank(delta_columns(m, n - 1), cn);
    return cn - rank_n - rank_prev;
}

size_t cohomology_dim_normalized(const BimoduleSC& m, size_t n) {
    check_degree(n);
    const AlgebraSC& a = *m.over;
    if (!a.unital_idx) fail(ErrorKind::InputError, "normalized cochains need a unital algebra");
    size_t ad = a.dim(), u = *a.unital_idx;
    auto keep_mask = [&](size_t deg) {
        std::vector<bool> keep(ipow(ad, deg) * m.dim);
        for (size_t i = 0; i < keep.size(); ++i) keep[i] = !has_unit_slot(i / m.dim, ad, deg, u);
        return keep;
    };
    auto kn = keep_mask(n);
    size_t cn = 0;
    for (bool b : kn) cn += b;
    size_t rank_n = column_rank(delta_columns(m, n), ipow(ad, n + 1) * m.dim, &kn);
    size_t rank_prev = 0;
    if (n > 0) {
        auto kp = keep_mask(n - 1);
        rank_prev = column_rank(delta_columns(m, n - 1), ipow(ad, n) * m.dim, &kp);
    }
    return cn - rank_n - rank_prev;
}

CohomologySpace::CohomologySpace(const BimoduleSC& m, size_t n) : m_(m), n_(n) {
    check_degree(n);
    size_t ad = m.over->dim();
    size_t cn = ipow(ad, n) * m.dim;
    // Z^n as the kernel of delta_n, rows assembled from the columns
    auto cols = delta_columns(m, n);
    std::map<size_t, std::map<size_t, Scalar>> rows;
    for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, v] : cols[c]) rows[r][c] += v;
    SparseEchelon ech(cn);
    for (auto& [r, row] : rows) ech.add_row(from_map(row));
    Subspace z = ech.kernel();
    zdim_ = z.dim();
    std::vector<Vec> bgens;
    if (n > 0)
        for (const auto& c : delta_columns(m, n - 1))
            if (!c.empty()) bgens.push_back(to_dense(c, cn));
    b_ = Subspace::span(cn, bgens);
    q_ = QuotientSpace(cn, b_);
    std::vector<Vec> zq;
    for (size_t i = 0; i < z.dim(); ++i) zq.push_back(q_.project(z.vector(i)));
    zq_ = Subspace::span(q_.dim(), zq);
}

HClass CohomologySpace::class_of(const HCochain& f) const {
    require_dims(f.degree() == n_ && f.adim() == m_.over->dim() && f.vdim() == m_.dim, "class_of shape");
    if (!is_cocycle(m_, f)) fail(ErrorKind::NotCocycle, "cochain is not a cocycle");
    return HClass{n_, f, zq_.coords(q_.project(f.flat()))};
}

bool CohomologySpace::same_class(const HCochain& f, const HCochain& g) const {
    return class_of(f).coords == class_of(g).coords;
}

HClass class_of(const BimoduleSC& m, const HCochain& f) { return CohomologySpace(m, f.degree()).class_of(f); }

Connection representation_connection(const BimoduleSC& m) {
    auto null_m = std::make_shared<AlgebraSC>(m.over->field(), m.dim);
    Connection c(m.over, null_m);
    for (size_t i = 0; i < m.over->dim(); ++i) c.pairs[i] = BiPair(m.left[i], m.right[i]);
    return c;
}

}  // namespace obstrukt
