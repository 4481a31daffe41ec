#pragma once

// Brute-force reference computations over boost::rational, sharing no code
// with the library's linear algebra.

#include <boost/rational.hpp>
#include <vector>

#include "obstrukt/algebra.hpp"

namespace oracle {

using Q = boost::rational<long long>;
using Row = std::vector<Q>;

inline Q to_q(const obstrukt::Scalar& s) {
    mpq_class v = s.value();
    return Q(v.get_num().get_si(), v.get_den().get_si());
}

inline size_t rank(std::vector<Row> rows) {
    if (rows.empty()) return 0;
    size_t cols = rows[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && rows[p][c] == Q(0)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == Q(0)) continue;
            Q f = rows[i][c] / rows[r][c];
            for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

// c[(i*n + j)*n + k]: e_i e_j = sum_k c e_k
struct Alg {
    size_t n = 0;
    std::vector<Q> c;
    Q at(size_t i, size_t j, size_t k) const { return c[(i * n + j) * n + k]; }
};

inline Alg from(const obstrukt::AlgebraSC& a) {
    Alg o{a.dim(), std::vector<Q>(a.dim() * a.dim() * a.dim())};
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j)
            for (const auto& [k, v] : a.product(i, j)) o.c[(i * o.n + j) * o.n + k] = to_q(v);
    return o;
}

// l[a][x][y]: coefficient of e_x in e_a . e_y
struct Bimod {
    size_t m = 0;
    std::vector<std::vector<std::vector<Q>>> l, r;
};

inline Bimod from(const obstrukt::BimoduleSC& b) {
    Bimod o;
    o.m = b.dim;
    for (size_t a = 0; a < b.left.size(); ++a) {
        std::vector<std::vector<Q>> L(b.dim, std::vector<Q>(b.dim)), R = L;
        for (size_t x = 0; x < b.dim; ++x)
            for (size_t y = 0; y < b.dim; ++y) {
                L[x][y] = to_q(b.left[a].at(x, y));
                R[x][y] = to_q(b.right[a].at(x, y));
            }
        o.l.push_back(L);
        o.r.push_back(R);
    }
    return o;
}

// dim of the space of pairs (u, v) with k1 u(k2) = v(k1) k2, u(k1k2) = u(k1)k2, v(k1k2) = k1 v(k2)
inline size_t mul_dim(const Alg& a) {
    size_t n = a.n, unk = 2 * n * n;
    auto U = [n](size_t r, size_t c) { return r * n + c; };
    auto V = [n](size_t r, size_t c) { return n * n + r * n + c; };
    std::vector<Row> eq;
    for (size_t k1 = 0; k1 < n; ++k1)
        for (size_t k2 = 0; k2 < n; ++k2)
            for (size_t out = 0; out < n; ++out) {
                Row r1(unk), r2(unk), r3(unk);
                for (size_t t = 0; t < n; ++t) {
                    // k1 u(k2) - v(k1) k2
                    r1[U(t, k2)] += a.at(k1, t, out);
                    r1[V(t, k1)] -= a.at(t, k2, out);
                    // u(k1 k2) - u(k1) k2
                    r2[U(out, t)] += a.at(k1, k2, t);
                    r2[U(t, k1)] -= a.at(t, k2, out);
                    // v(k1 k2) - k1 v(k2)
                    r3[V(out, t)] += a.at(k1, k2, t);
                    r3[V(t, k2)] -= a.at(k1, t, out);
                }
                eq.push_back(r1);
                eq.push_back(r2);
                eq.push_back(r3);
            }
    return unk - rank(eq);
}

// rank of the pairs (x -> k x, x -> x k) over the basis k
inline size_t inn_dim(const Alg& a) {
    size_t n = a.n;
    std::vector<Row> rows;
    for (size_t k = 0; k < n; ++k) {
        Row r(2 * n * n);
        for (size_t x = 0; x < n; ++x)
            for (size_t out = 0; out < n; ++out) {
                r[out * n + x] = a.at(k, x, out);
                r[n * n + out * n + x] = a.at(x, k, out);
            }
        rows.push_back(r);
    }
    return rank(rows);
}

inline size_t anni_dim(const Alg& a) {
    size_t n = a.n;
    std::vector<Row> eq;
    for (size_t k = 0; k < n; ++k)
        for (size_t out = 0; out < n; ++out) {
            Row l(n), r(n);
            for (size_t x = 0; x < n; ++x) {
                l[x] = a.at(x, k, out);
                r[x] = a.at(k, x, out);
            }
            eq.push_back(l);
            eq.push_back(r);
        }
    return n - rank(eq);
}

inline size_t power(size_t b, size_t e) {
    size_t r = 1;
    while (e--) r *= b;
    return r;
}

// matrix of the Hochschild differential C^deg -> C^{deg+1}, rows indexed by outputs
inline std::vector<Row> hochschild_matrix(const Alg& a, const Bimod& m, size_t deg) {
    size_t n = a.n, md = m.m;
    size_t in_tuples = power(n, deg), out_tuples = power(n, deg + 1);
    std::vector<Row> mat(out_tuples * md, Row(in_tuples * md));
    for (size_t ot = 0; ot < out_tuples; ++ot) {
        std::vector<size_t> t(deg + 1);
        size_t rem = ot;
        for (size_t s = deg + 1; s-- > 0;) {
            t[s] = rem % n;
            rem /= n;
        }
        auto enc = [&](const std::vector<size_t>& v) {
            size_t idx = 0;
            for (size_t x : v) idx = idx * n + x;
            return idx;
        };
        std::vector<size_t> tail(t.begin() + 1, t.end()), head(t.begin(), t.end() - 1);
        for (size_t y = 0; y < md; ++y)
            for (size_t x = 0; x < md; ++x) {
                mat[ot * md + x][enc(tail) * md + y] += m.l[t[0]][x][y];
                Q s = (deg + 1) % 2 == 0 ? Q(1) : Q(-1);
                mat[ot * md + x][enc(head) * md + y] += s * m.r[t[deg]][x][y];
            }
        for (size_t i = 0; i + 1 <= deg; ++i) {
            Q s = (i + 1) % 2 == 0 ? Q(1) : Q(-1);
            for (size_t p = 0; p < n; ++p) {
                Q c = a.at(t[i], t[i + 1], p);
                if (c == Q(0)) continue;
                std::vector<size_t> v;
                for (size_t j = 0; j < i; ++j) v.push_back(t[j]);
                v.push_back(p);
                for (size_t j = i + 2; j <= deg; ++j) v.push_back(t[j]);
                for (size_t x = 0; x < md; ++x) mat[ot * md + x][enc(v) * md + x] += s * c;
            }
        }
    }
    return mat;
}

inline size_t hh_dim(const Alg& a, const Bimod& m, size_t deg) {
    size_t cn = power(a.n, deg) * m.m;
    size_t rn = rank(hochschild_matrix(a, m, deg));
    size_t rprev = deg == 0 ? 0 : rank(hochschild_matrix(a, m, deg - 1));
    return cn - rn - rprev;
}

// Chevalley-Eilenberg complex on increasing index subsets
struct Lie {
    size_t n = 0;
    std::vector<Q> b;  // [(i*n + j)*n + k]
    size_t m = 0;
    std::vector<std::vector<std::vector<Q>>> rho;  // rho[i][x][y]
};

inline Lie from(const obstrukt::LieModule& mod) {
    const auto& g = *mod.g;
    Lie o;
    o.n = g.dim();
    o.b.assign(o.n * o.n * o.n, Q(0));
    for (size_t i = 0; i < o.n; ++i)
        for (size_t j = 0; j < o.n; ++j)
            for (const auto& [k, v] : g.bracket(i, j)) o.b[(i * o.n + j) * o.n + k] = to_q(v);
    o.m = mod.dim;
    for (size_t i = 0; i < o.n; ++i) {
        std::vector<std::vector<Q>> r(o.m, std::vector<Q>(o.m));
        for (size_t x = 0; x < o.m; ++x)
            for (size_t y = 0; y < o.m; ++y) r[x][y] = to_q(mod.action[i].at(x, y));
        o.rho.push_back(r);
    }
    return o;
}

inline std::vector<std::vector<size_t>> subsets(size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> cur;
    auto rec = [&](auto&& self, size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline std::vector<Row> ce_matrix(const Lie& g, size_t deg) {
    auto in = subsets(g.n, deg), out = subsets(g.n, deg + 1);
    auto pos = [&](const std::vector<size_t>& s) -> long {
        for (size_t i = 0; i < in.size(); ++i)
            if (in[i] == s) return static_cast<long>(i);
        return -1;
    };
    std::vector<Row> mat(out.size() * g.m, Row(in.size() * g.m));
    for (size_t o = 0; o < out.size(); ++o) {
        const auto& x = out[o];
        for (size_t i = 0; i <= deg; ++i) {
            std::vector<size_t> rest;
            for (size_t t = 0; t <= deg; ++t)
                if (t != i) rest.push_back(x[t]);
            long c = pos(rest);
            Q s = i % 2 == 0 ? Q(1) : Q(-1);
            for (size_t a = 0; a < g.m; ++a)
                for (size_t b = 0; b < g.m; ++b) mat[o * g.m + a][c * g.m + b] += s * g.rho[x[i]][a][b];
        }
        for (size_t i = 0; i <= deg; ++i)
            for (size_t j = i + 1; j <= deg; ++j) {
                Q s = (i + j) % 2 == 0 ? Q(1) : Q(-1);
                for (size_t k = 0; k < g.n; ++k) {
                    Q c = g.b[(x[i] * g.n + x[j]) * g.n + k];
                    if (c == Q(0)) continue;
                    // f(e_k, rest) with rest increasing
                    std::vector<size_t> rest;
                    for (size_t t = 0; t <= deg; ++t)
                        if (t != i && t != j) rest.push_back(x[t]);
                    bool dup = false;
                    size_t before = 0;
                    for (size_t r : rest) {
                        if (r == k) dup = true;
                        if (r < k) ++before;
                    }
                    if (dup) continue;
                    std::vector<size_t> sorted = rest;
                    sorted.insert(sorted.begin() + before, k);
                    Q sg = before % 2 == 0 ? s : -s;
                    long col = pos(sorted);
                    for (size_t a = 0; a < g.m; ++a) mat[o * g.m + a][col * g.m + a] += sg * c;
                }
            }
    }
    return mat;
}

inline size_t ce_dim(const Lie& g, size_t deg) {
    size_t cn = subsets(g.n, deg).size() * g.m;
    size_t rn = deg >= g.n ? 0 : rank(ce_matrix(g, deg));
    size_t rprev = deg == 0 ? 0 : rank(ce_matrix(g, deg - 1));
    return cn - rn - rprev;
}

}  // namespace oracle
