#include "obstrukt/connections.hpp"

#include "obstrukt/errors.hpp"

namespace obstrukt {

Connection::Connection(std::shared_ptr<const AlgebraSC> a_, std::shared_ptr<const AlgebraSC> k_)
    : a(std::move(a_)), k(std::move(k_)), pairs(a->dim(), BiPair::zero(k->dim())) {}

BiPair Connection::at(const Vec& x) const {
    require_dims(x.size() == pairs.size(), "connection argument");
    BiPair r = BiPair::zero(k->dim());
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) r = r + pairs[i].scaled(x[i]);
    return r;
}

std::vector<size_t> Connection::invalid_pairs() const {
    std::vector<size_t> bad;
    for (size_t i = 0; i < pairs.size(); ++i)
        if (!is_bimultiplication(pairs[i], *k)) bad.push_back(i);
    return bad;
}

Connection Connection::operator+(const Connection& o) const {
    require_dims(pairs.size() == o.pairs.size() && k->dim() == o.k->dim(), "connection sum");
    Connection r = *this;
    for (size_t i = 0; i < pairs.size(); ++i) r.pairs[i] = pairs[i] + o.pairs[i];
    return r;
}

bool is_flat(const Connection& c, std::optional<PairWitness>* witness) {
    size_t n = c.a->dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            BiPair lhs = c.at(to_dense(c.a->product(i, j), n));
            if (lhs != mul_product(c[i], c[j])) {
                if (witness) *witness = PairWitness{i, j};
                return false;
            }
        }
    return true;
}

bool is_regular(const Connection& c, std::optional<PairWitness>* witness) {
    size_t n = c.a->dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            if (!is_permutable(c[i], c[j])) {
                if (witness) *witness = PairWitness{i, j};
                return false;
            }
    return true;
}

Coupling coupling_from_connection(const Connection& c, std::shared_ptr<const InnerLift> inner) {
    if (!inner) inner = std::make_shared<InnerLift>(c.k);
    size_t n = c.a->dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            BiPair r = mul_product(c[i], c[j]) - c.at(to_dense(c.a->product(i, j), n));
            if (!inner->is_inner(r))
                fail(ErrorKind::CurvatureNotInner, "curvature at (" + c.a->names()[i] + ", " + c.a->names()[j] +
                                                       ") is not inner");
        }
    return Coupling{c, std::move(inner)};
}

TwistedCochain twisted_delta(const Connection& c, const TwistedCochain& f) {
    size_t a = c.a->dim(), kd = c.k->dim(), n = f.degree();
    require_dims(f.adim() == a && f.vdim() == kd, "twisted cochain shape");
    TwistedCochain out(a, n + 1, kd);
    for (size_t t = 0; t < out.num_tuples(); ++t) {
        auto x = out.decode(t);
        Vec acc(kd);
        // u_{a1} f(a2, ..)
        std::vector<size_t> tail(x.begin() + 1, x.end());
        axpy(acc, Scalar(1), c[x[0]].u.apply(f.value(tail)));
        for (size_t i = 0; i + 1 < n + 1; ++i) {
            Scalar sign = (i % 2 == 0) ? Scalar(-1) : Scalar(1);  // (-1)^{i+1}
            std::vector<Vec> args;
            for (size_t s = 0; s < n + 1; ++s) {
                if (s == i) {
                    args.push_back(to_dense(c.a->product(x[i], x[i + 1]), a));
                    ++s;
                } else {
                    args.push_back(unit(a, x[s]));
                }
            }
            axpy(acc, sign, f.eval(args));
        }
        std::vector<size_t> head(x.begin(), x.end() - 1);
        Scalar last = (n % 2 == 0) ? Scalar(-1) : Scalar(1);  // (-1)^{n+1}
        axpy(acc, last, c[x[n]].v.apply(f.value(head)));
        out.set(t, acc);
    }
    return out;
}

Connection perturb_connection(const Connection& c, const Matrix& l) {
    require_dims(l.rows() == c.k->dim() && l.cols() == c.a->dim(), "perturbation shape");
    Connection r = c;
    for (size_t i = 0; i < c.pairs.size(); ++i) r.pairs[i] = c.pairs[i] + epsilon(l.col(i), *c.k);
    return r;
}

}  // namespace obstrukt
