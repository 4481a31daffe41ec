#include "obstrukt/pbw.hpp"

#include <algorithm>

#include "obstrukt/errors.hpp"

namespace obstrukt {

namespace {

void enumerate(size_t gdim, size_t deg, size_t start, Word& cur, std::vector<Word>& out) {
    if (cur.size() == deg) {
        out.push_back(cur);
        return;
    }
    for (size_t x = start; x < gdim; ++x) {
        cur.push_back(static_cast<uint16_t>(x));
        enumerate(gdim, deg, x, cur, out);
        cur.pop_back();
    }
}

}  // namespace

PBWAlgebra::PBWAlgebra(std::shared_ptr<const LieAlgebraSC> g, size_t bound) : g_(std::move(g)), bound_(bound) {
    if (g_->dim() > 60000) fail(ErrorKind::InputError, "Lie algebra too large for PBW indexing");
    for (size_t d = 0; d <= bound_; ++d) {
        Word cur;
        enumerate(g_->dim(), d, 0, cur, monos_);
        upto_.push_back(monos_.size());
    }
    for (size_t i = 0; i < monos_.size(); ++i) index_[monos_[i]] = i;
    for (size_t x = 0; x < g_->dim(); ++x) gen_.push_back(bound_ >= 1 ? index_.at(Word{uint16_t(x)}) : 0);
}

size_t PBWAlgebra::index_of(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) {
        if (w.size() > bound_)
            fail(ErrorKind::DegreeOverflow, "monomial of degree " + std::to_string(w.size()) +
                                                " exceeds the truncation bound " + std::to_string(bound_));
        fail(ErrorKind::InputError, "not a sorted PBW monomial");
    }
    return it->second;
}

std::string PBWAlgebra::name(size_t i) const {
    if (monos_[i].empty()) return "1";
    std::string s;
    size_t k = 0;
    const Word& w = monos_[i];
    while (k < w.size()) {
        size_t e = k;
        while (e < w.size() && w[e] == w[k]) ++e;
        if (!s.empty()) s += "*";
        s += g_->names()[w[k]];
        if (e - k > 1) s += "^" + std::to_string(e - k);
        k = e;
    }
    return s;
}

SVec PBWAlgebra::straighten_locked(const Word& w) const {
    size_t p = 0;
    while (p + 1 < w.size() && w[p] <= w[p + 1]) ++p;
    if (p + 1 >= w.size()) return SVec{{index_of(w), Scalar(1)}};
    auto it = straight_memo_.find(w);
    if (it != straight_memo_.end()) return it->second;
    // ... b a ... = ... a b ... + ... [b,a] ...
    Word swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    SVec out = straighten_locked(swapped);
    for (const auto& [k, c] : g_->bracket(w[p], w[p + 1])) {
        Word shorter;
        shorter.insert(shorter.end(), w.begin(), w.begin() + p);
        shorter.push_back(static_cast<uint16_t>(k));
        shorter.insert(shorter.end(), w.begin() + p + 2, w.end());
        axpy(out, c, straighten_locked(shorter));
    }
    straight_memo_.emplace(w, out);
    return out;
}

SVec PBWAlgebra::straighten(const Word& w) const {
    if (w.size() > bound_)
        fail(ErrorKind::DegreeOverflow, "word of length " + std::to_string(w.size()) + " exceeds the truncation bound " +
                                            std::to_string(bound_));
    std::lock_guard<std::mutex> lock(mu_);
    return straighten_locked(w);
}

const SVec& PBWAlgebra::product(size_t i, size_t j) const {
    if (degree(i) + degree(j) > bound_)
        fail(ErrorKind::DegreeOverflow, "product of degrees " + std::to_string(degree(i)) + " and " +
                                            std::to_string(degree(j)) + " exceeds the truncation bound " +
                                            std::to_string(bound_));
    uint64_t key = uint64_t(i) * monos_.size() + j;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = prod_memo_.find(key);
        if (it != prod_memo_.end()) return it->second;
    }
    Word w = monos_[i];
    w.insert(w.end(), monos_[j].begin(), monos_[j].end());
    SVec r = straighten(w);
    std::lock_guard<std::mutex> lock(mu_);
    return prod_memo_.emplace(key, std::move(r)).first->second;
}

SVec PBWAlgebra::mul(const SVec& x, const SVec& y) const {
    SVec out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) axpy(out, a * b, product(i, j));
    return out;
}

Scalar PBWAlgebra::augmentation(const SVec& x) const {
    for (const auto& [i, c] : x)
        if (i == 0) return c;
    return Scalar(0);
}

EnvelopingAction::EnvelopingAction(std::shared_ptr<const PBWAlgebra> u, LieModule m) : u_(std::move(u)), m_(std::move(m)) {
    require_dims(m_.g->dim() == u_->lie().dim(), "module over a different Lie algebra");
}

Matrix EnvelopingAction::of(size_t mono) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(mono);
        if (it != memo_.end()) return it->second;
    }
    const Word& w = u_->monomial(mono);
    Matrix r = Matrix::identity(m_.dim);
    for (size_t k = w.size(); k-- > 0;) r = m_.action[w[k]] * r;
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(mono, std::move(r)).first->second;
}

Vec EnvelopingAction::apply(const SVec& u, const Vec& v) const {
    Vec out(m_.dim);
    for (const auto& [i, c] : u) axpy(out, c, of(i).apply(v));
    return out;
}

}  // namespace obstrukt
