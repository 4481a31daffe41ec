#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "obstrukt/algebra.hpp"

namespace obstrukt {

using Word = std::vector<uint16_t>;

// Degree <= N slice of U(g) in the ordered PBW basis. Monomials are sorted
// index multisets; basis order is by degree, then lexicographic, with the
// empty monomial (the unit) at index 0.
class PBWAlgebra {
public:
    PBWAlgebra(std::shared_ptr<const LieAlgebraSC> g, size_t bound);

    const LieAlgebraSC& lie() const { return *g_; }
    std::shared_ptr<const LieAlgebraSC> lie_ptr() const { return g_; }
    size_t bound() const { return bound_; }
    size_t dim() const { return monos_.size(); }
    const Word& monomial(size_t i) const { return monos_[i]; }
    size_t degree(size_t i) const { return monos_[i].size(); }
    size_t index_of(const Word& sorted) const;
    size_t generator(size_t x) const { return gen_[x]; }  // basis index of x in g
    std::string name(size_t i) const;
    // number of monomials of degree <= d
    size_t count_upto(size_t d) const { return upto_[std::min(d, bound_)]; }

    // throws DegreeOverflow when deg i + deg j exceeds the bound
    const SVec& product(size_t i, size_t j) const;
    SVec mul(const SVec& x, const SVec& y) const;
    // the element x_{w1} x_{w2} ... in PBW coordinates
    SVec straighten(const Word& w) const;
    Scalar augmentation(const SVec& x) const;

    // positive part: basis indices 1..dim-1, renumbered from 0
    size_t plus_dim() const { return dim() - 1; }

private:
    std::shared_ptr<const LieAlgebraSC> g_;
    size_t bound_;
    std::vector<Word> monos_;
    std::map<Word, size_t> index_;
    std::vector<size_t> gen_;
    std::vector<size_t> upto_;
    mutable std::mutex mu_;
    mutable std::unordered_map<uint64_t, SVec> prod_memo_;
    mutable std::map<Word, SVec> straight_memo_;
    SVec straighten_locked(const Word& w) const;
};

// g-module action extended to U(g): monomial x_{i1}...x_{ik} acts as
// rho(x_{i1}) ... rho(x_{ik}).
class EnvelopingAction {
public:
    EnvelopingAction(std::shared_ptr<const PBWAlgebra> u, LieModule m);
    const PBWAlgebra& algebra() const { return *u_; }
    const LieModule& module() const { return m_; }
    Matrix of(size_t mono) const;
    Vec apply(const SVec& u, const Vec& v) const;

private:
    std::shared_ptr<const PBWAlgebra> u_;
    LieModule m_;
    mutable std::mutex mu_;
    mutable std::unordered_map<size_t, Matrix> memo_;
};

}  // namespace obstrukt
