#pragma once

#include "obstrukt/connections.hpp"
#include "obstrukt/hochschild.hpp"

namespace obstrukt {

struct Curvature {
    size_t adim = 0;
    std::vector<BiPair> values;  // index i * adim + j
    const BiPair& at(size_t i, size_t j) const { return values[i * adim + j]; }
    bool is_zero() const;
};

// h : A (x) A -> K
using Hindrance = Cochain;

Curvature curvature(const Connection& mu);
// canonical preimage of every curvature value under eps
Hindrance lift_hindrance(const Coupling& c, const Curvature& r);
bool hindrance_lifts(const Connection& mu, const Hindrance& h, const Curvature& r);

// The biannihilator N with its induced A-bimodule structure.
struct Nucleus {
    Matrix anni_id;  // dim K x dim N, columns span Anni(K)
    BimoduleSC rep;
    std::shared_ptr<const ColumnSolver> solver;

    Nucleus() = default;
    Nucleus(Matrix id, BimoduleSC r);

    std::optional<Vec> coords(const Vec& k) const;
    Vec embed(const Vec& n) const { return anni_id.apply(n); }
    size_t dim() const { return anni_id.cols(); }
};

// Restricts the lift to Anni(K). Without an explicit identification the
// canonical rref basis of Anni(K) is used.
Nucleus central_representation(const Coupling& c, const std::optional<Matrix>& anni_id = std::nullopt);

// K-valued Delta^mu h
Cochain obstruction_cocycle_k(const Connection& mu, const Hindrance& h);
// the same cocycle read in N; throws ValueEscapesAnnihilator
HCochain obstruction_cocycle(const Connection& mu, const Hindrance& h, const Nucleus& n);

struct ObstructionReport {
    Curvature curv;
    Hindrance h;
    HCochain f;
    HClass cls;
    bool vanishes = false;
    std::optional<HCochain> primitive;  // g with delta g = f when it vanishes
};

ObstructionReport obstruction_class(const Coupling& c, const Nucleus& n);

// l as a degree-1 twisted cochain; (Delta^mu l + l.l)(a1, a2)
Cochain lift_change_term(const Connection& mu, const Matrix& l);

struct IndependenceReport {
    bool lifted_is_law = false;          // mu' regular and covers the coupling
    bool curvature_identity = false;     // R' - R = eps(Delta l + l.l)
    bool hindrance_lifts = false;        // eps h' = R'
    bool cocycle_unchanged = false;      // f(mu', h') = f(mu, h)
    bool hindrance_ambiguity = false;    // f(mu, h) - f(mu, h - i g) = delta g
    bool ok() const {
        return lifted_is_law && curvature_identity && hindrance_lifts && cocycle_unchanged && hindrance_ambiguity;
    }
};

// l: dim K x dim A; g: A (x) A -> N
IndependenceReport verify_independence(const Coupling& c, const Nucleus& n, const Matrix& l, const Hindrance& h,
                                       const HCochain& g);

struct ExtensionSC {
    std::shared_ptr<const AlgebraSC> a, k, b;
    Matrix alpha;  // dim B x dim K
    Matrix beta;   // dim A x dim B
    Matrix gamma;  // dim B x dim A
};

// throws InvalidExtension or SectionNotSection
void validate_extension(const ExtensionSC& e);

struct ExtensionCoupling {
    Connection mu;
    Hindrance h;
};

ExtensionCoupling extension_coupling(const ExtensionSC& e);

// Algebra on A (+) K with (a1,k1)(a2,k2) = (a1a2, a1.k2 + k1.a2 + k1k2 + h(a1,a2)).
// Refuses with ObstructionNonzero unless Delta^mu h vanishes as a cochain.
ExtensionSC crossed_product(std::shared_ptr<const AlgebraSC> a, std::shared_ptr<const AlgebraSC> k,
                            const Connection& mu, const Hindrance& h);

}  // namespace obstrukt
