#pragma once

#include <memory>
#include <optional>

#include "obstrukt/bimult.hpp"
#include "obstrukt/cochain.hpp"

namespace obstrukt {

// Linear map A -> Mul(K), one pair per basis element of A.
struct Connection {
    std::shared_ptr<const AlgebraSC> a, k;
    std::vector<BiPair> pairs;

    Connection() = default;
    Connection(std::shared_ptr<const AlgebraSC> a_, std::shared_ptr<const AlgebraSC> k_);
    BiPair at(const Vec& x) const;
    const BiPair& operator[](size_t i) const { return pairs[i]; }

    // every pair a bimultiplication of K
    std::vector<size_t> invalid_pairs() const;
    Connection operator+(const Connection& o) const;
};

struct PairWitness {
    size_t i, j;
};

bool is_flat(const Connection& c, std::optional<PairWitness>* witness = nullptr);
bool is_regular(const Connection& c, std::optional<PairWitness>* witness = nullptr);

// A coupling A -> Out(K) kept together with a covering lift.
struct Coupling {
    Connection lift;
    std::shared_ptr<const InnerLift> inner;
};

// Throws CurvatureNotInner with the first offending pair.
Coupling coupling_from_connection(const Connection& c, std::shared_ptr<const InnerLift> inner = nullptr);

// values in K: Omega^n(A, K)
using TwistedCochain = Cochain;

TwistedCochain twisted_delta(const Connection& c, const TwistedCochain& f);

// mu + eps o l for a linear map l: A -> K given as dim K x dim A matrix
Connection perturb_connection(const Connection& c, const Matrix& l);

}  // namespace obstrukt
