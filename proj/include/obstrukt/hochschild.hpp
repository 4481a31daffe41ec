#pragma once

#include <optional>

#include "obstrukt/algebra.hpp"
#include "obstrukt/cochain.hpp"
#include "obstrukt/connections.hpp"

namespace obstrukt {

// Hochschild cochains A^{(x)n} -> M for a bimodule M over A.
using HCochain = Cochain;

constexpr size_t kMaxHochschildDegree = 4;

// Columns of delta_n : C^n -> C^{n+1} in flat cochain coordinates.
std::vector<SVec> delta_columns(const BimoduleSC& m, size_t n);

HCochain hdelta(const BimoduleSC& m, const HCochain& f);
bool is_cocycle(const BimoduleSC& m, const HCochain& f);
// deterministic preimage under delta (free coordinates zero); absent in degree 0
std::optional<HCochain> is_coboundary(const BimoduleSC& m, const HCochain& f);

size_t cohomology_dim(const BimoduleSC& m, size_t n);
// cochains vanishing whenever an argument is the unit of A
size_t cohomology_dim_normalized(const BimoduleSC& m, size_t n);

struct HClass {
    size_t degree = 0;
    HCochain representative;
    Vec coords;
};

// Z^n, B^n and a canonical complement, reusable for many class computations.
class CohomologySpace {
public:
    CohomologySpace(const BimoduleSC& m, size_t n);
    size_t degree() const { return n_; }
    size_t dim() const { return zq_.dim(); }
    size_t cocycle_dim() const { return zdim_; }
    size_t coboundary_dim() const { return b_.dim(); }
    HClass class_of(const HCochain& f) const;
    bool same_class(const HCochain& f, const HCochain& g) const;

private:
    BimoduleSC m_;
    size_t n_;
    size_t zdim_ = 0;
    Subspace b_;
    QuotientSpace q_;
    Subspace zq_;
};

HClass class_of(const BimoduleSC& m, const HCochain& f);

// The bimodule M viewed as a connection of A into Mul(M) with M a null algebra.
Connection representation_connection(const BimoduleSC& m);

}  // namespace obstrukt
