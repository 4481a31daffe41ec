#pragma once

#include <map>

#include "obstrukt/kernel.hpp"
#include "obstrukt/pbw.hpp"

namespace obstrukt {

// Increasing index subsets of {0..d-1}, lexicographic within each size.
class SubsetIndex {
public:
    SubsetIndex() = default;
    explicit SubsetIndex(size_t d);
    size_t dim() const { return d_; }
    size_t count(size_t n) const { return n < lists_.size() ? lists_[n].size() : 0; }
    const std::vector<size_t>& subset(size_t n, size_t rank) const { return lists_[n][rank]; }
    size_t rank_of(const std::vector<size_t>& sorted) const;

private:
    size_t d_ = 0;
    std::vector<std::vector<std::vector<size_t>>> lists_;
    std::map<uint64_t, size_t> rank_;
};

// sign of sorting a tuple of distinct indices; 0 with a repeat
int sort_sign(std::vector<size_t>& t);

// Alternating map Lambda^n g -> V stored on increasing subsets.
class CECochain {
public:
    CECochain() = default;
    CECochain(std::shared_ptr<const SubsetIndex> idx, size_t degree, size_t vdim);

    size_t gdim() const { return idx_->dim(); }
    size_t degree() const { return deg_; }
    size_t vdim() const { return vdim_; }
    size_t num_subsets() const { return idx_->count(deg_); }
    const SubsetIndex& index() const { return *idx_; }
    std::shared_ptr<const SubsetIndex> index_ptr() const { return idx_; }

    Vec value(size_t rank) const;
    void set(size_t rank, const Vec& v);
    // value on an arbitrary ordered tuple of basis indices
    Vec eval(const std::vector<size_t>& tuple) const;

    const Vec& flat() const { return data_; }
    Vec& flat() { return data_; }
    bool is_zero() const { return obstrukt::is_zero(data_); }
    bool operator==(const CECochain& o) const { return deg_ == o.deg_ && vdim_ == o.vdim_ && data_ == o.data_; }
    bool operator!=(const CECochain& o) const { return !(*this == o); }
    CECochain operator-(const CECochain& o) const;
    CECochain operator+(const CECochain& o) const;

private:
    std::shared_ptr<const SubsetIndex> idx_;
    size_t deg_ = 0, vdim_ = 0;
    Vec data_;
};

CECochain ce_zero(const LieModule& m, size_t degree);
CECochain ce_delta(const LieModule& m, const CECochain& f);
std::vector<SVec> ce_delta_columns(const LieModule& m, size_t n);
size_t ce_cohomology_dim(const LieModule& m, size_t n);
bool ce_is_cocycle(const LieModule& m, const CECochain& f);
std::optional<CECochain> ce_is_coboundary(const LieModule& m, const CECochain& f);

// The complexes C_n = U (x) Lambda^n g and D_n = U (x) U_+^{(x)n} over a truncated U.
enum class Side { Lie, Assoc };

struct ChainElem {
    Side side = Side::Lie;
    size_t degree = 0;
    SVec coeffs;
};

class BridgeComplexes {
public:
    explicit BridgeComplexes(std::shared_ptr<const PBWAlgebra> u);
    const PBWAlgebra& algebra() const { return *u_; }
    std::shared_ptr<const PBWAlgebra> algebra_ptr() const { return u_; }
    const SubsetIndex& subsets() const { return *idx_; }
    std::shared_ptr<const SubsetIndex> subsets_ptr() const { return idx_; }

    // C_n index: mono * C(d, n) + subset rank
    size_t c_index(size_t mono, size_t subset_rank, size_t n) const { return mono * idx_->count(n) + subset_rank; }
    std::pair<size_t, size_t> c_decode(size_t index, size_t n) const;
    // weight of a basis element: degree of the U factor plus n
    size_t c_weight(size_t index, size_t n) const;
    // number of C_n basis elements of weight <= w
    size_t c_count(size_t n, size_t w) const;

    // D_n index: mono * P^n + tuple over U_+ (positive indices renumbered from 0)
    size_t d_index(size_t mono, const std::vector<size_t>& plus_tuple) const;
    std::pair<size_t, std::vector<size_t>> d_decode(size_t index, size_t n) const;

    SVec d_lie(size_t n, const SVec& c) const;    // C_n -> C_{n-1}
    SVec d_assoc(size_t n, const SVec& c) const;  // D_n -> D_{n-1}
    SVec gamma(size_t n, const SVec& c) const;    // C_n -> D_n
    SVec homotopy(size_t n, const SVec& c) const; // D_n -> D_{n+1}
    // left multiplication by a U element on either side
    SVec left_mul_lie(const SVec& u, size_t n, const SVec& c) const;
    SVec left_mul_assoc(const SVec& u, size_t n, const SVec& c) const;

private:
    std::shared_ptr<const PBWAlgebra> u_;
    std::shared_ptr<const SubsetIndex> idx_;
    size_t p_;
};

ChainElem chain_d(const BridgeComplexes& cx, const ChainElem& c);
ChainElem gamma_chain(const BridgeComplexes& cx, const ChainElem& c);
ChainElem homotopy_H(const BridgeComplexes& cx, const ChainElem& c);

// f'(x1 ^ ... ^ xn) = sum over permutations of sgn f(x_s1, ..., x_sn); f takes g-basis tuples
using GSlotEval = std::function<Vec(const std::vector<size_t>&)>;
CECochain antisymmetrize(std::shared_ptr<const SubsetIndex> idx, size_t degree, size_t vdim, const GSlotEval& f);
// the same for a dense associative cochain over the U_+ basis, read on g-slots
CECochain cochain_transfer(const PBWAlgebra& u, std::shared_ptr<const SubsetIndex> idx, const Cochain& f);
// F(x1, ..., xn) = f(x1 ^ ... ^ xn) / n! on g-slots
Cochain section_transfer(const CECochain& f);
// Hochschild differential with zero right action, evaluated on g-slot tuples
Cochain assoc_delta_on_generators(const PBWAlgebra& u, const EnvelopingAction& act, const Cochain& f);

// Transfer of a Lie 3-cocycle to a Theorem-4 kernel over the truncated U_+.
class LieKernel {
public:
    LieKernel(std::shared_ptr<const PBWAlgebra> u, LieModule m, CECochain f);

    const PBWAlgebra& algebra() const { return *u_; }
    const LieModule& module() const { return act_.module(); }
    const Thm4Kernel& kernel() const { return *k_; }
    const CECochain& lie_cocycle() const { return f_; }
    const CECochain& correction() const { return beta_; }

    // associative cocycle on U_+ basis triples, memoized
    Vec assoc_cocycle(size_t u1, size_t u2, size_t u3) const;
    // U-weight of a kernel basis element
    size_t weight(size_t k) const;

    SVec bracket(const SVec& a, const SVec& b) const;
    SVec nabla(size_t x, const SVec& k) const;  // u_x - v_x
    SVec big_h(size_t x, size_t y) const;       // h(x, y) - h(y, x)

private:
    std::shared_ptr<const PBWAlgebra> u_;
    EnvelopingAction act_;
    CECochain f_, beta_;
    std::unique_ptr<Thm4Kernel> k_;
    struct Psi;
    std::shared_ptr<Psi> psi_;
    mutable std::mutex mu_;
    mutable std::map<std::vector<size_t>, Vec> memo_;

    Vec raw_cocycle(size_t u1, size_t u2, size_t u3) const;
    Vec g_corr(const SVec& a, const SVec& b) const;
};

struct Theorem5Report {
    bool cocycle_input = false;
    bool transfer_matches = false;      // F' = f
    bool curvature_matches = false;     // R^nabla = ad o H on probes
    bool delta_h_matches = false;       // Delta^nabla H = i o f
    bool derivations = false;           // nabla_x is a derivation on probe pairs
    bool kernel_identities = false;     // bimultiplications, permutability, associativity, eps h = R
    bool center_ok = false;             // M central, no element of L commutes with e and f
    size_t probes = 0;
    std::vector<std::string> failures;
    bool ok() const {
        return cocycle_input && transfer_matches && curvature_matches && delta_h_matches && derivations &&
               kernel_identities && center_ok;
    }
};

struct LieTransfer {
    std::shared_ptr<LieKernel> kernel;
    Theorem5Report report;
};

LieTransfer lie_transfer_theorem5(std::shared_ptr<const LieAlgebraSC> g, const LieModule& m, const CECochain& f,
                                  size_t bound);

// Split Lie extension 0 -> h -> e -> g -> 0 with a linear section.
struct LieExtensionSC {
    std::shared_ptr<const LieAlgebraSC> g, h, e;
    Matrix alpha;  // dim e x dim h
    Matrix beta;   // dim g x dim e
    Matrix gamma;  // dim e x dim g
};

struct LieExtensionReport {
    bool valid = false;
    bool curvature_zero = false;  // R^sigma = 0 as derivations of h
    bool sharp_zero = false;      // R^sigma(x ^ y) = ad H(x ^ y)
    bool delta_r_zero = false;    // Delta^sigma R^sigma = 0
    bool delta_h_central = false; // Delta^sigma H lands in the center of h
    CECochain h;                  // h-valued
};

LieExtensionReport lie_extension_identities(const LieExtensionSC& ext);

}  // namespace obstrukt
