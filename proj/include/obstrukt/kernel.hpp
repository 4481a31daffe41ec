#pragma once

#include <functional>
#include <string>

#include "obstrukt/obstruction.hpp"

namespace obstrukt {

// An A-kernel (K, xi) with its biannihilator identified with N.
struct KernelSpec {
    std::shared_ptr<const AlgebraSC> a;
    std::shared_ptr<const AlgebraSC> k;
    Coupling coupling;
    Nucleus nucleus;
};

KernelSpec make_kernel_spec(const Connection& lift, const Matrix& anni_id);
// list of failed invariants, empty when the spec is consistent
std::vector<std::string> validate_kernel_spec(const KernelSpec& ks, const BimoduleSC* expected_rep = nullptr);

ObstructionReport kernel_obstruction(const KernelSpec& ks);

struct Component {
    std::string label;
    size_t offset = 0, size = 0;
};

struct TheoremKernel {
    KernelSpec spec;
    std::vector<Component> components;
    Hindrance hbar;
};

// Explicit kernel with N = M and obstruction representative exactly f.
TheoremKernel build_kernel_thm3(std::shared_ptr<const AlgebraSC> a, const BimoduleSC& m, const HCochain& f);
size_t thm3_dimension(size_t alpha, size_t m);

// Simplified kernel for a bimodule with zero right action. The algebra plays
// the role of U_+; products exceeding a truncation may throw DegreeOverflow.
struct Thm4Data {
    size_t alpha = 0;  // dim of the algebra
    size_t m = 0;      // dim of the module
    std::function<SVec(size_t, size_t)> mul;           // basis products of the algebra
    std::function<Vec(size_t, const Vec&)> act;        // left action on the module
    std::function<Vec(size_t, size_t, size_t)> cocycle;
    std::vector<std::string> names;                    // algebra basis labels
    std::vector<std::string> module_names;
};

class Thm4Kernel {
public:
    explicit Thm4Kernel(Thm4Data d);

    size_t dim() const { return base_w_ + d_.alpha * d_.alpha; }
    const Thm4Data& data() const { return d_; }
    std::vector<Component> components() const;
    std::string label(size_t k) const;

    size_t m_index(size_t j) const { return j; }
    size_t e_index() const { return d_.m; }
    size_t f_index() const { return d_.m + 1; }
    size_t u1_index(size_t u) const { return base_1_ + u; }
    size_t u2_index(size_t u, size_t v) const { return base_2_ + u * d_.alpha + v; }
    size_t w_index(size_t u, size_t v) const { return base_w_ + u * d_.alpha + v; }
    bool in_l(size_t k) const { return k >= d_.m; }

    SVec product(size_t i, size_t j) const;
    SVec mul(const SVec& x, const SVec& y) const;
    SVec act_left(size_t u, const SVec& k) const;   // u_u(k)
    SVec act_right(const SVec& k, size_t u) const;  // v_u(k)
    SVec act_left(const SVec& u, const SVec& k) const;
    SVec act_right(const SVec& k, const SVec& u) const;
    SVec hindrance(size_t u, size_t v) const { return SVec{{w_index(u, v), Scalar(1)}}; }

private:
    Thm4Data d_;
    size_t base_1_, base_2_, base_w_;
    SVec bilinear(size_t base, const SVec& x, const SVec& y) const;
};

// Materialized Theorem-4 kernel over a finite algebra and a module with zero
// right action.
TheoremKernel build_kernel_thm4_finite(std::shared_ptr<const AlgebraSC> a, const BimoduleSC& m, const HCochain& f);
size_t thm4_dimension(size_t alpha, size_t m);

// Kernel arithmetic over a common nucleus.
KernelSpec kernel_sum(const KernelSpec& k1, const KernelSpec& k2);
KernelSpec kernel_scale(const Scalar& lambda, const KernelSpec& k);
// (N, rho) itself: flat, hence extendible
KernelSpec trivial_kernel(std::shared_ptr<const AlgebraSC> a, const BimoduleSC& rep);

// sigma: dim K2 x dim K1
bool kernels_isomorphic(const KernelSpec& k1, const KernelSpec& k2, const Matrix& sigma);
bool kernels_equivalent_witness(const KernelSpec& k1, const KernelSpec& k2, const KernelSpec& s1,
                                const KernelSpec& s2, const Matrix& sigma);

// Maps between sums induced by maps on the summands that respect the nucleus.
Matrix induced_sum_map(const KernelSpec& src1, const KernelSpec& src2, const KernelSpec& dst1,
                       const KernelSpec& dst2, const Matrix& s1, const Matrix& s2);
// K + (N, rho) -> K, [(k, n)] -> k + i(n)
Matrix sum_with_trivial_map(const KernelSpec& k);
// K1 + K2 -> K2 + K1
Matrix sum_swap_map(const KernelSpec& k1, const KernelSpec& k2);
// (K1 + K2) + K3 -> K1 + (K2 + K3)
Matrix sum_assoc_map(const KernelSpec& k1, const KernelSpec& k2, const KernelSpec& k3);
// the scaled kernel with lambda = 1 -> K
Matrix scale_one_map(const KernelSpec& k);
// Theorem-3 kernels for f and f - delta g: identity except p -> p + g(a1,a2).x on A (x) A (x) A*
Matrix thm3_coboundary_shift(const TheoremKernel& kf, const HCochain& g);

struct AdditivityReport {
    bool sum_is_kernel = false;
    bool additive = false;  // Obs(k1 + k2) = Obs(k1) + Obs(k2) in H^3
    Vec cls1, cls2, cls_sum;
};
AdditivityReport verify_obs_additivity(const KernelSpec& k1, const KernelSpec& k2);

// Split bimodule extension (A (x) A) (+) Q of a 3-cocycle.
struct BimoduleExt {
    std::shared_ptr<const AlgebraSC> a;
    BimoduleSC q;
    BimoduleSC e;
    Matrix pi;     // E -> A (x) A
    Matrix gamma;  // A (x) A -> E
    HCochain f;
};

BimoduleExt bimodule_ext_from_cocycle(std::shared_ptr<const AlgebraSC> a, const BimoduleSC& q, const HCochain& f);
// a . gamma(p) - gamma(a . p), read in Q, as a cochain A (x) A (x) A -> Q
HCochain connecting_cochain(const BimoduleExt& x);
// h_E(a1, a2) = (a1 (x) a2, 0); its Hochschild coboundary in E is (0, f)
Cochain canonical_h_e(const BimoduleExt& x);

}  // namespace obstrukt
