#pragma once

#include <random>

#include "obstrukt/errors.hpp"
#include "obstrukt/kernel.hpp"

namespace fx {

using namespace obstrukt;

using AlgPtr = std::shared_ptr<const AlgebraSC>;

AlgPtr null_algebra(size_t n, FieldSpec f = FieldSpec::rationals());
AlgPtr unital1(FieldSpec f = FieldSpec::rationals());
// F[t]/t^k with basis 1, t, ..., t^{k-1}
AlgPtr truncated_poly(size_t k, FieldSpec f = FieldSpec::rationals());
AlgPtr dual_numbers(FieldSpec f = FieldSpec::rationals());
// upper triangular 2x2: e11, e12, e22
AlgPtr upper2(FieldSpec f = FieldSpec::rationals());
// strictly upper triangular 3x3: e12, e13, e23
AlgPtr strict_upper3(FieldSpec f = FieldSpec::rationals());

// B with an ideal spanned by kvecs and section images of a complement basis;
// A = B / K gets its structure from the section
ExtensionSC make_extension(AlgPtr b, const std::vector<Vec>& kvecs, const std::vector<Vec>& section,
                           std::vector<std::string> anames = {});
ExtensionSC ext_dual_bent();        // K = (t), gamma(1) = 1 + t
ExtensionSC ext_upper2();           // K = F e12
ExtensionSC ext_poly3_over_poly2(); // K = (t^2), gamma(t) = t + t^2
ExtensionSC ext_strict_upper3();    // K = F e13
ExtensionSC ext_poly3_bent();       // K = (t), gamma(1) = 1 + t, K not null

std::shared_ptr<const LieAlgebraSC> heisenberg();
std::shared_ptr<const LieAlgebraSC> sl2();
std::shared_ptr<const LieAlgebraSC> abelian(size_t n);

Vec vec(std::initializer_list<long> xs);
Scalar random_scalar(std::mt19937_64& rng, int lo = -3, int hi = 3);
Vec random_vec(std::mt19937_64& rng, size_t n);
Cochain random_cochain(std::mt19937_64& rng, size_t adim, size_t degree, size_t vdim);
Matrix random_matrix(std::mt19937_64& rng, size_t r, size_t c);

}  // namespace fx
