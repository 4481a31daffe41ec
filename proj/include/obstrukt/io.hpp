#pragma once

#include <json.hpp>

#include "obstrukt/kernel.hpp"
#include "obstrukt/lie_bridge.hpp"

namespace obstrukt::io {

using json = nlohmann::json;

// Sparse triple format shared by all tensors: [[i, j, [[k, "p/q"], ...]], ...].
// Readers report failures as InputError with a JSON-pointer style location.

FieldSpec field_from_json(const json& j, const std::string& where = "/field");
json field_to_json(const FieldSpec& f);

Scalar scalar_from_json(const json& j, const FieldSpec& f, const std::string& where);
json scalar_to_json(const Scalar& s);
json vec_to_json(const Vec& v);
json svec_to_json(const SVec& v);

std::shared_ptr<AlgebraSC> algebra_from_json(const json& j);
json algebra_to_json(const AlgebraSC& a);

std::shared_ptr<LieAlgebraSC> lie_from_json(const json& j);
json lie_to_json(const LieAlgebraSC& g);

// The "algebra" / "lie" reference keys are left to the caller.
BimoduleSC bimodule_from_json(const json& j, std::shared_ptr<const AlgebraSC> a);
json bimodule_to_json(const BimoduleSC& m);
LieModule lie_module_from_json(const json& j, std::shared_ptr<const LieAlgebraSC> g);
json lie_module_to_json(const LieModule& m);

// {"degree": n, "entries": [[[i1..in], j, "c"], ...]}
Cochain cochain_from_json(const json& j, size_t adim, size_t vdim, const FieldSpec& f);
json cochain_to_json(const Cochain& c);
// entries may list any ordering of distinct indices; the sorting sign is applied
CECochain ce_cochain_from_json(const json& j, std::shared_ptr<const SubsetIndex> idx, size_t vdim,
                               const FieldSpec& f);
json ce_cochain_to_json(const CECochain& c);

// {"u": [[a, k, [[k', "c"], ...]], ...], "v": [...]}: u_a(e_k) = sum c e_k'
Connection connection_from_json(const json& j, std::shared_ptr<const AlgebraSC> a,
                                std::shared_ptr<const AlgebraSC> k);
json connection_to_json(const Connection& c);

// columns: [[col, [[row, "c"], ...]], ...]
Matrix matrix_from_json(const json& j, size_t rows, size_t cols, const FieldSpec& f, const std::string& where);
json matrix_to_json(const Matrix& m);

json violations_to_json(const std::vector<Violation>& v);

// Self-contained kernel bundle as written by build-kernel.
struct KernelBundle {
    std::string mode;
    std::shared_ptr<const AlgebraSC> a;
    BimoduleSC module;
    HCochain cocycle;
    KernelSpec spec;
    Hindrance hbar;
    std::vector<Component> components;
};

json bundle_to_json(const std::string& mode, const TheoremKernel& tk, const HCochain& f);
KernelBundle bundle_from_json(const json& j);

}  // namespace obstrukt::io
