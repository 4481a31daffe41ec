#include <cstdlib>
#include <cstring>

#include "obstrukt.h"
#include "obstrukt/errors.hpp"
#include "obstrukt/io.hpp"

using namespace obstrukt;
using io::json;

struct obk_algebra {
    std::shared_ptr<AlgebraSC> a;
};
struct obk_lie {
    std::shared_ptr<LieAlgebraSC> g;
};
struct obk_bimodule {
    BimoduleSC m;
};
struct obk_lie_module {
    LieModule m;
};
struct obk_cochain {
    HCochain f;
};
struct obk_ce_cochain {
    CECochain f;
};
struct obk_coupling {
    std::shared_ptr<const AlgebraSC> a, k;
    Connection mu;
    std::optional<Hindrance> h;
    std::optional<Matrix> anni;
};
struct obk_bundle {
    io::KernelBundle b;
};

namespace {

thread_local std::string last_error;

constexpr size_t kMaxReportedViolations = 100;

int status_of(ErrorKind k) { return static_cast<int>(k) + 1; }

template <class F>
int guard(F&& fn) {
    try {
        last_error.clear();
        fn();
        return OBK_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const json::exception& e) {
        last_error = std::string("malformed JSON: ") + e.what();
        return OBK_ERR_INPUT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return OBK_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return OBK_ERR_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (!p) fail(ErrorKind::InputError, std::string("null argument: ") + what);
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out, const json& j) {
    need(out, "report");
    *out = dup(j.dump(2));
}

json parse(const char* text) {
    need(text, "json");
    return json::parse(text);
}

json validation(const std::string& kind, size_t dim, const std::vector<Violation>& v) {
    std::vector<Violation> shown(v.begin(), v.begin() + std::min(v.size(), kMaxReportedViolations));
    return json{{"kind", kind}, {"dim", dim}, {"valid", v.empty()}, {"violation_count", v.size()},
                {"violations", io::violations_to_json(shown)}};
}

json subspace_basis(const Subspace& s) {
    json out = json::array();
    for (size_t i = 0; i < s.dim(); ++i) out.push_back(io::vec_to_json(s.vector(i)));
    return out;
}

Nucleus nucleus_of(const obk_coupling& c, const Coupling& cp) { return central_representation(cp, c.anni); }

json obstruction_json(const obk_coupling& c, bool& vanishes) {
    Coupling cp = coupling_from_connection(c.mu);
    Nucleus n = nucleus_of(c, cp);
    Curvature r = curvature(c.mu);
    Hindrance h = c.h ? *c.h : lift_hindrance(cp, r);
    if (c.h && !hindrance_lifts(c.mu, h, r))
        fail(ErrorKind::InputError, "the supplied hindrance does not lift the curvature");
    HCochain f = obstruction_cocycle(c.mu, h, n);
    HClass cls = CohomologySpace(n.rep, 3).class_of(f);
    vanishes = is_zero(cls.coords);
    std::optional<HCochain> g = vanishes ? is_coboundary(n.rep, f) : std::nullopt;
    if (f.is_zero()) g = HCochain(f.adim(), 2, f.vdim());
    return json{{"curvature_zero", r.is_zero()},
                {"hindrance", io::cochain_to_json(h)},
                {"hindrance_supplied", c.h.has_value()},
                {"nucleus_dim", n.dim()},
                {"nucleus", io::bimodule_to_json(n.rep)},
                {"anni", io::matrix_to_json(n.anni_id)},
                {"cocycle", io::cochain_to_json(f)},
                {"cocycle_zero", f.is_zero()},
                {"class", io::vec_to_json(cls.coords)},
                {"h3_dim", cls.coords.size()},
                {"vanishes", vanishes},
                {"primitive", g ? io::cochain_to_json(*g) : json(nullptr)}};
}

json components_json(const std::vector<Component>& cs) {
    json out = json::array();
    for (const auto& c : cs) out.push_back(json{{"label", c.label}, {"offset", c.offset}, {"size", c.size}});
    return out;
}

// checks shared by build-kernel and verify
json kernel_checks(const KernelSpec& ks, const BimoduleSC& m, const Hindrance& hbar, const HCochain& f,
                   const std::vector<Component>& comps, const std::string& mode, bool& verified) {
    std::vector<std::string> issues = validate_kernel_spec(ks, &m);
    Curvature r = curvature(ks.coupling.lift);
    bool lifts = hindrance_lifts(ks.coupling.lift, hbar, r);
    bool matches = lifts && obstruction_cocycle(ks.coupling.lift, hbar, ks.nucleus) == f;
    size_t al = ks.a->dim(), expect = mode == "thm3" ? thm3_dimension(al, m.dim) : thm4_dimension(al, m.dim);
    bool tiles = true;
    size_t off = 0;
    for (const auto& c : comps) {
        tiles = tiles && c.offset == off;
        off += c.size;
    }
    tiles = tiles && off == ks.k->dim();
    verified = issues.empty() && lifts && matches && tiles && expect == ks.k->dim();
    return json{{"mode", mode},
                {"dim", ks.k->dim()},
                {"dim_formula", expect},
                {"components", components_json(comps)},
                {"components_tile", tiles},
                {"issues", issues},
                {"anni_dim", ks.nucleus.dim()},
                {"hindrance_lifts_curvature", lifts},
                {"obstruction_equals_cocycle", matches},
                {"verified", verified}};
}

}  // namespace

extern "C" {

const char* obk_version(void) { return "0.1.0"; }
const char* obk_last_error(void) { return last_error.c_str(); }

const char* obk_status_name(int s) {
    if (s == OBK_OK) return "Ok";
    if (s == OBK_ERR_NULL_ARGUMENT) return "NullArgument";
    if (s >= 1 && s <= OBK_ERR_INTERNAL) return error_kind_name(static_cast<ErrorKind>(s - 1));
    return "Unknown";
}

int obk_status_is_refusal(int s) {
    switch (s) {
        case OBK_ERR_NOT_INNER:
        case OBK_ERR_CURVATURE_NOT_INNER:
        case OBK_ERR_VALUE_ESCAPES_ANNIHILATOR:
        case OBK_ERR_OBSTRUCTION_NONZERO:
        case OBK_ERR_NOT_COCYCLE:
        case OBK_ERR_NOT_BIMODULE:
        case OBK_ERR_NUCLEUS_MISMATCH:
        case OBK_ERR_SECTION_NOT_SECTION:
        case OBK_ERR_PRODUCT_ESCAPES_KERNEL:
        case OBK_ERR_INVALID_EXTENSION: return 1;
        default: return 0;
    }
}

void obk_string_free(char* s) { std::free(s); }

int obk_algebra_from_json(const char* text, obk_algebra** out) {
    return guard([&] {
        need(out, "out");
        *out = new obk_algebra{io::algebra_from_json(parse(text))};
    });
}

int obk_algebra_dim(const obk_algebra* a, size_t* out) {
    return guard([&] {
        need(a, "algebra");
        need(out, "out");
        *out = a->a->dim();
    });
}

void obk_algebra_free(obk_algebra* a) { delete a; }

int obk_lie_from_json(const char* text, obk_lie** out) {
    return guard([&] {
        need(out, "out");
        *out = new obk_lie{io::lie_from_json(parse(text))};
    });
}

void obk_lie_free(obk_lie* g) { delete g; }

int obk_bimodule_from_json(const char* text, const obk_algebra* a, obk_bimodule** out) {
    return guard([&] {
        need(a, "algebra");
        need(out, "out");
        *out = new obk_bimodule{io::bimodule_from_json(parse(text), a->a)};
    });
}

void obk_bimodule_free(obk_bimodule* m) { delete m; }

int obk_lie_module_from_json(const char* text, const obk_lie* g, obk_lie_module** out) {
    return guard([&] {
        need(g, "lie");
        need(out, "out");
        *out = new obk_lie_module{io::lie_module_from_json(parse(text), g->g)};
    });
}

void obk_lie_module_free(obk_lie_module* m) { delete m; }

int obk_cochain_from_json(const char* text, const obk_bimodule* m, obk_cochain** out) {
    return guard([&] {
        need(m, "module");
        need(out, "out");
        *out = new obk_cochain{io::cochain_from_json(parse(text), m->m.over->dim(), m->m.dim, m->m.over->field())};
    });
}

void obk_cochain_free(obk_cochain* f) { delete f; }

int obk_ce_cochain_from_json(const char* text, const obk_lie_module* m, obk_ce_cochain** out) {
    return guard([&] {
        need(m, "module");
        need(out, "out");
        auto idx = std::make_shared<SubsetIndex>(m->m.g->dim());
        *out = new obk_ce_cochain{io::ce_cochain_from_json(parse(text), idx, m->m.dim, m->m.g->field())};
    });
}

void obk_ce_cochain_free(obk_ce_cochain* f) { delete f; }

int obk_coupling_from_json(const char* text, const obk_algebra* a, const obk_algebra* k, obk_coupling** out) {
    return guard([&] {
        need(a, "algebra");
        need(k, "kernel");
        need(out, "out");
        Connection mu = io::connection_from_json(parse(text), a->a, k->a);
        *out = new obk_coupling{a->a, k->a, std::move(mu), std::nullopt, std::nullopt};
    });
}

int obk_coupling_set_hindrance(obk_coupling* c, const char* text) {
    return guard([&] {
        need(c, "coupling");
        Hindrance h = io::cochain_from_json(parse(text), c->a->dim(), c->k->dim(), c->a->field());
        if (h.degree() != 2) fail(ErrorKind::InputError, "/degree: a hindrance has degree 2");
        c->h = std::move(h);
    });
}

void obk_coupling_free(obk_coupling* c) { delete c; }

int obk_bundle_from_json(const char* text, obk_bundle** out) {
    return guard([&] {
        need(out, "out");
        *out = new obk_bundle{io::bundle_from_json(parse(text))};
    });
}

int obk_bundle_coupling(const obk_bundle* b, obk_coupling** out) {
    return guard([&] {
        need(b, "bundle");
        need(out, "out");
        const auto& s = b->b.spec;
        *out = new obk_coupling{s.a, s.k, s.coupling.lift, b->b.hbar, s.nucleus.anni_id};
    });
}

void obk_bundle_free(obk_bundle* b) { delete b; }

int obk_validate_algebra(const obk_algebra* a, char** report, int* valid) {
    return guard([&] {
        need(a, "algebra");
        auto v = validate_associative(*a->a);
        json r = validation("associative", a->a->dim(), v);
        r["field"] = io::field_to_json(a->a->field());
        std::optional<size_t> unit;
        for (size_t i = 0; i < a->a->dim() && !unit; ++i)
            if (is_unit(*a->a, i)) unit = i;
        r["unit_basis_element"] = unit ? json(*unit) : json(nullptr);
        emit(report, r);
        if (valid) *valid = v.empty();
    });
}

int obk_validate_lie(const obk_lie* g, char** report, int* valid) {
    return guard([&] {
        need(g, "lie");
        auto v = validate_jacobi(*g->g);
        json r = validation("lie", g->g->dim(), v);
        r["field"] = io::field_to_json(g->g->field());
        emit(report, r);
        if (valid) *valid = v.empty();
    });
}

int obk_validate_bimodule(const obk_bimodule* m, char** report, int* valid) {
    return guard([&] {
        need(m, "module");
        auto v = validate_bimodule(m->m);
        json r = validation("bimodule", m->m.dim, v);
        r["right_action_zero"] = m->m.right_trivial();
        emit(report, r);
        if (valid) *valid = v.empty();
    });
}

int obk_validate_lie_module(const obk_lie_module* m, char** report, int* valid) {
    return guard([&] {
        need(m, "module");
        auto v = validate_lie_module(m->m);
        emit(report, validation("lie_module", m->m.dim, v));
        if (valid) *valid = v.empty();
    });
}

int obk_mul_algebra(const obk_algebra* k, char** report) {
    return guard([&] {
        need(k, "algebra");
        if (!validate_associative(*k->a).empty()) fail(ErrorKind::InputError, "the algebra is not associative");
        OutAlgebra out = compute_out(k->a);
        Subspace anni = compute_anni(*k->a);
        size_t n = k->a->dim(), mul = out.mul.dim(), inn = out.inn.dim(), o = out.dim();
        emit(report, json{{"dim_k", n},
                          {"dim_mul", mul},
                          {"dim_inn", inn},
                          {"dim_out", o},
                          {"dim_anni", anni.dim()},
                          {"anni_basis", subspace_basis(anni)},
                          {"inn_plus_anni_is_dim_k", inn + anni.dim() == n},
                          {"out_is_mul_mod_inn", o + inn == mul}});
    });
}

int obk_hochschild_cohomology(const obk_bimodule* m, unsigned degree, char** report) {
    return guard([&] {
        need(m, "module");
        if (degree > kMaxHochschildDegree)
            fail(ErrorKind::DegreeOverflow, "Hochschild cohomology is supported up to degree " +
                                                std::to_string(kMaxHochschildDegree));
        if (!validate_bimodule(m->m).empty()) fail(ErrorKind::NotBimodule, "the module is not a bimodule");
        CohomologySpace hs(m->m, degree);
        size_t cochains = m->m.dim;
        for (unsigned i = 0; i < degree; ++i) cochains *= m->m.over->dim();
        emit(report, json{{"degree", degree},
                          {"dim_cochains", cochains},
                          {"dim_cocycles", hs.cocycle_dim()},
                          {"dim_coboundaries", hs.coboundary_dim()},
                          {"dim_cohomology", hs.dim()}});
    });
}

int obk_hochschild_class(const obk_bimodule* m, const obk_cochain* f, char** report) {
    return guard([&] {
        need(m, "module");
        need(f, "cochain");
        require_dims(f->f.adim() == m->m.over->dim() && f->f.vdim() == m->m.dim, "cochain shape");
        bool cocycle = is_cocycle(m->m, f->f);
        json r{{"degree", f->f.degree()}, {"is_cocycle", cocycle}};
        if (cocycle && f->f.degree() <= kMaxHochschildDegree) {
            HClass c = CohomologySpace(m->m, f->f.degree()).class_of(f->f);
            auto g = is_coboundary(m->m, f->f);
            r["class"] = io::vec_to_json(c.coords);
            r["is_coboundary"] = g.has_value();
            r["primitive"] = g ? io::cochain_to_json(*g) : json(nullptr);
        }
        emit(report, r);
    });
}

int obk_ce_cohomology(const obk_lie_module* m, unsigned degree, char** report) {
    return guard([&] {
        need(m, "module");
        if (!validate_lie_module(m->m).empty()) fail(ErrorKind::NotBimodule, "the action is not a Lie module");
        SubsetIndex idx(m->m.g->dim());
        emit(report, json{{"degree", degree},
                          {"dim_cochains", idx.count(degree) * m->m.dim},
                          {"dim_cohomology", ce_cohomology_dim(m->m, degree)}});
    });
}

int obk_obstruct(const obk_coupling* c, char** report, int* vanishes) {
    return guard([&] {
        need(c, "coupling");
        bool v = false;
        json r = obstruction_json(*c, v);
        emit(report, r);
        if (vanishes) *vanishes = v;
    });
}

int obk_extend(const obk_coupling* c, char** report, char** algebra_json) {
    return guard([&] {
        need(c, "coupling");
        bool v = false;
        json obs = obstruction_json(*c, v);
        if (!v) {
            emit(report, json{{"obstruction", obs}, {"extended", false}});
            fail(ErrorKind::ObstructionNonzero, "the obstruction class does not vanish; no extension exists");
        }
        Coupling cp = coupling_from_connection(c->mu);
        Nucleus n = nucleus_of(*c, cp);
        Hindrance h = c->h ? *c->h : lift_hindrance(cp, curvature(c->mu));
        HCochain f = obstruction_cocycle(c->mu, h, n);
        bool adjusted = !f.is_zero();
        if (adjusted) {
            // h - i(g) has obstruction f - delta g = 0
            HCochain g = *is_coboundary(n.rep, f);
            h = h - g.mapped(n.anni_id);
        }
        ExtensionSC e = crossed_product(c->a, c->k, c->mu, h);
        validate_extension(e);
        json b = io::algebra_to_json(*e.b);
        emit(report, json{{"obstruction", obs},
                          {"extended", true},
                          {"hindrance_adjusted", adjusted},
                          {"hindrance_used", io::cochain_to_json(h)},
                          {"dim_b", e.b->dim()},
                          {"alpha", io::matrix_to_json(e.alpha)},
                          {"beta", io::matrix_to_json(e.beta)},
                          {"gamma", io::matrix_to_json(e.gamma)}});
        need(algebra_json, "algebra_json");
        *algebra_json = dup(b.dump(2));
    });
}

int obk_build_kernel(const obk_bimodule* m, const obk_cochain* f, const char* mode, char** report,
                     char** bundle_json, int* verified) {
    return guard([&] {
        need(m, "module");
        need(f, "cochain");
        need(mode, "mode");
        std::string md = mode;
        if (md != "thm3" && md != "thm4") fail(ErrorKind::InputError, "mode must be thm3 or thm4");
        if (!validate_bimodule(m->m).empty()) fail(ErrorKind::NotBimodule, "the module is not a bimodule");
        TheoremKernel tk = md == "thm3" ? build_kernel_thm3(m->m.over, m->m, f->f)
                                        : build_kernel_thm4_finite(m->m.over, m->m, f->f);
        bool ok = false;
        json r = kernel_checks(tk.spec, m->m, tk.hbar, f->f, tk.components, md, ok);
        emit(report, r);
        if (bundle_json) *bundle_json = dup(io::bundle_to_json(md, tk, f->f).dump(2));
        if (verified) *verified = ok;
    });
}

int obk_verify_bundle(const obk_bundle* b, char** report, int* verified) {
    return guard([&] {
        need(b, "bundle");
        const auto& kb = b->b;
        if (kb.mode != "thm3" && kb.mode != "thm4") fail(ErrorKind::InputError, "/mode: expected thm3 or thm4");
        bool ok = false;
        json r = kernel_checks(kb.spec, kb.module, kb.hbar, kb.cocycle, kb.components, kb.mode, ok);
        r["cocycle_is_cocycle"] = is_cocycle(kb.module, kb.cocycle);
        ok = ok && r["cocycle_is_cocycle"].get<bool>();
        r["verified"] = ok;
        emit(report, r);
        if (verified) *verified = ok;
    });
}

int obk_lie_transfer(const obk_lie_module* m, const obk_ce_cochain* f, unsigned bound, char** report, int* verified) {
    return guard([&] {
        need(m, "module");
        need(f, "cochain");
        if (f->f.degree() != 3) fail(ErrorKind::InputError, "/degree: the transfer takes a 3-cochain");
        if (!validate_lie_module(m->m).empty()) fail(ErrorKind::NotBimodule, "the action is not a Lie module");
        auto t = lie_transfer_theorem5(m->m.g, m->m, f->f, bound);
        const auto& r = t.report;
        emit(report, json{{"bound", bound},
                          {"enveloping_dim", t.kernel->algebra().dim()},
                          {"kernel_dim", t.kernel->kernel().dim()},
                          {"components", components_json(t.kernel->kernel().components())},
                          {"probes", r.probes},
                          {"cocycle_input", r.cocycle_input},
                          {"transfer_restricts_to_f", r.transfer_matches},
                          {"curvature_is_ad_h", r.curvature_matches},
                          {"delta_h_is_f", r.delta_h_matches},
                          {"nabla_derivations", r.derivations},
                          {"kernel_identities", r.kernel_identities},
                          {"center_is_module", r.center_ok},
                          {"correction", io::ce_cochain_to_json(t.kernel->correction())},
                          {"failures", r.failures},
                          {"verified", r.ok()}});
        if (verified) *verified = r.ok();
    });
}

}  // extern "C"
