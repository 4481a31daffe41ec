#include "obstrukt/io.hpp"

#include <map>
#include <set>

#include "obstrukt/errors.hpp"

namespace obstrukt::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    fail(ErrorKind::InputError, where + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) bad(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(where, std::string("missing key \"") + key + "\"");
    return *it;
}

size_t index_from(const json& j, size_t bound, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        bad(where, "expected a non-negative integer index");
    size_t v = j.get<size_t>();
    if (v >= bound) bad(where, "index " + std::to_string(v) + " out of range (dimension " + std::to_string(bound) + ")");
    return v;
}

size_t dim_from(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) bad(where, "expected a non-negative integer");
    return j.get<size_t>();
}

std::vector<std::string> names_from(const json& j, size_t n, const std::string& where) {
    auto it = j.find("names");
    if (it == j.end()) return {};
    if (!it->is_array() || it->size() != n) bad(where + "/names", "expected " + std::to_string(n) + " strings");
    std::vector<std::string> out;
    for (size_t i = 0; i < n; ++i) {
        if (!(*it)[i].is_string()) bad(where + "/names/" + std::to_string(i), "expected a string");
        out.push_back((*it)[i].get<std::string>());
    }
    return out;
}

// [[k, "c"], ...]
SVec terms_from(const json& j, size_t bound, const FieldSpec& f, const std::string& where) {
    if (!j.is_array()) bad(where, "expected a list of [index, coefficient] terms");
    SVec out;
    for (size_t t = 0; t < j.size(); ++t) {
        std::string w = where + "/" + std::to_string(t);
        if (!j[t].is_array() || j[t].size() != 2) bad(w, "expected [index, coefficient]");
        size_t k = index_from(j[t][0], bound, w + "/0");
        axpy(out, scalar_from_json(j[t][1], f, w + "/1"), SVec{{k, Scalar(1)}});
    }
    return out;
}

// visits [[i, j, terms], ...], rejecting repeated (i, j)
template <class F>
void triples(const json& j, size_t bi, size_t bj, size_t bk, const FieldSpec& f, const std::string& where, F&& fn) {
    if (!j.is_array()) bad(where, "expected a list of [i, j, terms] triples");
    std::set<std::pair<size_t, size_t>> seen;
    for (size_t t = 0; t < j.size(); ++t) {
        std::string w = where + "/" + std::to_string(t);
        if (!j[t].is_array() || j[t].size() != 3) bad(w, "expected [i, j, terms]");
        size_t i = index_from(j[t][0], bi, w + "/0");
        size_t jj = index_from(j[t][1], bj, w + "/1");
        if (!seen.insert({i, jj}).second) bad(w, "repeated pair");
        fn(i, jj, terms_from(j[t][2], bk, f, w + "/2"));
    }
}

json terms_to_json(const SVec& v) {
    json out = json::array();
    for (const auto& [k, c] : v)
        if (!c.is_zero()) out.push_back(json::array({k, scalar_to_json(c)}));
    return out;
}

// one triple per nonzero column of each matrix
json matrices_to_json(const std::vector<Matrix>& ms) {
    json out = json::array();
    for (size_t a = 0; a < ms.size(); ++a)
        for (size_t x = 0; x < ms[a].cols(); ++x) {
            SVec col = ms[a].col_sparse(x);
            if (!col.empty()) out.push_back(json::array({a, x, terms_to_json(col)}));
        }
    return out;
}

void matrices_from(const json& j, std::vector<Matrix>& ms, size_t m, const FieldSpec& f, const std::string& where) {
    triples(j, ms.size(), m, m, f, where, [&](size_t a, size_t x, const SVec& v) {
        for (const auto& [y, c] : v) ms[a].at(y, x) = c;
    });
}

const json& optional_array(const json& j, const char* key) {
    static const json empty = json::array();
    auto it = j.find(key);
    return it == j.end() ? empty : *it;
}

}  // namespace

FieldSpec field_from_json(const json& j, const std::string& where) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return FieldSpec::rationals();
        bad(where, "unknown field \"" + j.get<std::string>() + "\"");
    }
    if (j.is_object() && j.size() == 1 && j.contains("Fp")) {
        const json& p = j["Fp"];
        if (!p.is_number_unsigned()) bad(where + "/Fp", "expected a prime");
        try {
            return FieldSpec::prime(p.get<uint64_t>());
        } catch (const Error& e) {
            bad(where + "/Fp", e.what());
        }
    }
    bad(where, "expected \"Q\" or {\"Fp\": p}");
}

json field_to_json(const FieldSpec& f) {
    if (f.is_rational()) return "Q";
    return json{{"Fp", f.p}};
}

Scalar scalar_from_json(const json& j, const FieldSpec& f, const std::string& where) {
    try {
        if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
        if (j.is_number_integer()) return Scalar::parse(std::to_string(j.get<long long>()), f);
    } catch (const Error& e) {
        bad(where, e.what());
    }
    bad(where, "expected a rational as a \"p/q\" string");
}

json scalar_to_json(const Scalar& s) { return s.str(); }

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(scalar_to_json(c));
    return out;
}

json svec_to_json(const SVec& v) { return terms_to_json(v); }

std::shared_ptr<AlgebraSC> algebra_from_json(const json& j) {
    FieldSpec f = field_from_json(member(j, "field", ""), "/field");
    size_t n = dim_from(member(j, "dim", ""), "/dim");
    auto a = std::make_shared<AlgebraSC>(f, n, names_from(j, n, ""));
    triples(member(j, "mul", ""), n, n, n, f, "/mul", [&](size_t x, size_t y, SVec v) { a->set_product(x, y, v); });
    if (auto it = j.find("unit"); it != j.end()) {
        size_t u = index_from(*it, n, "/unit");
        if (!is_unit(*a, u)) bad("/unit", "basis element " + std::to_string(u) + " is not a unit");
        a->unital_idx = u;
    }
    return a;
}

json algebra_to_json(const AlgebraSC& a) {
    json mul = json::array();
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t k = 0; k < a.dim(); ++k)
            if (!a.product(i, k).empty()) mul.push_back(json::array({i, k, terms_to_json(a.product(i, k))}));
    json out{{"field", field_to_json(a.field())}, {"dim", a.dim()}, {"names", a.names()}, {"mul", mul}};
    if (a.unital_idx) out["unit"] = *a.unital_idx;
    return out;
}

std::shared_ptr<LieAlgebraSC> lie_from_json(const json& j) {
    FieldSpec f = field_from_json(member(j, "field", ""), "/field");
    size_t n = dim_from(member(j, "dim", ""), "/dim");
    auto g = std::make_shared<LieAlgebraSC>(f, n, names_from(j, n, ""));
    std::map<std::pair<size_t, size_t>, SVec> given;
    triples(member(j, "bracket", ""), n, n, n, f, "/bracket",
            [&](size_t x, size_t y, SVec v) { given[{x, y}] = std::move(v); });
    // a pair listed in one order fixes the other; listing both must be consistent
    for (const auto& [xy, v] : given) {
        auto [x, y] = xy;
        auto rev = given.find({y, x});
        if (rev != given.end()) {
            SVec sum = v;
            axpy(sum, Scalar(1), rev->second);
            if (!sum.empty() || (x == y && !v.empty()))
                bad("/bracket", "bracket of " + std::to_string(x) + " and " + std::to_string(y) + " is not antisymmetric");
        }
        if (x == y) {
            if (!v.empty()) bad("/bracket", "[e_i, e_i] must vanish");
            continue;
        }
        g->set_antisymmetric(x, y, v);
    }
    return g;
}

json lie_to_json(const LieAlgebraSC& g) {
    json br = json::array();
    for (size_t i = 0; i < g.dim(); ++i)
        for (size_t k = i + 1; k < g.dim(); ++k)
            if (!g.bracket(i, k).empty()) br.push_back(json::array({i, k, terms_to_json(g.bracket(i, k))}));
    return json{{"field", field_to_json(g.field())}, {"dim", g.dim()}, {"names", g.names()}, {"bracket", br}};
}

BimoduleSC bimodule_from_json(const json& j, std::shared_ptr<const AlgebraSC> a) {
    size_t m = dim_from(member(j, "dim", ""), "/dim");
    BimoduleSC out(a, m);
    matrices_from(optional_array(j, "left"), out.left, m, a->field(), "/left");
    matrices_from(optional_array(j, "right"), out.right, m, a->field(), "/right");
    return out;
}

json bimodule_to_json(const BimoduleSC& m) {
    return json{{"dim", m.dim}, {"left", matrices_to_json(m.left)}, {"right", matrices_to_json(m.right)}};
}

LieModule lie_module_from_json(const json& j, std::shared_ptr<const LieAlgebraSC> g) {
    size_t m = dim_from(member(j, "dim", ""), "/dim");
    LieModule out(g, m);
    matrices_from(optional_array(j, "action"), out.action, m, g->field(), "/action");
    return out;
}

json lie_module_to_json(const LieModule& m) {
    return json{{"dim", m.dim}, {"action", matrices_to_json(m.action)}};
}

namespace {

// [[[i1..in], j, "c"], ...] -> callback(tuple, component, coefficient)
template <class F>
void cochain_entries(const json& j, size_t adim, size_t vdim, const FieldSpec& f, size_t& degree, F&& fn) {
    degree = dim_from(member(j, "degree", ""), "/degree");
    const json& es = member(j, "entries", "");
    if (!es.is_array()) bad("/entries", "expected a list");
    for (size_t t = 0; t < es.size(); ++t) {
        std::string w = "/entries/" + std::to_string(t);
        const json& e = es[t];
        if (!e.is_array() || e.size() != 3 || !e[0].is_array()) bad(w, "expected [[i1, ..., in], j, coefficient]");
        if (e[0].size() != degree) bad(w + "/0", "tuple length differs from the degree");
        std::vector<size_t> tup;
        for (size_t k = 0; k < degree; ++k) tup.push_back(index_from(e[0][k], adim, w + "/0/" + std::to_string(k)));
        size_t comp = index_from(e[1], vdim, w + "/1");
        fn(tup, comp, scalar_from_json(e[2], f, w + "/2"), w);
    }
}

}  // namespace

Cochain cochain_from_json(const json& j, size_t adim, size_t vdim, const FieldSpec& f) {
    size_t degree = 0;
    std::map<std::pair<std::vector<size_t>, size_t>, Scalar> vals;
    cochain_entries(j, adim, vdim, f, degree, [&](const std::vector<size_t>& t, size_t c, Scalar s, const std::string& w) {
        if (!vals.emplace(std::make_pair(t, c), std::move(s)).second) bad(w, "repeated entry");
    });
    if (degree > kMaxHochschildDegree + 1) bad("/degree", "degree above the supported range");
    Cochain out(adim, degree, vdim);
    for (const auto& [key, s] : vals) out.flat()[out.encode(key.first) * vdim + key.second] = s;
    return out;
}

json cochain_to_json(const Cochain& c) {
    json es = json::array();
    for (size_t t = 0; t < c.num_tuples(); ++t) {
        Vec v = c.value(t);
        for (size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) es.push_back(json::array({c.decode(t), k, scalar_to_json(v[k])}));
    }
    return json{{"degree", c.degree()}, {"entries", es}};
}

CECochain ce_cochain_from_json(const json& j, std::shared_ptr<const SubsetIndex> idx, size_t vdim,
                               const FieldSpec& f) {
    size_t degree = 0;
    std::map<std::pair<size_t, size_t>, Scalar> vals;
    cochain_entries(j, idx->dim(), vdim, f, degree, [&](std::vector<size_t> t, size_t c, Scalar s, const std::string& w) {
        int sg = sort_sign(t);
        if (sg == 0) bad(w + "/0", "repeated index in an alternating argument");
        if (!vals.emplace(std::make_pair(idx->rank_of(t), c), sg > 0 ? s : -s).second)
            bad(w, "entry given twice, possibly in another order");
    });
    if (degree > idx->dim()) bad("/degree", "degree exceeds the dimension of the Lie algebra");
    CECochain out(idx, degree, vdim);
    for (const auto& [key, s] : vals) out.flat()[key.first * vdim + key.second] = s;
    return out;
}

json ce_cochain_to_json(const CECochain& c) {
    json es = json::array();
    for (size_t r = 0; r < c.num_subsets(); ++r) {
        Vec v = c.value(r);
        for (size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) es.push_back(json::array({c.index().subset(c.degree(), r), k, scalar_to_json(v[k])}));
    }
    return json{{"degree", c.degree()}, {"entries", es}};
}

Connection connection_from_json(const json& j, std::shared_ptr<const AlgebraSC> a,
                                std::shared_ptr<const AlgebraSC> k) {
    if (a->field() != k->field()) fail(ErrorKind::FieldMismatch, "algebra and kernel over different fields");
    Connection c(a, k);
    std::vector<Matrix> u(a->dim(), Matrix(k->dim(), k->dim())), v = u;
    matrices_from(optional_array(j, "u"), u, k->dim(), a->field(), "/u");
    matrices_from(optional_array(j, "v"), v, k->dim(), a->field(), "/v");
    for (size_t x = 0; x < a->dim(); ++x) c.pairs[x] = BiPair(u[x], v[x]);
    return c;
}

json connection_to_json(const Connection& c) {
    std::vector<Matrix> u, v;
    for (const auto& p : c.pairs) {
        u.push_back(p.u);
        v.push_back(p.v);
    }
    return json{{"u", matrices_to_json(u)}, {"v", matrices_to_json(v)}};
}

Matrix matrix_from_json(const json& j, size_t rows, size_t cols, const FieldSpec& f, const std::string& where) {
    if (!j.is_array()) bad(where, "expected a list of [column, terms] pairs");
    Matrix m(rows, cols);
    std::set<size_t> seen;
    for (size_t t = 0; t < j.size(); ++t) {
        std::string w = where + "/" + std::to_string(t);
        if (!j[t].is_array() || j[t].size() != 2) bad(w, "expected [column, terms]");
        size_t c = index_from(j[t][0], cols, w + "/0");
        if (!seen.insert(c).second) bad(w, "repeated column");
        for (const auto& [r, s] : terms_from(j[t][1], rows, f, w + "/1")) m.at(r, c) = s;
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (size_t c = 0; c < m.cols(); ++c) {
        SVec col = m.col_sparse(c);
        if (!col.empty()) out.push_back(json::array({c, terms_to_json(col)}));
    }
    return out;
}

json violations_to_json(const std::vector<Violation>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(json{{"rule", v.rule}, {"where", v.where}, {"difference", vec_to_json(v.diff)}});
    return out;
}

json bundle_to_json(const std::string& mode, const TheoremKernel& tk, const HCochain& f) {
    json comps = json::array();
    for (const auto& c : tk.components) comps.push_back(json{{"label", c.label}, {"offset", c.offset}, {"size", c.size}});
    return json{{"format", "obstrukt-kernel-bundle"},
                {"mode", mode},
                {"algebra", algebra_to_json(*tk.spec.a)},
                {"module", bimodule_to_json(tk.spec.nucleus.rep)},
                {"cocycle", cochain_to_json(f)},
                {"kernel", algebra_to_json(*tk.spec.k)},
                {"connection", connection_to_json(tk.spec.coupling.lift)},
                {"anni", matrix_to_json(tk.spec.nucleus.anni_id)},
                {"hindrance", cochain_to_json(tk.hbar)},
                {"components", comps}};
}

namespace {

template <class F>
auto nested(const std::string& where, F&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InputError) throw;
        std::string msg = e.what();
        fail(ErrorKind::InputError, where + (msg.rfind("/", 0) == 0 || msg.rfind(":", 0) == 0 ? "" : ": ") + msg);
    }
}

}  // namespace

KernelBundle bundle_from_json(const json& j) {
    const json& fmt = member(j, "format", "");
    if (fmt != "obstrukt-kernel-bundle") bad("/format", "not a kernel bundle");
    KernelBundle b;
    const json& mode = member(j, "mode", "");
    if (!mode.is_string()) bad("/mode", "expected a string");
    b.mode = mode.get<std::string>();
    auto a = nested("/algebra", [&] { return algebra_from_json(member(j, "algebra", "")); });
    auto k = nested("/kernel", [&] { return algebra_from_json(member(j, "kernel", "")); });
    b.a = a;
    b.module = nested("/module", [&] { return bimodule_from_json(member(j, "module", ""), a); });
    b.cocycle = nested("/cocycle", [&] { return cochain_from_json(member(j, "cocycle", ""), a->dim(), b.module.dim, a->field()); });
    Connection mu = nested("/connection", [&] { return connection_from_json(member(j, "connection", ""), a, k); });
    Matrix anni = matrix_from_json(member(j, "anni", ""), k->dim(), b.module.dim, a->field(), "/anni");
    b.hbar = nested("/hindrance", [&] { return cochain_from_json(member(j, "hindrance", ""), a->dim(), k->dim(), a->field()); });
    if (b.cocycle.degree() != 3) bad("/cocycle/degree", "expected 3");
    if (b.hbar.degree() != 2) bad("/hindrance/degree", "expected 2");
    const json& comps = member(j, "components", "");
    if (!comps.is_array()) bad("/components", "expected a list");
    for (size_t i = 0; i < comps.size(); ++i) {
        std::string w = "/components/" + std::to_string(i);
        const json& label = member(comps[i], "label", w);
        if (!label.is_string()) bad(w + "/label", "expected a string");
        b.components.push_back(Component{label.get<std::string>(), dim_from(member(comps[i], "offset", w), w + "/offset"),
                                         dim_from(member(comps[i], "size", w), w + "/size")});
    }
    b.spec = make_kernel_spec(mu, anni);
    return b;
}

}  // namespace obstrukt::io
