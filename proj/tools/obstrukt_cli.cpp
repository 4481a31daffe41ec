#include <openssl/evp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "obstrukt.h"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefused = 1;
constexpr int kExitInput = 2;

// thrown to end a command with a given exit code and diagnostic
struct Stop {
    int code;
    std::string kind, message;
};

struct Input {
    std::string path, text;
};

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw Stop{kExitInput, "Internal", "SHA-256 unavailable"};
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

class Run {
public:
    explicit Run(std::string command) : command_(std::move(command)) {}

    Input read(const std::string& role, const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Stop{kExitInput, "InputError", path + ": cannot read file"};
        std::stringstream ss;
        ss << in.rdbuf();
        Input f{path, ss.str()};
        inputs_[role] = json{{"sha256", sha256_hex(f.text)}};
        return f;
    }

    json parse(const Input& f) {
        try {
            return json::parse(f.text);
        } catch (const json::parse_error& e) {
            throw Stop{kExitInput, "InputError", f.path + ": malformed JSON at byte " + std::to_string(e.byte)};
        }
    }

    // maps a C API status to an exit code, prefixing the diagnostic with the file in play
    void check(int status, const std::string& context = "") {
        if (status == OBK_OK) return;
        std::string msg = obk_last_error();
        if (!context.empty()) msg = context + ": " + msg;
        throw Stop{obk_status_is_refusal(status) ? kExitRefused : kExitInput, obk_status_name(status), msg};
    }

    json take(char* report) {
        if (!report) return nullptr;
        json j = json::parse(report);
        obk_string_free(report);
        return j;
    }

    int finish(const std::string& outcome, int code, json result, const std::optional<Stop>& err = std::nullopt) {
        json r{{"command", command_},
               {"inputs", inputs_},
               {"outcome", outcome},
               {"exit_code", code},
               {"result", std::move(result)},
               {"version", obk_version()}};
        if (err) r["error"] = json{{"kind", err->kind}, {"message", err->message}};
        std::cout << r.dump(2) << "\n";
        if (err) std::cerr << "obstrukt " << command_ << ": " << err->message << "\n";
        return code;
    }

    int fail(const Stop& s, json partial = nullptr) {
        std::string outcome = s.code == kExitRefused ? "refused" : "input_error";
        return finish(outcome, s.code, std::move(partial), s);
    }

private:
    std::string command_;
    json inputs_ = json::object();
};

template <class T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() { Free(p); }
};

using Algebra = Handle<obk_algebra, obk_algebra_free>;
using Lie = Handle<obk_lie, obk_lie_free>;
using Bimodule = Handle<obk_bimodule, obk_bimodule_free>;
using LieMod = Handle<obk_lie_module, obk_lie_module_free>;
using Cochain = Handle<obk_cochain, obk_cochain_free>;
using CECochain = Handle<obk_ce_cochain, obk_ce_cochain_free>;
using CouplingH = Handle<obk_coupling, obk_coupling_free>;
using Bundle = Handle<obk_bundle, obk_bundle_free>;

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Stop{kExitInput, "InputError", path + ": cannot write file"};
    out << text << "\n";
}

// path of a referenced file, relative to the referring file
std::string resolve(const Input& from, const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end() || !it->is_string())
        throw Stop{kExitInput, "InputError", from.path + ": missing \"" + std::string(key) + "\" reference; pass it explicitly"};
    fs::path p = it->get<std::string>();
    if (p.is_relative()) p = fs::path(from.path).parent_path() / p;
    return p.string();
}

void load_algebra(Run& run, const std::string& role, const std::string& path, Algebra& out) {
    Input f = run.read(role, path);
    run.check(obk_algebra_from_json(f.text.c_str(), &out.p), f.path);
}

void load_lie(Run& run, const std::string& path, Lie& out) {
    Input f = run.read("lie", path);
    run.check(obk_lie_from_json(f.text.c_str(), &out.p), f.path);
}

// bimodule with its algebra, taken from --algebra or the module's reference
void load_bimodule(Run& run, const std::string& apath, const std::string& mpath, Algebra& a, Bimodule& m) {
    Input mf = run.read("module", mpath);
    std::string ap = apath.empty() ? resolve(mf, run.parse(mf), "algebra") : apath;
    load_algebra(run, "algebra", ap, a);
    run.check(obk_bimodule_from_json(mf.text.c_str(), a.p, &m.p), mf.path);
}

void load_lie_module(Run& run, const std::string& gpath, const std::string& mpath, Lie& g, LieMod& m) {
    Input mf = run.read("module", mpath);
    std::string gp = gpath.empty() ? resolve(mf, run.parse(mf), "lie") : gpath;
    load_lie(run, gp, g);
    run.check(obk_lie_module_from_json(mf.text.c_str(), g.p, &m.p), mf.path);
}

struct Options {
    std::string file, algebra, lie, module, cocycle, kernel, connection, hindrance, bundle, out, mode;
    unsigned degree = 0;
    std::optional<unsigned> bound;
};

unsigned default_bound() {
    const char* env = std::getenv("OBSTRUKT_DEGREE_BOUND");
    if (!env) return 4;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (*env == '\0' || *end != '\0' || v == 0 || v > 64)
        throw Stop{kExitInput, "InputError", "OBSTRUKT_DEGREE_BOUND must be a positive integer"};
    return static_cast<unsigned>(v);
}

int cmd_validate(const Options& o) {
    Run run("validate");
    try {
        Input f = run.read("input", o.file);
        json doc = run.parse(f);
        char* rep = nullptr;
        int valid = 0;
        if (doc.is_object() && doc.contains("format")) {
            Bundle b;
            run.check(obk_bundle_from_json(f.text.c_str(), &b.p), f.path);
            run.check(obk_verify_bundle(b.p, &rep, &valid));
        } else if (doc.is_object() && doc.contains("mul")) {
            Algebra a;
            run.check(obk_algebra_from_json(f.text.c_str(), &a.p), f.path);
            run.check(obk_validate_algebra(a.p, &rep, &valid));
        } else if (doc.is_object() && doc.contains("bracket")) {
            Lie g;
            run.check(obk_lie_from_json(f.text.c_str(), &g.p), f.path);
            run.check(obk_validate_lie(g.p, &rep, &valid));
        } else if (doc.is_object() && doc.contains("action")) {
            Lie g;
            load_lie(run, o.lie.empty() ? resolve(f, doc, "lie") : o.lie, g);
            LieMod m;
            run.check(obk_lie_module_from_json(f.text.c_str(), g.p, &m.p), f.path);
            run.check(obk_validate_lie_module(m.p, &rep, &valid));
        } else if (doc.is_object() && (doc.contains("left") || doc.contains("right"))) {
            Algebra a;
            load_algebra(run, "algebra", o.algebra.empty() ? resolve(f, doc, "algebra") : o.algebra, a);
            Bimodule m;
            run.check(obk_bimodule_from_json(f.text.c_str(), a.p, &m.p), f.path);
            run.check(obk_validate_bimodule(m.p, &rep, &valid));
        } else {
            throw Stop{kExitInput, "InputError", f.path + ": not an algebra, Lie algebra, module or kernel bundle"};
        }
        json r = run.take(rep);
        return valid ? run.finish("ok", kExitOk, r) : run.finish("invalid", kExitRefused, r);
    } catch (const Stop& s) {
        return run.fail(s);
    }
}

int cmd_mul_algebra(const Options& o) {
    Run run("mul-algebra");
    try {
        Algebra k;
        load_algebra(run, "algebra", o.algebra.empty() ? o.file : o.algebra, k);
        char* rep = nullptr;
        run.check(obk_mul_algebra(k.p, &rep));
        return run.finish("ok", kExitOk, run.take(rep));
    } catch (const Stop& s) {
        return run.fail(s);
    }
}

int cmd_cohomology(const Options& o) {
    Run run("cohomology");
    try {
        Algebra a;
        Bimodule m;
        load_bimodule(run, o.algebra, o.module, a, m);
        char* rep = nullptr;
        run.check(obk_hochschild_cohomology(m.p, o.degree, &rep));
        json r = run.take(rep);
        if (!o.cocycle.empty()) {
            Input cf = run.read("cocycle", o.cocycle);
            Cochain f;
            run.check(obk_cochain_from_json(cf.text.c_str(), m.p, &f.p), cf.path);
            run.check(obk_hochschild_class(m.p, f.p, &rep));
            r["cocycle"] = run.take(rep);
        }
        return run.finish("ok", kExitOk, r);
    } catch (const Stop& s) {
        return run.fail(s);
    }
}

int cmd_ce_cohomology(const Options& o) {
    Run run("ce-cohomology");
    try {
        Lie g;
        LieMod m;
        load_lie_module(run, o.lie, o.module, g, m);
        char* rep = nullptr;
        run.check(obk_ce_cohomology(m.p, o.degree, &rep));
        return run.finish("ok", kExitOk, run.take(rep));
    } catch (const Stop& s) {
        return run.fail(s);
    }
}

// coupling from a bundle or from --algebra/--kernel/--connection [--hindrance]
void load_coupling(Run& run, const Options& o, Algebra& a, Algebra& k, Bundle& b, CouplingH& c) {
    if (!o.bundle.empty()) {
        Input f = run.read("bundle", o.bundle);
        run.check(obk_bundle_from_json(f.text.c_str(), &b.p), f.path);
        run.check(obk_bundle_coupling(b.p, &c.p));
        return;
    }
    if (o.algebra.empty() || o.kernel.empty() || o.connection.empty())
        throw Stop{kExitInput, "InputError", "either --bundle or all of --algebra, --kernel and --connection are required"};
    load_algebra(run, "algebra", o.algebra, a);
    load_algebra(run, "kernel", o.kernel, k);
    Input cf = run.read("connection", o.connection);
    run.check(obk_coupling_from_json(cf.text.c_str(), a.p, k.p, &c.p), cf.path);
    if (!o.hindrance.empty()) {
        Input hf = run.read("hindrance", o.hindrance);
        run.check(obk_coupling_set_hindrance(c.p, hf.text.c_str()), hf.path);
    }
}

int cmd_obstruct(const Options& o) {
    Run run("obstruct");
    try {
        Algebra a, k;
        Bundle b;
        CouplingH c;
        load_coupling(run, o, a, k, b, c);
        char* rep = nullptr;
        int vanishes = 0;
        run.check(obk_obstruct(c.p, &rep, &vanishes));
        return run.finish("ok", kExitOk, run.take(rep));
    } catch (const Stop& s) {
        return run.fail(s);
    }
}

int cmd_extend(const Options& o) {
    Run run("extend");
    json partial = nullptr;
    try {
        Algebra a, k;
        Bundle b;
        CouplingH c;
        load_coupling(run, o, a, k, b, c);
        char* rep = nullptr;
        char* alg = nullptr;
        int st = obk_extend(c.p, &rep, &alg);
        partial = run.take(rep);
        run.check(st);
        json r = partial;
        json algebra = run.take(alg);
        if (o.out.empty())
            r["algebra"] = algebra;
        else
            write_file(o.out, algebra.dump(2));
        return run.finish("ok", kExitOk, r);
    } catch (const Stop& s) {
        return run.fail(s, partial);
    }
}

int cmd_build_kernel(const Options& o) {
    Run run("build-kernel");
    try {
        Algebra a;
        Bimodule m;
        load_bimodule(run, o.algebra, o.module, a, m);
        Input cf = run.read("cocycle", o.cocycle);
        Cochain f;
        run.check(obk_cochain_from_json(cf.text.c_str(), m.p, &f.p), cf.path);
        char* rep = nullptr;
        char* bundle = nullptr;
        int verified = 0;
        run.check(obk_build_kernel(m.p, f.p, o.mode.c_str(), &rep, &bundle, &verified));
        json r = run.take(rep);
        json bj = run.take(bundle);
        r["degree_bound"] = o.bound ? json(*o.bound) : json(nullptr);
        if (!o.out.empty()) write_file(o.out, bj.dump(2));
        return verified ? run.finish("ok", kExitOk, r) : run.finish("not_verified", kExitRefused, r);
    } catch (const Stop& s) {
        return run.fail(s);
    }
}

int cmd_lie_transfer(const Options& o) {
    Run run("lie-transfer");
    try {
        unsigned bound = o.bound ? *o.bound : default_bound();
        Lie g;
        LieMod m;
        load_lie_module(run, o.lie, o.module, g, m);
        Input cf = run.read("cocycle", o.cocycle);
        CECochain f;
        run.check(obk_ce_cochain_from_json(cf.text.c_str(), m.p, &f.p), cf.path);
        char* rep = nullptr;
        int verified = 0;
        run.check(obk_lie_transfer(m.p, f.p, bound, &rep, &verified));
        json r = run.take(rep);
        return verified ? run.finish("ok", kExitOk, r) : run.finish("not_verified", kExitRefused, r);
    } catch (const Stop& s) {
        return run.fail(s);
    }
}

int cmd_verify(const Options& o) {
    Run run("verify");
    try {
        Input f = run.read("bundle", o.bundle.empty() ? o.file : o.bundle);
        Bundle b;
        run.check(obk_bundle_from_json(f.text.c_str(), &b.p), f.path);
        char* rep = nullptr;
        int verified = 0;
        run.check(obk_verify_bundle(b.p, &rep, &verified));
        json r = run.take(rep);
        return verified ? run.finish("ok", kExitOk, r) : run.finish("not_verified", kExitRefused, r);
    } catch (const Stop& s) {
        return run.fail(s);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Obstructions to algebra extensions, computed exactly."};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(obk_version()));
    Options o;
    int code = kExitInput;

    auto* validate = app.add_subcommand("validate", "check structure constants of an algebra, module or bundle");
    validate->add_option("file", o.file, "input JSON")->required();
    validate->add_option("--algebra", o.algebra, "algebra for a bimodule file");
    validate->add_option("--lie", o.lie, "Lie algebra for a Lie module file");
    validate->callback([&] { code = cmd_validate(o); });

    auto* mul = app.add_subcommand("mul-algebra", "dimensions of Mul, Inn, Out and Anni of an algebra");
    auto* mul_pos = mul->add_option("file", o.file, "algebra JSON");
    mul->add_option("--algebra", o.algebra, "algebra JSON")->excludes(mul_pos);
    mul->callback([&] {
        if (o.file.empty() && o.algebra.empty())
            code = Run("mul-algebra").fail(Stop{kExitInput, "InputError", "an algebra file is required"});
        else
            code = cmd_mul_algebra(o);
    });

    auto* coh = app.add_subcommand("cohomology", "Hochschild cohomology of a bimodule");
    coh->add_option("--algebra", o.algebra, "algebra JSON (default: the module's reference)");
    coh->add_option("--module", o.module, "bimodule JSON")->required();
    coh->add_option("--degree", o.degree, "degree")->required();
    coh->add_option("--cocycle", o.cocycle, "cochain to classify");
    coh->callback([&] { code = cmd_cohomology(o); });

    auto* ce = app.add_subcommand("ce-cohomology", "Chevalley-Eilenberg cohomology of a Lie module");
    ce->add_option("--lie", o.lie, "Lie algebra JSON (default: the module's reference)");
    ce->add_option("--module", o.module, "Lie module JSON")->required();
    ce->add_option("--degree", o.degree, "degree")->required();
    ce->callback([&] { code = cmd_ce_cohomology(o); });

    for (auto [name, help] : {std::pair{"obstruct", "obstruction class of a kernel with a lift"},
                              std::pair{"extend", "crossed product extension when the obstruction vanishes"}}) {
        auto* sc = app.add_subcommand(name, help);
        sc->add_option("--algebra", o.algebra, "algebra A");
        sc->add_option("--kernel", o.kernel, "kernel algebra K");
        sc->add_option("--connection", o.connection, "lift A -> Mul(K)");
        sc->add_option("--hindrance", o.hindrance, "K-valued 2-cochain lifting the curvature");
        sc->add_option("--bundle", o.bundle, "kernel bundle from build-kernel");
        if (std::string(name) == "extend") {
            sc->add_option("--out", o.out, "where to write the extension algebra");
            sc->callback([&] { code = cmd_extend(o); });
        } else {
            sc->callback([&] { code = cmd_obstruct(o); });
        }
    }

    auto* bk = app.add_subcommand("build-kernel", "kernel realizing a 3-cocycle as its obstruction");
    bk->add_option("--mode", o.mode, "thm3 or thm4")->required()->check(CLI::IsMember({"thm3", "thm4"}));
    bk->add_option("--algebra", o.algebra, "algebra JSON (default: the module's reference)");
    bk->add_option("--module", o.module, "bimodule JSON")->required();
    bk->add_option("--cocycle", o.cocycle, "3-cocycle JSON")->required();
    bk->add_option("--degree-bound", o.bound, "recorded in the report; finite algebras need no truncation");
    bk->add_option("--out", o.out, "where to write the kernel bundle");
    bk->callback([&] { code = cmd_build_kernel(o); });

    auto* lt = app.add_subcommand("lie-transfer", "kernel over a truncated enveloping algebra for a Lie 3-cocycle");
    lt->add_option("--lie", o.lie, "Lie algebra JSON (default: the module's reference)");
    lt->add_option("--module", o.module, "Lie module JSON")->required();
    lt->add_option("--cocycle", o.cocycle, "CE 3-cocycle JSON")->required();
    lt->add_option("--bound", o.bound, "PBW degree bound (default: OBSTRUKT_DEGREE_BOUND or 4)");
    lt->callback([&] { code = cmd_lie_transfer(o); });

    auto* vf = app.add_subcommand("verify", "recheck every invariant of a kernel bundle");
    auto* vf_pos = vf->add_option("file", o.file, "kernel bundle");
    vf->add_option("--bundle", o.bundle, "kernel bundle")->excludes(vf_pos);
    vf->callback([&] {
        if (o.file.empty() && o.bundle.empty())
            code = Run("verify").fail(Stop{kExitInput, "InputError", "a kernel bundle is required"});
        else
            code = cmd_verify(o);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::string sub = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
        return Run(sub).fail(Stop{kExitInput, "UsageError", e.what()});
    } catch (const Stop& s) {
        return Run(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name()).fail(s);
    }
    return code;
}
