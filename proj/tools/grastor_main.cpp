// grastor: batch CLI for exact Grassmannian-geometry computation and
// machine verification of its algebraic identities over finite fields.
//
// Exit codes: 0 success, 1 verification failure (counterexample found),
// 2 usage / parse error, 3 precondition violation.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "grastor/verify.hpp"

using namespace grastor;

namespace {

struct CommonOpts {
    uint32_t p = 2;
    bool ext = false;
    size_t n = 2;
    uint64_t samples = 1000;
    uint64_t seed = 1;
    bool exhaustive = false;
    bool sampled = false;
    uint64_t limit = default_enumeration_limit();
    unsigned workers = 0;
    std::string form = "symplectic";
    std::string out;

    RunConfig config() const {
        RunConfig cfg;
        cfg.p = p;
        cfg.ext = ext;
        cfg.n = n;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.exhaustive = exhaustive ? 1 : (sampled ? 0 : -1);
        cfg.limit = limit;
        cfg.workers = workers;
        cfg.form = form;
        return cfg;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--p", o.p, "field characteristic (0 = rationals where supported)");
    cmd->add_flag("--ext", o.ext, "use the quadratic extension GF(p^2) with conjugation");
    cmd->add_option("--n", o.n, "ambient dimension");
    cmd->add_option("--samples", o.samples, "sample count for sampled sweeps");
    cmd->add_option("--seed", o.seed, "seed for deterministic sampling");
    cmd->add_flag("--exhaustive", o.exhaustive, "force exhaustive sweeps");
    cmd->add_flag("--sampled", o.sampled, "force sampled sweeps");
    cmd->add_option("--limit", o.limit, "enumeration cardinality cap (env GRASTOR_LIMIT)");
    cmd->add_option("--workers", o.workers, "worker threads (0 = auto)");
    cmd->add_option("--form", o.form, "standard form family: symplectic|hyperbolic|signature");
    cmd->add_option("--out", o.out, "write the report to a file instead of stdout");
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(o.out);
        f << text << "\n";
    }
}

json read_json_arg(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return json::parse(arg);
    std::ifstream f(arg);
    if (!f) throw Error("cannot open '" + arg + "'");
    return json::parse(f);
}

FormDescriptor form_by_name(const CommonOpts& o, const Ring& ring) {
    if (o.form == "symplectic" || o.form == "hyperbolic" || o.form == "signature") {
        if (o.n % 2 != 0) throw Error("standard forms need an even ambient dimension");
        return standard_form(o.config().form_family(), o.n / 2, ring);
    }
    return form_from_json(read_json_arg(o.form));
}

int cmd_gamma(const CommonOpts& o, const std::string& input, const std::string& mode) {
    json in = read_json_arg(input);
    Subspace x = subspace_from_json(in.at("x"));
    Subspace a = subspace_from_json(in.at("a"));
    Subspace y = subspace_from_json(in.at("y"));
    Subspace b = subspace_from_json(in.at("b"));
    Subspace z = subspace_from_json(in.at("z"));
    std::string m = in.contains("mode") ? in.at("mode").get<std::string>() : mode;
    json outj;
    outj["mode"] = m;
    if (m == "restricted") {
        outj["result"] = to_json(gamma_restricted(x, a, y, b, z));
    } else if (m == "global") {
        outj["result"] = to_json(gamma_global(x, a, y, b, z));
    } else if (m == "oracle") {
        outj["result"] = to_json(gamma_oracle(x, a, y, b, z));
    } else if (m == "all") {
        Subspace g = gamma_global(x, a, y, b, z);
        Subspace orc = gamma_oracle(x, a, y, b, z);
        outj["global"] = to_json(g);
        outj["oracle"] = to_json(orc);
        bool agree = g == orc;
        try {
            Subspace res = gamma_restricted(x, a, y, b, z);
            outj["restricted"] = to_json(res);
            agree = agree && res == g;
        } catch (const NotAdmissible&) {
            outj["restricted"] = nullptr;
        }
        outj["agree"] = agree;
        outj["result"] = to_json(g);
    } else {
        throw Error("unknown gamma mode '" + m + "'");
    }
    emit(o, outj.dump(2));
    return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& suite) {
    VerifyResult res = run_suite(suite, o.config());
    emit(o, res.to_json().dump(2));
    return res.passed ? 0 : 1;
}

int cmd_groups(const CommonOpts& o, const std::string& family, const std::string& a_arg,
               bool hull) {
    Ring ring = o.config().ring();
    GroupFamily fam;
    if (family == "gl") fam = GroupFamily::gl;
    else if (family == "gl_rect") fam = GroupFamily::gl_rect;
    else if (family == "orthogonal") fam = GroupFamily::orthogonal;
    else if (family == "symplectic") fam = GroupFamily::symplectic;
    else if (family == "unitary") fam = GroupFamily::unitary;
    else throw Error("unknown family '" + family + "'");
    Matrix a = a_arg == "identity" ? Matrix::identity(ring, o.n)
               : a_arg == "zero"   ? Matrix::zero(ring, o.n, o.n)
               : a_arg == "omega"
                   ? standard_form(StandardFamily::symplectic, o.n / 2, ring).gram()
                   : matrix_from_json(ring, read_json_arg(a_arg));
    HomotopeGroupSpec spec(fam, a);
    MatrixTable t = hull ? semigroup_hull(spec, o.limit) : enumerate_group(spec, o.limit);
    json outj;
    outj["order"] = t.order();
    outj["legend"] = table_legend(t);
    outj["table_csv"] = table_csv(t.table);
    emit(o, outj.dump(2));
    return 0;
}

int cmd_semitable(const CommonOpts& o, const std::string& a_arg) {
    Ring ring = o.config().ring();
    FormDescriptor beta = form_by_name(o, ring);
    auto lagr = enumerate_lagrangians(beta, o.limit);
    Subspace a = a_arg.empty() ? lagr.at(0) : subspace_from_json(read_json_arg(a_arg));
    Subspace ta = orthocomplement(beta, a);
    Subspace y = lagr.at(0);
    json outj;
    outj["lagrangians"] = lagr.size();
    outj["a"] = to_json(a);
    outj["y"] = to_json(y);
    std::vector<std::vector<uint32_t>> table(lagr.size(), std::vector<uint32_t>(lagr.size()));
    for (size_t i = 0; i < lagr.size(); ++i)
        for (size_t k = 0; k < lagr.size(); ++k) {
            Subspace prod = gamma_global(lagr[i], a, y, ta, lagr[k]);
            size_t idx = 0;
            while (idx < lagr.size() && !(lagr[idx] == prod)) ++idx;
            if (idx == lagr.size())
                throw InvariantViolation("semitorsor is not closed on the Lagrangian variety");
            table[i][k] = static_cast<uint32_t>(idx);
        }
    json legend = json::array();
    for (const auto& el : lagr) legend.push_back(to_json(el));
    outj["legend"] = legend;
    outj["table_csv"] = table_csv(table);
    emit(o, outj.dump(2));
    return 0;
}

int cmd_classify(const CommonOpts& o, const std::string& family) {
    Ring ring = o.config().ring();
    ParameterFamily fam;
    if (family == "sym") fam = ParameterFamily::sym;
    else if (family == "asym") fam = ParameterFamily::asym;
    else if (family == "herm") fam = ParameterFamily::herm;
    else throw Error("unknown parameter family '" + family + "'");
    OrbitReport rep = classify_orbits(fam, o.n, ring, o.limit);
    json orbits = json::array();
    for (const auto& orbit : rep.orbits) {
        json j;
        j["representative"] = to_json(orbit.representative);
        j["size"] = orbit.size;
        if (fam != ParameterFamily::herm && o.n <= 2) {
            GroupFamily gfam =
                fam == ParameterFamily::sym ? GroupFamily::orthogonal : GroupFamily::symplectic;
            j["group_order"] = enumerate_group(HomotopeGroupSpec(gfam, orbit.representative),
                                               o.limit)
                                   .order();
        }
        orbits.push_back(std::move(j));
    }
    json outj;
    outj["family"] = family;
    outj["n"] = o.n;
    outj["q"] = ring.cardinality();
    outj["orbits"] = orbits;
    emit(o, outj.dump(2));
    return 0;
}

int cmd_enum(const CommonOpts& o, bool lagrangian) {
    Ring ring = o.config().ring();
    json outj = json::array();
    if (lagrangian) {
        FormDescriptor beta = form_by_name(o, ring);
        for (const auto& s : enumerate_lagrangians(beta, o.limit)) outj.push_back(to_json(s));
    } else {
        for (const auto& s : enumerate_subspaces(ring, o.n, o.limit)) outj.push_back(to_json(s));
    }
    emit(o, outj.dump(2));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Grassmannian geometry calculus: products, torsors, groups, verification"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string gamma_input, gamma_mode = "all";
    auto* gamma = app.add_subcommand("gamma", "evaluate the quintary product on a JSON tuple");
    add_common(gamma, o);
    gamma->add_option("input", gamma_input, "JSON object or @file with x,a,y,b,z")->required();
    gamma->add_option("--mode", gamma_mode, "restricted|global|oracle|all");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    add_common(verify, o);
    verify->add_option("suite", suite, "suite name (see --list)")->required();

    auto* list = app.add_subcommand("suites", "list verification suites");

    std::string family = "orthogonal", a_arg = "identity";
    bool hull = false;
    auto* groups = app.add_subcommand("groups", "enumerate a classical homotope group");
    add_common(groups, o);
    groups->add_option("--family", family, "gl|gl_rect|orthogonal|symplectic|unitary");
    groups->add_option("--A", a_arg, "parameter matrix: identity|zero|omega|JSON|@file");
    groups->add_flag("--hull", hull, "enumerate the semigroup hull instead of the group");

    std::string semitable_a;
    auto* semitable = app.add_subcommand("semitable", "Lagrangian semitorsor product table");
    add_common(semitable, o);
    semitable->add_option("--a", semitable_a, "parameter subspace JSON (default: first Lagrangian)");

    std::string classify_family = "sym";
    auto* classify = app.add_subcommand("classify", "orbit classification of parameter matrices");
    add_common(classify, o);
    classify->add_option("--family", classify_family, "sym|asym|herm");

    bool enum_lagrangian = false;
    auto* enumerate = app.add_subcommand("enum", "enumerate subspaces in canonical order");
    add_common(enumerate, o);
    enumerate->add_flag("--lagrangian", enum_lagrangian, "only fixed points of the form's perp");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(gamma)) return cmd_gamma(o, gamma_input, gamma_mode);
        if (app.got_subcommand(verify)) return cmd_verify(o, suite);
        if (app.got_subcommand(list)) {
            for (const auto& name : suite_names()) std::cout << name << "\n";
            return 0;
        }
        if (app.got_subcommand(groups)) return cmd_groups(o, family, a_arg, hull);
        if (app.got_subcommand(semitable)) return cmd_semitable(o, semitable_a);
        if (app.got_subcommand(classify)) return cmd_classify(o, classify_family);
        if (app.got_subcommand(enumerate)) return cmd_enum(o, enum_lagrangian);
    } catch (const NotAdmissible& e) {
        std::cerr << "NotAdmissible: " << e.what() << "\n";
        return 3;
    } catch (const NotTransversal& e) {
        std::cerr << "NotTransversal: " << e.what() << "\n";
        return 3;
    } catch (const NotCompatible& e) {
        std::cerr << "NotCompatible: " << e.what() << "\n";
        return 3;
    } catch (const NotEnumerable& e) {
        std::cerr << "NotEnumerable: " << e.what() << "\n";
        return 3;
    } catch (const CharacteristicTwo& e) {
        std::cerr << "CharacteristicTwo: " << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
