// Command-line front end: verification-suite runner, single-formula
// evaluator, and model/task catalog.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bethesym/boson.hpp"
#include "bethesym/mpo.hpp"
#include "bethesym/symfunc.hpp"
#include "bethesym/verify.hpp"

namespace {

using namespace bethesym;

constexpr int kExitAllPass = 0;
constexpr int kExitFailures = 1;
constexpr int kExitInfraError = 2;
constexpr int kExitSingular = 3;
constexpr int kExitUsage = 64;

/// "3/2" -> constant, anything else -> named variable.
Rf parse_value(const std::string& token) {
    if (token.empty()) throw Error("empty value");
    const char c = token[0];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+')
        return Rf(Rational::parse(token));
    return Rf::variable(token);
}

std::vector<Rf> parse_values(const std::string& csv) {
    std::vector<Rf> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_value(item));
    return out;
}

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw Error("malformed integer: " + item);
        }
    }
    return out;
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw Error("config line without '=': " + line);
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("BETHE_SYMM_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

struct VerifyOptions {
    std::string suite = "all";
    std::string profile = "standard";
    std::uint64_t seed = default_seed();
    std::string output;
    std::string format = "text";
    bool symbolic = false;
    std::string config;
    int max_sites = 0;
    int max_permutation = 0;
    int max_mpo_level = 0;
};

int cmd_verify(const VerifyOptions& optIn) {
    VerifyOptions opt = optIn;
    if (!opt.config.empty()) {
        auto kv = read_config(opt.config);
        auto pick = [&](const char* key, std::string& slot, bool overridden) {
            if (!overridden && kv.count(key)) slot = kv.at(key);
        };
        // flags win over file values: only fill slots still at their defaults
        VerifyOptions defaults;
        pick("suite", opt.suite, opt.suite != defaults.suite);
        pick("profile", opt.profile, opt.profile != defaults.profile);
        pick("format", opt.format, opt.format != defaults.format);
        pick("output", opt.output, !opt.output.empty());
        if (kv.count("seed") && opt.seed == defaults.seed)
            opt.seed = std::strtoull(kv.at("seed").c_str(), nullptr, 10);
        if (kv.count("symbolic") && !opt.symbolic) opt.symbolic = kv.at("symbolic") == "true";
    }

    Caps caps = default_caps();
    const Caps hard;
    if (opt.max_sites > 0) caps.max_sites = std::min(opt.max_sites, hard.max_sites);
    if (opt.max_permutation > 0)
        caps.max_permutation = std::min(opt.max_permutation, hard.max_permutation);
    if (opt.max_mpo_level > 0) caps.max_mpo_level = std::min(opt.max_mpo_level, hard.max_mpo_level);

    std::vector<VerificationReport> reports;
    try {
        reports = run_suite(opt.suite, profile_from_name(opt.profile), opt.seed, opt.symbolic, caps);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfraError;
    }

    std::ostringstream body;
    bool all_pass = true;
    if (opt.format == "json") {
        body << "[\n";
        for (std::size_t i = 0; i < reports.size(); ++i)
            body << reports[i].to_json() << (i + 1 < reports.size() ? ",\n" : "\n");
        body << "]\n";
    }
    for (const auto& r : reports) {
        if (r.passes != r.instances) all_pass = false;
        if (opt.format != "json") {
            body << (r.passes == r.instances ? "PASS" : "FAIL") << "  " << r.task << "  "
                 << r.passes << "/" << r.instances << " instances  (" << r.millis << " ms)\n";
            for (const auto& f : r.failures)
                body << "      at " << f.inputs << "\n      lhs = " << f.lhs
                     << "\n      rhs = " << f.rhs << "\n";
        }
    }
    if (opt.output.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(opt.output);
        if (!out) {
            std::cerr << "error: cannot write " << opt.output << "\n";
            return kExitInfraError;
        }
        out << body.str();
    }
    return all_pass ? kExitAllPass : kExitFailures;
}

struct EvalOptions {
    std::string formula;
    std::string lambda_csv;
    std::string vars_csv;
    std::string beta = "0";
    std::string q = "0";
    std::string p = "1";
    std::string u_csv;
    std::string v_csv;
    std::string alpha_csv;
    std::string gamma_csv;
    std::string occ_csv;
    std::string x_csv;
    std::string mode = "particle";
    int sites = 0;
    int particles = -1;
    int total_length = 0;
};

int cmd_eval(const EvalOptions& opt) {
    auto lambda_of = [&](int rows) {
        auto parts = parse_ints(opt.lambda_csv);
        return YoungDiagram(parts, rows);
    };
    const std::string& f = opt.formula;
    Rf value;
    if (f == "schur" || f == "grothendieck" || f == "combinatorial") {
        auto zs = parse_values(opt.vars_csv);
        YoungDiagram lam = lambda_of(static_cast<int>(zs.size()));
        if (f == "schur") value = schur(lam, zs);
        else if (f == "grothendieck") value = grothendieck(lam, zs, parse_value(opt.beta));
        else value = schur_combinatorial(lam, zs, parse_value(opt.beta));
    } else if (f == "factorial" || f == "symplectic") {
        auto zs = parse_values(opt.vars_csv);
        YoungDiagram lam = lambda_of(static_cast<int>(zs.size()));
        ParameterSets ps{parse_values(opt.alpha_csv), parse_values(opt.gamma_csv),
                         f == "factorial" ? 1 : 0};
        int total = opt.total_length > 0 ? opt.total_length : ps.top_index();
        value = f == "factorial" ? gen_factorial_schur(lam, zs, ps, total)
                                 : gen_symplectic_schur(lam, zs, ps, total);
    } else if (f == "qbeta-wavefunction") {
        auto us = parse_values(opt.u_csv);
        value = qbeta_closed_form(opt.sites, parse_ints(opt.x_csv), us, parse_value(opt.q),
                                  parse_value(opt.beta));
    } else if (f == "felderhof-wavefunction") {
        auto us = parse_values(opt.u_csv);
        WavefunctionMode mode =
            opt.mode == "hole" ? WavefunctionMode::Hole : WavefunctionMode::Particle;
        value = felderhof_closed_form(opt.sites, parse_ints(opt.x_csv), us, parse_value(opt.p),
                                      parse_value(opt.q), mode);
    } else if (f == "ik-determinant") {
        auto us = parse_values(opt.u_csv);
        const int m = opt.sites > 0 ? opt.sites : static_cast<int>(us.size());
        auto qs = parse_values(opt.q);
        if (static_cast<int>(qs.size()) == 1) qs.assign(static_cast<std::size_t>(m), qs[0]);
        std::vector<Rf> vs(static_cast<std::size_t>(m), Rf(1));
        if (!opt.v_csv.empty()) vs = parse_values(opt.v_csv);
        value = ik_determinant(m, us, qs, vs, parse_value(opt.p));
    } else if (f == "dwbp") {
        auto us = parse_values(opt.u_csv);
        const int m = static_cast<int>(us.size());
        auto qs = parse_values(opt.q);
        if (static_cast<int>(qs.size()) == 1) qs.assign(static_cast<std::size_t>(m), qs[0]);
        std::vector<Rf> vs(static_cast<std::size_t>(m), Rf(1));
        if (!opt.v_csv.empty()) vs = parse_values(opt.v_csv);
        ModelSpec spec = make_inhom_felderhof(parse_value(opt.p), qs, vs);
        value = dwbp_bruteforce(spec, m, us);
    } else if (f == "scalar-product") {
        auto us = parse_values(opt.u_csv);
        auto vs = parse_values(opt.v_csv);
        ModelSpec spec = make_five_vertex(parse_value(opt.beta));
        value = scalar_product_bruteforce(spec, opt.sites, us, vs);
    } else if (f == "boson-wavefunction") {
        auto vs = parse_values(opt.v_csv);
        FockState occ{parse_ints(opt.occ_csv)};
        const int n = opt.particles >= 0 ? opt.particles : occ.total();
        value = opt.mode == "dual"
                    ? boson_dual_wavefunction(opt.sites, n, occ, vs, parse_value(opt.beta))
                    : boson_wavefunction(opt.sites, n, occ, vs, parse_value(opt.beta));
    } else {
        std::cerr << "error: unknown formula id: " << f << "\n";
        return kExitUsage;
    }
    std::cout << value.str() << "\n";
    return kExitAllPass;
}

int cmd_list(const std::string& what, const std::string& filter) {
    if (what == "models") {
        static const char* lines[] = {
            "XXZ                   six-vertex R-matrix weights, parameter q",
            "GeneralizedXXZ        six-vertex weights alpha1..alpha6 on the two-constraint variety",
            "QBeta                 q,beta deformation of the six-vertex weights",
            "SixVertexBeta         beta-deformed six-vertex weights with unit crossing entries",
            "FiveVertex            q=0 limit of the QBeta weights",
            "Felderhof             free-fermion weights with parameters p, q",
            "InhomFelderhof        Felderhof weights with per-site q_j and spectral scales v_j",
            "GeneralizedFelderhof  free-fermion weights with t and per-site alpha_j, gamma_j",
        };
        for (const char* l : lines)
            if (filter.empty() || wildcard_match(filter, std::string(l).substr(0, std::string(l).find(' '))))
                std::cout << l << "\n";
        return 0;
    }
    if (what == "tasks") {
        for (const auto& info : task_table())
            if (filter.empty() || wildcard_match(filter, info.id))
                std::cout << info.id << "  -  " << info.description << "\n";
        return 0;
    }
    std::cerr << "error: list expects 'models' or 'tasks'\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for integrable lattice partition functions"};
    app.require_subcommand(1);

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "run verification tasks");
    verify->add_option("--suite", vopt.suite, "task id pattern (* and ? wildcards, or 'all')");
    verify->add_option("--profile", vopt.profile, "smoke | standard | deep")
        ->check(CLI::IsMember({"smoke", "standard", "deep"}));
    verify->add_option("--seed", vopt.seed, "sampler seed (default env BETHE_SYMM_SEED or 1)");
    verify->add_option("--output", vopt.output, "write report to file instead of stdout");
    verify->add_option("--format", vopt.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--symbolic", vopt.symbolic, "prefer fully symbolic checks where supported");
    verify->add_option("--config", vopt.config, "key=value config file (flags win)");
    verify->add_option("--max-sites", vopt.max_sites, "override lattice-length cap (clamped)");
    verify->add_option("--max-permutation", vopt.max_permutation,
                       "override permutation-sum cap (clamped)");
    verify->add_option("--max-mpo-level", vopt.max_mpo_level,
                       "override auxiliary-chain cap (clamped)");

    EvalOptions eopt;
    auto* eval = app.add_subcommand("eval", "evaluate one formula");
    eval->add_option("formula", eopt.formula,
                     "schur | grothendieck | factorial | symplectic | combinatorial | "
                     "qbeta-wavefunction | felderhof-wavefunction | ik-determinant | dwbp | "
                     "scalar-product | boson-wavefunction")
        ->required();
    eval->add_option("--lambda", eopt.lambda_csv, "partition, e.g. 2,1");
    eval->add_option("--vars", eopt.vars_csv, "variables: rationals or names, e.g. 1/2,z2");
    eval->add_option("--beta", eopt.beta);
    eval->add_option("--q", eopt.q, "q parameter (list allowed where per-site)");
    eval->add_option("--p", eopt.p);
    eval->add_option("--u", eopt.u_csv, "spectral parameters");
    eval->add_option("--v", eopt.v_csv, "second spectral list / site scales");
    eval->add_option("--alpha", eopt.alpha_csv);
    eval->add_option("--gamma", eopt.gamma_csv);
    eval->add_option("--occ", eopt.occ_csv, "boson occupations per site");
    eval->add_option("--x", eopt.x_csv, "particle or hole positions");
    eval->add_option("--mode", eopt.mode, "particle | hole | dual");
    eval->add_option("--M", eopt.sites, "lattice length");
    eval->add_option("--N", eopt.particles, "particle count");
    eval->add_option("--total-length", eopt.total_length,
                     "parameter-list upper index for factorial/symplectic families");

    std::string list_what, list_filter;
    auto* list = app.add_subcommand("list", "list models or tasks");
    list->add_option("what", list_what, "models | tasks")->required();
    list->add_option("--filter", list_filter, "wildcard pattern");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(vopt);
        if (eval->parsed()) return cmd_eval(eopt);
        if (list->parsed()) return cmd_list(list_what, list_filter);
    } catch (const SingularPoint& e) {
        std::cerr << "singular point: " << e.what() << "\n";
        return kExitSingular;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfraError;
    }
    return kExitUsage;
}
