// Command-line workbench: computes local Langlands data for simple
// supercuspidal representations of split odd and even special orthogonal
// groups, evaluates tamely twisted gamma factors, and runs the exact
// verification suites.
//
// Exit codes: 0 success, 1 identity failure, 2 usage or input error,
// 3 internal invariant breach.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "llcw/json_io.hpp"
#include "llcw/rs_gamma.hpp"

using namespace llcw;

namespace {

struct CommonOpts {
    long p = 0, f = 1, q = 0, D = 2;
    std::string format = "json";
};

void add_field_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--p", o.p, "residue characteristic");
    cmd->add_option("--f", o.f, "residue degree over the prime field");
    cmd->add_option("--q", o.q, "residue field size (alternative to --p/--f)");
    cmd->add_option("--D", o.D, "degree bound for the value ring (default 2)");
    cmd->add_option("--format", o.format, "json | pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
}

Context make_context(const CommonOpts& o) {
    long p = o.p, f = o.f;
    if (o.q > 0) {
        auto [pp, ff] = prime_power_split(o.q);
        p = pp;
        f = ff;
    }
    if (p < 2) throw config_error("specify --q or --p (and --f)");
    return Context::make(p, f, o.D, 4);
}

Json read_params(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw config_error("cannot open " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw config_error(std::string("malformed JSON: ") + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_llc(const CommonOpts& o, const std::string& params_path) {
    Context ctx = make_context(o);
    CanonicalParams c = params_from_json(ctx, read_params(params_path));
    ParameterDecomposition dec;
    if (std::holds_alternative<SOOddParams>(c))
        dec = llc(ctx, std::get<SOOddParams>(c));
    else if (std::holds_alternative<SOEvenParams>(c))
        dec = llc(ctx, std::get<SOEvenParams>(c));
    else
        throw config_error("llc takes SO_odd or SO_even parameters");
    det_and_type_check(ctx, dec);
    emit(decomposition_to_json(ctx, dec));
    return 0;
}

int cmd_gamma(const CommonOpts& o, const std::string& params_path, long tau_j,
              long tau_uv_order, long tau_uv_exp) {
    Context ctx = make_context(o);
    CanonicalParams c = params_from_json(ctx, read_params(params_path));
    TameCharacter tau = TameCharacter::make(ctx, 1, tau_j, tau_uv_order, tau_uv_exp);
    LaurentRat g;
    if (std::holds_alternative<GLSSCParams>(c))
        g = gamma_gl(ctx, std::get<GLSSCParams>(c), tau).as_rat();
    else if (std::holds_alternative<SOOddParams>(c))
        g = gamma_so_odd(ctx, std::get<SOOddParams>(c), tau).as_rat();
    else
        g = gamma_so_even(ctx, std::get<SOEvenParams>(c), tau);
    Json out{{"gamma", laurent_to_json(g)}, {"pretty", laurent_pretty(g)}};
    if (o.format == "pretty")
        std::cout << out["pretty"].get<std::string>() << "\n";
    else
        emit(out);
    return 0;
}

int cmd_verify(const std::string& suite, const SuiteConfig& cfg,
               const std::string& format, bool list_instances) {
    SuiteReport rep = run_suite(suite, cfg);
    if (format == "pretty") {
        for (const auto& r : rep.records)
            std::cout << (r.ok ? "ok   " : "FAIL ") << r.instance << " ["
                      << r.checked << (r.ok ? "]" : "] " + r.detail) << "\n";
        std::cout << rep.suite << ": " << rep.checked << " checked, "
                  << rep.failures() << " failed\n";
    } else {
        emit(suite_report_to_json(rep, list_instances));
    }
    return rep.ok() ? 0 : 1;
}

int cmd_enumerate(const CommonOpts& o, const std::string& family) {
    Context ctx = make_context(o);
    std::string fam = family;
    long n = 0;
    if (fam.rfind("SO_", 0) == 0 && fam != "SO_odd" && fam != "SO_even") {
        long N = std::stol(fam.substr(3));
        if (N % 2 == 1) {
            fam = "SO_odd";
            n = (N - 1) / 2;
        } else {
            fam = "SO_even";
            n = N / 2;
        }
    }
    if (n == 0) throw config_error("use a group name like SO_5 or SO_4");
    if (fam == "SO_odd") {
        for (const auto& g : enumerate_so_odd(ctx, n)) {
            auto dec = llc(ctx, g);
            det_and_type_check(ctx, dec);
            std::cout << Json{{"params", params_to_json(ctx, g)},
                              {"llc", decomposition_to_json(ctx, dec)}}
                             .dump()
                      << "\n";
        }
    } else {
        for (const auto& g : enumerate_so_even(ctx, n)) {
            auto dec = llc(ctx, g);
            det_and_type_check(ctx, dec);
            std::cout << Json{{"params", params_to_json(ctx, g)},
                              {"llc", decomposition_to_json(ctx, dec)}}
                             .dump()
                      << "\n";
        }
    }
    return 0;
}

int cmd_fdc(const std::string& family, long n, long q) {
    auto [p, f] = prime_power_split(q);
    (void)f;
    FDCFamily fam;
    if (family == "SO_odd") fam = FDCFamily::SOOdd;
    else if (family == "SO_even")
        fam = p == 2 ? FDCFamily::SOEvenP2 : FDCFamily::SOEvenOddP;
    else
        throw config_error("family must be SO_odd or SO_even");
    emit(fdc_to_json(fam, n, q));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for simple supercuspidal Langlands data"};
    app.require_subcommand(1);

    CommonOpts llc_o, gamma_o, enum_o, tame_o;
    std::string llc_params = "-", gamma_params = "-";
    auto* llc_cmd = app.add_subcommand("llc", "parameter decomposition of a class");
    add_field_opts(llc_cmd, llc_o);
    llc_cmd->add_option("params", llc_params, "params JSON file or - for stdin");

    long tau_j = 0, tau_uv_order = 1, tau_uv_exp = 0;
    auto* gamma_cmd = app.add_subcommand("gamma", "tamely twisted gamma factor");
    add_field_opts(gamma_cmd, gamma_o);
    gamma_cmd->add_option("params", gamma_params, "params JSON file or - for stdin");
    gamma_cmd->add_option("--tau-j", tau_j, "unit-part index of tau");
    gamma_cmd->add_option("--tau-order", tau_uv_order, "order of tau(pi)");
    gamma_cmd->add_option("--tau-exp", tau_uv_exp, "exponent of tau(pi)");

    SuiteConfig vcfg;
    std::string suite, vformat = "json";
    bool serial = false, list_instances = false;
    auto* verify_cmd = app.add_subcommand("verify", "run an identity suite");
    verify_cmd->add_option("suite", suite, "gauss | gamma-product | thm-ak | fdc | appendix-a3 | iwahori | all")
        ->required();
    verify_cmd->add_option("--q", vcfg.q, "residue field size");
    verify_cmd->add_option("--tau-order", vcfg.tau_order_bound, "bound on the order of tau(pi)");
    verify_cmd->add_option("--trials", vcfg.trials, "randomized trials per claim");
    verify_cmd->add_option("--seed", vcfg.seed, "sampler seed");
    verify_cmd->add_flag("--serial", serial, "use the serial reference kernel");
    verify_cmd->add_flag("--list-instances", list_instances, "list every instance in the JSON report");
    verify_cmd->add_option("--format", vformat, "json | pretty")
        ->check(CLI::IsMember({"json", "pretty"}));

    std::string enum_family;
    auto* enum_cmd = app.add_subcommand("enumerate", "all classes with their decompositions, one JSON line each");
    add_field_opts(enum_cmd, enum_o);
    enum_cmd->add_option("family", enum_family, "group name, e.g. SO_5 or SO_4")->required();

    std::string fdc_family = "SO_odd";
    long fdc_n = 2, fdc_q = 3;
    auto* fdc_cmd = app.add_subcommand("fdc", "formal degree constraint solutions");
    fdc_cmd->add_option("--family", fdc_family, "SO_odd | SO_even");
    fdc_cmd->add_option("--n", fdc_n, "rank");
    fdc_cmd->add_option("--q", fdc_q, "residue field size");

    auto* tame_cmd = app.add_subcommand("tame", "tame induced representations");
    long tame_d = 2, tame_j = 0, tame_value = 1;
    auto* tame_classify = tame_cmd->add_subcommand("classify", "regularity, self-duality, type, L-factors");
    add_field_opts(tame_classify, tame_o);
    tame_classify->add_option("--d", tame_d, "degree of the unramified extension");
    tame_classify->add_option("--j", tame_j, "character index mod q^d - 1");
    tame_classify->add_option("--value", tame_value, "value at the uniformizer");

    auto* iw_cmd = app.add_subcommand("iwahori", "Iwahori filtration checks");
    std::string iw_family = "so_odd";
    long iw_n = 2, iw_p = 3, iw_f = 1, iw_trials = 200, iw_precision = 8;
    unsigned long iw_seed = 20260824;
    auto* iw_check = iw_cmd->add_subcommand("check", "randomized claims for one family");
    iw_check->add_option("--family", iw_family, "gl | so_odd | so_odd_bt | so_even");
    iw_check->add_option("--n", iw_n, "rank");
    iw_check->add_option("--p", iw_p, "residue characteristic");
    iw_check->add_option("--f", iw_f, "residue degree");
    iw_check->add_option("--seed", iw_seed, "sampler seed");
    iw_check->add_option("--trials", iw_trials, "trials per claim");
    iw_check->add_option("--precision", iw_precision, "working precision K");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (llc_cmd->parsed()) return cmd_llc(llc_o, llc_params);
        if (gamma_cmd->parsed())
            return cmd_gamma(gamma_o, gamma_params, tau_j, tau_uv_order, tau_uv_exp);
        if (verify_cmd->parsed()) {
            vcfg.parallel = !serial;
            return cmd_verify(suite, vcfg, vformat, list_instances);
        }
        if (enum_cmd->parsed()) return cmd_enumerate(enum_o, enum_family);
        if (fdc_cmd->parsed()) return cmd_fdc(fdc_family, fdc_n, fdc_q);
        if (tame_cmd->parsed()) {
            Context ctx = make_context(tame_o);
            emit(tame_verdict_to_json(ctx, tame_d, tame_j, tame_value));
            return 0;
        }
        if (iw_cmd->parsed()) {
            SuiteReport rep = run_iwahori_check(iw_family, iw_n, iw_p, iw_f, iw_seed,
                                                iw_trials, iw_precision);
            emit(suite_report_to_json(rep, true));
            return rep.ok() ? 0 : 1;
        }
        throw config_error("no subcommand");
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
