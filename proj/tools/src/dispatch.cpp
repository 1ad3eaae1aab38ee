#include "fermat/cli.hpp"

#include <algorithm>
#include <functional>

#include <CLI11.hpp>

#include "fermat/errors.hpp"
#include "fermat/frey.hpp"
#include "reports.hpp"

namespace fermat::cli {

namespace {

struct Options
{
    bool json = false;
    std::string manifest;
    bool no_cache = false;

    long d = 0;
    std::string a, b, c;
    unsigned long p = 0;
    std::uint64_t frey_norm_bound = 1000;
    std::uint64_t elim_norm_bound = 50;

    std::string ck_case = "quartic";
    int m = 0;
    std::uint64_t norm = 0;
    std::string mk;
    bool cubic_solvable = false;

    std::string forms;
    std::string bk;
    bool auto_bk = false;
    std::string expect;

    std::string input;
    std::string signature;
    unsigned budget = 50;
    bool csv = false;
    int tower_n = 0;
};

const std::vector<long> kFieldChoices{1, 7, 19, 43, 67};

CLI::Option* add_field(CLI::App* sub, Options& o)
{
    return sub->add_option("--field", o.d, "d in {1,7,19,43,67}")
        ->required()
        ->check(CLI::IsMember(kFieldChoices));
}

std::optional<Integer> big_option(const std::string& text, const std::string& flag)
{
    if (text.empty())
        return std::nullopt;
    try {
        return parse_integer(text);
    } catch (const DataError&) {
        throw UsageError(flag + " expects an integer, got '" + text + "'");
    }
}

struct InputFile
{
    std::string path, text, sha256;
};

InputFile load(const std::string& path, RunRecord& run)
{
    InputFile f{path, read_file(path), {}};
    f.sha256 = sha256_hex(f.text);
    run.inputs.emplace_back(path, f.sha256);
    return f;
}

void emit(const Json& r, bool json, const std::function<void(const Json&, std::ostream&)>& render,
          std::ostream& out)
{
    if (json)
        out << r.dump(2) << '\n';
    else
        render(r, out);
}

/// Elimination report, served from the verdict cache when possible.
Json run_elimination(const Options& o, const Integer& bk, const std::string& bk_source,
                     std::uint64_t norm_bound, RunRecord& run)
{
    const InputFile forms = load(o.forms, run);
    const std::string key = VerdictCache::key(forms.sha256, o.d, bk, norm_bound);
    const VerdictCache cache(VerdictCache::default_dir());
    if (!o.no_cache)
        if (auto hit = cache.lookup(key))
            return *hit;
    Json r = eliminate_report({o.d, forms.text, forms.sha256, norm_bound, bk, bk_source});
    if (!o.no_cache)
        cache.store(key, r);
    return r;
}

/// Checks expectations (if requested) and maps the report to an exit code.
int finish_elimination(Json& r, const Options& o, RunRecord& run, std::ostream& err)
{
    if (!o.expect.empty()) {
        const InputFile ex = load(o.expect, run);
        if (!attach_expectations(r, ex.text)) {
            err << "error: eigenform data does not meet the expectations in " << o.expect << '\n';
            return kExitDataError;
        }
    }
    return has_survivors(r) ? kExitSurvivors : kExitOk;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    RunRecord run;
    run.argv = args;

    CLI::App app{"Modular-method computations for x^p + y^p = z^3 over imaginary quadratic fields",
                 "fermat-pp3"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", FERMAT_VERSION);
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_option("--manifest", o.manifest, "write a run manifest to this path");
    app.add_flag("--no-cache", o.no_cache, "bypass the elimination verdict cache");

    auto* fields = app.add_subcommand("fields", "list the supported fields");

    auto* frey = app.add_subcommand("frey", "Frey curve invariants and local reduction");
    add_field(frey, o);
    frey->add_option("--a", o.a, "a as x,y")->required();
    frey->add_option("--b", o.b, "b as x,y")->required();
    frey->add_option("--c", o.c, "c as x,y")->required();
    frey->add_option("--p", o.p, "odd prime exponent (at most 200000)")
        ->required()
        ->check(CLI::Range(3ul, 200000ul));
    frey->add_option("--norm-bound", o.frey_norm_bound, "classify primes dividing delta up to this norm")
        ->default_val(1000);

    auto* bounds = app.add_subcommand("bounds", "irreducibility and elimination bounds");
    bounds->require_subcommand(1);
    auto* ck = bounds->add_subcommand("ck", "the constant C_K from Frobenius resultants");
    ck->add_option("--case", o.ck_case, "quartic or duodecic")
        ->required()
        ->check(CLI::IsMember({"quartic", "duodecic"}));
    auto* rcg = bounds->add_subcommand("rcg", "ray class group of modulus lambda^m");
    add_field(rcg, o);
    rcg->add_option("--m", o.m, "exponent m")->required()->check(CLI::Range(0, 3));
    auto* aq = bounds->add_subcommand("aq", "the trace set A(q)");
    add_field(aq, o);
    aq->add_option("--norm", o.norm, "norm of q")->required()->check(CLI::PositiveNumber);
    auto* bk = bounds->add_subcommand("bk", "assemble B_K");
    add_field(bk, o);
    bk->add_option("--mk", o.mk, "the constant M_K, if known");
    bk->add_option("--cubic-solvable", o.cubic_solvable, "true or false")->required();

    auto* elim = app.add_subcommand("eliminate", "newform elimination from eigenvalue tables");
    add_field(elim, o);
    elim->add_option("--forms", o.forms, "eigenform file")->required()->check(CLI::ExistingFile);
    elim->add_option("--norm-bound", o.elim_norm_bound, "S = primes of norm below this")->default_val(50);
    auto* bk_opt = elim->add_option("--bk", o.bk, "explicit bound B_K");
    auto* auto_opt = elim->add_flag("--auto-bk", o.auto_bk, "assemble B_K from the field data");
    auto* cubic_opt = elim->add_option("--cubic-solvable", o.cubic_solvable, "for --auto-bk");
    auto* mk_opt = elim->add_option("--mk", o.mk, "for --auto-bk");
    bk_opt->excludes(auto_opt);
    cubic_opt->needs(auto_opt);
    mk_opt->needs(auto_opt);
    elim->add_option("--expect", o.expect, "expectations file")->check(CLI::ExistingFile);

    auto* screen = app.add_subcommand("screen", "screen number fields against the hypotheses");
    screen->add_option("--input", o.input, "field record CSV")->check(CLI::ExistingFile);
    screen->add_option("--signature", o.signature, "pp3 or pp2")
        ->check(CLI::IsMember({"pp3", "pp2"}));
    screen->add_option("--budget", o.budget, "test primes for the zeta_3 check")
        ->default_val(50)
        ->check(CLI::Range(1u, 100000u));
    screen->add_flag("--csv", o.csv, "verdicts as CSV");
    auto* tower = screen->add_subcommand("tower", "the tower polynomial f_n");
    tower->add_option("--n", o.tower_n, "1 <= n <= 10")->required()->check(CLI::Range(1, 10));

    auto* pipe = app.add_subcommand("pipeline", "C_K, ray class groups, B_K and elimination in sequence");
    add_field(pipe, o);
    pipe->add_option("--cubic-solvable", o.cubic_solvable, "true or false")->required();
    pipe->add_option("--mk", o.mk, "the constant M_K, if known");
    pipe->add_option("--forms", o.forms, "eigenform file")->check(CLI::ExistingFile);
    pipe->add_option("--norm-bound", o.elim_norm_bound, "S = primes of norm below this")->default_val(50);
    pipe->add_option("--expect", o.expect, "expectations file")->check(CLI::ExistingFile);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    int code = kExitOk;
    try {
        if (fields->parsed()) {
            run.command = "fields";
            emit(fields_report(), o.json, render_fields, out);
        } else if (frey->parsed()) {
            run.command = "frey";
            run.params = {{"field", o.d}, {"a", o.a}, {"b", o.b}, {"c", o.c}, {"p", o.p},
                          {"norm_bound", o.frey_norm_bound}};
            emit(frey_report({o.d, o.a, o.b, o.c, o.p, o.frey_norm_bound}), o.json, render_frey, out);
        } else if (ck->parsed()) {
            run.command = "bounds ck";
            run.params = {{"case", o.ck_case}};
            emit(ck_report(o.ck_case == "quartic" ? CkCase::Quartic : CkCase::Duodecic), o.json,
                 render_ck, out);
        } else if (rcg->parsed()) {
            run.command = "bounds rcg";
            run.params = {{"field", o.d}, {"m", o.m}};
            emit(rcg_report(o.d, o.m), o.json, render_rcg, out);
        } else if (aq->parsed()) {
            run.command = "bounds aq";
            run.params = {{"field", o.d}, {"norm", o.norm}};
            emit(aq_report(o.d, o.norm), o.json, render_aq, out);
        } else if (bk->parsed()) {
            run.command = "bounds bk";
            run.params = {{"field", o.d}, {"mk", o.mk}, {"cubic_solvable", o.cubic_solvable}};
            emit(bk_report(o.d, big_option(o.mk, "--mk"), o.cubic_solvable), o.json, render_bk,
                 out);
        } else if (elim->parsed()) {
            run.command = "eliminate";
            Integer bound;
            std::string source;
            if (o.auto_bk) {
                if (cubic_opt->count() == 0)
                    throw UsageError("--auto-bk needs --cubic-solvable");
                const auto mk = big_option(o.mk, "--mk");
                const BoundsReport rep =
                    assemble_bk(QuadraticField::supported(o.d), mk, o.cubic_solvable);
                bound = rep.bk_case_two ? *rep.bk_case_two : rep.bk_case_one;
                source = rep.bk_case_two ? "assembled, case II" : "assembled, case I";
            } else if (auto given = big_option(o.bk, "--bk")) {
                bound = *given;
                source = "supplied";
            } else {
                throw UsageError("eliminate needs --bk B or --auto-bk");
            }
            run.params = {{"field", o.d},       {"forms", o.forms},
                          {"norm_bound", o.elim_norm_bound}, {"bk", bound.get_str()},
                          {"bk_source", source}, {"expect", o.expect}};
            Json r = run_elimination(o, bound, source, o.elim_norm_bound, run);
            code = finish_elimination(r, o, run, err);
            emit(r, o.json, render_eliminate, out);
        } else if (tower->parsed()) {
            run.command = "screen tower";
            run.params = {{"n", o.tower_n}};
            emit(tower_report(o.tower_n), o.json, render_tower, out);
        } else if (screen->parsed()) {
            run.command = "screen";
            if (o.input.empty() || o.signature.empty())
                throw UsageError("screen needs --input FILE and --signature pp3|pp2");
            if (o.json && o.csv)
                throw UsageError("--json and --csv are mutually exclusive");
            const InputFile in = load(o.input, run);
            run.params = {{"input", o.input}, {"signature", o.signature}, {"budget", o.budget}};
            const Json r = screen_report({o.signature, o.budget, in.text, in.sha256});
            if (o.csv)
                render_screen_csv(r, out);
            else
                emit(r, o.json, render_screen, out);
        } else if (pipe->parsed()) {
            run.command = "pipeline";
            const auto mk = big_option(o.mk, "--mk");
            Json r;
            r["field"] = o.d;
            r["ck"] = ck_report(o.cubic_solvable ? CkCase::Quartic : CkCase::Duodecic);
            r["ray_class_groups"] = Json::array({rcg_report(o.d, 0), rcg_report(o.d, 1)});
            r["bk"] = bk_report(o.d, mk, o.cubic_solvable);
            const Json& b = r["bk"];
            const Integer bound(
                (b["bk_case_two"].is_null() ? b["bk_case_one"] : b["bk_case_two"]).get<std::string>());
            const std::string source = b["bk_case_two"].is_null() ? "assembled, case I"
                                                                  : "assembled, case II";
            run.params = {{"field", o.d},       {"cubic_solvable", o.cubic_solvable},
                          {"mk", o.mk},         {"forms", o.forms},
                          {"norm_bound", o.elim_norm_bound}, {"expect", o.expect}};
            if (o.forms.empty()) {
                r["eliminate"] = nullptr;
            } else {
                Json e = run_elimination(o, bound, source, o.elim_norm_bound, run);
                code = finish_elimination(e, o, run, err);
                r["eliminate"] = e;
            }
            emit(r, o.json, render_pipeline, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const ConsistencyError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const NotSemistable& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    }

    if (!o.manifest.empty()) {
        try {
            write_manifest(o.manifest, run);
        } catch (const DataError& e) {
            err << "error: " << e.what() << '\n';
            return kExitDataError;
        }
    }
    return code;
}

} // namespace fermat::cli
