#include "reports.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "fermat/eliminate.hpp"
#include "fermat/errors.hpp"
#include "fermat/fp_poly.hpp"
#include "fermat/frey.hpp"
#include "fermat/screen.hpp"

namespace fermat::cli {

namespace {

std::string str(const Integer& n) { return n.get_str(); }

Json opt(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

Json val(const Valuation& v) { return v.is_infinite() ? Json("inf") : Json(v.value()); }

std::string show(const Json& v)
{
    if (v.is_null())
        return "unknown";
    if (v.is_boolean())
        return v.get<bool>() ? "yes" : "no";
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

std::string join(const Json& arr, const std::string& sep = ", ")
{
    std::string s;
    for (std::size_t i = 0; i < arr.size(); ++i)
        s += (i ? sep : "") + show(arr[i]);
    return s;
}

Json classification(const LocalClassification& c)
{
    Json j;
    j["q"] = c.prime.str();
    j["norm"] = c.prime.norm();
    j["reduction"] = to_string(c.reduction);
    j["conductor_exponent"] = c.conductor_exponent.exact()
                                  ? Json(c.conductor_exponent.lo)
                                  : Json::array({c.conductor_exponent.lo, c.conductor_exponent.hi});
    j["delta_valuation"] = val(c.delta_valuation);
    j["p_divides_delta_valuation"] = opt(c.p_divides_delta_valuation);
    j["pot_mult"] = opt(c.pot_mult);
    j["p_divides_inertia_image_order"] = opt(c.p_divides_inertia_image_order);
    return j;
}

std::string structure(const std::vector<std::uint64_t>& inv)
{
    if (inv.empty())
        return "trivial";
    std::string s;
    for (std::size_t i = 0; i < inv.size(); ++i)
        s += (i ? " x " : "") + ("Z/" + std::to_string(inv[i]));
    return s;
}

std::string case_name(CkCase c) { return c == CkCase::Quartic ? "quartic" : "duodecic"; }

} // namespace

// --- fields -----------------------------------------------------------------

Json fields_report()
{
    Json rows = Json::array();
    for (const QuadraticField& f : QuadraticField::all_supported()) {
        Json r;
        r["d"] = f.d();
        r["name"] = f.name();
        r["disc"] = f.disc();
        r["omega"] = to_string(f.omega_convention());
        r["omega_minpoly"] = Polynomial{f.omega_norm(), -f.omega_trace(), 1}.str();
        r["unit_count"] = f.unit_count();
        r["three"] = to_string(splitting_type(f, 3));
        rows.push_back(r);
    }
    return Json{{"fields", rows}};
}

void render_fields(const Json& r, std::ostream& out)
{
    out << std::left << std::setw(5) << "d" << std::setw(14) << "field" << std::setw(7) << "disc"
        << std::setw(11) << "omega" << std::setw(14) << "minpoly" << std::setw(7) << "units"
        << "3 splits as\n";
    for (const Json& f : r["fields"])
        out << std::setw(5) << f["d"].get<long>() << std::setw(14) << show(f["name"])
            << std::setw(7) << f["disc"].get<long>() << std::setw(11) << show(f["omega"])
            << std::setw(14) << show(f["omega_minpoly"]) << std::setw(7)
            << f["unit_count"].get<int>() << show(f["three"]) << '\n';
}

// --- frey -------------------------------------------------------------------

Json frey_report(const FreyArgs& args)
{
    const QuadraticField field = QuadraticField::supported(args.d);
    const RingElement a = RingElement::parse(field, args.a);
    const RingElement b = RingElement::parse(field, args.b);
    const RingElement c = RingElement::parse(field, args.c);
    const FreyInvariants inv = frey_invariants(a, b, c, args.p);
    const std::string zero = RingElement::zero(field).str();

    Json r;
    r["field"] = args.d;
    r["p"] = args.p;
    r["a"] = a.str();
    r["b"] = b.str();
    r["c"] = c.str();
    r["fermat_relation"] = inv.fermat_relation;
    r["degenerate"] = inv.degenerate;
    r["model"] = {{"a1", inv.a1.str()}, {"a2", zero}, {"a3", inv.a3.str()},
                  {"a4", zero},         {"a6", zero}};
    r["invariants"] = {{"c4", inv.c4.str()}, {"c6", inv.c6.str()}, {"delta", inv.delta.str()}};
    r["j"] = {{"numerator", inv.j_num.str()}, {"denominator", inv.j_den.str()}};

    Json lam;
    std::optional<LocalClassification> at_lambda;
    try {
        at_lambda = lambda_exponent(a, b, c, args.p);
        lam = classification(*at_lambda);
    } catch (const ConsistencyError& e) {
        lam = {{"q", lambda(field).str()}, {"error", e.what()}};
    } catch (const DomainError& e) {
        lam = {{"q", lambda(field).str()}, {"error", e.what()}};
    }
    const Valuation vb = val_lambda(b);
    if (!vb.is_infinite() && vb.value() > 0) {
        const JValuation jv = j_valuation_at_lambda(b, args.p);
        lam["j_valuation"] = {{"valuation", jv.valuation},
                              {"pot_mult", jv.pot_mult},
                              {"p_in_inertia", jv.p_in_inertia}};
    }
    if (at_lambda && at_lambda->reduction == Reduction::Additive &&
        val_lambda(b * c) == Valuation(0)) {
        const bool solvable = cubic_test(b, c, args.p);
        lam["cubic_mod_lambda2"] = {
            {"solvable", solvable},
            {"inertia_order_12", {{"proposition_reading", solvable},
                                  {"corollary_reading", !solvable}}}};
    }
    r["lambda"] = lam;

    r["norm_bound"] = args.norm_bound;
    Json primes = Json::array();
    if (!inv.degenerate) {
        for (const PrimeIdeal& q : primes_up_to_norm(field, args.norm_bound)) {
            if (q.residue_char() == 3 || !inv.delta.divisible_by(q.generator()))
                continue;
            try {
                primes.push_back(classification(classify_away_from_lambda(inv, q)));
            } catch (const NotSemistable& e) {
                primes.push_back({{"q", q.str()}, {"norm", q.norm()}, {"error", e.what()}});
            }
        }
    }
    r["primes_dividing_delta"] = primes;
    return r;
}

void render_frey(const Json& r, std::ostream& out)
{
    out << "Frey curve over Q(sqrt(-" << r["field"].get<long>() << ")), p = " << r["p"].get<unsigned long>()
        << "\n";
    out << "a = " << show(r["a"]) << ", b = " << show(r["b"]) << ", c = " << show(r["c"])
        << "  (elements written x,y = x + y*w)\n";
    out << "a^p + b^p = c^3: " << show(r["fermat_relation"]) << "\n";
    out << "degenerate: " << show(r["degenerate"]) << "\n";
    out << "model [a1,a2,a3,a4,a6] = [" << show(r["model"]["a1"]) << "; 0,0; "
        << show(r["model"]["a3"]) << "; 0,0; 0,0]\n";
    for (const auto& [k, v] : r["invariants"].items())
        out << k << " = " << show(v) << "\n";

    const Json& lam = r["lambda"];
    out << "at lambda = " << show(lam["q"]) << ": ";
    if (lam.contains("error")) {
        out << show(lam["error"]) << "\n";
    } else {
        out << show(lam["reduction"]) << ", conductor exponent ";
        if (lam["conductor_exponent"].is_array())
            out << "in {" << join(lam["conductor_exponent"]) << "}";
        else
            out << show(lam["conductor_exponent"]);
        out << ", v(delta) = " << show(lam["delta_valuation"]) << "\n";
    }
    if (lam.contains("j_valuation"))
        out << "  v_lambda(j) = " << show(lam["j_valuation"]["valuation"])
            << ", potentially multiplicative: " << show(lam["j_valuation"]["pot_mult"])
            << ", p divides inertia image: " << show(lam["j_valuation"]["p_in_inertia"]) << "\n";
    if (lam.contains("cubic_mod_lambda2")) {
        const Json& cu = lam["cubic_mod_lambda2"];
        out << "  y^3 + 24 b^p c y + 16 b^2p = 0 mod lambda^2 solvable: " << show(cu["solvable"])
            << "\n  inertia order 12 under the proposition reading: "
            << show(cu["inertia_order_12"]["proposition_reading"])
            << ", under the corollary reading: " << show(cu["inertia_order_12"]["corollary_reading"])
            << "\n";
    }
    out << "primes q != lambda dividing delta with norm <= " << r["norm_bound"].get<std::uint64_t>()
        << ":\n";
    if (r["primes_dividing_delta"].empty())
        out << "  none\n";
    for (const Json& q : r["primes_dividing_delta"]) {
        out << "  " << show(q["q"]) << " (norm " << q["norm"].get<std::uint64_t>() << "): ";
        if (q.contains("error"))
            out << show(q["error"]) << "\n";
        else
            out << show(q["reduction"]) << ", v(delta) = " << show(q["delta_valuation"])
                << ", p | v(delta): " << show(q["p_divides_delta_valuation"]) << "\n";
    }
}

// --- bounds -----------------------------------------------------------------

Json ck_report(CkCase which)
{
    const CkResult res = compute_ck(which);
    Json rows = Json::array();
    for (const CkRow& row : res.table)
        rows.push_back({{"trace", row.trace},
                        {"resultant", str(row.resultant)},
                        {"factorization", format_factorization(row.factorization)}});
    Json r;
    r["case"] = case_name(which);
    r["target"] = res.target.str();
    r["candidates"] = "x^2 - a*x + 9, |a| <= 6";
    r["rows"] = rows;
    r["ck"] = str(res.ck);
    return r;
}

void render_ck(const Json& r, std::ostream& out)
{
    out << "Res(x^2 - a*x + 9, " << show(r["target"]) << ")\n";
    out << std::right;
    for (const Json& row : r["rows"])
        out << "  a = " << std::setw(2) << row["trace"].get<long>() << "  " << std::setw(14)
            << show(row["resultant"]) << " = " << show(row["factorization"]) << "\n";
    out << "C_K = " << show(r["ck"]) << "\n";
}

Json rcg_report(long d, int m)
{
    const RayClassGroup g = ray_class_group(QuadraticField::supported(d), m);
    Json r;
    r["field"] = d;
    r["modulus"] = "lambda^" + std::to_string(m);
    r["order"] = g.order();
    r["invariants"] = g.abelian_invariants;
    r["structure"] = structure(g.abelian_invariants);
    return r;
}

void render_rcg(const Json& r, std::ostream& out)
{
    out << "ray class group of Q(sqrt(-" << r["field"].get<long>() << ")) modulo "
        << show(r["modulus"]) << ": " << show(r["structure"]) << " (order "
        << r["order"].get<std::uint64_t>() << ")\n";
}

Json aq_report(long d, std::uint64_t norm)
{
    const QuadraticField field = QuadraticField::supported(d);
    Json gens = Json::array();
    std::optional<PrimeIdeal> first;
    for (const PrimeIdeal& q : primes_up_to_norm(field, norm)) {
        if (q.norm() != norm)
            continue;
        if (!first)
            first = q;
        gens.push_back(q.str());
    }
    if (!first)
        throw DataError("Q(sqrt(-" + std::to_string(d) + ")) has no prime ideal of norm " +
                        std::to_string(norm));
    Json r;
    r["field"] = d;
    r["norm"] = norm;
    r["primes"] = gens;
    r["hasse_bound"] = isqrt(4 * norm);
    r["A"] = set_aq(*first);
    return r;
}

void render_aq(const Json& r, std::ostream& out)
{
    out << "primes of norm " << r["norm"].get<std::uint64_t>() << ": " << join(r["primes"], " ")
        << "\n";
    out << "A(q) = {" << join(r["A"]) << "}  (|a| <= " << r["hasse_bound"].get<std::uint64_t>()
        << ", a = N + 1 mod 3)\n";
}

Json bk_report(long d, const std::optional<Integer>& mk, bool cubic_solvable)
{
    const QuadraticField field = QuadraticField::supported(d);
    const BoundsReport b = assemble_bk(field, mk, cubic_solvable);
    const TorsionRow& t = torsion_row(d);
    Json r;
    r["field"] = d;
    r["torsion_primes"] = t.torsion_primes;
    r["ell_k"] = b.ell_k;
    r["cubic_solvable"] = cubic_solvable;
    r["ck"] = b.ck;
    r["mk"] = mk ? Json(str(*mk)) : Json(nullptr);
    r["bk_case_one"] = str(b.bk_case_one);
    r["bk_case_two"] = b.bk_case_two ? Json(str(*b.bk_case_two)) : Json(nullptr);
    return r;
}

void render_bk(const Json& r, std::ostream& out)
{
    out << "field Q(sqrt(-" << r["field"].get<long>() << "))\n";
    out << "torsion primes {" << join(r["torsion_primes"]) << "}, l_K = "
        << r["ell_k"].get<std::uint64_t>() << "\n";
    out << "cubic solvable mod lambda^2: " << show(r["cubic_solvable"])
        << ", C_K = " << r["ck"].get<std::uint64_t>() << "\n";
    out << "M_K = " << (r["mk"].is_null() ? "not supplied" : show(r["mk"])) << "\n";
    out << "B_K (case I)  = " << show(r["bk_case_one"]) << "\n";
    out << "B_K (case II) = " << (r["bk_case_two"].is_null() ? "unavailable" : show(r["bk_case_two"]))
        << "\n";
}

// --- eliminate --------------------------------------------------------------

Json eliminate_report(const EliminateArgs& args)
{
    const QuadraticField field = QuadraticField::supported(args.d);
    std::istringstream in(args.forms_text);
    ParsedForms parsed = parse_forms(in);

    std::vector<const EigenformRecord*> forms;
    for (const EigenformRecord& rec : parsed.records)
        if (rec.field == field)
            forms.push_back(&rec);
    std::stable_sort(forms.begin(), forms.end(), [](const auto* x, const auto* y) {
        return std::tie(x->level_exponent, x->form_id) < std::tie(y->level_exponent, y->form_id);
    });
    std::vector<int> levels;
    for (const LevelBlock& b : parsed.blocks)
        if (b.d == args.d)
            levels.push_back(b.level_exponent);
    std::sort(levels.begin(), levels.end());

    const std::vector<PrimeIdeal> primes = elimination_primes(field, args.norm_bound);
    if (primes.empty())
        throw DomainError("no primes q != lambda of norm below " + std::to_string(args.norm_bound));

    Json r;
    r["field"] = args.d;
    r["forms_sha256"] = args.forms_sha256;
    r["norm_bound"] = args.norm_bound;
    r["bk"] = str(args.bk);
    r["bk_source"] = args.bk_source;
    Json qs = Json::array();
    for (const PrimeIdeal& q : primes)
        qs.push_back(q.str());
    r["primes"] = qs;
    r["levels_supplied"] = levels;
    r["warnings"] = parsed.warnings;

    Json out_forms = Json::array();
    for (const EigenformRecord* rec : forms) {
        const EliminationReport rep = verdict(*rec, args.bk, primes);
        Json f;
        f["form_id"] = rep.form_id;
        f["level"] = "lambda^" + std::to_string(rep.level_exponent);
        f["qf"] = rec->qf_poly.str();
        Json per = Json::array();
        for (const PrimeContribution& pc : rep.per_prime)
            per.push_back({{"q", pc.q.str()}, {"norm", pc.q.norm()}, {"norm_b", str(pc.norm_b)}});
        f["per_prime"] = per;
        f["c_f"] = str(rep.c_f);
        f["factorization"] = rep.c_f == 0 ? "0" : format_factorization(factorize(rep.c_f));
        Json divs = Json::array();
        for (const Integer& p : rep.prime_divisors)
            divs.push_back(str(p));
        f["prime_divisors"] = divs;
        f["verdict"] = to_string(rep.verdict);
        Json surv = Json::array();
        for (const Integer& p : rep.survivors)
            surv.push_back(str(p));
        f["survivors"] = surv;
        f["note"] = rep.note;
        out_forms.push_back(f);
    }
    r["forms"] = out_forms;
    return r;
}

bool attach_expectations(Json& report, const std::string& expectations_text)
{
    std::istringstream in(expectations_text);
    const long d = report["field"].get<long>();
    std::vector<LevelExpectation> wanted;
    for (LevelExpectation& e : parse_expectations(in))
        if (e.d == d)
            wanted.push_back(std::move(e));

    std::vector<LevelBlock> supplied;
    for (const Json& l : report["levels_supplied"])
        supplied.push_back({d, l.get<int>()});
    std::vector<EliminationReport> reports;
    for (const Json& f : report["forms"]) {
        EliminationReport rep;
        rep.form_id = f["form_id"].get<std::string>();
        rep.d = d;
        rep.level_exponent = std::stoi(f["level"].get<std::string>().substr(7));
        rep.c_f = Integer(f["c_f"].get<std::string>());
        reports.push_back(std::move(rep));
    }

    bool ok = true;
    Json arr = Json::array();
    for (const ExpectationOutcome& o : check_expectations(wanted, supplied, reports)) {
        std::string sig;
        for (const FormExpectation& f : o.expectation.forms)
            sig += (sig.empty() ? "" : " ") + f.str();
        arr.push_back({{"level", "lambda^" + std::to_string(o.expectation.level_exponent)},
                       {"expected", sig.empty() ? "none" : sig},
                       {"status", to_string(o.status)},
                       {"detail", o.detail}});
        ok = ok && o.status != ExpectationOutcome::Status::Failed;
    }
    report["expectations"] = arr;
    return ok;
}

bool has_survivors(const Json& report)
{
    return std::any_of(report["forms"].begin(), report["forms"].end(),
                       [](const Json& f) { return !f["survivors"].empty(); });
}

void render_eliminate(const Json& r, std::ostream& out)
{
    out << "elimination over Q(sqrt(-" << r["field"].get<long>() << ")), B_K = " << show(r["bk"])
        << " (" << show(r["bk_source"]) << ")\n";
    out << "S = primes q != lambda with norm < " << r["norm_bound"].get<std::uint64_t>() << ": "
        << join(r["primes"], " ") << "\n";
    for (const Json& w : r["warnings"])
        out << "warning: " << show(w) << "\n";
    if (r["forms"].empty())
        out << "no forms for this field in the input\n";
    for (const Json& f : r["forms"]) {
        out << "form " << show(f["form_id"]) << " at level " << show(f["level"]) << ", Q_f = Q[x]/("
            << show(f["qf"]) << ")\n";
        for (const Json& pc : f["per_prime"])
            out << "  q = " << std::left << std::setw(10) << show(pc["q"]) << " |N(B_f,q)| = "
                << show(pc["norm_b"]) << "\n";
        out << "  C_f = " << show(f["c_f"]);
        if (f["c_f"] != "0" && f["c_f"] != f["factorization"])
            out << " = " << show(f["factorization"]);
        out << "\n";
        out << "  verdict: " << show(f["verdict"]);
        if (!f["survivors"].empty())
            out << " [" << join(f["survivors"]) << "]";
        out << "\n  " << show(f["note"]) << "\n";
    }
    if (r.contains("expectations")) {
        out << "expectations:\n";
        for (const Json& e : r["expectations"])
            out << "  " << show(e["level"]) << " " << show(e["expected"]) << ": "
                << show(e["status"]) << " (" << show(e["detail"]) << ")\n";
    }
}

// --- screen -----------------------------------------------------------------

Json screen_report(const ScreenArgs& args)
{
    std::istringstream in(args.input_text);
    ParsedCorpus corpus = parse_field_records(in);
    const bool pp3 = args.signature == "pp3";
    const ScreeningResult res = pp3 ? screen_pp3(corpus.records, args.budget)
                                    : screen_pp2(corpus.records);

    Json r;
    r["signature"] = args.signature;
    if (pp3)
        r["budget"] = args.budget;
    r["input_sha256"] = args.input_sha256;
    r["records"] = corpus.records.size();
    r["skipped"] = corpus.skipped;
    r["warnings"] = corpus.warnings;

    Json verdicts = Json::array();
    for (const ScreeningVerdict& v : res.verdicts) {
        Json j;
        j["label"] = v.label;
        j["degree"] = v.degree;
        if (pp3) {
            j["zeta3"] = v.zeta3.str();
            j["primes_above_3"] = v.primes_above_3 ? Json(*v.primes_above_3) : Json(nullptr);
            j["h_plus_one"] = opt(v.h_plus_one);
            j["passes_pp3"] = opt(v.passes_pp3);
        } else {
            j["ramified2"] = opt(v.ramified2);
            j["h_plus_odd"] = opt(v.h_plus_odd);
            j["h_plus_one"] = opt(v.h_plus_one);
            j["passes_pp2"] = opt(v.passes_pp2);
        }
        verdicts.push_back(j);
    }
    r["verdicts"] = verdicts;

    Json summary = Json::array();
    for (const DegreeSummary& s : res.summary) {
        Json j;
        j["degree"] = s.degree;
        j["F"] = s.f;
        if (s.g)
            j["G"] = *s.g;
        j["K"] = s.k;
        j["undecided"] = s.undecided;
        summary.push_back(j);
    }
    r["summary"] = summary;
    return r;
}

void render_screen(const Json& r, std::ostream& out)
{
    const bool pp3 = r["signature"] == "pp3";
    out << "screening for signature (p,p," << (pp3 ? "3" : "2") << "): " << r["records"].get<std::size_t>()
        << " records, " << r["skipped"].get<std::size_t>() << " skipped\n";
    for (const Json& w : r["warnings"])
        out << "warning: " << show(w) << "\n";
    out << std::left;
    if (pp3) {
        out << std::setw(16) << "label" << std::setw(5) << "deg" << std::setw(26) << "zeta_3"
            << std::setw(10) << "above 3" << std::setw(8) << "h+=1" << "passes\n";
        for (const Json& v : r["verdicts"])
            out << std::setw(16) << show(v["label"]) << std::setw(5) << v["degree"].get<int>()
                << std::setw(26) << show(v["zeta3"]) << std::setw(10) << show(v["primes_above_3"])
                << std::setw(8) << show(v["h_plus_one"]) << show(v["passes_pp3"]) << "\n";
    } else {
        out << std::setw(16) << "label" << std::setw(5) << "deg" << std::setw(16) << "2 tot. ramified"
            << std::setw(8) << "h+ odd" << std::setw(8) << "h+=1" << "passes\n";
        for (const Json& v : r["verdicts"])
            out << std::setw(16) << show(v["label"]) << std::setw(5) << v["degree"].get<int>()
                << std::setw(16) << show(v["ramified2"]) << std::setw(8) << show(v["h_plus_odd"])
                << std::setw(8) << show(v["h_plus_one"]) << show(v["passes_pp2"]) << "\n";
    }
    out << "summary:\n";
    out << std::right << std::setw(8) << "degree" << std::setw(8) << "|F_n|";
    if (!pp3)
        out << std::setw(8) << "|G_n|";
    out << std::setw(8) << "|K_n|" << std::setw(11) << "undecided" << "\n";
    for (const Json& s : r["summary"]) {
        out << std::setw(8) << s["degree"].get<int>() << std::setw(8) << s["F"].get<unsigned>();
        if (!pp3)
            out << std::setw(8) << s["G"].get<unsigned>();
        out << std::setw(8) << s["K"].get<unsigned>() << std::setw(11)
            << s["undecided"].get<unsigned>() << "\n";
    }
}

void render_screen_csv(const Json& r, std::ostream& out)
{
    const bool pp3 = r["signature"] == "pp3";
    const std::vector<std::string> cols =
        pp3 ? std::vector<std::string>{"label", "degree", "zeta3", "primes_above_3", "h_plus_one",
                                       "passes_pp3"}
            : std::vector<std::string>{"label", "degree", "ramified2", "h_plus_odd", "h_plus_one",
                                       "passes_pp2"};
    for (std::size_t i = 0; i < cols.size(); ++i)
        out << (i ? "," : "") << cols[i];
    out << "\n";
    for (const Json& v : r["verdicts"]) {
        for (std::size_t i = 0; i < cols.size(); ++i)
            out << (i ? "," : "") << show(v[cols[i]]);
        out << "\n";
    }
}

Json tower_report(int n)
{
    const Polynomial f = tower_poly(n);
    const auto& cs = f.coeffs();
    bool eisenstein = mpz_divisible_ui_p(cs[0].get_mpz_t(), 4) == 0;
    for (std::size_t i = 0; i + 1 < cs.size(); ++i)
        eisenstein = eisenstein && mpz_divisible_ui_p(cs[i].get_mpz_t(), 2) != 0;
    const DedekindResult at2 = dedekind_split(f, 2);
    Json shapes = Json::array();
    for (const PrimeShape& s : at2.shapes)
        shapes.push_back({{"f", s.residue_degree}, {"e", s.ramification}});

    Json r;
    r["n"] = n;
    r["degree"] = f.degree();
    r["poly"] = f.str();
    r["coefficients"] = f.coeff_str(';');
    r["eisenstein_at_2"] = eisenstein;
    r["shapes_at_2"] = shapes;
    r["certified"] = at2.certified;
    r["totally_ramified_at_2"] =
        at2.certified && at2.shapes.size() == 1 &&
        at2.shapes[0].ramification == static_cast<unsigned>(f.degree());
    return r;
}

void render_tower(const Json& r, std::ostream& out)
{
    out << "f_" << r["n"].get<int>() << " = " << show(r["poly"]) << "\n";
    out << "degree " << r["degree"].get<int>() << ", Eisenstein at 2: " << show(r["eisenstein_at_2"])
        << "\n";
    out << "primes above 2 (f, e):";
    for (const Json& s : r["shapes_at_2"])
        out << " (" << s["f"].get<unsigned>() << ", " << s["e"].get<unsigned>() << ")";
    out << (r["certified"].get<bool>() ? " [certified]" : " [not certified]") << "\n";
    out << "2 totally ramified: " << show(r["totally_ramified_at_2"]) << "\n";
}

// --- pipeline ---------------------------------------------------------------

void render_pipeline(const Json& r, std::ostream& out)
{
    out << "== step 1: irreducibility constant\n";
    render_ck(r["ck"], out);
    out << "== step 2: ray class groups\n";
    for (const Json& g : r["ray_class_groups"])
        render_rcg(g, out);
    out << "== step 3: bound assembly\n";
    render_bk(r["bk"], out);
    out << "== step 4: newform elimination\n";
    if (r["eliminate"].is_null())
        out << "skipped: no --forms file supplied\n";
    else
        render_eliminate(r["eliminate"], out);
}

} // namespace fermat::cli
