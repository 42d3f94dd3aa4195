#include "qsc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qsc/audits.hpp"
#include "qsc/codes.hpp"
#include "qsc/errors.hpp"
#include "qsc/io.hpp"
#include "qsc/linpoly.hpp"
#include "qsc/orbits.hpp"

namespace qsc::cli {

namespace {

using nlohmann::json;

struct Globals {
    std::string format = "text";
    uint32_t cap_table = 28;
    uint64_t cap_orbit = kDefaultOrbitCap;
    uint32_t cap_n = 0;    // 0 keeps each command's own default
    uint64_t seed = 1;
    bool literal = false;
};

bool json_mode(const Globals& g) { return g.format == "json"; }

const char* kind_name(OrbitKind k) {
    switch (k) {
        case OrbitKind::Cyclic: return "cyclic";
        case OrbitKind::Quasi: return "quasi";
        case OrbitKind::Frobenius: return "frobenius";
    }
    return "unknown";
}

const char* status_name(ClosedFormStatus s) {
    switch (s) {
        case ClosedFormStatus::Holds: return "holds";
        case ClosedFormStatus::Fails: return "fails";
        case ClosedFormStatus::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

// text rendering of a flat report: one "key: value" line per entry, arrays
// space-joined; keys come out sorted, matching the JSON rendering
void print_kv(std::ostream& out, const json& doc) {
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        out << it.key() << ": ";
        const json& v = it.value();
        if (v.is_string()) {
            out << v.get<std::string>();
        } else if (v.is_array()) {
            bool first = true;
            for (const json& x : v) {
                if (!first) out << ' ';
                first = false;
                out << (x.is_string() ? x.get<std::string>() : x.dump());
            }
        } else {
            out << v.dump();
        }
        out << '\n';
    }
}

void emit_flat(std::ostream& out, const Globals& g, const json& doc) {
    if (json_mode(g))
        out << doc.dump(2) << '\n';
    else
        print_kv(out, doc);
}

int run_field_check(const Globals& g, const std::string& path, std::ostream& out) {
    Field F = load_field_file(path, g.cap_table);
    json doc{{"ok", true},     {"p", F->p()},       {"e", F->e()},
             {"n", F->n()},    {"q", F->q()},       {"size", F->size()},
             {"group_order", F->group_order()},     {"modulus", F->modulus()}};
    emit_flat(out, g, doc);
    return 0;
}

int run_bound(const Globals& g, uint32_t n, uint32_t k, uint32_t delta, uint32_t q,
              std::ostream& out) {
    BigInt b = ev_bound(n, k, delta, q);
    uint32_t d = 2 * delta + 2;
    json doc{{"n", n},       {"k", k},           {"delta", delta},
             {"q", q},       {"d", d},           {"bound", b.str()},
             {"statement", "A_" + std::to_string(q) + "(" + std::to_string(n) + "," +
                               std::to_string(d) + "," + std::to_string(k) + ") <= " + b.str()}};
    emit_flat(out, g, doc);
    return 0;
}

int run_subpoly(const Globals& g, const std::string& field_path, const std::string& line,
                std::ostream& out) {
    Field F = load_field_file(field_path, g.cap_table);
    SubspaceParse sp = parse_subspace_line(F, line, /*strict=*/true);
    LinearizedPoly L = subspace_poly(sp.subspace);
    json doc{{"k", sp.subspace.dim()},
             {"subspace", format_subspace_basis(sp.subspace)},
             {"poly", format_lin_poly(L)}};
    emit_flat(out, g, doc);
    return 0;
}

int run_orbit(const Globals& g, const std::string& field_path, const std::string& line,
              uint64_t m, std::ostream& out) {
    Field F = load_field_file(field_path, g.cap_table);
    SubspaceParse sp = parse_subspace_line(F, line, /*strict=*/true);
    OrbitReport rep = quasi_orbit(sp.subspace, m, g.cap_orbit);

    std::vector<std::string> reps;
    reps.reserve(rep.representatives.size());
    for (const Subspace& W : rep.representatives) reps.push_back(format_subspace_basis(W));

    if (json_mode(g)) {
        json doc{{"kind", kind_name(rep.kind)},
                 {"m", rep.m},
                 {"length", rep.length},
                 {"t", rep.t},
                 {"full_length", rep.full_length},
                 {"lemma9_consistent", status_name(rep.closed_form)},
                 {"representatives", reps}};
        if (rep.closed_form == ClosedFormStatus::Holds) doc["lemma9_t"] = rep.closed_form_t;
        out << doc.dump(2) << '\n';
    } else {
        out << "kind: " << kind_name(rep.kind) << '\n';
        out << "m: " << rep.m << '\n';
        out << "length: " << rep.length << '\n';
        out << "t: " << rep.t << '\n';
        out << "full_length: " << (rep.full_length ? "true" : "false") << '\n';
        out << "lemma9_consistent: " << status_name(rep.closed_form);
        if (rep.closed_form == ClosedFormStatus::Holds) out << " (t'=" << rep.closed_form_t << ")";
        out << '\n';
        out << "representatives:\n";
        for (const std::string& r : reps) out << "  " << r << '\n';
    }
    return 0;
}

// writes the code file to path (or inline), then the report; returns rc
int deliver_code(const Globals& g, const Code& C, json report, const std::string& out_path,
                 std::ostream& out, int rc) {
    std::ostringstream file;
    write_code_file(file, C);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw Error(Errc::ParseError, "cannot write '" + out_path + "'");
        f << file.str();
        report["output"] = out_path;
    }
    if (json_mode(g)) {
        if (out_path.empty()) report["code_file"] = file.str();
        out << report.dump(2) << '\n';
    } else if (out_path.empty()) {
        out << file.str();   // the file itself is the output, pipe it onward
    } else {
        print_kv(out, report);
    }
    return rc;
}

int run_construct_c4(const Globals& g, uint32_t q, uint32_t n, uint32_t k, uint32_t s, uint64_t m,
                     const std::string& out_path, std::ostream& out) {
    Code C = construct_single_orbit(q, n, k, s, m, g.cap_table, g.cap_orbit);
    uint32_t d = C.words.size() >= 2 ? min_distance(C) : 0;
    C.claimed = Claimed{C.field->n(), C.dim(), C.words.size(), d};
    json report{{"construction", "c4"},
                {"q", q},
                {"n", n},
                {"k", k},
                {"s", s},
                {"m", m},
                {"size", C.words.size()},
                {"dim", C.dim()},
                {"d", d},
                {"quasi_closed", true}};
    return deliver_code(g, C, std::move(report), out_path, out, 0);
}

int run_construct_t4(const Globals& g, uint32_t q, uint32_t n, uint32_t k, uint32_t s, uint64_t m,
                     bool have_coeffs, uint64_t a0_exp, uint64_t as_exp,
                     const std::string& out_path, std::ostream& out) {
    uint32_t cap_n = g.cap_n ? g.cap_n : kDefaultSplitCap;
    MultiOrbitReport R =
        have_coeffs ? construct_multi_orbit_with_coeffs(q, n, k, s, m, a0_exp, as_exp, cap_n,
                                                        g.cap_table, g.cap_orbit)
                    : construct_multi_orbit(q, n, k, s, m, cap_n, g.cap_table, g.cap_orbit);
    Code& C = R.code;
    C.claimed = Claimed{C.field->n(), C.dim(), C.words.size(), R.measured_distance};
    json report{{"construction", "t4"},
                {"q", q},
                {"n", R.n},
                {"N", R.N},
                {"k", k},
                {"s", s},
                {"m", m},
                {"a0_exp", R.a0_exp},
                {"as_exp", R.as_exp},
                {"used_fallback", R.used_fallback},
                {"orbit_lengths", R.orbit_lengths},
                {"orbits_disjoint", R.orbits_disjoint},
                {"d", R.measured_distance},
                {"quasi_closed", R.quasi_closed},
                {"size", C.words.size()},
                {"formula_num", R.formula_num.str()},
                {"formula_den", R.formula_den.str()},
                {"size_matches_formula", R.size_matches_formula}};
    int rc = R.orbits_disjoint && R.quasi_closed ? 0 : 1;
    return deliver_code(g, C, std::move(report), out_path, out, rc);
}

int run_verify(const Globals& g, const std::string& path, std::ostream& out) {
    CodeFile cf = load_code_file(path, !g.literal, /*strict=*/false, g.cap_table, g.cap_orbit);
    AuditReport A = audit_code(cf.code);
    bool ok = A.mismatches.empty() && cf.warnings.empty();

    std::string sandwich;
    if (A.has_bound)
        sandwich = std::to_string(A.size) + " <= A_" + std::to_string(A.q) + "(" +
                   std::to_string(A.n) + "," + std::to_string(A.d) + "," + std::to_string(A.k) +
                   ") <= " + A.bound.str();

    if (json_mode(g)) {
        json doc{{"q", A.q},
                 {"n", A.n},
                 {"m", cf.code.m},
                 {"size", A.size},
                 {"constant_dimension", A.constant_dimension},
                 {"k", A.k},
                 {"d", A.d},
                 {"quasi_cyclic", A.quasi_closed},
                 {"mismatches", A.mismatches},
                 {"warnings", cf.warnings},
                 {"ok", ok}};
        doc["bound"] = A.has_bound ? json(A.bound.str()) : json(nullptr);
        doc["sandwich"] = A.has_bound ? json(sandwich) : json(nullptr);
        if (cf.code.claimed) {
            const Claimed& cl = *cf.code.claimed;
            doc["claimed"] = json{{"n", cl.n}, {"k", cl.k}, {"size", cl.size}, {"d", cl.d}};
        } else {
            doc["claimed"] = nullptr;
        }
        out << doc.dump(2) << '\n';
    } else {
        out << "q: " << A.q << '\n';
        out << "n: " << A.n << '\n';
        out << "m: " << cf.code.m << '\n';
        out << "size: " << A.size << '\n';
        out << "constant_dimension: " << (A.constant_dimension ? "true" : "false") << '\n';
        out << "k: " << A.k << '\n';
        out << "d: " << A.d << '\n';
        out << "quasi_cyclic: " << (A.quasi_closed ? "true" : "false") << '\n';
        if (cf.code.claimed) {
            const Claimed& cl = *cf.code.claimed;
            out << "claimed: " << cl.n << ' ' << cl.k << ' ' << cl.size << ' ' << cl.d << '\n';
        }
        if (A.has_bound) out << "sandwich: " << sandwich << '\n';
        out << "mismatches:" << (A.mismatches.empty() ? " none" : "") << '\n';
        for (const std::string& s : A.mismatches) out << "  " << s << '\n';
        out << "warnings:" << (cf.warnings.empty() ? " none" : "") << '\n';
        for (const std::string& s : cf.warnings) out << "  " << s << '\n';
        out << "ok: " << (ok ? "true" : "false") << '\n';
    }
    return ok ? 0 : 1;
}

int run_trinomials(const Globals& g, uint32_t q, uint32_t k_max, std::ostream& out) {
    uint32_t cap_n = g.cap_n ? g.cap_n : 127;
    std::vector<TrinomialRow> rows = search_trinomials(q, k_max, cap_n);
    if (json_mode(g)) {
        json arr = json::array();
        for (const TrinomialRow& r : rows)
            arr.push_back(json{{"k", r.k}, {"s", r.s}, {"N", r.N}});
        json doc{{"q", q}, {"k_max", k_max}, {"N_cap", cap_n}, {"rows", arr}};
        out << doc.dump(2) << '\n';
    } else {
        out << "k s N\n";
        for (const TrinomialRow& r : rows) out << r.k << ' ' << r.s << ' ' << r.N << '\n';
    }
    return 0;
}

int run_audit_lemmas(const Globals& g, uint32_t q, uint32_t n_max, uint64_t trials,
                     std::ostream& out) {
    if (n_max == 0) n_max = q == 2 ? 8 : 4;

    std::vector<std::pair<uint32_t, uint32_t>> layers;
    if (q == 2)
        layers = {{2, 4}, {2, 6}};
    else if (q == 3)
        layers = {{3, 3}, {3, 4}};
    else
        layers = {{q, 2}, {q, 3}};
    ConjugationSweep conj = conjugation_sweep(layers, trials, g.seed, g.cap_table);

    OrbitFormulaAudit orb = orbit_formula_audit(q, n_max, g.cap_table);

    auto [p, e] = [&] {
        uint32_t pp = 2;
        while (q % pp != 0) ++pp;
        uint32_t ee = 0, rest = q;
        while (rest % pp == 0) {
            rest /= pp;
            ++ee;
        }
        return std::pair<uint32_t, uint32_t>{pp, ee};
    }();
    std::vector<ClassCountAudit> classes;
    uint64_t class_gcd_mismatches = 0, class_integral_mismatches = 0, class_non_integral = 0,
             class_cases = 0;
    for (uint32_t n = 2; n <= n_max; ++n) {
        classes.push_back(class_count_audit(FieldSpec::create_auto(p, e, n, g.cap_table)));
        class_gcd_mismatches += classes.back().gcd_mismatches;
        class_integral_mismatches += classes.back().integral_mismatches;
        class_non_integral += classes.back().non_integral;
        class_cases += classes.back().cases.size();
    }

    uint32_t pair_n = std::min<uint32_t>(n_max, q == 2 ? 6 : 4);
    std::vector<uint32_t> pair_dims;
    if (pair_n >= 3)
        pair_dims = {2, 3};
    else if (pair_n == 2)
        pair_dims = {1, 2};
    else
        pair_dims = {1};
    ShiftBoundSweep sweep =
        shift_bound_sweep(FieldSpec::create_auto(p, e, pair_n, g.cap_table), pair_dims);

    bool ok = conj.scale_failures == 0 && conj.frobenius_failures == 0 &&
              orb.gcd_mismatches == 0 && class_gcd_mismatches == 0 &&
              class_integral_mismatches == 0 && sweep.dim_violations == 0 &&
              sweep.dist_violations == 0;

    if (json_mode(g)) {
        json jconj{{"trials", conj.trials},
                   {"scale_failures", conj.scale_failures},
                   {"frobenius_failures", conj.frobenius_failures},
                   {"failures", conj.failures}};
        json jorb_cases = json::array();
        for (const OrbitFormulaCase& c : orb.cases) {
            json jc{{"n", c.n},
                    {"t", c.t},
                    {"m", c.m},
                    {"length", c.length},
                    {"gcd_formula_ok", c.gcd_formula_ok},
                    {"lemma9_consistent", status_name(c.closed_form)}};
            if (c.closed_form == ClosedFormStatus::Holds) jc["lemma9_t"] = c.closed_form_t;
            jorb_cases.push_back(jc);
        }
        json jorb{{"cases", jorb_cases},
                  {"gcd_mismatches", orb.gcd_mismatches},
                  {"closed_form_failures", orb.closed_form_failures}};
        json jclasses = json::array();
        for (const ClassCountAudit& a : classes) {
            json jcc = json::array();
            for (const ClassCountCase& c : a.cases)
                jcc.push_back(json{{"t", c.t},
                                   {"m", c.m},
                                   {"classes", c.classes},
                                   {"class_size", c.class_size},
                                   {"formula_integral", c.formula_integral},
                                   {"formula_matches", c.formula_matches}});
            jclasses.push_back(json{{"n", a.n},
                                    {"cases", jcc},
                                    {"gcd_mismatches", a.gcd_mismatches},
                                    {"integral_mismatches", a.integral_mismatches},
                                    {"non_integral", a.non_integral}});
        }
        json jsweep{{"n", sweep.n},
                    {"dims", sweep.dims},
                    {"pairs", sweep.pairs},
                    {"checks", sweep.checks},
                    {"dim_violations", sweep.dim_violations},
                    {"dist_violations", sweep.dist_violations},
                    {"violations", sweep.violations}};
        json doc{{"q", q},
                 {"n_max", n_max},
                 {"conjugation", jconj},
                 {"orbit_lengths", jorb},
                 {"class_counts", jclasses},
                 {"shift_bounds", jsweep},
                 {"ok", ok}};
        out << doc.dump(2) << '\n';
    } else {
        out << "conjugation: trials=" << conj.trials << " scale_failures=" << conj.scale_failures
            << " frobenius_failures=" << conj.frobenius_failures << '\n';
        for (const std::string& f : conj.failures) out << "  " << f << '\n';
        out << "orbit lengths: cases=" << orb.cases.size()
            << " gcd_mismatches=" << orb.gcd_mismatches
            << " closed_form_failures=" << orb.closed_form_failures << '\n';
        for (const OrbitFormulaCase& c : orb.cases)
            if (c.closed_form == ClosedFormStatus::Fails)
                out << "  closed form fails: n=" << c.n << " t=" << c.t << " m=" << c.m
                    << " length=" << c.length << '\n';
        out << "class counts: cases=" << class_cases
            << " gcd_mismatches=" << class_gcd_mismatches
            << " integral_mismatches=" << class_integral_mismatches
            << " non_integral=" << class_non_integral << '\n';
        out << "shift bounds: n=" << sweep.n << " pairs=" << sweep.pairs
            << " checks=" << sweep.checks << " dim_violations=" << sweep.dim_violations
            << " dist_violations=" << sweep.dist_violations << '\n';
        out << "ok: " << (ok ? "true" : "false") << '\n';
    }
    return ok ? 0 : 1;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"m-quasi cyclic constant-dimension subspace codes: construction and verification"};
    app.fallthrough();
    app.require_subcommand(1);

    Globals g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--cap-table", g.cap_table, "field table size cap in bits")
        ->capture_default_str();
    app.add_option("--cap-orbit", g.cap_orbit, "orbit enumeration cap")->capture_default_str();
    app.add_option("--cap-N", g.cap_n, "splitting degree search cap (0: command default)");
    app.add_option("--seed", g.seed, "seed for randomized sweeps")->capture_default_str();
    CLI::Option* lit = app.add_flag("--literal", g.literal,
                                    "verify: subspace lines are the complete word list");
    bool expand_flag = false;
    app.add_flag("--expand", expand_flag,
                 "verify: expand generator lines to full gamma^m orbits (default)")
        ->excludes(lit);

    CLI::App* fc = app.add_subcommand("field-check", "load and re-verify a field spec file");
    std::string fc_path;
    fc->add_option("file", fc_path, "field spec file")->required();

    CLI::App* bd = app.add_subcommand("bound", "packing bound for constant-dimension codes");
    uint32_t bd_n = 0, bd_k = 0, bd_delta = 0, bd_q = 2;
    bd->add_option("n", bd_n, "ambient dimension")->required();
    bd->add_option("k", bd_k, "codeword dimension")->required();
    bd->add_option("delta", bd_delta, "distance parameter, d = 2 delta + 2")->required();
    bd->add_option("q", bd_q, "base field size")->required();

    CLI::App* sp = app.add_subcommand("subpoly", "subspace polynomial of a subspace");
    std::string sp_field, sp_line;
    sp->add_option("field", sp_field, "field spec file")->required();
    sp->add_option("subspace", sp_line, "subspace line, basis: or elements: form")->required();

    CLI::App* ob = app.add_subcommand("orbit", "enumerate the gamma^m orbit of a subspace");
    std::string ob_field, ob_line;
    uint64_t ob_m = 1;
    ob->add_option("field", ob_field, "field spec file")->required();
    ob->add_option("subspace", ob_line, "subspace line, basis: or elements: form")->required();
    ob->add_option("--m", ob_m, "shift modulus, divides q^n - 1")->capture_default_str();

    CLI::App* ct = app.add_subcommand("construct", "build a code");
    ct->require_subcommand(1);
    CLI::App* c4 = ct->add_subcommand("c4", "one quasi-orbit of a trinomial kernel");
    uint32_t c4_q = 2, c4_n = 0, c4_k = 0, c4_s = 0;
    uint64_t c4_m = 1;
    std::string c4_out;
    c4->add_option("--q", c4_q, "base field size")->capture_default_str();
    c4->add_option("--n", c4_n, "ambient degree")->required();
    c4->add_option("--k", c4_k, "kernel dimension")->required();
    c4->add_option("--s", c4_s, "trinomial inner index")->required();
    c4->add_option("--m", c4_m, "shift modulus")->capture_default_str();
    c4->add_option("-o,--output", c4_out, "write the code file here");

    CLI::App* t4 = ct->add_subcommand(
        "t4", "union of Frobenius-conjugate quasi-orbits over the splitting field");
    uint32_t t4_q = 2, t4_n = 0, t4_k = 0, t4_s = 0;
    uint64_t t4_m = 1, t4_a0 = 0, t4_as = 0;
    std::string t4_out;
    t4->add_option("--q", t4_q, "base field size")->capture_default_str();
    t4->add_option("--n", t4_n, "coefficient layer degree, prime")->required();
    t4->add_option("--k", t4_k, "kernel dimension")->required();
    t4->add_option("--s", t4_s, "inner coefficient index")->required();
    t4->add_option("--m", t4_m, "shift modulus")->capture_default_str();
    CLI::Option* oa0 = t4->add_option("--a0", t4_a0, "gamma exponent of a_0");
    CLI::Option* oas = t4->add_option("--as", t4_as, "gamma exponent of a_s");
    oa0->needs(oas);
    oas->needs(oa0);
    t4->add_option("-o,--output", t4_out, "write the code file here");

    CLI::App* vf = app.add_subcommand("verify", "recompute a code file's parameters");
    std::string vf_path;
    vf->add_option("file", vf_path, "code file")->required();

    CLI::App* tr = app.add_subcommand("trinomials", "irreducible trinomial table");
    uint32_t tr_q = 2, tr_kmax = 7;
    tr->add_option("--q", tr_q, "base field size")->capture_default_str();
    tr->add_option("--k-max", tr_kmax, "largest outer index")->capture_default_str();

    CLI::App* al = app.add_subcommand("audit-lemmas", "run the property sweeps");
    uint32_t al_q = 2, al_nmax = 0;
    uint64_t al_trials = 200;
    al->add_option("--q", al_q, "base field size")->capture_default_str();
    al->add_option("--n-max", al_nmax, "largest ambient degree (0: default for q)");
    al->add_option("--trials", al_trials, "conjugation sweep size")->capture_default_str();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*fc) return run_field_check(g, fc_path, out);
        if (*bd) return run_bound(g, bd_n, bd_k, bd_delta, bd_q, out);
        if (*sp) return run_subpoly(g, sp_field, sp_line, out);
        if (*ob) return run_orbit(g, ob_field, ob_line, ob_m, out);
        if (*c4) return run_construct_c4(g, c4_q, c4_n, c4_k, c4_s, c4_m, c4_out, out);
        if (*t4)
            return run_construct_t4(g, t4_q, t4_n, t4_k, t4_s, t4_m, oa0->count() > 0, t4_a0,
                                    t4_as, t4_out, out);
        if (*vf) return run_verify(g, vf_path, out);
        if (*tr) return run_trinomials(g, tr_q, tr_kmax, out);
        if (*al) return run_audit_lemmas(g, al_q, al_nmax, al_trials, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace qsc::cli
