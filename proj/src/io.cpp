#include "qsc/io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "qsc/errors.hpp"
#include "qsc/orbits.hpp"

namespace qsc {

namespace {

std::string strip_comment(const std::string& line) {
    size_t h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

std::vector<std::string> tokens_of(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

uint64_t parse_u64(const std::string& t, const char* what) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw Error(Errc::ParseError, std::string("expected a nonnegative integer for ") + what +
                                          ", got '" + t + "'");
    try {
        return std::stoull(t);
    } catch (const std::exception&) {
        throw Error(Errc::ParseError, std::string("integer out of range for ") + what);
    }
}

std::string dirname_of(const std::string& path) {
    size_t slash = path.find_last_of('/');
    return slash == std::string::npos ? std::string() : path.substr(0, slash + 1);
}

} // namespace

Field parse_field_tokens(const std::string& text, uint32_t cap_table_bits) {
    std::istringstream in(text);
    std::string line, all;
    while (std::getline(in, line)) all += strip_comment(line) + ' ';
    std::vector<std::string> tok = tokens_of(all);
    if (tok.size() < 3) throw Error(Errc::ParseError, "field spec needs p, e, n and a modulus");
    uint32_t p = static_cast<uint32_t>(parse_u64(tok[0], "p"));
    uint32_t e = static_cast<uint32_t>(parse_u64(tok[1], "e"));
    uint32_t n = static_cast<uint32_t>(parse_u64(tok[2], "n"));
    if (tok.size() != 3 + static_cast<size_t>(n) + 1)
        throw Error(Errc::ParseError, "field spec modulus must have exactly n + 1 coefficients");
    std::vector<uint32_t> mod;
    for (size_t i = 3; i < tok.size(); ++i)
        mod.push_back(static_cast<uint32_t>(parse_u64(tok[i], "modulus coefficient")));
    return FieldSpec::create(p, e, n, std::move(mod), cap_table_bits);
}

Field load_field_file(const std::string& path, uint32_t cap_table_bits) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open field file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_field_tokens(buf.str(), cap_table_bits);
}

std::string format_field_inline(const FieldSpec& F) {
    std::string out = std::to_string(F.p()) + ' ' + std::to_string(F.e()) + ' ' +
                      std::to_string(F.n());
    for (uint32_t c : F.modulus()) out += ' ' + std::to_string(c);
    return out;
}

SubspaceParse parse_subspace_line(const Field& F, const std::string& line, bool strict) {
    std::string body = strip_comment(line);
    size_t colon = body.find(':');
    if (colon == std::string::npos)
        throw Error(Errc::ParseError, "subspace line needs a 'basis:' or 'elements:' prefix");
    std::string head = body.substr(0, colon);
    head.erase(std::remove_if(head.begin(), head.end(), [](char c) { return c == ' ' || c == '\t'; }),
               head.end());
    std::vector<std::string> tok = tokens_of(body.substr(colon + 1));

    SubspaceParse out;
    auto finding = [&](const std::string& msg) {
        if (strict) throw Error(Errc::ParseError, msg);
        out.warnings.push_back(msg);
    };

    std::vector<uint32_t> codes;
    for (const std::string& t : tok) {
        if (t == "z") {
            if (head == "basis") throw Error(Errc::ParseError, "z cannot appear in a basis");
            finding("zero listed among the nonzero elements; ignored");
            continue;
        }
        uint64_t exp = parse_u64(t, "gamma exponent");
        codes.push_back(F->antilog(exp));
    }

    Subspace V = Subspace::span(F, codes);
    out.subspace = V;
    if (head == "basis") {
        if (V.dim() != codes.size()) finding("listed basis vectors are linearly dependent");
        return out;
    }
    if (head != "elements")
        throw Error(Errc::ParseError, "unknown subspace prefix '" + head + ":'");

    std::unordered_set<uint32_t> listed(codes.begin(), codes.end());
    if (listed.size() != codes.size()) finding("duplicate elements listed");
    uint64_t expect = 1;
    for (uint32_t i = 0; i < V.dim(); ++i) expect *= F->q();
    if (listed.size() != expect - 1)
        finding("element list does not cover its span: " + std::to_string(listed.size()) +
                " distinct nonzero elements listed, the span has " + std::to_string(expect - 1));
    return out;
}

std::string format_subspace_basis(const Subspace& V) {
    std::string out = "basis:";
    for (uint32_t r : V.rows()) out += ' ' + std::to_string(V.field()->dlog(r));
    return out;
}

std::string format_subspace_elements(const Subspace& V) {
    std::vector<uint64_t> exps;
    for (uint32_t e : V.elements())
        if (e) exps.push_back(V.field()->dlog(e));
    std::sort(exps.begin(), exps.end());
    std::string out = "elements:";
    for (uint64_t e : exps) out += ' ' + std::to_string(e);
    return out;
}

CodeFile load_code_file(const std::string& path, bool expand, bool strict,
                        uint32_t cap_table_bits, uint64_t cap_orbit) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open code file '" + path + "'");

    CodeFile out;
    out.code.provenance.construction = "file";
    out.code.provenance.inputs = {{"path", path}};
    bool have_m = false;

    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = strip_comment(raw);
        std::vector<std::string> tok = tokens_of(line);
        if (tok.empty()) continue;

        if (tok[0] == "field:") {
            if (out.code.field) throw Error(Errc::ParseError, "duplicate field: line");
            std::string rest = line.substr(line.find("field:") + 6);
            std::vector<std::string> rtok = tokens_of(rest);
            bool inline_spec = !rtok.empty() && rtok[0].find_first_not_of("0123456789") ==
                                                    std::string::npos;
            if (inline_spec) {
                out.code.field = parse_field_tokens(rest, cap_table_bits);
            } else if (rtok.size() == 1) {
                std::ifstream probe(rtok[0]);
                std::string resolved = rtok[0];
                if (!probe) resolved = dirname_of(path) + rtok[0];
                out.code.field = load_field_file(resolved, cap_table_bits);
            } else {
                throw Error(Errc::ParseError, "field: wants a file path or inline p e n c0..cn");
            }
            continue;
        }
        if (tok[0] == "m:") {
            if (tok.size() != 2) throw Error(Errc::ParseError, "m: wants one integer");
            out.code.m = parse_u64(tok[1], "m");
            have_m = true;
            continue;
        }
        if (tok[0] == "claimed:") {
            if (tok.size() != 5) throw Error(Errc::ParseError, "claimed: wants n k size d");
            Claimed cl;
            cl.n = static_cast<uint32_t>(parse_u64(tok[1], "claimed n"));
            cl.k = static_cast<uint32_t>(parse_u64(tok[2], "claimed k"));
            cl.size = parse_u64(tok[3], "claimed size");
            cl.d = static_cast<uint32_t>(parse_u64(tok[4], "claimed d"));
            out.code.claimed = cl;
            continue;
        }
        if (tok[0] == "basis:" || tok[0] == "elements:") {
            if (!out.code.field)
                throw Error(Errc::ParseError, "field: must come before any subspace line");
            SubspaceParse sp = parse_subspace_line(out.code.field, line, strict);
            for (std::string& w : sp.warnings) out.warnings.push_back(std::move(w));
            out.generator_lines.push_back(std::move(sp.subspace));
            continue;
        }
        throw Error(Errc::ParseError, "unrecognized line '" + tok[0] + "'");
    }

    if (!out.code.field) throw Error(Errc::ParseError, "code file has no field: line");
    if (!have_m) out.code.m = 1;
    uint64_t G = out.code.field->group_order();
    if (out.code.m == 0 || G % out.code.m != 0)
        throw Error(Errc::ParseError, "m must divide q^n - 1");

    out.code.provenance.generators = out.generator_lines;
    if (expand) {
        for (const Subspace& g : out.generator_lines) {
            OrbitReport rep = quasi_orbit(g, out.code.m, cap_orbit);
            for (const Subspace& w : rep.representatives) out.code.words.push_back(w);
        }
    } else {
        out.code.words = out.generator_lines;
    }
    out.code.normalize();
    return out;
}

void write_code_file(std::ostream& os, const Code& C) {
    if (!C.provenance.construction.empty()) os << "# " << C.provenance.construction;
    for (const auto& kv : C.provenance.inputs) os << ' ' << kv.first << '=' << kv.second;
    os << '\n';
    for (const std::string& note : C.provenance.notes) os << "# " << note << '\n';
    os << "field: " << format_field_inline(*C.field) << '\n';
    os << "m: " << C.m << '\n';
    const std::vector<Subspace>& gens =
        C.provenance.generators.empty() ? C.words : C.provenance.generators;
    for (const Subspace& g : gens) os << format_subspace_basis(g) << '\n';
    if (C.claimed)
        os << "claimed: " << C.claimed->n << ' ' << C.claimed->k << ' ' << C.claimed->size << ' '
           << C.claimed->d << '\n';
}

LinearizedPoly parse_lin_poly(const Field& F, const std::string& line) {
    std::string body = strip_comment(line);
    size_t colon = body.find(':');
    std::string head = colon == std::string::npos ? "" : body.substr(0, colon);
    std::vector<std::string> htok = tokens_of(head);
    if (htok.size() != 2 || htok[0] != "lin" || htok[1] != "q-coeffs")
        throw Error(Errc::ParseError, "polynomial line needs a 'lin q-coeffs:' prefix");
    std::vector<uint32_t> coeffs;
    for (const std::string& t : tokens_of(body.substr(colon + 1))) {
        if (t == "z") {
            coeffs.push_back(0);
            continue;
        }
        coeffs.push_back(F->antilog(parse_u64(t, "gamma exponent")));
    }
    return LinearizedPoly(F, std::move(coeffs));
}

std::string format_lin_poly(const LinearizedPoly& L) {
    std::string out = "lin q-coeffs:";
    if (L.is_zero()) return out + " z";
    for (uint32_t c : L.coeffs())
        out += c == 0 ? std::string(" z") : ' ' + std::to_string(L.field()->dlog(c));
    return out;
}

} // namespace qsc
