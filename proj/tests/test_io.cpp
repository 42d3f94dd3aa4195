#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qsc/codes.hpp"
#include "qsc/errors.hpp"
#include "qsc/field.hpp"
#include "qsc/io.hpp"
#include "qsc/linpoly.hpp"
#include "qsc/subspace.hpp"

using namespace qsc;

namespace {

Field f16() { return FieldSpec::create_auto(2, 1, 4); }

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path("/tmp/qsc_io_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("field files") {
    TempFile f("good.field",
               "# a degree-4 layer\n"
               "2 1 4   # p e n\n"
               "1 1 0 0 1\n");
    Field F = load_field_file(f.path);
    CHECK(F->p() == 2);
    CHECK(F->e() == 1);
    CHECK(F->n() == 4);
    CHECK(F->size() == 16);

    CHECK(format_field_inline(*F) == "2 1 4 1 1 0 0 1");
    Field G = parse_field_tokens(format_field_inline(*F));
    CHECK(G->modulus() == F->modulus());

    Field paper = load_field_file(std::string(QSC_DATA_DIR) + "/f2_8.field");
    CHECK(paper->n() == 8);
    CHECK(paper->q() == 2);

    CHECK_THROWS_AS(load_field_file("/tmp/qsc_io_no_such.field"), Error);
    CHECK_THROWS_AS(parse_field_tokens("2 1"), Error);
    CHECK_THROWS_AS(parse_field_tokens("2 1 4 1 1 0 1"), Error);
    CHECK_THROWS_AS(parse_field_tokens("2 1 4 1 1 0 0 1 0"), Error);
    CHECK_THROWS_AS(parse_field_tokens("2 x 4 1 1 0 0 1"), Error);
    // an irreducible but imprimitive modulus is refused at construction
    CHECK_THROWS_AS(parse_field_tokens("2 1 4 1 1 1 1 1"), Error);
}

TEST_CASE("subspace lines") {
    Field F = f16();

    SubspaceParse basis = parse_subspace_line(F, "basis: 0 1 # a plane", true);
    CHECK(basis.subspace.dim() == 2);
    CHECK(basis.warnings.empty());

    SubspaceParse elems = parse_subspace_line(F, "elements: 0 1 4", true);
    CHECK(elems.subspace == basis.subspace);
    CHECK(elems.warnings.empty());

    SUBCASE("dependent basis") {
        CHECK_THROWS_AS(parse_subspace_line(F, "basis: 0 1 4", true), Error);
        SubspaceParse lax = parse_subspace_line(F, "basis: 0 1 4", false);
        CHECK(lax.subspace.dim() == 2);
        REQUIRE(lax.warnings.size() == 1);
        CHECK(lax.warnings[0].find("dependent") != std::string::npos);
    }

    SUBCASE("zero in a basis is never tolerated") {
        CHECK_THROWS_AS(parse_subspace_line(F, "basis: z 0", true), Error);
        CHECK_THROWS_AS(parse_subspace_line(F, "basis: z 0", false), Error);
    }

    SUBCASE("zero among elements is a finding") {
        CHECK_THROWS_AS(parse_subspace_line(F, "elements: z 0 1 4", true), Error);
        SubspaceParse lax = parse_subspace_line(F, "elements: z 0 1 4", false);
        CHECK(lax.subspace == basis.subspace);
        REQUIRE(lax.warnings.size() == 1);
        CHECK(lax.warnings[0].find("zero") != std::string::npos);
    }

    SUBCASE("incomplete element lists") {
        CHECK_THROWS_AS(parse_subspace_line(F, "elements: 0 1", true), Error);
        SubspaceParse lax = parse_subspace_line(F, "elements: 0 1", false);
        CHECK(lax.subspace.dim() == 2);
        REQUIRE(lax.warnings.size() == 1);
        CHECK(lax.warnings[0] ==
              "element list does not cover its span: 2 distinct nonzero elements listed, the "
              "span has 3");
    }

    SUBCASE("duplicates") {
        SubspaceParse lax = parse_subspace_line(F, "elements: 0 0 1 4", false);
        REQUIRE(lax.warnings.size() == 1);
        CHECK(lax.warnings[0].find("duplicate") != std::string::npos);
    }

    SUBCASE("malformed lines") {
        CHECK_THROWS_AS(parse_subspace_line(F, "0 1 4", true), Error);
        CHECK_THROWS_AS(parse_subspace_line(F, "rows: 0 1", true), Error);
        CHECK_THROWS_AS(parse_subspace_line(F, "basis: 0 q", true), Error);
    }
}

TEST_CASE("subspace formatting round trips") {
    Field F = f16();
    for (const Subspace& V : all_subspaces(F, 2)) {
        SubspaceParse b = parse_subspace_line(F, format_subspace_basis(V), true);
        CHECK(b.subspace == V);
        CHECK(b.warnings.empty());
        SubspaceParse e = parse_subspace_line(F, format_subspace_elements(V), true);
        CHECK(e.subspace == V);
        CHECK(e.warnings.empty());
    }
}

TEST_CASE("linearized polynomial lines") {
    Field F = FieldSpec::create(2, 1, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1});

    LinearizedPoly L = parse_lin_poly(F, "lin q-coeffs: 74 z 103 0");
    CHECK(L.q_degree() == 3);
    CHECK(L.coeff(0) == F->antilog(74));
    CHECK(L.coeff(1) == 0);
    CHECK(L.coeff(2) == F->antilog(103));
    CHECK(L.coeff(3) == 1);
    CHECK(format_lin_poly(L) == "lin q-coeffs: 74 z 103 0");

    CHECK(format_lin_poly(LinearizedPoly::zero(F)) == "lin q-coeffs: z");
    CHECK(parse_lin_poly(F, "lin q-coeffs: z").is_zero());

    Field F16 = f16();
    for (const Subspace& V : all_subspaces(F16, 2)) {
        LinearizedPoly P = subspace_poly(V);
        CHECK(parse_lin_poly(F16, format_lin_poly(P)) == P);
    }

    CHECK_THROWS_AS(parse_lin_poly(F, "q-coeffs: 1 0"), Error);
    CHECK_THROWS_AS(parse_lin_poly(F, "lin q-coeffs: 1 y"), Error);
}

TEST_CASE("code files") {
    std::string body =
        "# sample\n"
        "field: 2 1 4 1 1 0 0 1\n"
        "m: 3\n"
        "basis: 0 1\n"
        "claimed: 4 2 5 2\n";
    TempFile f("sample.code", body);

    SUBCASE("literal load") {
        CodeFile cf = load_code_file(f.path, false, true);
        CHECK(cf.code.words.size() == 1);
        CHECK(cf.code.m == 3);
        CHECK(cf.generator_lines.size() == 1);
        REQUIRE(cf.code.claimed.has_value());
        CHECK(cf.code.claimed->n == 4);
        CHECK(cf.code.claimed->k == 2);
        CHECK(cf.code.claimed->size == 5);
        CHECK(cf.code.claimed->d == 2);
        CHECK(cf.code.provenance.construction == "file");
    }

    SUBCASE("expanded load") {
        CodeFile cf = load_code_file(f.path, true, true);
        CHECK(cf.code.words.size() == 5);
        CHECK(verify_quasi_cyclic(cf.code, 3));
        CHECK(cf.generator_lines.size() == 1);
    }

    SUBCASE("orbit cap applies during expansion") {
        CHECK_THROWS_AS(load_code_file(f.path, true, true, 28, 3), Error);
    }
}

TEST_CASE("code file field paths resolve next to the code file") {
    TempFile field("layer.field", "2 1 4\n1 1 0 0 1\n");
    TempFile code("ref.code", "field: qsc_io_layer.field\nbasis: 0 1\n");
    CodeFile cf = load_code_file(code.path, true, true);
    CHECK(cf.code.field->n() == 4);
    CHECK(cf.code.m == 1);
    CHECK(cf.code.words.size() == 15);

    TempFile abs("abs.code", "field: " + field.path + "\nbasis: 0\n");
    CHECK(load_code_file(abs.path, false, true).code.words.size() == 1);
}

TEST_CASE("code file validation") {
    TempFile nofield("nofield.code", "m: 1\nbasis: 0 1\n");
    CHECK_THROWS_AS(load_code_file(nofield.path, false, true), Error);

    TempFile early("early.code", "basis: 0 1\nfield: 2 1 4 1 1 0 0 1\n");
    CHECK_THROWS_AS(load_code_file(early.path, false, true), Error);

    TempFile dupfield("dup.code",
                      "field: 2 1 4 1 1 0 0 1\nfield: 2 1 4 1 1 0 0 1\nbasis: 0\n");
    CHECK_THROWS_AS(load_code_file(dupfield.path, false, true), Error);

    TempFile badm("badm.code", "field: 2 1 4 1 1 0 0 1\nm: 2\nbasis: 0\n");
    CHECK_THROWS_AS(load_code_file(badm.path, false, true), Error);

    TempFile unknown("unknown.code", "field: 2 1 4 1 1 0 0 1\nwords: 0 1\n");
    CHECK_THROWS_AS(load_code_file(unknown.path, false, true), Error);

    TempFile badclaim("badclaim.code", "field: 2 1 4 1 1 0 0 1\nclaimed: 4 2 5\n");
    CHECK_THROWS_AS(load_code_file(badclaim.path, false, true), Error);

    CHECK_THROWS_AS(load_code_file("/tmp/qsc_io_missing.code", false, true), Error);

    TempFile lax("lax.code", "field: 2 1 4 1 1 0 0 1\nelements: 0 1\n");
    CHECK_THROWS_AS(load_code_file(lax.path, false, true), Error);
    CodeFile cf = load_code_file(lax.path, false, false);
    CHECK(cf.warnings.size() == 1);
    CHECK(cf.code.words.size() == 1);
}

TEST_CASE("write and reload") {
    Code C = construct_single_orbit(2, 7, 3, 2, 1);
    C.claimed = Claimed{7, 3, 127, 4};

    std::ostringstream os;
    write_code_file(os, C);
    TempFile f("roundtrip.code", os.str());

    CodeFile cf = load_code_file(f.path, true, true);
    REQUIRE(cf.code.words.size() == C.words.size());
    // the reload builds its own field instance, so compare by canonical rows
    for (size_t i = 0; i < C.words.size(); ++i)
        CHECK(cf.code.words[i].rows() == C.words[i].rows());
    CHECK(cf.code.m == C.m);
    REQUIRE(cf.code.claimed.has_value());
    CHECK(cf.code.claimed->size == 127);
    CHECK(cf.generator_lines.size() == 1);
    CHECK(audit_code(cf.code).mismatches.empty());
}

TEST_CASE("the bundled paper code loads clean") {
    CodeFile cf = load_code_file(std::string(QSC_DATA_DIR) + "/cyclic_1275.code", true, true);
    CHECK(cf.code.words.size() == 1275);
    CHECK(cf.generator_lines.size() == 5);
    CHECK(cf.warnings.empty());
    CHECK(cf.code.m == 1);
    REQUIRE(cf.code.claimed.has_value());
    CHECK(cf.code.claimed->size == 1275);
    CHECK(cf.code.claimed->d == 4);
    CHECK(cf.code.field->n() == 8);
}
