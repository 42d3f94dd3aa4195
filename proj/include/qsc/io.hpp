#ifndef QSC_IO_HPP
#define QSC_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qsc/codes.hpp"
#include "qsc/field.hpp"
#include "qsc/linpoly.hpp"
#include "qsc/subspace.hpp"

namespace qsc {

// Field spec file: first three tokens are p, e, n; the next n + 1 tokens the
// modulus coefficients, ascending. Whitespace and '#' comments are free-form.
// The loader re-verifies irreducibility and primitivity.
Field load_field_file(const std::string& path, uint32_t cap_table_bits = 28);
Field parse_field_tokens(const std::string& text, uint32_t cap_table_bits = 28);
std::string format_field_inline(const FieldSpec& F);   // "p e n c0 c1 ... cn"

struct SubspaceParse {
    Subspace subspace;
    std::vector<std::string> warnings;   // lenient-mode findings (strict mode throws instead)
};

// One subspace line: "basis: e1 ... ek" (gamma exponents, z forbidden) or
// "elements: e1 ... e_{q^k-1}" (all nonzero exponents; closure is checked).
// strict turns findings into ParseError.
SubspaceParse parse_subspace_line(const Field& F, const std::string& line, bool strict);

std::string format_subspace_basis(const Subspace& V);
std::string format_subspace_elements(const Subspace& V);

struct CodeFile {
    Code code;
    std::vector<Subspace> generator_lines;   // as listed, before any expansion
    std::vector<std::string> warnings;
};

// Code file: "field:" (path or inline tokens), "m:" (default 1), one subspace
// line per generator, optional "claimed: n k size d". expand replaces the
// listed generators with their full gamma^m orbits; otherwise they are the
// complete word list.
CodeFile load_code_file(const std::string& path, bool expand, bool strict,
                        uint32_t cap_table_bits = 28, uint64_t cap_orbit = kDefaultOrbitCap);

void write_code_file(std::ostream& os, const Code& C);

// "lin q-coeffs: a_0 ... a_K" with each a_j a gamma exponent or z for zero
LinearizedPoly parse_lin_poly(const Field& F, const std::string& line);
std::string format_lin_poly(const LinearizedPoly& L);

} // namespace qsc

#endif
