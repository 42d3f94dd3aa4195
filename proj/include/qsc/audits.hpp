#ifndef QSC_AUDITS_HPP
#define QSC_AUDITS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qsc/field.hpp"
#include "qsc/orbits.hpp"

namespace qsc {

// Deterministic stream for the randomized sweeps. mt19937_64 is pinned by the
// standard, and sampling uses plain reduction, so one seed gives one case
// stream everywhere.
class SweepRng {
public:
    explicit SweepRng(uint64_t seed) : gen_(seed) {}
    uint64_t below(uint64_t bound) { return gen_() % bound; }

private:
    std::mt19937_64 gen_;
};

struct ConjugationSweep {
    uint64_t trials = 0;
    uint64_t scale_failures = 0;
    uint64_t frobenius_failures = 0;
    std::vector<std::string> failures;   // first few case descriptions
};

// Random (V, alpha, m, s) tuples cycled across the given (q, n) layers. Each
// tuple checks both coefficient-transport identities: the conjugated subspace
// polynomial must equal the polynomial recomputed from the shifted subspace.
ConjugationSweep conjugation_sweep(const std::vector<std::pair<uint32_t, uint32_t>>& layers,
                                   uint64_t trials, uint64_t seed, uint32_t cap_table_bits = 28);

struct ClassCountCase {
    uint32_t t = 0;
    uint64_t m = 1;
    uint64_t classes = 0;      // enumerated over the m-th power subgroup
    uint64_t class_size = 0;   // common size (classes in a cyclic group are cosets)
    bool formula_integral = false;   // (q^n-1) / (m (q^t-1)) is an integer
    bool formula_matches = false;    // integral and equal to the enumerated count
};

struct ClassCountAudit {
    uint32_t q = 0, n = 0;
    std::vector<ClassCountCase> cases;
    uint64_t gcd_mismatches = 0;        // enumeration vs the subgroup-index count
    uint64_t integral_mismatches = 0;   // integral claimed count that enumeration refutes
    uint64_t non_integral = 0;          // parameter sets where the claimed count is no integer
};

// Partitions the m-th power subgroup by "same F_{q^t}* coset" for every
// t | n and m | q^n - 1, checking the enumerated class count against both the
// subgroup-index value and the claimed (q^n-1)/(m (q^t-1)).
ClassCountAudit class_count_audit(const Field& F);

struct OrbitFormulaCase {
    uint32_t n = 0, t = 0;   // V is the copy of F_{q^t} inside F_{q^n}
    uint64_t m = 1;
    uint64_t length = 0;
    bool gcd_formula_ok = false;   // length == ((q^n-1)/m) / gcd((q^n-1)/m, q^t-1)
    ClosedFormStatus closed_form = ClosedFormStatus::NotApplicable;
    uint32_t closed_form_t = 0;
};

struct OrbitFormulaAudit {
    uint32_t q = 0;
    std::vector<OrbitFormulaCase> cases;
    uint64_t gcd_mismatches = 0;
    uint64_t closed_form_failures = 0;
};

// Quasi-orbit lengths of every subfield copy, every shift modulus, every
// degree up to n_max. The gcd formula must match enumeration in every case;
// the closed form (q^n-1)/(m (q^{t'}-1)) with t' | n is classified per case
// and its failures are collected, not flagged.
OrbitFormulaAudit orbit_formula_audit(uint32_t q, uint32_t n_max, uint32_t cap_table_bits = 28);

struct ShiftBoundSweep {
    uint32_t q = 0, n = 0;
    std::vector<uint32_t> dims;
    uint64_t pairs = 0;
    uint64_t checks = 0;   // one per (pair, shift exponent)
    uint64_t dim_violations = 0;
    uint64_t dist_violations = 0;
    std::vector<std::string> violations;   // first few case descriptions
};

// Every distinct pair from the listed dimensions' Grassmannians under every
// scalar shift gamma^r: the intersection dimension against max(s, t+l-k) and,
// for equal dimensions, the distance against 2 min(k-t, k-s), where t and s
// are the top interior indices of the two subspace polynomials. Works through
// characteristic vectors, so the ambient group order is capped at 128.
ShiftBoundSweep shift_bound_sweep(const Field& F, const std::vector<uint32_t>& dims);

} // namespace qsc

#endif
