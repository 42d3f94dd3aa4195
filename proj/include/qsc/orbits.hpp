#ifndef QSC_ORBITS_HPP
#define QSC_ORBITS_HPP

#include <cstdint>
#include <vector>

#include "qsc/ints.hpp"
#include "qsc/linpoly.hpp"
#include "qsc/subspace.hpp"

namespace qsc {

inline constexpr uint64_t kDefaultOrbitCap = 1ull << 22;

enum class OrbitKind { Cyclic, Quasi, Frobenius };

// Status of the closed-form length (q^n-1)/(m(q^{t'}-1)) against the
// enumerated orbit: attainable with some divisor t' of n, or not. Enumeration
// is always the source of truth; this only classifies the formula.
enum class ClosedFormStatus { Holds, Fails, NotApplicable };

struct OrbitReport {
    OrbitKind kind = OrbitKind::Cyclic;
    uint64_t m = 1;
    uint64_t length = 0;
    uint32_t t = 0;   // stabilizer subfield degree: {alpha : alpha V = V} = F_{q^t}*
    std::vector<Subspace> representatives;   // increasing shift exponent from the input
    ClosedFormStatus closed_form = ClosedFormStatus::NotApplicable;
    uint32_t closed_form_t = 0;   // witness t' when closed_form == Holds
    bool full_length = false;     // length == (q^n-1)/(m(q-1)) exactly
};

// degree t of the stabilizer subfield of V
uint32_t stabilizer_degree(const Subspace& V);

OrbitReport cyclic_orbit(const Subspace& V, uint64_t cap = kDefaultOrbitCap);

// orbit of V under multiplication by the m-th powers; m must divide q^n - 1
OrbitReport quasi_orbit(const Subspace& V, uint64_t m, uint64_t cap = kDefaultOrbitCap);

Subspace frobenius_shift(const Subspace& V, uint32_t j);

OrbitReport frobenius_orbit(const Subspace& V);

// whether a^m and b^m differ by a factor in F_{q^t}*
bool equivalent_mod_t(const FieldSpec& F, uint32_t a, uint32_t b, uint64_t m, uint32_t t);

// largest guaranteed quasi-orbit length from the interior coefficients of a
// subspace polynomial: ceil((q^n-1) / (m (q^{gcd(s,n)}-1))) maximized over
// indices s with a nonzero coefficient, 1 <= s < q-degree
BigInt orbit_size_lower_bound(const LinearizedPoly& L, uint64_t m);

} // namespace qsc

#endif
