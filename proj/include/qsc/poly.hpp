#ifndef QSC_POLY_HPP
#define QSC_POLY_HPP

#include <cstdint>
#include <vector>

#include "qsc/base_field.hpp"

namespace qsc {

// Polynomial over F_q, coefficients ascending. The zero polynomial is the
// empty coefficient list. Dense representation; degrees stay small except for
// the trinomial tests, where q = 2 keeps the schoolbook products cheap.
class Poly {
public:
    Poly() = default;
    Poly(const BaseField* F, std::vector<uint32_t> coeffs);

    static Poly zero(const BaseField* F) { return Poly(F, {}); }
    static Poly one(const BaseField* F) { return Poly(F, {1}); }
    static Poly x(const BaseField* F) { return Poly(F, {0, 1}); }

    // x^{q^k-1} + x^{q^s-1} + 1
    static Poly trinomial(const BaseField* F, uint32_t k, uint32_t s);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    uint32_t coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<uint32_t>& coeffs() const { return coeffs_; }
    const BaseField* field() const { return F_; }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    Poly add(const Poly& o) const;
    Poly sub(const Poly& o) const;
    Poly mul(const Poly& o) const;
    Poly mod(const Poly& f) const;
    Poly mulmod(const Poly& o, const Poly& f) const;

    // this(x)^(q^j) mod f via repeated q-th powers
    Poly pow_q_mod(uint32_t j, const Poly& f) const;
    Poly powmod(uint64_t e, const Poly& f) const;

    static Poly gcd(Poly a, Poly b);

private:
    void trim();

    const BaseField* F_ = nullptr;
    std::vector<uint32_t> coeffs_;
};

// x^{q^d} = x mod f and gcd(x^{q^{d/r}} - x, f) = 1 for every prime r | d
bool is_irreducible(const Poly& f);

// the residue class of x generates (F_q[x]/f)* ; f must be irreducible
bool has_primitive_root_x(const Poly& f);

} // namespace qsc

#endif
