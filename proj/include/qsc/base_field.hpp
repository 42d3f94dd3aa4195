#ifndef QSC_BASE_FIELD_HPP
#define QSC_BASE_FIELD_HPP

#include <cstdint>
#include <vector>

#include "qsc/errors.hpp"

namespace qsc {

// The coefficient field F_q, q = p^e. Elements are encoded as integers in
// [0, q): for e = 1 the residue itself, for e > 1 the base-p digit packing of
// the coordinate vector relative to the power basis of a fixed primitive
// modulus over F_p (chosen as the lexicographically smallest one).
class BaseField {
public:
    static BaseField make(uint32_t p, uint32_t e);

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint32_t q() const { return q_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;

    // modulus over F_p for e > 1 (ascending, monic, degree e); empty for e = 1
    const std::vector<uint32_t>& modulus() const { return modulus_; }

private:
    BaseField() = default;

    uint32_t p_ = 0, e_ = 0, q_ = 0;
    std::vector<uint32_t> modulus_;
    // log/antilog over F_q*, used for mul and inv when e > 1
    std::vector<uint32_t> log_, antilog_;
};

} // namespace qsc

#endif
