#ifndef QSC_FIELD_HPP
#define QSC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "qsc/base_field.hpp"
#include "qsc/errors.hpp"
#include "qsc/ints.hpp"

namespace qsc {

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

// F_{q^n} as the quotient of F_q[x] by a verified primitive modulus.
// An element code packs the n coordinates (c_0 .. c_{n-1}) over F_q relative
// to the power basis of gamma as sum c_i * q^i; for q = 2 this is the usual
// bitmask and addition is XOR. Nonzero elements carry a discrete log through
// the field-wide log/antilog tables.
class FieldSpec {
public:
    // verifies irreducibility and primitivity, then populates the tables
    static Field create(uint32_t p, uint32_t e, uint32_t n, std::vector<uint32_t> modulus,
                        uint32_t cap_table_bits = 28);

    // lexicographically smallest primitive modulus of degree n over F_q
    static Field create_auto(uint32_t p, uint32_t e, uint32_t n, uint32_t cap_table_bits = 28);

    uint32_t p() const { return base_.p(); }
    uint32_t e() const { return base_.e(); }
    uint32_t q() const { return base_.q(); }
    uint32_t n() const { return n_; }
    uint64_t size() const { return size_; }          // q^n
    uint64_t group_order() const { return size_ - 1; } // q^n - 1
    const BaseField& base() const { return base_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    uint32_t zero() const { return 0; }
    uint32_t one() const { return 1; }
    uint32_t gamma() const { return antilog_[group_order() == 1 ? 0 : 1]; }

    uint32_t add(uint32_t a, uint32_t b) const {
        if (p() == 2) return a ^ b;
        return add_slow(a, b);
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        uint64_t s = static_cast<uint64_t>(log_[a]) + log_[b];
        uint64_t g = group_order();
        return antilog_[s >= g ? s - g : s];
    }
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t exp) const;
    uint32_t pow_big(uint32_t a, const BigInt& exp) const;

    uint64_t dlog(uint32_t a) const;
    uint32_t antilog(uint64_t exp) const { return antilog_[exp % group_order()]; }

    // x -> x^{q^j}
    uint32_t frobenius(uint32_t a, uint32_t j) const;

    // F_q-scalar action on the coordinate vector
    uint32_t scalar_mul(uint32_t a, uint32_t c) const;

    uint32_t digit(uint32_t code, uint32_t i) const {
        return static_cast<uint32_t>((code / qpow_[i]) % q());
    }
    uint32_t digit_set(uint32_t code, uint32_t i, uint32_t v) const {
        return static_cast<uint32_t>(code - digit(code, i) * qpow_[i] + v * qpow_[i]);
    }
    uint64_t qpow(uint32_t i) const { return qpow_[i]; }

    // {0} plus the order q^t - 1 subgroup; t must divide n
    std::vector<uint32_t> subfield(uint32_t t) const;
    bool in_subfield(uint32_t a, uint32_t t) const;

    // generator exponent and order of the group of m-th powers; m must divide q^n - 1
    std::pair<uint64_t, uint64_t> mth_power_subgroup(uint64_t m) const;

private:
    FieldSpec(BaseField base, uint32_t n) : base_(std::move(base)), n_(n) {}
    uint32_t add_slow(uint32_t a, uint32_t b) const;
    uint32_t mul_by_x(uint32_t code) const;

    BaseField base_;
    uint32_t n_;
    uint64_t size_ = 0;
    std::vector<uint32_t> modulus_;
    std::vector<uint64_t> qpow_;
    std::vector<uint32_t> antilog_; // exponent -> code
    std::vector<uint32_t> log_;    // code -> exponent, log_[0] unused
};

// Field homomorphism F_{q^t} -> F_{q^N} for t | N, determined by sending the
// small field's gamma to the root of its modulus with smallest discrete log
// in the big field.
class Embedding {
public:
    Embedding(const Field& small, const Field& big);

    uint32_t map(uint32_t code) const;

    const Field& small() const { return small_; }
    const Field& big() const { return big_; }
    uint32_t gamma_image() const { return root_; }

private:
    Field small_, big_;
    uint32_t root_ = 0;
    uint64_t root_dlog_ = 0;
};

// An element bound to its field. Arithmetic checks that both operands were
// made by the same FieldSpec instance.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const Field& f, uint32_t code) : f_(f.get()), code_(code) {}
    FieldElement(const FieldSpec* f, uint32_t code) : f_(f), code_(code) {}

    uint32_t code() const { return code_; }
    const FieldSpec* field() const { return f_; }
    bool is_zero() const { return code_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return {f_, same(o)->add(code_, o.code_)}; }
    FieldElement operator-(const FieldElement& o) const { return {f_, same(o)->sub(code_, o.code_)}; }
    FieldElement operator*(const FieldElement& o) const { return {f_, same(o)->mul(code_, o.code_)}; }
    bool operator==(const FieldElement& o) const { return f_ == o.f_ && code_ == o.code_; }

    FieldElement inv() const { return {f_, f_->inv(code_)}; }
    FieldElement pow(uint64_t e) const { return {f_, f_->pow(code_, e)}; }
    FieldElement frobenius(uint32_t j) const { return {f_, f_->frobenius(code_, j)}; }
    uint64_t dlog() const { return f_->dlog(code_); }

private:
    const FieldSpec* same(const FieldElement& o) const {
        if (f_ != o.f_) throw Error(Errc::FieldMismatch, "elements from different fields");
        return f_;
    }

    const FieldSpec* f_ = nullptr;
    uint32_t code_ = 0;
};

} // namespace qsc

#endif
