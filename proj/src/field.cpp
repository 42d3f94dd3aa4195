#include "qsc/field.hpp"

#include <numeric>

#include "qsc/poly.hpp"

namespace qsc {

Field FieldSpec::create(uint32_t p, uint32_t e, uint32_t n, std::vector<uint32_t> modulus,
                        uint32_t cap_table_bits) {
    if (n < 1) throw Error(Errc::BadArguments, "extension degree must be >= 1");
    if (cap_table_bits > 30) throw Error(Errc::BadArguments, "table cap above 2^30 unsupported");
    BaseField base = BaseField::make(p, e);
    const uint32_t q = base.q();

    if (modulus.size() != static_cast<size_t>(n) + 1)
        throw Error(Errc::DegreeMismatch, "modulus must have degree n");
    if (modulus.back() != 1)
        throw Error(Errc::DegreeMismatch, "modulus must be monic");
    for (uint32_t c : modulus)
        if (c >= q) throw Error(Errc::BadArguments, "modulus coefficient out of range");

    uint64_t sz = 1;
    for (uint32_t i = 0; i < n; ++i) {
        sz *= q;
        if (sz > (1ull << cap_table_bits))
            throw Error(Errc::CapExceeded, "field size exceeds table cap 2^" + std::to_string(cap_table_bits));
    }

    std::unique_ptr<FieldSpec> F(new FieldSpec(std::move(base), n));
    F->size_ = sz;
    F->modulus_ = std::move(modulus);
    F->qpow_.resize(n + 1);
    F->qpow_[0] = 1;
    for (uint32_t i = 1; i <= n; ++i) F->qpow_[i] = F->qpow_[i - 1] * q;

    Poly f(&F->base_, F->modulus_);
    if (!is_irreducible(f)) throw Error(Errc::NotIrreducible, "modulus is reducible over F_q");
    if (!has_primitive_root_x(f))
        throw Error(Errc::NotPrimitive, "modulus is irreducible but its root is not primitive");

    const uint64_t g = sz - 1;
    F->antilog_.assign(g, 0);
    F->log_.assign(sz, 0);
    uint32_t cur = 1;
    for (uint64_t i = 0; i < g; ++i) {
        F->antilog_[i] = cur;
        F->log_[cur] = static_cast<uint32_t>(i);
        cur = F->mul_by_x(cur);
    }
    if (cur != 1) throw Error(Errc::NotPrimitive, "table iteration did not close after q^n-1 steps");
    return Field(F.release());
}

Field FieldSpec::create_auto(uint32_t p, uint32_t e, uint32_t n, uint32_t cap_table_bits) {
    BaseField base = BaseField::make(p, e);
    const uint32_t q = base.q();
    uint64_t body_count = 1;
    for (uint32_t i = 0; i < n; ++i) body_count *= q;
    for (uint64_t body = 1; body < body_count; ++body) {
        std::vector<uint32_t> mod(n + 1, 0);
        uint64_t b = body;
        for (uint32_t i = 0; i < n; ++i) {
            mod[i] = static_cast<uint32_t>(b % q);
            b /= q;
        }
        mod[n] = 1;
        if (mod[0] == 0) continue;
        Poly f(&base, mod);
        if (!is_irreducible(f)) continue;
        if (!has_primitive_root_x(f)) continue;
        return create(p, e, n, std::move(mod), cap_table_bits);
    }
    throw Error(Errc::BadArguments, "no primitive modulus of the requested degree");
}

uint32_t FieldSpec::mul_by_x(uint32_t code) const {
    const uint32_t q = base_.q();
    uint64_t shifted = static_cast<uint64_t>(code) * q;
    uint32_t top = static_cast<uint32_t>(shifted / qpow_[n_]);
    uint32_t low = static_cast<uint32_t>(shifted % qpow_[n_]);
    if (top == 0) return low;
    if (p() == 2 && e() == 1) {
        uint32_t mask = 0;
        for (uint32_t i = 0; i < n_; ++i)
            if (modulus_[i]) mask |= 1u << i;
        return low ^ mask;
    }
    uint32_t r = 0;
    for (uint32_t i = 0; i < n_; ++i) {
        uint32_t d = static_cast<uint32_t>((low / qpow_[i]) % q);
        d = base_.sub(d, base_.mul(top, modulus_[i]));
        r += d * static_cast<uint32_t>(qpow_[i]);
    }
    return r;
}

uint32_t FieldSpec::add_slow(uint32_t a, uint32_t b) const {
    const uint32_t q = base_.q();
    uint32_t r = 0;
    for (uint32_t i = 0; i < n_; ++i) {
        uint32_t d = base_.add(static_cast<uint32_t>((a / qpow_[i]) % q),
                               static_cast<uint32_t>((b / qpow_[i]) % q));
        r += d * static_cast<uint32_t>(qpow_[i]);
    }
    return r;
}

uint32_t FieldSpec::neg(uint32_t a) const {
    if (p() == 2) return a;
    const uint32_t q = base_.q();
    uint32_t r = 0;
    for (uint32_t i = 0; i < n_; ++i) {
        uint32_t d = base_.neg(static_cast<uint32_t>((a / qpow_[i]) % q));
        r += d * static_cast<uint32_t>(qpow_[i]);
    }
    return r;
}

uint32_t FieldSpec::inv(uint32_t a) const {
    if (a == 0) throw Error(Errc::ZeroInverse, "inverse of zero");
    uint64_t g = group_order();
    return antilog_[(g - log_[a]) % g];
}

uint32_t FieldSpec::pow(uint32_t a, uint64_t exp) const {
    if (a == 0) return exp == 0 ? 1 : 0;
    uint64_t g = group_order();
    return antilog_[mulmod_u64(log_[a], exp % g, g)];
}

uint32_t FieldSpec::pow_big(uint32_t a, const BigInt& exp) const {
    if (a == 0) return exp == 0 ? 1 : 0;
    uint64_t g = group_order();
    BigInt r = exp % g;
    if (r < 0) r += g;
    return pow(a, r.convert_to<uint64_t>());
}

uint64_t FieldSpec::dlog(uint32_t a) const {
    if (a == 0) throw Error(Errc::ZeroArgument, "discrete log of zero");
    return log_[a];
}

uint32_t FieldSpec::frobenius(uint32_t a, uint32_t j) const {
    if (a == 0) return 0;
    j %= n_;
    if (j == 0) return a;
    uint64_t g = group_order();
    uint64_t qj = 1;
    for (uint32_t i = 0; i < j; ++i) qj = (qj * q()) % g;
    return antilog_[mulmod_u64(log_[a], qj, g)];
}

uint32_t FieldSpec::scalar_mul(uint32_t a, uint32_t c) const {
    if (c == 0 || a == 0) return 0;
    if (c == 1) return a;
    const uint32_t q = base_.q();
    uint32_t r = 0;
    for (uint32_t i = 0; i < n_; ++i) {
        uint32_t d = base_.mul(static_cast<uint32_t>((a / qpow_[i]) % q), c);
        r += d * static_cast<uint32_t>(qpow_[i]);
    }
    return r;
}

std::vector<uint32_t> FieldSpec::subfield(uint32_t t) const {
    if (t == 0 || n_ % t != 0) throw Error(Errc::NotADivisor, "subfield degree must divide n");
    uint64_t sub_order = ipow_u64(q(), t) - 1;
    uint64_t step = group_order() / sub_order;
    std::vector<uint32_t> out;
    out.reserve(sub_order + 1);
    out.push_back(0);
    for (uint64_t i = 0; i < sub_order; ++i) out.push_back(antilog_[i * step]);
    return out;
}

bool FieldSpec::in_subfield(uint32_t a, uint32_t t) const {
    if (t == 0 || n_ % t != 0) throw Error(Errc::NotADivisor, "subfield degree must divide n");
    if (a == 0) return true;
    uint64_t sub_order = ipow_u64(q(), t) - 1;
    return log_[a] % (group_order() / sub_order) == 0;
}

std::pair<uint64_t, uint64_t> FieldSpec::mth_power_subgroup(uint64_t m) const {
    uint64_t g = group_order();
    if (m == 0 || g % m != 0) throw Error(Errc::NotADivisor, "m must divide q^n - 1");
    return {m, g / m};
}

Embedding::Embedding(const Field& small, const Field& big) : small_(small), big_(big) {
    if (small->p() != big->p() || small->e() != big->e())
        throw Error(Errc::FieldMismatch, "embedding needs the same coefficient field");
    uint32_t t = small->n(), N = big->n();
    if (t == 0 || N % t != 0)
        throw Error(Errc::NotADivisor, "small field degree must divide big field degree");
    const std::vector<uint32_t>& f = small->modulus();
    uint64_t sub_order = ipow_u64(small->q(), t) - 1;
    uint64_t step = big->group_order() / sub_order;
    for (uint64_t i = 0; i < sub_order; ++i) {
        uint32_t cand = big->antilog(i * step);
        uint32_t acc = 0;   // Horner over the big field; F_q coefficients map to the same codes
        for (size_t j = f.size(); j-- > 0;) acc = big->add(big->mul(acc, cand), f[j]);
        if (acc == 0) {
            root_ = cand;
            root_dlog_ = i * step;
            return;
        }
    }
    throw Error(Errc::BadArguments, "modulus has no root in the big field");
}

uint32_t Embedding::map(uint32_t code) const {
    if (code == 0) return 0;
    if (code >= small_->size()) throw Error(Errc::BadArguments, "element code out of range");
    return big_->antilog(mulmod_u64(root_dlog_, small_->dlog(code), big_->group_order()));
}

} // namespace qsc
