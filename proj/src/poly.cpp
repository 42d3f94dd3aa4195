#include "qsc/poly.hpp"

#include "qsc/errors.hpp"
#include "qsc/ints.hpp"

namespace qsc {

Poly::Poly(const BaseField* F, std::vector<uint32_t> coeffs) : F_(F), coeffs_(std::move(coeffs)) {
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::trinomial(const BaseField* F, uint32_t k, uint32_t s) {
    if (!(s < k) || s < 1) throw Error(Errc::BadArguments, "trinomial needs 1 <= s < k");
    uint64_t dk = ipow_u64(F->q(), k) - 1;
    uint64_t ds = ipow_u64(F->q(), s) - 1;
    std::vector<uint32_t> c(dk + 1, 0);
    c[0] = 1;
    c[ds] = 1;
    c[dk] = 1;
    return Poly(F, std::move(c));
}

Poly Poly::add(const Poly& o) const {
    std::vector<uint32_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = F_->add(coeff(i), o.coeff(i));
    return Poly(F_, std::move(r));
}

Poly Poly::sub(const Poly& o) const {
    std::vector<uint32_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = F_->sub(coeff(i), o.coeff(i));
    return Poly(F_, std::move(r));
}

Poly Poly::mul(const Poly& o) const {
    if (is_zero() || o.is_zero()) return zero(F_);
    std::vector<uint32_t> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i]) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (!o.coeffs_[j]) continue;
            r[i + j] = F_->add(r[i + j], F_->mul(coeffs_[i], o.coeffs_[j]));
        }
    }
    return Poly(F_, std::move(r));
}

Poly Poly::mod(const Poly& f) const {
    if (f.is_zero()) throw Error(Errc::BadArguments, "mod by zero polynomial");
    std::vector<uint32_t> r = coeffs_;
    size_t df = f.coeffs_.size() - 1;
    uint32_t lead_inv = F_->inv(f.coeffs_.back());
    while (r.size() > df) {
        uint32_t c = r.back();
        if (c) {
            uint32_t fac = F_->mul(c, lead_inv);
            size_t shift = r.size() - 1 - df;
            for (size_t j = 0; j <= df; ++j)
                r[shift + j] = F_->sub(r[shift + j], F_->mul(fac, f.coeffs_[j]));
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.size() <= df) break;
    }
    return Poly(F_, std::move(r));
}

Poly Poly::mulmod(const Poly& o, const Poly& f) const { return mul(o).mod(f); }

Poly Poly::powmod(uint64_t e, const Poly& f) const {
    Poly r = one(F_);
    Poly b = mod(f);
    while (e) {
        if (e & 1) r = r.mulmod(b, f);
        b = b.mulmod(b, f);
        e >>= 1;
    }
    return r;
}

Poly Poly::pow_q_mod(uint32_t j, const Poly& f) const {
    Poly r = mod(f);
    for (uint32_t i = 0; i < j; ++i) r = r.powmod(F_->q(), f);
    return r;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly t = a.mod(b);
        a = b;
        b = t;
    }
    if (!a.is_zero()) {
        // make monic so gcd(...) == 1 is a canonical check
        uint32_t inv = a.F_->inv(a.coeffs_.back());
        std::vector<uint32_t> c = a.coeffs_;
        for (auto& x : c) x = a.F_->mul(x, inv);
        return Poly(a.F_, std::move(c));
    }
    return a;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw Error(Errc::BadArguments, "irreducibility needs degree >= 1");
    const BaseField* F = f.field();
    uint32_t d = static_cast<uint32_t>(f.degree());
    if (d == 1) return true;
    Poly x = Poly::x(F);
    if (!(x.pow_q_mod(d, f) == x.mod(f))) return false;
    for (uint64_t r : prime_factors_u64(d)) {
        Poly g = Poly::gcd(x.pow_q_mod(d / static_cast<uint32_t>(r), f).sub(x), f);
        if (!(g == Poly::one(F))) return false;
    }
    return true;
}

bool has_primitive_root_x(const Poly& f) {
    const BaseField* F = f.field();
    uint32_t d = static_cast<uint32_t>(f.degree());
    uint64_t order = ipow_u64(F->q(), d) - 1;
    Poly x = Poly::x(F);
    for (uint64_t r : prime_factors_u64(order)) {
        if (x.powmod(order / r, f) == Poly::one(F)) return false;
    }
    return x.powmod(order, f) == Poly::one(F);
}

} // namespace qsc
