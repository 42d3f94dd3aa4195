#include "qsc/base_field.hpp"

#include <algorithm>

#include "qsc/ints.hpp"

namespace qsc {

const char* to_string(Errc c) {
    switch (c) {
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::NotPrimitive: return "NotPrimitive";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::ZeroInverse: return "ZeroInverse";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::ZeroArgument: return "ZeroArgument";
        case Errc::NotADivisor: return "NotADivisor";
        case Errc::TooLarge: return "TooLarge";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::ZeroScalar: return "ZeroScalar";
        case Errc::BadArguments: return "BadArguments";
        case Errc::TooFewWords: return "TooFewWords";
        case Errc::TrinomialReducible: return "TrinomialReducible";
        case Errc::DivisibilityViolated: return "DivisibilityViolated";
        case Errc::NotPrime: return "NotPrime";
        case Errc::ConditionFailed: return "ConditionFailed";
        case Errc::GcdViolated: return "GcdViolated";
        case Errc::EqualSubspaces: return "EqualSubspaces";
        case Errc::ZeroCoefficient: return "ZeroCoefficient";
        case Errc::NoInteriorCoefficient: return "NoInteriorCoefficient";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

namespace {

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool miller_rabin(uint64_t n, uint64_t a) {
    if (a % n == 0) return true;
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

uint64_t pollard_rho(uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            d = gcd_u64(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // deterministic for all 64-bit inputs with these witnesses
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

std::vector<uint64_t> prime_factors_u64(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t p = 2; p * p <= n && p < 100000; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) factor_rec(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// plain F_p[x] helpers for bootstrapping F_{p^e}, coefficients ascending

using PPoly = std::vector<uint32_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, uint32_t p) {
    PPoly r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
    }
    // f is monic
    size_t df = f.size() - 1;
    for (size_t i = r.size(); i-- > df;) {
        uint32_t c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (size_t j = 0; j < df; ++j)
            r[i - df + j] = (r[i - df + j] + static_cast<uint64_t>(c) * (p - f[j] % p)) % p;
    }
    r.resize(df);
    return r;
}

PPoly ppowmod(PPoly base, uint64_t exp, const PPoly& f, uint32_t p) {
    PPoly r{1};
    r.resize(f.size() - 1, 0);
    while (exp) {
        if (exp & 1) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        exp >>= 1;
    }
    return r;
}

PPoly pmod(PPoly a, PPoly b, uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (a.size() >= b.size() && !a.empty()) {
        uint64_t lead = a.back();
        uint64_t binv = powmod_u64(b.back(), p - 2, p);
        uint64_t c = mulmod_u64(lead, binv, p);
        size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j)
            a[shift + j] = (a[shift + j] + p - mulmod_u64(c, b[j], p) % p) % p;
        ptrim(a);
    }
    return a;
}

PPoly pgcd(PPoly a, PPoly b, uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PPoly t = pmod(a, b, p);
        a = b;
        b = t;
    }
    return a;
}

bool p_irreducible(const PPoly& f, uint32_t p) {
    uint32_t d = static_cast<uint32_t>(f.size()) - 1;
    if (d == 1) return true;
    PPoly x{0, 1};
    PPoly xpd = x;
    for (uint32_t i = 0; i < d; ++i) xpd = ppowmod(xpd, p, f, p);
    PPoly cmp = xpd;
    ptrim(cmp);
    PPoly xv = x;
    ptrim(xv);
    if (cmp != xv) return false;
    for (uint64_t r : prime_factors_u64(d)) {
        PPoly xq = x;
        for (uint32_t i = 0; i < d / r; ++i) xq = ppowmod(xq, p, f, p);
        // gcd(x^{p^{d/r}} - x, f) must be 1
        PPoly diff = xq;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        PPoly g = pgcd(diff, f, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

bool p_primitive_root_x(const PPoly& f, uint32_t p, uint64_t q) {
    // order of x in (F_p[x]/f)* must be q-1
    PPoly x{0, 1};
    for (uint64_t r : prime_factors_u64(q - 1)) {
        PPoly y = ppowmod(x, (q - 1) / r, f, p);
        ptrim(y);
        if (y == PPoly{1}) return false;
    }
    PPoly y = ppowmod(x, q - 1, f, p);
    ptrim(y);
    return y == PPoly{1};
}

} // namespace

BaseField BaseField::make(uint32_t p, uint32_t e) {
    if (!is_prime_u64(p)) throw Error(Errc::BadArguments, "characteristic must be prime");
    if (e < 1) throw Error(Errc::BadArguments, "extension exponent must be >= 1");
    uint64_t q64 = 1;
    for (uint32_t i = 0; i < e; ++i) {
        q64 *= p;
        if (q64 > (1u << 16)) throw Error(Errc::TooLarge, "base field larger than 2^16");
    }
    BaseField F;
    F.p_ = p;
    F.e_ = e;
    F.q_ = static_cast<uint32_t>(q64);
    if (e == 1) return F;

    // lexicographically smallest monic primitive polynomial of degree e over F_p
    uint64_t total = q64; // p^e combinations of the lower coefficients
    bool found = false;
    for (uint64_t body = 1; body < total && !found; ++body) {
        PPoly f(e + 1, 0);
        uint64_t b = body;
        for (uint32_t i = 0; i < e; ++i) {
            f[i] = static_cast<uint32_t>(b % p);
            b /= p;
        }
        f[e] = 1;
        if (f[0] == 0) continue;
        if (!p_irreducible(f, p)) continue;
        if (!p_primitive_root_x(f, p, q64)) continue;
        F.modulus_ = f;
        found = true;
    }
    if (!found) throw Error(Errc::BadArguments, "no primitive modulus found for base field");

    // antilog by iterating x, codes are base-p digit packings
    F.antilog_.assign(F.q_ - 1, 0);
    F.log_.assign(F.q_, 0);
    PPoly cur{1};
    cur.resize(e, 0);
    PPoly x{0, 1};
    for (uint32_t i = 0; i < F.q_ - 1; ++i) {
        uint32_t code = 0;
        for (uint32_t d = e; d-- > 0;) code = code * p + (d < cur.size() ? cur[d] : 0);
        F.antilog_[i] = code;
        F.log_[code] = i;
        cur = pmulmod(cur, x, F.modulus_, p);
    }
    return F;
}

uint32_t BaseField::add(uint32_t a, uint32_t b) const {
    if (e_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    uint32_t r = 0, mul = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return r;
}

uint32_t BaseField::neg(uint32_t a) const {
    if (e_ == 1) return (p_ - a) % p_;
    if (p_ == 2) return a;
    uint32_t r = 0, mul = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        r += ((p_ - a % p_) % p_) * mul;
        a /= p_;
        mul *= p_;
    }
    return r;
}

uint32_t BaseField::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t BaseField::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    return antilog_[(static_cast<uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

uint32_t BaseField::inv(uint32_t a) const {
    if (a == 0) throw Error(Errc::ZeroInverse, "inverse of zero in base field");
    if (e_ == 1) return static_cast<uint32_t>(powmod_u64(a, p_ - 2, p_));
    return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

} // namespace qsc
