#include "qsc/subspace.hpp"

#include <algorithm>
#include <limits>

#include "qsc/errors.hpp"

namespace qsc {

namespace {

// position of the most significant nonzero digit, -1 for the zero element
int msd(const FieldSpec& F, uint32_t code) {
    if (code == 0) return -1;
    if (F.q() == 2) {
        int b = 31;
        while (!(code >> b & 1u)) --b;
        return b;
    }
    for (int i = static_cast<int>(F.n()) - 1; i >= 0; --i)
        if (F.digit(code, static_cast<uint32_t>(i)) != 0) return i;
    return -1;
}

// subtract d * row from v, used to clear v's digit at row's pivot
uint32_t eliminate(const FieldSpec& F, uint32_t v, uint32_t row, uint32_t d) {
    if (F.q() == 2) return v ^ row;
    return F.sub(v, F.scalar_mul(row, d));
}

std::vector<uint32_t> rref(const FieldSpec& F, const std::vector<uint32_t>& gens) {
    std::vector<uint32_t> basis;   // rows with strictly decreasing pivots
    std::vector<int> pivots;
    for (uint32_t g : gens) {
        uint32_t v = g;
        for (size_t i = 0; i < basis.size() && v; ++i) {
            uint32_t d = F.digit(v, static_cast<uint32_t>(pivots[i]));
            if (d) v = eliminate(F, v, basis[i], d);
        }
        if (!v) continue;
        int p = msd(F, v);
        uint32_t lead = F.digit(v, static_cast<uint32_t>(p));
        if (lead != 1) v = F.scalar_mul(v, F.base().inv(lead));
        for (size_t i = 0; i < basis.size(); ++i) {
            uint32_t d = F.digit(basis[i], static_cast<uint32_t>(p));
            if (d) basis[i] = eliminate(F, basis[i], v, d);
        }
        size_t at = 0;
        while (at < basis.size() && pivots[at] > p) ++at;
        basis.insert(basis.begin() + static_cast<ptrdiff_t>(at), v);
        pivots.insert(pivots.begin() + static_cast<ptrdiff_t>(at), p);
    }
    return basis;
}

} // namespace

Subspace Subspace::span(const Field& f, const std::vector<uint32_t>& generators) {
    for (uint32_t g : generators)
        if (g >= f->size()) throw Error(Errc::BadArguments, "generator code out of range");
    return Subspace(f, rref(*f, generators));
}

bool Subspace::contains(uint32_t code) const {
    const FieldSpec& F = *field_;
    uint32_t v = code;
    for (uint32_t row : rows_) {
        if (!v) return true;
        uint32_t p = static_cast<uint32_t>(msd(F, row));
        uint32_t d = F.digit(v, p);
        if (d) v = eliminate(F, v, row, d);
    }
    return v == 0;
}

std::vector<uint32_t> Subspace::elements(uint64_t cap) const {
    const FieldSpec& F = *field_;
    uint32_t q = F.q();
    uint32_t k = dim();
    uint64_t total = 1;
    for (uint32_t i = 0; i < k; ++i) {
        if (total > cap / q) throw Error(Errc::TooLarge, "subspace has too many elements to list");
        total *= q;
    }
    if (total > cap) throw Error(Errc::TooLarge, "subspace has too many elements to list");
    std::vector<uint32_t> out;
    out.reserve(static_cast<size_t>(total));
    for (uint64_t i = 0; i < total; ++i) {
        uint32_t e = 0;
        uint64_t t = i;
        for (uint32_t j = k; j-- > 0;) {   // row 0's coefficient is the most significant digit of i
            uint32_t c = static_cast<uint32_t>(t % q);
            t /= q;
            if (c) e = F.add(e, c == 1 ? rows_[j] : F.scalar_mul(rows_[j], c));
        }
        out.push_back(e);
    }
    return out;
}

std::vector<uint8_t> Subspace::characteristic_vector() const {
    const FieldSpec& F = *field_;
    std::vector<uint8_t> chi(F.group_order(), 0);
    for (uint32_t e : elements(std::numeric_limits<uint64_t>::max()))
        if (e) chi[F.dlog(e)] = 1;
    return chi;
}

Subspace Subspace::scalar_shift(uint32_t a) const {
    if (a == 0) throw Error(Errc::ZeroScalar, "cannot shift a subspace by zero");
    const FieldSpec& F = *field_;
    std::vector<uint32_t> shifted;
    shifted.reserve(rows_.size());
    for (uint32_t r : rows_) shifted.push_back(F.mul(r, a));
    return Subspace(field_, rref(F, shifted));
}

namespace {

// insertion elimination over the bitmask rows, q = 2 only; by_msb carries
// across calls so stacked rank queries can reuse one table
inline uint32_t xor_rank(uint32_t by_msb[32], const std::vector<uint32_t>& rows) {
    uint32_t cnt = 0;
    for (uint32_t v : rows) {
        while (v) {
            uint32_t b = 31u - static_cast<uint32_t>(__builtin_clz(v));
            if (by_msb[b]) {
                v ^= by_msb[b];
            } else {
                by_msb[b] = v;
                ++cnt;
                break;
            }
        }
    }
    return cnt;
}

} // namespace

uint32_t row_rank(const FieldSpec& F, std::vector<uint32_t> rows) {
    if (F.q() == 2) {
        uint32_t by_msb[32] = {0};
        return xor_rank(by_msb, rows);
    }
    std::vector<uint32_t> basis;
    std::vector<int> pivots;
    for (uint32_t v : rows) {
        for (size_t i = 0; i < basis.size() && v; ++i) {
            uint32_t d = F.digit(v, static_cast<uint32_t>(pivots[i]));
            if (d) v = eliminate(F, v, basis[i], d);
        }
        if (!v) continue;
        int p = msd(F, v);
        uint32_t lead = F.digit(v, static_cast<uint32_t>(p));
        if (lead != 1) v = F.scalar_mul(v, F.base().inv(lead));
        basis.push_back(v);
        pivots.push_back(p);
    }
    return static_cast<uint32_t>(basis.size());
}

uint32_t intersect_dim(const Subspace& u, const Subspace& v) {
    if (u.field_.get() != v.field_.get())
        throw Error(Errc::FieldMismatch, "subspaces live in different fields");
    uint32_t r;
    if (u.field_->q() == 2) {
        uint32_t by_msb[32] = {0};
        r = xor_rank(by_msb, u.rows_) + xor_rank(by_msb, v.rows_);
    } else {
        std::vector<uint32_t> stacked = u.rows_;
        stacked.insert(stacked.end(), v.rows_.begin(), v.rows_.end());
        r = row_rank(*u.field_, std::move(stacked));
    }
    return u.dim() + v.dim() - r;
}

uint32_t distance(const Subspace& u, const Subspace& v) {
    return u.dim() + v.dim() - 2 * intersect_dim(u, v);
}

BigInt gaussian(uint32_t n, uint32_t k, uint32_t q) {
    if (q < 2) throw Error(Errc::BadArguments, "gaussian binomial needs q >= 2");
    if (k > n) throw Error(Errc::BadArguments, "gaussian binomial needs k <= n");
    BigInt num = 1, den = 1, Q = q;
    BigInt qn = 1, qk = 1;
    for (uint32_t i = 0; i < n; ++i) qn *= Q;
    for (uint32_t i = 0; i < k; ++i) qk *= Q;
    for (uint32_t i = 0; i < k; ++i) {
        num *= qn - 1;
        den *= qk - 1;
        qn /= Q;
        qk /= Q;
    }
    return num / den;
}

std::vector<Subspace> all_subspaces(const Field& f, uint32_t k) {
    const FieldSpec& F = *f;
    uint32_t n = F.n(), q = F.q();
    if (k > n) throw Error(Errc::BadArguments, "dimension exceeds the ambient space");
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(Subspace::zero(f));
        return out;
    }
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<uint32_t>(__builtin_popcount(mask)) != k) continue;
        std::vector<uint32_t> piv;   // descending, row i takes the i-th largest pivot
        for (int c = static_cast<int>(n) - 1; c >= 0; --c)
            if (mask >> c & 1) piv.push_back(static_cast<uint32_t>(c));
        std::vector<std::pair<uint32_t, uint32_t>> cells;   // (row, column) free slots
        for (uint32_t r = 0; r < k; ++r)
            for (int c = static_cast<int>(piv[r]) - 1; c >= 0; --c)
                if (!(mask >> c & 1)) cells.emplace_back(r, static_cast<uint32_t>(c));
        std::vector<uint32_t> vals(cells.size(), 0);
        while (true) {
            std::vector<uint32_t> rows(k);
            for (uint32_t r = 0; r < k; ++r) rows[r] = F.digit_set(0, piv[r], 1);
            for (size_t i = 0; i < cells.size(); ++i)
                if (vals[i]) rows[cells[i].first] = F.digit_set(rows[cells[i].first], cells[i].second, vals[i]);
            out.push_back(Subspace::span(f, rows));
            size_t i = cells.size();
            while (i > 0 && vals[i - 1] == q - 1) vals[--i] = 0;
            if (i == 0) break;
            ++vals[i - 1];
        }
    }
    return out;
}

} // namespace qsc
