#ifndef QSC_SUBSPACE_HPP
#define QSC_SUBSPACE_HPP

#include <cstdint>
#include <vector>

#include "qsc/field.hpp"

namespace qsc {

inline constexpr uint64_t kDefaultElementCap = 1ull << 22;

// A k-dimensional F_q-subspace of F_{q^n} held as the reduced row echelon
// basis of its coordinate rows. Columns are digit positions, most significant
// first, so equal subspaces have identical row lists.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(const Field& f) { return Subspace(f, {}); }
    static Subspace span(const Field& f, const std::vector<uint32_t>& generators);

    uint32_t dim() const { return static_cast<uint32_t>(rows_.size()); }
    const Field& field() const { return field_; }
    const std::vector<uint32_t>& rows() const { return rows_; }

    bool operator==(const Subspace& o) const {
        return field_.get() == o.field_.get() && rows_ == o.rows_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const { return rows_ < o.rows_; } // same-field ordering

    bool contains(uint32_t code) const;

    // all q^k elements; the coefficient of the first basis row is the most
    // significant digit of the enumeration counter
    std::vector<uint32_t> elements(uint64_t cap = kDefaultElementCap) const;

    // indicator over exponents of gamma, length q^n - 1
    std::vector<uint8_t> characteristic_vector() const;

    Subspace scalar_shift(uint32_t a) const;

    friend uint32_t intersect_dim(const Subspace& u, const Subspace& v);

private:
    Subspace(const Field& f, std::vector<uint32_t> rows) : field_(f), rows_(std::move(rows)) {}

    Field field_;
    std::vector<uint32_t> rows_;
};

uint32_t intersect_dim(const Subspace& u, const Subspace& v);
uint32_t distance(const Subspace& u, const Subspace& v);

// dim of the span of the given coordinate rows
uint32_t row_rank(const FieldSpec& f, std::vector<uint32_t> rows);

BigInt gaussian(uint32_t n, uint32_t k, uint32_t q);

// every subspace of dimension k, in a fixed enumeration order
std::vector<Subspace> all_subspaces(const Field& f, uint32_t k);

struct SubspaceHash {
    size_t operator()(const Subspace& v) const {
        size_t h = 1469598103934665603ull;
        for (uint32_t r : v.rows()) {
            h ^= r;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace qsc

#endif
