#ifndef QSC_LINPOLY_HPP
#define QSC_LINPOLY_HPP

#include <cstdint>
#include <vector>

#include "qsc/field.hpp"
#include "qsc/poly.hpp"
#include "qsc/subspace.hpp"

namespace qsc {

inline constexpr uint32_t kDefaultSplitCap = 64;

// Linearized polynomial sum_j a_j x^{q^j} over one field; a_[j] multiplies
// x^{q^j} and the list carries no trailing zeros, so the zero polynomial is
// the empty list. Evaluation is F_q-linear.
class LinearizedPoly {
public:
    LinearizedPoly() = default;
    LinearizedPoly(const Field& f, std::vector<uint32_t> qcoeffs);

    static LinearizedPoly zero(const Field& f) { return LinearizedPoly(f, {}); }
    static LinearizedPoly identity(const Field& f) { return LinearizedPoly(f, {1}); }

    bool is_zero() const { return a_.empty(); }
    int q_degree() const { return static_cast<int>(a_.size()) - 1; }
    uint32_t coeff(size_t j) const { return j < a_.size() ? a_[j] : 0; }
    const std::vector<uint32_t>& coeffs() const { return a_; }
    const Field& field() const { return field_; }
    bool is_monic() const { return !a_.empty() && a_.back() == 1; }

    bool operator==(const LinearizedPoly& o) const {
        return field_.get() == o.field_.get() && a_ == o.a_;
    }
    bool operator!=(const LinearizedPoly& o) const { return !(*this == o); }

    uint32_t eval(uint32_t x) const;

private:
    Field field_;
    std::vector<uint32_t> a_;
};

// monic L with simple roots exactly elements(V), built by the one-dimension-
// at-a-time recursion L'(x) = L(x)^q - L(b)^{q-1} L(x)
LinearizedPoly subspace_poly(const Subspace& V);

// nullspace of x -> L(x) as an F_q-linear map on the ambient field; when the
// ambient field properly extends L's coefficient field the coefficients are
// carried across by an Embedding first
Subspace kernel(const LinearizedPoly& L, const Field& ambient);
inline Subspace kernel(const LinearizedPoly& L) { return kernel(L, L.field()); }

LinearizedPoly embed_poly(const LinearizedPoly& L, const Embedding& emb);

// coefficient transport under V -> alpha^m V: a_j picks up alpha^{m(q^K - q^j)}
LinearizedPoly scale_conjugate(const LinearizedPoly& L, uint32_t alpha, uint64_t m);

// coefficient transport under V -> sigma_s(V): each a_j maps to a_j^{q^s}
LinearizedPoly frobenius_conjugate(const LinearizedPoly& L, uint32_t s);

// whether every root of L lies in F_{q^N}, via x^{q^N} mod L == x computed by
// Frobenius-and-reduce steps; needs a_0 != 0 so roots are simple
bool divides_xqn_minus_x(const LinearizedPoly& L, uint32_t N);

// smallest N <= cap with divides_xqn_minus_x(L, N)
uint32_t splitting_field_degree(const LinearizedPoly& L, uint32_t cap = kDefaultSplitCap);

struct TrinomialRow {
    uint32_t k = 0, s = 0, N = 0;
    bool operator==(const TrinomialRow& o) const { return k == o.k && s == o.s && N == o.N; }
};

// for each 1 <= s < k <= k_max with x^{q^k-1} + x^{q^s-1} + 1 irreducible over
// F_q: one row per multiple N of q^k - 1 up to N_cap (the degrees whose field
// contains the roots); pairs are searched concurrently, output order is fixed
std::vector<TrinomialRow> search_trinomials(uint32_t q, uint32_t k_max, uint32_t N_cap);

} // namespace qsc

#endif
