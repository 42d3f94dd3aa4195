#include "doctest.h"

#include <algorithm>
#include <set>
#include <unordered_set>
#include <vector>

#include "qsc/errors.hpp"
#include "qsc/field.hpp"
#include "qsc/subspace.hpp"

using namespace qsc;

namespace {

Field f2_4() { return FieldSpec::create_auto(2, 1, 4); }

std::vector<Subspace> everything(const Field& F) {
    std::vector<Subspace> all;
    for (uint32_t k = 0; k <= F->n(); ++k)
        for (const Subspace& V : all_subspaces(F, k)) all.push_back(V);
    return all;
}

} // namespace

TEST_CASE("span canonicalizes any generating set") {
    Field F = f2_4();
    Subspace V = Subspace::span(F, {F->antilog(3), F->antilog(7)});

    // same subspace from sums and reordered generators
    uint32_t a = F->antilog(3), b = F->antilog(7);
    CHECK(V == Subspace::span(F, {b, a}));
    CHECK(V == Subspace::span(F, {a, F->add(a, b)}));
    CHECK(V == Subspace::span(F, V.rows()));
    CHECK(V == Subspace::span(F, V.elements()));
    CHECK(V.dim() == 2);

    CHECK(Subspace::span(F, {0, 0}).dim() == 0);
    CHECK(Subspace::zero(F) == Subspace::span(F, {}));
    CHECK_THROWS_AS(Subspace::span(F, {16}), Error);
}

TEST_CASE("element enumeration") {
    Field F = f2_4();
    Subspace V = Subspace::span(F, {F->antilog(3), F->antilog(7)});
    std::vector<uint32_t> els = V.elements();
    REQUIRE(els.size() == 4);
    CHECK(els[0] == 0);
    // lexicographic in the coefficient tuple, first basis row most significant
    CHECK(els[1] == V.rows()[1]);
    CHECK(els[2] == V.rows()[0]);
    CHECK(els[3] == F->add(V.rows()[0], V.rows()[1]));
    for (uint32_t x : els) CHECK(V.contains(x));
    CHECK(!V.contains(F->antilog(1)));

    CHECK_THROWS_AS(V.elements(3), Error);
}

TEST_CASE("subspace counting matches the gaussian binomials") {
    CHECK(gaussian(4, 2, 2) == 35);
    CHECK(gaussian(8, 3, 2) == 97155);
    CHECK(gaussian(7, 2, 2) == 2667);
    CHECK(gaussian(6, 2, 2) == 651);
    CHECK(gaussian(6, 3, 2) == 1395);
    CHECK(gaussian(3, 1, 3) == 13);
    CHECK(gaussian(4, 2, 3) == 130);
    for (uint32_t k = 0; k <= 5; ++k) CHECK(gaussian(5, k, 2) == gaussian(5, 5 - k, 2));
    CHECK_THROWS_AS(gaussian(4, 5, 2), Error);
    CHECK_THROWS_AS(gaussian(4, 2, 1), Error);

    Field F = f2_4();
    CHECK(all_subspaces(F, 0).size() == 1);
    CHECK(all_subspaces(F, 1).size() == 15);
    CHECK(all_subspaces(F, 2).size() == 35);
    CHECK(all_subspaces(F, 3).size() == 15);
    CHECK(all_subspaces(F, 4).size() == 1);
    CHECK_THROWS_AS(all_subspaces(F, 5), Error);

    Field F3 = FieldSpec::create_auto(3, 1, 3);
    CHECK(all_subspaces(F3, 1).size() == 13);
    CHECK(all_subspaces(F3, 2).size() == 13);

    // brute force the 2-dim count by spanning every pair of nonzero elements
    std::unordered_set<Subspace, SubspaceHash> seen;
    for (uint32_t i = 0; i < 15; ++i)
        for (uint32_t j = 0; j < 15; ++j) {
            Subspace W = Subspace::span(F, {F->antilog(i), F->antilog(j)});
            if (W.dim() == 2) seen.insert(W);
        }
    CHECK(seen.size() == 35);
}

TEST_CASE("all_subspaces returns each subspace once, canonical") {
    Field F = f2_4();
    for (uint32_t k = 1; k < 4; ++k) {
        std::set<Subspace> dedup;
        for (const Subspace& V : all_subspaces(F, k)) {
            CHECK(V.dim() == k);
            CHECK(V == Subspace::span(F, V.rows()));
            dedup.insert(V);
        }
        CHECK(dedup.size() == all_subspaces(F, k).size());
    }
}

TEST_CASE("intersection dimension agrees with the rank formula") {
    Field F = f2_4();
    std::vector<Subspace> all = everything(F);
    for (const Subspace& U : all) {
        for (const Subspace& V : all) {
            uint32_t meet = intersect_dim(U, V);
            std::vector<uint32_t> joined = U.rows();
            for (uint32_t r : V.rows()) joined.push_back(r);
            uint32_t join = row_rank(*F, joined);
            CHECK(meet + join == U.dim() + V.dim());
            CHECK(meet == intersect_dim(V, U));
        }
    }
}

TEST_CASE("subspace metric") {
    Field F = f2_4();
    std::vector<Subspace> all = everything(F);
    for (const Subspace& U : all)
        for (const Subspace& V : all) {
            uint32_t d = distance(U, V);
            CHECK(d == distance(V, U));
            CHECK((d == 0) == (U == V));
        }

    // triangle inequality over all 1- and 2-dim subspaces
    std::vector<Subspace> small = all_subspaces(F, 1);
    for (const Subspace& V : all_subspaces(F, 2)) small.push_back(V);
    for (const Subspace& A : small)
        for (const Subspace& B : small)
            for (const Subspace& C : small)
                CHECK(distance(A, C) <= distance(A, B) + distance(B, C));

    // two distinct lines meet in 0, so their distance is 2
    Subspace l1 = Subspace::span(F, {F->antilog(0)});
    Subspace l2 = Subspace::span(F, {F->antilog(1)});
    CHECK(distance(l1, l2) == 2);
}

TEST_CASE("characteristic vectors track scalar shifts as rotations") {
    Field F = f2_4();
    Subspace V = Subspace::span(F, {F->antilog(2), F->antilog(9)});
    std::vector<uint8_t> chi = V.characteristic_vector();
    REQUIRE(chi.size() == 15);
    uint32_t weight = 0;
    for (uint64_t i = 0; i < 15; ++i) {
        weight += chi[i];
        CHECK(static_cast<bool>(chi[i]) == V.contains(F->antilog(i)));
    }
    CHECK(weight == 3);   // q^k - 1 nonzero elements

    for (uint64_t j = 1; j < 15; ++j) {
        Subspace W = V.scalar_shift(F->antilog(j));
        std::vector<uint8_t> rot = W.characteristic_vector();
        for (uint64_t i = 0; i < 15; ++i) CHECK(rot[(i + j) % 15] == chi[i]);
    }

    CHECK_THROWS_AS(V.scalar_shift(0), Error);
    CHECK(V.scalar_shift(1) == V);
}

TEST_CASE("scalar shift is a metric isometry") {
    Field F = f2_4();
    std::vector<Subspace> planes = all_subspaces(F, 2);
    for (uint64_t j = 0; j < 15; ++j) {
        uint32_t a = F->antilog(j);
        for (size_t i = 0; i < planes.size(); i += 3)
            for (size_t l = 0; l < planes.size(); l += 4)
                CHECK(distance(planes[i].scalar_shift(a), planes[l].scalar_shift(a)) ==
                      distance(planes[i], planes[l]));
    }
}

TEST_CASE("hash agrees with equality") {
    Field F = f2_4();
    SubspaceHash h;
    std::vector<Subspace> planes = all_subspaces(F, 2);
    std::unordered_set<Subspace, SubspaceHash> set(planes.begin(), planes.end());
    CHECK(set.size() == planes.size());
    for (const Subspace& V : planes) {
        CHECK(h(V) == h(Subspace::span(F, V.elements())));
        CHECK(set.count(V) == 1);
    }
}
