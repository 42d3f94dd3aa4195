#include "doctest.h"

#include <set>
#include <vector>

#include "qsc/errors.hpp"
#include "qsc/field.hpp"

using namespace qsc;

namespace {

Field f2_8() {
    return FieldSpec::create(2, 1, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1});
}

} // namespace

TEST_CASE("degree-8 binary field from its spec") {
    Field F = f2_8();
    CHECK(F->p() == 2);
    CHECK(F->q() == 2);
    CHECK(F->n() == 8);
    CHECK(F->size() == 256);
    CHECK(F->group_order() == 255);
    CHECK(F->gamma() == 2);   // the class of x itself
    CHECK(F->pow(F->gamma(), 255) == 1);
    CHECK(F->dlog(F->one()) == 0);
}

TEST_CASE("modulus verification") {
    // x^2 + 1 = (x+1)^2 over F_2
    CHECK_THROWS_AS(FieldSpec::create(2, 1, 2, {1, 0, 1}), Error);
    try {
        FieldSpec::create(2, 1, 2, {1, 0, 1});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotIrreducible);
    }

    // x^4 + x^3 + x^2 + x + 1 is irreducible but its root has order 5, not 15
    try {
        FieldSpec::create(2, 1, 4, {1, 1, 1, 1, 1});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPrimitive);
    }

    CHECK_THROWS_AS(FieldSpec::create(4, 1, 2, {1, 1, 1}), Error);   // p must be prime
    CHECK_THROWS_AS(f2_8()->dlog(0), Error);
}

TEST_CASE("table cap refuses oversized fields") {
    try {
        FieldSpec::create(2, 1, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}, 4);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CapExceeded);
    }
}

TEST_CASE("discrete log arithmetic") {
    Field F = f2_8();
    uint32_t a = F->antilog(7), b = F->antilog(250);
    CHECK(F->dlog(F->mul(a, b)) == 2);   // 257 mod 255
    CHECK(F->antilog(255) == F->one());
    CHECK(F->antilog(256) == F->gamma());
    for (uint64_t i = 0; i < 255; ++i) {
        uint32_t x = F->antilog(i);
        CHECK(F->dlog(x) == i);
        CHECK(F->mul(x, F->inv(x)) == 1);
    }
}

TEST_CASE("field axioms exhaustively at small sizes") {
    for (Field F : {FieldSpec::create_auto(2, 1, 4), FieldSpec::create_auto(3, 1, 2),
                    FieldSpec::create_auto(2, 2, 2), FieldSpec::create_auto(5, 1, 1)}) {
        uint64_t sz = F->size();
        for (uint32_t a = 0; a < sz; ++a) {
            CHECK(F->add(a, 0) == a);
            CHECK(F->mul(a, 1) == a);
            CHECK(F->add(a, F->neg(a)) == 0);
            if (a) CHECK(F->mul(a, F->inv(a)) == 1);
            for (uint32_t b = 0; b < sz; ++b) {
                CHECK(F->add(a, b) == F->add(b, a));
                CHECK(F->mul(a, b) == F->mul(b, a));
                for (uint32_t c = 0; c < sz; ++c) {
                    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
                    CHECK(F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c));
                }
            }
        }
    }
}

TEST_CASE("frobenius is the q-power map and is additive") {
    Field F = FieldSpec::create_auto(3, 1, 3);
    for (uint32_t a = 0; a < F->size(); ++a) {
        CHECK(F->frobenius(a, 1) == F->pow(a, 3));
        CHECK(F->frobenius(a, 2) == F->pow(a, 9));
        CHECK(F->frobenius(a, 3) == a);
        for (uint32_t b = 0; b < F->size(); ++b)
            CHECK(F->frobenius(F->add(a, b), 1) == F->add(F->frobenius(a, 1), F->frobenius(b, 1)));
    }
}

TEST_CASE("subfield copies") {
    Field F = FieldSpec::create_auto(2, 1, 4);
    std::vector<uint32_t> sub = F->subfield(2);
    std::set<uint32_t> got(sub.begin(), sub.end());
    std::set<uint32_t> want{0, 1, F->antilog(5), F->antilog(10)};
    CHECK(got == want);

    for (uint32_t x : sub) {
        CHECK(F->in_subfield(x, 2));
        for (uint32_t y : sub) {
            CHECK(got.count(F->add(x, y)) == 1);
            CHECK(got.count(F->mul(x, y)) == 1);
        }
    }
    CHECK(!F->in_subfield(F->gamma(), 2));
    CHECK(F->subfield(4).size() == 16);
    CHECK_THROWS_AS(F->subfield(3), Error);
}

TEST_CASE("m-th power subgroup") {
    Field F = FieldSpec::create_auto(2, 1, 4);
    auto [gen, order] = F->mth_power_subgroup(3);
    CHECK(gen == 3);
    CHECK(order == 5);

    std::set<uint32_t> cubes;
    for (uint64_t i = 0; i < 15; ++i) cubes.insert(F->pow(F->antilog(i), 3));
    CHECK(cubes.size() == 5);
    for (uint64_t i = 0; i < order; ++i) CHECK(cubes.count(F->antilog(gen * i)) == 1);

    CHECK_THROWS_AS(F->mth_power_subgroup(2), Error);   // 2 does not divide 15
}

TEST_CASE("scalar action and digits") {
    Field F = FieldSpec::create_auto(3, 1, 2);
    for (uint32_t a = 0; a < F->size(); ++a) {
        for (uint32_t c = 0; c < 3; ++c) CHECK(F->scalar_mul(a, c) == F->mul(a, c));
        uint32_t rebuilt = 0;
        for (uint32_t i = 0; i < 2; ++i) rebuilt = F->digit_set(rebuilt, i, F->digit(a, i));
        CHECK(rebuilt == a);
    }
}

TEST_CASE("auto modulus picks the smallest primitive polynomial") {
    CHECK(FieldSpec::create_auto(2, 1, 6)->modulus() ==
          std::vector<uint32_t>{1, 1, 0, 0, 0, 0, 1});
    CHECK(FieldSpec::create_auto(2, 1, 7)->modulus() ==
          std::vector<uint32_t>{1, 1, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("embedding a subfield layer") {
    Field small = FieldSpec::create_auto(2, 1, 3);
    Field big = FieldSpec::create_auto(2, 1, 6);
    Embedding emb(small, big);

    CHECK(emb.map(0) == 0);
    CHECK(emb.map(1) == 1);
    CHECK(big->dlog(emb.gamma_image()) == 27);   // smallest-exponent root of the cubic
    for (uint32_t a = 0; a < small->size(); ++a) {
        CHECK(big->in_subfield(emb.map(a), 3));
        for (uint32_t b = 0; b < small->size(); ++b) {
            CHECK(emb.map(small->add(a, b)) == big->add(emb.map(a), emb.map(b)));
            CHECK(emb.map(small->mul(a, b)) == big->mul(emb.map(a), emb.map(b)));
        }
    }

    CHECK_THROWS_AS(Embedding(FieldSpec::create_auto(2, 1, 3), FieldSpec::create_auto(2, 1, 8)),
                    Error);
    CHECK_THROWS_AS(Embedding(FieldSpec::create_auto(3, 1, 2), FieldSpec::create_auto(2, 1, 4)),
                    Error);
}

TEST_CASE("bigint helpers behave on the sizes the tables need") {
    CHECK(ipow_u64(2, 10) == 1024);
    CHECK(mulmod_u64(1ull << 40, 1ull << 40, (1ull << 61) - 1) != 0);
    CHECK(powmod_u64(3, 340, 341) == 56);   // 341 = 11 * 31 is not prime
    CHECK(is_prime_u64(127));
    CHECK(!is_prime_u64(255));
    auto f = prime_factors_u64(255);
    CHECK(f == std::vector<uint64_t>{3, 5, 17});
}
