#include <doctest.h>

#include "autoseq/field.hpp"
#include "helpers.hpp"

using namespace autoseq;

namespace {

struct FieldCase {
    long p;
    int s;
};

const FieldCase kSmallFields[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1},
                                  {7, 1}, {2, 3}, {3, 2}};

}  // namespace

TEST_CASE("field axioms hold exhaustively for small q") {
    for (auto [p, s] : kSmallFields) {
        auto F = FieldCtx::make(p, s);
        const long q = F->q();
        CAPTURE(p);
        CAPTURE(s);

        for (long i = 0; i < q; ++i) {
            auto a = F->from_index(i);
            CHECK(a + F->zero() == a);
            CHECK(a * F->one() == a);
            CHECK(a + (-a) == F->zero());
            CHECK(a * F->zero() == F->zero());
            // x^q = x in F_q.
            CHECK(pow(a, q) == a);
            if (!a.is_zero()) CHECK(a * inv(a) == F->one());
        }
        for (long i = 0; i < q; ++i) {
            auto a = F->from_index(i);
            for (long j = 0; j < q; ++j) {
                auto b = F->from_index(j);
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (long k = 0; k < q; ++k) {
                    auto c = F->from_index(k);
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
        }
    }
}

TEST_CASE("frobenius x -> x^p is additive") {
    auto rng = testutil::make_rng(1);
    for (auto [p, s] : kSmallFields) {
        auto F = FieldCtx::make(p, s);
        std::uniform_int_distribution<long> pick(0, F->q() - 1);
        for (int trial = 0; trial < 50; ++trial) {
            auto a = F->from_index(pick(rng));
            auto b = F->from_index(pick(rng));
            CHECK(pow(a + b, p) == pow(a, p) + pow(b, p));
        }
    }
}

TEST_CASE("default modulus is the expected irreducible") {
    // Hand-checked smallest monic irreducibles in ascending-coefficient
    // lexicographic order.
    CHECK(FieldCtx::make(2, 2)->modulus() == std::vector<int>{1, 1, 1});
    CHECK(FieldCtx::make(2, 3)->modulus() == std::vector<int>{1, 0, 1, 1});
    CHECK(FieldCtx::make(3, 2)->modulus() == std::vector<int>{1, 0, 1});
    CHECK(FieldCtx::make(5, 2)->modulus() == std::vector<int>{1, 1, 1});
}

TEST_CASE("wire format round trips") {
    auto F = FieldCtx::make(3, 2);
    for (long i = 0; i < F->q(); ++i) {
        auto a = F->from_index(i);
        CHECK(F->parse(a.to_string()) == a);
    }
    CHECK(F->parse("2,1").coords() == std::vector<int>{2, 1});
    // Coordinates reduce mod p on the way in.
    CHECK(F->from_coords({5, 4}) == F->parse("2,1"));
    CHECK(F->from_coords({-1}) == F->parse("2,0"));
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(FieldCtx::make(4, 1), Error);
    CHECK_THROWS_AS(FieldCtx::make(1, 1), Error);
    // X^2 + 1 is reducible over F_2.
    CHECK_THROWS_AS(FieldCtx::make(2, 2, {1, 0, 1}), Error);
    try {
        FieldCtx::make(2, 2, {1, 0, 1});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ReducibleModulus);
    }
    try {
        FieldCtx::make(6, 1);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CompositeP);
    }
}

TEST_CASE("zero has no inverse") {
    auto F = FieldCtx::make(5, 1);
    CHECK_THROWS_AS(inv(F->zero()), Error);
}

TEST_CASE("elements of different contexts do not mix") {
    auto F = FieldCtx::make(2, 2);
    auto G = FieldCtx::make(2, 2);
    CHECK_THROWS_AS(F->one() + G->one(), Error);
}

TEST_CASE("large field falls back to generic multiplication") {
    // q = 3^7 = 2187 exceeds the lookup-table cutoff.
    auto F = FieldCtx::make(3, 7);
    auto rng = testutil::make_rng(2);
    std::uniform_int_distribution<long> pick(1, F->q() - 1);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = F->from_index(pick(rng));
        auto b = F->from_index(pick(rng));
        CHECK(a * inv(a) == F->one());
        CHECK((a * b) * inv(b) == a);
        CHECK(pow(a, F->q() - 1) == F->one());
    }
}
