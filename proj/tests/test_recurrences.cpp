#include <doctest.h>

#include "autoseq/recurrences.hpp"
#include "helpers.hpp"

using namespace autoseq;

namespace {

// Direct unroller of the characteristic-2 recurrence, written from the
// (m, i) formulation rather than the digit decomposition used by the
// library: for m >= 0,
//   lambda_{l+rm+1} = (e2/e1) e2^{(-1)^{m+1}} lambda_{m+1}^r
//   lambda_{l+rm+i} = (e1/e2)^{(-1)^i}        (2 <= i <= r)
std::vector<FieldElement> unroll_cf_recurrence(const PropOneSpec& s, long n) {
    std::vector<FieldElement> lam(n + 1, s.field->zero());
    for (long m = 1; m <= std::min<long>(s.ell, n); ++m)
        lam[m] = s.lambda_init[m - 1];
    FieldElement ratio21 = s.eps2 * inv(s.eps1);
    FieldElement ratio12 = s.eps1 * inv(s.eps2);
    for (long m = 0;; ++m) {
        long base = s.ell + s.r * m;
        if (base + 1 > n) break;
        FieldElement e2pow = (m % 2 == 0) ? inv(s.eps2) : s.eps2;
        lam[base + 1] = ratio21 * e2pow * pow(lam[m + 1], s.r);
        for (long i = 2; i <= s.r && base + i <= n; ++i)
            lam[base + i] = (i % 2 == 0) ? ratio12 : ratio21;
    }
    return std::vector<FieldElement>(lam.begin() + 1, lam.end());
}

// Direct unroller of the general recurrence from its (m, i, j) formulation.
std::vector<FieldElement> unroll_general(
    const FieldCtx* F, long ell, long r, long k, long gamma,
    const std::vector<FieldElement>& init,
    const std::vector<FieldElement>& alpha,
    const std::vector<std::vector<FieldElement>>& beta, long n) {
    std::vector<FieldElement> u(n + 1, F->zero());
    for (long m = 1; m <= std::min(ell, n); ++m) u[m] = init[m - 1];
    for (long m = 0;; ++m) {
        bool wrote = false;
        for (long i = 0; i < k; ++i) {
            long big = k * m + i;
            long pos = ell + 1 + r * big;
            if (pos <= n) {
                u[pos] = alpha[i] * pow(u[big + 1], gamma);
                wrote = true;
            }
            for (long j = 1; j < r; ++j)
                if (pos + j <= n) {
                    u[pos + j] = beta[i][j - 1];
                    wrote = true;
                }
        }
        if (!wrote) break;
    }
    return std::vector<FieldElement>(u.begin() + 1, u.end());
}

PropOneSpec f4_example(const std::shared_ptr<const FieldCtx>& F) {
    PropOneSpec s;
    s.field = F.get();
    s.ell = 1;
    s.r = 2;
    s.lambda_init = {F->one()};
    s.eps1 = F->parse("0,1");   // w
    s.eps2 = F->parse("1,1");   // w^2 = w + 1
    return s;
}

}  // namespace

TEST_CASE("worked characteristic-2 example over F_4") {
    auto F = FieldCtx::make(2, 2);
    auto s = f4_example(F);
    validate_spec(s);
    auto lam = generate_thm2(spec_from_cf_params(s), 7);
    auto w = F->parse("0,1");
    auto w2 = F->parse("1,1");
    std::vector<FieldElement> expected = {F->one(), w2, w2, w, w2, F->one(), w2};
    CHECK(lam == expected);
}

TEST_CASE("parameter mapping from the characteristic-2 family") {
    auto F = FieldCtx::make(2, 2);
    auto s = f4_example(F);
    auto t2 = spec_from_cf_params(s);
    CHECK(t2.k == 2);
    CHECK(t2.ell == 1);
    CHECK(t2.r == 2);
    CHECK(t2.alpha[0] == F->parse("1,1"));  // eps1^{-1} = w^{-1} = w^2
    CHECK(t2.alpha[1] == F->one());         // eps2^2 eps1^{-1} = w^4 w^{-1} = 1
    CHECK(t2.beta[0] == F->parse("1,1"));   // (eps2/eps1)^{-1} = w^{-1} = w^2
}

TEST_CASE("generator agrees with the direct unroller on random specs") {
    auto rng = testutil::make_rng(30);
    struct FC { long p; int s; };
    for (FC fc : {FC{2, 1}, FC{2, 2}, FC{2, 3}}) {
        auto F = FieldCtx::make(fc.p, fc.s);
        std::uniform_int_distribution<long> nonzero(1, F->q() - 1);
        std::uniform_int_distribution<long> ells(1, 4);
        std::uniform_int_distribution<int> rpick(0, 1);
        for (int trial = 0; trial < 25; ++trial) {
            PropOneSpec s;
            s.field = F.get();
            s.ell = ells(rng);
            s.r = rpick(rng) ? 2 : 4;
            for (long m = 0; m < s.ell; ++m)
                s.lambda_init.push_back(F->from_index(nonzero(rng)));
            s.eps1 = F->from_index(nonzero(rng));
            s.eps2 = F->from_index(nonzero(rng));
            validate_spec(s);
            auto got = generate_thm2(spec_from_cf_params(s), 300);
            auto want = unroll_cf_recurrence(s, 300);
            CHECK(got == want);
        }
    }
}

TEST_CASE("general generator agrees with the (m,i,j) unroller") {
    auto rng = testutil::make_rng(31);
    struct FC { long p; int s; };
    for (FC fc : {FC{3, 1}, FC{5, 1}, FC{3, 2}}) {
        auto F = FieldCtx::make(fc.p, fc.s);
        std::uniform_int_distribution<long> any(0, F->q() - 1);
        std::uniform_int_distribution<long> nonzero(1, F->q() - 1);
        std::uniform_int_distribution<long> ells(1, 4);
        for (int trial = 0; trial < 25; ++trial) {
            ThmTwoSpec s;
            s.field = F.get();
            s.ell = ells(rng);
            s.r = fc.p;  // r must be a power of the characteristic here
            s.k = 1;
            for (long m = 0; m < s.ell; ++m)
                s.lambda_init.push_back(F->from_index(any(rng)));
            s.alpha.push_back(F->from_index(nonzero(rng)));
            for (long j = 1; j < s.r; ++j)
                s.beta.push_back(F->from_index(any(rng)));
            validate_spec(s);
            auto got = generate_thm2(s, 400);
            auto want = unroll_general(F.get(), s.ell, s.r, s.k, s.r,
                                       s.lambda_init, s.alpha, {s.beta}, 400);
            CHECK(got == want);
        }
    }
}

TEST_CASE("worked general-exponent example over F_5") {
    auto F = FieldCtx::make(5, 1);
    ThmFourSpec s;
    s.field = F.get();
    s.ell = 1;
    s.r = 2;
    s.k = 1;
    s.gamma = 3;
    s.u_init = {F->from_index(2)};
    s.alpha = {F->from_index(2)};
    s.beta = {{F->zero()}};
    validate_spec(s);
    auto u = generate_thm4(s, 8);
    CHECK(u[0] == F->from_index(2));
    CHECK(u[1] == F->from_index(1));  // 2 * 2^3 = 16 = 1 mod 5
    CHECK(u[2] == F->zero());
    CHECK(u[3] == F->from_index(2));  // 2 * u(2)^3 = 2
    auto want = unroll_general(F.get(), 1, 2, 1, 3, s.u_init, s.alpha, s.beta, 8);
    CHECK(u == want);
}

TEST_CASE("general-exponent generator agrees with the unroller, k > 1") {
    auto rng = testutil::make_rng(32);
    auto F = FieldCtx::make(7, 1);
    std::uniform_int_distribution<long> any(0, 6);
    std::uniform_int_distribution<long> nonzero(1, 6);
    for (int trial = 0; trial < 25; ++trial) {
        ThmFourSpec s;
        s.field = F.get();
        s.ell = 2;
        s.r = 4;
        s.k = 2;
        s.gamma = 5;  // gcd(5, 6) = 1
        s.u_init = {F->from_index(any(rng)), F->from_index(any(rng))};
        s.alpha = {F->from_index(nonzero(rng)), F->from_index(nonzero(rng))};
        for (long i = 0; i < s.k; ++i) {
            std::vector<FieldElement> row;
            for (long j = 1; j < s.r; ++j) row.push_back(F->from_index(any(rng)));
            s.beta.push_back(row);
        }
        validate_spec(s);
        auto got = generate_thm4(s, 500);
        auto want = unroll_general(F.get(), s.ell, s.r, s.k, s.gamma, s.u_init,
                                   s.alpha, s.beta, 500);
        CHECK(got == want);
    }
}

TEST_CASE("prefix stability: longer runs extend shorter ones") {
    auto F = FieldCtx::make(2, 2);
    auto t2 = spec_from_cf_params(f4_example(F));
    auto shorter = generate_thm2(t2, 100);
    auto longer = generate_thm2(t2, 1000);
    CHECK(std::equal(shorter.begin(), shorter.end(), longer.begin()));
}

TEST_CASE("periodic alpha extension") {
    auto F = FieldCtx::make(5, 1);
    std::vector<FieldElement> alpha = {F->from_index(1), F->from_index(2),
                                       F->from_index(3)};
    CHECK(alpha_periodic(alpha, 1) == alpha[0]);
    CHECK(alpha_periodic(alpha, 3) == alpha[2]);
    CHECK(alpha_periodic(alpha, 4) == alpha[0]);
    CHECK(alpha_periodic(alpha, 301) == alpha[0]);
}

TEST_CASE("validation rejects broken specs") {
    auto F = FieldCtx::make(2, 2);

    ThmTwoSpec s;
    s.field = F.get();
    s.ell = 1;
    s.r = 4;
    s.k = 3;  // 3 does not divide 4
    s.lambda_init = {F->one()};
    s.alpha = {F->one(), F->one(), F->one()};
    s.beta = {F->one(), F->one(), F->one()};
    CHECK_THROWS_AS(validate_spec(s), Error);
    try {
        validate_spec(s);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::KNotDividingR);
    }

    s.k = 2;
    s.alpha = {F->one(), F->zero()};
    try {
        validate_spec(s);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroAlpha);
    }

    s.alpha = {F->one(), F->one()};
    s.r = 6;  // not a power of 2
    try {
        validate_spec(s);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RNotCharPower);
    }

    ThmFourSpec t;
    t.field = F.get();
    t.ell = 1;
    t.r = 3;
    t.k = 1;
    t.gamma = 3;  // gcd(3, q-1) = 3 over F_4
    t.u_init = {F->one()};
    t.alpha = {F->one()};
    t.beta = {{F->zero(), F->zero()}};
    try {
        validate_spec(t);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::GammaNotCoprime);
    }
}
