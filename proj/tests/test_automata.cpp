#include <doctest.h>

#include "autoseq/automata.hpp"
#include "autoseq/recurrences.hpp"
#include "helpers.hpp"

using namespace autoseq;

namespace {

Seq f4_sequence(const std::shared_ptr<const FieldCtx>& F, long n) {
    PropOneSpec s;
    s.field = F.get();
    s.ell = 1;
    s.r = 2;
    s.lambda_init = {F->one()};
    s.eps1 = F->parse("0,1");
    s.eps2 = F->parse("1,1");
    return generate_thm2(spec_from_cf_params(s), n);
}

ThmFourSpec f5_spec(const std::shared_ptr<const FieldCtx>& F) {
    ThmFourSpec s;
    s.field = F.get();
    s.ell = 1;
    s.r = 2;
    s.k = 1;
    s.gamma = 3;
    s.u_init = {F->from_index(2)};
    s.alpha = {F->from_index(2)};
    s.beta = {{F->zero()}};
    return s;
}

}  // namespace

TEST_CASE("ultimate periodicity detector finds minimal parameters") {
    auto F = FieldCtx::make(5, 1);
    auto e = [&](long i) { return F->from_index(i); };

    Seq constant(40, e(3));
    auto pp = detect_ultimate_periodicity(constant, 10, 10);
    REQUIRE(pp.has_value());
    CHECK(*pp == std::pair<long, long>{0, 1});

    // 1 4 (2 0 3)* : preperiod 2, period 3.
    Seq v = {e(1), e(4)};
    for (int rep = 0; rep < 12; ++rep) {
        v.push_back(e(2));
        v.push_back(e(0));
        v.push_back(e(3));
    }
    auto got = detect_ultimate_periodicity(v, 8, 8);
    REQUIRE(got.has_value());
    CHECK(*got == std::pair<long, long>{2, 3});

    // Strictly aperiodic prefix: 1-positions at squares.
    Seq w(60, e(0));
    for (long i = 1; i * i <= 60; ++i) w[static_cast<std::size_t>(i * i - 1)] = e(1);
    CHECK_FALSE(detect_ultimate_periodicity(w, 6, 6).has_value());

    CHECK_THROWS_AS(detect_ultimate_periodicity(Seq{e(1)}, 10, 10), Error);
}

TEST_CASE("detector prefers the lexicographically least certificate") {
    auto F = FieldCtx::make(2, 1);
    // Period 2 also admits period 4; the reported pair must be (0, 2).
    Seq v;
    for (int i = 0; i < 30; ++i) v.push_back(i % 2 ? F->one() : F->zero());
    auto got = detect_ultimate_periodicity(v, 5, 5);
    REQUIRE(got.has_value());
    CHECK(*got == std::pair<long, long>{0, 2});
}

TEST_CASE("kernel closes on the worked F_4 sequence and the DFAO reproduces it") {
    auto F = FieldCtx::make(2, 2);
    const long horizon = 512;
    Seq v = f4_sequence(F, 2 * horizon + 2);
    auto k = kernel_explore(v, 2, horizon);
    REQUIRE(k.closed);
    CHECK(k.root == 0);
    CHECK(k.classes.size() == k.transitions.size());

    auto d = synthesize_dfao(k);
    CHECK(d.r == 2);
    for (long n = 1; n <= horizon; ++n)
        CHECK(run_dfao(d, n) == v[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("kernel classes are genuine decimations of the input") {
    auto F = FieldCtx::make(2, 2);
    Seq v = f4_sequence(F, 1026);
    auto k = kernel_explore(v, 2, 512);
    REQUIRE(k.closed);
    // Walk each class back to an (a, b) decimation by brute force: class
    // reached from the root by digits j1..ja holds n -> v(r^a n + b).
    // Spot-check via the DFAO against direct indexing instead.
    auto d = synthesize_dfao(k);
    for (long n = 1; n <= 512; ++n) {
        CHECK(run_dfao(d, 2 * n) == v[static_cast<std::size_t>(2 * n - 1)]);
        CHECK(run_dfao(d, 2 * n + 1) == v[static_cast<std::size_t>(2 * n)]);
    }
}

TEST_CASE("kernel does not close when the prefix is too short") {
    auto F = FieldCtx::make(2, 2);
    Seq v = f4_sequence(F, 20);
    CHECK_THROWS_AS(kernel_explore(v, 2, 512), Error);
    try {
        kernel_explore(v, 2, 512);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PrefixTooShort);
    }
}

TEST_CASE("unclosed kernels refuse synthesis") {
    auto F = FieldCtx::make(5, 1);
    auto rng = testutil::make_rng(50);
    std::uniform_int_distribution<long> any(0, 4);
    // Random noise almost surely fails to close at a tiny class budget's
    // merge windows; closed == false must then refuse synthesis.
    Seq v;
    for (int i = 0; i < 4200; ++i) v.push_back(F->from_index(any(rng)));
    auto k = kernel_explore(v, 2, 64, 64);
    if (!k.closed) CHECK_THROWS_AS(synthesize_dfao(k), Error);
}

TEST_CASE("shift relation on the general-exponent worked example") {
    auto F = FieldCtx::make(5, 1);
    auto spec = f5_spec(F);
    Seq u = generate_thm4(spec, 2000);

    // l + 1 = 2 = r*1 + 0, so the interesting decimation is b = 0:
    // u_b(n) = u(2n). Then a + b - 1 = 0 = r*0 + 0 gives (i, m) = (0, 0)
    // and sigma(x) = alpha_b x^gamma with alpha_b = alpha_1 = 2.
    Seq ub;
    for (long n = 1; 2 * n <= static_cast<long>(u.size()); ++n)
        ub.push_back(u[static_cast<std::size_t>(2 * n - 1)]);

    auto rels = detect_shift_relation(ub, 2, 4);
    bool found = false;
    for (const auto& rel : rels) {
        if (rel.i != 0 || rel.m != 0) continue;
        bool matches = true;
        for (const auto& [x, y] : rel.sigma)
            if (y != F->from_index(2) * pow(x, 3)) matches = false;
        if (matches) found = true;
    }
    CHECK(found);
}

TEST_CASE("automaticity report on the general-exponent example") {
    auto F = FieldCtx::make(5, 1);
    Seq u = generate_thm4(f5_spec(F), 3000);
    auto rep = automaticity_report(u, 2);
    CHECK(rep.r == 2);
    REQUIRE(rep.decimation_periodic.size() == 2);
    // u(2n+1) = beta_{0,1} = 0 eventually; u(2n) is the driven decimation.
    CHECK(rep.decimation_periodic[1]);
    CHECK_FALSE(rep.decimation_periodic[0]);
    REQUIRE(rep.nonperiodic_digit.has_value());
    CHECK(*rep.nonperiodic_digit == 0);
    CHECK(rep.shift_certificate);
    CHECK(rep.kernel_closed);
    CHECK(rep.class_count > 0);
}

TEST_CASE("DFAO DOT export is deterministic and well formed") {
    auto F = FieldCtx::make(2, 2);
    Seq v = f4_sequence(F, 1026);
    auto d = synthesize_dfao(kernel_explore(v, 2, 512));
    auto dot1 = export_dot(d);
    auto dot2 = export_dot(synthesize_dfao(kernel_explore(v, 2, 512)));
    CHECK(dot1 == dot2);
    CHECK(dot1.rfind("digraph", 0) == 0);
    CHECK(dot1.find("->") != std::string::npos);
}

TEST_CASE("DFAO evaluation rejects n < 1") {
    auto F = FieldCtx::make(2, 2);
    Seq v = f4_sequence(F, 1026);
    auto d = synthesize_dfao(kernel_explore(v, 2, 512));
    CHECK_THROWS_AS(run_dfao(d, 0), Error);
}
