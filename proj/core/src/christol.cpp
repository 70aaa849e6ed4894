#include "autoseq/christol.hpp"

#include <algorithm>

namespace autoseq {

namespace {

// sum of c_m * T^{top - m} for the given coefficient list, as a Poly
Poly poly_from_terms(const FieldCtx* ctx, const std::vector<std::pair<long, FieldElement>>& terms) {
    long top = -1;
    for (const auto& [e, c] : terms) top = std::max(top, e);
    if (top < 0) return Poly::zero(ctx);
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(top) + 1, ctx->zero());
    for (const auto& [e, c] : terms)
        coeffs[static_cast<std::size_t>(e)] = coeffs[static_cast<std::size_t>(e)] + c;
    return Poly(ctx, std::move(coeffs));
}

}  // namespace

LaurentSeries theta_series(const ThmTwoSpec& spec, long order) {
    if (order < 1) throw Error(ErrorKind::InvalidArgument, "order must be >= 1");
    std::vector<FieldElement> lambda = generate_thm2(spec, order);
    return LaurentSeries::make(spec.field, -1, std::move(lambda), -order);
}

ThetaEquation compute_abc(const ThmTwoSpec& spec) {
    validate_spec(spec);
    const FieldCtx* f = spec.field;
    const long ell = spec.ell, r = spec.r;

    Poly t_minus_1(f, {-(f->one()), f->one()});
    Poly tm1_r = t_minus_1.pow_int(r);

    // A = [sum_m lambda_m T^{l-m} (T-1)^r + sum_j beta_j T^{r-1-j}] / ((T-1)^r T^l)
    std::vector<std::pair<long, FieldElement>> lam_terms, beta_terms;
    for (long m = 1; m <= ell; ++m)
        lam_terms.emplace_back(ell - m, spec.lambda_init[static_cast<std::size_t>(m - 1)]);
    for (long j = 1; j < r; ++j)
        beta_terms.emplace_back(r - 1 - j, spec.beta[static_cast<std::size_t>(j - 1)]);
    Poly a_num = poly_from_terms(f, lam_terms) * tm1_r + poly_from_terms(f, beta_terms);
    RationalFunction A(a_num, tm1_r * Poly::monomial(f->one(), ell));

    // C = alpha_{l+1} T^{r-l-1}
    FieldElement a_l1 = alpha_periodic(spec.alpha, ell + 1);
    RationalFunction C =
        RationalFunction::from_poly(Poly::constant(a_l1)) * RationalFunction::t_power(f, r - ell - 1);

    // B = T^{r-l-1} ( sum_m alpha_m lambda_m^r T^{-rm}
    //               + (1-T^{-1})^{-r^2} sum_j alpha_{l+1+j} beta_j^r T^{-r(l+1+j)} )
    std::vector<std::pair<long, FieldElement>> s1_terms, s2_terms;
    for (long m = 1; m <= ell; ++m)
        s1_terms.emplace_back(r * (ell - m), alpha_periodic(spec.alpha, m) *
                                                 pow(spec.lambda_init[static_cast<std::size_t>(m - 1)], r));
    for (long j = 1; j < r; ++j)
        s2_terms.emplace_back(r * (r - 1 - j),
                              alpha_periodic(spec.alpha, ell + 1 + j) *
                                  pow(spec.beta[static_cast<std::size_t>(j - 1)], r));
    RationalFunction s1(poly_from_terms(f, s1_terms), Poly::monomial(f->one(), r * ell));
    RationalFunction s2(poly_from_terms(f, s2_terms),
                        t_minus_1.pow_int(r * r) * Poly::monomial(f->one(), r * ell));
    RationalFunction B = RationalFunction::t_power(f, r - ell - 1) * (s1 + s2);

    return {A, B, C};
}

HyperquadraticCertificate verify_hyperquadratic(const ThmTwoSpec& spec, long order,
                                                const ThetaEquation* equation) {
    validate_spec(spec);
    if (order < spec.r * spec.ell)
        throw Error(ErrorKind::PrecisionTooLow, "order must be at least r*ell");
    const FieldCtx* f = spec.field;
    const long margin = std::abs(spec.r - spec.ell - 1) + 4;

    ThetaEquation eq = equation ? *equation : compute_abc(spec);
    LaurentSeries theta = theta_series(spec, order);
    LaurentSeries a_series = series_from_rational(eq.A, order);
    LaurentSeries rho = theta - a_series;

    // Independent route for rho: sum lambda_n T^{-n} over the index set
    // E = {l+1+rn}, straight from the generated terms.
    std::vector<FieldElement> lambda = generate_thm2(spec, order);
    std::vector<FieldElement> rho_coeffs(static_cast<std::size_t>(order), f->zero());
    for (long n = spec.ell + 1; n <= order; n += spec.r)
        rho_coeffs[static_cast<std::size_t>(n - 1)] = lambda[static_cast<std::size_t>(n - 1)];
    LaurentSeries rho_direct = LaurentSeries::make(f, -1, std::move(rho_coeffs), -order);

    HyperquadraticCertificate cert;
    cert.A = eq.A;
    cert.B = eq.B;
    cert.C = eq.C;
    cert.order_checked = order;
    cert.residual_theta = rho.equals_to_precision(rho_direct);

    LaurentSeries rhs = series_from_rational(eq.B, order + margin) +
                        series_mul(series_from_rational(eq.C, order + margin),
                                   frobenius_power(rho, spec.r));
    LaurentSeries residual = rho - rhs;
    if (residual.min_exact() > -order)
        throw Error(ErrorKind::PrecisionTooLow, "residual window shallower than order");
    cert.residual_rho = residual.is_zero_to_precision();
    return cert;
}

namespace {

// sigma_M = sum_{m=0}^{M} U^{2^m}; U is exact with finite support, so every
// term is exact and the sum is a finite Laurent polynomial.
LaurentSeries sigma_partial(const LaurentSeries& u, long depth) {
    LaurentSeries block = u;
    LaurentSeries sigma = u;
    for (long m = 1; m <= depth; ++m) {
        block = frobenius_power(block, 2);
        sigma = sigma + block;
    }
    return sigma;
}

}  // namespace

PropThreeReport prop3_report(const PropOneSpec& p1, long sigma_depth, long order) {
    validate_spec(p1);
    if (p1.r != 2) throw Error(ErrorKind::WrongR, "Proposition 3 analysis needs r = 2");
    if (sigma_depth < 0 || order < 1)
        throw Error(ErrorKind::InvalidArgument, "sigma_depth and order must be positive");
    const FieldCtx* f = p1.field;
    const long ell = p1.ell;

    ThmTwoSpec spec = spec_from_cf_params(p1);
    ThetaEquation eq = compute_abc(spec);

    FieldElement a_l1 = alpha_periodic(spec.alpha, ell + 1);
    FieldElement a_l2 = alpha_periodic(spec.alpha, ell + 2);
    FieldElement beta1 = spec.beta[0];

    PropThreeReport rep;
    rep.sigma_partial_depth = sigma_depth;
    rep.alpha_beta_relation = (a_l1 * a_l2 * beta1 * beta1) == f->one();

    rep.u_coeffs.reserve(static_cast<std::size_t>(ell));
    bool all_zero = true;
    for (long m = 1; m <= ell; ++m) {
        FieldElement lam = spec.lambda_init[static_cast<std::size_t>(m - 1)];
        FieldElement um = a_l1 * alpha_periodic(spec.alpha, m) * lam * lam + f->one();
        all_zero = all_zero && um.is_zero();
        rep.u_coeffs.push_back(um);
    }
    rep.rational = all_zero;

    // V = alpha_{l+1}^{-1} T^{1-l} (T+1)^{-2}
    Poly t_plus_1(f, {f->one(), f->one()});
    rep.V = RationalFunction(Poly::constant(inv(a_l1)), t_plus_1 * t_plus_1) *
            RationalFunction::t_power(f, 1 - ell);

    // U two ways: the closed coefficient formula, and CV + CB + (CV)^2.
    LaurentSeries u_exact = LaurentSeries::zero(f);
    for (long m = 1; m <= ell; ++m)
        u_exact = u_exact + LaurentSeries::monomial(rep.u_coeffs[static_cast<std::size_t>(m - 1)],
                                                    2 - 2 * ell - 2 * m);
    RationalFunction cv = eq.C * rep.V;
    RationalFunction u_rat = cv + eq.C * eq.B + cv * cv;
    RationalFunction u_exact_rat = RationalFunction(Poly::zero(f), Poly::one(f));
    for (long m = 1; m <= ell; ++m)
        u_exact_rat = u_exact_rat +
                      RationalFunction::from_poly(Poly::constant(
                          rep.u_coeffs[static_cast<std::size_t>(m - 1)])) *
                          RationalFunction::t_power(f, 2 - 2 * ell - 2 * m);
    rep.u_cross_check = (u_rat == u_exact_rat);
    rep.U = u_exact;

    // sigma_M = U + sigma_M^2 holds through the first missing block
    LaurentSeries sigma = sigma_partial(u_exact, sigma_depth);
    long block_lead = -2 * ell * (1L << (sigma_depth + 1));
    LaurentSeries fp_residual = sigma - u_exact - series_mul(sigma, sigma);
    rep.sigma_fixed_point = fp_residual.truncated(block_lead + 1).is_zero_to_precision();

    // theta = A + V + C^{-1} sigma_M through min(order, gap bound)
    LaurentSeries theta = theta_series(spec, order);
    long margin = std::abs(ell - 1) + 4;
    LaurentSeries rhs = series_from_rational(eq.A, order + margin) +
                        series_from_rational(rep.V, order + margin) +
                        series_mul(series_from_rational(eq.C.inverse(), order + margin), sigma);
    LaurentSeries diff = theta - rhs;
    long gap_bound = (ell - 1) + block_lead;  // lead of C^{-1} U^{2^{M+1}}
    rep.theta_matched_through = std::max(-order, gap_bound + 1);
    rep.theta_identity = diff.truncated(rep.theta_matched_through).is_zero_to_precision();
    return rep;
}

GapWitness rationality_gap_witness(const PropThreeReport& report, long order) {
    bool any = false;
    for (const auto& u : report.u_coeffs) any = any || !u.is_zero();
    if (!any) throw Error(ErrorKind::NoNonzeroU, "all u_m vanish; no gap structure exists");
    const long ell = static_cast<long>(report.u_coeffs.size());

    // deep enough that every block above -order is present
    long depth = 0;
    while ((1L << depth) * 2 * ell <= order) ++depth;
    LaurentSeries sigma = sigma_partial(report.U, depth);

    GapWitness w;
    w.ok = true;
    for (long m = 0; (2L << m) * (4 * ell - 2) <= order; ++m) {
        ++w.gaps_checked;
        long lo = -4 * ell * (1L << m);       // lead of U^{2^{m+1}}
        long hi = (2 - 4 * ell) * (1L << m);  // bottom of U^{2^m} support
        for (long e = lo + 1; e < hi; ++e)
            if (!sigma.coeff(e).is_zero()) w.ok = false;
    }
    return w;
}

}  // namespace autoseq
