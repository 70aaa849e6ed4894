#include "autoseq/contfrac.hpp"

#include <algorithm>

namespace autoseq {

namespace {

// An exact finite-support series is a rational N(T)/T^k; expand that by
// polynomial Euclid instead of guessing a working precision.
ContinuedFraction cf_expand_rational(const LaurentSeries& a, long max_quotients) {
    const FieldCtx* ctx = a.ctx();
    ContinuedFraction cf;
    if (a.is_zero_to_precision()) {
        cf.quotients.push_back(Poly::zero(ctx));
        cf.exact = true;
        return cf;
    }
    long low = std::min(0L, a.lead_exp() - a.stored_span() + 1);
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(a.lead_exp() - low) + 1,
                                     ctx->zero());
    for (long e = low; e <= a.lead_exp(); ++e)
        coeffs[static_cast<std::size_t>(e - low)] = a.coeff(e);
    Poly num(ctx, std::move(coeffs));
    Poly den = Poly::monomial(ctx->one(), -low);
    while (!den.is_zero() && static_cast<long>(cf.quotients.size()) < max_quotients) {
        auto [q, rem] = num.divmod(den);
        cf.quotients.push_back(q);
        num = den;
        den = rem;
    }
    cf.exact = den.is_zero();
    return cf;
}

}  // namespace

ContinuedFraction cf_expand(const LaurentSeries& a, long max_quotients) {
    if (max_quotients < 1)
        throw Error(ErrorKind::InvalidArgument, "max_quotients must be >= 1");
    if (a.min_exact() == LaurentSeries::kExact) return cf_expand_rational(a, max_quotients);

    ContinuedFraction cf;
    LaurentSeries cur = a;
    while (static_cast<long>(cf.quotients.size()) < max_quotients) {
        if (cur.min_exact() > 0) break;  // integer part no longer certified
        Poly quot = poly_part(cur);
        LaurentSeries frac = cur - LaurentSeries::from_poly(quot);
        if (frac.is_zero_to_precision()) {
            // Rational to the available precision.
            cf.quotients.push_back(quot);
            cf.exact = true;
            break;
        }
        cf.quotients.push_back(quot);
        // invert down to the provable floor
        cur = series_inv(frac, -(frac.min_exact() - 2 * frac.lead_exp()));
    }
    return cf;
}

LaurentSeries cf_to_series(const ContinuedFraction& cf, long order) {
    if (cf.quotients.empty())
        throw Error(ErrorKind::InvalidArgument, "continued fraction has no quotients");
    const FieldCtx* ctx = cf.quotients.front().ctx();
    Poly p_prev = Poly::one(ctx), q_prev = Poly::zero(ctx);
    Poly p = cf.quotients.front(), q = Poly::one(ctx);
    for (std::size_t n = 1; n < cf.quotients.size(); ++n) {
        Poly np = cf.quotients[n] * p + p_prev;
        Poly nq = cf.quotients[n] * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = np;
        q = nq;
    }
    return series_from_rational(RationalFunction(p, q), order);
}

std::vector<FieldElement> leading_coeffs(const ContinuedFraction& cf) {
    std::vector<FieldElement> out;
    out.reserve(cf.quotients.size());
    for (const auto& a : cf.quotients) out.push_back(a.leading());
    return out;
}

LaurentSeries omega_series(const FieldCtx* ctx, long order) {
    if (ctx->p() != 2)
        throw Error(ErrorKind::WrongCharacteristic, "omega lives in characteristic 2");
    if (order < 1) throw Error(ErrorKind::InvalidArgument, "order must be >= 1");
    // Newton for X^2 + TX + 1 starting at X = T; f' = T in characteristic 2,
    // so the step is x + (x^2 + Tx + 1)/T and the accurate window doubles
    // each round.
    LaurentSeries x = LaurentSeries::monomial(ctx->one(), 1);
    LaurentSeries one = LaurentSeries::monomial(ctx->one(), 0);
    long iters = 2;
    while ((1L << (iters - 1)) < order + 2) ++iters;
    for (long it = 0; it < iters; ++it) {
        LaurentSeries fx = frobenius_power(x, 2) + x.shifted(1) + one;
        x = (x + fx.shifted(-1)).truncated(-(order + 2));
    }
    return x.truncated(-order);
}

namespace {

// a(cT): coefficient at exponent e picks up a factor c^e
LaurentSeries substitute_scaled_t(const LaurentSeries& a, FieldElement c) {
    if (c.is_zero()) throw Error(ErrorKind::InvalidArgument, "substitution needs c != 0");
    if (a.is_zero_to_precision()) return a;
    const FieldCtx* ctx = a.ctx();
    long lead = a.lead_exp();
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(a.stored_span()));
    FieldElement c_inv = inv(c);
    for (long i = 0; i < a.stored_span(); ++i) {
        long e = lead - i;
        FieldElement factor = e >= 0 ? pow(c, e) : pow(c_inv, -e);
        out.push_back(a.coeff(e) * factor);
    }
    return LaurentSeries::make(ctx, lead, std::move(out), a.min_exact());
}

}  // namespace

bool quadratic_form_check(const PropOneSpec& spec, long order) {
    validate_spec(spec);
    if (spec.r != 2)
        throw Error(ErrorKind::WrongR, "the closed form applies to the r = 2 family");
    const FieldCtx* ctx = spec.field;

    long probe = std::max(64L, 4 * spec.ell + 8);
    Seq lambda = generate_thm2(spec_from_cf_params(spec), probe);
    auto period = detect_ultimate_periodicity(lambda, 0, 2);
    if (!period)
        throw Error(ErrorKind::NotPeriodic, "lambda sequence is not purely 2-periodic");

    FieldElement l1 = lambda[0];
    FieldElement l2 = lambda[1];
    long half_q = ctx->q() / 2;

    // left: alpha = [l1 T, l2 T, l1 T, ...]
    ContinuedFraction cf;
    Poly t1 = Poly::monomial(l1, 1), t2 = Poly::monomial(l2, 1);
    for (long n = 0; n < order + 8; ++n) cf.quotients.push_back(n % 2 == 0 ? t1 : t2);
    LaurentSeries lhs = cf_to_series(cf, order);

    // right: (l1/l2)^{q/2} omega((l1 l2)^{q/2} T)
    FieldElement c = pow(l1 * l2, half_q);
    FieldElement scale = pow(l1 * inv(l2), half_q);
    LaurentSeries rhs = substitute_scaled_t(omega_series(ctx, order + 2), c).scaled(scale);

    return lhs.truncated(-order).equals_to_precision(rhs.truncated(-order));
}

}  // namespace autoseq
