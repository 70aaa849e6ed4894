#include "autoseq/laurent.hpp"

#include <algorithm>

namespace autoseq {

namespace {
long clamp_me(long v) {
    return std::max(v, LaurentSeries::kExact);
}
}  // namespace

void LaurentSeries::normalize() {
    // stored coefficients below the precision floor are meaningless
    while (!coeffs_.empty() &&
           lead_ - static_cast<long>(coeffs_.size()) + 1 < min_exact_)
        coeffs_.pop_back();
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    while (!coeffs_.empty() && coeffs_.front().is_zero()) {
        coeffs_.erase(coeffs_.begin());
        --lead_;
    }
    if (coeffs_.empty()) lead_ = min_exact_;
}

LaurentSeries LaurentSeries::zero(const FieldCtx* ctx) {
    LaurentSeries s;
    s.ctx_ = ctx;
    s.min_exact_ = kExact;
    s.lead_ = kExact;
    return s;
}

LaurentSeries LaurentSeries::zero_to(const FieldCtx* ctx, long min_exact) {
    LaurentSeries s = zero(ctx);
    s.min_exact_ = min_exact;
    s.lead_ = min_exact;
    return s;
}

LaurentSeries LaurentSeries::from_poly(const Poly& p) {
    LaurentSeries s = zero(p.ctx());
    if (p.is_zero()) return s;
    s.lead_ = p.degree();
    s.coeffs_.assign(p.coeffs().rbegin(), p.coeffs().rend());
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::monomial(FieldElement c, long e) {
    LaurentSeries s = zero(c.ctx());
    if (c.is_zero()) return s;
    s.lead_ = e;
    s.coeffs_ = {c};
    return s;
}

LaurentSeries LaurentSeries::make(const FieldCtx* ctx, long lead,
                                  std::vector<FieldElement> coeffs, long min_exact) {
    LaurentSeries s;
    s.ctx_ = ctx;
    s.lead_ = lead;
    s.coeffs_ = std::move(coeffs);
    s.min_exact_ = min_exact;
    s.normalize();
    return s;
}

long LaurentSeries::lead_exp() const {
    if (coeffs_.empty())
        throw Error(ErrorKind::ZeroSeries, "lead exponent of a zero series");
    return lead_;
}

long LaurentSeries::prec() const {
    if (min_exact_ == kExact) return std::numeric_limits<long>::max() / 4;
    return 1 - min_exact_;
}

FieldElement LaurentSeries::coeff(long e) const {
    if (e < min_exact_)
        throw Error(ErrorKind::PrecisionTooLow,
                    "coefficient below the series precision floor");
    if (coeffs_.empty() || e > lead_) return ctx_->zero();
    long idx = lead_ - e;
    if (idx >= static_cast<long>(coeffs_.size())) return ctx_->zero();
    return coeffs_[static_cast<std::size_t>(idx)];
}

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.ctx() != b.ctx())
        throw Error(ErrorKind::FieldMismatch, "series over different fields");
    long me = std::max(a.min_exact(), b.min_exact());
    if (a.is_zero_to_precision() && b.is_zero_to_precision()) {
        if (me == LaurentSeries::kExact) return LaurentSeries::zero(a.ctx());
        return LaurentSeries::zero_to(a.ctx(), me);
    }
    long top = std::numeric_limits<long>::min();
    long bottom = std::numeric_limits<long>::max();
    if (!a.is_zero_to_precision()) {
        top = std::max(top, a.lead_exp());
        bottom = std::min(bottom, a.lead_exp() - a.stored_span() + 1);
    }
    if (!b.is_zero_to_precision()) {
        top = std::max(top, b.lead_exp());
        bottom = std::min(bottom, b.lead_exp() - b.stored_span() + 1);
    }
    if (me != LaurentSeries::kExact) bottom = std::max(bottom, me);
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(std::max(0L, top - bottom + 1)));
    for (long e = top; e >= bottom; --e) out.push_back(a.coeff(e) + b.coeff(e));
    return LaurentSeries::make(a.ctx(), top, std::move(out), me);
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    return series_add(*this, o);
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
    return series_add(*this, o.scaled(-(ctx_->one())));
}

LaurentSeries LaurentSeries::scaled(FieldElement c) const {
    if (c.ctx() != ctx_)
        throw Error(ErrorKind::FieldMismatch, "scalar from different field");
    if (c.is_zero()) return zero(ctx_);
    LaurentSeries r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::shifted(long k) const {
    LaurentSeries r = *this;
    r.lead_ += k;
    if (r.min_exact_ != kExact) r.min_exact_ += k;
    if (r.coeffs_.empty()) r.lead_ = r.min_exact_;
    return r;
}

LaurentSeries LaurentSeries::truncated(long new_min_exact) const {
    LaurentSeries r = *this;
    r.min_exact_ = std::max(r.min_exact_, new_min_exact);
    r.normalize();
    return r;
}

bool LaurentSeries::equals_to_precision(const LaurentSeries& o) const {
    return (*this - o).is_zero_to_precision();
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.ctx() != b.ctx())
        throw Error(ErrorKind::FieldMismatch, "series over different fields");
    const FieldCtx* ctx = a.ctx();
    bool az = a.is_zero_to_precision(), bz = b.is_zero_to_precision();
    if (az && a.min_exact() == LaurentSeries::kExact) return LaurentSeries::zero(ctx);
    if (bz && b.min_exact() == LaurentSeries::kExact) return LaurentSeries::zero(ctx);
    if (az || bz) {
        long me = clamp_me(az ? (bz ? a.min_exact() + b.min_exact()
                                    : a.min_exact() + b.lead_exp())
                              : b.min_exact() + a.lead_exp());
        return LaurentSeries::zero_to(ctx, me);
    }
    long la = a.lead_exp(), lb = b.lead_exp();
    long me;
    if (a.min_exact() == LaurentSeries::kExact && b.min_exact() == LaurentSeries::kExact)
        me = LaurentSeries::kExact;
    else
        me = clamp_me(std::max(
            a.min_exact() == LaurentSeries::kExact ? LaurentSeries::kExact
                                                   : a.min_exact() + lb,
            b.min_exact() == LaurentSeries::kExact ? LaurentSeries::kExact
                                                   : b.min_exact() + la));
    // stored windows, pre-truncated so we never compute coefficients that
    // would be discarded anyway
    long lo_a = la - a.stored_span() + 1;
    long lo_b = lb - b.stored_span() + 1;
    if (me != LaurentSeries::kExact) {
        lo_a = std::max(lo_a, me - lb);
        lo_b = std::max(lo_b, me - la);
    }
    long na = la - lo_a + 1, nb = lb - lo_b + 1;
    long top = la + lb, bottom = lo_a + lo_b;
    std::vector<FieldElement> out(static_cast<std::size_t>(top - bottom + 1),
                                  ctx->zero());
    for (long i = 0; i < na; ++i) {
        FieldElement ca = a.coeff(la - i);
        if (ca.is_zero()) continue;
        for (long j = 0; j < nb; ++j) {
            FieldElement cb = b.coeff(lb - j);
            if (cb.is_zero()) continue;
            out[static_cast<std::size_t>(i + j)] =
                out[static_cast<std::size_t>(i + j)] + ca * cb;
        }
    }
    return LaurentSeries::make(ctx, top, std::move(out), me);
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    return series_mul(*this, o);
}

LaurentSeries series_inv(const LaurentSeries& a, long order) {
    if (a.is_zero_to_precision())
        throw Error(ErrorKind::ZeroSeries, "inverse of a zero series");
    const FieldCtx* ctx = a.ctx();
    long la = a.lead_exp();
    long me_t = a.min_exact() == LaurentSeries::kExact
                    ? -order
                    : std::max(-order, a.min_exact() - 2 * la);
    long jmax = std::max(0L, -la - me_t);
    FieldElement c0_inv = inv(a.coeff(la));
    std::vector<FieldElement> b(static_cast<std::size_t>(jmax) + 1, ctx->zero());
    b[0] = c0_inv;
    for (long j = 1; j <= jmax; ++j) {
        FieldElement acc = ctx->zero();
        for (long i = 1; i <= j; ++i) {
            long e = la - i;
            if (e < a.min_exact()) break;
            FieldElement ai = a.coeff(e);
            if (ai.is_zero()) continue;
            acc = acc + ai * b[static_cast<std::size_t>(j - i)];
        }
        b[static_cast<std::size_t>(j)] = -(c0_inv * acc);
    }
    return LaurentSeries::make(ctx, -la, std::move(b), me_t);
}

LaurentSeries series_from_rational(const RationalFunction& f, long order) {
    const FieldCtx* ctx = f.num().ctx();
    if (f.den().is_zero())
        throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
    if (f.num().is_zero()) return LaurentSeries::zero(ctx);
    LaurentSeries num = LaurentSeries::from_poly(f.num());
    LaurentSeries den_inv =
        series_inv(LaurentSeries::from_poly(f.den()), order + std::max(0L, f.num().degree()));
    return series_mul(num, den_inv).truncated(-order);
}

LaurentSeries frobenius_power(const LaurentSeries& a, long r) {
    const FieldCtx* ctx = a.ctx();
    long p = ctx->p();
    long check = r;
    if (check < 1) throw Error(ErrorKind::NotCharPower, "r must be a positive power of p");
    while (check > 1) {
        if (check % p != 0)
            throw Error(ErrorKind::NotCharPower, "r is not a power of the characteristic");
        check /= p;
    }
    long me = a.min_exact() == LaurentSeries::kExact ? LaurentSeries::kExact
                                                     : r * (a.min_exact() - 1) + 1;
    if (a.is_zero_to_precision()) {
        if (a.min_exact() == LaurentSeries::kExact) return LaurentSeries::zero(ctx);
        return LaurentSeries::zero_to(ctx, me);
    }
    long la = a.lead_exp();
    long span = a.stored_span();
    std::vector<FieldElement> out(static_cast<std::size_t>((span - 1) * r) + 1,
                                  ctx->zero());
    for (long i = 0; i < span; ++i) {
        FieldElement c = a.coeff(la - i);
        if (!c.is_zero()) out[static_cast<std::size_t>(i * r)] = pow(c, r);
    }
    return LaurentSeries::make(ctx, r * la, std::move(out), me);
}

Poly poly_part(const LaurentSeries& a) {
    const FieldCtx* ctx = a.ctx();
    if (a.min_exact() > 0)
        throw Error(ErrorKind::PrecisionTooLow,
                    "series precision does not reach exponent 0");
    if (a.is_zero_to_precision() || a.lead_exp() < 0) return Poly::zero(ctx);
    std::vector<FieldElement> c(static_cast<std::size_t>(a.lead_exp()) + 1, ctx->zero());
    for (long e = 0; e <= a.lead_exp(); ++e) c[static_cast<std::size_t>(e)] = a.coeff(e);
    return Poly(ctx, std::move(c));
}

std::string LaurentSeries::to_string() const {
    if (coeffs_.empty()) return "0 (+ O(T^" + std::to_string(min_exact_ - 1) + "))";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        long e = lead_ - static_cast<long>(i);
        out += "(" + coeffs_[i].to_string() + ")";
        if (e != 0) out += "T^" + std::to_string(e);
    }
    if (min_exact_ != kExact) out += " + O(T^" + std::to_string(min_exact_ - 1) + ")";
    return out;
}

}  // namespace autoseq
