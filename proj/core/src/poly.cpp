#include "autoseq/poly.hpp"

namespace autoseq {

Poly::Poly(const FieldCtx* ctx, std::vector<FieldElement> coeffs)
    : ctx_(ctx), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.ctx() != ctx_)
            throw Error(ErrorKind::FieldMismatch, "polynomial coefficient from wrong field");
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::one(const FieldCtx* ctx) { return constant(ctx->one()); }

Poly Poly::constant(FieldElement c) {
    Poly p(c.ctx());
    if (!c.is_zero()) p.coeffs_ = {c};
    return p;
}

Poly Poly::monomial(FieldElement c, long e) {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative monomial exponent");
    Poly p(c.ctx());
    if (!c.is_zero()) {
        p.coeffs_.assign(static_cast<std::size_t>(e) + 1, c.ctx()->zero());
        p.coeffs_.back() = c;
    }
    return p;
}

FieldElement Poly::coeff(long e) const {
    if (e < 0 || e >= static_cast<long>(coeffs_.size())) return ctx_->zero();
    return coeffs_[static_cast<std::size_t>(e)];
}

FieldElement Poly::leading() const {
    if (is_zero()) throw Error(ErrorKind::InvalidArgument, "leading coefficient of zero");
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
    if (ctx_ != o.ctx_) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
    Poly r(ctx_);
    r.coeffs_.assign(std::max(coeffs_.size(), o.coeffs_.size()), ctx_->zero());
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] = coeff(static_cast<long>(i)) + o.coeff(static_cast<long>(i));
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (ctx_ != o.ctx_) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
    if (is_zero() || o.is_zero()) return Poly(ctx_);
    Poly r(ctx_);
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, ctx_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (ctx_ != o.ctx_) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!(coeffs_[i] == o.coeffs_[i])) return false;
    return true;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
    if (ctx_ != o.ctx_) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
    if (o.is_zero()) throw Error(ErrorKind::ZeroDenominator, "polynomial division by zero");
    Poly q(ctx_), r = *this;
    long dd = o.degree();
    FieldElement lead_inv = inv(o.leading());
    if (r.degree() >= dd)
        q.coeffs_.assign(static_cast<std::size_t>(r.degree() - dd) + 1, ctx_->zero());
    while (!r.is_zero() && r.degree() >= dd) {
        long shift = r.degree() - dd;
        FieldElement c = r.leading() * lead_inv;
        q.coeffs_[static_cast<std::size_t>(shift)] = c;
        for (long i = 0; i <= dd; ++i) {
            std::size_t k = static_cast<std::size_t>(shift + i);
            r.coeffs_[k] = r.coeffs_[k] - c * o.coeffs_[static_cast<std::size_t>(i)];
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    FieldElement li = inv(leading());
    Poly r = *this;
    for (auto& c : r.coeffs_) c = c * li;
    return r;
}

Poly Poly::pow_int(long n) const {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative polynomial power");
    Poly acc = Poly::one(ctx_), base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (long e = degree(); e >= 0; --e) {
        FieldElement c = coeff(e);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        bool unit = c == ctx_->one();
        if (!unit || e == 0) out += "(" + c.to_string() + ")";
        if (e > 0) {
            if (!unit) out += "*";
            out += "T";
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.ctx() != den_.ctx())
        throw Error(ErrorKind::FieldMismatch, "rational function parts over different fields");
    if (den_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one(den_.ctx());
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    FieldElement li = inv(den_.leading());
    Poly scale = Poly::constant(li);
    num_ = num_ * scale;
    den_ = den_ * scale;
}

RationalFunction RationalFunction::from_poly(Poly p) {
    const FieldCtx* ctx = p.ctx();
    return RationalFunction(std::move(p), Poly::one(ctx));
}

RationalFunction RationalFunction::t_power(const FieldCtx* ctx, long e) {
    if (e >= 0) return from_poly(Poly::monomial(ctx->one(), e));
    return RationalFunction(Poly::one(ctx), Poly::monomial(ctx->one(), -e));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational function");
    return RationalFunction(den_, num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

}  // namespace autoseq
