#pragma once

#include <string>
#include <vector>

#include "autoseq/field.hpp"

namespace autoseq {

/// Polynomial in F_q[T], coefficients ascending in powers of T. Canonical
/// form has no trailing zero coefficient; the zero polynomial is the empty
/// list (degree -1).
class Poly {
  public:
    Poly() : ctx_(nullptr) {}
    explicit Poly(const FieldCtx* ctx) : ctx_(ctx) {}
    Poly(const FieldCtx* ctx, std::vector<FieldElement> coeffs);

    static Poly zero(const FieldCtx* ctx) { return Poly(ctx); }
    static Poly one(const FieldCtx* ctx);
    static Poly constant(FieldElement c);
    /// c * T^e, e >= 0.
    static Poly monomial(FieldElement c, long e);

    const FieldCtx* ctx() const { return ctx_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement coeff(long e) const;
    FieldElement leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Quotient and remainder with deg(rem) < deg(div). Throws
    /// ZeroDenominator when dividing by zero.
    std::pair<Poly, Poly> divmod(const Poly& o) const;

    Poly monic() const;
    Poly pow_int(long n) const;

    /// Human-readable form like "w^2*T^3 + T + 1" with elements rendered in
    /// the c0,c1,... wire format.
    std::string to_string() const;

  private:
    void trim();
    const FieldCtx* ctx_;
    std::vector<FieldElement> coeffs_;
};

Poly gcd(Poly a, Poly b);

/// Element of F_q(T), kept normalized: gcd-reduced and monic denominator.
class RationalFunction {
  public:
    RationalFunction() = default;
    RationalFunction(Poly num, Poly den);

    static RationalFunction from_poly(Poly p);
    /// T^e for any integer e (negative e puts the power in the denominator).
    static RationalFunction t_power(const FieldCtx* ctx, long e);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction inverse() const;
    bool operator==(const RationalFunction& o) const;

  private:
    Poly num_;
    Poly den_;
};

}  // namespace autoseq
