#pragma once

#include <limits>
#include <string>
#include <vector>

#include "autoseq/poly.hpp"

namespace autoseq {

/// Truncated formal Laurent series in T^{-1} over F_q, with explicit
/// precision bookkeeping.
///
/// A series knows its coefficients for every exponent e >= min_exact();
/// exponents below that are unknown (lost to truncation). Exponents above
/// the stored window are exact zeros. Series built from polynomials are
/// exact everywhere and carry the kExact sentinel.
///
/// The spec-facing "prec" field (all exponents > -prec exact) is
/// 1 - min_exact().
class LaurentSeries {
  public:
    static constexpr long kExact = std::numeric_limits<long>::min() / 4;

    LaurentSeries() : ctx_(nullptr), lead_(0), min_exact_(kExact) {}

    /// Exact zero series.
    static LaurentSeries zero(const FieldCtx* ctx);
    /// Zero up to the given precision floor.
    static LaurentSeries zero_to(const FieldCtx* ctx, long min_exact);
    static LaurentSeries from_poly(const Poly& p);
    /// c * T^e.
    static LaurentSeries monomial(FieldElement c, long e);
    /// Coefficients for exponents lead, lead-1, ... (descending); exact down
    /// to min_exact (coefficients between the last entry and min_exact are
    /// exact zeros).
    static LaurentSeries make(const FieldCtx* ctx, long lead,
                              std::vector<FieldElement> coeffs, long min_exact);

    const FieldCtx* ctx() const { return ctx_; }
    bool is_zero_to_precision() const { return coeffs_.empty(); }
    /// Highest exponent with nonzero coefficient. Invalid for a zero series.
    long lead_exp() const;
    long min_exact() const { return min_exact_; }
    long prec() const;
    bool is_exact_at(long e) const { return e >= min_exact_; }
    /// Number of stored coefficients (window width).
    long stored_span() const { return static_cast<long>(coeffs_.size()); }

    /// Coefficient at exponent e. Throws PrecisionTooLow below min_exact().
    FieldElement coeff(long e) const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    /// Cauchy product truncated to the provable precision.
    LaurentSeries operator*(const LaurentSeries& o) const;
    bool equals_to_precision(const LaurentSeries& o) const;

    LaurentSeries scaled(FieldElement c) const;
    /// Multiplication by T^k.
    LaurentSeries shifted(long k) const;
    /// Forgets coefficients below the given exponent.
    LaurentSeries truncated(long new_min_exact) const;

    std::string to_string() const;

  private:
    void normalize();

    const FieldCtx* ctx_;
    long lead_;                          // exponent of coeffs_[0]
    std::vector<FieldElement> coeffs_;   // descending exponents
    long min_exact_;
};

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);

/// Multiplicative inverse with coefficients computed down to exponent
/// -order (or the provable floor, whichever is shallower). Throws
/// ZeroSeries when a is zero up to its precision.
LaurentSeries series_inv(const LaurentSeries& a, long order);

/// Expansion of num/den as a series in T^{-1}, exact through exponent
/// -order.
LaurentSeries series_from_rational(const RationalFunction& f, long order);

/// (sum c_n T^n)^r = sum c_n^r T^{rn} for r a power of the characteristic.
/// Throws NotCharPower otherwise.
LaurentSeries frobenius_power(const LaurentSeries& a, long r);

/// The sum of terms with exponent >= 0.
Poly poly_part(const LaurentSeries& a);

}  // namespace autoseq
