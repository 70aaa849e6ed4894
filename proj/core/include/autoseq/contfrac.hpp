#pragma once

#include "autoseq/automata.hpp"
#include "autoseq/laurent.hpp"
#include "autoseq/recurrences.hpp"

namespace autoseq {

/// Continued fraction over F_q(T): alpha = [a_1, a_2, ...] with polynomial
/// partial quotients, all of positive degree except perhaps the first.
struct ContinuedFraction {
    std::vector<Poly> quotients;
    /// True when the expansion terminated, i.e. the input was rational to
    /// its precision.
    bool exact = false;
};

/// Expands a series into partial quotients. A quotient is emitted only while
/// the fractional part's leading exponent is certified by the precision
/// field; the expansion truncates (exact = false) once precision runs out.
ContinuedFraction cf_expand(const LaurentSeries& a, long max_quotients);

/// Evaluates the finite continued fraction via the convergent recursion
/// p_n = a_n p_{n-1} + p_{n-2} and expands p_N/q_N through exponent -order.
LaurentSeries cf_to_series(const ContinuedFraction& cf, long order);

/// u(n) = leading coefficient of a_n.
std::vector<FieldElement> leading_coeffs(const ContinuedFraction& cf);

/// The golden-ratio analogue omega = [T, T, T, ...], the root of
/// X^2 + TX + 1 with leading term T, over a characteristic-2 field.
/// Computed by Newton iteration; exact through exponent -order.
LaurentSeries omega_series(const FieldCtx* ctx, long order);

/// Checks the closed form alpha(T) = (l1/l2)^{q/2} omega((l1 l2)^{q/2} T)
/// for a purely 2-periodic quotient sequence [l1 T, l2 T, ...]. Throws
/// NotPeriodic when the spec's lambda sequence is not purely 2-periodic.
bool quadratic_form_check(const PropOneSpec& spec, long order);

}  // namespace autoseq
