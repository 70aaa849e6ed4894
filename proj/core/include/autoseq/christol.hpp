#pragma once

#include "autoseq/laurent.hpp"
#include "autoseq/recurrences.hpp"

namespace autoseq {

/// The explicit rational functions tying theta to its hyperquadratic
/// equation: theta = A + rho, rho = B + C rho^r.
struct ThetaEquation {
    RationalFunction A;
    RationalFunction B;
    RationalFunction C;
};

struct HyperquadraticCertificate {
    RationalFunction A;
    RationalFunction B;
    RationalFunction C;
    long order_checked = 0;
    /// theta - A agreed with the direct E-indexed summation of rho.
    bool residual_theta = false;
    /// rho - B - C rho^r vanished through the checked order.
    bool residual_rho = false;

    bool passed() const { return residual_theta && residual_rho; }
};

struct PropThreeReport {
    std::vector<FieldElement> u_coeffs;  // u_1..u_ell
    bool rational = false;               // all u_m == 0
    RationalFunction V;
    LaurentSeries U;                     // exact finite support
    long sigma_partial_depth = 0;        // M
    /// The coefficient formula for U agreed with U = CV + CB + (CV)^2.
    bool u_cross_check = false;
    /// alpha_{l+1} alpha_{l+2} beta_1^2 == 1.
    bool alpha_beta_relation = false;
    /// sigma_M = U + sigma_M^2 through the gap-limited window.
    bool sigma_fixed_point = false;
    /// theta = A + V + C^{-1} sigma_M through min(order, gap bound).
    bool theta_identity = false;
    long theta_matched_through = 0;  // lowest exponent the identity covered
};

struct GapWitness {
    bool ok = false;
    int gaps_checked = 0;
};

/// theta = sum_{n>=1} lambda_n T^{-n}, exact through exponent -order.
LaurentSeries theta_series(const ThmTwoSpec& spec, long order);

/// The A, B, C of the hyperquadratic identity, as normalized rational
/// functions.
ThetaEquation compute_abc(const ThmTwoSpec& spec);

/// Expands everything to the given order and checks both identities
/// coefficient by coefficient. Requires order >= r*ell. When an equation is
/// supplied it is checked instead of the derived one, so a wrong A, B or C
/// yields a certificate with failing residual flags.
HyperquadraticCertificate verify_hyperquadratic(const ThmTwoSpec& spec, long order,
                                                const ThetaEquation* equation = nullptr);

/// Full r = 2 periodicity analysis: the u_m coefficients, the series U,
/// the partial sum sigma_M, and the two fixed-point identities.
PropThreeReport prop3_report(const PropOneSpec& p1, long sigma_depth, long order);

/// Checks that sigma exhibits the widening zero gaps between consecutive
/// Frobenius blocks U^{2^m} and U^{2^{m+1}}, for every m whose gap fits
/// inside the given order. Throws NoNonzeroU on a rational report.
GapWitness rationality_gap_witness(const PropThreeReport& report, long order);

}  // namespace autoseq
