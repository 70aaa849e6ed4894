#pragma once

#include <vector>

#include "autoseq/field.hpp"

namespace autoseq {

/// Parameters of the hyperquadratic recurrence family
///   lambda_{l+1+r(km+i)} = alpha_{i+1} * lambda_{km+i+1}^r   (0 <= i < k)
///   lambda_{l+1+rm+j}    = beta_j                            (1 <= j < r)
/// with r a power of the characteristic and k | r.
struct ThmTwoSpec {
    const FieldCtx* field = nullptr;
    long ell = 0;
    long r = 0;
    long k = 0;
    std::vector<FieldElement> lambda_init;  // lambda_1..lambda_ell
    std::vector<FieldElement> alpha;        // alpha_1..alpha_k, all nonzero
    std::vector<FieldElement> beta;         // beta_1..beta_{r-1}
};

/// Characteristic-2 continued fraction family: partial quotients
/// lambda_n T with the lambda sequence driven by (ell, r, eps1, eps2).
struct PropOneSpec {
    const FieldCtx* field = nullptr;
    long ell = 0;
    long r = 0;
    std::vector<FieldElement> lambda_init;  // nonzero
    FieldElement eps1;
    FieldElement eps2;
};

/// General exponent-gamma family: same index scheme as ThmTwoSpec but any
/// r >= 2, exponent gamma coprime with q-1, and beta depending on (i, j).
struct ThmFourSpec {
    const FieldCtx* field = nullptr;
    long ell = 0;
    long r = 0;
    long k = 0;
    long gamma = 1;
    std::vector<FieldElement> u_init;
    std::vector<FieldElement> alpha;
    std::vector<std::vector<FieldElement>> beta;  // beta[i][j-1], 0<=i<k, 1<=j<r
};

/// Checks all structural invariants; throws on the first violation with the
/// offending field named.
void validate_spec(const ThmTwoSpec& spec);
void validate_spec(const PropOneSpec& spec);
void validate_spec(const ThmFourSpec& spec);

/// k-periodic extension of the alpha list: alpha_n for n >= 1.
FieldElement alpha_periodic(const std::vector<FieldElement>& alpha, long n);

/// Maps the characteristic-2 continued fraction parameters onto the general
/// family: k = 2, alpha_1 = eps1^{-1}, alpha_2 = eps2^2 eps1^{-1},
/// beta_j = (eps2/eps1)^{(-1)^j}.
ThmTwoSpec spec_from_cf_params(const PropOneSpec& p1);

/// First n_terms values lambda_1..lambda_n (result[i] is the 1-indexed
/// term i+1).
std::vector<FieldElement> generate_thm2(const ThmTwoSpec& spec, long n_terms);
std::vector<FieldElement> generate_thm4(const ThmFourSpec& spec, long n_terms);

}  // namespace autoseq
