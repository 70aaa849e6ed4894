#include "autoseq/recurrences.hpp"

#include <numeric>

namespace autoseq {

namespace {

bool is_power_of(long r, long p) {
    if (r < p) return false;
    while (r > 1) {
        if (r % p != 0) return false;
        r /= p;
    }
    return true;
}

void check_common(const FieldCtx* field, long ell, long r, long k,
                  const std::vector<FieldElement>& alpha) {
    if (field == nullptr) throw Error(ErrorKind::InvalidArgument, "spec has no field");
    if (ell < 1) throw Error(ErrorKind::InvalidArgument, "ell must be >= 1");
    if (r < 2) throw Error(ErrorKind::InvalidArgument, "r must be >= 2");
    if (k < 1 || r % k != 0)
        throw Error(ErrorKind::KNotDividingR, "k does not divide r");
    if (static_cast<long>(alpha.size()) != k)
        throw Error(ErrorKind::InvalidArgument, "alpha must list k elements");
    for (const auto& a : alpha)
        if (a.is_zero()) throw Error(ErrorKind::ZeroAlpha, "alpha values must be nonzero");
}

}  // namespace

void validate_spec(const ThmTwoSpec& spec) {
    check_common(spec.field, spec.ell, spec.r, spec.k, spec.alpha);
    if (!is_power_of(spec.r, spec.field->p()))
        throw Error(ErrorKind::RNotCharPower, "r is not a power of the characteristic");
    if (static_cast<long>(spec.lambda_init.size()) != spec.ell)
        throw Error(ErrorKind::InvalidArgument, "lambda_init must list ell elements");
    if (static_cast<long>(spec.beta.size()) != spec.r - 1)
        throw Error(ErrorKind::InvalidArgument, "beta must list r-1 elements");
}

void validate_spec(const PropOneSpec& spec) {
    if (spec.field == nullptr) throw Error(ErrorKind::InvalidArgument, "spec has no field");
    if (spec.field->p() != 2)
        throw Error(ErrorKind::WrongCharacteristic,
                    "this family lives in characteristic 2");
    if (spec.ell < 1) throw Error(ErrorKind::InvalidArgument, "ell must be >= 1");
    if (!is_power_of(spec.r, 2))
        throw Error(ErrorKind::RNotCharPower, "r must be a power of 2");
    if (static_cast<long>(spec.lambda_init.size()) != spec.ell)
        throw Error(ErrorKind::InvalidArgument, "lambda_init must list ell elements");
    for (const auto& x : spec.lambda_init)
        if (x.is_zero())
            throw Error(ErrorKind::InvalidArgument, "lambda_init values must be nonzero");
    if (spec.eps1.is_zero() || spec.eps2.is_zero())
        throw Error(ErrorKind::InvalidArgument, "eps1, eps2 must be nonzero");
}

void validate_spec(const ThmFourSpec& spec) {
    check_common(spec.field, spec.ell, spec.r, spec.k, spec.alpha);
    if (spec.gamma < 1) throw Error(ErrorKind::InvalidArgument, "gamma must be >= 1");
    if (std::gcd(spec.gamma, spec.field->q() - 1) != 1)
        throw Error(ErrorKind::GammaNotCoprime, "gamma shares a factor with q-1");
    if (static_cast<long>(spec.u_init.size()) != spec.ell)
        throw Error(ErrorKind::InvalidArgument, "u_init must list ell elements");
    if (static_cast<long>(spec.beta.size()) != spec.k)
        throw Error(ErrorKind::InvalidArgument, "beta must have k rows");
    for (const auto& row : spec.beta)
        if (static_cast<long>(row.size()) != spec.r - 1)
            throw Error(ErrorKind::InvalidArgument, "beta rows must list r-1 elements");
}

FieldElement alpha_periodic(const std::vector<FieldElement>& alpha, long n) {
    long k = static_cast<long>(alpha.size());
    return alpha[static_cast<std::size_t>(((n - 1) % k + k) % k)];
}

ThmTwoSpec spec_from_cf_params(const PropOneSpec& p1) {
    validate_spec(p1);
    const FieldCtx* f = p1.field;
    FieldElement e1_inv = inv(p1.eps1);
    FieldElement ratio = p1.eps2 * e1_inv;  // eps2/eps1

    ThmTwoSpec spec;
    spec.field = f;
    spec.ell = p1.ell;
    spec.r = p1.r;
    spec.k = 2;
    spec.lambda_init = p1.lambda_init;
    spec.alpha = {e1_inv, p1.eps2 * p1.eps2 * e1_inv};
    spec.beta.reserve(static_cast<std::size_t>(p1.r - 1));
    FieldElement ratio_inv = inv(ratio);
    for (long j = 1; j < p1.r; ++j)
        spec.beta.push_back(j % 2 == 0 ? ratio : ratio_inv);  // (eps2/eps1)^{(-1)^j}
    validate_spec(spec);
    return spec;
}

namespace {

// Single forward pass shared by both families; all dependency indices
// point strictly backward (m'+1 < l+1+r*m').
template <typename ECase, typename FCase>
std::vector<FieldElement> generate(const FieldCtx* field, long ell,
                                   const std::vector<FieldElement>& init, long r,
                                   long n_terms, ECase e_case, FCase f_case) {
    if (n_terms < 1) throw Error(ErrorKind::InvalidArgument, "n_terms must be >= 1");
    std::vector<FieldElement> v;
    v.reserve(static_cast<std::size_t>(n_terms));
    for (long n = 1; n <= n_terms; ++n) {
        if (n <= ell) {
            v.push_back(init[static_cast<std::size_t>(n - 1)]);
            continue;
        }
        long d = n - ell - 1;  // n = ell + 1 + r*mq + j
        long mq = d / r;
        long j = d % r;
        if (j == 0)
            v.push_back(e_case(mq, v[static_cast<std::size_t>(mq)]));
        else
            v.push_back(f_case(mq, j));
    }
    (void)field;
    return v;
}

}  // namespace

std::vector<FieldElement> generate_thm2(const ThmTwoSpec& spec, long n_terms) {
    validate_spec(spec);
    return generate(
        spec.field, spec.ell, spec.lambda_init, spec.r, n_terms,
        [&](long mq, const FieldElement& dep) {
            long i = mq % spec.k;
            return spec.alpha[static_cast<std::size_t>(i)] * pow(dep, spec.r);
        },
        [&](long, long j) { return spec.beta[static_cast<std::size_t>(j - 1)]; });
}

std::vector<FieldElement> generate_thm4(const ThmFourSpec& spec, long n_terms) {
    validate_spec(spec);
    return generate(
        spec.field, spec.ell, spec.u_init, spec.r, n_terms,
        [&](long mq, const FieldElement& dep) {
            long i = mq % spec.k;
            return spec.alpha[static_cast<std::size_t>(i)] * pow(dep, spec.gamma);
        },
        [&](long mq, long j) {
            long i = mq % spec.k;
            return spec.beta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
        });
}

}  // namespace autoseq
