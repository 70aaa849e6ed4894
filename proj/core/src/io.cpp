#include "autoseq/io.hpp"

#include <fstream>

namespace autoseq {

namespace {

using nlohmann::json;

FieldElement parse_element(const FieldCtx* ctx, const json& j) {
    if (j.is_number_integer()) return ctx->from_coords({j.get<long>()});
    if (j.is_string()) return ctx->parse(j.get<std::string>());
    throw Error(ErrorKind::InvalidArgument,
                "field elements must be integers or \"c0,c1,...\" strings");
}

std::vector<FieldElement> parse_elements(const FieldCtx* ctx, const json& j) {
    if (!j.is_array())
        throw Error(ErrorKind::InvalidArgument, "expected an array of field elements");
    std::vector<FieldElement> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(parse_element(ctx, e));
    return out;
}

long require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw Error(ErrorKind::InvalidArgument,
                    std::string("missing or non-integer field: ") + key);
    return j[key].get<long>();
}

}  // namespace

LoadedSpec load_spec_json(const json& j) {
    if (!j.contains("field") || !j["field"].is_object())
        throw Error(ErrorKind::InvalidArgument, "spec needs a field object {p, s, modulus?}");
    const json& fj = j["field"];
    long p = require_int(fj, "p");
    long s = require_int(fj, "s");
    std::vector<long> modulus;
    if (fj.contains("modulus")) modulus = fj["modulus"].get<std::vector<long>>();
    auto field = FieldCtx::make(p, static_cast<int>(s), modulus);
    const FieldCtx* ctx = field.get();

    std::string family = j.value("family", "");
    LoadedSpec loaded;
    loaded.field = field;
    loaded.family = family;

    if (family == "thm2") {
        ThmTwoSpec spec;
        spec.field = ctx;
        spec.ell = require_int(j, "ell");
        spec.r = require_int(j, "r");
        spec.k = require_int(j, "k");
        spec.lambda_init = parse_elements(ctx, j.at("lambda_init"));
        spec.alpha = parse_elements(ctx, j.at("alpha"));
        spec.beta = parse_elements(ctx, j.at("beta"));
        validate_spec(spec);
        loaded.spec = spec;
    } else if (family == "prop1") {
        PropOneSpec spec;
        spec.field = ctx;
        spec.ell = require_int(j, "ell");
        spec.r = require_int(j, "r");
        spec.lambda_init = parse_elements(ctx, j.at("lambda_init"));
        spec.eps1 = parse_element(ctx, j.at("eps1"));
        spec.eps2 = parse_element(ctx, j.at("eps2"));
        validate_spec(spec);
        loaded.spec = spec;
    } else if (family == "thm4") {
        ThmFourSpec spec;
        spec.field = ctx;
        spec.ell = require_int(j, "ell");
        spec.r = require_int(j, "r");
        spec.k = require_int(j, "k");
        spec.gamma = require_int(j, "gamma");
        spec.u_init = parse_elements(ctx, j.at("u_init"));
        spec.alpha = parse_elements(ctx, j.at("alpha"));
        if (!j.at("beta").is_array())
            throw Error(ErrorKind::InvalidArgument, "thm4 beta must be an array of rows");
        for (const auto& row : j.at("beta"))
            spec.beta.push_back(parse_elements(ctx, row));
        validate_spec(spec);
        loaded.spec = spec;
    } else {
        throw Error(ErrorKind::InvalidArgument,
                    "family must be one of thm2, prop1, thm4");
    }
    return loaded;
}

LoadedSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open spec file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("bad JSON: ") + e.what());
    }
    return load_spec_json(j);
}

Poly poly_from_json(const FieldCtx* ctx, const json& j) {
    return Poly(ctx, parse_elements(ctx, j));
}

RationalFunction rational_from_json(const FieldCtx* ctx, const json& j) {
    return RationalFunction(poly_from_json(ctx, j.at("num")),
                            poly_from_json(ctx, j.at("den")));
}

ThetaEquation equation_from_json(const FieldCtx* ctx, const json& j) {
    return ThetaEquation{rational_from_json(ctx, j.at("A")),
                         rational_from_json(ctx, j.at("B")),
                         rational_from_json(ctx, j.at("C"))};
}

json field_to_json(const FieldCtx& ctx) {
    return json{{"p", ctx.p()}, {"s", ctx.s()}, {"modulus", ctx.modulus()}};
}

json poly_to_json(const Poly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
    return coeffs;
}

json rational_to_json(const RationalFunction& f) {
    return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

json series_to_json(const LaurentSeries& s) {
    json coeffs = json::array();
    if (!s.is_zero_to_precision()) {
        for (long i = 0; i < s.stored_span(); ++i)
            coeffs.push_back(s.coeff(s.lead_exp() - i).to_string());
    }
    json out{{"coeffs", coeffs}};
    out["lead_exp"] = s.is_zero_to_precision() ? 0 : s.lead_exp();
    out["prec"] = s.min_exact() == LaurentSeries::kExact ? json(nullptr) : json(s.prec());
    return out;
}

json certificate_to_json(const HyperquadraticCertificate& cert) {
    return json{{"A", rational_to_json(cert.A)},
                {"B", rational_to_json(cert.B)},
                {"C", rational_to_json(cert.C)},
                {"order_checked", cert.order_checked},
                {"residual_theta", cert.residual_theta},
                {"residual_rho", cert.residual_rho}};
}

json prop3_to_json(const PropThreeReport& rep) {
    json u = json::array();
    for (const auto& c : rep.u_coeffs) u.push_back(c.to_string());
    json out{{"u_coeffs", u},
             {"rational", rep.rational},
             {"V", rational_to_json(rep.V)},
             {"U", series_to_json(rep.U)},
             {"sigma_partial_depth", rep.sigma_partial_depth},
             {"u_cross_check", rep.u_cross_check},
             {"alpha_beta_relation", rep.alpha_beta_relation},
             {"sigma_fixed_point", rep.sigma_fixed_point},
             {"theta_identity", rep.theta_identity},
             {"theta_matched_through", rep.theta_matched_through}};
    out["verdict"] = rep.rational ? "quadratic (purely periodic quotients)"
                                  : "cubic by periodicity dichotomy";
    return out;
}

json kernel_to_json(const KernelResult& k) {
    json trans = json::array();
    for (const auto& row : k.transitions) trans.push_back(row);
    return json{{"r", k.r},
                {"horizon", k.horizon},
                {"min_window", k.min_window},
                {"closed", k.closed},
                {"class_count", k.classes.size()},
                {"transitions", trans}};
}

json report_to_json(const AutomaticityReport& rep) {
    json rels = json::array();
    for (const auto& rel : rep.relations) {
        json sigma = json::array();
        for (const auto& [x, y] : rel.sigma)
            sigma.push_back(json::array({x.to_string(), y.to_string()}));
        rels.push_back(json{{"i", rel.i}, {"m", rel.m}, {"sigma", sigma}});
    }
    return json{{"r", rep.r},
                {"decimation_periodic", rep.decimation_periodic},
                {"nonperiodic_digit",
                 rep.nonperiodic_digit ? json(*rep.nonperiodic_digit) : json(nullptr)},
                {"relations", rels},
                {"shift_certificate", rep.shift_certificate},
                {"certificate_note", "horizon-bounded evidence, not a proof"},
                {"kernel_closed", rep.kernel_closed},
                {"class_count", rep.class_count}};
}

json cf_to_json(const ContinuedFraction& cf) {
    json quotients = json::array();
    for (const auto& a : cf.quotients) quotients.push_back(poly_to_json(a));
    return json{{"quotients", quotients}, {"exact", cf.exact}};
}

}  // namespace autoseq
