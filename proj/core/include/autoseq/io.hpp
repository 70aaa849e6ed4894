#pragma once

#include <memory>
#include <variant>

#include <json.hpp>

#include "autoseq/automata.hpp"
#include "autoseq/christol.hpp"
#include "autoseq/contfrac.hpp"
#include "autoseq/recurrences.hpp"

namespace autoseq {

using SpecVariant = std::variant<ThmTwoSpec, PropOneSpec, ThmFourSpec>;

/// A spec parsed from disk. The field context is owned here; the contained
/// spec points into it.
struct LoadedSpec {
    std::shared_ptr<const FieldCtx> field;
    std::string family;  // "thm2", "prop1", "thm4"
    SpecVariant spec;
};

LoadedSpec load_spec_json(const nlohmann::json& j);
LoadedSpec load_spec_file(const std::string& path);

Poly poly_from_json(const FieldCtx* ctx, const nlohmann::json& j);
RationalFunction rational_from_json(const FieldCtx* ctx, const nlohmann::json& j);
/// Reads {"A": {num, den}, "B": ..., "C": ...} with ascending coefficient
/// lists in the element wire format.
ThetaEquation equation_from_json(const FieldCtx* ctx, const nlohmann::json& j);

nlohmann::json field_to_json(const FieldCtx& ctx);
nlohmann::json poly_to_json(const Poly& p);
nlohmann::json rational_to_json(const RationalFunction& f);
nlohmann::json series_to_json(const LaurentSeries& s);
nlohmann::json certificate_to_json(const HyperquadraticCertificate& cert);
nlohmann::json prop3_to_json(const PropThreeReport& rep);
nlohmann::json kernel_to_json(const KernelResult& k);
nlohmann::json report_to_json(const AutomaticityReport& rep);
nlohmann::json cf_to_json(const ContinuedFraction& cf);

}  // namespace autoseq
