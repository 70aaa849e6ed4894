#include <fstream>
#include <iostream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "autoseq/io.hpp"

using nlohmann::json;
using namespace autoseq;

namespace {

std::vector<FieldElement> generate(const LoadedSpec& loaded, long terms) {
    return std::visit(
        [&](const auto& spec) {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, ThmTwoSpec>)
                return generate_thm2(spec, terms);
            else if constexpr (std::is_same_v<T, PropOneSpec>)
                return generate_thm2(spec_from_cf_params(spec), terms);
            else
                return generate_thm4(spec, terms);
        },
        loaded.spec);
}

ThmTwoSpec as_thm2(const LoadedSpec& loaded) {
    if (const auto* s = std::get_if<ThmTwoSpec>(&loaded.spec)) return *s;
    if (const auto* s = std::get_if<PropOneSpec>(&loaded.spec))
        return spec_from_cf_params(*s);
    throw Error(ErrorKind::InvalidArgument,
                "this command needs a thm2 or prop1 spec");
}

long default_base(const LoadedSpec& loaded) {
    if (const auto* s = std::get_if<ThmFourSpec>(&loaded.spec)) return s->r;
    return loaded.field->p();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + out_path);
    out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recurrent and automatic sequences over finite fields"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string out_path;
    std::string format = "text";
    long terms = 64;
    long order = 256;
    long horizon = 1024;
    long depth = 6;
    long max_quotients = 40;
    long base = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--spec", spec_path, "spec file (JSON)")->required();
        cmd->add_option("--out", out_path, "output file, default stdout");
        return cmd;
    };

    auto* gen = add_common(app.add_subcommand("gen", "generate sequence terms"));
    gen->add_option("--terms", terms)->check(CLI::PositiveNumber);
    gen->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::string equation_path;
    auto* certify = add_common(
        app.add_subcommand("certify", "verify the algebraic equation for theta"));
    certify->add_option("--order", order)->check(CLI::PositiveNumber);
    certify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    certify->add_option("--equation", equation_path,
                        "check this A/B/C (JSON) instead of the derived one");

    auto* prop3 = add_common(
        app.add_subcommand("prop3", "characteristic-2 periodicity dichotomy report"));
    prop3->add_option("--order", order)->check(CLI::PositiveNumber);
    prop3->add_option("--depth", depth, "partial-sum depth M")->check(CLI::PositiveNumber);

    auto* kernel = add_common(app.add_subcommand("kernel", "explore the r-kernel"));
    kernel->add_option("--horizon", horizon)->check(CLI::PositiveNumber);
    kernel->add_option("--base", base, "kernel base, default p (or r for thm4)");

    auto* dfao = add_common(
        app.add_subcommand("dfao-dot", "synthesize a DFAO and print GraphViz DOT"));
    dfao->add_option("--horizon", horizon)->check(CLI::PositiveNumber);
    dfao->add_option("--base", base);

    auto* cf = add_common(
        app.add_subcommand("cf", "continued fraction expansion of theta"));
    cf->add_option("--order", order)->check(CLI::PositiveNumber);
    cf->add_option("--quotients", max_quotients)->check(CLI::PositiveNumber);
    cf->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* report = add_common(
        app.add_subcommand("report", "automaticity evidence report"));
    report->add_option("--terms", terms)->check(CLI::PositiveNumber);
    report->add_option("--base", base);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        LoadedSpec loaded = load_spec_file(spec_path);

        if (gen->parsed()) {
            auto v = generate(loaded, terms);
            if (format == "json") {
                json arr = json::array();
                for (const auto& x : v) arr.push_back(x.to_string());
                emit(dump(json{{"field", field_to_json(*loaded.field)},
                               {"terms", arr}}),
                     out_path);
            } else {
                std::string text;
                for (const auto& x : v) text += x.to_string() + "\n";
                emit(text, out_path);
            }
        } else if (certify->parsed()) {
            ThetaEquation equation;
            bool have_equation = false;
            if (!equation_path.empty()) {
                std::ifstream in(equation_path);
                if (!in)
                    throw Error(ErrorKind::InvalidArgument,
                                "cannot open equation file: " + equation_path);
                json ej = json::parse(in);
                equation = equation_from_json(loaded.field.get(), ej);
                have_equation = true;
            }
            auto cert = verify_hyperquadratic(as_thm2(loaded), order,
                                              have_equation ? &equation : nullptr);
            if (format == "json") {
                emit(dump(certificate_to_json(cert)), out_path);
            } else {
                std::string text = "order checked: " +
                                   std::to_string(cert.order_checked) + "\n";
                text += std::string("theta residual: ") +
                        (cert.residual_theta ? "zero" : "NONZERO") + "\n";
                text += std::string("rho residual: ") +
                        (cert.residual_rho ? "zero" : "NONZERO") + "\n";
                emit(text, out_path);
            }
            if (!cert.passed()) {
                std::cerr << "verification failed: nonzero residual\n";
                return 2;
            }
        } else if (prop3->parsed()) {
            const auto* p1 = std::get_if<PropOneSpec>(&loaded.spec);
            if (!p1)
                throw Error(ErrorKind::InvalidArgument, "prop3 needs a prop1 spec");
            auto rep = prop3_report(*p1, depth, order);
            json j = prop3_to_json(rep);
            if (!rep.rational) {
                auto gw = rationality_gap_witness(rep, order);
                j["gap_witness"] =
                    json{{"ok", gw.ok}, {"gaps_checked", gw.gaps_checked}};
                if (!gw.ok) {
                    emit(dump(j), out_path);
                    std::cerr << "verification failed: gap witness\n";
                    return 2;
                }
            }
            emit(dump(j), out_path);
            if (!rep.u_cross_check || !rep.sigma_fixed_point || !rep.theta_identity) {
                std::cerr << "verification failed: prop3 identity\n";
                return 2;
            }
        } else if (kernel->parsed() || dfao->parsed() || report->parsed()) {
            long r = base > 0 ? base : default_base(loaded);
            if (report->parsed()) {
                auto v = generate(loaded, terms);
                emit(dump(report_to_json(automaticity_report(v, r))), out_path);
            } else {
                auto v = generate(loaded, r * horizon + r);
                auto k = kernel_explore(v, r, horizon);
                if (kernel->parsed()) {
                    emit(dump(kernel_to_json(k)), out_path);
                } else {
                    emit(export_dot(synthesize_dfao(k)), out_path);
                }
            }
        } else if (cf->parsed()) {
            auto theta = theta_series(as_thm2(loaded), order);
            auto result = cf_expand(theta, max_quotients);
            if (format == "json") {
                emit(dump(cf_to_json(result)), out_path);
            } else {
                std::string text;
                for (const auto& a : result.quotients) text += a.to_string() + "\n";
                if (!result.exact) text += "... (truncated at precision)\n";
                emit(text, out_path);
            }
        }
    } catch (const Error& e) {
        std::cerr << "error [" << error_kind_name(e.kind()) << "]: " << e.what()
                  << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
