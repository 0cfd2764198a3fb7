#include "flateta/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "flateta/dedekind.hpp"
#include "flateta/descriptor.hpp"
#include "flateta/errors.hpp"
#include "flateta/eta.hpp"
#include "flateta/gauss_bonnet.hpp"

namespace flateta::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

struct Options {
    bool json = false;
    bool quiet = false;
};

ordered_json envelope(const std::string& command) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

std::string fraction(const Rational& r) { return r.fraction_string(); }

ordered_json eta_json(const EtaResult& eta) {
    ordered_json fibers = ordered_json::array();
    for (const auto& [fiber, sum] : eta.fiber_contributions) {
        fibers.push_back({{"alpha", fiber.alpha}, {"beta", fiber.beta}, {"dedekind_sum", fraction(sum)}});
    }
    return {{"value", fraction(eta.value)}, {"integral", eta.integral}, {"fibers", fibers}};
}

void print_breakdown(std::ostream& out, const EtaResult& eta) {
    for (const auto& [fiber, sum] : eta.fiber_contributions) {
        out << "  fiber (" << fiber.alpha << "," << fiber.beta << "): s(" << fiber.beta << "," << fiber.alpha
            << ") = " << sum << "\n";
    }
    out << "  eta = 4 * sum = " << eta.value << (eta.integral ? " (integer)" : " (not an integer)") << "\n";
}

int cmd_eta(const std::string& descriptor, const Options& opt, std::ostream& out) {
    const SeifertData s = parse_descriptor(descriptor);
    const EtaResult eta = eta_flat(s);
    if (opt.json) {
        ordered_json j = envelope("eta");
        j["descriptor"] = render_descriptor(s);
        j["eta"] = eta_json(eta);
        out << j.dump() << "\n";
        return kSuccess;
    }
    out << eta.value << "\n";
    if (!opt.quiet) print_breakdown(out, eta);
    return kSuccess;
}

int cmd_obstruct(const std::string& descriptor, const Options& opt, std::ostream& out, std::ostream& err) {
    const SeifertData s = parse_descriptor(descriptor);
    const ObstructionReport r = obstruction_report(s);
    if (opt.json) {
        ordered_json j = envelope("obstruct");
        j["descriptor"] = render_descriptor(s);
        j["eta"] = eta_json(r.eta);
        j["geodesic_boundary_obstructed"] = r.geodesic_boundary_obstructed;
        j["one_cusped_cross_section_obstructed"] = r.one_cusped_cross_section_obstructed;
        j["multi_cusped_cross_section_obstructed"] = false;
        j["predicted_signature"] =
            r.predicted_signature ? ordered_json(*r.predicted_signature) : ordered_json(nullptr);
        j["pontryagin_term"] = fraction(r.pontryagin_term);
        j["notes"] = r.notes;
        out << j.dump() << "\n";
    } else {
        auto verdict = [](bool obstructed) { return obstructed ? "obstructed" : "not obstructed"; };
        out << "eta = " << r.eta.value << (r.eta.integral ? " (integer)" : " (not an integer)") << "\n";
        out << "totally geodesic boundary of a hyperbolic 4-manifold: " << verdict(r.geodesic_boundary_obstructed)
            << "\n";
        out << "cusp cross-section of a one-cusped hyperbolic 4-manifold: "
            << verdict(r.one_cusped_cross_section_obstructed) << "\n";
        out << "cusp cross-section of a multi-cusped hyperbolic 4-manifold: not obstructed\n";
        out << "predicted signature: ";
        if (r.predicted_signature)
            out << *r.predicted_signature << "\n";
        else
            out << "none\n";
        if (!opt.quiet) {
            print_breakdown(out, r.eta);
            for (const auto& note : r.notes) out << "  note: " << note << "\n";
        }
    }
    if (!r.predicted_signature) {
        // Re-raises the refusal so the caller sees exit code 3.
        try {
            predicted_signature(r.eta.value);
        } catch (const ObstructionError& e) {
            if (opt.json) {
                err << ordered_json{{"schema", kSchemaVersion}, {"error", {{"kind", "obstruction"}, {"message", e.what()}}}}
                           .dump()
                    << "\n";
            } else {
                err << "obstruction: " << e.what() << "\n";
            }
            return kObstructed;
        }
    }
    return kSuccess;
}

int cmd_dedekind(std::int64_t beta, std::int64_t alpha, const Options& opt, std::ostream& out) {
    const Rational by_sawtooth = dedekind_sawtooth(beta, alpha);
    const Rational by_cotangent = dedekind_cot(beta, alpha);
    if (by_sawtooth != by_cotangent)
        throw InternalError("Dedekind sum evaluations disagree: sawtooth " + by_sawtooth.str() + ", cotangent " +
                            by_cotangent.str());
    if (opt.json) {
        ordered_json j = envelope("dedekind");
        j["beta"] = beta;
        j["alpha"] = alpha;
        j["sawtooth"] = fraction(by_sawtooth);
        j["cotangent"] = fraction(by_cotangent);
        out << j.dump() << "\n";
        return kSuccess;
    }
    out << by_cotangent << "\n";
    if (!opt.quiet) {
        out << "  sawtooth form:  " << by_sawtooth << "\n";
        out << "  cotangent form: " << by_cotangent << "\n";
    }
    return kSuccess;
}

int cmd_catalog(const Options& opt, std::ostream& out) {
    const auto entries = flat_catalog();
    if (opt.json) {
        ordered_json list = ordered_json::array();
        for (const auto& e : entries) {
            list.push_back({{"name", e.name},
                            {"holonomy", e.holonomy},
                            {"descriptor", e.seifert ? ordered_json(render_descriptor(*e.seifert)) : ordered_json(nullptr)},
                            {"eta", e.eta ? ordered_json(fraction(*e.eta)) : ordered_json(nullptr)},
                            {"eta_integral", e.eta_integral},
                            {"note", e.note}});
        }
        ordered_json j = envelope("catalog");
        j["entries"] = list;
        out << j.dump() << "\n";
        return kSuccess;
    }
    for (const auto& e : entries) {
        out << e.name << "  holonomy " << e.holonomy << "  "
            << (e.seifert ? render_descriptor(*e.seifert) : std::string("-")) << "  eta = "
            << (e.eta ? e.eta->str() : std::string("?")) << (e.eta_integral ? "  integral" : "  non-integral")
            << "\n";
        if (!opt.quiet) out << "    " << e.note << "\n";
    }
    return kSuccess;
}

ordered_json volume_json(const VolumeValue& v) {
    return {{"coefficient", fraction(v.coefficient)}, {"approx", v.approx}};
}

int cmd_gauss_bonnet(std::optional<std::int64_t> chi, std::optional<double> volume, double tol, const Options& opt,
                     std::ostream& out) {
    std::int64_t resolved = 0;
    if (chi) {
        resolved = *chi;
    } else {
        resolved = chi_from_volume(*volume, tol);
    }
    const VolumeValue v = volume_from_chi(resolved);
    const std::int64_t doubled = doubled_euler(resolved);
    if (opt.json) {
        ordered_json j = envelope("gauss-bonnet");
        if (volume) {
            j["input_volume"] = *volume;
            j["tolerance"] = tol;
        }
        j["chi"] = resolved;
        j["volume"] = volume_json(v);
        j["doubled_chi"] = doubled;
        out << j.dump() << "\n";
        return kSuccess;
    }
    if (opt.quiet) {
        out << (chi ? v.approx : std::to_string(resolved)) << "\n";
        return kSuccess;
    }
    out << "chi = " << resolved << "\n";
    out << "volume = " << v.coefficient << " * pi^2 ~ " << v.approx << "\n";
    out << "chi of the double = " << doubled << "\n";
    out << "lattice spacing " << lattice_spacing_text() << "\n";
    return kSuccess;
}

void report_error(std::ostream& err, const Options& opt, const std::string& kind, const std::string& message,
                  const ordered_json& extra = ordered_json::object()) {
    if (opt.json) {
        ordered_json e = {{"kind", kind}, {"message", message}};
        e.update(extra);
        err << ordered_json{{"schema", kSchemaVersion}, {"error", e}}.dump() << "\n";
    } else {
        err << "error: " << message << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    // --json is looked up before CLI11 runs so that usage errors honor it too.
    opt.json = std::find(args.begin(), args.end(), "--json") != args.end();

    CLI::App app{"Exact eta-invariants and bounding obstructions for flat 3-manifolds", "flateta"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", opt.json, "Structured output (one JSON object)");
    app.add_flag("--quiet,-q", opt.quiet, "Print only the headline result");

    std::string descriptor;
    auto* eta = app.add_subcommand("eta", "Exact eta-invariant with per-fiber breakdown");
    eta->add_option("descriptor", descriptor, "Seifert descriptor, e.g. 'S2;(2,1)(3,-1)(6,-1)'")->required();

    auto* obstruct = app.add_subcommand("obstruct", "Integrality obstructions and predicted signature");
    obstruct->add_option("descriptor", descriptor, "Seifert descriptor")->required();

    std::int64_t beta = 0, alpha = 0;
    auto* dedekind = app.add_subcommand("dedekind", "Dedekind sum s(beta, alpha) by both evaluation routes");
    dedekind->add_option("beta", beta)->required();
    dedekind->add_option("alpha", alpha)->required();

    auto* catalog = app.add_subcommand("catalog", "The orientable flat 3-manifolds");

    std::optional<std::int64_t> chi;
    std::optional<double> volume;
    double tol = 1e-6;
    auto* gb = app.add_subcommand("gauss-bonnet", "Volume <-> Euler characteristic of hyperbolic 4-manifolds");
    auto* chi_opt = gb->add_option("--chi", chi, "Euler characteristic");
    auto* vol_opt = gb->add_option("--volume", volume, "Volume");
    gb->add_option("--tol", tol, "Tolerance for --volume");
    chi_opt->excludes(vol_opt);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        report_error(err, opt, "usage", e.what());
        return kUsageError;
    }
    if (*gb && !chi && !volume) {
        report_error(err, opt, "usage", "gauss-bonnet needs one of --chi or --volume");
        return kUsageError;
    }

    try {
        if (*eta) return cmd_eta(descriptor, opt, out);
        if (*obstruct) return cmd_obstruct(descriptor, opt, out, err);
        if (*dedekind) return cmd_dedekind(beta, alpha, opt, out);
        if (*catalog) return cmd_catalog(opt, out);
        if (*gb) return cmd_gauss_bonnet(chi, volume, tol, opt, out);
    } catch (const SyntaxError& e) {
        report_error(err, opt, "syntax", e.what(), {{"offset", e.offset()}});
        return kUsageError;
    } catch (const ValidationError& e) {
        report_error(err, opt, "validation", e.what(), {{"field", e.field()}});
        return kDomainError;
    } catch (const NotFlatError& e) {
        report_error(err, opt, "not_flat", e.what());
        return kDomainError;
    } catch (const DomainError& e) {
        report_error(err, opt, "domain", e.what());
        return kDomainError;
    } catch (const ObstructionError& e) {
        report_error(err, opt, "obstruction", e.what());
        return kObstructed;
    } catch (const std::exception& e) {
        report_error(err, opt, "internal", e.what());
        return kInternalError;
    }
    report_error(err, opt, "usage", "no subcommand given");
    return kUsageError;
}

}  // namespace flateta::cli
