#include "suspzeta/format.hpp"
#include "suspzeta/io.hpp"
#include "suspzeta/suspension.hpp"
#include "suspzeta/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace suspzeta;

struct Output {
    std::string result;
    std::vector<std::string> warnings;
};

void emit(const Output& out, bool asJson) {
    if (asJson) {
        nlohmann::json j;
        j["result"] = out.result;
        j["warnings"] = out.warnings;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << out.result << "\n";
    for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
}

StratumProfile make_profile(const std::vector<long long>& N, const std::vector<long long>& nu,
                            long long Q, long long p, long long nuz) {
    StratumProfile profile;
    profile.N = N;
    profile.nu = nu;
    profile.Q = Q;
    profile.p = p;
    profile.nuz = nuz;
    profile.validate();
    return profile;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"suspzeta: local topological and naive motivic zeta functions of suspensions"};
    app.require_subcommand(1);

    std::string resolutionPath, bundlePath;
    std::string fixturesDir = "fixtures";
    long long Q = 1, p = 0, nuz = 1, twist = 1, seriesBound = -1;
    int profileCount = 50;
    unsigned seed = 240611;
    bool latex = false, asJson = false;
    std::vector<long long> N, nu;

    auto addCommon = [&](CLI::App* cmd) {
        cmd->add_flag("--latex", latex, "LaTeX rendering");
        cmd->add_flag("--json", asJson, "machine-readable output envelope");
    };
    auto addProfileFlags = [&](CLI::App* cmd) {
        cmd->add_option("--N", N, "stratum multiplicities N_k")->required()->delimiter(',');
        cmd->add_option("--nu", nu, "stratum discrepancies nu_k")->required()->delimiter(',');
        cmd->add_option("--Q", Q, "suspension exponent Q")->required();
        cmd->add_option("--p", p, "extra z-power p (= N_z)");
        cmd->add_option("--nuz", nuz, "z-exponent of the form (= nu_z)");
    };

    auto* top = app.add_subcommand("top", "topological zeta function from resolution data");
    top->add_option("--resolution", resolutionPath, "ResolutionData JSON file")->required();
    addCommon(top);

    auto* twisted = app.add_subcommand("twisted", "twisted topological zeta function from resolution data");
    twisted->add_option("--resolution", resolutionPath, "ResolutionData JSON file")->required();
    twisted->add_option("--twist", twist, "twist order e")->required();
    addCommon(twisted);

    auto* stratum = app.add_subcommand("stratum", "topological stratum contributions W^.");
    addProfileFlags(stratum);
    stratum->add_option("--twist", twist, "twist order (needs p=0, nuz=1)");
    addCommon(stratum);

    auto* motivicStratum = app.add_subcommand("motivic-stratum", "naive motivic stratum contributions");
    addProfileFlags(motivicStratum);
    motivicStratum->add_option("--series-bound", seriesBound, "dump the T-series up to this degree");
    addCommon(motivicStratum);

    auto* suspendF = app.add_subcommand("suspend-f", "zeta function of F = z^Q - f from a bundle");
    suspendF->add_option("--bundle", bundlePath, "ZetaBundle JSON file")->required();
    suspendF->add_option("--Q", Q, "suspension exponent Q")->required();
    suspendF->add_option("--twist", twist, "twist order l");
    addCommon(suspendF);

    auto* suspendG = app.add_subcommand("suspend-g", "zeta function of G = z^p (z^Q - f) from a bundle");
    suspendG->add_option("--bundle", bundlePath, "ZetaBundle JSON file")->required();
    suspendG->add_option("--Q", Q, "suspension exponent Q")->required();
    suspendG->add_option("--p", p, "extra z-power p");
    suspendG->add_option("--nuz", nuz, "z-exponent of the form");
    addCommon(suspendG);

    auto* matrix = app.add_subcommand("matrix", "check Q*ZF(s) = (1/t)A + B*Zf(t)");
    matrix->add_option("--bundle", bundlePath, "ZetaBundle JSON file")->required();
    matrix->add_option("--Q", Q, "suspension exponent Q")->required();
    addCommon(matrix);

    auto* compareLegacy = app.add_subcommand("compare-legacy", "correct formula vs the historical one");
    compareLegacy->add_option("--bundle", bundlePath, "ZetaBundle JSON file")->required();
    compareLegacy->add_option("--Q", Q, "suspension exponent Q")->required();
    addCommon(compareLegacy);

    auto* verify = app.add_subcommand("verify", "run the shipped fixture suite");
    verify->add_option("--fixtures", fixturesDir, "fixtures directory");
    verify->add_option("--profiles", profileCount, "randomized profiles for the oracle triangle");
    verify->add_option("--seed", seed, "random seed");
    verify->add_flag("--json", asJson, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const RenderMode mode = latex ? RenderMode::Latex : RenderMode::Canonical;

    try {
        Output out;
        if (top->parsed() || twisted->parsed()) {
            const ResolutionData res = load_resolution_file(resolutionPath, &out.warnings);
            out.result = format_rational_function(resolution_topological(res, top->parsed() ? 1 : twist), mode);
            emit(out, asJson);
        } else if (stratum->parsed()) {
            const StratumProfile profile = make_profile(N, nu, Q, p, nuz);
            const auto parts = stratum->count("--twist") ? stratum_twisted_topological(profile, twist)
                                                         : stratum_topological(profile);
            std::ostringstream os;
            os << "sigma+ : " << format_rational_function(parts.sigma_plus, mode) << "\n"
               << "sigma- : " << format_rational_function(parts.sigma_minus, mode) << "\n"
               << "rho    : " << format_rational_function(parts.rho, mode) << "\n"
               << "rho*   : " << format_rational_function(parts.rho_star, mode) << "\n"
               << "total  : " << format_rational_function(parts.total(), mode);
            out.result = os.str();
            emit(out, asJson);
        } else if (motivicStratum->parsed()) {
            const StratumProfile profile = make_profile(N, nu, Q, p, nuz);
            const auto parts = stratum_naive_motivic(profile);
            std::ostringstream os;
            auto render = [&](const char* name, const MotivicExpression& w) {
                if (seriesBound >= 0) {
                    const LaurentLT series = motivic_series_truncated(w, seriesBound, 4 * (seriesBound + 1));
                    os << name << " : " << format_motivic(MotivicExpression::from_laurent(series), mode)
                       << "  [series to T^" << seriesBound << ", L-exponents >= -"
                       << 4 * (seriesBound + 1) << "]";
                } else {
                    os << name << " : " << format_motivic(w, mode);
                }
            };
            render("sigma+", parts.sigma_plus);
            os << "\n";
            render("sigma-", parts.sigma_minus);
            os << "\n";
            render("rho   ", parts.rho);
            os << "\n";
            render("rho*  ", parts.rho_star);
            out.result = os.str();
            emit(out, asJson);
        } else if (suspendF->parsed()) {
            const ZetaBundle bundle = load_bundle_file(bundlePath);
            out.result = format_rational_function(suspend_F_twisted(bundle, Q, twist, &out.warnings), mode);
            emit(out, asJson);
        } else if (suspendG->parsed()) {
            const ZetaBundle bundle = load_bundle_file(bundlePath);
            const SuspensionParams params{Q, p, nuz, 1};
            out.result = format_rational_function(suspend_G(bundle, params, &out.warnings), mode);
            emit(out, asJson);
        } else if (matrix->parsed()) {
            const ZetaBundle bundle = load_bundle_file(bundlePath);
            const MatrixIdentityCheck check = suspension_matrix_identity(bundle, Q);
            std::ostringstream os;
            os << "divisors:";
            for (long long d : check.matrix.divisors) os << " " << d;
            os << "\nB:\n";
            for (const auto& row : check.matrix.B) {
                os << " ";
                for (long long v : row) os << " " << v;
                os << "\n";
            }
            for (std::size_t i = 0; i < check.lhs.size(); ++i)
                os << "row " << check.matrix.divisors[i] << ": Q*ZF = "
                   << format_rational_function(check.lhs[i], mode)
                   << ", (1/t)A + B*Zf = " << format_rational_function(check.rhs[i], mode) << "\n";
            os << "identity holds: " << (check.equal ? "yes" : "no");
            out.result = os.str();
            emit(out, asJson);
        } else if (compareLegacy->parsed()) {
            const ZetaBundle bundle = load_bundle_file(bundlePath);
            const RationalFunction correct = suspend_F_untwisted(bundle, Q, &out.warnings);
            const RationalFunction legacy = legacy_formula(bundle, Q, &out.warnings);
            std::ostringstream os;
            os << "suspension formula : " << format_rational_function(correct, mode) << "\n"
               << "historical formula : " << format_rational_function(legacy, mode) << "\n"
               << "difference         : " << format_rational_function(correct - legacy, mode) << "\n"
               << "agree: " << (correct == legacy ? "yes" : "no");
            out.result = os.str();
            emit(out, asJson);
        } else if (verify->parsed()) {
            VerifyOptions options;
            options.fixtures_dir = fixturesDir;
            options.profile_count = profileCount;
            options.seed = seed;
            const auto results = run_acceptance(options);
            if (asJson) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& r : results)
                    j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& r : results)
                    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name
                              << (r.detail.empty() ? "" : " — " + r.detail) << "\n";
            }
            return all_passed(results) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
