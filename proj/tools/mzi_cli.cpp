#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mzi/families.hpp"
#include "mzi/figures.hpp"
#include "mzi/fock.hpp"
#include "mzi/oracle_report.hpp"
#include "mzi/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct ScanSpec {
    double start = 0.0, stop = 0.0;
    int points = 0;
};

ScanSpec parse_scan(const std::string& text) {
    ScanSpec s;
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("scan spec must be <start>:<stop>:<points>, got '" + text + "'");
    s.start = std::stod(text.substr(0, c1));
    s.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    s.points = std::stoi(text.substr(c2 + 1));
    return s;
}

mzi::Scenario parse_scenario(const std::string& text) {
    if (text == "asym") return mzi::Scenario::asym();
    if (text == "sym") return mzi::Scenario::sym();
    if (text.rfind("two:", 0) == 0) {
        const auto rest = text.substr(4);
        const auto c = rest.find(':');
        if (c == std::string::npos)
            throw std::invalid_argument("scenario 'two' needs two phases: two:<phi1>:<phi2>");
        return mzi::Scenario::two_phase(std::stod(rest.substr(0, c)), std::stod(rest.substr(c + 1)));
    }
    throw std::invalid_argument("unknown scenario '" + text + "' (asym|sym|two:<phi1>:<phi2>)");
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + out_path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + out_path);
}

int run(int argc, char** argv) {
    CLI::App app{"Quantum Fisher information, Cramer-Rao bounds, and detection-scheme phase sensitivities "
                 "for Gaussian inputs to an unbalanced Mach-Zehnder interferometer"};
    app.require_subcommand(1);

    std::string port0_text = "vac", port1_text = "vac";
    std::string out_path, format = "csv";
    double t_value = 1.0 / std::sqrt(2.0);
    std::string t_scan, phi_scan;
    double t_prime = 1.0 / std::sqrt(2.0);
    std::string scenario_text = "asym", detector_text;
    double phi_l = 0.0;
    std::string modes = "2p,i,ii";
    int nmax = 60;
    int figure_id = 0;
    std::string fig_out = ".";

    auto* qfi_cmd = app.add_subcommand("qfi", "QFI table over the BS1 transmission");
    qfi_cmd->add_option("--port0", port0_text, "port-0 state (vac|coh:m:p|sqz:s:p|sqzcoh:m:p:s:p)");
    qfi_cmd->add_option("--port1", port1_text, "port-1 state");
    auto* t_opt = qfi_cmd->add_option("--t", t_value, "single BS1 transmission amplitude");
    qfi_cmd->add_option("--t-scan", t_scan, "t^2 grid as <start>:<stop>:<points>");
    qfi_cmd->add_option("--mode", modes, "comma subset of 2p,i,ii (default all)");
    qfi_cmd->add_option("--out", out_path, "output file (default stdout)");
    qfi_cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    auto* sens_cmd = app.add_subcommand("sens", "phase-sensitivity sweep over the internal phase");
    sens_cmd->add_option("--port0", port0_text, "port-0 state");
    sens_cmd->add_option("--port1", port1_text, "port-1 state");
    sens_cmd->add_option("--t", t_value, "BS1 transmission amplitude");
    sens_cmd->add_option("--tprime", t_prime, "BS2 transmission amplitude");
    sens_cmd->add_option("--scenario", scenario_text, "asym|sym|two:<phi1>:<phi2>");
    sens_cmd->add_option("--detector", detector_text, "df|hom")->required()->check(CLI::IsMember({"df", "hom"}));
    sens_cmd->add_option("--phi-l", phi_l, "homodyne local-oscillator phase (rad)");
    sens_cmd->add_option("--phi-scan", phi_scan, "phi grid as <start>:<stop>:<points>")->required();
    sens_cmd->add_option("--out", out_path, "output file (default stdout)");
    sens_cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    auto* fig_cmd = app.add_subcommand("figure", "write a reproducible data figure as CSV + JSON sidecar");
    fig_cmd->add_option("id", figure_id, "figure id (4-7, 9-14)")->required();
    fig_cmd->add_option("--out", fig_out, "output directory (default .)");

    auto* oracle_cmd = app.add_subcommand("oracle", "analytic-vs-Fock validation report (JSON)");
    oracle_cmd->add_option("--port0", port0_text, "port-0 state");
    oracle_cmd->add_option("--port1", port1_text, "port-1 state");
    oracle_cmd->add_option("--t", t_value, "BS1 transmission amplitude");
    oracle_cmd->add_option("--nmax", nmax, "Fock truncation (default 60)");
    oracle_cmd->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (qfi_cmd->parsed()) {
        const mzi::PortState p0 = mzi::parse_state(port0_text);
        const mzi::PortState p1 = mzi::parse_state(port1_text);
        const bool with_2p = modes.find("2p") != std::string::npos;
        // "i" matches inside "ii"; require an exact token for each mode.
        auto has_token = [&](const std::string& tok) {
            std::size_t pos = 0;
            while (pos <= modes.size()) {
                std::size_t end = modes.find(',', pos);
                if (end == std::string::npos) end = modes.size();
                if (modes.substr(pos, end - pos) == tok) return true;
                pos = end + 1;
            }
            return false;
        };
        const bool with_i = has_token("i");
        const bool with_ii = has_token("ii");
        mzi::Table table;
        if (!t_scan.empty()) {
            const ScanSpec s = parse_scan(t_scan);
            table = mzi::run_qfi(p0, p1,
                                 mzi::SweepSpec(mzi::SweepSpec::Variable::t_squared, s.start, s.stop, s.points),
                                 with_2p, with_i, with_ii);
        } else if (*t_opt) {
            table = mzi::run_qfi_at(p0, p1, {t_value * t_value}, with_2p, with_i, with_ii);
        } else {
            throw std::invalid_argument("qfi: provide --t or --t-scan");
        }
        emit(format == "csv" ? mzi::to_csv(table) : mzi::to_json(table), out_path);
        return kExitOk;
    }

    if (sens_cmd->parsed()) {
        const mzi::PortState p0 = mzi::parse_state(port0_text);
        const mzi::PortState p1 = mzi::parse_state(port1_text);
        const ScanSpec s = parse_scan(phi_scan);
        const mzi::InterferometerConfig cfg(mzi::BeamSplitter(t_value), mzi::BeamSplitter(t_prime),
                                            parse_scenario(scenario_text));
        const mzi::DetectorConfig det = detector_text == "df" ? mzi::DetectorConfig::difference_intensity()
                                                              : mzi::DetectorConfig::homodyne(phi_l);
        const mzi::Table table = mzi::run_sensitivity(
            p0, p1, cfg, det, mzi::SweepSpec(mzi::SweepSpec::Variable::phi, s.start, s.stop, s.points));
        emit(format == "csv" ? mzi::to_csv(table) : mzi::to_json(table), out_path);
        return kExitOk;
    }

    if (fig_cmd->parsed()) {
        for (const auto& path : mzi::run_figure(figure_id, fig_out)) std::cout << path << "\n";
        return kExitOk;
    }

    if (oracle_cmd->parsed()) {
        const mzi::PortState p0 = mzi::parse_state(port0_text);
        const mzi::PortState p1 = mzi::parse_state(port1_text);
        bool pass = false;
        try {
            const std::string report =
                mzi::run_oracle_report(p0, p1, mzi::BeamSplitter(t_value), nmax, &pass);
            emit(report, out_path);
        } catch (const mzi::under_truncation_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitNumeric;
        }
        return pass ? kExitOk : kExitNumeric;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
