#include "mzi/figures.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "mzi/families.hpp"
#include "mzi/sweep.hpp"

namespace mzi {

namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

void write_text(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

SweepSpec t_grid() { return SweepSpec(SweepSpec::Variable::t_squared, 0.0, 1.0, 101); }
SweepSpec phi_grid() { return SweepSpec(SweepSpec::Variable::phi, 0.0, 2.0 * kPi, 721); }

struct Emitter {
    std::filesystem::path dir;
    std::vector<std::string> written;
    json files = json::array();

    void qfi_file(const std::string& name, const StateFamily& fam, const json& params) {
        const Table t = run_qfi(fam.port0(), fam.port1(), t_grid(), true, true, true);
        write_text(dir / name, to_csv(t));
        written.push_back((dir / name).string());
        json f = params;
        f["file"] = name;
        f["port0"] = to_string(fam.port0());
        f["port1"] = to_string(fam.port1());
        f["columns"] = "t_squared,f_2p,f_i,f_ii";
        files.push_back(f);
    }

    void sens_file(const std::string& name, const StateFamily& fam, const InterferometerConfig& cfg,
                   const DetectorConfig& det, json params) {
        const Table t = run_sensitivity(fam.port0(), fam.port1(), cfg, det, phi_grid());
        write_text(dir / name, to_csv(t));
        written.push_back((dir / name).string());
        params["file"] = name;
        params["port0"] = to_string(fam.port0());
        params["port1"] = to_string(fam.port1());
        params["t_squared"] = cfg.bs1.t_squared();
        params["t_prime_squared"] = cfg.bs2.t_squared();
        params["detector"] = det.kind == DetectorConfig::Kind::difference_intensity ? "df" : "hom";
        if (det.kind == DetectorConfig::Kind::homodyne) params["phi_l"] = det.phi_l;
        params["scenario"] = cfg.scenario.kind == Scenario::Kind::asym
                                 ? "asym"
                                 : (cfg.scenario.kind == Scenario::Kind::sym ? "sym" : "two");
        files.push_back(params);
    }
};

json sidecar_base(int id) {
    json j;
    j["figure"] = id;
    j["phi_grid_points"] = 721;
    return j;
}

// Derived BS1/BS2 optima for a squeezed family, recorded in sidecars.
json squeezed_optima(const StateFamily& fam) {
    const TOptCoefficients c = t_opt_coefficients(fam);
    const double t1 = fi_argmax_t(c);
    json j;
    j["t_opt_squared"] = t1 * t1;
    j["f_i_max"] = fi_max(c);
    j["qcrb_i"] = qcrb(fi_max(c));
    j["t_opt_squared_high_alpha"] = [&] {
        const double t = high_alpha_t_opt(fam);
        return t * t;
    }();
    if (t1 > 0.0 && t1 < 1.0) {
        const double tp = bs2_t_opt(fam, t1).t_prime;
        j["t_prime_opt_squared"] = tp * tp;
    }
    j["phi_opt"] = kPi;
    return j;
}

}  // namespace

bool figure_id_valid(int id) {
    return (id >= 4 && id <= 7) || (id >= 9 && id <= 14);
}

std::vector<int> figure_ids() {
    return {4, 5, 6, 7, 9, 10, 11, 12, 13, 14};
}

std::vector<std::string> run_figure(int id, const std::string& outdir) {
    if (!figure_id_valid(id))
        throw std::domain_error("run_figure: figure " + std::to_string(id) +
                                " has no data (valid ids: 4-7, 9-14)");
    std::filesystem::create_directories(outdir);
    Emitter em;
    em.dir = outdir;
    json side = sidecar_base(id);

    const ComplexAmplitude a10(10.0, 0.0);

    switch (id) {
        case 4: {
            em.qfi_file("figure4.csv", StateFamily::single_coherent(a10), json{{"alpha", 10.0}});
            break;
        }
        case 5: {
            em.qfi_file("figure5_dtheta_0.csv",
                        StateFamily::dual_coherent(a10, ComplexAmplitude(5.0, 0.0)),
                        json{{"alpha", 10.0}, {"beta", 5.0}, {"dtheta", 0.0}});
            em.qfi_file("figure5_dtheta_pi_over_2.csv",
                        StateFamily::dual_coherent(ComplexAmplitude(10.0, kPi / 2.0), ComplexAmplitude(5.0, 0.0)),
                        json{{"alpha", 10.0}, {"beta", 5.0}, {"dtheta", kPi / 2.0}});
            side["note"] = "one CSV per phase-matching setting";
            break;
        }
        case 6: {
            for (double r : {0.5, 1.2}) {
                const StateFamily fam = StateFamily::coh_plus_sqz_vac(a10, SqueezeParam(r, 0.0));
                em.qfi_file(r == 0.5 ? "figure6_r_0.5.csv" : "figure6_r_1.2.csv", fam,
                            json{{"alpha", 10.0}, {"r", r}, {"pmc", "2*theta_alpha - theta = 0"}});
            }
            break;
        }
        case 7: {
            json derived;
            for (double z : {0.35, 0.75}) {
                const StateFamily fam =
                    StateFamily::sqz_coh_plus_sqz_vac(a10, SqueezeParam(z, kPi), SqueezeParam(1.2, 0.0));
                em.qfi_file(z == 0.35 ? "figure7_z_0.35.csv" : "figure7_z_0.75.csv", fam,
                            json{{"alpha", 10.0},
                                 {"r", 1.2},
                                 {"z", z},
                                 {"pmc", "2*theta_alpha - theta = 0, theta - phi = pi"}});
                derived[z == 0.35 ? "z_0.35" : "z_0.75"] = squeezed_optima(fam);
            }
            side["derived"] = derived;
            break;
        }
        case 9: {
            const StateFamily fam = StateFamily::single_coherent(a10);
            em.sens_file("figure9_df.csv", fam, InterferometerConfig::both_balanced(),
                         DetectorConfig::difference_intensity(), json{{"alpha", 10.0}});
            const InterferometerConfig unbal(BeamSplitter(0.99), BeamSplitter(0.01));
            em.sens_file("figure9_hom_asym.csv", fam, unbal, DetectorConfig::homodyne(0.0),
                         json{{"alpha", 10.0}});
            InterferometerConfig unbal_sym = unbal;
            unbal_sym.scenario = Scenario::sym();
            em.sens_file("figure9_hom_sym.csv", fam, unbal_sym, DetectorConfig::homodyne(0.0),
                         json{{"alpha", 10.0}});
            side["note"] = "transmissions are amplitude coefficients: t = 0.99, t' = 0.01";
            break;
        }
        case 10: {
            const StateFamily df_fam = StateFamily::dual_coherent(a10, ComplexAmplitude(5.0, 0.0));
            em.sens_file("figure10_df.csv", df_fam, InterferometerConfig::both_balanced(),
                         DetectorConfig::difference_intensity(),
                         json{{"alpha", 10.0}, {"beta", 5.0}, {"dtheta", 0.0}});
            const StateFamily hom_fam =
                StateFamily::dual_coherent(ComplexAmplitude(10.0, kPi / 2.0), ComplexAmplitude(5.0, 0.0));
            const double t1 = dual_coherent_t_opt(hom_fam.alpha, hom_fam.beta, QfiMode::asym_single);
            const InterferometerConfig hom_cfg(BeamSplitter(t1), BeamSplitter(0.01));
            em.sens_file("figure10_hom_asym.csv", hom_fam, hom_cfg, DetectorConfig::homodyne(kPi / 2.0),
                         json{{"alpha", 10.0}, {"beta", 5.0}, {"dtheta", kPi / 2.0}});
            InterferometerConfig hom_sym = hom_cfg;
            hom_sym.scenario = Scenario::sym();
            em.sens_file("figure10_hom_sym.csv", hom_fam, hom_sym, DetectorConfig::homodyne(kPi / 2.0),
                         json{{"alpha", 10.0}, {"beta", 5.0}, {"dtheta", kPi / 2.0}});
            side["derived"]["t_opt_squared_asym"] = t1 * t1;
            side["note"] = "one CSV per phase-matching setting; homodyne files use dtheta = pi/2";
            break;
        }
        case 11: {
            const StateFamily fam = StateFamily::coh_plus_sqz_vac(a10, SqueezeParam(1.2, 0.0));
            em.sens_file("figure11_df.csv", fam, InterferometerConfig::both_balanced(),
                         DetectorConfig::difference_intensity(), json{{"alpha", 10.0}, {"r", 1.2}});
            const json opt = squeezed_optima(fam);
            const double t1 = std::sqrt(opt["t_opt_squared"].get<double>());
            const double tp = std::sqrt(opt["t_prime_opt_squared"].get<double>());
            em.sens_file("figure11_hom.csv", fam, InterferometerConfig(BeamSplitter(t1), BeamSplitter(tp)),
                         DetectorConfig::homodyne(0.0), json{{"alpha", 10.0}, {"r", 1.2}});
            side["derived"] = opt;
            break;
        }
        case 12: {
            const ComplexAmplitude a1000(1000.0, 0.0);
            json derived;
            for (double r : {0.5, 1.2}) {
                const std::string tag = r == 0.5 ? "r_0.5" : "r_1.2";
                const StateFamily fam = StateFamily::coh_plus_sqz_vac(a1000, SqueezeParam(r, 0.0));
                em.sens_file("figure12_" + tag + "_df.csv", fam, InterferometerConfig::both_balanced(),
                             DetectorConfig::difference_intensity(), json{{"alpha", 1000.0}, {"r", r}});
                const json opt = squeezed_optima(fam);
                const double t1 = std::sqrt(opt["t_opt_squared"].get<double>());
                const double tp = std::sqrt(opt["t_prime_opt_squared"].get<double>());
                em.sens_file("figure12_" + tag + "_hom.csv", fam,
                             InterferometerConfig(BeamSplitter(t1), BeamSplitter(tp)),
                             DetectorConfig::homodyne(0.0), json{{"alpha", 1000.0}, {"r", r}});
                derived[tag] = opt;
            }
            side["derived"] = derived;
            break;
        }
        case 13: {
            const StateFamily fam =
                StateFamily::sqz_coh_plus_sqz_vac(a10, SqueezeParam(0.75, kPi), SqueezeParam(1.2, 0.0));
            em.sens_file("figure13_df.csv", fam, InterferometerConfig::both_balanced(),
                         DetectorConfig::difference_intensity(),
                         json{{"alpha", 10.0}, {"r", 1.2}, {"z", 0.75}});
            const json opt = squeezed_optima(fam);
            const double t1 = std::sqrt(opt["t_opt_squared"].get<double>());
            const double tp = std::sqrt(opt["t_prime_opt_squared"].get<double>());
            em.sens_file("figure13_hom.csv", fam, InterferometerConfig(BeamSplitter(t1), BeamSplitter(tp)),
                         DetectorConfig::homodyne(0.0), json{{"alpha", 10.0}, {"r", 1.2}, {"z", 0.75}});
            side["derived"] = opt;
            break;
        }
        case 14: {
            const ComplexAmplitude a1000(1000.0, 0.0);
            json derived;
            {
                const StateFamily fam = StateFamily::coh_plus_sqz_vac(a1000, SqueezeParam(1.2, 0.0));
                const json opt = squeezed_optima(fam);
                em.sens_file("figure14_cohsqz_hom.csv", fam,
                             InterferometerConfig(BeamSplitter(std::sqrt(opt["t_opt_squared"].get<double>())),
                                                  BeamSplitter(std::sqrt(opt["t_prime_opt_squared"].get<double>()))),
                             DetectorConfig::homodyne(0.0), json{{"alpha", 1000.0}, {"r", 1.2}, {"z", 0.0}});
                derived["cohsqz"] = opt;
            }
            {
                const StateFamily fam =
                    StateFamily::sqz_coh_plus_sqz_vac(a1000, SqueezeParam(0.75, kPi), SqueezeParam(1.2, 0.0));
                const json opt = squeezed_optima(fam);
                em.sens_file("figure14_sqzcoh_hom.csv", fam,
                             InterferometerConfig(BeamSplitter(std::sqrt(opt["t_opt_squared"].get<double>())),
                                                  BeamSplitter(std::sqrt(opt["t_prime_opt_squared"].get<double>()))),
                             DetectorConfig::homodyne(0.0),
                             json{{"alpha", 1000.0}, {"r", 1.2}, {"z", 0.75}});
                derived["sqzcoh"] = opt;
            }
            side["derived"] = derived;
            break;
        }
    }

    side["files"] = em.files;
    const std::filesystem::path sp = std::filesystem::path(outdir) / ("figure" + std::to_string(id) + ".json");
    write_text(sp, side.dump(2) + "\n");
    em.written.push_back(sp.string());
    return em.written;
}

}  // namespace mzi
