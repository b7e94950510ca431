#include "mzi/oracle_report.hpp"

#include <cmath>
#include <complex>

#include <json.hpp>

#include "mzi/detection.hpp"
#include "mzi/fock.hpp"
#include "mzi/moments.hpp"

namespace mzi {

namespace {

using nlohmann::json;

double rel_error(double analytic, double numeric) {
    return std::abs(analytic - numeric) / std::max(1.0, std::abs(analytic));
}

double rel_error(std::complex<double> analytic, std::complex<double> numeric) {
    return std::abs(analytic - numeric) / std::max(1.0, std::abs(analytic));
}

json entry(double analytic, double numeric, double& worst) {
    const double e = rel_error(analytic, numeric);
    worst = std::max(worst, e);
    return json{{"analytic", analytic}, {"numeric", numeric}, {"rel_error", e}};
}

json entry(std::complex<double> analytic, std::complex<double> numeric, double& worst) {
    const double e = rel_error(analytic, numeric);
    worst = std::max(worst, e);
    return json{{"analytic", {analytic.real(), analytic.imag()}},
                {"numeric", {numeric.real(), numeric.imag()}},
                {"rel_error", e}};
}

json moments_block(const ModeMoments& a, const ModeMoments& n, double& worst) {
    json j;
    j["mean_a"] = entry(a.mean_a, n.mean_a, worst);
    j["mean_a2"] = entry(a.mean_a2, n.mean_a2, worst);
    j["mean_n"] = entry(a.mean_n, n.mean_n, worst);
    j["var_n"] = entry(a.var_n, n.var_n, worst);
    j["cov_na"] = entry(a.cov_na, n.cov_na, worst);
    return j;
}

}  // namespace

std::string run_oracle_report(const PortState& p0, const PortState& p1, const BeamSplitter& bs, int nmax,
                              bool* pass_out) {
    constexpr double kTol = 1e-5;
    double worst = 0.0;
    json j;
    j["nmax"] = nmax;
    j["port0"] = to_string(p0);
    j["port1"] = to_string(p1);
    j["t_squared"] = bs.t_squared();

    const ModeMoments a0 = moments_of(p0), a1 = moments_of(p1);
    const ModeMoments n0 = numeric_moments(build_state(p0, nmax));
    const ModeMoments n1 = numeric_moments(build_state(p1, nmax));
    j["moments"]["port0"] = moments_block(a0, n0, worst);
    j["moments"]["port1"] = moments_block(a1, n1, worst);

    json q;
    bool two_param_defined = true;
    try {
        const double af = qfi(a0, a1, bs, QfiMode::two_param);
        const double nf = numeric_qfi(p0, p1, bs, QfiMode::two_param, nmax);
        q["two_param"] = entry(af, nf, worst);
    } catch (const std::domain_error&) {
        two_param_defined = false;
        q["two_param"] = nullptr;
    }
    q["asym_single"] =
        entry(qfi(a0, a1, bs, QfiMode::asym_single), numeric_qfi(p0, p1, bs, QfiMode::asym_single, nmax), worst);
    const SymSingleReport sym = numeric_sym_report(p0, p1, bs, nmax);
    q["sym_single"]["variance_sum"] = entry(qfi(a0, a1, bs, QfiMode::sym_single), sym.variance_sum, worst);
    q["sym_single"]["generator_variance"] = sym.generator_variance;
    q["sym_single"]["difference"] = std::abs(sym.variance_sum - sym.generator_variance);
    j["qfi"] = q;
    j["two_param_defined"] = two_param_defined;

    // Fixed probe configuration; generic angles avoid trigonometric zeros.
    const double probe_phi = 0.7;
    const double probe_phi_l = 0.4;
    const InterferometerConfig cfg(bs, BeamSplitter::balanced());
    {
        const SensitivityPoint p = diff_intensity_point(a0, a1, cfg, probe_phi);
        const DetectionStats d =
            numeric_detection(p0, p1, cfg, DetectorConfig::difference_intensity(), probe_phi, nmax);
        const double mean_analytic = diff_intensity_mean(a0, a1, cfg, probe_phi);
        json blk;
        blk["mean"] = entry(mean_analytic, d.mean, worst);
        blk["variance"] = entry(p.variance, d.variance, worst);
        blk["derivative"] = entry(p.signal_derivative, d.derivative, worst);
        j["difference_intensity"] = blk;
        j["difference_intensity"]["phi"] = probe_phi;
    }
    {
        const DetectorConfig det = DetectorConfig::homodyne(probe_phi_l);
        const SensitivityPoint p = homodyne_point(a0, a1, cfg, det, probe_phi);
        const DetectionStats d = numeric_detection(p0, p1, cfg, det, probe_phi, nmax);
        json blk;
        blk["variance"] = entry(p.variance, d.variance, worst);
        blk["derivative"] = entry(p.signal_derivative, d.derivative, worst);
        j["homodyne"] = blk;
        j["homodyne"]["phi"] = probe_phi;
        j["homodyne"]["phi_l"] = probe_phi_l;
    }

    j["max_rel_error"] = worst;
    j["tolerance"] = kTol;
    const bool pass = worst <= kTol;
    j["pass"] = pass;
    if (pass_out) *pass_out = pass;
    return j.dump(2) + "\n";
}

}  // namespace mzi
