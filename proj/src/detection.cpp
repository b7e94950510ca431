#include "mzi/detection.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace mzi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

double sq(double x) { return x * x; }

SensitivityPoint make_point(double phi, double deriv, double var) {
    SensitivityPoint p;
    p.phi = phi;
    p.signal_derivative = deriv;
    p.variance = var;
    p.delta_phi = std::abs(deriv) > 0.0 ? std::sqrt(std::max(var, 0.0)) / std::abs(deriv) : kInf;
    return p;
}

// Golden-section minimization on [lo, hi], assuming a unimodal bracket.
double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

void Scenario::arm_phases(double phi, double& phi1, double& phi2) const {
    switch (kind) {
        case Kind::asym:
            phi1 = phi;
            phi2 = 0.0;
            return;
        case Kind::sym:
            phi1 = 0.5 * phi;
            phi2 = -0.5 * phi;
            return;
        case Kind::two_phase:
            phi1 = phi + phi1_offset;
            phi2 = phi2_offset;
            return;
    }
}

void Scenario::arm_rates(double& d1, double& d2) const {
    switch (kind) {
        case Kind::asym:
            d1 = 1.0;
            d2 = 0.0;
            return;
        case Kind::sym:
            d1 = 0.5;
            d2 = -0.5;
            return;
        case Kind::two_phase:
            d1 = 1.0;
            d2 = 0.0;
            return;
    }
}

DiffCoefficients diff_coefficients(const BeamSplitter& bs1, const BeamSplitter& bs2, double phi) {
    const double T = bs1.t(), R = std::sqrt(bs1.r_squared());
    const double Tp = bs2.t(), Rp = std::sqrt(bs2.r_squared());
    const double tr = bs1.tr(), tprp = bs2.tr();
    DiffCoefficients c;
    c.a_d = 1.0 - 2.0 * sq(T * Rp + R * Tp) + 4.0 * tr * tprp * (1.0 - std::cos(phi));
    c.c_d = {2.0 * tprp * std::sin(phi),
             2.0 * (tr * (Rp * Rp - Tp * Tp) + (1.0 - 2.0 * T * T) * tprp * std::cos(phi))};
    return c;
}

SensitivityPoint diff_intensity_point(const ModeMoments& m0, const ModeMoments& m1,
                                      const InterferometerConfig& cfg, double phi) {
    double ph1 = 0.0, ph2 = 0.0;
    cfg.scenario.arm_phases(phi, ph1, ph2);
    const double dphi = ph1 - ph2;  // N_d depends only on the difference

    const DiffCoefficients co = diff_coefficients(cfg.bs1, cfg.bs2, dphi);
    const std::complex<double> a0 = m0.mean_a, a1 = m1.mean_a;

    const double t2 = cfg.bs1.t_squared(), r2 = cfg.bs1.r_squared();
    const double tr = cfg.bs1.tr(), tprp = cfg.bs2.tr();
    const std::complex<double> e_m(std::cos(dphi), -std::sin(dphi));
    const std::complex<double> e_p = std::conj(e_m);

    const double deriv =
        4.0 * (tr * std::sin(dphi) * (m0.mean_n - m1.mean_n) +
               std::real((r2 * e_m + t2 * e_p) * a0 * std::conj(a1))) *
        tprp;

    const double var =
        sq(co.a_d) * (m0.var_n + m1.var_n) + std::norm(co.c_d) * (m0.mean_n + m1.mean_n) +
        2.0 * std::norm(co.c_d) * (m0.mean_n * m1.mean_n - std::norm(a0) * std::norm(a1)) +
        2.0 * std::real(co.c_d * co.c_d * (m0.mean_a2 * std::conj(m1.mean_a2) - a0 * a0 * std::conj(a1) * std::conj(a1))) +
        4.0 * co.a_d * std::real(co.c_d * (m0.cov_na * std::conj(a1) - a0 * std::conj(m1.cov_na)));

    return make_point(phi, deriv, var);
}

double diff_intensity_mean(const ModeMoments& m0, const ModeMoments& m1, const InterferometerConfig& cfg,
                           double phi) {
    double ph1 = 0.0, ph2 = 0.0;
    cfg.scenario.arm_phases(phi, ph1, ph2);
    const DiffCoefficients co = diff_coefficients(cfg.bs1, cfg.bs2, ph1 - ph2);
    return co.a_d * (m0.mean_n - m1.mean_n) + 2.0 * std::real(co.c_d * m0.mean_a * std::conj(m1.mean_a));
}

double homodyne_mean(const ModeMoments& m0, const ModeMoments& m1, const InterferometerConfig& cfg,
                     const DetectorConfig& det, double phi) {
    double ph1 = 0.0, ph2 = 0.0;
    cfg.scenario.arm_phases(phi, ph1, ph2);
    const std::complex<double> T = cfg.bs1.transmission(), R = cfg.bs1.reflection();
    const std::complex<double> Tp = cfg.bs2.transmission(), Rp = cfg.bs2.reflection();
    const std::complex<double> e1 = std::polar(1.0, -ph1), e2 = std::polar(1.0, -ph2);
    const std::complex<double> eL = std::polar(1.0, -det.phi_l);
    const std::complex<double> u0 = T * Tp * e2 + R * Rp * e1;
    const std::complex<double> u1 = T * Rp * e1 + R * Tp * e2;
    return std::real(eL * (u0 * m0.mean_a + u1 * m1.mean_a));
}

SensitivityPoint homodyne_point(const ModeMoments& m0, const ModeMoments& m1, const InterferometerConfig& cfg,
                                const DetectorConfig& det, double phi) {
    if (det.kind != DetectorConfig::Kind::homodyne)
        throw std::invalid_argument("homodyne_point: detector must be homodyne");

    double ph1 = 0.0, ph2 = 0.0, d1 = 0.0, d2 = 0.0;
    cfg.scenario.arm_phases(phi, ph1, ph2);
    cfg.scenario.arm_rates(d1, d2);

    const std::complex<double> T = cfg.bs1.transmission(), R = cfg.bs1.reflection();
    const std::complex<double> Tp = cfg.bs2.transmission(), Rp = cfg.bs2.reflection();
    const std::complex<double> e1 = std::polar(1.0, -ph1), e2 = std::polar(1.0, -ph2);
    const std::complex<double> eL = std::polar(1.0, -det.phi_l);

    // a4 = u0 a0 + u1 a1 in terms of the inputs.
    const std::complex<double> u0 = T * Tp * e2 + R * Rp * e1;
    const std::complex<double> u1 = T * Rp * e1 + R * Tp * e2;
    const std::complex<double> du0 = std::complex<double>(0.0, -1.0) * (T * Tp * d2 * e2 + R * Rp * d1 * e1);
    const std::complex<double> du1 = std::complex<double>(0.0, -1.0) * (T * Rp * d1 * e1 + R * Tp * d2 * e2);

    const std::complex<double> a0 = m0.mean_a, a1 = m1.mean_a;
    const double deriv = std::real(eL * (du0 * a0 + du1 * a1));

    const std::complex<double> A = 0.5 * eL * u0;
    const std::complex<double> B = 0.5 * eL * u1;
    const double var = 0.25 + 2.0 * std::real(A * A * m0.var_a() + B * B * m1.var_a()) +
                       2.0 * std::norm(A) * m0.thermal_excess() + 2.0 * std::norm(B) * m1.thermal_excess();

    return make_point(phi, deriv, var);
}

namespace {

double sweep_min_phi(const std::function<double(double)>& delta_phi_of) {
    // 721-point seed grid over [0, 2pi), refined by golden section.
    const int n = 721;
    double best_phi = 0.0, best = kInf;
    for (int i = 0; i < n; ++i) {
        const double phi = 2.0 * kPi * i / n;
        const double v = delta_phi_of(phi);
        if (v < best) {
            best = v;
            best_phi = phi;
        }
    }
    const double h = 2.0 * kPi / n;
    return golden_min(delta_phi_of, best_phi - h, best_phi + h, 1e-12);
}

}  // namespace

double optimal_working_point(const StateFamily& fam, const DetectorConfig& det, const InterferometerConfig& cfg) {
    const bool coherent_family = fam.kind == StateFamily::Kind::single_coherent ||
                                 fam.kind == StateFamily::Kind::dual_coherent;
    if (det.kind == DetectorConfig::Kind::difference_intensity && coherent_family) {
        const double dth = fam.kind == StateFamily::Kind::dual_coherent ? fam.delta_theta() : 0.0;
        if (fam.kind == StateFamily::Kind::single_coherent || std::cos(dth) > 1.0 - 1e-12) {
            // phi_opt = arccos(|ab| / sqrt(|ab|^2 + |TR|^2 (b^2 - a^2)^2));
            // reduces to pi/2 for a single coherent input.
            const double ab = fam.alpha.magnitude * fam.beta.magnitude;
            const double d2 = sq(cfg.bs1.tr() * (sq(fam.beta.magnitude) - sq(fam.alpha.magnitude)));
            const double denom = std::sqrt(ab * ab + d2);
            if (denom == 0.0) return kPi / 2.0;
            return std::acos(ab / denom);
        }
    }
    if (det.kind == DetectorConfig::Kind::homodyne && coherent_family &&
        cfg.scenario.kind == Scenario::Kind::asym) {
        // Constant variance 1/4; maximize |d<X>/dphi| = K|cos(phi - phi0)|.
        const double a = fam.alpha.magnitude, b = fam.beta.magnitude;
        const double T = cfg.bs1.t(), R = std::sqrt(cfg.bs1.r_squared());
        const double dth = fam.delta_theta();
        const double cx = T * a + R * b * std::sin(dth);
        const double sx = R * b * std::cos(dth);
        if (cx == 0.0 && sx == 0.0) return 0.0;
        return normalize_phase(std::atan2(sx, cx));
    }
    if (det.kind == DetectorConfig::Kind::homodyne && fam.is_squeezed() &&
        cfg.scenario.kind == Scenario::Kind::asym && fam.pmc_satisfied() &&
        std::abs(det.phi_l - fam.alpha.phase) < 1e-9) {
        return kPi;
    }
    // Numeric fallback.
    const ModeMoments m0 = moments_of(fam.port0());
    const ModeMoments m1 = moments_of(fam.port1());
    auto delta = [&](double phi) {
        const SensitivityPoint p = det.kind == DetectorConfig::Kind::difference_intensity
                                       ? diff_intensity_point(m0, m1, cfg, phi)
                                       : homodyne_point(m0, m1, cfg, det, phi);
        return p.delta_phi;
    };
    return normalize_phase(sweep_min_phi(delta));
}

Bs2Optimum bs2_t_opt(const StateFamily& fam, double t1) {
    if (!fam.is_squeezed()) throw std::domain_error("bs2_t_opt: defined for the squeezed families only");
    if (!(t1 > 0.0 && t1 < 1.0)) throw std::domain_error("bs2_t_opt: t1 must lie in (0, 1)");
    if (!fam.pmc_satisfied()) throw std::domain_error("bs2_t_opt: requires the family PMCs");
    const double r = fam.xi.factor;
    const double z = fam.kind == StateFamily::Kind::sqz_coh_plus_sqz_vac ? fam.zeta.factor : 0.0;
    const double diff = std::abs(std::exp(-2.0 * r) - std::exp(-2.0 * z));
    Bs2Optimum out;
    if (diff == 0.0) {
        out.degenerate = true;
        out.t_prime = 0.0;
        return out;
    }
    const double num = t1 * std::sqrt(1.0 - t1 * t1) * diff;
    const double den = std::sqrt(std::exp(-4.0 * z) - t1 * t1 * (std::exp(-4.0 * z) - std::exp(-4.0 * r)));
    out.t_prime = num / den;
    return out;
}

double best_sensitivity(const StateFamily& fam, const DetectorConfig& det, double t1, double t1_prime) {
    const BeamSplitter bs1(t1), bs2(t1_prime);
    const double T = bs1.t(), R = std::sqrt(bs1.r_squared());
    const double Tp = bs2.t(), Rp = std::sqrt(bs2.r_squared());
    const char* supported =
        "supported pairs: single_coherent x {difference_intensity, homodyne}, "
        "dual_coherent x difference_intensity, coh_plus_sqz_vac x homodyne, "
        "sqz_coh_plus_sqz_vac x homodyne";

    switch (fam.kind) {
        case StateFamily::Kind::single_coherent: {
            const double a = fam.alpha.magnitude;
            if (det.kind == DetectorConfig::Kind::difference_intensity) {
                const double d = 4.0 * bs1.tr() * bs2.tr() * a;
                return d > 0.0 ? 1.0 / d : kInf;
            }
            // Symmetric-scenario homodyne at phi_opt = 2 k pi.
            const double d = std::abs(T * Rp - R * Tp) * a;
            return d > 0.0 ? 1.0 / d : kInf;
        }
        case StateFamily::Kind::dual_coherent: {
            if (det.kind != DetectorConfig::Kind::difference_intensity)
                throw std::domain_error(std::string("best_sensitivity: unsupported pair; ") + supported);
            if (!(std::cos(fam.delta_theta()) > 1.0 - 1e-9))
                throw std::domain_error("best_sensitivity: the dual-coherent closed form assumes dtheta = 0");
            const double a2 = sq(fam.alpha.magnitude), b2 = sq(fam.beta.magnitude);
            const double ab = fam.alpha.magnitude * fam.beta.magnitude;
            const double tr2 = sq(bs1.tr());
            const double den =
                4.0 * std::sqrt(ab * ab * (1.0 - 4.0 * tr2) + tr2 * sq(a2 + b2)) * bs2.tr();
            return den > 0.0 ? std::sqrt(a2 + b2) / den : kInf;
        }
        case StateFamily::Kind::coh_plus_sqz_vac:
        case StateFamily::Kind::sqz_coh_plus_sqz_vac: {
            if (det.kind != DetectorConfig::Kind::homodyne)
                throw std::domain_error(std::string("best_sensitivity: unsupported pair; ") + supported);
            if (!fam.pmc_satisfied())
                throw std::domain_error("best_sensitivity: the squeezed-family closed forms assume the PMCs");
            const double r = fam.xi.factor;
            const double z = fam.kind == StateFamily::Kind::sqz_coh_plus_sqz_vac ? fam.zeta.factor : 0.0;
            const double num = 1.0 - sq(T * Tp + R * Rp) * (1.0 - std::exp(-2.0 * r)) -
                               sq(R * Tp - T * Rp) * (1.0 - std::exp(-2.0 * z));
            const double den = 2.0 * T * Rp * fam.alpha.magnitude;
            return den > 0.0 ? std::sqrt(std::max(num, 0.0)) / den : kInf;
        }
    }
    throw std::logic_error("best_sensitivity: unknown family");
}

double best_sensitivity(const StateFamily& fam, const DetectorConfig& det) {
    switch (fam.kind) {
        case StateFamily::Kind::single_coherent:
            if (det.kind == DetectorConfig::Kind::difference_intensity)
                return best_sensitivity(fam, det, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
            return best_sensitivity(fam, det, 1.0, 0.0);  // |T| -> 1, |T'| -> 0
        case StateFamily::Kind::dual_coherent:
            return best_sensitivity(fam, det, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
        case StateFamily::Kind::coh_plus_sqz_vac:
        case StateFamily::Kind::sqz_coh_plus_sqz_vac: {
            const double t1 = fi_argmax_t(t_opt_coefficients(fam));
            if (!(t1 > 0.0 && t1 < 1.0)) return best_sensitivity(fam, det, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
            return best_sensitivity(fam, det, t1, bs2_t_opt(fam, t1).t_prime);
        }
    }
    throw std::logic_error("best_sensitivity: unknown family");
}

}  // namespace mzi
