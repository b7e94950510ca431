#pragma once

#include <complex>

#include "mzi/families.hpp"
#include "mzi/fisher.hpp"
#include "mzi/moments.hpp"

namespace mzi {

/// Maps the swept internal phase phi onto the two arm phases (phi1 on the
/// port-3 arm, phi2 on the port-2 arm):
///   asym      : (phi, 0)
///   sym       : (phi/2, -phi/2)
///   two_phase : (phi + phi1_offset, phi2_offset)
struct Scenario {
    enum class Kind { asym, sym, two_phase };
    Kind kind = Kind::asym;
    double phi1_offset = 0.0;
    double phi2_offset = 0.0;

    static Scenario asym() { return {}; }
    static Scenario sym() {
        Scenario s;
        s.kind = Kind::sym;
        return s;
    }
    static Scenario two_phase(double phi1, double phi2) {
        Scenario s;
        s.kind = Kind::two_phase;
        s.phi1_offset = phi1;
        s.phi2_offset = phi2;
        return s;
    }

    void arm_phases(double phi, double& phi1, double& phi2) const;
    /// d(phi1)/d(phi) and d(phi2)/d(phi).
    void arm_rates(double& d1, double& d2) const;
};

struct InterferometerConfig {
    BeamSplitter bs1;
    BeamSplitter bs2;
    Scenario scenario;

    InterferometerConfig(const BeamSplitter& b1, const BeamSplitter& b2, const Scenario& sc = Scenario::asym())
        : bs1(b1), bs2(b2), scenario(sc) {}
    static InterferometerConfig both_balanced(const Scenario& sc = Scenario::asym()) {
        return InterferometerConfig(BeamSplitter::balanced(), BeamSplitter::balanced(), sc);
    }
};

struct DetectorConfig {
    enum class Kind { difference_intensity, homodyne };
    Kind kind = Kind::difference_intensity;
    double phi_l = 0.0;  // local-oscillator phase; homodyne only

    static DetectorConfig difference_intensity() { return {}; }
    static DetectorConfig homodyne(double phi_l) {
        DetectorConfig d;
        d.kind = Kind::homodyne;
        d.phi_l = phi_l;
        return d;
    }
};

/// One point of a sensitivity sweep. delta_phi = sqrt(variance)/|derivative|,
/// +infinity when the signal derivative vanishes.
struct SensitivityPoint {
    double phi = 0.0;
    double signal_derivative = 0.0;
    double variance = 0.0;
    double delta_phi = 0.0;
};

/// A_d and C_d of the difference-intensity variance decomposition; satisfy
/// A_d^2 + |C_d|^2 = 1.
struct DiffCoefficients {
    double a_d = 0.0;
    std::complex<double> c_d{0.0, 0.0};
};
DiffCoefficients diff_coefficients(const BeamSplitter& bs1, const BeamSplitter& bs2, double phi);

/// Difference-intensity detection N_d = n_4 - n_5 at internal phase phi.
/// Depends only on phi1 - phi2.
SensitivityPoint diff_intensity_point(const ModeMoments& m0, const ModeMoments& m1,
                                      const InterferometerConfig& cfg, double phi);

/// Mean signals <N_d> and <X_{phi_L}>; the derivatives inside the
/// SensitivityPoints are analytic, these are the quantities they derive.
double diff_intensity_mean(const ModeMoments& m0, const ModeMoments& m1, const InterferometerConfig& cfg,
                           double phi);
double homodyne_mean(const ModeMoments& m0, const ModeMoments& m1, const InterferometerConfig& cfg,
                     const DetectorConfig& det, double phi);

/// Balanced homodyne detection of the port-4 quadrature X_{phi_L}.
/// det.kind must be homodyne.
SensitivityPoint homodyne_point(const ModeMoments& m0, const ModeMoments& m1, const InterferometerConfig& cfg,
                                const DetectorConfig& det, double phi);

/// Working point phi minimizing delta_phi over [0, 2pi). Closed forms where
/// available (coherent families; squeezed families with an asymmetric
/// homodyne), golden-section search seeded by a 721-point grid otherwise.
double optimal_working_point(const StateFamily& fam, const DetectorConfig& det, const InterferometerConfig& cfg);

/// Optimal BS2 transmission for the optimal-angle homodyne sensitivity of a
/// squeezed family at fixed BS1 transmission t1. degenerate flags the r = z
/// case, where the closed form collapses to t' = 0.
struct Bs2Optimum {
    double t_prime = 0.0;
    bool degenerate = false;
};
Bs2Optimum bs2_t_opt(const StateFamily& fam, double t1);

/// Closed-form best sensitivity (at the optimal working point) for the
/// supported family/detector pairs, at the given beam-splitter amplitudes.
/// Supported: single_coherent x {difference_intensity, homodyne (sym)},
/// dual_coherent x difference_intensity (requires dtheta = 0), and the two
/// squeezed families x homodyne (asym, PMCs required).
double best_sensitivity(const StateFamily& fam, const DetectorConfig& det, double t1, double t1_prime);

/// Best sensitivity at the family's own optimal beam-splitter pair.
double best_sensitivity(const StateFamily& fam, const DetectorConfig& det);

}  // namespace mzi
