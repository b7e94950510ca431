#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "mzi/detection.hpp"
#include "mzi/fisher.hpp"
#include "mzi/moments.hpp"
#include "mzi/states.hpp"

namespace mzi {

/// Raised when more than 1e-10 of a state's mass sits in the top 10% of the
/// truncated Fock basis.
class under_truncation_error : public std::runtime_error {
  public:
    under_truncation_error(double tail, int nmax)
        : std::runtime_error("under-truncated Fock state: tail mass " + std::to_string(tail) + " at nmax " +
                             std::to_string(nmax)),
          tail_mass(tail) {}
    double tail_mass;
};

/// Single-mode state on the truncated Fock basis {|0>, ..., |nmax>}.
struct FockVector {
    Eigen::VectorXcd amps;
    int nmax = 0;
};

/// Two-mode state; amps(n0, n1). Mode 0 is input port 0 (output port 2 after
/// BS1 and port 4 after BS2); mode 1 is input port 1 (ports 3 and 5).
struct TwoModeState {
    Eigen::MatrixXcd amps;
    int nmax = 0;
};

/// First index of the top-10% tail band: ceil(0.9 (nmax+1)).
int tail_band_start(int nmax);
double tail_mass(const FockVector& v);
double tail_mass(const TwoModeState& s);

/// ceil((|alpha| + 3 s + 3)^2), the minimum suggested truncation for a port.
int guideline_nmax(const PortState& port);

/// Normalized truncation of D(alpha) S(chi) |0> (squeeze applied first).
/// Raises under_truncation_error when the tail check fails.
FockVector build_state(const PortState& port, int nmax);

/// The five ModeMoments by direct contraction with the ladder operators.
ModeMoments numeric_moments(const FockVector& v);

TwoModeState product_state(const FockVector& v0, const FockVector& v1);

/// Beam-splitter unitary exp(i theta (a0^dag a1 + a0 a1^dag)), theta =
/// arccos(t), block-diagonal over total photon number. Conjugation reproduces
/// a2 = T a0 + R a1, a3 = R a0 + T a1 with T = t, R = i sqrt(1 - t^2).
class BsUnitary {
  public:
    BsUnitary(const BeamSplitter& bs, int nmax);
    void apply(TwoModeState& state) const;

  private:
    std::vector<Eigen::MatrixXcd> blocks_;
    int nmax_;
};

void apply_beam_splitter(TwoModeState& state, const BeamSplitter& bs);

/// Multiplies amplitudes by e^{-i phi_mode0 n0} e^{-i phi_mode1 n1}.
void apply_arm_phases(TwoModeState& state, double phi_mode0, double phi_mode1);

ModeMoments mode_moments(const TwoModeState& state, int mode);
/// Cov(n_mode0, n_mode1).
double photon_covariance(const TwoModeState& state);

/// Brute-force QFI via generator variances after BS1:
///   two_param  : Var(n2 - n3) - (Var n2 - Var n3)^2 / Var(n2 + n3)
///   asym_single: 4 Var(n3)
///   sym_single : Var(n2) + Var(n3)
double numeric_qfi(const PortState& p0, const PortState& p1, const BeamSplitter& bs, QfiMode mode, int nmax);

/// Both candidate symmetric-scenario values; they differ by 2 Cov(n2, n3).
struct SymSingleReport {
    double variance_sum = 0.0;        // Var(n2) + Var(n3), the value qfi() uses
    double generator_variance = 0.0;  // Var(n3 - n2)
};
SymSingleReport numeric_sym_report(const PortState& p0, const PortState& p1, const BeamSplitter& bs, int nmax);

/// Full-interferometer detection statistics; derivative by central finite
/// difference with step 1e-5 rad.
struct DetectionStats {
    double mean = 0.0;
    double variance = 0.0;
    double derivative = 0.0;
};
DetectionStats numeric_detection(const PortState& p0, const PortState& p1, const InterferometerConfig& cfg,
                                 const DetectorConfig& det, double phi, int nmax);

}  // namespace mzi
