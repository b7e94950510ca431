#pragma once

#include <complex>

#include "mzi/moments.hpp"

namespace mzi {

/// Lossless beam splitter under the sign convention i T* R = -|TR|, realized
/// with T real nonnegative and R purely imaginary: T = t, R = i sqrt(1-t^2).
class BeamSplitter {
  public:
    /// t is the transmission amplitude |T| in [0, 1]; out of range raises
    /// std::domain_error.
    explicit BeamSplitter(double t);

    double t() const { return t_; }
    double t_squared() const { return t_ * t_; }
    double r_squared() const { return 1.0 - t_ * t_; }
    std::complex<double> transmission() const { return {t_, 0.0}; }
    std::complex<double> reflection() const;

    /// |T R| = t sqrt(1 - t^2).
    double tr() const;
    /// |T|^2 - |R|^2 = 2 t^2 - 1.
    double asymmetry() const { return 2.0 * t_ * t_ - 1.0; }
    /// T* R = i |TR| under the sign convention.
    std::complex<double> tstar_r() const { return {0.0, tr()}; }

    static BeamSplitter balanced();

  private:
    double t_;
};

/// Phase-estimation scenario selecting which quantum Fisher information
/// applies: two independent phase shifts, a single phase shift in one arm, or
/// anticorrelated +/- phi/2 shifts.
enum class QfiMode { two_param, asym_single, sym_single };

/// Elements of the symmetric 2x2 Fisher matrix over (phi_s, phi_d).
struct FisherMatrix {
    double ss = 0.0;
    double dd = 0.0;
    double sd = 0.0;  // = ds
};

/// General-transmission Fisher matrix for a separable two-port input.
FisherMatrix fisher_matrix(const ModeMoments& m0, const ModeMoments& m1, const BeamSplitter& bs);

/// Quantum Fisher information for the chosen scenario.
///  two_param  : F_dd - F_sd^2 / F_ss; raises std::domain_error when the
///               sum-mode information vanishes (F_ss <= 1e-12 max(1, F_dd)).
///  asym_single: 4 Var(n_3), evaluated from the input moments.
///  sym_single : Var(n_2) + Var(n_3), evaluated from the input moments.
double qfi(const ModeMoments& m0, const ModeMoments& m1, const BeamSplitter& bs, QfiMode mode);

/// Cramer-Rao bound 1/sqrt(f); f <= 0 raises std::domain_error.
double qcrb(double f);

}  // namespace mzi
