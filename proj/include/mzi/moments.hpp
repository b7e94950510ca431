#pragma once

#include <complex>

#include "mzi/states.hpp"

namespace mzi {

/// The five single-mode expectation values the interferometer formulas
/// consume. For a port state |psi> these are
///   mean_a  = <a>,  mean_a2 = <a^2>,  mean_n = <n>,  var_n = <n^2>-<n>^2,
///   cov_na  = <n a> - <n><a>.
/// The conjugate covariance <a^dag n> - <a^dag><n> equals conj(cov_na) and is
/// never stored.
struct ModeMoments {
    std::complex<double> mean_a{0.0, 0.0};
    std::complex<double> mean_a2{0.0, 0.0};
    double mean_n = 0.0;
    double var_n = 0.0;
    std::complex<double> cov_na{0.0, 0.0};

    /// <a^2> - <a>^2, the quadrature-bearing central moment.
    std::complex<double> var_a() const { return mean_a2 - mean_a * mean_a; }
    /// <n> - |<a>|^2, nonnegative for every supported state.
    double thermal_excess() const { return mean_n - std::norm(mean_a); }
};

/// Upsilon functions: |gamma|^2 (cosh 2s +/- sinh 2s cos(2 theta_gamma - vartheta)).
/// `sign` is +1 or -1.
double upsilon(const ComplexAmplitude& gamma, const SqueezeParam& chi, int sign);

/// Closed-form moments of D(alpha) S(chi) |0> (squeeze first, then displacement).
ModeMoments moments_of(const PortState& port);

}  // namespace mzi
