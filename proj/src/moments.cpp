#include "mzi/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace mzi {

double upsilon(const ComplexAmplitude& gamma, const SqueezeParam& chi, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("upsilon: sign must be +1 or -1");
    const double s = chi.factor;
    const double mag2 = gamma.magnitude * gamma.magnitude;
    return mag2 * (std::cosh(2.0 * s) + sign * std::sinh(2.0 * s) * std::cos(2.0 * gamma.phase - chi.phase));
}

ModeMoments moments_of(const PortState& port) {
    ModeMoments m;
    const std::complex<double> alpha = port.amplitude.value();
    const double s = port.squeeze.factor;
    const double sh = std::sinh(s);
    const double ch = std::cosh(s);
    const std::complex<double> u = std::polar(1.0, port.squeeze.phase);

    m.mean_a = alpha;
    m.mean_a2 = alpha * alpha - u * sh * ch;
    m.mean_n = std::norm(alpha) + sh * sh;
    const double sh2 = std::sinh(2.0 * s);
    m.var_n = upsilon(port.amplitude, port.squeeze, -1) + 0.5 * sh2 * sh2;
    m.cov_na = alpha * (sh * sh) - std::conj(alpha) * u * sh * ch;
    return m;
}

}  // namespace mzi
