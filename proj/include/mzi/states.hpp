#pragma once

#include <complex>
#include <string>

namespace mzi {

/// Normalize an angle in radians into [0, 2*pi).
double normalize_phase(double rad);

/// Coherent displacement in polar form, alpha = magnitude * e^{i phase}.
/// Dimensionless photon-amplitude units.
struct ComplexAmplitude {
    double magnitude = 0.0;
    double phase = 0.0;  // radians in [0, 2pi)

    ComplexAmplitude() = default;
    ComplexAmplitude(double mag, double ph);

    std::complex<double> value() const;
};

/// Squeezing parameter chi = factor * e^{i phase}, factor >= 0.
struct SqueezeParam {
    double factor = 0.0;
    double phase = 0.0;  // radians in [0, 2pi)

    SqueezeParam() = default;
    SqueezeParam(double s, double ph);

    std::complex<double> value() const;
};

/// Single input port of the interferometer: a member of the
/// displaced-squeezed-vacuum family D(alpha) S(chi) |0>.
struct PortState {
    enum class Kind { vacuum, coherent, squeezed_vacuum, squeezed_coherent };

    Kind kind = Kind::vacuum;
    ComplexAmplitude amplitude;  // zero unless kind carries a displacement
    SqueezeParam squeeze;        // zero unless kind carries a squeeze

    bool has_displacement() const { return amplitude.magnitude > 0.0; }
    bool has_squeeze() const { return squeeze.factor > 0.0; }

    // Constructors normalize degenerate parameters: a zero-magnitude
    // displacement or zero squeeze factor collapses to the simpler kind.
    static PortState vacuum();
    static PortState coherent(const ComplexAmplitude& a);
    static PortState squeezed_vacuum(const SqueezeParam& s);
    static PortState squeezed_coherent(const ComplexAmplitude& a, const SqueezeParam& s);
};

/// Parse the textual port-state grammar:
///   vac | coh:<mag>:<phase> | sqz:<factor>:<phase> | sqzcoh:<mag>:<phase>:<factor>:<phase>
/// Phases in radians, decimal notation. Malformed text raises
/// std::invalid_argument naming the offending position; negative magnitudes
/// or squeeze factors raise std::domain_error.
PortState parse_state(const std::string& text);

std::string to_string(const PortState& p);

}  // namespace mzi
