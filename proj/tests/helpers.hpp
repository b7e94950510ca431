#pragma once

#include <cmath>
#include <random>

#include "mzi/fock.hpp"
#include "mzi/moments.hpp"
#include "mzi/states.hpp"

namespace mzi::testing {

inline double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

inline double rel_diff(std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long long seed) : gen(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(gen); }

    ComplexAmplitude amplitude(double max_mag) {
        return ComplexAmplitude(uniform(0.0, max_mag), uniform(0.0, 2.0 * 3.141592653589793));
    }
    SqueezeParam squeeze(double max_s) {
        return SqueezeParam(uniform(0.0, max_s), uniform(0.0, 2.0 * 3.141592653589793));
    }

    /// Desk-scale random port (|alpha| <= max_mag, s <= max_s).
    PortState port(double max_mag = 2.0, double max_s = 1.0, bool allow_vacuum = true) {
        switch (pick(allow_vacuum ? 4 : 3)) {
            case 0:
                return PortState::coherent(amplitude(max_mag));
            case 1:
                return PortState::squeezed_vacuum(squeeze(max_s));
            case 2:
                return PortState::squeezed_coherent(amplitude(max_mag), squeeze(max_s));
            default:
                return PortState::vacuum();
        }
    }
};

/// Smallest truncation >= base at which both ports build with the tail-mass
/// precondition satisfied.
inline int adequate_nmax(const PortState& p0, const PortState& p1, int base = 60) {
    int n = std::max({base, guideline_nmax(p0), guideline_nmax(p1)});
    for (;;) {
        try {
            build_state(p0, n);
            build_state(p1, n);
            return n;
        } catch (const under_truncation_error&) {
            n = static_cast<int>(n * 1.25) + 1;
            if (n > 600) throw;
        }
    }
}

}  // namespace mzi::testing
