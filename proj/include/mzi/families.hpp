#pragma once

#include <optional>

#include "mzi/fisher.hpp"
#include "mzi/moments.hpp"
#include "mzi/states.hpp"

namespace mzi {

/// The four separable Gaussian input families. Port 1 carries the coherent
/// amplitude alpha (and the squeeze zeta for the squeezed-coherent family);
/// port 0 carries beta or the squeeze xi.
struct StateFamily {
    enum class Kind { single_coherent, dual_coherent, coh_plus_sqz_vac, sqz_coh_plus_sqz_vac };

    Kind kind = Kind::single_coherent;
    ComplexAmplitude alpha;  // port 1 displacement
    ComplexAmplitude beta;   // port 0 displacement (dual coherent only)
    SqueezeParam xi;         // port 0 squeeze
    SqueezeParam zeta;       // port 1 squeeze (squeezed-coherent only)

    static StateFamily single_coherent(const ComplexAmplitude& alpha);
    static StateFamily dual_coherent(const ComplexAmplitude& alpha, const ComplexAmplitude& beta);
    static StateFamily coh_plus_sqz_vac(const ComplexAmplitude& alpha, const SqueezeParam& xi);
    static StateFamily sqz_coh_plus_sqz_vac(const ComplexAmplitude& alpha, const SqueezeParam& zeta,
                                            const SqueezeParam& xi);

    PortState port0() const;
    PortState port1() const;

    /// theta_alpha - theta_beta (dual coherent).
    double delta_theta() const { return alpha.phase - beta.phase; }
    bool is_squeezed() const {
        return kind == Kind::coh_plus_sqz_vac || kind == Kind::sqz_coh_plus_sqz_vac;
    }
    /// Whether the family's optimal phase-matching conditions hold:
    /// 2 theta_alpha - theta = 0 and, for the squeezed-coherent family,
    /// theta - phi = +/- pi (tolerance `tol` on the cosines).
    bool pmc_satisfied(double tol = 1e-9) const;
};

/// Coefficients of F^(i) = A_f |T|^4 + B_f |R|^4 + C_f |TR|^2.
struct TOptCoefficients {
    double a_f = 0.0;
    double b_f = 0.0;
    double c_f = 0.0;
};

/// Per-family closed-form QFI. Agrees with qfi(moments_of(port0),
/// moments_of(port1), bs, mode) to floating-point rounding.
double family_qfi(const StateFamily& fam, const BeamSplitter& bs, QfiMode mode);

/// Optimal BS1 transmission amplitude for a dual coherent input.
///  two_param  : sqrt(1/2 + sign(w^2-1) w sin(dtheta) / sqrt((1-w^2)^2 + 4 w^2 sin^2 dtheta)),
///               w = |beta|/|alpha|; raises std::domain_error when w = 1 and
///               sin(dtheta) = 0 (the expression degenerates to 0/0).
///  asym_single: the stationary maximum of F^(i) when sin(dtheta) > 0;
///               otherwise the better boundary (1 if |alpha| > |beta|, else 0).
double dual_coherent_t_opt(const ComplexAmplitude& alpha, const ComplexAmplitude& beta, QfiMode mode);

/// F^(i) coefficients for the two squeezed families.
TOptCoefficients t_opt_coefficients(const StateFamily& fam);

/// Stationary point of A_f x^2 + B_f (1-x)^2 + C_f x (1-x) in x = T^2:
/// t = sqrt((C_f - 2 B_f) / (2 (C_f - A_f - B_f))). Empty when the quadratic
/// degenerates (C_f = A_f + B_f) or the stationary point falls outside [0, 1].
/// The point is a maximum iff C_f > A_f + B_f.
std::optional<double> generic_t_opt(const TOptCoefficients& c);

/// Maximum of F^(i) over t in [0, 1]: the interior stationary value
/// (C_f - 2 B_f)^2 / (C_f - A_f - B_f) + 4 B_f when that point is an interior
/// maximum, else the better endpoint value max(4 A_f, 4 B_f).
double fi_max(const TOptCoefficients& c);

/// argmax of F^(i) over t in [0, 1] (interior stationary maximum when it
/// exists, otherwise the better endpoint).
double fi_argmax_t(const TOptCoefficients& c);

/// |alpha|^2 range over which an interior stationary point of F^(i) exists
/// for the coherent plus squeezed-vacuum family (PMC 2 theta_alpha - theta = 0
/// required). hi is +infinity when r > ln(2)/2. r = 0 raises std::domain_error.
struct AmplitudeSquaredInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double amp_squared) const { return amp_squared >= lo && amp_squared <= hi; }
};
AmplitudeSquaredInterval coh_sqz_existence(const ComplexAmplitude& alpha, const SqueezeParam& xi);

/// High-|alpha| approximation of the optimal BS1 transmission for the two
/// squeezed families, clamped to 1. Raises std::domain_error when the
/// approximation is singular (r = 0, or z = r for the squeezed-coherent
/// family).
double high_alpha_t_opt(const StateFamily& fam);

/// Whether F^(2p) and F^(ii) are maximized by a balanced BS1 (strict
/// inequalities, exactly as the closed-form conditions read).
struct BalancedOptimality {
    bool two_param_balanced = false;
    bool sym_balanced = false;
};
BalancedOptimality balanced_optimality_predicates(const StateFamily& fam);

}  // namespace mzi
