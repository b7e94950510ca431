#include "mzi/families.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mzi {

namespace {

double sq(double x) { return x * x; }

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

StateFamily StateFamily::single_coherent(const ComplexAmplitude& alpha) {
    StateFamily f;
    f.kind = Kind::single_coherent;
    f.alpha = alpha;
    return f;
}

StateFamily StateFamily::dual_coherent(const ComplexAmplitude& alpha, const ComplexAmplitude& beta) {
    StateFamily f;
    f.kind = Kind::dual_coherent;
    f.alpha = alpha;
    f.beta = beta;
    return f;
}

StateFamily StateFamily::coh_plus_sqz_vac(const ComplexAmplitude& alpha, const SqueezeParam& xi) {
    StateFamily f;
    f.kind = Kind::coh_plus_sqz_vac;
    f.alpha = alpha;
    f.xi = xi;
    return f;
}

StateFamily StateFamily::sqz_coh_plus_sqz_vac(const ComplexAmplitude& alpha, const SqueezeParam& zeta,
                                              const SqueezeParam& xi) {
    StateFamily f;
    f.kind = Kind::sqz_coh_plus_sqz_vac;
    f.alpha = alpha;
    f.zeta = zeta;
    f.xi = xi;
    return f;
}

PortState StateFamily::port0() const {
    switch (kind) {
        case Kind::single_coherent:
            return PortState::vacuum();
        case Kind::dual_coherent:
            return PortState::coherent(beta);
        case Kind::coh_plus_sqz_vac:
        case Kind::sqz_coh_plus_sqz_vac:
            return PortState::squeezed_vacuum(xi);
    }
    return PortState::vacuum();
}

PortState StateFamily::port1() const {
    switch (kind) {
        case Kind::single_coherent:
        case Kind::dual_coherent:
        case Kind::coh_plus_sqz_vac:
            return PortState::coherent(alpha);
        case Kind::sqz_coh_plus_sqz_vac:
            return PortState::squeezed_coherent(alpha, zeta);
    }
    return PortState::vacuum();
}

bool StateFamily::pmc_satisfied(double tol) const {
    switch (kind) {
        case Kind::single_coherent:
            return true;
        case Kind::dual_coherent:
            return true;  // no squeeze phases to match
        case Kind::coh_plus_sqz_vac:
            return std::cos(2.0 * alpha.phase - xi.phase) > 1.0 - tol;
        case Kind::sqz_coh_plus_sqz_vac:
            return std::cos(2.0 * alpha.phase - xi.phase) > 1.0 - tol &&
                   std::cos(xi.phase - zeta.phase) < -1.0 + tol;
    }
    return false;
}

namespace {

double two_param_from(double f_ss, double f_dd, double f_sd) {
    const double eps = 1e-12 * std::max(1.0, f_dd);
    if (f_ss <= eps) throw std::domain_error("family_qfi: sum-mode information vanishes (F_ss <= eps)");
    return f_dd - f_sd * f_sd / f_ss;
}

double dual_coherent_qfi(const StateFamily& fam, const BeamSplitter& bs, QfiMode mode) {
    const double a = fam.alpha.magnitude, b = fam.beta.magnitude;
    const double a2 = a * a, b2 = b * b, ab = a * b;
    const double S = a2 + b2;
    const double sdt = std::sin(fam.delta_theta());
    const double tr = bs.tr(), d = bs.asymmetry();
    switch (mode) {
        case QfiMode::two_param: {
            if (S <= 1e-12) throw std::domain_error("family_qfi: sum-mode information vanishes (F_ss <= eps)");
            return 4.0 * tr * tr * S - 16.0 * tr * tr * ab * ab * sdt * sdt / S + 4.0 * d * d * ab * ab / S -
                   8.0 * tr * d * ab * (a2 - b2) * sdt / S;
        }
        case QfiMode::asym_single:
            return 4.0 * bs.t_squared() * a2 + 4.0 * bs.r_squared() * b2 + 8.0 * tr * ab * sdt;
        case QfiMode::sym_single:
            return S;
    }
    throw std::logic_error("family_qfi: unknown mode");
}

double coh_sqz_qfi(const StateFamily& fam, const BeamSplitter& bs, QfiMode mode) {
    const double a2 = sq(fam.alpha.magnitude);
    const double r = fam.xi.factor;
    const double ups = upsilon(fam.alpha, fam.xi, +1);
    const double s2r = sq(std::sinh(2.0 * r)) / 2.0;
    const double shr2 = sq(std::sinh(r));
    const double tr2 = sq(bs.tr());
    switch (mode) {
        case QfiMode::two_param: {
            const double f_ss = a2 + s2r;
            if (f_ss <= 1e-12) throw std::domain_error("family_qfi: sum-mode information vanishes (F_ss <= eps)");
            return 4.0 * tr2 * (shr2 + ups) + 2.0 * (1.0 - 4.0 * tr2) * (2.0 * s2r) * a2 / f_ss;
        }
        case QfiMode::asym_single:
            return 4.0 * sq(bs.t_squared()) * a2 + 2.0 * sq(bs.r_squared()) * (2.0 * s2r) +
                   4.0 * tr2 * (shr2 + ups);
        case QfiMode::sym_single:
            return (1.0 - 2.0 * tr2) * (a2 + s2r) + 2.0 * tr2 * (shr2 + ups);
    }
    throw std::logic_error("family_qfi: unknown mode");
}

// Shared pieces of the squeezed-coherent plus squeezed-vacuum expressions.
struct SqzCohTerms {
    double var1;     // sinh^2(2z)/2 + Upsilon^-(alpha, zeta)  (port-1 photon variance)
    double var0;     // sinh^2(2r)/2                            (port-0 photon variance)
    double cross;    // Upsilon^+(alpha, xi) + sinh^2 r + sinh^2 z
                     //   + 2 sh r sh z (sh r sh z - ch r ch z cos(phi - theta))
    double mixed;    // the parenthesized 2 sh r sh z (...) part alone
};

SqzCohTerms sqz_coh_terms(const StateFamily& fam) {
    const double r = fam.xi.factor, z = fam.zeta.factor;
    const double shr = std::sinh(r), chr = std::cosh(r);
    const double shz = std::sinh(z), chz = std::cosh(z);
    const double cos_pt = std::cos(fam.zeta.phase - fam.xi.phase);
    SqzCohTerms t;
    t.var1 = sq(std::sinh(2.0 * z)) / 2.0 + upsilon(fam.alpha, fam.zeta, -1);
    t.var0 = sq(std::sinh(2.0 * r)) / 2.0;
    t.mixed = 2.0 * shr * shz * (shr * shz - chr * chz * cos_pt);
    t.cross = upsilon(fam.alpha, fam.xi, +1) + shr * shr + shz * shz + t.mixed;
    return t;
}

double sqz_coh_qfi(const StateFamily& fam, const BeamSplitter& bs, QfiMode mode) {
    const SqzCohTerms c = sqz_coh_terms(fam);
    const double tr2 = sq(bs.tr());
    const double d = bs.asymmetry();
    switch (mode) {
        case QfiMode::two_param: {
            const double f_ss = c.var0 + c.var1;
            if (f_ss <= 1e-12) throw std::domain_error("family_qfi: sum-mode information vanishes (F_ss <= eps)");
            return 4.0 * tr2 * c.cross + d * d * (2.0 * c.var0) * (2.0 * c.var1) / f_ss;
        }
        case QfiMode::asym_single:
            return 4.0 * sq(bs.t_squared()) * c.var1 + 4.0 * sq(bs.r_squared()) * c.var0 + 4.0 * tr2 * c.cross;
        case QfiMode::sym_single: {
            const double r = fam.xi.factor, z = fam.zeta.factor;
            const double cond = upsilon(fam.alpha, fam.xi, +1) - upsilon(fam.alpha, fam.zeta, -1) -
                                sq(std::sinh(r)) * std::cosh(2.0 * r) - sq(std::sinh(z)) * std::cosh(2.0 * z) +
                                c.mixed;
            return c.var0 + c.var1 + 2.0 * tr2 * cond;
        }
    }
    throw std::logic_error("family_qfi: unknown mode");
}

}  // namespace

double family_qfi(const StateFamily& fam, const BeamSplitter& bs, QfiMode mode) {
    switch (fam.kind) {
        case StateFamily::Kind::single_coherent: {
            const double a2 = sq(fam.alpha.magnitude);
            switch (mode) {
                case QfiMode::two_param:
                    if (a2 <= 1e-12)
                        throw std::domain_error("family_qfi: sum-mode information vanishes (F_ss <= eps)");
                    return 4.0 * sq(bs.tr()) * a2;
                case QfiMode::asym_single:
                    return 4.0 * bs.t_squared() * a2;
                case QfiMode::sym_single:
                    return a2;
            }
            break;
        }
        case StateFamily::Kind::dual_coherent:
            return dual_coherent_qfi(fam, bs, mode);
        case StateFamily::Kind::coh_plus_sqz_vac:
            return coh_sqz_qfi(fam, bs, mode);
        case StateFamily::Kind::sqz_coh_plus_sqz_vac:
            return sqz_coh_qfi(fam, bs, mode);
    }
    throw std::logic_error("family_qfi: unknown family");
}

double dual_coherent_t_opt(const ComplexAmplitude& alpha, const ComplexAmplitude& beta, QfiMode mode) {
    const double a = alpha.magnitude, b = beta.magnitude;
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("dual_coherent_t_opt: both amplitudes must be positive");
    const double sdt = std::sin(alpha.phase - beta.phase);
    switch (mode) {
        case QfiMode::two_param: {
            const double w = b / a;
            const double disc = sq(1.0 - w * w) + 4.0 * w * w * sdt * sdt;
            if (disc == 0.0)
                throw std::domain_error(
                    "dual_coherent_t_opt: formula is singular for equal amplitudes with sin(dtheta) = 0");
            const double sign = (w * w > 1.0) ? 1.0 : (w * w < 1.0 ? -1.0 : 0.0);
            return std::sqrt(0.5 + sign * w * sdt / std::sqrt(disc));
        }
        case QfiMode::asym_single: {
            if (sdt <= 0.0) {
                // Cross term vanishes or hurts; F^(i) is maximized at a boundary.
                return a > b ? 1.0 : 0.0;
            }
            if (a == b) return 1.0 / std::sqrt(2.0);
            // Stationary point of 4 x a^2 + 4 (1-x) b^2 + 8 sqrt(x(1-x)) ab sin(dtheta):
            // (2x - 1)/sqrt(x(1-x)) = (a^2 - b^2)/(ab sin dtheta) =: kappa.
            const double kappa = (a * a - b * b) / (a * b * sdt);
            const double x = 0.5 * (1.0 + kappa / std::sqrt(4.0 + kappa * kappa));
            return std::sqrt(x);
        }
        case QfiMode::sym_single:
            throw std::domain_error("dual_coherent_t_opt: F^(ii) is independent of the transmission");
    }
    throw std::logic_error("dual_coherent_t_opt: unknown mode");
}

TOptCoefficients t_opt_coefficients(const StateFamily& fam) {
    TOptCoefficients c;
    switch (fam.kind) {
        case StateFamily::Kind::coh_plus_sqz_vac: {
            const double r = fam.xi.factor;
            c.a_f = sq(fam.alpha.magnitude);
            c.b_f = sq(std::sinh(2.0 * r)) / 2.0;
            c.c_f = sq(std::sinh(r)) + upsilon(fam.alpha, fam.xi, +1);
            return c;
        }
        case StateFamily::Kind::sqz_coh_plus_sqz_vac: {
            const SqzCohTerms t = sqz_coh_terms(fam);
            c.a_f = t.var1;
            c.b_f = t.var0;
            c.c_f = t.cross;
            return c;
        }
        default:
            throw std::domain_error("t_opt_coefficients: only the squeezed families have F^(i) coefficients");
    }
}

std::optional<double> generic_t_opt(const TOptCoefficients& c) {
    const double den = c.c_f - c.a_f - c.b_f;
    if (den == 0.0) return std::nullopt;  // F^(i) linear in T^2
    const double x = (c.c_f - 2.0 * c.b_f) / (2.0 * den);
    if (x < 0.0 || x > 1.0) return std::nullopt;
    return std::sqrt(x);
}

namespace {

double fi_of(const TOptCoefficients& c, double x) {
    return 4.0 * (c.a_f * x * x + c.b_f * sq(1.0 - x) + c.c_f * x * (1.0 - x));
}

}  // namespace

double fi_max(const TOptCoefficients& c) {
    const double den = c.c_f - c.a_f - c.b_f;
    if (den > 0.0) {
        const double x = (c.c_f - 2.0 * c.b_f) / (2.0 * den);
        if (x > 0.0 && x < 1.0) return sq(c.c_f - 2.0 * c.b_f) / den + 4.0 * c.b_f;
    }
    return std::max(4.0 * c.a_f, 4.0 * c.b_f);
}

double fi_argmax_t(const TOptCoefficients& c) {
    const double den = c.c_f - c.a_f - c.b_f;
    if (den > 0.0) {
        const double x = (c.c_f - 2.0 * c.b_f) / (2.0 * den);
        if (x > 0.0 && x < 1.0) return std::sqrt(x);
    }
    return c.a_f >= c.b_f ? 1.0 : 0.0;
}

AmplitudeSquaredInterval coh_sqz_existence(const ComplexAmplitude& alpha, const SqueezeParam& xi) {
    const double r = xi.factor;
    if (r <= 0.0) throw std::domain_error("coh_sqz_existence: the case analysis is meaningless when r -> 0");
    if (!(std::cos(2.0 * alpha.phase - xi.phase) > 1.0 - 1e-9))
        throw std::domain_error("coh_sqz_existence: requires the PMC 2 theta_alpha - theta = 0");
    const double c2r = std::cosh(2.0 * r);
    const double lim1 = (c2r - 1.0) * (c2r + 0.5) / std::exp(2.0 * r);
    const double lim2 = sq(std::sinh(r)) / std::abs(2.0 - std::exp(2.0 * r));
    AmplitudeSquaredInterval out;
    if (r > std::log(2.0) / 2.0) {
        out.lo = lim1;
        out.hi = kInf;
    } else if (lim2 < lim1) {
        out.lo = lim2;
        out.hi = lim1;
    } else {
        out.lo = lim1;
        out.hi = lim2;
    }
    return out;
}

double high_alpha_t_opt(const StateFamily& fam) {
    switch (fam.kind) {
        case StateFamily::Kind::coh_plus_sqz_vac: {
            const double r = fam.xi.factor;
            if (r <= 0.0) throw std::domain_error("high_alpha_t_opt: singular approximation at r = 0");
            const double t = std::exp(r) / std::sqrt(2.0 * (std::exp(2.0 * r) - 1.0));
            return std::min(t, 1.0);
        }
        case StateFamily::Kind::sqz_coh_plus_sqz_vac: {
            const double r = fam.xi.factor, z = fam.zeta.factor;
            if (r == z) throw std::domain_error("high_alpha_t_opt: singular approximation at z = r");
            const double t = std::sqrt(1.0 / (2.0 * std::abs(1.0 - std::exp(2.0 * (z - r)))));
            return std::min(t, 1.0);
        }
        default:
            throw std::domain_error("high_alpha_t_opt: defined for the squeezed families only");
    }
}

BalancedOptimality balanced_optimality_predicates(const StateFamily& fam) {
    BalancedOptimality out;
    switch (fam.kind) {
        case StateFamily::Kind::coh_plus_sqz_vac: {
            const double a2 = sq(fam.alpha.magnitude);
            const double r = fam.xi.factor;
            const double ups = upsilon(fam.alpha, fam.xi, +1);
            const double s2r = sq(std::sinh(2.0 * r));
            out.two_param_balanced = sq(std::sinh(r)) + ups - 2.0 * s2r * a2 / (a2 + s2r / 2.0) > 0.0;
            out.sym_balanced = ups - a2 - sq(std::sinh(r)) * std::cosh(2.0 * r) > 0.0;
            return out;
        }
        case StateFamily::Kind::sqz_coh_plus_sqz_vac: {
            const SqzCohTerms t = sqz_coh_terms(fam);
            const double r = fam.xi.factor, z = fam.zeta.factor;
            // F^(2p) = 4|TR|^2 cross + (|T|^2-|R|^2)^2 * 4 var0 var1 / (var0 + var1):
            // balanced is the maximum iff the |TR|^2 coefficient dominates.
            out.two_param_balanced = t.cross - 4.0 * t.var0 * t.var1 / (t.var0 + t.var1) > 0.0;
            out.sym_balanced = upsilon(fam.alpha, fam.xi, +1) - upsilon(fam.alpha, fam.zeta, -1) -
                                   sq(std::sinh(r)) * std::cosh(2.0 * r) -
                                   sq(std::sinh(z)) * std::cosh(2.0 * z) + t.mixed >
                               0.0;
            return out;
        }
        default:
            throw std::domain_error("balanced_optimality_predicates: defined for the squeezed families only");
    }
}

}  // namespace mzi
