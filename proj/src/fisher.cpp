#include "mzi/fisher.hpp"

#include <cmath>
#include <stdexcept>

namespace mzi {

BeamSplitter::BeamSplitter(double t) : t_(t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("BeamSplitter: transmission amplitude must lie in [0, 1]");
}

std::complex<double> BeamSplitter::reflection() const {
    return {0.0, std::sqrt(1.0 - t_ * t_)};
}

double BeamSplitter::tr() const {
    return t_ * std::sqrt(1.0 - t_ * t_);
}

BeamSplitter BeamSplitter::balanced() {
    return BeamSplitter(1.0 / std::sqrt(2.0));
}

FisherMatrix fisher_matrix(const ModeMoments& m0, const ModeMoments& m1, const BeamSplitter& bs) {
    const double tr = bs.tr();
    const double d = bs.asymmetry();

    const std::complex<double> a0 = m0.mean_a, a1 = m1.mean_a;
    const std::complex<double> a20 = m0.mean_a2, a21 = m1.mean_a2;
    const std::complex<double> c0 = m0.cov_na, c1 = m1.cov_na;

    FisherMatrix f;
    f.ss = m0.var_n + m1.var_n;

    f.dd = d * d * (m0.var_n + m1.var_n) +
           8.0 * tr * tr *
               (m0.mean_n * m1.mean_n - std::norm(a0) * std::norm(a1) -
                std::real(std::conj(a20) * a21 - std::conj(a0) * std::conj(a0) * a1 * a1)) +
           4.0 * tr * tr * (m0.mean_n + m1.mean_n) -
           8.0 * tr * d * std::imag(std::conj(c0) * a1 + a0 * std::conj(c1));

    f.sd = d * (m0.var_n - m1.var_n) +
           4.0 * tr * std::imag(a0 * std::conj(a1) + c0 * std::conj(a1) + a0 * std::conj(c1));
    return f;
}

namespace {

double qfi_asym_single(const ModeMoments& m0, const ModeMoments& m1, const BeamSplitter& bs) {
    const double t2 = bs.t_squared();
    const double r2 = bs.r_squared();
    const double tr = bs.tr();
    const std::complex<double> a0 = m0.mean_a, a1 = m1.mean_a;
    return 4.0 * r2 * r2 * m0.var_n + 4.0 * t2 * t2 * m1.var_n +
           4.0 * tr * tr *
               (m0.mean_n + m1.mean_n + 2.0 * (m0.mean_n * m1.mean_n - std::norm(a0) * std::norm(a1))) -
           8.0 * tr * tr * std::real(m0.mean_a2 * std::conj(m1.mean_a2) - a0 * a0 * std::conj(a1) * std::conj(a1)) -
           8.0 * tr * std::imag(a0 * std::conj(a1)) - 16.0 * tr * r2 * std::imag(m0.cov_na * std::conj(a1)) -
           16.0 * tr * t2 * std::imag(a0 * std::conj(m1.cov_na));
}

double qfi_sym_single(const ModeMoments& m0, const ModeMoments& m1, const BeamSplitter& bs) {
    const double t2 = bs.t_squared();
    const double r2 = bs.r_squared();
    const double tr = bs.tr();
    const std::complex<double> tsr = bs.tstar_r();
    const std::complex<double> a0 = m0.mean_a, a1 = m1.mean_a;
    const std::complex<double> a20 = m0.mean_a2, a21 = m1.mean_a2;
    const std::complex<double> c0 = m0.cov_na, c1 = m1.cov_na;

    const std::complex<double> cross =
        a20 * std::conj(a21) + std::conj(a20) * a21 - a0 * a0 * std::conj(a1) * std::conj(a1) -
        std::conj(a0) * std::conj(a0) * a1 * a1;
    // The T*R-prefixed covariance block; purely real once the four conjugate
    // pairs are summed, so the full complex expression is evaluated and the
    // real part taken last.
    const std::complex<double> cov_block =
        2.0 * tsr * (t2 - r2) *
        (std::conj(c0) * a1 - c0 * std::conj(a1) + a0 * std::conj(c1) - std::conj(a0) * c1);

    return (t2 * t2 + r2 * r2) * (m0.var_n + m1.var_n) +
           2.0 * tr * tr *
               (m0.mean_n + m1.mean_n + 2.0 * (m0.mean_n * m1.mean_n - std::norm(a0) * std::norm(a1))) -
           2.0 * tr * tr * std::real(cross) + std::real(cov_block);
}

}  // namespace

double qfi(const ModeMoments& m0, const ModeMoments& m1, const BeamSplitter& bs, QfiMode mode) {
    switch (mode) {
        case QfiMode::two_param: {
            const FisherMatrix f = fisher_matrix(m0, m1, bs);
            const double eps = 1e-12 * std::max(1.0, f.dd);
            if (f.ss <= eps) throw std::domain_error("qfi: sum-mode information vanishes (F_ss <= eps)");
            return f.dd - f.sd * f.sd / f.ss;
        }
        case QfiMode::asym_single:
            return qfi_asym_single(m0, m1, bs);
        case QfiMode::sym_single:
            return qfi_sym_single(m0, m1, bs);
    }
    throw std::logic_error("qfi: unknown mode");
}

double qcrb(double f) {
    if (!(f > 0.0)) throw std::domain_error("qcrb: no information (f <= 0)");
    return 1.0 / std::sqrt(f);
}

}  // namespace mzi
