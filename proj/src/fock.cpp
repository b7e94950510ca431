#include "mzi/fock.hpp"

#include <cmath>
#include <complex>

namespace mzi {

namespace {

using complexd = std::complex<double>;

constexpr double kTailLimit = 1e-10;
constexpr double kFdStep = 1e-5;

// psi_out = V diag(e^{i s lambda}) V^T psi for a real symmetric H = V L V^T.
Eigen::MatrixXcd unitary_from_symmetric(const Eigen::MatrixXd& h, double scale) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    const Eigen::VectorXd& lam = es.eigenvalues();
    const Eigen::MatrixXd& v = es.eigenvectors();
    Eigen::VectorXcd phase(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i) phase(i) = std::polar(1.0, scale * lam(i));
    return (v.cast<complexd>() * phase.asDiagonal()) * v.transpose().cast<complexd>();
}

Eigen::MatrixXcd unitary_from_hermitian(const Eigen::MatrixXcd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const Eigen::VectorXd& lam = es.eigenvalues();
    const Eigen::MatrixXcd& v = es.eigenvectors();
    Eigen::VectorXcd phase(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i) phase(i) = std::polar(1.0, lam(i));
    return (v * phase.asDiagonal()) * v.adjoint();
}

}  // namespace

int tail_band_start(int nmax) {
    return static_cast<int>(std::ceil(0.9 * (nmax + 1)));
}

double tail_mass(const FockVector& v) {
    const int start = tail_band_start(v.nmax);
    double m = 0.0;
    for (int n = start; n <= v.nmax; ++n) m += std::norm(v.amps(n));
    return m;
}

double tail_mass(const TwoModeState& s) {
    const int start = tail_band_start(s.nmax);
    double m = 0.0;
    for (int i = 0; i <= s.nmax; ++i)
        for (int j = 0; j <= s.nmax; ++j)
            if (i >= start || j >= start) m += std::norm(s.amps(i, j));
    return m;
}

int guideline_nmax(const PortState& port) {
    const double x = port.amplitude.magnitude + 3.0 * port.squeeze.factor + 3.0;
    return static_cast<int>(std::ceil(x * x));
}

FockVector build_state(const PortState& port, int nmax) {
    if (nmax < 1) throw std::domain_error("build_state: nmax must be >= 1");
    const int dim = nmax + 1;
    FockVector v;
    v.nmax = nmax;
    v.amps = Eigen::VectorXcd::Zero(dim);
    v.amps(0) = 1.0;

    if (port.has_squeeze()) {
        // U = exp((chi* a^2 - chi a^dag^2)/2) = exp(i H), H Hermitian.
        const complexd chi = port.squeeze.value();
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
        for (int n = 0; n + 2 <= nmax; ++n) {
            // (a^2)_{n, n+2} = sqrt((n+1)(n+2))
            const double g = std::sqrt(double(n + 1) * double(n + 2));
            const complexd gen = 0.5 * std::conj(chi) * g;  // coefficient of |n><n+2|
            // H = -i G with G_{n,n+2} = gen, G_{n+2,n} = -conj(gen)
            h(n, n + 2) = complexd(0.0, -1.0) * gen;
            h(n + 2, n) = std::conj(h(n, n + 2));
        }
        v.amps = (unitary_from_hermitian(h) * v.amps).eval();
    }
    if (port.has_displacement()) {
        const complexd alpha = port.amplitude.value();
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
        for (int n = 0; n + 1 <= nmax; ++n) {
            // G = alpha a^dag - alpha* a; H = -i G
            const complexd gen = -std::conj(alpha) * std::sqrt(double(n + 1));  // |n><n+1| entry of G
            h(n, n + 1) = complexd(0.0, -1.0) * gen;
            h(n + 1, n) = std::conj(h(n, n + 1));
        }
        v.amps = (unitary_from_hermitian(h) * v.amps).eval();
    }

    const double tail = tail_mass(v);
    if (tail >= kTailLimit) throw under_truncation_error(tail, nmax);
    return v;
}

ModeMoments numeric_moments(const FockVector& v) {
    ModeMoments m;
    complexd mean_a = 0.0, mean_a2 = 0.0, mean_na = 0.0;
    double mean_n = 0.0, mean_n2 = 0.0;
    for (int n = 0; n <= v.nmax; ++n) {
        const double p = std::norm(v.amps(n));
        mean_n += n * p;
        mean_n2 += double(n) * n * p;
        if (n >= 1) mean_a += std::conj(v.amps(n - 1)) * std::sqrt(double(n)) * v.amps(n);
        if (n >= 2) mean_a2 += std::conj(v.amps(n - 2)) * std::sqrt(double(n) * (n - 1)) * v.amps(n);
        if (n >= 1) mean_na += std::conj(v.amps(n - 1)) * (double(n) - 1.0) * std::sqrt(double(n)) * v.amps(n);
    }
    m.mean_a = mean_a;
    m.mean_a2 = mean_a2;
    m.mean_n = mean_n;
    m.var_n = mean_n2 - mean_n * mean_n;
    m.cov_na = mean_na - mean_n * mean_a;
    return m;
}

TwoModeState product_state(const FockVector& v0, const FockVector& v1) {
    if (v0.nmax != v1.nmax) throw std::invalid_argument("product_state: mismatched truncations");
    TwoModeState s;
    s.nmax = v0.nmax;
    s.amps = v0.amps * v1.amps.transpose();
    return s;
}

BsUnitary::BsUnitary(const BeamSplitter& bs, int nmax) : nmax_(nmax) {
    const double theta = std::acos(std::min(1.0, std::max(0.0, bs.t())));
    blocks_.reserve(2 * nmax + 1);
    for (int total = 0; total <= 2 * nmax; ++total) {
        const int kmin = std::max(0, total - nmax);
        const int kmax = std::min(total, nmax);
        const int sz = kmax - kmin + 1;
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(sz, sz);
        for (int i = 0; i + 1 < sz; ++i) {
            const int k = kmin + i;  // k photons in mode 0
            const double g = std::sqrt(double(k + 1) * double(total - k));
            h(i, i + 1) = g;
            h(i + 1, i) = g;
        }
        blocks_.push_back(unitary_from_symmetric(h, theta));
    }
}

void BsUnitary::apply(TwoModeState& state) const {
    if (state.nmax != nmax_) throw std::invalid_argument("BsUnitary: mismatched truncations");
    Eigen::VectorXcd sector(nmax_ + 1);
    for (int total = 0; total <= 2 * nmax_; ++total) {
        const int kmin = std::max(0, total - nmax_);
        const int kmax = std::min(total, nmax_);
        const int sz = kmax - kmin + 1;
        for (int i = 0; i < sz; ++i) sector(i) = state.amps(kmin + i, total - kmin - i);
        sector.head(sz) = (blocks_[total] * sector.head(sz)).eval();
        for (int i = 0; i < sz; ++i) state.amps(kmin + i, total - kmin - i) = sector(i);
    }
}

void apply_beam_splitter(TwoModeState& state, const BeamSplitter& bs) {
    BsUnitary(bs, state.nmax).apply(state);
}

void apply_arm_phases(TwoModeState& state, double phi_mode0, double phi_mode1) {
    for (int i = 0; i <= state.nmax; ++i) {
        const complexd f0 = std::polar(1.0, -phi_mode0 * i);
        for (int j = 0; j <= state.nmax; ++j)
            state.amps(i, j) *= f0 * std::polar(1.0, -phi_mode1 * j);
    }
}

ModeMoments mode_moments(const TwoModeState& state, int mode) {
    const int dim = state.nmax + 1;
    ModeMoments m;
    complexd mean_a = 0.0, mean_a2 = 0.0, mean_na = 0.0;
    double mean_n = 0.0, mean_n2 = 0.0;
    auto at = [&](int n, int other) { return mode == 0 ? state.amps(n, other) : state.amps(other, n); };
    for (int other = 0; other < dim; ++other) {
        for (int n = 0; n < dim; ++n) {
            const complexd c = at(n, other);
            const double p = std::norm(c);
            mean_n += n * p;
            mean_n2 += double(n) * n * p;
            if (n >= 1) {
                const complexd pair = std::conj(at(n - 1, other)) * std::sqrt(double(n)) * c;
                mean_a += pair;
                mean_na += (double(n) - 1.0) * pair;
            }
            if (n >= 2) mean_a2 += std::conj(at(n - 2, other)) * std::sqrt(double(n) * (n - 1)) * c;
        }
    }
    m.mean_a = mean_a;
    m.mean_a2 = mean_a2;
    m.mean_n = mean_n;
    m.var_n = mean_n2 - mean_n * mean_n;
    m.cov_na = mean_na - mean_n * mean_a;
    return m;
}

double photon_covariance(const TwoModeState& state) {
    double m0 = 0.0, m1 = 0.0, m01 = 0.0;
    for (int i = 0; i <= state.nmax; ++i)
        for (int j = 0; j <= state.nmax; ++j) {
            const double p = std::norm(state.amps(i, j));
            m0 += i * p;
            m1 += j * p;
            m01 += double(i) * j * p;
        }
    return m01 - m0 * m1;
}

namespace {

TwoModeState after_bs1(const PortState& p0, const PortState& p1, const BeamSplitter& bs, int nmax) {
    const FockVector v0 = build_state(p0, nmax);
    const FockVector v1 = build_state(p1, nmax);
    TwoModeState s = product_state(v0, v1);
    apply_beam_splitter(s, bs);
    const double tail = tail_mass(s);
    if (tail >= kTailLimit) throw under_truncation_error(tail, nmax);
    return s;
}

}  // namespace

double numeric_qfi(const PortState& p0, const PortState& p1, const BeamSplitter& bs, QfiMode mode, int nmax) {
    const TwoModeState s = after_bs1(p0, p1, bs, nmax);
    const double var2 = mode_moments(s, 0).var_n;
    const double var3 = mode_moments(s, 1).var_n;
    switch (mode) {
        case QfiMode::two_param: {
            const double cov = photon_covariance(s);
            const double f_ss = var2 + var3 + 2.0 * cov;
            const double f_dd = var2 + var3 - 2.0 * cov;
            const double f_sd = var2 - var3;
            const double eps = 1e-12 * std::max(1.0, f_dd);
            if (f_ss <= eps) throw std::domain_error("numeric_qfi: sum-mode information vanishes (F_ss <= eps)");
            return f_dd - f_sd * f_sd / f_ss;
        }
        case QfiMode::asym_single:
            return 4.0 * var3;
        case QfiMode::sym_single:
            return var2 + var3;
    }
    throw std::logic_error("numeric_qfi: unknown mode");
}

SymSingleReport numeric_sym_report(const PortState& p0, const PortState& p1, const BeamSplitter& bs, int nmax) {
    const TwoModeState s = after_bs1(p0, p1, bs, nmax);
    const double var2 = mode_moments(s, 0).var_n;
    const double var3 = mode_moments(s, 1).var_n;
    const double cov = photon_covariance(s);
    SymSingleReport r;
    r.variance_sum = var2 + var3;
    r.generator_variance = var2 + var3 - 2.0 * cov;
    return r;
}

namespace {

struct OutputStats {
    double nd_mean = 0.0, nd_var = 0.0;
    double x_mean = 0.0, x_var = 0.0;
};

OutputStats measure(const TwoModeState& s, double phi_l) {
    OutputStats o;
    double d1 = 0.0, d2 = 0.0;
    complexd mean_a = 0.0, mean_a2 = 0.0;
    double mean_n = 0.0;
    const complexd e = std::polar(1.0, -phi_l);
    for (int i = 0; i <= s.nmax; ++i)
        for (int j = 0; j <= s.nmax; ++j) {
            const complexd c = s.amps(i, j);
            const double p = std::norm(c);
            const double diff = double(i) - double(j);
            d1 += diff * p;
            d2 += diff * diff * p;
            mean_n += i * p;
            if (i >= 1) mean_a += std::conj(s.amps(i - 1, j)) * std::sqrt(double(i)) * c;
            if (i >= 2) mean_a2 += std::conj(s.amps(i - 2, j)) * std::sqrt(double(i) * (i - 1)) * c;
        }
    o.nd_mean = d1;
    o.nd_var = d2 - d1 * d1;
    o.x_mean = std::real(e * mean_a);
    const double x2 = (2.0 * std::real(e * e * mean_a2) + 2.0 * mean_n + 1.0) / 4.0;
    o.x_var = x2 - o.x_mean * o.x_mean;
    return o;
}

}  // namespace

DetectionStats numeric_detection(const PortState& p0, const PortState& p1, const InterferometerConfig& cfg,
                                 const DetectorConfig& det, double phi, int nmax) {
    const TwoModeState base = after_bs1(p0, p1, cfg.bs1, nmax);
    const BsUnitary bs2(cfg.bs2, nmax);

    auto out_stats = [&](double ph) {
        double ph1 = 0.0, ph2 = 0.0;
        cfg.scenario.arm_phases(ph, ph1, ph2);
        TwoModeState s = base;
        apply_arm_phases(s, ph2, ph1);  // mode 0 is port 2, mode 1 is port 3
        bs2.apply(s);
        return measure(s, det.phi_l);
    };

    const OutputStats center = out_stats(phi);
    const OutputStats plus = out_stats(phi + kFdStep);
    const OutputStats minus = out_stats(phi - kFdStep);

    DetectionStats r;
    if (det.kind == DetectorConfig::Kind::difference_intensity) {
        r.mean = center.nd_mean;
        r.variance = center.nd_var;
        r.derivative = (plus.nd_mean - minus.nd_mean) / (2.0 * kFdStep);
    } else {
        r.mean = center.x_mean;
        r.variance = center.x_var;
        r.derivative = (plus.x_mean - minus.x_mean) / (2.0 * kFdStep);
    }
    return r;
}

}  // namespace mzi
