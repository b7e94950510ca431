#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "mzi/families.hpp"

using namespace mzi;
using mzi::testing::Rng;
using mzi::testing::rel_diff;

namespace {

constexpr double kPi = std::numbers::pi;

StateFamily random_family(Rng& rng, double max_mag = 2.0) {
    switch (rng.pick(4)) {
        case 0:
            return StateFamily::single_coherent(ComplexAmplitude(rng.uniform(0.1, max_mag), rng.uniform(0, 6.28)));
        case 1:
            return StateFamily::dual_coherent(ComplexAmplitude(rng.uniform(0.1, max_mag), rng.uniform(0, 6.28)),
                                              ComplexAmplitude(rng.uniform(0.1, max_mag), rng.uniform(0, 6.28)));
        case 2:
            return StateFamily::coh_plus_sqz_vac(ComplexAmplitude(rng.uniform(0.1, max_mag), rng.uniform(0, 6.28)),
                                                 rng.squeeze(1.0));
        default:
            return StateFamily::sqz_coh_plus_sqz_vac(
                ComplexAmplitude(rng.uniform(0.1, max_mag), rng.uniform(0, 6.28)), rng.squeeze(1.0),
                rng.squeeze(1.0));
    }
}

double grid_qfi_max(const StateFamily& fam, QfiMode mode, int points, double* arg = nullptr) {
    double best = -1.0, best_x = 0.0;
    for (int i = 0; i < points; ++i) {
        const double x = double(i) / (points - 1);
        const double v = family_qfi(fam, BeamSplitter(std::sqrt(x)), mode);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    if (arg) *arg = best_x;
    return best;
}

}  // namespace

TEST_CASE("family closed forms agree with the generic Fisher path") {
    Rng rng(300);
    for (int rep = 0; rep < 40; ++rep) {
        const StateFamily fam = random_family(rng);
        const ModeMoments m0 = moments_of(fam.port0());
        const ModeMoments m1 = moments_of(fam.port1());
        for (int i = 0; i <= 100; ++i) {
            const BeamSplitter bs(std::sqrt(i / 100.0));
            for (QfiMode mode : {QfiMode::two_param, QfiMode::asym_single, QfiMode::sym_single}) {
                if (mode == QfiMode::two_param && m0.var_n + m1.var_n <= 1e-9) continue;
                CHECK(rel_diff(family_qfi(fam, bs, mode), qfi(m0, m1, bs, mode)) < 1e-12);
            }
        }
    }
}

TEST_CASE("dual coherent optimum transmissions") {
    const ComplexAmplitude alpha(10.0, kPi / 2.0);
    const ComplexAmplitude beta(5.0, 0.0);  // dtheta = pi/2

    const double ti = dual_coherent_t_opt(alpha, beta, QfiMode::asym_single);
    CHECK(std::abs(ti * ti - 0.8) < 1e-15);
    CHECK(family_qfi(StateFamily::dual_coherent(alpha, beta), BeamSplitter(ti), QfiMode::asym_single) ==
          doctest::Approx(500.0).epsilon(1e-12));

    const double t2p = dual_coherent_t_opt(alpha, beta, QfiMode::two_param);
    CHECK(std::abs(t2p * t2p - 0.10) < 1e-15);

    // equal amplitudes hit the removable point
    CHECK(dual_coherent_t_opt(ComplexAmplitude(3.0, kPi / 2.0), ComplexAmplitude(3.0, 0.0),
                              QfiMode::asym_single) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

    // sin(dtheta) = 0 boundaries
    CHECK(dual_coherent_t_opt(ComplexAmplitude(10.0, 0.0), ComplexAmplitude(5.0, 0.0), QfiMode::asym_single) ==
          1.0);
    CHECK(dual_coherent_t_opt(ComplexAmplitude(5.0, 0.0), ComplexAmplitude(10.0, 0.0), QfiMode::asym_single) ==
          0.0);

    CHECK_THROWS_AS(dual_coherent_t_opt(ComplexAmplitude(4.0, 0.0), ComplexAmplitude(4.0, 0.0),
                                        QfiMode::two_param),
                    std::domain_error);
    CHECK_THROWS_AS(dual_coherent_t_opt(ComplexAmplitude(0.0, 0.0), ComplexAmplitude(4.0, 0.0),
                                        QfiMode::asym_single),
                    std::domain_error);
}

TEST_CASE("dual coherent optima maximize the grid") {
    Rng rng(301);
    for (int rep = 0; rep < 60; ++rep) {
        const ComplexAmplitude alpha(rng.uniform(0.5, 5.0), rng.uniform(0, 6.28));
        const ComplexAmplitude beta(rng.uniform(0.5, 5.0), rng.uniform(0, 6.28));
        const StateFamily fam = StateFamily::dual_coherent(alpha, beta);
        for (QfiMode mode : {QfiMode::two_param, QfiMode::asym_single}) {
            double t = 0.0;
            try {
                t = dual_coherent_t_opt(alpha, beta, mode);
            } catch (const std::domain_error&) {
                continue;
            }
            const double f_at_opt = family_qfi(fam, BeamSplitter(t), mode);
            double arg = 0.0;
            const double f_grid = grid_qfi_max(fam, mode, 4001, &arg);
            CHECK(f_at_opt >= f_grid - 1e-6 * std::max(1.0, f_grid));
        }
    }
}

TEST_CASE("F^(ii) of a dual coherent input ignores transmission and phase matching") {
    Rng rng(302);
    for (int rep = 0; rep < 50; ++rep) {
        const ComplexAmplitude alpha(rng.uniform(0.5, 5.0), rng.uniform(0, 6.28));
        const ComplexAmplitude beta(rng.uniform(0.5, 5.0), rng.uniform(0, 6.28));
        const double expected = alpha.magnitude * alpha.magnitude + beta.magnitude * beta.magnitude;
        const double f = family_qfi(StateFamily::dual_coherent(alpha, beta),
                                    BeamSplitter(std::sqrt(rng.uniform(0.0, 1.0))), QfiMode::sym_single);
        CHECK(rel_diff(f, expected) < 1e-13);
    }
}

TEST_CASE("generic_t_opt for the squeezed families") {
    const StateFamily cohsqz =
        StateFamily::coh_plus_sqz_vac(ComplexAmplitude(10.0, 0.0), SqueezeParam(1.2, 0.0));
    const TOptCoefficients c = t_opt_coefficients(cohsqz);
    CHECK(c.a_f == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(c.b_f == doctest::Approx(0.5 * std::sinh(2.4) * std::sinh(2.4)).epsilon(1e-14));
    CHECK(c.c_f ==
          doctest::Approx(std::sinh(1.2) * std::sinh(1.2) + 100.0 * std::exp(2.4)).epsilon(1e-14));

    const auto t = generic_t_opt(c);
    REQUIRE(t.has_value());
    CHECK(*t * *t == doctest::Approx(0.5429746).epsilon(1e-6));

    // pure |TR|^2 coefficient peaks balanced
    const auto tb = generic_t_opt(TOptCoefficients{0.0, 0.0, 3.0});
    REQUIRE(tb.has_value());
    CHECK(*tb == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

    // degenerate quadratic
    CHECK_FALSE(generic_t_opt(TOptCoefficients{1.0, 1.0, 2.0}).has_value());
}

TEST_CASE("squeezed-coherent optimum transmission is the true maximizer") {
    const StateFamily fam = StateFamily::sqz_coh_plus_sqz_vac(ComplexAmplitude(10.0, 0.0),
                                                              SqueezeParam(0.75, kPi), SqueezeParam(1.2, 0.0));
    REQUIRE(fam.pmc_satisfied());
    const TOptCoefficients c = t_opt_coefficients(fam);
    const auto t = generic_t_opt(c);
    REQUIRE(t.has_value());
    CHECK(*t * *t == doctest::Approx(0.8356177).epsilon(1e-6));

    double arg = 0.0;
    const double f_grid = grid_qfi_max(fam, QfiMode::asym_single, 20001, &arg);
    CHECK(arg == doctest::Approx(*t * *t).epsilon(2e-4));
    CHECK(rel_diff(fi_max(c), f_grid) < 1e-8);
}

TEST_CASE("stationary maxima satisfy first-order optimality") {
    Rng rng(303);
    int interior = 0;
    for (int rep = 0; rep < 200 || interior < 30; ++rep) {
        if (rep > 2000) break;
        const StateFamily fam = rng.pick(2) == 0
                                    ? StateFamily::coh_plus_sqz_vac(
                                          ComplexAmplitude(rng.uniform(0.5, 4.0), rng.uniform(0, 6.28)),
                                          rng.squeeze(1.2))
                                    : StateFamily::sqz_coh_plus_sqz_vac(
                                          ComplexAmplitude(rng.uniform(0.5, 4.0), rng.uniform(0, 6.28)),
                                          rng.squeeze(1.2), rng.squeeze(1.2));
        const double t = fi_argmax_t(t_opt_coefficients(fam));
        if (!(t > 0.0 && t < 1.0)) continue;
        ++interior;
        const double x = t * t;
        const double f0 = family_qfi(fam, BeamSplitter(t), QfiMode::asym_single);
        for (double dx : {-1e-3, 1e-3}) {
            const double xn = std::min(1.0, std::max(0.0, x + dx));
            CHECK(family_qfi(fam, BeamSplitter(std::sqrt(xn)), QfiMode::asym_single) <=
                  f0 + 1e-9 * std::max(1.0, f0));
        }
        CHECK(rel_diff(fi_max(t_opt_coefficients(fam)), f0) < 1e-10);
    }
    CHECK(interior >= 30);
}

TEST_CASE("phase matching maximizes the balanced two-parameter QFI") {
    Rng rng(304);
    const ComplexAmplitude alpha(10.0, 0.0);
    const StateFamily pmc_fam = StateFamily::coh_plus_sqz_vac(alpha, SqueezeParam(1.2, 0.0));
    const double best = family_qfi(pmc_fam, BeamSplitter::balanced(), QfiMode::two_param);
    for (int i = 0; i < 50; ++i) {
        const double theta = rng.uniform(0.05, 2.0 * kPi - 0.05);
        const StateFamily off = StateFamily::coh_plus_sqz_vac(alpha, SqueezeParam(1.2, theta));
        CHECK(family_qfi(off, BeamSplitter::balanced(), QfiMode::two_param) <= best + 1e-9);
    }
}

TEST_CASE("existence interval for the coherent plus squeezed-vacuum optimum") {
    const ComplexAmplitude a10(10.0, 0.0);

    const AmplitudeSquaredInterval big = coh_sqz_existence(a10, SqueezeParam(1.2, 0.0));
    const double c24 = std::cosh(2.4);
    CHECK(big.lo == doctest::Approx((c24 - 1.0) * (c24 + 0.5) / std::exp(2.4)).epsilon(1e-14));
    CHECK(std::isinf(big.hi));

    CHECK_THROWS_AS(coh_sqz_existence(a10, SqueezeParam(0.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(coh_sqz_existence(ComplexAmplitude(10.0, 0.3), SqueezeParam(1.2, 0.0)), std::domain_error);

    // Against a grid scan: a stationary point of F^(i) interior in t^2 exists
    // exactly when |alpha|^2 is a member (r below and above ln2/2).
    for (double r : {0.2, 0.34, 0.5, 1.2}) {
        const AmplitudeSquaredInterval iv = coh_sqz_existence(ComplexAmplitude(1.0, 0.0), SqueezeParam(r, 0.0));
        const double hi_probe = std::isinf(iv.hi) ? iv.lo * 40.0 : iv.hi;
        for (double a2 :
             {0.5 * iv.lo, 0.5 * (iv.lo + hi_probe), std::isinf(iv.hi) ? iv.lo * 20.0 : 1.2 * iv.hi,
              0.9 * iv.lo, 1.1 * iv.lo}) {
            if (a2 <= 0.0) continue;
            const StateFamily fam =
                StateFamily::coh_plus_sqz_vac(ComplexAmplitude(std::sqrt(a2), 0.0), SqueezeParam(r, 0.0));
            // detect an interior sign change of dF/dx on a fine grid
            const int n = 10000;
            bool interior_stationary = false;
            double prev = 0.0, last_slope = 0.0;
            for (int i = 0; i <= n; ++i) {
                const double x = double(i) / n;
                const double f = family_qfi(fam, BeamSplitter(std::sqrt(x)), QfiMode::asym_single);
                if (i >= 1) {
                    const double slope = f - prev;
                    if (i >= 2 && slope * last_slope < 0.0) interior_stationary = true;
                    last_slope = slope;
                }
                prev = f;
            }
            CHECK(interior_stationary == iv.contains(a2));
        }
    }
}

TEST_CASE("high-alpha approximations") {
    const StateFamily cs =
        StateFamily::coh_plus_sqz_vac(ComplexAmplitude(1000.0, 0.0), SqueezeParam(0.5, 0.0));
    const double approx_t = high_alpha_t_opt(cs);
    CHECK(approx_t == doctest::Approx(0.8894).epsilon(1e-4));
    const auto exact = generic_t_opt(t_opt_coefficients(cs));
    REQUIRE(exact.has_value());
    CHECK(std::abs(approx_t - *exact) / *exact < 0.01);

    const StateFamily sc75 = StateFamily::sqz_coh_plus_sqz_vac(ComplexAmplitude(10.0, 0.0),
                                                               SqueezeParam(0.75, kPi), SqueezeParam(1.2, 0.0));
    CHECK(high_alpha_t_opt(sc75) == doctest::Approx(std::sqrt(0.8425589)).epsilon(1e-6));

    const StateFamily sc35 = StateFamily::sqz_coh_plus_sqz_vac(ComplexAmplitude(10.0, 0.0),
                                                               SqueezeParam(0.35, kPi), SqueezeParam(1.2, 0.0));
    CHECK(high_alpha_t_opt(sc35) == doctest::Approx(std::sqrt(0.6117564)).epsilon(1e-6));

    CHECK_THROWS_AS(high_alpha_t_opt(StateFamily::sqz_coh_plus_sqz_vac(
                        ComplexAmplitude(10.0, 0.0), SqueezeParam(1.2, kPi), SqueezeParam(1.2, 0.0))),
                    std::domain_error);
}

TEST_CASE("balanced-optimality predicates") {
    const StateFamily cs = StateFamily::coh_plus_sqz_vac(ComplexAmplitude(10.0, 0.0), SqueezeParam(1.2, 0.0));
    const BalancedOptimality b = balanced_optimality_predicates(cs);
    CHECK(b.two_param_balanced);
    CHECK(b.sym_balanced);

    const double a2 = 100.0;
    const double s2r = 0.5 * std::sinh(2.4) * std::sinh(2.4);
    const double ups = 100.0 * std::exp(2.4);
    const double fii_max = 0.5 * (a2 + s2r + std::sinh(1.2) * std::sinh(1.2) + ups);
    CHECK(family_qfi(cs, BeamSplitter::balanced(), QfiMode::sym_single) ==
          doctest::Approx(fii_max).epsilon(1e-13));

    // grid confirmation that balanced is the argmax when the predicates hold
    double arg = 0.0;
    grid_qfi_max(cs, QfiMode::two_param, 10001, &arg);
    CHECK(arg == doctest::Approx(0.5).epsilon(1e-3));
    grid_qfi_max(cs, QfiMode::sym_single, 10001, &arg);
    CHECK(arg == doctest::Approx(0.5).epsilon(1e-3));

    // r -> 0 degenerates to the single-coherent behavior
    const StateFamily flat =
        StateFamily::coh_plus_sqz_vac(ComplexAmplitude(10.0, 0.0), SqueezeParam(0.0, 0.0));
    const BalancedOptimality bf = balanced_optimality_predicates(flat);
    CHECK(bf.two_param_balanced);
    CHECK_FALSE(bf.sym_balanced);  // F^(ii) is constant in t
}

TEST_CASE("high-alpha information ratio") {
    const StateFamily cs =
        StateFamily::coh_plus_sqz_vac(ComplexAmplitude(1000.0, 0.0), SqueezeParam(0.5, 0.0));
    const double fimax = fi_max(t_opt_coefficients(cs));
    const double f2pmax = family_qfi(cs, BeamSplitter::balanced(), QfiMode::two_param);
    const double ratio = fimax / f2pmax;
    CHECK(ratio > 1.52);
    CHECK(ratio < 1.64);
}
