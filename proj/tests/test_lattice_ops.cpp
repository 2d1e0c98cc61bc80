#include "hecke_dft/lattice_ops.hpp"
#include "hecke_dft/verification.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace hecke_dft;

namespace {

constexpr double kTight = 1e-12;

LatticeFunction random_f(std::uint64_t seed, long long radius) {
    std::mt19937_64 rng(seed);
    return random_finitely_supported(rng, radius);
}

Complex e(long long n, double xi) { return std::polar(1.0, xi * static_cast<double>(n)); }

}  // namespace

TEST(LatticeWeyl, Examples) {
    const LatticeConfig cfg(4, 0.5);
    const auto s_e2 = apply_s(LatticeFunction::indicator(2));
    EXPECT_EQ(s_e2(-2), Complex(1.0));
    EXPECT_EQ(s_e2(2), Complex(0.0));
    const auto u_e0 = apply_u(LatticeFunction::indicator(0), cfg);
    EXPECT_EQ(u_e0(4), Complex(1.0));
    EXPECT_EQ(u_e0(0), Complex(0.0));
    const auto f = random_f(1, 8);
    EXPECT_EQ(max_abs_difference(apply_s(apply_s(f)), f, -20, 20), 0.0);
}

TEST(LatticeWeyl, ApplyWeylMatchesGenerators) {
    const LatticeConfig cfg(3, 0.5);
    const auto f = random_f(2, 6);
    const auto s0f = apply_u(apply_s(apply_u(f, cfg)), cfg);
    EXPECT_EQ(max_abs_difference(apply_weyl(WeylElement::s0(), f, cfg), s0f, -20, 20), 0.0);
    const auto w = WeylElement::from_word(1, {0, 1});
    const auto expected = apply_u(apply_weyl(WeylElement::s0(), apply_s(f), cfg), cfg);
    EXPECT_EQ(max_abs_difference(apply_weyl(w, f, cfg), expected, -20, 20), 0.0);
}

TEST(LatticeThat, Examples) {
    const LatticeConfig cfg(4, 0.5);
    EXPECT_DOUBLE_EQ(apply_That(LatticeFunction::indicator(0), cfg)(0).real(), 0.5);
    // tau f_{-n} for n >= 0 and tau^-1 f_{-n} + (tau - 1/tau) f_n for n < 0
    const auto te3 = apply_That(LatticeFunction::indicator(3), cfg);
    EXPECT_DOUBLE_EQ(te3(3).real(), 0.0);
    EXPECT_DOUBLE_EQ(te3(-3).real(), 2.0);
    const auto tem3 = apply_That(LatticeFunction::indicator(-3), cfg);
    EXPECT_DOUBLE_EQ(tem3(3).real(), 0.5);
    EXPECT_DOUBLE_EQ(tem3(-3).real(), 0.5 - 2.0);
}

TEST(LatticeThat, QuadraticRelation) {
    for (double tau : {0.25, 0.5, 0.9}) {
        const LatticeConfig cfg(4, tau);
        const auto f = random_f(3, 10);
        const auto g = apply_That(f, cfg) - Complex{tau, 0.0} * f;
        const auto h = apply_That(g, cfg) + Complex{1.0 / tau, 0.0} * g;
        EXPECT_LT(max_abs(h, -20, 20), kTight * std::max(1.0, max_abs(f, -20, 20) / tau));
        EXPECT_LT(max_abs_difference(apply_That_inv(apply_That(f, cfg), cfg), f, -20, 20), kTight / tau);
    }
}

TEST(LatticeJ, Examples) {
    const auto f = random_f(4, 6);
    const auto jf = apply_J(f);
    EXPECT_EQ(jf(0), Complex(0.0));
    EXPECT_LT(std::abs(jf(3) - (-f(1) - f(-1) - f(-3))), kTight);
    EXPECT_LT(std::abs(jf(-2) - (f(-2) + f(0))), kTight);
    EXPECT_LT(max_abs_difference(apply_J(apply_J(f)), jf, -20, 20), kTight * 20);
}

TEST(LatticeI, PlaneWave) {
    const double xi = 1.0;
    for (double tau : {0.25, 0.5, 0.9}) {
        const LatticeConfig cfg(4, tau);
        const auto If = apply_I(LatticeFunction::plane_wave(xi), cfg);
        for (long long n = -10; n <= 10; ++n) {
            const Complex expected = tau * e(-n, xi) + (tau - 1.0 / tau) * (e(n, xi) - e(-n, xi)) / (1.0 - e(2, xi));
            EXPECT_LT(std::abs(If(n) - expected), kTight * 10 / tau) << "n=" << n;
        }
    }
}

TEST(LatticeI, QuadraticAndInverse) {
    const LatticeConfig cfg(4, 0.5);
    const auto f = random_f(5, 8);
    EXPECT_LT(max_abs_difference(apply_I_inv(apply_I(f, cfg), cfg), f, -20, 20), 1e-11);
    EXPECT_LT(max_abs_difference(apply_I(apply_I_inv(f, cfg), cfg), f, -20, 20), 1e-11);
}

TEST(LatticeD, Shift) {
    const auto f = random_f(6, 6);
    EXPECT_EQ(apply_D(f)(5), f(4));
    EXPECT_EQ(apply_D(f, -1)(5), f(6));
    EXPECT_THROW(apply_D(f, 2), std::invalid_argument);
}

TEST(LatticeIw, Examples) {
    const LatticeConfig cfg(4, 0.5);
    const double tau = cfg.tau();
    const auto f = random_f(7, 8);
    EXPECT_EQ(max_abs_difference(apply_Iw(WeylElement::identity(), f, cfg), f, -20, 20), 0.0);

    const auto is1 = apply_Iw(WeylElement::s1(), f, cfg);
    for (long long n = -20; n <= 0; ++n) {
        Complex acc{};
        for (long long k = 0; k <= -n - 1; ++k) acc += f(n + 2 * k);
        EXPECT_LT(std::abs(is1(n) - (tau * f(-n) + (tau - 1.0 / tau) * acc)), kTight * 40) << n;
    }
    EXPECT_LT(max_abs_difference(is1, apply_I(f, cfg), -20, 20), kTight * 40);

    const auto uiu = apply_u(apply_I(apply_u(f, cfg), cfg), cfg);
    EXPECT_LT(max_abs_difference(apply_Iw(WeylElement::s0(), f, cfg), uiu, -20, 20), kTight * 40);
}

TEST(LatticeJcal, IdentityOnAlcove) {
    const LatticeConfig cfg(4, 0.5);
    const auto f = random_f(8, 12);
    const auto jf = apply_Jcal(f, cfg);
    for (long long n = 0; n <= 4; ++n) EXPECT_EQ(jf(n), f(n));
}

TEST(LatticeJcal, TriangularWithLeadingCoefficient) {
    for (double tau : {0.25, 0.5, 0.9}) {
        const LatticeConfig cfg(3, tau);
        for (long long k = -9; k <= 9; ++k) {
            const auto jk = apply_Jcal(LatticeFunction::indicator(k), cfg);
            const int lk = chamber_map(k, cfg).length();
            for (long long n = -12; n <= 12; ++n) {
                if (n == k) {
                    // tau^-l(w_n) times the leading coefficient tau^-l(w_n) of I_{w_n} e_n at n_+.
                    EXPECT_NEAR(jk(n).real(), std::pow(tau, -2 * lk), 1e-12 * std::pow(tau, -2 * lk));
                    const auto iw = apply_Iw(chamber_map(k, cfg), LatticeFunction::indicator(k), cfg);
                    EXPECT_NEAR(iw(fold_to_alcove(k, 3)).real(), std::pow(tau, -lk), 1e-12 * std::pow(tau, -lk));
                } else if (!triangular_precedes(k, n, 3)) {
                    EXPECT_EQ(jk(n), Complex(0.0)) << "k=" << k << " n=" << n;
                }
            }
        }
    }
}

TEST(LatticeJcal, InverseRoundTrip) {
    const LatticeConfig cfg(3, 0.5);
    const long long N = 12;
    const auto f = random_f(9, 5);
    const auto g = invert_Jcal(apply_Jcal(f, cfg), N, cfg);
    EXPECT_LT(max_abs_difference(g, f, -N, N), 1e-10);
}

TEST(LatticeJcal, InverseOfAlcoveIndicator) {
    const LatticeConfig cfg(4, 0.5);
    for (long long n = 0; n <= 4; ++n) {
        const auto g = invert_Jcal(LatticeFunction::indicator(n), 8, cfg);
        for (long long m = 0; m <= 4; ++m) EXPECT_NEAR(std::abs(g(m) - (m == n ? 1.0 : 0.0)), 0.0, 1e-14);
    }
}

TEST(LatticeJcal, RejectsUnclosedWindow) {
    const LatticeConfig cfg(4, 0.5);
    EXPECT_THROW(invert_Jcal(LatticeFunction::indicator(0), 6, cfg), std::out_of_range);
    EXPECT_THROW(invert_Jcal(LatticeFunction::indicator(0), 0, cfg), std::invalid_argument);
}

TEST(LatticeJcal, ConjugatedShiftMatchesXhat) {
    for (int M : {2, 3, 4}) {
        const LatticeConfig cfg(M, 0.5);
        const long long N = 4LL * M;
        const auto g = random_f(10 + static_cast<std::uint64_t>(M), M);
        const auto reference = apply_Jcal(apply_D(invert_Jcal(g, N, cfg)), cfg);
        const long long margin = M + 1;
        const double scale = std::max(max_abs(g, -N, N), max_abs(reference, -N + margin, N - margin));
        for (auto indexing : {SummandIndexing::direct, SummandIndexing::inverse}) {
            const auto xg = apply_Xhat(g, cfg, indexing);
            EXPECT_LT(max_abs_difference(xg, reference, -N + margin, N - margin), 1e-12 * scale) << "M=" << M;
        }
    }
}

TEST(LatticeXhat, Examples) {
    const LatticeConfig cfg(4, 0.5);
    const auto f = random_f(11, 10);
    const auto xf = apply_Xhat(f, cfg);
    for (long long n = 1; n <= 4; ++n) EXPECT_EQ(xf(n), f(n - 1));
    EXPECT_LT(std::abs(xf(0) - 0.25 * f(-1)), 1e-15);
    EXPECT_LT(max_abs_difference(apply_Xhat(apply_Xhat_inv(f, cfg), cfg), f, -20, 20), 1e-11);
    EXPECT_LT(max_abs_difference(apply_Xhat_inv(apply_Xhat(f, cfg), cfg), f, -20, 20), 1e-11);
}

TEST(LatticeL, Examples) {
    const LatticeConfig cfg(4, 0.5);
    const auto f = random_f(12, 10);
    const auto lf = apply_L(f, cfg);
    EXPECT_LT(std::abs(lf(0) - (f(1) + 0.25 * f(-1))), 1e-15);
    EXPECT_LT(std::abs(lf(4) - (0.25 * f(5) + f(3))), 1e-15);
    const auto xx = apply_Xhat(f, cfg) + apply_Xhat_inv(f, cfg);
    EXPECT_LT(max_abs_difference(lf, xx, -20, 20), 1e-12 * max_abs(f, -30, 30) * 20);
}

TEST(LatticeL, CoefficientsOnWalls) {
    for (int M = 2; M <= 8; ++M) {
        const LatticeConfig cfg(M, 0.5);
        for (long long n = -4LL * M; n <= 4LL * M; ++n) {
            const bool wall = n % M == 0;
            EXPECT_EQ(laplacian_a(n, cfg), (wall && n > 0) ? 0.25 : 1.0) << n;
            EXPECT_EQ(laplacian_b(n, cfg), (wall && n <= 0) ? 0.25 : 1.0) << n;
            EXPECT_DOUBLE_EQ(laplacian_a(n, cfg) * delta_weight(n, cfg),
                             laplacian_b(n + 1, cfg) * delta_weight(n + 1, cfg));
        }
    }
}

TEST(LatticeInner, Examples) {
    const LatticeConfig cfg(4, 0.5);
    EXPECT_EQ(inner_delta(LatticeFunction::indicator(0), LatticeFunction::indicator(0), 4, cfg), Complex(1.0));
    EXPECT_EQ(inner_delta(LatticeFunction::indicator(-1), LatticeFunction::indicator(-1), 4, cfg), Complex(0.25));
    const auto f = random_f(13, 8);
    const auto g = random_f(14, 8);
    const auto tf = truncate(apply_That(f, cfg), -8, 8);
    const auto tg = truncate(apply_That(g, cfg), -8, 8);
    const Complex lhs = inner_delta(tf, g, 8, cfg);
    const Complex rhs = inner_delta(f, tg, 8, cfg);
    EXPECT_LT(std::abs(lhs - rhs), 1e-12 * 20);
    EXPECT_THROW(inner_delta(f, g, 4, cfg), std::invalid_argument);
}

TEST(LatticeProperties, RepresentationIdentities) {
    verify::Options opts;
    opts.seed = 3;
    for (int M : {2, 3, 4, 8}) {
        for (double tau : {0.25, 0.5, 0.9}) {
            for (const auto& c : verify::run_reps(LatticeConfig(M, tau), opts, 5)) {
                EXPECT_TRUE(c.passed) << c.name << " M=" << M << " tau=" << tau << " deviation " << c.deviation;
            }
        }
    }
}

TEST(LatticeProperties, IntertwinerIdentities) {
    verify::Options opts;
    opts.seed = 4;
    for (int M : {2, 3, 4, 8}) {
        std::string convention;
        for (const auto& c : verify::run_intertwiner(LatticeConfig(M, 0.5), opts, &convention, 3)) {
            EXPECT_TRUE(c.passed) << c.name << " M=" << M << " deviation " << c.deviation;
        }
        EXPECT_EQ(convention, "direct (v); inverse (v^-1) equivalent");
    }
}
