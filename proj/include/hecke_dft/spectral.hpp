// spectral.hpp - spherical functions and the Bethe-Ansatz spectrum
//
// For m in {0, ..., M} the spectral node xi_m is the unique root of
//   V(xi) = M xi + theta(xi) = (m + 1) pi,
//   theta(xi) = 2 arctan(((1 + tau^2)/(1 - tau^2)) tan xi)   (quasi-periodic branch).
// The kernel entries are the one-dimensional Hall-Littlewood polynomials
//   phi_xi(n) = U_n(cos xi) + tau^2 U_{-n}(cos xi).

#pragma once

#include "hecke_dft/lattice_function.hpp"
#include "hecke_dft/weyl.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke_dft {

/// Quasi-periodic phase: odd, increasing, theta(xi + k pi) = theta(xi) + 2 k pi.
/// 1 - tau^2, factored to keep precision as tau -> 1.
inline double one_minus_tau2(double tau) { return (1.0 - tau) * (1.0 + tau); }

inline double theta(double xi, double tau) {
    const double pi = std::numbers::pi;
    const double ratio = (1.0 + tau * tau) / one_minus_tau2(tau);
    const double k = std::floor(xi / pi + 0.5);
    const double reduced = xi - k * pi;  // in [-pi/2, pi/2)
    // cos(reduced) >= 0, so atan2 gives the principal arctan of ratio * tan(reduced)
    // and stays finite at the endpoint -pi/2.
    return 2.0 * std::atan2(ratio * std::sin(reduced), std::cos(reduced)) + 2.0 * k * pi;
}

inline double bethe_V(double xi, const LatticeConfig& cfg) { return cfg.M() * xi + theta(xi, cfg.tau()); }

/// 1 + tau^4 - 2 tau^2 cos 2xi = (1 - tau^2)^2 + 4 tau^2 sin^2 xi, the common
/// denominator of theta' and c(xi) c(-xi).
inline double spectral_denominator(double xi, double tau) {
    const double d = one_minus_tau2(tau);
    const double s = std::sin(xi);
    return d * d + 4.0 * tau * tau * s * s;
}

inline double bethe_V_prime(double xi, const LatticeConfig& cfg) {
    const double t = cfg.tau();
    const double one_minus_t4 = one_minus_tau2(t) * (1.0 + t * t);
    return cfg.M() + 2.0 * one_minus_t4 / spectral_denominator(xi, t);
}

/// c(xi) = (1 - tau^2 e^{-2 i xi}) / (1 - e^{-2 i xi}) = tau^2 + (1 - tau^2) / (1 - e^{-2 i xi});
/// pole on pi Z.
inline std::complex<double> c_function(double xi, double tau) {
    // 1 - e^{-2 i xi} = 2 i sin(xi) e^{-i xi}
    const std::complex<double> den = std::complex<double>(0.0, 2.0 * std::sin(xi)) * std::polar(1.0, -xi);
    if (std::abs(den) < 1e-300) {
        throw std::domain_error("c-function pole at xi = " + std::to_string(xi));
    }
    return tau * tau + one_minus_tau2(tau) / den;
}

/// U_n(cos xi) for any integer n, with U_{-1} = 0 and U_{-n-1} = -U_{n-1}.
inline double chebyshev_u(long long n, double xi) {
    if (n == -1) return 0.0;
    if (n < -1) return -chebyshev_u(-n - 2, xi);
    const double x = std::cos(xi);
    double prev = 1.0;  // U_0
    if (n == 0) return prev;
    double cur = 2.0 * x;  // U_1
    for (long long k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// phi_xi(n) = U_n(cos xi) + tau^2 U_{-n}(cos xi); finite at xi in pi Z.
inline double phi_xi(double xi, long long n, double tau) {
    return chebyshev_u(n, xi) + tau * tau * chebyshev_u(-n, xi);
}

/// phi_xi as a lattice function.
inline LatticeFunction phi_xi_function(double xi, double tau) {
    return LatticeFunction([xi, tau](long long n) { return Complex{phi_xi(xi, n, tau), 0.0}; });
}

/// c(xi) e^{i xi n} + c(-xi) e^{-i xi n}; only valid away from pi Z.
inline std::complex<double> phi_xi_plane_wave_form(double xi, long long n, double tau) {
    const double arg = xi * static_cast<double>(n);
    return c_function(xi, tau) * std::polar(1.0, arg) + c_function(-xi, tau) * std::polar(1.0, -arg);
}

struct SpectralPoint {
    int m = 0;
    double xi = 0.0;
    int parity_epsilon = 1;
    double eigenvalue = 0.0;
    double dual_weight = 0.0;
    /// |e^{i M xi} - eps (1 - tau^2 e^{2 i xi}) / (tau^2 - e^{2 i xi})|
    double bethe_residual = 0.0;
    /// |V(xi) - (m + 1) pi|
    double phase_residual = 0.0;
};

/// Left-hand minus right-hand side of the Bethe equation at xi.
inline double bethe_equation_residual(double xi, int epsilon, const LatticeConfig& cfg) {
    const double t2 = cfg.tau() * cfg.tau();
    const std::complex<double> z = std::polar(1.0, 2.0 * xi);
    const std::complex<double> rhs = static_cast<double>(epsilon) * (1.0 - t2 * z) / (t2 - z);
    return std::abs(std::polar(1.0, cfg.M() * xi) - rhs);
}

/// 1 / (2 c(xi) c(-xi) V'(xi)).
inline double dual_weight_from_c(double xi, const LatticeConfig& cfg) {
    const double cc = (c_function(xi, cfg.tau()) * c_function(-xi, cfg.tau())).real();
    return 1.0 / (2.0 * cc * bethe_V_prime(xi, cfg));
}

/// (1 - cos 2xi)/(1 + tau^4 - 2 tau^2 cos 2xi) * (M + 2(1 - tau^4)/(1 + tau^4 - 2 tau^2 cos 2xi))^-1.
inline double dual_weight_explicit(double xi, const LatticeConfig& cfg) {
    const double t = cfg.tau();
    const double den = spectral_denominator(xi, t);
    const double s = std::sin(xi);
    const double one_minus_t4 = one_minus_tau2(t) * (1.0 + t * t);
    return 2.0 * s * s / den / (cfg.M() + 2.0 * one_minus_t4 / den);
}

/// Dual weight at a spectral point; both closed forms must agree to 1e-12 (relative).
inline double dual_weight(const SpectralPoint& point, const LatticeConfig& cfg) {
    const double a = dual_weight_from_c(point.xi, cfg);
    const double b = dual_weight_explicit(point.xi, cfg);
    if (!(std::abs(a - b) <= 1e-12 * std::abs(b))) {
        throw std::logic_error("dual weight forms disagree at m = " + std::to_string(point.m));
    }
    return b;
}

/// Unique root of V(xi) = (m + 1) pi in (0, pi).
inline SpectralPoint solve_bethe_root(int m, const LatticeConfig& cfg) {
    if (m < 0 || m > cfg.M()) {
        throw std::out_of_range("spectral index m = " + std::to_string(m) + " outside {0, ..., " +
                                std::to_string(cfg.M()) + "}");
    }
    const double pi = std::numbers::pi;
    const double target = (m + 1) * pi;
    auto f = [&](double xi) { return bethe_V(xi, cfg) - target; };

    // V(0) = 0 < target < (M + 2) pi = V(pi); V is strictly increasing.
    double lo = 0.0;
    double hi = pi;
    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    double xi = 0.5 * (lo + hi);
    for (int iter = 0; iter < 80; ++iter) {
        const double value = f(xi);
        if (value == 0.0) break;
        (value < 0.0 ? lo : hi) = xi;
        double next = xi - value / bethe_V_prime(xi, cfg);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - xi) <= 4e-16 * pi) {
            xi = next;
            break;
        }
        xi = next;
    }

    SpectralPoint point;
    point.m = m;
    point.xi = xi;
    point.parity_epsilon = (m % 2 == 0) ? 1 : -1;
    point.eigenvalue = 2.0 * std::cos(xi);
    point.phase_residual = std::abs(f(xi));
    point.bethe_residual = bethe_equation_residual(xi, point.parity_epsilon, cfg);
    point.dual_weight = dual_weight(point, cfg);
    return point;
}

/// Delta_n: (1 + tau^2)^-1 at n = 0, M and 1 in between.
inline std::vector<double> node_weights(const LatticeConfig& cfg) {
    std::vector<double> w(static_cast<std::size_t>(cfg.M()) + 1, 1.0);
    const double end = 1.0 / (1.0 + cfg.tau() * cfg.tau());
    w.front() = end;
    w.back() = end;
    return w;
}

class SpectrumTable {
public:
    explicit SpectrumTable(const LatticeConfig& cfg) : cfg_(cfg), node_weights_(hecke_dft::node_weights(cfg)) {
        points_.reserve(static_cast<std::size_t>(cfg.M()) + 1);
        for (int m = 0; m <= cfg.M(); ++m) points_.push_back(solve_bethe_root(m, cfg));
    }

    const LatticeConfig& config() const { return cfg_; }
    const std::vector<SpectralPoint>& points() const { return points_; }
    const SpectralPoint& operator[](std::size_t m) const { return points_[m]; }
    std::size_t size() const { return points_.size(); }
    const std::vector<double>& node_weights() const { return node_weights_; }

private:
    LatticeConfig cfg_;
    std::vector<SpectralPoint> points_;
    std::vector<double> node_weights_;
};

}  // namespace hecke_dft
