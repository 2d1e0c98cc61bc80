// transform.hpp - the deformed (M+1)-point discrete Fourier transform
//
//   forward:  fhat_m = sum_n f_n Phi_{m;n} Delta_n
//   inverse:  f_n    = sum_m fhat_m Phi_{m;n} DeltaHat_m
//
// with Phi_{m;n} = phi_{xi_m}(n). At tau -> 1 the kernel tends to
// 2 cos(m n pi / M) and the transform to a discrete cosine transform.

#pragma once

#include "hecke_dft/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hecke_dft {

using Signal = Eigen::VectorXcd;

struct KernelMatrix {
    LatticeConfig cfg;
    Eigen::MatrixXd phi;           // phi(m, n)
    Eigen::VectorXd node_weights;  // Delta_n
    Eigen::VectorXd dual_weights;  // DeltaHat_m
    std::vector<double> xi;        // spectral nodes, kept for diagonal operators

    int size() const { return static_cast<int>(phi.rows()); }
};

inline KernelMatrix spherical_kernel(const SpectrumTable& table) {
    const LatticeConfig& cfg = table.config();
    const int n_points = cfg.M() + 1;
    KernelMatrix k{cfg, Eigen::MatrixXd(n_points, n_points), Eigen::VectorXd(n_points), Eigen::VectorXd(n_points), {}};
    for (int m = 0; m < n_points; ++m) {
        const SpectralPoint& p = table[static_cast<std::size_t>(m)];
        for (int n = 0; n < n_points; ++n) k.phi(m, n) = phi_xi(p.xi, n, cfg.tau());
        k.dual_weights(m) = p.dual_weight;
        k.node_weights(m) = table.node_weights()[static_cast<std::size_t>(m)];
        k.xi.push_back(p.xi);
    }
    return k;
}

inline KernelMatrix spherical_kernel(const LatticeConfig& cfg) { return spherical_kernel(SpectrumTable(cfg)); }

namespace detail {
inline void require_length(const KernelMatrix& k, const Signal& f) {
    if (f.size() != k.size()) {
        throw std::invalid_argument("signal length " + std::to_string(f.size()) + " does not match M + 1 = " +
                                    std::to_string(k.size()));
    }
}
}  // namespace detail

inline Signal forward(const KernelMatrix& k, const Signal& f) {
    detail::require_length(k, f);
    const Signal weighted = f.cwiseProduct(k.node_weights.cast<std::complex<double>>());
    return k.phi.cast<std::complex<double>>() * weighted;
}

inline Signal inverse(const KernelMatrix& k, const Signal& fhat) {
    detail::require_length(k, fhat);
    const Signal weighted = fhat.cwiseProduct(k.dual_weights.cast<std::complex<double>>());
    return k.phi.transpose().cast<std::complex<double>>() * weighted;
}

/// <f, g>_Delta on {0, ..., M}.
inline std::complex<double> inner_weighted(const Signal& f, const Signal& g, const Eigen::VectorXd& weights) {
    std::complex<double> acc{};
    for (Eigen::Index i = 0; i < f.size(); ++i) acc += f(i) * std::conj(g(i)) * weights(i);
    return acc;
}

struct OrthogonalityReport {
    /// max |<Phi_m, Phi_m'>_Delta - delta_{mm'} / DeltaHat_m| / sqrt(DeltaHat_m^-1 DeltaHat_m'^-1)
    double row_deviation = 0.0;
    /// max |<Phi_.n, Phi_.n'>_DeltaHat - delta_{nn'} / Delta_n| / sqrt(Delta_n^-1 Delta_n'^-1)
    double column_deviation = 0.0;
};

/// Both Gram matrices, normalized by their expected diagonals so that the
/// deviations measure how far [DeltaHat^1/2 Phi Delta^1/2] is from orthogonal.
inline OrthogonalityReport verify_orthogonality(const KernelMatrix& k) {
    const int size = k.size();
    OrthogonalityReport report;
    const Eigen::MatrixXd rows = k.phi * k.node_weights.asDiagonal() * k.phi.transpose();
    const Eigen::MatrixXd cols = k.phi.transpose() * k.dual_weights.asDiagonal() * k.phi;
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            const double row_expected = i == j ? 1.0 / k.dual_weights(i) : 0.0;
            const double row_scale = std::sqrt(1.0 / (k.dual_weights(i) * k.dual_weights(j)));
            report.row_deviation = std::max(report.row_deviation, std::abs(rows(i, j) - row_expected) / row_scale);
            const double col_expected = i == j ? 1.0 / k.node_weights(i) : 0.0;
            const double col_scale = std::sqrt(1.0 / (k.node_weights(i) * k.node_weights(j)));
            report.column_deviation = std::max(report.column_deviation, std::abs(cols(i, j) - col_expected) / col_scale);
        }
    }
    return report;
}

/// The Laplacian restricted to W_S-invariant functions, in the standard basis of {0, ..., M}.
inline Eigen::MatrixXd dense_laplacian(const LatticeConfig& cfg) {
    const int M = cfg.M();
    const double end = 1.0 + cfg.tau() * cfg.tau();
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(M + 1, M + 1);
    L(0, 1) = end;
    L(M, M - 1) = end;
    for (int n = 1; n < M; ++n) {
        L(n, n + 1) = 1.0;
        L(n, n - 1) = 1.0;
    }
    return L;
}

/// Eigenvalues (ascending) of the dense Laplacian, computed from its
/// Delta-symmetrization diag(Delta^1/2) L diag(Delta^-1/2) with a dense eigensolver.
inline std::vector<double> laplacian_eigenvalues_oracle(const LatticeConfig& cfg) {
    const std::vector<double> w = node_weights(cfg);
    const Eigen::MatrixXd L = dense_laplacian(cfg);
    Eigen::MatrixXd S(L.rows(), L.cols());
    for (Eigen::Index i = 0; i < L.rows(); ++i) {
        for (Eigen::Index j = 0; j < L.cols(); ++j) {
            S(i, j) = std::sqrt(w[static_cast<std::size_t>(i)]) * L(i, j) / std::sqrt(w[static_cast<std::size_t>(j)]);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(S, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(values.begin(), values.end());
    return values;
}

/// Multiplication by 2 cos(xi_m) on the spectral side.
inline Signal apply_spectral_multiplier(const KernelMatrix& k, const Signal& fhat) {
    detail::require_length(k, fhat);
    Signal out = fhat;
    for (int m = 0; m < k.size(); ++m) out(m) *= 2.0 * std::cos(k.xi[static_cast<std::size_t>(m)]);
    return out;
}

/// f = f_plus + f_minus with f_plus(M - n) = f_plus(n) and f_minus(M - n) = -f_minus(n).
inline std::pair<Signal, Signal> parity_split(const KernelMatrix& k, const Signal& f) {
    detail::require_length(k, f);
    const int M = k.size() - 1;
    Signal plus(M + 1);
    Signal minus(M + 1);
    for (int n = 0; n <= M; ++n) {
        plus(n) = 0.5 * (f(n) + f(M - n));
        minus(n) = 0.5 * (f(n) - f(M - n));
    }
    return {plus, minus};
}

/// Trapezoid rule for (1/2pi) int_0^pi phi_xi(n) phi_xi(n') dxi / (c(xi) c(-xi)),
/// doubling the panel count until successive values agree to 1e-10. The first
/// rule uses at least n + n' + 2 panels, which resolves the polynomial part of
/// the integrand; coarser starts can alias to a stable but wrong value.
inline double hl_quadrature(int n, int nprime, double tau, int points) {
    if (n < 0 || nprime < 0) throw std::invalid_argument("hl_quadrature requires nonnegative degrees");
    if (points < 1) throw std::invalid_argument("hl_quadrature requires a positive point count");
    const double pi = std::numbers::pi;
    auto integrand = [&](double xi) {
        const double weight = (2.0 - 2.0 * std::cos(2.0 * xi)) / spectral_denominator(xi, tau);
        return phi_xi(xi, n, tau) * phi_xi(xi, nprime, tau) * weight / (2.0 * pi);
    };
    auto trapezoid = [&](int panels) {
        const double h = pi / panels;
        double acc = 0.5 * (integrand(0.0) + integrand(pi));
        for (int j = 1; j < panels; ++j) acc += integrand(j * h);
        return acc * h;
    };
    int panels = std::max(points, n + nprime + 2);
    double previous = trapezoid(panels);
    for (int round = 0; round < 24; ++round) {
        panels *= 2;
        const double current = trapezoid(panels);
        if (std::abs(current - previous) < 1e-10) return current;
        previous = current;
    }
    throw std::runtime_error("hl_quadrature did not converge");
}

}  // namespace hecke_dft
