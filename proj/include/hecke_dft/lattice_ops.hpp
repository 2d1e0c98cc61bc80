// lattice_ops.hpp - two representations of the Hecke algebra on C(Z)
//
// Difference-reflection representation:  T -> T_hat, U -> u, X -> X_hat.
// Integral-reflection representation:    T -> I,     U -> u, X -> D.
// The operator J_cal intertwines them: T_hat J_cal = J_cal I, u J_cal = J_cal u,
// X_hat J_cal = J_cal D.

#pragma once

#include "hecke_dft/lattice_function.hpp"
#include "hecke_dft/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke_dft {

/// Numeric a(k) = ((1 - tau^2)/(1 + tau^2)) (tau^-k + (-1)^(k+1) tau^k).
inline double a_value(int k, double tau) {
    const double tk = std::pow(tau, k);
    const double odd = (k % 2 == 1) ? 1.0 : -1.0;
    return (1.0 - tau * tau) / (1.0 + tau * tau) * (1.0 / tk + odd * tk);
}

/// delta_n = tau^(2 l(w_n)).
inline double delta_weight(long long n, const LatticeConfig& cfg) {
    return std::pow(cfg.tau(), 2 * chamber_map(n, cfg).length());
}

// ---------------------------------------------------------------------------
// Weyl group action (w f)(n) = f(w^-1 n)

inline LatticeFunction apply_s(const LatticeFunction& f) {
    return LatticeFunction([f](long long n) { return f(-n); });
}

inline LatticeFunction apply_u(const LatticeFunction& f, const LatticeConfig& cfg) {
    const long long M = cfg.M();
    return LatticeFunction([f, M](long long n) { return f(M - n); });
}

inline LatticeFunction apply_weyl(const WeylElement& w, const LatticeFunction& f, const LatticeConfig& cfg) {
    const WeylElement w_inv = w.inverse();
    const int M = cfg.M();
    return LatticeFunction([f, w_inv, M](long long n) { return f(w_inv.act(n, M)); });
}

// ---------------------------------------------------------------------------
// Difference-reflection representation

/// T_hat = tau + tau^sign (s - 1), sign(0) = 0.
inline LatticeFunction apply_That(const LatticeFunction& f, const LatticeConfig& cfg) {
    const double t = cfg.tau();
    return LatticeFunction([f, t](long long n) {
        if (n >= 0) return t * f(-n);
        return f(-n) / t + (t - 1.0 / t) * f(n);
    });
}

/// T_hat^-1 = T_hat - (tau - 1/tau).
inline LatticeFunction apply_That_inv(const LatticeFunction& f, const LatticeConfig& cfg) {
    const double t = cfg.tau();
    const LatticeFunction tf = apply_That(f, cfg);
    return LatticeFunction([f, tf, t](long long n) { return tf(n) - (t - 1.0 / t) * f(n); });
}

/// Which group element indexes the summand f_{v(n - sign n)_+} in X_hat.
/// The two are equivalent: v -> v^-1 permutes {v < w_n} and preserves length.
enum class SummandIndexing { direct, inverse };

namespace detail {

// sign(n) sum_{v < w_n} tau^-(l(w_n)-l(v)) a(l(w_n)-l(v)) f_{v (n - sign n)_+}
inline Complex xhat_tail(const LatticeFunction& f, long long n, const LatticeConfig& cfg,
                         SummandIndexing indexing) {
    if (n == 0) return {};
    const int M = cfg.M();
    const double t = cfg.tau();
    const WeylElement wn = chamber_map(n, M);
    const long long base = fold_to_alcove(n - sign(n), M);
    Complex sum{};
    for (const WeylElement& v : enumerate_strictly_less(wn)) {
        const int gap = wn.length() - v.length();
        const WeylElement g = indexing == SummandIndexing::direct ? v : v.inverse();
        sum += std::pow(t, -gap) * a_value(gap, t) * f(g.act(base, M));
    }
    return static_cast<double>(sign(n)) * sum;
}

}  // namespace detail

inline LatticeFunction apply_Xhat(const LatticeFunction& f, const LatticeConfig& cfg,
                                  SummandIndexing indexing = SummandIndexing::direct) {
    return LatticeFunction([f, cfg, indexing](long long n) {
        const int M = cfg.M();
        const int dl = chamber_map(n - 1, M).length() - chamber_map(n, M).length();
        const int e = eta(chamber_map(M - n, M));
        const double lead = std::pow(cfg.tau(), dl * (1 + e));
        return lead * f(n - 1) + detail::xhat_tail(f, n, cfg, indexing);
    });
}

inline LatticeFunction apply_Xhat_inv(const LatticeFunction& f, const LatticeConfig& cfg,
                                      SummandIndexing indexing = SummandIndexing::direct) {
    return LatticeFunction([f, cfg, indexing](long long n) {
        const int M = cfg.M();
        const WeylElement wn = chamber_map(n, M);
        const int dl = chamber_map(n + 1, M).length() - wn.length();
        const double lead = std::pow(cfg.tau(), dl * (1 + eta(wn)));
        return lead * f(n + 1) - detail::xhat_tail(f, n, cfg, indexing);
    });
}

// The remainder test is evaluated before the sign test: GCC 11 at -O2 folds
// `n <= 0 && n % M == 0` incorrectly when both coefficients are inlined together.
inline bool on_wall(long long n, long long M) {
    const long long r = n % M;
    return r == 0;
}
inline double laplacian_a(long long n, const LatticeConfig& cfg) {
    const bool wall = on_wall(n, cfg.M());
    return (wall && n > 0) ? cfg.tau() * cfg.tau() : 1.0;
}
inline double laplacian_b(long long n, const LatticeConfig& cfg) {
    const bool wall = on_wall(n, cfg.M());
    return (wall && n <= 0) ? cfg.tau() * cfg.tau() : 1.0;
}

/// (L f)_n = a_n f_{n+1} + b_n f_{n-1}, a_n = tau^2 on M Z_{>0}, b_n = tau^2 on M Z_{<=0}.
inline LatticeFunction apply_L(const LatticeFunction& f, const LatticeConfig& cfg) {
    return LatticeFunction([f, cfg](long long n) {
        return laplacian_a(n, cfg) * f(n + 1) + laplacian_b(n, cfg) * f(n - 1);
    });
}

// ---------------------------------------------------------------------------
// Integral-reflection representation

/// Discrete integral from n to -n with step 2 (zero at n = 0).
inline LatticeFunction apply_J(const LatticeFunction& f) {
    return LatticeFunction([f](long long n) {
        Complex acc{};
        if (n > 0) {
            for (long long k = n - 2; k >= -n; k -= 2) acc -= f(k);
        } else if (n < 0) {
            for (long long k = n; k <= -n - 2; k += 2) acc += f(k);
        }
        return acc;
    });
}

/// I = tau s + (tau - 1/tau) J.
inline LatticeFunction apply_I(const LatticeFunction& f, const LatticeConfig& cfg) {
    const double t = cfg.tau();
    const LatticeFunction jf = apply_J(f);
    return LatticeFunction([f, jf, t](long long n) { return t * f(-n) + (t - 1.0 / t) * jf(n); });
}

/// I^-1 = I - (tau - 1/tau).
inline LatticeFunction apply_I_inv(const LatticeFunction& f, const LatticeConfig& cfg) {
    const double t = cfg.tau();
    const LatticeFunction If = apply_I(f, cfg);
    return LatticeFunction([f, If, t](long long n) { return If(n) - (t - 1.0 / t) * f(n); });
}

/// (D f)_n = f_{n-1}; power -1 gives f_{n+1}.
inline LatticeFunction apply_D(const LatticeFunction& f, int power = 1) {
    if (power != 1 && power != -1) throw std::invalid_argument("apply_D expects power +1 or -1");
    return LatticeFunction([f, power](long long n) { return f(n - power); });
}

/// I_{s1} = I in closed form.
inline LatticeFunction apply_I_s1(const LatticeFunction& f, const LatticeConfig& cfg) {
    const double t = cfg.tau();
    const double d = t - 1.0 / t;
    return LatticeFunction([f, t, d](long long n) {
        Complex acc{};
        if (n > 0) {
            for (long long k = 1; k <= n - 1; ++k) acc += f(n - 2 * k);
            return f(-n) / t - d * acc;
        }
        for (long long k = 0; k <= -n - 1; ++k) acc += f(n + 2 * k);
        return t * f(-n) + d * acc;
    });
}

/// I_{s0} = u I u in closed form.
inline LatticeFunction apply_I_s0(const LatticeFunction& f, const LatticeConfig& cfg) {
    const double t = cfg.tau();
    const double d = t - 1.0 / t;
    const long long M = cfg.M();
    return LatticeFunction([f, t, d, M](long long n) {
        Complex acc{};
        if (n < M) {
            for (long long k = 1; k <= M - n - 1; ++k) acc += f(n + 2 * k);
            return f(2 * M - n) / t - d * acc;
        }
        for (long long k = 0; k <= n - M - 1; ++k) acc += f(n - 2 * k);
        return t * f(2 * M - n) + d * acc;
    });
}

inline LatticeFunction apply_I_generator(int i, const LatticeFunction& f, const LatticeConfig& cfg) {
    return i == 1 ? apply_I_s1(f, cfg) : apply_I_s0(f, cfg);
}

/// I_w = I(T_w) = u^r I_{s_i1} ... I_{s_ip}.
inline LatticeFunction apply_Iw(const WeylElement& w, const LatticeFunction& f, const LatticeConfig& cfg) {
    LatticeFunction g = f;
    for (int i = w.length(); i >= 1; --i) g = apply_I_generator(w.letter(i), g, cfg);
    if (w.u_exponent() == 1) g = apply_u(g, cfg);
    return g;
}

// ---------------------------------------------------------------------------
// Intertwiner

namespace detail {

// Memoized I_w f for w in W_S, sharing suffix chains: I_w f = I_{s_i1} (I_{w'} f).
class IwChain {
public:
    IwChain(LatticeFunction f, LatticeConfig cfg) : f_(std::move(f)), cfg_(cfg) {}

    LatticeFunction get(const WeylElement& w) {
        std::lock_guard lock(mutex_);
        return get_locked(w);
    }

private:
    LatticeFunction get_locked(const WeylElement& w) {
        if (w.length() == 0) return f_;
        auto it = chains_.find(w);
        if (it != chains_.end()) return it->second;
        const WeylElement suffix{0, w.length() - 1, w.letter(w.length())};
        LatticeFunction g = apply_I_generator(w.letter(1), get_locked(suffix), cfg_);
        chains_.emplace(w, g);
        return g;
    }

    LatticeFunction f_;
    LatticeConfig cfg_;
    std::mutex mutex_;
    std::map<WeylElement, LatticeFunction> chains_;
};

}  // namespace detail

/// (J_cal f)_n = tau^-l(w_n) (I_{w_n} f)_{n_+}.
inline LatticeFunction apply_Jcal(const LatticeFunction& f, const LatticeConfig& cfg) {
    auto chain = std::make_shared<detail::IwChain>(f, cfg);
    return LatticeFunction([chain, cfg](long long n) {
        const WeylElement wn = chamber_map(n, cfg);
        if (wn.length() == 0) return chain->get(wn)(n);
        const long long n_plus = wn.act(n, cfg.M());
        return std::pow(cfg.tau(), -wn.length()) * chain->get(wn)(n_plus);
    });
}

/// Total order extending the triangular order of J_cal: (l(w_n), |n|, positive first).
inline bool triangular_before(long long a, long long b, int M) {
    const int la = chamber_map(a, M).length();
    const int lb = chamber_map(b, M).length();
    if (la != lb) return la < lb;
    const long long aa = a < 0 ? -a : a;
    const long long ab = b < 0 ? -b : b;
    if (aa != ab) return aa < ab;
    return a > b;
}

/// Partial order k < n used by the triangularity of J_cal.
inline bool triangular_precedes(long long k, long long n, int M) {
    const WeylElement wk = chamber_map(k, M);
    const WeylElement wn = chamber_map(n, M);
    if (bruhat_less(wk, wn)) return true;
    return wk == wn && std::llabs(k) < std::llabs(n);
}

/// Checks that [-N, N] contains every index preceding one of its members.
/// Throws std::out_of_range naming the first missing index.
inline void check_window_closed(long long N, const LatticeConfig& cfg) {
    const long long M = cfg.M();
    int top = 0;
    for (long long n = -N; n <= N; ++n) top = std::max(top, chamber_map(n, cfg).length());
    if (top == 0) return;
    // {k : l(w_k) <= top - 1} = [-(top-1) M, top M]
    const long long hi = top * M;
    const long long lo = -(top - 1) * M;
    if (hi > N) {
        throw std::out_of_range("window [-" + std::to_string(N) + ", " + std::to_string(N) +
                                "] is not closed under the triangular order: index " + std::to_string(N + 1) +
                                " precedes members of the window");
    }
    if (lo < -N) {
        throw std::out_of_range("window [-" + std::to_string(N) + ", " + std::to_string(N) +
                                "] is not closed under the triangular order: index " + std::to_string(-N - 1) +
                                " precedes members of the window");
    }
}

/// Solves J_cal f = g on [-N, N] by forward substitution in the triangular order.
/// The result carries the support window [-N, N]; outside it the values are
/// not part of the solution and read as zero.
inline LatticeFunction invert_Jcal(const LatticeFunction& g, long long N, const LatticeConfig& cfg) {
    if (N <= 0) throw std::invalid_argument("window radius must be positive");
    check_window_closed(N, cfg);
    const int M = cfg.M();
    std::vector<long long> order;
    for (long long n = -N; n <= N; ++n) order.push_back(n);
    std::sort(order.begin(), order.end(), [M](long long a, long long b) { return triangular_before(a, b, M); });

    std::vector<Complex> solution(static_cast<std::size_t>(2 * N + 1));
    auto known = std::make_shared<std::vector<Complex>>(solution.size());
    for (long long n : order) {
        // Unsolved entries are zero, and the diagonal coefficient is tau^-2l(w_n).
        const LatticeFunction partial = LatticeFunction::from_values(-N, *known);
        const Complex residual = apply_Jcal(partial, cfg)(n);
        const double diag = std::pow(cfg.tau(), -2 * chamber_map(n, cfg).length());
        (*known)[static_cast<std::size_t>(n + N)] = (g(n) - residual) / diag;
    }
    return LatticeFunction::from_values(-N, *known);
}

// ---------------------------------------------------------------------------
// Hilbert space structure

/// <f, g>_delta = sum f_n conj(g_n) delta_n over [-bound, bound].
inline Complex inner_delta(const LatticeFunction& f, const LatticeFunction& g, long long support_bound,
                           const LatticeConfig& cfg) {
    auto within = [support_bound](const LatticeFunction& h) {
        return h.support() && h.support()->lo >= -support_bound && h.support()->hi <= support_bound;
    };
    if (!within(f) || !within(g)) {
        throw std::invalid_argument("inner_delta requires finitely supported functions inside [-" +
                                    std::to_string(support_bound) + ", " + std::to_string(support_bound) + "]");
    }
    Complex acc{};
    for (long long n = -support_bound; n <= support_bound; ++n) acc += f(n) * std::conj(g(n)) * delta_weight(n, cfg);
    return acc;
}

/// Restricts f to [lo, hi], attaching a support window.
inline LatticeFunction truncate(const LatticeFunction& f, long long lo, long long hi) {
    std::vector<Complex> values;
    for (long long n = lo; n <= hi; ++n) values.push_back(f(n));
    return LatticeFunction::from_values(lo, std::move(values));
}

}  // namespace hecke_dft
