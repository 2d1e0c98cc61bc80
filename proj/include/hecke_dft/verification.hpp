// verification.hpp - executable checks of every algebraic and spectral identity
//
// Each suite returns a list of Check records: a measured deviation against a
// pinned tolerance. Exact (symbolic or combinatorial) checks count mismatches
// and pass only at zero. Randomized checks draw from a generator seeded by
// (seed, check name), so reports are reproducible run to run.

#pragma once

#include "hecke_dft/hecke_algebra.hpp"
#include "hecke_dft/lattice_ops.hpp"
#include "hecke_dft/spectral.hpp"
#include "hecke_dft/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hecke_dft::verify {

struct Check {
    std::string suite;
    std::string name;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool exact = false;
    /// Passes when deviation > tolerance instead of <=.
    bool lower_bound = false;
    bool passed = false;
    std::string note;
};

/// Test hook: perturbs one kernel entry before the orthogonality suite runs.
struct KernelTamper {
    int m = 0;
    int n = 0;
    double delta = 0.0;
};

struct Options {
    /// Window radius N for lattice identities; 0 selects 6M.
    long long window = 0;
    std::uint64_t seed = 0;
    /// suite name -> tolerance replacing every numeric tolerance of that suite
    std::map<std::string, double> tolerance;
    std::optional<KernelTamper> tamper;

    long long resolved_window(const LatticeConfig& cfg) const { return window > 0 ? window : 6LL * cfg.M(); }
};

struct Report {
    std::vector<Check> checks;
    std::string xhat_convention;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"daha",     "reps",          "intertwiner", "unitarity",
                                                "spectrum", "orthogonality", "limit",       "quadrature"};
    return names;
}

namespace detail {

class Recorder {
public:
    Recorder(std::string suite, const Options& opts, std::vector<Check>& out)
        : suite_(std::move(suite)), opts_(opts), out_(out) {}

    Check& numeric(std::string name, double deviation, double tolerance, std::string note = {}) {
        auto it = opts_.tolerance.find(suite_);
        if (it != opts_.tolerance.end()) tolerance = it->second;
        Check c{suite_, std::move(name), deviation, tolerance, false, false, deviation <= tolerance, std::move(note)};
        if (std::isnan(deviation)) c.passed = false;
        out_.push_back(std::move(c));
        return out_.back();
    }

    Check& above(std::string name, double value, double threshold, std::string note = {}) {
        Check c{suite_, std::move(name), value, threshold, false, true, value > threshold, std::move(note)};
        out_.push_back(std::move(c));
        return out_.back();
    }

    Check& exact(std::string name, long long mismatches, std::string note = {}) {
        Check c{suite_, std::move(name), static_cast<double>(mismatches), 0.0, true, false, mismatches == 0,
                std::move(note)};
        out_.push_back(std::move(c));
        return out_.back();
    }

private:
    std::string suite_;
    const Options& opts_;
    std::vector<Check>& out_;
};

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::mt19937_64 rng_for(std::uint64_t seed, std::string_view salt) {
    const std::uint64_t h = fnv1a(salt);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    return std::mt19937_64(seq);
}

inline std::string config_tag(const LatticeConfig& cfg) {
    return "M=" + std::to_string(cfg.M()) + ",tau=" + std::to_string(cfg.tau());
}

/// max |lhs - rhs| on [lo, hi] divided by the largest modulus of lhs, rhs and
/// every function in `involved` on the same window.
inline double relative_gap(const LatticeFunction& lhs, const LatticeFunction& rhs,
                           const std::vector<LatticeFunction>& involved, long long lo, long long hi) {
    double scale = std::max(max_abs(lhs, lo, hi), max_abs(rhs, lo, hi));
    for (const auto& f : involved) scale = std::max(scale, max_abs(f, lo, hi));
    const double gap = max_abs_difference(lhs, rhs, lo, hi);
    if (gap == 0.0) return 0.0;
    return scale > 0.0 ? gap / scale : gap;
}

inline Signal random_signal(std::mt19937_64& rng, int size) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Signal s(size);
    for (int i = 0; i < size; ++i) {
        const double re = dist(rng);
        s(i) = Complex{re, dist(rng)};
    }
    return s;
}

// Operator for a basis monomial T_w X^k in the difference-reflection representation.
inline LatticeFunction apply_monomial(const BasisKey& key, const LatticeFunction& xk_f, const LatticeConfig& cfg) {
    LatticeFunction g = xk_f;
    for (int i = key.w.length(); i >= 1; --i) {
        if (key.w.letter(i) == 1) {
            g = apply_That(g, cfg);
        } else {
            g = apply_u(apply_That(apply_u(g, cfg), cfg), cfg);
        }
    }
    if (key.w.u_exponent() == 1) g = apply_u(g, cfg);
    return g;
}

// Representation of a symbolic element at the configured tau, applied to f.
inline LatticeFunction represent(const AlgebraElement& e, const LatticeFunction& f, const LatticeConfig& cfg) {
    std::map<int, LatticeFunction> powers{{0, f}};
    auto x_power = [&](int k) {
        auto it = powers.find(k);
        if (it != powers.end()) return it->second;
        const int step = k > 0 ? 1 : -1;
        LatticeFunction g = f;
        for (int j = 0; j != k; j += step) {
            g = step > 0 ? apply_Xhat(g, cfg) : apply_Xhat_inv(g, cfg);
        }
        powers.emplace(k, g);
        return g;
    };
    std::vector<std::pair<Complex, LatticeFunction>> parts;
    for (const auto& [key, c] : e.terms()) {
        parts.emplace_back(Complex{c.evaluate(cfg.tau()), 0.0}, apply_monomial(key, x_power(key.k), cfg));
    }
    return LatticeFunction([parts](long long n) {
        Complex acc{};
        for (const auto& [c, g] : parts) acc += c * g(n);
        return acc;
    });
}

inline AlgebraElement random_element(std::mt19937_64& rng, int max_length, int max_power) {
    std::uniform_int_distribution<int> terms(1, 3);
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<int> len(0, max_length);
    std::uniform_int_distribution<int> power(-max_power, max_power);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> tau_exp(-2, 2);
    AlgebraElement e;
    const int count = terms(rng);
    for (int i = 0; i < count; ++i) {
        const int r = bit(rng);
        const int p = len(rng);
        const int last = bit(rng);
        const int k = power(rng);
        int c = coeff(rng);
        if (c == 0) c = 1;
        e.add_term({WeylElement{r, p, last}, k}, RationalFunctionTau(c) * RationalFunctionTau::tau_power(tau_exp(rng)));
    }
    return e;
}

// |I_{s_i}| applied to a nonnegative function: every coefficient and value
// replaced by its modulus. Bounds the magnitude of the terms I_{s_i} combines.
inline LatticeFunction abs_I_generator(int i, const LatticeFunction& f, const LatticeConfig& cfg) {
    const double t = cfg.tau();
    const double d = 1.0 / t - t;
    const long long M = cfg.M();
    return LatticeFunction([f, t, d, M, i](long long n) {
        double acc = 0.0;
        if (i == 1) {
            if (n > 0) {
                for (long long k = 1; k <= n - 1; ++k) acc += f(n - 2 * k).real();
                return Complex{f(-n).real() / t + d * acc, 0.0};
            }
            for (long long k = 0; k <= -n - 1; ++k) acc += f(n + 2 * k).real();
            return Complex{t * f(-n).real() + d * acc, 0.0};
        }
        if (n < M) {
            for (long long k = 1; k <= M - n - 1; ++k) acc += f(n + 2 * k).real();
            return Complex{f(2 * M - n).real() / t + d * acc, 0.0};
        }
        for (long long k = 0; k <= n - M - 1; ++k) acc += f(n - 2 * k).real();
        return Complex{t * f(2 * M - n).real() + d * acc, 0.0};
    });
}

// Pointwise magnitude scale of J_cal f: tau^-l(w_n) (|I_{w_n}| (|f| + floor))(n_+).
// `floor` stands for the absolute rounding error already present in the values of f.
// Rounding errors of J_cal f at n are bounded by a modest multiple of eps times this.
inline LatticeFunction jcal_condition_scale(const LatticeFunction& f, const LatticeConfig& cfg, double floor) {
    const LatticeFunction mag([f, floor](long long n) { return Complex{std::abs(f(n)) + floor, 0.0}; });
    auto chains = std::make_shared<std::map<WeylElement, LatticeFunction>>();
    return LatticeFunction([mag, chains, cfg](long long n) {
        const WeylElement wn = chamber_map(n, cfg);
        std::function<LatticeFunction(const WeylElement&)> chain = [&](const WeylElement& w) -> LatticeFunction {
            if (w.length() == 0) return mag;
            auto it = chains->find(w);
            if (it != chains->end()) return it->second;
            const WeylElement suffix{0, w.length() - 1, w.letter(w.length())};
            LatticeFunction g = abs_I_generator(w.letter(1), chain(suffix), cfg);
            chains->emplace(w, g);
            return g;
        };
        return std::pow(cfg.tau(), -wn.length()) * chain(wn)(wn.act(n, cfg.M()));
    });
}

// T_w built from the left with the T T_w and U T_w rules only.
inline AlgebraElement build_from_left(const WeylElement& w, AlgebraElement seed) {
    AlgebraElement e = std::move(seed);
    for (int i = w.length(); i >= 1; --i) {
        if (w.letter(i) == 1) {
            e = mul_left_T(e);
        } else {
            e = mul_left_U(mul_left_T(mul_left_U(e)));
        }
    }
    if (w.u_exponent() == 1) e = mul_left_U(e);
    return e;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// daha: exact symbolic identities over Q(tau)

inline std::vector<Check> run_daha(const Options& opts) {
    std::vector<Check> out;
    detail::Recorder rec("daha", opts, out);
    using E = AlgebraElement;
    const E T = E::T();
    const E U = E::U();
    const E X = E::X();
    const E Xinv = E::X(-1);
    const E one = E::one();
    const RationalFunctionTau t = RationalFunctionTau::tau();
    const RationalFunctionTau t_inv = RationalFunctionTau::tau_power(-1);
    const RationalFunctionTau d = t - t_inv;

    {
        long long bad = 0;
        bad += !((T - E::scalar(t)) * (T + E::scalar(t_inv))).is_zero();
        bad += !(T * T_inverse() == one);
        bad += !(T_inverse() * T == one);
        bad += !(U * U == one);
        bad += !(U * X * U == Xinv);
        bad += !(T_inverse() * X * T_inverse() == Xinv);
        bad += !(X * Xinv == one);
        rec.exact("relations", bad, "(T-tau)(T+1/tau)=0, U^2=1, UXU=X^-1=T^-1 X T^-1");
    }

    const std::vector<WeylElement> short_elements = [] {
        std::vector<WeylElement> v;
        for (int r = 0; r <= 1; ++r) {
            for (const auto& w : enumerate_up_to_length(r, 6)) v.push_back(w);
        }
        return v;
    }();

    {
        long long bad = 0;
        for (const auto& w : short_elements) {
            bad += !(detail::build_from_left(w, one) == E::T_w(w));
            E expected = E::T_w(w * WeylElement::s());
            if (eta(w) == -1) expected += E::T_w(w).scaled(d);
            bad += !(detail::build_from_left(w, T) == expected);
        }
        rec.exact("right_multiplication_by_T", bad, "T_w T for l(w) <= 6, both u-exponents");
    }
    {
        long long bad = 0;
        for (const auto& w : short_elements) {
            E expected = E::T_w(WeylElement::s() * w);
            if (eta(w.inverse()) == -1) expected += E::T_w(w).scaled(d);
            bad += !(multiply(T, E::T_w(w)) == expected);
            for (int k = -2; k <= 2; ++k) {
                const E m = E::basis_monomial(w, k);
                bad += !(mul_left_T(m) == multiply(T, m));
                bad += !(mul_left_U(m) == multiply(U, m));
            }
        }
        rec.exact("left_multiplication_by_T", bad, "T T_w for l(w) <= 6; left rules agree with the product");
    }
    {
        long long bad = 0;
        const E denominator_free = one - E::X(-2);
        for (int k = -6; k <= 6; ++k) {
            if (k == 0) continue;
            const E lhs = (E::basis_monomial(WeylElement::s(), k) - multiply(E::X(-k), T)) * denominator_free;
            const E rhs = (E::X(k) - E::X(-k)).scaled(d);
            bad += !(lhs == rhs);
        }
        rec.exact("lusztig", bad, "T X^k - X^-k T = (tau - 1/tau)(X^k - X^-k)/(1 - X^-2), |k| <= 6");
    }
    {
        long long bad = 0;
        for (const auto& w : short_elements) {
            for (int eps : {1, -1}) bad += !verify_x_commutation(w, eps);
        }
        rec.exact("x_commutation", bad, "T_w X^eps expansion over v < w, l(w) <= 6");
    }
    {
        long long bad = 0;
        for (int k = 2; k <= 12; ++k) bad += !(a_coeff(k - 2) - d * a_coeff(k - 1) == a_coeff(k));
        bad += !a_coeff(0).is_zero();
        rec.exact("a_recursion", bad, "a(k-2) - (tau - 1/tau) a(k-1) = a(k), 2 <= k <= 12");
    }
    {
        long long bad = 0;
        const E center = X + Xinv;
        for (int r = 0; r <= 1; ++r) {
            for (const auto& w : enumerate_up_to_length(r, 4)) {
                for (int k = -3; k <= 3; ++k) {
                    const E m = E::basis_monomial(w, k);
                    bad += !(center * m == m * center);
                }
            }
        }
        rec.exact("centrality", bad, "X + X^-1 commutes with T_w X^k, l(w) <= 4, |k| <= 3");
    }
    return out;
}

// ---------------------------------------------------------------------------
// reps: both representations of the algebra on C(Z)

inline std::vector<Check> run_reps(const LatticeConfig& cfg, const Options& opts, int samples = 20) {
    std::vector<Check> out;
    detail::Recorder rec("reps", opts, out);
    const long long N = opts.resolved_window(cfg);
    const double t = cfg.tau();
    auto rng = detail::rng_for(opts.seed, "reps/" + detail::config_tag(cfg));

    std::map<std::string, double> worst;
    auto note = [&](const std::string& name, double v) { worst[name] = std::max(worst[name], v); };

    for (int i = 0; i < samples; ++i) {
        const LatticeFunction f = random_finitely_supported(rng, N);
        const auto gap = [&](const LatticeFunction& a, const LatticeFunction& b, std::vector<LatticeFunction> inv) {
            inv.push_back(f);
            return detail::relative_gap(a, b, inv, -N, N);
        };
        const LatticeFunction zero;

        const LatticeFunction tf = apply_That(f, cfg);
        const LatticeFunction q1 = tf + Complex{1.0 / t, 0.0} * f;
        const LatticeFunction q2 = apply_That(q1, cfg) - Complex{t, 0.0} * q1;
        note("That_quadratic", gap(q2, zero, {tf, q1, apply_That(q1, cfg)}));

        const LatticeFunction xf = apply_Xhat(f, cfg);
        const LatticeFunction xif = apply_Xhat_inv(f, cfg);
        const LatticeFunction uxu = apply_u(apply_Xhat(apply_u(f, cfg), cfg), cfg);
        note("Xhat_u_conjugation", gap(uxu, xif, {xf}));
        const LatticeFunction txt = apply_That_inv(apply_Xhat(apply_That_inv(f, cfg), cfg), cfg);
        note("Xhat_That_conjugation", gap(txt, xif, {apply_That_inv(f, cfg), apply_Xhat(apply_That_inv(f, cfg), cfg)}));
        note("Xhat_inverse", gap(apply_Xhat(xif, cfg), f, {xif}));
        note("Xhat_inverse", gap(apply_Xhat_inv(xf, cfg), f, {xf}));
        note("laplacian_decomposition", gap(xf + xif, apply_L(f, cfg), {xf, xif}));

        const LatticeFunction If = apply_I(f, cfg);
        const LatticeFunction p1 = If + Complex{1.0 / t, 0.0} * f;
        const LatticeFunction p2 = apply_I(p1, cfg) - Complex{t, 0.0} * p1;
        note("I_quadratic", gap(p2, zero, {If, p1, apply_I(p1, cfg)}));
        note("D_u_conjugation", gap(apply_u(apply_D(apply_u(f, cfg)), cfg), apply_D(f, -1), {}));
        const LatticeFunction idi = apply_I_inv(apply_D(apply_I_inv(f, cfg)), cfg);
        note("D_I_conjugation", gap(idi, apply_D(f, -1), {apply_I_inv(f, cfg), apply_D(apply_I_inv(f, cfg))}));

        const LatticeFunction jf = apply_J(f);
        note("J_idempotent", gap(apply_J(jf), jf, {}));
        note("J_reflection", gap(apply_s(jf) + apply_J(apply_s(f)), apply_s(f) - f, {jf}));
        note("I_closed_forms", gap(apply_I_s1(f, cfg), If, {}));
        note("I_closed_forms",
             gap(apply_I_s0(f, cfg), apply_u(apply_I(apply_u(f, cfg), cfg), cfg), {apply_I(apply_u(f, cfg), cfg)}));
    }
    const std::string where = " (" + detail::config_tag(cfg) + ", |n| <= " + std::to_string(N) + ")";
    rec.numeric("That_quadratic", worst["That_quadratic"], 1e-12, "(T^-tau)(T^+1/tau)=0" + where);
    rec.numeric("Xhat_u_conjugation", worst["Xhat_u_conjugation"], 1e-12, "u X^ u = X^^-1" + where);
    rec.numeric("Xhat_That_conjugation", worst["Xhat_That_conjugation"], 1e-12, "T^^-1 X^ T^^-1 = X^^-1" + where);
    rec.numeric("Xhat_inverse", worst["Xhat_inverse"], 1e-12, "X^ X^^-1 = X^^-1 X^ = 1" + where);
    rec.numeric("laplacian_decomposition", worst["laplacian_decomposition"], 1e-12, "X^ + X^^-1 = L" + where);
    rec.numeric("I_quadratic", worst["I_quadratic"], 1e-12, "(I-tau)(I+1/tau)=0" + where);
    rec.numeric("D_u_conjugation", worst["D_u_conjugation"], 1e-12, "u D u = D^-1" + where);
    rec.numeric("D_I_conjugation", worst["D_I_conjugation"], 1e-12, "I^-1 D I^-1 = D^-1" + where);
    rec.numeric("J_idempotent", worst["J_idempotent"], 1e-12, "J^2 = J" + where);
    rec.numeric("J_reflection", worst["J_reflection"], 1e-12, "sJ + Js = s - 1" + where);
    rec.numeric("I_closed_forms", worst["I_closed_forms"], 1e-12, "I_s1 = I, I_s0 = u I u" + where);
    return out;
}

/// Symbolic products against composed lattice operators at tau in {1/4, 1/2, 3/4}.
inline std::vector<Check> run_cross_representation(int M, const Options& opts, int pairs = 50, int functions = 10) {
    std::vector<Check> out;
    detail::Recorder rec("reps", opts, out);
    auto rng = detail::rng_for(opts.seed, "cross/" + std::to_string(M));
    const long long radius = 2LL * M;
    double worst = 0.0;
    std::vector<std::pair<AlgebraElement, AlgebraElement>> factors;
    std::vector<AlgebraElement> products;
    for (int i = 0; i < pairs; ++i) {
        AlgebraElement a = detail::random_element(rng, 3, 2);
        AlgebraElement b = detail::random_element(rng, 3, 2);
        products.push_back(a * b);
        factors.emplace_back(std::move(a), std::move(b));
    }
    for (double tau : {0.25, 0.5, 0.75}) {
        const LatticeConfig cfg(M, tau);
        for (int j = 0; j < functions; ++j) {
            const LatticeFunction f = random_finitely_supported(rng, radius);
            for (int i = 0; i < pairs; ++i) {
                const LatticeFunction bf = detail::represent(factors[static_cast<std::size_t>(i)].second, f, cfg);
                const LatticeFunction composed = detail::represent(factors[static_cast<std::size_t>(i)].first, bf, cfg);
                const LatticeFunction direct = detail::represent(products[static_cast<std::size_t>(i)], f, cfg);
                worst = std::max(worst, detail::relative_gap(composed, direct, {bf, f}, -radius, radius));
            }
        }
    }
    rec.numeric("cross_representation", worst, 1e-10,
                "rho(ab) f = rho(a) rho(b) f, " + std::to_string(pairs) + " products, M=" + std::to_string(M));
    return out;
}

// ---------------------------------------------------------------------------
// intertwiner: J_cal between the representations

/// Which X^ summand indexings satisfy X^ J_cal = J_cal D on the window.
inline std::vector<std::pair<SummandIndexing, double>> xhat_indexing_gaps(const LatticeConfig& cfg, const Options& opts,
                                                                         int samples) {
    const long long N = opts.resolved_window(cfg);
    auto rng = detail::rng_for(opts.seed, "indexing/" + detail::config_tag(cfg));
    std::vector<std::pair<SummandIndexing, double>> gaps{{SummandIndexing::direct, 0.0},
                                                         {SummandIndexing::inverse, 0.0}};
    for (int i = 0; i < samples; ++i) {
        const LatticeFunction f = random_finitely_supported(rng, N);
        const LatticeFunction jf = apply_Jcal(f, cfg);
        const LatticeFunction jdf = apply_Jcal(apply_D(f), cfg);
        for (auto& [indexing, gap] : gaps) {
            gap = std::max(gap, detail::relative_gap(apply_Xhat(jf, cfg, indexing), jdf, {jf, f}, -N, N));
        }
    }
    return gaps;
}

inline std::string describe_convention(const std::vector<std::pair<SummandIndexing, double>>& gaps, double tol) {
    const bool direct = gaps[0].second <= tol;
    const bool inverse = gaps[1].second <= tol;
    if (direct && inverse) return "direct (v); inverse (v^-1) equivalent";
    if (direct) return "direct (v)";
    if (inverse) return "inverse (v^-1)";
    return "unresolved";
}

inline std::vector<Check> run_intertwiner(const LatticeConfig& cfg, const Options& opts, std::string* convention = nullptr,
                                          int samples = 10) {
    std::vector<Check> out;
    detail::Recorder rec("intertwiner", opts, out);
    const long long N = opts.resolved_window(cfg);
    const int M = cfg.M();
    const double t = cfg.tau();
    const std::string where = " (" + detail::config_tag(cfg) + ", |n| <= " + std::to_string(N) + ")";
    auto rng = detail::rng_for(opts.seed, "intertwiner/" + detail::config_tag(cfg));

    double that_gap = 0.0;
    double u_gap = 0.0;
    double roundtrip = 0.0;
    double conjugated = 0.0;
    const long long margin = M + 1;
    for (int i = 0; i < samples; ++i) {
        const LatticeFunction f = random_finitely_supported(rng, N);
        const LatticeFunction jf = apply_Jcal(f, cfg);
        const LatticeFunction If = apply_I(f, cfg);
        that_gap = std::max(that_gap, detail::relative_gap(apply_That(jf, cfg), apply_Jcal(If, cfg), {f, jf, If}, -N, N));
        u_gap = std::max(u_gap, detail::relative_gap(apply_u(jf, cfg), apply_Jcal(apply_u(f, cfg), cfg), {f, jf}, -N, N));
        const LatticeFunction back = invert_Jcal(truncate(jf, -N, N), N, cfg);
        roundtrip = std::max(roundtrip, detail::relative_gap(back, f, {jf}, -N, N));

        const LatticeFunction g = random_finitely_supported(rng, N - margin);
        const LatticeFunction pre = invert_Jcal(g, N, cfg);
        const LatticeFunction conj = apply_Jcal(apply_D(pre), cfg);
        conjugated = std::max(conjugated, detail::relative_gap(conj, apply_Xhat(g, cfg), {g, pre}, -N + margin, N - margin));
    }
    const auto gaps = xhat_indexing_gaps(cfg, opts, samples);
    rec.numeric("That_intertwining", that_gap, 1e-12, "T^ J = J I" + where);
    rec.numeric("u_intertwining", u_gap, 1e-12, "u J = J u" + where);
    rec.numeric("Xhat_intertwining_direct", gaps[0].second, 1e-12, "X^ J = J D, summand index v" + where);
    rec.numeric("Xhat_intertwining_inverse", gaps[1].second, 1e-12, "X^ J = J D, summand index v^-1" + where);
    rec.numeric("inverse_roundtrip", roundtrip, 1e-12, "J^-1 (J f) = f" + where);
    rec.numeric("conjugated_shift", conjugated, 1e-12,
                "J D J^-1 = X^ on |n| <= " + std::to_string(N - margin) + " (" + detail::config_tag(cfg) + ")");
    if (convention) *convention = describe_convention(gaps, 1e-12);

    // Triangularity on indicators: (J e_k)_n vanishes unless k precedes n, the
    // diagonal of J is tau^-2l(w_n), and (I_{w_n} e_n)_{n+} = tau^-l(w_n).
    double tri = 0.0;
    double lead_iw = 0.0;
    for (long long k = -N; k <= N; ++k) {
        const LatticeFunction e = LatticeFunction::indicator(k);
        const LatticeFunction je = apply_Jcal(e, cfg);
        const WeylElement wk = chamber_map(k, cfg);
        const double scale = std::max(max_abs(je, -N, N), 1.0);
        for (long long n = -N; n <= N; ++n) {
            const Complex v = je(n);
            if (n == k) {
                tri = std::max(tri, std::abs(v - std::pow(t, -2 * wk.length())) / scale);
            } else if (!triangular_precedes(k, n, M)) {
                tri = std::max(tri, std::abs(v) / scale);
            }
        }
        const Complex iw = apply_Iw(wk, e, cfg)(wk.act(k, M));
        lead_iw = std::max(lead_iw, std::abs(iw - std::pow(t, -wk.length())) * std::pow(t, wk.length()));
    }
    rec.numeric("triangularity", tri, 1e-12, "J e_k supported on k <= n with diagonal tau^-2l(w_k)" + where);
    rec.numeric("Iw_leading_coefficient", lead_iw, 1e-12, "(I_{w_n} e_n)_{n+} = tau^-l(w_n)" + where);
    return out;
}

// ---------------------------------------------------------------------------
// unitarity: adjoint identities in l^2(Z, delta)

inline std::vector<Check> run_unitarity(const LatticeConfig& cfg, const Options& opts, int samples = 20) {
    std::vector<Check> out;
    detail::Recorder rec("unitarity", opts, out);
    const int M = cfg.M();
    const long long N = opts.resolved_window(cfg);
    const long long radius = std::max<long long>(1, N - M - 1);
    const long long bound = radius + M + 1;
    auto rng = detail::rng_for(opts.seed, "unitarity/" + detail::config_tag(cfg));
    const std::string where = " (" + detail::config_tag(cfg) + ")";

    auto norm = [&](const LatticeFunction& f) { return std::sqrt(std::abs(inner_delta(f, f, bound, cfg))); };
    double that_gap = 0.0;
    double u_gap = 0.0;
    double unitary_gap = 0.0;
    double l_gap = 0.0;
    for (int i = 0; i < samples; ++i) {
        const LatticeFunction f = random_finitely_supported(rng, radius);
        const LatticeFunction g = random_finitely_supported(rng, radius);
        auto adjoint_gap = [&](const std::function<LatticeFunction(const LatticeFunction&)>& op) {
            const LatticeFunction af = truncate(op(f), -bound, bound);
            const LatticeFunction ag = truncate(op(g), -bound, bound);
            const Complex lhs = inner_delta(af, g, bound, cfg);
            const Complex rhs = inner_delta(f, ag, bound, cfg);
            const double scale = std::max(norm(af) * norm(g), norm(f) * norm(ag));
            return std::abs(lhs - rhs) / scale;
        };
        that_gap = std::max(that_gap, adjoint_gap([&](const LatticeFunction& h) { return apply_That(h, cfg); }));
        u_gap = std::max(u_gap, adjoint_gap([&](const LatticeFunction& h) { return apply_u(h, cfg); }));
        l_gap = std::max(l_gap, adjoint_gap([&](const LatticeFunction& h) { return apply_L(h, cfg); }));
        const Complex uu = inner_delta(truncate(apply_u(f, cfg), -bound, bound), truncate(apply_u(g, cfg), -bound, bound),
                                       bound, cfg);
        unitary_gap = std::max(unitary_gap, std::abs(uu - inner_delta(f, g, bound, cfg)) / (norm(f) * norm(g)));
    }
    rec.numeric("That_self_adjoint", that_gap, 1e-12, "<T^ f, g> = <f, T^ g>" + where);
    rec.numeric("u_self_adjoint", u_gap, 1e-12, "<u f, g> = <f, u g>" + where);
    rec.numeric("u_unitary", unitary_gap, 1e-12, "<u f, u g> = <f, g>" + where);
    rec.numeric("L_self_adjoint", l_gap, 1e-12, "<L f, g> = <f, L g>" + where);

    long long bad = 0;
    for (long long n = -4LL * M; n <= 4LL * M; ++n) {
        const int a_exp = laplacian_a(n, cfg) == 1.0 ? 0 : 2;
        const int b_exp = laplacian_b(n + 1, cfg) == 1.0 ? 0 : 2;
        bad += (a_exp + 2 * chamber_map(n, cfg).length()) != (b_exp + 2 * chamber_map(n + 1, cfg).length());
    }
    rec.exact("laplacian_weight_balance", bad, "a_n delta_n = b_{n+1} delta_{n+1} as powers of tau, |n| <= 4M" + where);
    return out;
}

// ---------------------------------------------------------------------------
// spectrum: Bethe roots, weights and the spherical function

inline std::vector<Check> run_spectrum_roots(const LatticeConfig& cfg, const Options& opts) {
    std::vector<Check> out;
    detail::Recorder rec("spectrum", opts, out);
    const int M = cfg.M();
    const double pi = std::numbers::pi;
    const std::string where = " (" + detail::config_tag(cfg) + ")";
    const SpectrumTable table(cfg);

    long long order_bad = 0;
    double symmetry = 0.0;
    double phase = 0.0;
    double bethe = 0.0;
    long long parity_bad = 0;
    long long weight_bad = 0;
    for (int m = 0; m <= M; ++m) {
        const SpectralPoint& p = table[static_cast<std::size_t>(m)];
        const double prev = m == 0 ? 0.0 : table[static_cast<std::size_t>(m - 1)].xi;
        order_bad += !(p.xi > prev && p.xi < pi);
        symmetry = std::max(symmetry, std::abs(table[static_cast<std::size_t>(M - m)].xi - (pi - p.xi)));
        phase = std::max(phase, p.phase_residual);
        bethe = std::max(bethe, p.bethe_residual);
        const int expected_eps = m % 2 == 0 ? 1 : -1;
        parity_bad += p.parity_epsilon != expected_eps;
        parity_bad += !(bethe_equation_residual(p.xi, p.parity_epsilon, cfg) <= 1e-10);
        parity_bad += bethe_equation_residual(p.xi, -p.parity_epsilon, cfg) <= 1e-10;
        weight_bad += !(p.dual_weight > 0.0);
    }
    rec.exact("root_ordering", order_bad, "0 < xi_0 < ... < xi_M < pi" + where);
    rec.numeric("root_symmetry", symmetry, 1e-12, "xi_{M-m} = pi - xi_m" + where);
    rec.numeric("phase_residual", phase, 1e-13 * (M + 2) * pi, "|V(xi_m) - (m+1) pi|" + where);
    rec.numeric("bethe_residual", bethe, 1e-10, "Bethe equation residual" + where);
    rec.exact("parity", parity_bad, "eps = +1 iff m even; the opposite sign violates the Bethe equation" + where);
    if (M % 2 == 0) {
        rec.numeric("midpoint_root", std::abs(table[static_cast<std::size_t>(M / 2)].xi - pi / 2), 1e-13,
                    "xi_{M/2} = pi/2" + where);
    }
    {
        long long bad = 0;
        const int grid = 10000;
        for (int j = 0; j <= grid; ++j) bad += !(bethe_V_prime(pi * j / grid, cfg) > M);
        rec.exact("V_monotone", bad, "V'(xi) > M on a 10^4-point grid" + where);
    }
    rec.exact("dual_weight_positive", weight_bad, "DeltaHat_m > 0" + where);
    return out;
}

/// Node weights from delta orbit sums, and the spherical function J_cal phi_xi.
inline std::vector<Check> run_spherical(const LatticeConfig& cfg, const Options& opts) {
    std::vector<Check> out;
    detail::Recorder rec("spectrum", opts, out);
    const int M = cfg.M();
    const double t = cfg.tau();
    const std::string where = " (" + detail::config_tag(cfg) + ")";
    const SpectrumTable table(cfg);

    {
        // Delta_n against W_S(tau^2)^-1 sum over the W_S orbit of delta, truncated at length 40.
        const double t2 = t * t;
        const double poincare = (1.0 + t2) / (1.0 - t2);
        const int max_len = 40;
        const double tail = 2.0 * std::pow(t2, max_len + 1) / (1.0 - t2) / poincare;
        double worst = 0.0;
        const auto& nodes = table.node_weights();
        for (int n = 0; n <= M; ++n) {
            std::map<long long, double> orbit;
            for (const auto& w : enumerate_up_to_length(0, max_len)) {
                const long long image = w.act(n, M);
                orbit.emplace(image, std::pow(t2, chamber_map(image, M).length()));
            }
            double sum = 0.0;
            for (const auto& [image, weight] : orbit) sum += weight;
            worst = std::max(worst, std::abs(sum / poincare - nodes[static_cast<std::size_t>(n)]) - tail);
        }
        rec.numeric("node_weight_orbit_sums", std::max(worst, 0.0), 1e-14,
                    "Delta_n = W_S(tau^2)^-1 sum_{orbit} delta, minus the geometric tail bound" + where);
    }

    {
        const KernelMatrix k = spherical_kernel(table);
        double invariance = 0.0;
        double decomposition = 0.0;
        double kernel_gap = 0.0;
        double eigen = 0.0;
        const long long R = 4LL * M;
        std::vector<double> xis;
        for (const auto& p : table.points()) xis.push_back(p.xi);
        xis.push_back(0.37);
        xis.push_back(1.91);
        for (std::size_t idx = 0; idx < xis.size(); ++idx) {
            const double xi = xis[idx];
            const LatticeFunction phi = phi_xi_function(xi, t);
            const LatticeFunction Phi = apply_Jcal(phi, cfg);
            const LatticeFunction cond = detail::jcal_condition_scale(phi, cfg, max_abs(phi, 0, M));
            // Pointwise: |a - b| / (cond_a + cond_b), where cond bounds the terms J_cal combines.
            auto rel = [&](long long a, const Complex& va, long long b, const Complex& vb) {
                const double gap = std::abs(va - vb);
                return gap == 0.0 ? 0.0 : gap / (cond(a).real() + cond(b).real());
            };
            const LatticeFunction tphi = apply_That(Phi, cfg);
            for (long long n = -R; n <= R; ++n) {
                const double that_scale = cond(n).real() + cond(-n).real();
                const double gap = std::abs(tphi(n) - t * Phi(n));
                eigen = std::max(eigen, gap == 0.0 ? 0.0 : gap / that_scale);
            }
            if (idx >= table.size()) continue;
            const double eps = table[idx].parity_epsilon;
            for (long long n = -R; n <= R; ++n) {
                const long long np = fold_to_alcove(n, M);
                decomposition = std::max(decomposition, rel(n, Phi(n), np, phi(np)));
                invariance = std::max(invariance, rel(-n, Phi(-n), n, Phi(n)));
                invariance = std::max(invariance, rel(2 * M - n, Phi(2 * M - n), n, Phi(n)));
                invariance = std::max(invariance, rel(M - n, Phi(M - n), n, eps * Phi(n)));
            }
            for (int n = 0; n <= M; ++n) {
                kernel_gap = std::max(kernel_gap, rel(n, Phi(n), n, k.phi(static_cast<Eigen::Index>(idx), n)));
            }
        }
        rec.numeric("spherical_invariance", invariance, 1e-12,
                    "Phi(-n) = Phi(2M-n) = Phi(n), Phi(M-n) = eps Phi(n), |n| <= 4M" + where);
        rec.numeric("spherical_decomposition", decomposition, 1e-12, "(J phi_{xi_m})(n) = phi_{xi_m}(n_+), |n| <= 4M" + where);
        rec.numeric("spherical_kernel", kernel_gap, 1e-12, "kernel rows equal J phi_{xi_m} on {0..M}" + where);
        rec.numeric("spherical_That_eigen", eigen, 1e-12, "T^ Phi_xi = tau Phi_xi" + where);
    }
    {
        double worst = 0.0;
        for (double xi : {0.3, 0.9, 1.4, 2.2, 2.9}) {
            for (long long n = -10; n <= 10; ++n) {
                const double cheb = phi_xi(xi, n, t);
                const std::complex<double> cform = phi_xi_plane_wave_form(xi, n, t);
                worst = std::max(worst, std::abs(cform - cheb) / std::max(1.0, std::abs(cheb)));
            }
        }
        rec.numeric("chebyshev_vs_c_form", worst, 1e-12, "U_n + tau^2 U_-n = c e^{i xi n} + c(-xi) e^{-i xi n}" + where);
    }
    return out;
}

inline std::vector<Check> run_spectrum(const LatticeConfig& cfg, const Options& opts) {
    std::vector<Check> out = run_spectrum_roots(cfg, opts);
    std::vector<Check> more = run_spherical(cfg, opts);
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

inline std::vector<Check> run_eigen(const LatticeConfig& cfg, const Options& opts) {
    std::vector<Check> out;
    detail::Recorder rec("spectrum", opts, out);
    const std::string where = " (" + detail::config_tag(cfg) + ")";
    const SpectrumTable table(cfg);
    const KernelMatrix k = spherical_kernel(table);

    std::vector<double> eig;
    for (const auto& p : table.points()) eig.push_back(p.eigenvalue);
    std::sort(eig.begin(), eig.end());
    const std::vector<double> oracle = laplacian_eigenvalues_oracle(cfg);
    double match = 0.0;
    for (std::size_t i = 0; i < eig.size(); ++i) match = std::max(match, std::abs(eig[i] - oracle[i]));
    rec.numeric("eigen_oracle", match, 1e-9, "sorted 2cos(xi_m) against the dense eigensolver" + where);

    const Eigen::MatrixXd L = dense_laplacian(cfg);
    double residual = 0.0;
    for (int m = 0; m < k.size(); ++m) {
        const Eigen::VectorXd phi = k.phi.row(m).transpose();
        const Eigen::VectorXd r = L * phi - table[static_cast<std::size_t>(m)].eigenvalue * phi;
        residual = std::max(residual, r.cwiseAbs().maxCoeff() / phi.cwiseAbs().maxCoeff());
    }
    rec.numeric("eigen_equation", residual, 1e-10, "L Phi_m = 2cos(xi_m) Phi_m" + where);

    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < eig.size(); ++i) gap = std::min(gap, eig[i] - eig[i - 1]);
    rec.above("eigen_gap", gap, 1e-12, "minimal gap between eigenvalues" + where);
    return out;
}

// ---------------------------------------------------------------------------
// orthogonality: the finite transform

inline std::vector<Check> run_orthogonality(const LatticeConfig& cfg, const Options& opts, int samples = 100) {
    std::vector<Check> out;
    detail::Recorder rec("orthogonality", opts, out);
    const std::string where = " (" + detail::config_tag(cfg) + ")";
    KernelMatrix k = spherical_kernel(cfg);
    if (opts.tamper) {
        const KernelTamper& tp = *opts.tamper;
        if (tp.m < 0 || tp.m >= k.size() || tp.n < 0 || tp.n >= k.size()) {
            throw std::out_of_range("tampered kernel entry outside the matrix");
        }
        k.phi(tp.m, tp.n) += tp.delta;
    }
    const OrthogonalityReport gram = verify_orthogonality(k);
    rec.numeric("gram_rows", gram.row_deviation, 1e-10, "<Phi_m, Phi_m'>_Delta = delta_mm' / DeltaHat_m" + where);
    rec.numeric("gram_columns", gram.column_deviation, 1e-10, "<Phi_.n, Phi_.n'>_DeltaHat = delta_nn' / Delta_n" + where);

    auto rng = detail::rng_for(opts.seed, "orthogonality/" + detail::config_tag(cfg));
    const int size = k.size();
    const Eigen::MatrixXd L = dense_laplacian(cfg);
    double roundtrip = 0.0;
    double parseval = 0.0;
    double plancherel = 0.0;
    double parity = 0.0;
    double diagonal = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Signal f = detail::random_signal(rng, size);
        const Signal g = detail::random_signal(rng, size);
        const Signal fh = forward(k, f);
        const Signal gh = forward(k, g);
        roundtrip = std::max(roundtrip, (inverse(k, fh) - f).cwiseAbs().maxCoeff() / f.cwiseAbs().maxCoeff());

        const double nf = std::sqrt(inner_weighted(f, f, k.node_weights).real());
        const double ng = std::sqrt(inner_weighted(g, g, k.node_weights).real());
        parseval = std::max(parseval, std::abs(inner_weighted(f, g, k.node_weights) - inner_weighted(fh, gh, k.dual_weights)) /
                                          (nf * ng));
        plancherel = std::max(plancherel, std::abs(inner_weighted(fh, fh, k.dual_weights).real() / (nf * nf) - 1.0));

        const auto [plus, minus] = parity_split(k, f);
        const Signal ph = forward(k, plus);
        const Signal mh = forward(k, minus);
        const double scale = fh.cwiseAbs().maxCoeff();
        for (int m = 0; m < size; ++m) {
            parity = std::max(parity, std::abs(m % 2 == 0 ? mh(m) : ph(m)) / scale);
        }

        const Signal lf = L.cast<Complex>() * f;
        const Signal via = inverse(k, apply_spectral_multiplier(k, fh));
        diagonal = std::max(diagonal, (via - lf).cwiseAbs().maxCoeff() / std::max(lf.cwiseAbs().maxCoeff(), f.cwiseAbs().maxCoeff()));
    }
    const std::string count = std::to_string(samples) + " random signals";
    rec.numeric("roundtrip", roundtrip, 1e-10, "inverse(forward f) = f, " + count + where);
    rec.numeric("parseval", parseval, 1e-10, "<f, g>_Delta = <f^, g^>_DeltaHat, " + count + where);
    rec.numeric("plancherel", plancherel, 1e-10, "|f|_Delta = |f^|_DeltaHat, " + count + where);
    rec.numeric("parity_blocks", parity, 1e-10, "u-even signals map to even m, u-odd to odd m" + where);
    rec.numeric("diagonalization", diagonal, 1e-10, "L = F^-1 diag(2cos xi) F" + where);
    return out;
}

// ---------------------------------------------------------------------------
// limit: tau -> 1 reduces the transform to the discrete cosine transform

inline constexpr int limit_M = 8;
inline constexpr double limit_tau = 1.0 - 1e-6;

/// Leading-order position of xi_0 for tau close to 1: xi_0^2 ~ 2 (1 - tau^2) / (M (1 + tau^2)).
inline double limit_endpoint_root(int M, double tau) {
    const double d = one_minus_tau2(tau);
    return std::sqrt(2.0 * d / (M * (1.0 + tau * tau)));
}

inline std::vector<Check> run_limit(const Options& opts) {
    std::vector<Check> out;
    detail::Recorder rec("limit", opts, out);
    const LatticeConfig cfg(limit_M, limit_tau);
    const int M = cfg.M();
    const double pi = std::numbers::pi;
    const SpectrumTable table(cfg);
    const KernelMatrix k = spherical_kernel(table);

    double interior = 0.0;
    for (int m = 1; m < M; ++m) interior = std::max(interior, std::abs(table[static_cast<std::size_t>(m)].xi - m * pi / M));
    rec.numeric("roots_interior", interior, 1e-5, "|xi_m - m pi/8| for 0 < m < 8 at tau = 1 - 1e-6");

    const double predicted = limit_endpoint_root(M, cfg.tau());
    const double endpoint = std::max(std::abs(table[0].xi - predicted),
                                     std::abs((pi - table[static_cast<std::size_t>(M)].xi) - predicted));
    rec.numeric("roots_endpoint", endpoint, 1e-8,
                "xi_0 = pi - xi_8 ~ sqrt(2(1-tau^2)/(M(1+tau^2))) at tau = 1 - 1e-6 (xi_0 -> 0 like sqrt(1-tau))");

    double kernel = 0.0;
    double dual = 0.0;
    double nodes = 0.0;
    for (int m = 0; m <= M; ++m) {
        for (int n = 0; n <= M; ++n) kernel = std::max(kernel, std::abs(k.phi(m, n) - 2.0 * std::cos(m * n * pi / M)));
        const double end = (m == 0 || m == M) ? 0.5 : 1.0;
        dual = std::max(dual, std::abs(2.0 * M * k.dual_weights(m) - end));
        nodes = std::max(nodes, std::abs(k.node_weights(m) - end));
    }
    rec.numeric("kernel_cosine", kernel, 1e-4, "|Phi_mn - 2cos(mn pi/8)|");
    rec.numeric("dual_weights", dual, 1e-4, "2M DeltaHat_m -> 1/2 at m = 0, M and 1 inside");
    rec.numeric("node_weights", nodes, 1e-4, "Delta_n -> 1/2 at n = 0, M and 1 inside");

    auto rng = detail::rng_for(opts.seed, "limit");
    double dct = 0.0;
    for (int i = 0; i < 10; ++i) {
        const Signal f = detail::random_signal(rng, M + 1);
        const Signal fh = forward(k, f);
        for (int m = 0; m <= M; ++m) {
            Complex acc{};
            for (int n = 0; n <= M; ++n) acc += f(n) * 2.0 * std::cos(m * n * pi / M) * ((n == 0 || n == M) ? 0.5 : 1.0);
            dct = std::max(dct, std::abs(fh(m) - acc));
        }
    }
    rec.numeric("cosine_transform", dct, 1e-4, "forward transform against the cosine sum");
    return out;
}

// ---------------------------------------------------------------------------
// quadrature: continuous Hall-Littlewood orthogonality

inline std::vector<Check> run_quadrature(const Options& opts) {
    std::vector<Check> out;
    detail::Recorder rec("quadrature", opts, out);
    double worst = 0.0;
    for (double tau : {0.3, 0.5, 0.7}) {
        for (int n = 0; n <= 10; ++n) {
            for (int np = 0; np <= 10; ++np) {
                const double expected = n != np ? 0.0 : (n == 0 ? 1.0 + tau * tau : 1.0);
                worst = std::max(worst, std::abs(hl_quadrature(n, np, tau, 8) - expected));
            }
        }
    }
    rec.numeric("hall_littlewood_orthogonality", worst, 1e-8, "0 <= n, n' <= 10, tau in {0.3, 0.5, 0.7}");
    return out;
}

// ---------------------------------------------------------------------------

/// Runs one named suite (or "all") for the given configuration.
inline Report run_suite(const std::string& suite, const LatticeConfig& cfg, const Options& opts) {
    const auto& names = suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    Report report;
    auto append = [&](std::vector<Check> checks) {
        report.checks.insert(report.checks.end(), std::make_move_iterator(checks.begin()),
                             std::make_move_iterator(checks.end()));
    };
    auto wants = [&](const char* name) { return suite == "all" || suite == name; };
    if (wants("daha")) append(run_daha(opts));
    if (wants("reps")) {
        append(run_reps(cfg, opts));
        append(run_cross_representation(cfg.M(), opts));
    }
    if (wants("intertwiner")) {
        append(run_intertwiner(cfg, opts, &report.xhat_convention));
    } else {
        report.xhat_convention = describe_convention(xhat_indexing_gaps(cfg, opts, 2), 1e-12);
    }
    if (wants("unitarity")) append(run_unitarity(cfg, opts));
    if (wants("spectrum")) {
        append(run_spectrum(cfg, opts));
        append(run_eigen(cfg, opts));
    }
    if (wants("orthogonality")) append(run_orthogonality(cfg, opts));
    if (wants("limit")) append(run_limit(opts));
    if (wants("quadrature")) append(run_quadrature(opts));
    return report;
}

}  // namespace hecke_dft::verify
