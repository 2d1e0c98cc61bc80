// lattice_function.hpp - lazily evaluated complex functions on Z

#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hecke_dft {

using Complex = std::complex<double>;

/// Closed integer interval [lo, hi].
struct SupportWindow {
    long long lo = 0;
    long long hi = 0;
    bool contains(long long n) const { return lo <= n && n <= hi; }
    bool operator==(const SupportWindow&) const = default;
};

/// A total function Z -> C with memoized pointwise evaluation.
///
/// Copies share the evaluation rule and cache. The cache is guarded by a
/// mutex, so one function may be evaluated from several threads. When a
/// support window is attached, values outside it are exactly zero and the
/// rule is never consulted there.
class LatticeFunction {
public:
    using Rule = std::function<Complex(long long)>;

    LatticeFunction() : LatticeFunction([](long long) { return Complex{}; }, SupportWindow{0, -1}) {}
    explicit LatticeFunction(Rule rule, std::optional<SupportWindow> support = std::nullopt)
        : impl_(std::make_shared<Impl>(std::move(rule), support)) {}

    Complex operator()(long long n) const {
        const Impl& impl = *impl_;
        if (impl.support && !impl.support->contains(n)) return {};
        {
            std::lock_guard lock(impl.mutex);
            auto it = impl.cache.find(n);
            if (it != impl.cache.end()) return it->second;
        }
        // Evaluate unlocked: rules recurse into other functions.
        const Complex value = impl.rule(n);
        std::lock_guard lock(impl.mutex);
        impl.cache.emplace(n, value);
        return value;
    }

    const std::optional<SupportWindow>& support() const { return impl_->support; }

    /// Finitely supported function from values on [lo, lo + size).
    static LatticeFunction from_values(long long lo, std::vector<Complex> values) {
        const long long hi = lo + static_cast<long long>(values.size()) - 1;
        auto data = std::make_shared<const std::vector<Complex>>(std::move(values));
        return LatticeFunction(
            [data, lo](long long n) { return (*data)[static_cast<std::size_t>(n - lo)]; },
            SupportWindow{lo, hi});
    }

    static LatticeFunction indicator(long long at) { return from_values(at, {Complex{1.0, 0.0}}); }

    /// n -> exp(i xi n)
    static LatticeFunction plane_wave(double xi) {
        return LatticeFunction([xi](long long n) { return std::polar(1.0, xi * static_cast<double>(n)); });
    }

private:
    struct Impl {
        Impl(Rule r, std::optional<SupportWindow> s) : rule(std::move(r)), support(s) {}
        Rule rule;
        std::optional<SupportWindow> support;
        mutable std::mutex mutex;
        mutable std::unordered_map<long long, Complex> cache;
    };

    std::shared_ptr<Impl> impl_;
};

/// Random complex values, uniform in [-1, 1]^2, supported on [-radius, radius].
template <class Rng>
LatticeFunction random_finitely_supported(Rng& rng, long long radius) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Complex> values(static_cast<std::size_t>(2 * radius + 1));
    for (auto& v : values) {
        const double re = dist(rng);
        v = Complex{re, dist(rng)};
    }
    return LatticeFunction::from_values(-radius, std::move(values));
}

inline LatticeFunction operator+(const LatticeFunction& f, const LatticeFunction& g) {
    return LatticeFunction([f, g](long long n) { return f(n) + g(n); });
}
inline LatticeFunction operator-(const LatticeFunction& f, const LatticeFunction& g) {
    return LatticeFunction([f, g](long long n) { return f(n) - g(n); });
}
inline LatticeFunction operator*(Complex c, const LatticeFunction& f) {
    return LatticeFunction([c, f](long long n) { return c * f(n); });
}

/// max |f(n) - g(n)| over lo <= n <= hi.
inline double max_abs_difference(const LatticeFunction& f, const LatticeFunction& g, long long lo, long long hi) {
    double worst = 0.0;
    for (long long n = lo; n <= hi; ++n) worst = std::max(worst, std::abs(f(n) - g(n)));
    return worst;
}

/// max |f(n)| over lo <= n <= hi.
inline double max_abs(const LatticeFunction& f, long long lo, long long hi) {
    double worst = 0.0;
    for (long long n = lo; n <= hi; ++n) worst = std::max(worst, std::abs(f(n)));
    return worst;
}

}  // namespace hecke_dft
