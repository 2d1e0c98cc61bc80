// weyl.hpp - extended affine Weyl group of type A1
//
// W = <s, u | s^2 = u^2 = 1> = Omega x| W_S, where Omega = {1, u} and
// W_S = <s0, s1> is the infinite dihedral group with s1 = s, s0 = usu.
// Every element is u^r s_{i1} ... s_{ip} with an alternating word, so it is
// pinned down by (r, p, last letter).

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hecke_dft {

/// Lattice size M (> 1) and Hecke parameter tau in (0, 1).
class LatticeConfig {
public:
    LatticeConfig(int M, double tau) : M_(M), tau_(tau) {
        if (M < 2) {
            throw std::invalid_argument("lattice size M must satisfy M > 1 (got " +
                                        std::to_string(M) + ")");
        }
        if (!(tau > 0.0 && tau < 1.0)) {
            throw std::invalid_argument("tau must lie in the open interval (0, 1) (got " +
                                        std::to_string(tau) + ")");
        }
    }

    int M() const { return M_; }
    double tau() const { return tau_; }

private:
    int M_;
    double tau_;
};

class WeylElement {
public:
    /// Identity.
    constexpr WeylElement() = default;

    /// u^r times the alternating word of length p ending in `last`.
    /// `last` is ignored when p == 0.
    constexpr WeylElement(int u_exponent, int length, int last)
        : u_(u_exponent & 1), p_(length), last_(length == 0 ? 0 : (last & 1)) {
        if (length < 0) throw std::invalid_argument("negative word length");
    }

    static constexpr WeylElement identity() { return {}; }
    static constexpr WeylElement u() { return {1, 0, 0}; }
    static constexpr WeylElement s0() { return {0, 1, 0}; }
    static constexpr WeylElement s1() { return {0, 1, 1}; }
    static constexpr WeylElement s() { return s1(); }

    /// Build from u-exponent and an arbitrary (not necessarily reduced) word.
    static WeylElement from_word(int u_exponent, const std::vector<int>& letters);

    constexpr int u_exponent() const { return u_; }
    constexpr int length() const { return p_; }
    constexpr std::optional<int> last_generator() const {
        if (p_ == 0) return std::nullopt;
        return last_;
    }
    constexpr bool in_dihedral() const { return u_ == 0; }

    /// i-th letter (1-based) of the reduced word.
    constexpr int letter(int i) const { return ((p_ - i) % 2 == 0) ? last_ : 1 - last_; }
    constexpr int first_generator() const { return letter(1); }

    /// (u-exponent, alternating generator sequence).
    std::pair<int, std::vector<int>> reduced_word() const {
        std::vector<int> word;
        word.reserve(static_cast<std::size_t>(p_));
        for (int i = 1; i <= p_; ++i) word.push_back(letter(i));
        return {u_, word};
    }

    WeylElement inverse() const;

    /// Image of n under the action s n = -n, u n = M - n (s0 n = 2M - n).
    long long act(long long n, int M) const {
        for (int i = p_; i >= 1; --i) {
            n = letter(i) == 1 ? -n : 2LL * M - n;
        }
        if (u_ == 1) n = M - n;
        return n;
    }

    constexpr auto operator<=>(const WeylElement&) const = default;

    std::string to_string() const {
        if (u_ == 0 && p_ == 0) return "1";
        std::string out = u_ ? "u" : "";
        for (int i = 1; i <= p_; ++i) out += letter(i) == 0 ? "s0" : "s1";
        return out;
    }

private:
    int u_ = 0;
    int p_ = 0;
    int last_ = 0;
};

namespace detail {

// Product of two dihedral words given as (length, last letter). Adjacent equal
// letters cancel; for alternating words that cancellation runs min(p, q) deep.
inline WeylElement dihedral_product(const WeylElement& a, const WeylElement& b) {
    const int p = a.length();
    const int q = b.length();
    if (p == 0) return b;
    if (q == 0) return a;
    const int a_last = a.letter(p);
    const int b_first = b.letter(1);
    if (a_last != b_first) return {0, p + q, b.letter(q)};
    if (p > q) return {0, p - q, a.letter(p - q)};
    if (q > p) return {0, q - p, b.letter(q)};
    return {};
}

// u w u for w in W_S: swaps s0 and s1.
inline WeylElement conjugate_by_u(const WeylElement& w) {
    if (w.length() == 0) return w;
    return {w.u_exponent(), w.length(), 1 - w.letter(w.length())};
}

}  // namespace detail

inline WeylElement multiply(const WeylElement& w, const WeylElement& v) {
    // u^a x * u^b y = u^(a+b) (u^b x u^b) y
    WeylElement x{0, w.length(), w.length() ? w.letter(w.length()) : 0};
    WeylElement y{0, v.length(), v.length() ? v.letter(v.length()) : 0};
    if (v.u_exponent() == 1) x = detail::conjugate_by_u(x);
    const WeylElement xy = detail::dihedral_product(x, y);
    return {w.u_exponent() ^ v.u_exponent(), xy.length(),
            xy.length() ? xy.letter(xy.length()) : 0};
}

inline WeylElement operator*(const WeylElement& w, const WeylElement& v) { return multiply(w, v); }

inline WeylElement WeylElement::from_word(int u_exponent, const std::vector<int>& letters) {
    WeylElement out{u_exponent, 0, 0};
    for (int g : letters) {
        if (g != 0 && g != 1) throw std::invalid_argument("generator index must be 0 or 1");
        out = out * WeylElement{0, 1, g};
    }
    return out;
}

inline WeylElement WeylElement::inverse() const {
    // (u^r x)^{-1} = x^{-1} u^r; x^{-1} reverses the word.
    const WeylElement x_inv{0, p_, p_ ? letter(1) : 0};
    return x_inv * WeylElement{u_, 0, 0};
}

inline int length(const WeylElement& w) { return w.length(); }

/// l(ws) - l(w); -1 exactly when the reduced word ends in s1.
inline int eta(const WeylElement& w) {
    return (w.length() > 0 && w.letter(w.length()) == 1) ? -1 : 1;
}

/// v < w iff v^{-1} w lies in W_S and l(v) < l(w).
inline bool bruhat_less(const WeylElement& v, const WeylElement& w) {
    return v.u_exponent() == w.u_exponent() && v.length() < w.length();
}

/// All v < w, sorted by (length, last generator).
inline std::vector<WeylElement> enumerate_strictly_less(const WeylElement& w) {
    std::vector<WeylElement> out;
    const int r = w.u_exponent();
    if (w.length() == 0) return out;
    out.emplace_back(r, 0, 0);
    for (int len = 1; len < w.length(); ++len) {
        out.emplace_back(r, len, 0);
        out.emplace_back(r, len, 1);
    }
    return out;
}

/// Every element of W with u-exponent r and length <= max_length.
inline std::vector<WeylElement> enumerate_up_to_length(int r, int max_length) {
    std::vector<WeylElement> out{WeylElement{r, 0, 0}};
    for (int len = 1; len <= max_length; ++len) {
        out.emplace_back(r, len, 0);
        out.emplace_back(r, len, 1);
    }
    return out;
}

/// Shortest w in W_S with w n in {0, ..., M}.
inline WeylElement chamber_map(long long n, int M) {
    if (n >= 0 && n <= M) return {};
    if (n > M) {
        const long long p = (n - 1) / M;
        return {0, static_cast<int>(p), 0};
    }
    const long long p = (-n + M - 1) / M;
    return {0, static_cast<int>(p), 1};
}

inline WeylElement chamber_map(long long n, const LatticeConfig& cfg) { return chamber_map(n, cfg.M()); }

/// n_+ = w_n n.
inline long long fold_to_alcove(long long n, int M) { return chamber_map(n, M).act(n, M); }

inline long long act(const WeylElement& w, long long n, const LatticeConfig& cfg) {
    return w.act(n, cfg.M());
}

inline int sign(long long n) { return (n > 0) - (n < 0); }

}  // namespace hecke_dft
