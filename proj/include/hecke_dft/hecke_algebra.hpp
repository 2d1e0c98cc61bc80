// hecke_algebra.hpp - the A1 double affine Hecke algebra at q = 1
//
// Generators T, U, X with
//   (T - tau)(T + 1/tau) = 0,  U^2 = 1,  U X U = X^-1 = T^-1 X T^-1.
// Elements are stored in the PBW-type basis T_w X^k (w in W, k in Z) with
// coefficients in Q(tau). Right multiplication by a generator is the only
// primitive; general products fold it over the letters of the right factor.

#pragma once

#include "hecke_dft/rational_function.hpp"
#include "hecke_dft/weyl.hpp"

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hecke_dft {

/// Index of a basis monomial T_w X^k.
struct BasisKey {
    WeylElement w;
    int k = 0;
    auto operator<=>(const BasisKey&) const = default;
};

class AlgebraElement {
public:
    using Terms = std::map<BasisKey, RationalFunctionTau>;

    AlgebraElement() = default;

    static AlgebraElement basis_monomial(const WeylElement& w, int k) {
        AlgebraElement e;
        e.terms_.emplace(BasisKey{w, k}, RationalFunctionTau(1));
        return e;
    }
    static AlgebraElement one() { return basis_monomial(WeylElement::identity(), 0); }
    static AlgebraElement scalar(const RationalFunctionTau& c) {
        AlgebraElement e;
        e.add_term({WeylElement::identity(), 0}, c);
        return e;
    }
    static AlgebraElement T() { return basis_monomial(WeylElement::s1(), 0); }
    static AlgebraElement U() { return basis_monomial(WeylElement::u(), 0); }
    static AlgebraElement X(int power = 1) { return basis_monomial(WeylElement::identity(), power); }
    /// T_w alone (k = 0).
    static AlgebraElement T_w(const WeylElement& w) { return basis_monomial(w, 0); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    RationalFunctionTau coefficient(const BasisKey& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? RationalFunctionTau() : it->second;
    }

    void add_term(const BasisKey& key, const RationalFunctionTau& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (const auto& [key, c] : o.terms_) add_term(key, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        for (const auto& [key, c] : o.terms_) add_term(key, -c);
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

    AlgebraElement scaled(const RationalFunctionTau& s) const {
        AlgebraElement out;
        if (s.is_zero()) return out;
        for (const auto& [key, c] : terms_) out.terms_.emplace(key, c * s);
        return out;
    }
    friend AlgebraElement operator*(const RationalFunctionTau& s, const AlgebraElement& e) { return e.scaled(s); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [key, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "[" << c.to_string() << "] T_" << key.w.to_string();
            if (key.k != 0) os << " X^" << key.k;
        }
        return os.str();
    }

private:
    Terms terms_;
};

namespace detail {

inline RationalFunctionTau tau_minus_inverse() {
    return RationalFunctionTau::tau() - RationalFunctionTau::tau_power(-1);
}

// (X^k - X^-k)/(1 - X^-2) = sign(k) sum_{j=0}^{|k|-1} X^{|k|-2j}, as exponents with signs.
inline std::vector<std::pair<int, int>> lusztig_quotient(int k) {
    std::vector<std::pair<int, int>> out;
    const int a = k < 0 ? -k : k;
    for (int j = 0; j < a; ++j) out.emplace_back(a - 2 * j, sign(k));
    return out;
}

}  // namespace detail

/// e * X^power for power = +1 or -1.
inline AlgebraElement mul_right_X(const AlgebraElement& e, int power) {
    if (power != 1 && power != -1) throw std::invalid_argument("mul_right_X expects power +1 or -1");
    AlgebraElement out;
    for (const auto& [key, c] : e.terms()) out.add_term({key.w, key.k + power}, c);
    return out;
}

/// e * U, using X^k U = U X^-k and T_w U = T_{wu}.
inline AlgebraElement mul_right_U(const AlgebraElement& e) {
    AlgebraElement out;
    for (const auto& [key, c] : e.terms()) out.add_term({key.w * WeylElement::u(), -key.k}, c);
    return out;
}

/// e * T. Each term T_w X^k becomes T_w (T X^-k + (tau - 1/tau) (X^k - X^-k)/(1 - X^-2)),
/// the rearranged form of T X^k = X^-k T + (tau - 1/tau)(X^k - X^-k)/(1 - X^-2);
/// then T_w T = T_{ws} + (1 - eta(w))/2 (tau - 1/tau) T_w.
inline AlgebraElement mul_right_T(const AlgebraElement& e) {
    const RationalFunctionTau d = detail::tau_minus_inverse();
    AlgebraElement out;
    for (const auto& [key, c] : e.terms()) {
        const WeylElement& w = key.w;
        out.add_term({w * WeylElement::s(), -key.k}, c);
        if (eta(w) == -1) out.add_term({w, -key.k}, c * d);
        for (auto [exp, sgn] : detail::lusztig_quotient(key.k)) {
            out.add_term({w, exp}, sgn > 0 ? c * d : -(c * d));
        }
    }
    return out;
}

/// U * e: U T_w = T_{uw}.
inline AlgebraElement mul_left_U(const AlgebraElement& e) {
    AlgebraElement out;
    for (const auto& [key, c] : e.terms()) out.add_term({WeylElement::u() * key.w, key.k}, c);
    return out;
}

/// T * e via T T_w = T_{sw} + (1 - eta(w^-1))/2 (tau - 1/tau) T_w.
inline AlgebraElement mul_left_T(const AlgebraElement& e) {
    const RationalFunctionTau d = detail::tau_minus_inverse();
    AlgebraElement out;
    for (const auto& [key, c] : e.terms()) {
        out.add_term({WeylElement::s() * key.w, key.k}, c);
        if (eta(key.w.inverse()) == -1) out.add_term({key.w, key.k}, c * d);
    }
    return out;
}

namespace detail {

// Letters of a generator word: 'U', 'T', 'X' (power +1), 'Y' (power -1).
inline std::vector<char> generator_letters(const BasisKey& key) {
    std::vector<char> letters;
    if (key.w.u_exponent() == 1) letters.push_back('U');
    for (int i = 1; i <= key.w.length(); ++i) {
        if (key.w.letter(i) == 1) {
            letters.push_back('T');
        } else {  // T_0 = U T U
            letters.insert(letters.end(), {'U', 'T', 'U'});
        }
    }
    for (int j = 0; j < (key.k < 0 ? -key.k : key.k); ++j) letters.push_back(key.k > 0 ? 'X' : 'Y');
    return letters;
}

inline AlgebraElement apply_letter(const AlgebraElement& e, char letter) {
    switch (letter) {
        case 'U': return mul_right_U(e);
        case 'T': return mul_right_T(e);
        case 'X': return mul_right_X(e, 1);
        default: return mul_right_X(e, -1);
    }
}

}  // namespace detail

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [key, c] : b.terms()) {
        AlgebraElement acc = a;
        for (char letter : detail::generator_letters(key)) acc = detail::apply_letter(acc, letter);
        out += acc.scaled(c);
    }
    return out;
}

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

/// X^power * e.
inline AlgebraElement mul_left_X(const AlgebraElement& e, int power) {
    if (power != 1 && power != -1) throw std::invalid_argument("mul_left_X expects power +1 or -1");
    return multiply(AlgebraElement::X(power), e);
}

/// T^-1 = T - (tau - 1/tau).
inline AlgebraElement T_inverse() {
    return AlgebraElement::T() - AlgebraElement::scalar(detail::tau_minus_inverse());
}

/// Right-hand side of the X-commutation formula for T_w X^eps:
///   X^{eps (-1)^{l(w)+r}} T_w + eps eta(w) X^{eta(w) (-1)^{l(w)+r}} sum_{v<w} a(l(w)-l(v)) T_v.
inline AlgebraElement x_commutation_rhs(const WeylElement& w, int epsilon) {
    const int r = w.u_exponent();
    const int parity = ((w.length() + r) % 2 == 0) ? 1 : -1;
    const int et = eta(w);
    AlgebraElement sum;
    for (const WeylElement& v : enumerate_strictly_less(w)) {
        sum.add_term({v, 0}, a_coeff(w.length() - v.length()));
    }
    AlgebraElement rhs = multiply(AlgebraElement::X(epsilon * parity), AlgebraElement::T_w(w));
    rhs += multiply(AlgebraElement::X(et * parity), sum).scaled(RationalFunctionTau(epsilon * et));
    return rhs;
}

/// Exact check of T_w X^eps against the commutation formula.
inline bool verify_x_commutation(const WeylElement& w, int epsilon) {
    return AlgebraElement::basis_monomial(w, epsilon) == x_commutation_rhs(w, epsilon);
}

}  // namespace hecke_dft
