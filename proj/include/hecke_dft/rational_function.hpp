// rational_function.hpp - exact arithmetic in Q(tau)
//
// Polynomials in tau have arbitrary-precision integer coefficients. A rational
// function is kept in canonical form: coprime numerator and denominator, the
// integer contents of both sharing no common factor, and a positive leading
// coefficient in the denominator. Canonical form makes == a structural test.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hecke_dft {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial over Z, coefficients stored lowest degree first.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPolynomial(long long constant) {  // NOLINT: implicit from integer constants
        if (constant != 0) c_.emplace_back(constant);
    }

    /// c * tau^k
    static IntPolynomial monomial(const BigInt& c, int k) {
        std::vector<BigInt> v(static_cast<std::size_t>(k) + 1);
        v.back() = c;
        return IntPolynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& leading() const { return c_.back(); }
    const std::vector<BigInt>& coefficients() const { return c_; }
    BigInt coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : BigInt(0);
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    IntPolynomial operator-() const {
        IntPolynomial out = *this;
        for (auto& x : out.c_) x = -x;
        return out;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return IntPolynomial(std::move(v));
    }
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPolynomial(std::move(v));
    }

    IntPolynomial scaled(const BigInt& s) const {
        IntPolynomial out = *this;
        for (auto& x : out.c_) x *= s;
        out.trim();
        return out;
    }

    /// Divide every coefficient by s; s must divide all of them.
    IntPolynomial divided_exactly(const BigInt& s) const {
        IntPolynomial out = *this;
        for (auto& x : out.c_) x /= s;
        return out;
    }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
        return boost::multiprecision::abs(g);
    }

    IntPolynomial primitive_part() const {
        if (is_zero()) return {};
        IntPolynomial out = divided_exactly(content());
        if (out.leading() < 0) out = -out;
        return out;
    }

    /// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) a mod b.
    static IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
        if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
        const int db = b.degree();
        const BigInt& lb = b.leading();
        while (!a.is_zero() && a.degree() >= db) {
            const int shift = a.degree() - db;
            const BigInt la = a.leading();
            a = a.scaled(lb) - monomial(la, shift) * b;
        }
        return a;
    }

    /// Exact quotient a / b over Z[tau]; throws if b does not divide a.
    static IntPolynomial exact_quotient(IntPolynomial a, const IntPolynomial& b) {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        if (a.is_zero()) return {};
        std::vector<BigInt> q(static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)));
        while (!a.is_zero() && a.degree() >= b.degree()) {
            const int shift = a.degree() - b.degree();
            BigInt r;
            BigInt quot;
            boost::multiprecision::divide_qr(a.leading(), b.leading(), quot, r);
            if (r != 0) throw std::domain_error("inexact polynomial division");
            q[static_cast<std::size_t>(shift)] = quot;
            a = a - monomial(quot, shift) * b;
        }
        if (!a.is_zero()) throw std::domain_error("inexact polynomial division");
        return IntPolynomial(std::move(q));
    }

    /// Primitive gcd with positive leading coefficient (gcd(0, 0) = 0).
    static IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
        a = a.primitive_part();
        b = b.primitive_part();
        while (!b.is_zero()) {
            IntPolynomial r = pseudo_remainder(a, b).primitive_part();
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    double evaluate(double x) const {
        double acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<double>();
        return acc;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const BigInt& a = c_[static_cast<std::size_t>(k)];
            if (a == 0) continue;
            BigInt mag = boost::multiprecision::abs(a);
            if (!first) os << (a < 0 ? " - " : " + ");
            else if (a < 0) os << "-";
            first = false;
            if (mag != 1 || k == 0) os << mag;
            if (k >= 1) os << (mag != 1 ? "*t" : "t");
            if (k >= 2) os << "^" << k;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// Element of the field Q(tau) in canonical form.
class RationalFunctionTau {
public:
    RationalFunctionTau() : num_(0), den_(1) {}
    RationalFunctionTau(long long c) : num_(c), den_(1) {}  // NOLINT
    RationalFunctionTau(IntPolynomial num, IntPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        canonicalize();
    }

    static RationalFunctionTau tau() { return {IntPolynomial::monomial(1, 1), IntPolynomial(1)}; }
    /// tau^k for any integer k.
    static RationalFunctionTau tau_power(int k) {
        if (k >= 0) return {IntPolynomial::monomial(1, k), IntPolynomial(1)};
        return {IntPolynomial(1), IntPolynomial::monomial(1, -k)};
    }

    const IntPolynomial& numerator() const { return num_; }
    const IntPolynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const RationalFunctionTau&, const RationalFunctionTau&) = default;

    RationalFunctionTau operator-() const {
        RationalFunctionTau out = *this;
        out.num_ = -out.num_;
        return out;
    }

    friend RationalFunctionTau operator+(const RationalFunctionTau& a, const RationalFunctionTau& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunctionTau operator-(const RationalFunctionTau& a, const RationalFunctionTau& b) {
        return a + (-b);
    }
    friend RationalFunctionTau operator*(const RationalFunctionTau& a, const RationalFunctionTau& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunctionTau operator/(const RationalFunctionTau& a, const RationalFunctionTau& b) {
        return a * b.inverse();
    }

    RationalFunctionTau inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero rational function");
        return {den_, num_};
    }

    RationalFunctionTau& operator+=(const RationalFunctionTau& o) { return *this = *this + o; }
    RationalFunctionTau& operator-=(const RationalFunctionTau& o) { return *this = *this - o; }
    RationalFunctionTau& operator*=(const RationalFunctionTau& o) { return *this = *this * o; }

    double evaluate(double t) const { return num_.evaluate(t) / den_.evaluate(t); }

    std::string to_string() const {
        if (den_ == IntPolynomial(1)) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = IntPolynomial(1);
            return;
        }
        const IntPolynomial g = IntPolynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = IntPolynomial::exact_quotient(num_, g);
            den_ = IntPolynomial::exact_quotient(den_, g);
        }
        const BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
        if (c != 1) {
            num_ = num_.divided_exactly(c);
            den_ = den_.divided_exactly(c);
        }
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    IntPolynomial num_;
    IntPolynomial den_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalFunctionTau& r) { return os << r.to_string(); }

/// a(k) = ((1 - tau^2)/(1 + tau^2)) (tau^-k + (-1)^(k+1) tau^k), k >= 0.
inline RationalFunctionTau a_coeff(int k) {
    if (k < 0) throw std::invalid_argument("a_coeff requires k >= 0");
    const IntPolynomial one_minus_t2({1, 0, -1});
    const IntPolynomial one_plus_t2({1, 0, 1});
    // tau^-k + (-1)^(k+1) tau^k = (1 + (-1)^(k+1) tau^(2k)) / tau^k
    const IntPolynomial bracket = IntPolynomial(1) + IntPolynomial::monomial(k % 2 == 0 ? -1 : 1, 2 * k);
    return {one_minus_t2 * bracket, one_plus_t2 * IntPolynomial::monomial(1, k)};
}

}  // namespace hecke_dft
