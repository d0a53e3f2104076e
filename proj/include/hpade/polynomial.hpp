#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "hpade/errors.hpp"
#include "hpade/scalar.hpp"

namespace hpade {

/// Dense univariate polynomial, coefficients stored from the constant term up.
/// Trailing zero coefficients are allowed; they carry the degree bound of the
/// problem the polynomial came from and are ignored by comparisons.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) {}
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) {}

    /// Actual degree; -1 for the zero polynomial.
    int degree() const {
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (!ScalarTraits<T>::is_zero(c_[i])) return static_cast<int>(i);
        }
        return -1;
    }
    bool is_zero() const { return degree() < 0; }

    std::size_t size() const noexcept { return c_.size(); }
    std::span<const T> coeffs() const noexcept { return c_; }
    std::vector<T>& data() noexcept { return c_; }

    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& operator[](std::size_t i) const { return c_[i]; }
    T& operator[](std::size_t i) { return c_[i]; }

    void trim() { c_.resize(static_cast<std::size_t>(degree() + 1)); }
    Poly trimmed() const {
        Poly r = *this;
        r.trim();
        return r;
    }

    /// Horner evaluation in the (possibly wider) scalar type U.
    template <class U = T>
    U operator()(const U& x) const {
        U acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + scalar_cast<U>(c_[i]);
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Poly& operator*=(const T& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (ScalarTraits<T>::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (!(a.coeff(i) == b.coeff(i))) return false;
        }
        return true;
    }

private:
    std::vector<T> c_;
};

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
    int db = b.degree();
    if (db < 0) throw DivisionByZero("polynomial division by zero");
    std::vector<T> r(a.coeffs().begin(), a.coeffs().end());
    int da = a.degree();
    if (da < db) return {Poly<T>(), a.trimmed()};
    std::vector<T> q(static_cast<std::size_t>(da - db + 1), T(0));
    const T& lead = b[static_cast<std::size_t>(db)];
    for (int i = da; i >= db; --i) {
        T coef = r[static_cast<std::size_t>(i)] / lead;
        q[static_cast<std::size_t>(i - db)] = coef;
        if (ScalarTraits<T>::is_zero(coef)) continue;
        for (int j = 0; j <= db; ++j) {
            r[static_cast<std::size_t>(i - db + j)] -= coef * b[static_cast<std::size_t>(j)];
        }
    }
    r.resize(static_cast<std::size_t>(db));
    Poly<T> rem(std::move(r));
    rem.trim();
    return {Poly<T>(std::move(q)), rem};
}

/// Clears denominators and divides out the integer content; the leading
/// coefficient of the result is positive. Zero maps to zero.
Poly<Rational> primitive_part(const Poly<Rational>& p);

/// Monic gcd over the rationals (Euclid on primitive remainders). gcd(0, 0) = 0.
Poly<Rational> gcd(const Poly<Rational>& a, const Poly<Rational>& b);

}  // namespace hpade
