#pragma once

// Exact scalars: arbitrary-precision rationals and complex rationals, plus a
// floating complex type used only for pointwise evaluation and quadrature.

#include <cmath>
#include <complex>
#include <concepts>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include <boost/multiprecision/gmp.hpp>

#include "hpade/errors.hpp"

namespace hpade {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using ComplexFloat = std::complex<double>;

/// Default absolute/relative threshold for floating comparisons.
inline constexpr double kDefaultEps = 1e-10;

class ComplexRational {
public:
    ComplexRational() = default;
    ComplexRational(int re) : re_(re) {}
    ComplexRational(Rational re) : re_(std::move(re)) {}
    ComplexRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static ComplexRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    ComplexRational conj() const { return {re_, -im_}; }
    /// |z|^2
    Rational norm() const { return re_ * re_ + im_ * im_; }

    ComplexRational& operator+=(const ComplexRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ComplexRational& operator-=(const ComplexRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ComplexRational& operator*=(const ComplexRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    ComplexRational& operator/=(const ComplexRational& o) {
        if (o.is_zero()) throw DivisionByZero("complex rational division by zero");
        if (o.im_ == 0) {
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        Rational d = o.norm();
        Rational r = (re_ * o.re_ + im_ * o.im_) / d;
        im_ = (im_ * o.re_ - re_ * o.im_) / d;
        re_ = std::move(r);
        return *this;
    }

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
    friend ComplexRational operator-(const ComplexRational& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline ComplexRational conj(const ComplexRational& z) { return z.conj(); }

/// Parses "p/q", an integer, or a decimal such as "-1.25e-3" into an exact,
/// reduced rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Inverse of to_string(ComplexRational): "re", "imi", "re+imi", "i", "-i".
ComplexRational parse_complex_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);
/// "re" when real, otherwise "re+imi" / "re-imi".
std::string to_string(const ComplexRational& z);

double to_double(const Rational& x);
ComplexFloat to_complex_float(const ComplexRational& z);

/// x^e for integer e; throws DivisionByZero for 0^e with e < 0.
Rational pow(const Rational& x, int e);

/// Rising factorial (gamma)_p = gamma (gamma+1) ... (gamma+p-1), with (gamma)_0 = 1.
Rational pochhammer(const Rational& gamma, unsigned p);

/// Gamma(n+gamma) / Gamma(n+m+gamma) = 1 / prod_{i<m} (n+gamma+i).
/// Throws DivisionByZero when one of the factors vanishes.
Rational gamma_ratio(const Rational& gamma, unsigned n, unsigned m);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& x) { return x == 0; }
    static double magnitude(const Rational& x) { return std::abs(to_double(x)); }
};

template <>
struct ScalarTraits<ComplexRational> {
    static constexpr bool exact = true;
    static bool is_zero(const ComplexRational& x) { return x.is_zero(); }
    static double magnitude(const ComplexRational& x) {
        return std::abs(to_complex_float(x));
    }
};

template <>
struct ScalarTraits<ComplexFloat> {
    static constexpr bool exact = false;
    static bool is_zero(const ComplexFloat& x) { return x == ComplexFloat(0.0); }
    static double magnitude(const ComplexFloat& x) { return std::abs(x); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static bool is_zero(double x) { return x == 0.0; }
    static double magnitude(double x) { return std::abs(x); }
};

template <class T>
concept ExactScalar = ScalarTraits<T>::exact;

/// Converts between the scalar types where the conversion is lossless or,
/// for the floating targets, rounds.
template <class To, class From>
To scalar_cast(const From& x) {
    if constexpr (std::is_same_v<To, From>) {
        return x;
    } else if constexpr (std::is_same_v<To, ComplexRational>) {
        return ComplexRational(Rational(x));
    } else if constexpr (std::is_same_v<To, ComplexFloat> && std::is_same_v<From, Rational>) {
        return ComplexFloat(to_double(x), 0.0);
    } else if constexpr (std::is_same_v<To, ComplexFloat> &&
                         std::is_same_v<From, ComplexRational>) {
        return to_complex_float(x);
    } else if constexpr (std::is_same_v<To, double> && std::is_same_v<From, Rational>) {
        return to_double(x);
    } else {
        return To(x);
    }
}

}  // namespace hpade
