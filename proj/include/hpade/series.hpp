#pragma once

// Truncated series of the three kinds used by the solvers: power series,
// trigonometric series in complex form, and Chebyshev series.
//
// Every series carries the order K it is known to. A series flagged as
// terminating is exact: its coefficients beyond K are zero rather than unknown.

#include <utility>
#include <vector>

#include "hpade/errors.hpp"
#include "hpade/polynomial.hpp"
#include "hpade/scalar.hpp"

namespace hpade {

template <class T>
struct Lookup {
    T value;
    bool beyond_truncation = false;
};

class PowerSeries {
public:
    PowerSeries() = default;
    /// Coefficients f_0..f_K; the order is coeffs.size() - 1.
    explicit PowerSeries(std::vector<Rational> coeffs, bool terminating = false);

    long order() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool terminating() const noexcept { return terminating_; }
    /// Highest index whose value is known; effectively unbounded when terminating.
    bool known(long p) const noexcept { return terminating_ || p <= order(); }

    Lookup<Rational> lookup(long p) const;
    /// f_p, with f_p = 0 for p < 0. Throws InsufficientOrder past the truncation.
    Rational at(long p) const;

    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    /// Sum of f_0..f_n z^n.
    Poly<Rational> partial_sum(long n) const;
    PowerSeries truncated(long K) const;

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> c_;
    bool terminating_ = false;
};

/// Sum of c_l e^{ilx} for |l| <= K.
class TrigSeries {
public:
    TrigSeries() = default;
    /// Zero series of order K.
    explicit TrigSeries(long K, bool terminating = false);
    /// Coefficients c_{-K}..c_K, so coeffs.size() must be odd.
    TrigSeries(std::vector<ComplexRational> coeffs, bool terminating);

    long order() const noexcept { return (static_cast<long>(c_.size()) - 1) / 2; }
    bool terminating() const noexcept { return terminating_; }
    bool known(long l) const noexcept { return terminating_ || (l <= order() && -l <= order()); }

    Lookup<ComplexRational> lookup(long l) const;
    ComplexRational at(long l) const;
    void set(long l, ComplexRational v);

    /// c_{-l} = conj(c_l) for every stored l.
    bool is_real() const;
    /// Real and c_{-l} = c_l, i.e. a pure cosine series.
    bool cosine_only() const;

    /// Real form a_0..a_K, b_0..b_K with f = a_0/2 + sum a_l cos lx + b_l sin lx.
    /// Requires is_real().
    std::pair<std::vector<Rational>, std::vector<Rational>> to_real() const;

    const std::vector<ComplexRational>& coeffs() const noexcept { return c_; }
    TrigSeries truncated(long K) const;

    friend bool operator==(const TrigSeries&, const TrigSeries&) = default;

private:
    std::vector<ComplexRational> c_{ComplexRational()};
    bool terminating_ = false;
};

/// a_0/2 + sum a_l T_l(x).
class ChebSeries {
public:
    ChebSeries() = default;
    explicit ChebSeries(std::vector<Rational> a, bool terminating = false);

    long order() const noexcept { return static_cast<long>(a_.size()) - 1; }
    bool terminating() const noexcept { return terminating_; }
    Lookup<Rational> lookup(long l) const;
    Rational at(long l) const;
    const std::vector<Rational>& coeffs() const noexcept { return a_; }

private:
    std::vector<Rational> a_;
    bool terminating_ = false;
};

/// Trigonometric polynomial sum u_p e^{ipx}, |p| <= bound.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(long bound);
    /// Coefficients u_{-bound}..u_bound.
    explicit LaurentPoly(std::vector<ComplexRational> coeffs);

    long bound() const noexcept { return (static_cast<long>(u_.size()) - 1) / 2; }
    /// max |p| with u_p != 0, or -1 for the zero polynomial.
    long degree() const;
    bool is_zero() const { return degree() < 0; }

    ComplexRational coeff(long p) const;
    void set(long p, ComplexRational v);
    const std::vector<ComplexRational>& coeffs() const noexcept { return u_; }

    bool is_real() const;

    /// sum u_p z^p at a nonzero exact point (z = e^{ix} for the trig value).
    ComplexRational eval(const ComplexRational& z) const;
    /// Value at real x.
    ComplexFloat eval(double x) const;

    /// As a terminating TrigSeries of order bound().
    TrigSeries as_series() const;

    LaurentPoly& operator*=(const ComplexRational& s);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

private:
    std::vector<ComplexRational> u_{ComplexRational()};
};

/// Complex form of a real series: c_0 = a_0/2, c_l = (a_l - i b_l)/2.
/// b may be shorter than a (missing entries are zero); b_0 must be zero.
TrigSeries trig_from_real(const std::vector<Rational>& a, const std::vector<Rational>& b,
                          bool terminating = false);

/// f(cos x) as a cosine series: c_p = a_{|p|}/2.
TrigSeries cheb_to_cosine(const ChebSeries& f);

/// Product truncated at K. Throws InsufficientOrder when K exceeds what the
/// operands determine.
PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g, long K);

/// Two-sided convolution truncated to |l| <= K. An infinite convolution is not
/// computable exactly, so at least one factor must be terminating; with a
/// terminating factor of degree M the result is known to order K_other - M.
TrigSeries series_mul(const TrigSeries& f, const TrigSeries& g, long K);

/// Taylor coefficients of P/Q through order K after cancelling gcd(P, Q).
/// Throws NotExpandable when the reduced denominator vanishes at 0.
PowerSeries rational_expand(const Poly<Rational>& P, const Poly<Rational>& Q, long K);

}  // namespace hpade
