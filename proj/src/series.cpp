#include "hpade/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hpade {

namespace {

constexpr long kUnbounded = std::numeric_limits<long>::max() / 4;

std::size_t trig_slot(long l, long K) { return static_cast<std::size_t>(l + K); }

long trig_degree(const TrigSeries& s) {
    long K = s.order();
    for (long l = K; l >= 0; --l) {
        if (!s.at(l).is_zero() || !s.at(-l).is_zero()) return l;
    }
    return -1;
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Rational> coeffs, bool terminating)
    : c_(std::move(coeffs)), terminating_(terminating) {
    if (c_.empty()) throw Error("power series needs at least one coefficient");
}

Lookup<Rational> PowerSeries::lookup(long p) const {
    if (p < 0) return {Rational(0), false};
    if (p > order()) return {Rational(0), !terminating_};
    return {c_[static_cast<std::size_t>(p)], false};
}

Rational PowerSeries::at(long p) const {
    auto r = lookup(p);
    if (r.beyond_truncation) throw InsufficientOrder(p, order());
    return r.value;
}

Poly<Rational> PowerSeries::partial_sum(long n) const {
    std::vector<Rational> c;
    for (long i = 0; i <= n; ++i) c.push_back(at(i));
    return Poly<Rational>(std::move(c));
}

PowerSeries PowerSeries::truncated(long K) const {
    std::vector<Rational> c;
    for (long i = 0; i <= K; ++i) c.push_back(at(i));
    return PowerSeries(std::move(c), false);
}

TrigSeries::TrigSeries(long K, bool terminating)
    : c_(static_cast<std::size_t>(2 * K + 1)), terminating_(terminating) {
    if (K < 0) throw Error("negative trigonometric series order");
}

TrigSeries::TrigSeries(std::vector<ComplexRational> coeffs, bool terminating)
    : c_(std::move(coeffs)), terminating_(terminating) {
    if (c_.size() % 2 == 0) throw Error("trigonometric coefficients must cover -K..K");
}

Lookup<ComplexRational> TrigSeries::lookup(long l) const {
    long K = order();
    if (l > K || l < -K) return {ComplexRational(), !terminating_};
    return {c_[trig_slot(l, K)], false};
}

ComplexRational TrigSeries::at(long l) const {
    auto r = lookup(l);
    if (r.beyond_truncation) throw InsufficientOrder(std::abs(l), order());
    return r.value;
}

void TrigSeries::set(long l, ComplexRational v) {
    long K = order();
    if (l > K || l < -K) throw InsufficientOrder(std::abs(l), K);
    c_[trig_slot(l, K)] = std::move(v);
}

bool TrigSeries::is_real() const {
    long K = order();
    for (long l = 0; l <= K; ++l) {
        if (!(at(-l) == at(l).conj())) return false;
    }
    return true;
}

bool TrigSeries::cosine_only() const {
    long K = order();
    for (long l = 0; l <= K; ++l) {
        if (!at(l).is_real() || !(at(-l) == at(l))) return false;
    }
    return true;
}

std::pair<std::vector<Rational>, std::vector<Rational>> TrigSeries::to_real() const {
    if (!is_real()) throw Error("series is not real");
    long K = order();
    std::vector<Rational> a(static_cast<std::size_t>(K + 1)), b(static_cast<std::size_t>(K + 1));
    a[0] = 2 * at(0).re();
    for (long l = 1; l <= K; ++l) {
        a[static_cast<std::size_t>(l)] = 2 * at(l).re();
        b[static_cast<std::size_t>(l)] = -2 * at(l).im();
    }
    return {a, b};
}

TrigSeries TrigSeries::truncated(long K) const {
    TrigSeries r(K, false);
    for (long l = -K; l <= K; ++l) r.set(l, at(l));
    return r;
}

ChebSeries::ChebSeries(std::vector<Rational> a, bool terminating)
    : a_(std::move(a)), terminating_(terminating) {
    if (a_.empty()) throw Error("Chebyshev series needs at least one coefficient");
}

Lookup<Rational> ChebSeries::lookup(long l) const {
    if (l < 0) l = -l;
    if (l > order()) return {Rational(0), !terminating_};
    return {a_[static_cast<std::size_t>(l)], false};
}

Rational ChebSeries::at(long l) const {
    auto r = lookup(l);
    if (r.beyond_truncation) throw InsufficientOrder(std::abs(l), order());
    return r.value;
}

LaurentPoly::LaurentPoly(long bound) : u_(static_cast<std::size_t>(2 * bound + 1)) {
    if (bound < 0) throw Error("negative Laurent bound");
}

LaurentPoly::LaurentPoly(std::vector<ComplexRational> coeffs) : u_(std::move(coeffs)) {
    if (u_.size() % 2 == 0) throw Error("Laurent coefficients must cover -m..m");
}

long LaurentPoly::degree() const {
    long m = bound();
    for (long p = m; p >= 0; --p) {
        if (!coeff(p).is_zero() || !coeff(-p).is_zero()) return p;
    }
    return -1;
}

ComplexRational LaurentPoly::coeff(long p) const {
    long m = bound();
    if (p > m || p < -m) return {};
    return u_[static_cast<std::size_t>(p + m)];
}

void LaurentPoly::set(long p, ComplexRational v) {
    long m = bound();
    if (p > m || p < -m) throw Error("Laurent index out of range");
    u_[static_cast<std::size_t>(p + m)] = std::move(v);
}

bool LaurentPoly::is_real() const {
    for (long p = 0; p <= bound(); ++p) {
        if (!(coeff(-p) == coeff(p).conj())) return false;
    }
    return true;
}

ComplexRational LaurentPoly::eval(const ComplexRational& z) const {
    if (z.is_zero()) throw DivisionByZero("Laurent polynomial evaluated at 0");
    long m = bound();
    ComplexRational acc;
    for (long p = m; p >= -m; --p) acc = acc * z + coeff(p);
    // acc = sum u_p z^{p+m}
    ComplexRational zinv = ComplexRational(1) / z;
    for (long i = 0; i < m; ++i) acc *= zinv;
    return acc;
}

ComplexFloat LaurentPoly::eval(double x) const {
    long m = bound();
    ComplexFloat acc = 0.0;
    for (long p = -m; p <= m; ++p) {
        const auto& c = coeff(p);
        if (c.is_zero()) continue;
        acc += to_complex_float(c) * std::polar(1.0, static_cast<double>(p) * x);
    }
    return acc;
}

TrigSeries LaurentPoly::as_series() const { return TrigSeries(u_, true); }

LaurentPoly& LaurentPoly::operator*=(const ComplexRational& s) {
    for (auto& c : u_) c *= s;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    long ma = a.bound(), mb = b.bound();
    LaurentPoly r(ma + mb);
    for (long p = -ma; p <= ma; ++p) {
        const auto& x = a.coeff(p);
        if (x.is_zero()) continue;
        for (long q = -mb; q <= mb; ++q) r.u_[static_cast<std::size_t>(p + q + ma + mb)] += x * b.coeff(q);
    }
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    long m = std::max(a.bound(), b.bound());
    for (long p = -m; p <= m; ++p) {
        if (!(a.coeff(p) == b.coeff(p))) return false;
    }
    return true;
}

TrigSeries trig_from_real(const std::vector<Rational>& a, const std::vector<Rational>& b,
                          bool terminating) {
    if (a.empty()) throw Error("trig_from_real: empty cosine coefficients");
    if (b.size() > a.size()) throw Error("trig_from_real: more sine than cosine coefficients");
    if (!b.empty() && b[0] != 0) throw Error("trig_from_real: b_0 must be zero");
    long K = static_cast<long>(a.size()) - 1;
    TrigSeries s(K, terminating);
    s.set(0, ComplexRational(a[0] / 2));
    for (long l = 1; l <= K; ++l) {
        Rational bl = static_cast<std::size_t>(l) < b.size() ? b[static_cast<std::size_t>(l)] : Rational(0);
        ComplexRational c(a[static_cast<std::size_t>(l)] / 2, -bl / 2);
        s.set(-l, c.conj());
        s.set(l, std::move(c));
    }
    return s;
}

TrigSeries cheb_to_cosine(const ChebSeries& f) {
    long K = f.order();
    TrigSeries s(K, f.terminating());
    for (long p = -K; p <= K; ++p) s.set(p, ComplexRational(f.at(p) / 2));
    return s;
}

PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g, long K) {
    long kf = f.terminating() ? kUnbounded : f.order();
    long kg = g.terminating() ? kUnbounded : g.order();
    long available = std::min(kf, kg);
    if (K > available) throw InsufficientOrder(K, available);
    std::vector<Rational> r(static_cast<std::size_t>(K + 1));
    for (long i = 0; i <= K; ++i) {
        Rational acc = 0;
        for (long s = 0; s <= i; ++s) {
            auto a = f.lookup(s);
            if (a.value == 0) continue;
            acc += a.value * g.lookup(i - s).value;
        }
        r[static_cast<std::size_t>(i)] = std::move(acc);
    }
    bool term = f.terminating() && g.terminating() && K >= f.order() + g.order();
    return PowerSeries(std::move(r), term);
}

TrigSeries series_mul(const TrigSeries& f, const TrigSeries& g, long K) {
    if (!f.terminating() && !g.terminating()) {
        throw InsufficientOrder(K, -1);
    }
    long available;
    if (f.terminating() && g.terminating()) {
        available = kUnbounded;
    } else if (f.terminating()) {
        available = g.order() - std::max(0L, trig_degree(f));
    } else {
        available = f.order() - std::max(0L, trig_degree(g));
    }
    if (K > available) throw InsufficientOrder(K, available);
    // Iterate over the terminating factor's band only.
    const TrigSeries& band = f.terminating() ? f : g;
    const TrigSeries& other = f.terminating() ? g : f;
    long M = band.order();
    TrigSeries r(K, false);
    for (long l = -K; l <= K; ++l) {
        ComplexRational acc;
        for (long p = -M; p <= M; ++p) {
            const auto& u = band.at(p);
            if (u.is_zero()) continue;
            acc += other.lookup(l - p).value * u;
        }
        r.set(l, std::move(acc));
    }
    if (f.terminating() && g.terminating() && K >= f.order() + g.order()) {
        return TrigSeries(r.coeffs(), true);
    }
    return r;
}

PowerSeries rational_expand(const Poly<Rational>& P, const Poly<Rational>& Q, long K) {
    if (Q.is_zero()) throw NotExpandable("zero denominator");
    Poly<Rational> g = gcd(P, Q);
    Poly<Rational> p = P.trimmed();
    Poly<Rational> q = Q.trimmed();
    if (g.degree() > 0) {
        p = divmod(p, g).first;
        q = divmod(q, g).first;
    }
    if (q.coeff(0) == 0) throw NotExpandable("reduced denominator vanishes at 0");
    Rational q0inv = Rational(1) / q.coeff(0);
    std::vector<Rational> r(static_cast<std::size_t>(K + 1));
    for (long i = 0; i <= K; ++i) {
        Rational acc = p.coeff(static_cast<std::size_t>(i));
        for (long s = 1; s <= i && s < static_cast<long>(q.size()); ++s) {
            acc -= q[static_cast<std::size_t>(s)] * r[static_cast<std::size_t>(i - s)];
        }
        r[static_cast<std::size_t>(i)] = acc * q0inv;
    }
    return PowerSeries(std::move(r), false);
}

}  // namespace hpade
