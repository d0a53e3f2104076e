#include "hpade/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hpade/errors.hpp"

namespace hpade {

SampledTrigCoeffs fourier_coeffs(const std::function<ComplexFloat(double)>& f, long max_l, long N) {
    if (max_l < 0) throw Error("fourier_coeffs: negative max_l");
    if (N <= 2 * max_l) {
        throw Error("fourier_coeffs: need more than " + std::to_string(2 * max_l) + " samples, got " +
                    std::to_string(N));
    }
    std::vector<ComplexFloat> values(static_cast<std::size_t>(N));
    const double h = 2.0 * std::numbers::pi / static_cast<double>(N);
    for (long j = 0; j < N; ++j) {
        double x = h * static_cast<double>(j);
        ComplexFloat v = f(x);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw EvaluationFailure("function not finite at x = " + std::to_string(x));
        }
        values[static_cast<std::size_t>(j)] = v;
    }
    SampledTrigCoeffs out;
    out.max_l = max_l;
    out.samples = N;
    out.c.resize(static_cast<std::size_t>(2 * max_l + 1));
    for (long l = -max_l; l <= max_l; ++l) {
        ComplexFloat acc = 0.0;
        for (long j = 0; j < N; ++j) {
            // Reduce l*j mod N first so the phase stays accurate for large N.
            long k = ((l * j) % N + N) % N;
            acc += values[static_cast<std::size_t>(j)] * std::polar(1.0, -h * static_cast<double>(k));
        }
        out.c[static_cast<std::size_t>(l + max_l)] = acc / static_cast<double>(N);
    }
    return out;
}

std::vector<double> cheb_coeffs(const std::function<double(double)>& f, long max_l, long N) {
    auto c = fourier_coeffs([&](double t) { return ComplexFloat(f(std::cos(t)), 0.0); }, max_l, N);
    std::vector<double> a(static_cast<std::size_t>(max_l + 1));
    for (long l = 0; l <= max_l; ++l) a[static_cast<std::size_t>(l)] = 2.0 * c[l].real();
    return a;
}

long default_quadrature_samples(long n, long m) { return std::max(64L, 8 * (n + m + 1)); }

}  // namespace hpade
