#pragma once

// Trapezoid-rule coefficient extraction on a uniform periodic grid.

#include <functional>
#include <vector>

#include "hpade/scalar.hpp"

namespace hpade {

/// Floating coefficients c_{-L}..c_L sampled from a function.
struct SampledTrigCoeffs {
    long max_l = 0;
    long samples = 0;
    std::vector<ComplexFloat> c;

    ComplexFloat operator[](long l) const { return c[static_cast<std::size_t>(l + max_l)]; }
};

/// c_l = (1/N) sum_j f(x_j) e^{-i l x_j}, x_j = 2 pi j / N, for |l| <= max_l.
/// Requires N > 2 max_l so that no two requested harmonics alias. Throws
/// EvaluationFailure when f is not finite at a node.
SampledTrigCoeffs fourier_coeffs(const std::function<ComplexFloat(double)>& f, long max_l, long N);

/// Chebyshev coefficients a_0..a_L of f on [-1, 1], constant term a_0/2,
/// obtained as a_l = 2 c_l of f(cos t).
std::vector<double> cheb_coeffs(const std::function<double(double)>& f, long max_l, long N);

/// max(64, 8 (n + m + 1)).
long default_quadrature_samples(long n, long m);

}  // namespace hpade
