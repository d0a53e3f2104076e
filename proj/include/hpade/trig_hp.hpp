#pragma once

// Problem A^t for systems of real trigonometric series: a trig polynomial Q of
// degree <= m and numerators P_j of degree <= n_j such that the coefficients of
// Q f_j - P_j vanish for |l| <= n_j and for n_j+1 <= |l| <= n_j+m_j.

#include <string>
#include <vector>

#include "hpade/hj_report.hpp"
#include "hpade/linalg.hpp"
#include "hpade/multi_index.hpp"
#include "hpade/series.hpp"

namespace hpade {

struct TrigSystem {
    std::vector<TrigSeries> series;

    std::size_t k() const noexcept { return series.size(); }
};

struct HtRowLabel {
    std::size_t component = 0;  // 0-based j
    long l = 0;
};

/// The 2m x (2m+1) coefficient matrix; column t multiplies u_{t-m}.
struct HtMatrix {
    Matrix<ComplexRational> matrix;
    std::vector<HtRowLabel> rows;
};

/// Rows (c_{l+m}, ..., c_{l-m}) for l = n_j+m_j..n_j+1 (blocks j = k..1), then
/// l = -n_j-1..-n_j-m_j (blocks j = 1..k). Needs every series known to n+2m.
HtMatrix build_Ht(const TrigSystem& S, const MultiIndex& idx);

/// rank H^t = 2m.
bool weak_normality(const TrigSystem& S, const MultiIndex& idx);

struct TrigApproximant {
    LaurentPoly Q;
    std::vector<LaurentPoly> P;
    /// Coefficients of Q f_j - P_j over the range where they are known; zero for |l| <= n_j.
    std::vector<TrigSeries> residual;
};

/// Numerators and residuals for a given denominator coefficient vector u_{-m}..u_m.
TrigApproximant trig_numerators_for(const LaurentPoly& Q, const TrigSystem& S, const MultiIndex& idx);

struct TrigHPSolution {
    TrigApproximant approx;
    bool unique = false;
    long rank = 0;
    /// Kernel basis of H^t. With nullity 1 the single vector has its first
    /// nonzero entry equal to 1. Otherwise the coordinates u_0, u_{-1}, u_1,
    /// u_{-2}, ... are eliminated in that order and each vector sets one of
    /// the remaining free coordinates to 1 and the others to 0.
    std::vector<std::vector<ComplexRational>> basis;
    /// The p of u_p for each free coordinate, in basis order.
    std::vector<long> parameters;
};

TrigHPSolution solve_problem_At(const TrigSystem& S, const MultiIndex& idx);

struct DeterminantSolution {
    TrigApproximant approx;
    /// Not weakly normal: every maximal minor vanishes and Q is identically zero.
    bool degenerate = false;
};

/// u_p = (-1)^p det(H^t without column p+m), the coefficients of the expansion
/// of D(n,m;x) along its E row; d^j_l = D with the E row replaced by the row
/// for l.
DeterminantSolution determinant_formulas(const TrigSystem& S, const MultiIndex& idx);

/// Laurent polynomial from a kernel vector u_{-m}..u_m.
LaurentPoly laurent_from_vector(const std::vector<ComplexRational>& u);

struct TrigHJOptions {
    double tol = 1e-9;
    long grid = 4096;
    double vanish_threshold = 1e-8;
    /// 0 selects the default sample count, doubled until the coefficients settle.
    long samples = 0;
};

/// Fourier coefficients of P_j/Q against f_j for |l| <= n+m. Throws
/// DenominatorVanishes when Q fails the grid nonvanishing test.
HJReport check_trig_hermite_jacobi(const LaurentPoly& Q, const std::vector<LaurentPoly>& P,
                                   const TrigSystem& S, const MultiIndex& idx,
                                   const TrigHJOptions& opts = {});

/// min/max of |Q| on a uniform grid over [0, 2 pi).
GridCertificate trig_grid_certificate(const LaurentPoly& Q, long grid, double threshold);

/// P(x)/Q(x); throws DenominatorVanishes when Q(x) = 0.
ComplexFloat eval_trig_rational(const LaurentPoly& Q, const LaurentPoly& P, double x);
/// Exact P(z)/Q(z) at z = e^{ix} given as a complex rational.
ComplexRational eval_trig_rational(const LaurentPoly& Q, const LaurentPoly& P, const ComplexRational& z);

namespace detail {

/// Cramer path: Delta = det(H^t without the u_0 column). When Delta != 0,
/// u_0 = Delta and the other u_p are the Cramer numerators of H' u' = -h_0 Delta.
/// Returns an empty vector when Delta = 0.
std::vector<ComplexRational> cramer_solution(const TrigSystem& S, const MultiIndex& idx);

}  // namespace detail

}  // namespace hpade
