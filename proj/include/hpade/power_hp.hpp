#pragma once

// Problem A for systems of power series: common denominator Q of degree <= m
// and numerators P_j of degree <= n_j with Q f_j - P_j = O(z^{n+m+1}).

#include <vector>

#include "hpade/hj_report.hpp"
#include "hpade/linalg.hpp"
#include "hpade/multi_index.hpp"
#include "hpade/polynomial.hpp"
#include "hpade/series.hpp"

namespace hpade {

struct PowerSystem {
    std::vector<PowerSeries> series;

    std::size_t k() const noexcept { return series.size(); }
};

/// m x m Hankel determinant with entries f_{n-m+1+r+c}.
Rational hadamard_det(const PowerSeries& f, long n, long m);

/// Stack of Hankel blocks, block j with m_j rows and entries f^j_{n-m_j+1+r+c};
/// components with m_j = 0 contribute no block.
Rational block_hadamard_det(const PowerSystem& F, const MultiIndex& idx);

/// Rows express that the coefficients n_j+1..n_j+m_j of Q f_j vanish; the
/// columns are q_0..q_m.
Matrix<Rational> problem_a_matrix(const PowerSystem& F, const MultiIndex& idx);

struct HPSolution {
    Poly<Rational> Q;
    std::vector<Poly<Rational>> P;
    /// Q f_j - P_j, known to the order of f_j.
    std::vector<PowerSeries> residual;
    bool unique = false;
    long basis_dim = 0;
    /// Kernel basis as coefficient vectors of Q.
    std::vector<std::vector<Rational>> basis;
};

/// Numerators P_j = trunc_{n_j}(Q f_j) and residuals for a given denominator.
HPSolution numerators_for(const Poly<Rational>& Q, const PowerSystem& F, const MultiIndex& idx);

/// Q is the first kernel vector, scaled so its lowest nonzero coefficient is 1.
HPSolution solve_problem_A(const PowerSystem& F, const MultiIndex& idx);

/// Expands P_j/Q and compares with f_j through order n+m; also reports the
/// first mismatch anywhere in the known range of f_j.
HJReport check_hermite_jacobi(const HPSolution& sol, const PowerSystem& F, const MultiIndex& idx);

struct JacobiCriterion {
    Rational det;
    bool guaranteed = false;
};

JacobiCriterion jacobi_criterion(const PowerSystem& F, const MultiIndex& idx);

struct PerfectnessCell {
    MultiIndex index;
    long nullity = 0;
    bool unique = false;
    bool exact_degrees = false;
    bool coprime = false;
    bool quite_perfect() const { return unique && exact_degrees && coprime; }
};

/// Checks the quite-perfect conditions (unique solution, deg Q = m, deg P_j = n_j,
/// gcd(Q, P_j) = 1) over all multi-indices with n <= n_max, m_j <= m_max.
std::vector<PerfectnessCell> quite_perfect_scan(const PowerSystem& F, long n_max, long m_max);

}  // namespace hpade
