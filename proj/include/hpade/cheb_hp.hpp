#pragma once

// Problem A^ch, solved by substituting x = cos t: a Chebyshev system becomes a
// cosine system with c_p = a_{|p|}/2, and the symmetric solutions u_p = u_{-p}
// of the trigonometric problem map back to Chebyshev polynomials.

#include <optional>
#include <vector>

#include "hpade/hj_report.hpp"
#include "hpade/multi_index.hpp"
#include "hpade/series.hpp"
#include "hpade/trig_hp.hpp"

namespace hpade {

struct ChebSystem {
    std::vector<ChebSeries> series;

    std::size_t k() const noexcept { return series.size(); }
};

/// sum q_p T_p(x), p = 0..deg (no halving of q_0).
class ChebPoly {
public:
    ChebPoly() = default;
    explicit ChebPoly(std::vector<Rational> q) : q_(std::move(q)) {}

    const std::vector<Rational>& coeffs() const noexcept { return q_; }
    Rational coeff(std::size_t p) const { return p < q_.size() ? q_[p] : Rational(0); }
    int degree() const;

    /// Clenshaw evaluation; only defined on [-1, 1] (throws EvaluationFailure outside).
    double eval(double x) const;

    /// As the cosine polynomial sum q_p cos(px) in complex form.
    LaurentPoly to_cosine() const;
    /// Inverse of to_cosine for a real symmetric Laurent polynomial.
    static ChebPoly from_cosine(const LaurentPoly& u);

    friend bool operator==(const ChebPoly& a, const ChebPoly& b);

private:
    std::vector<Rational> q_;
};

struct ChebApproximant {
    ChebPoly Q;
    std::vector<ChebPoly> P;
    /// Chebyshev coefficients (a_0/2 convention) of Q f_j - P_j.
    std::vector<ChebSeries> residual;
};

struct ChebHPSolution {
    ChebApproximant approx;
    /// Dimension of the space of Chebyshev solutions (symmetric trig solutions).
    long solution_dim = 0;
    bool unique = false;
    /// rank H^t = 2m for the induced cosine system.
    bool weakly_normal = false;
    /// Full trigonometric solution of the cosine system.
    TrigHPSolution trig;
    /// The determinant-formula solution mapped back, when weakly normal.
    std::optional<ChebApproximant> determinant_formula;
    /// Basis of the Chebyshev solution space as Q coefficients q_0..q_m.
    std::vector<std::vector<Rational>> basis;
};

TrigSystem to_cosine_system(const ChebSystem& S);

/// Numerators and residuals for a given Chebyshev denominator.
ChebApproximant cheb_numerators_for(const ChebPoly& Q, const ChebSystem& S, const MultiIndex& idx);

ChebHPSolution solve_problem_Ach(const ChebSystem& S, const MultiIndex& idx);

struct ChebHJOptions {
    double tol = 1e-9;
    long grid = 4096;
    double vanish_threshold = 1e-8;
    long samples = 0;
};

/// Chebyshev coefficients of P_j/Q against f_j through order n+m. Throws
/// DenominatorVanishes when Q fails the grid test on [-1, 1].
HJReport check_nonlinear_hermite_chebyshev(const ChebPoly& Q, const std::vector<ChebPoly>& P,
                                           const ChebSystem& S, const MultiIndex& idx,
                                           const ChebHJOptions& opts = {});

}  // namespace hpade
