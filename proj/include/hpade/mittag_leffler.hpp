#pragma once

// Mittag-Leffler systems E_gamma(lambda_j z), their cosine and Chebyshev
// transplants, the closed-form Hermite-Pade denominator, and the explicit
// Hermite-Jacobi constructions for the cosine and Chebyshev systems.

#include <vector>

#include "hpade/cheb_hp.hpp"
#include "hpade/multi_index.hpp"
#include "hpade/polynomial.hpp"
#include "hpade/power_hp.hpp"
#include "hpade/series.hpp"
#include "hpade/trig_hp.hpp"

namespace hpade {

struct MLSpec {
    Rational gamma = 1;
    std::vector<Rational> lambdas{Rational(1)};

    MLSpec() = default;
    /// Validates gamma not in {0, -1, -2, ...}, the lambdas distinct and
    /// nonzero, and lambda_1 = 1 when k = 1.
    MLSpec(Rational gamma, std::vector<Rational> lambdas);

    std::size_t k() const noexcept { return lambdas.size(); }
};

/// lambda_j^l / (gamma)_l for l = 0..K.
PowerSeries taylor_E_gamma(const MLSpec& spec, std::size_t j, long K);
PowerSystem power_system_E(const MLSpec& spec, long K);

/// prod_j (x - lambda_j)^{m_j}, the polynomial factor of
/// U_gamma(x) = x^{n+gamma-1} prod_j (x - lambda_j)^{m_j}.
struct UGammaPoly {
    /// n + gamma - 1, the exponent carried by the constant coefficient.
    Rational exponent_base;
    Poly<Rational> c;
};
UGammaPoly u_gamma_poly(const MLSpec& spec, const MultiIndex& idx);

/// Q(z) = sum_p c_p Gamma(n+p+gamma)/Gamma(n+m+gamma) z^{m-p}; Q(0) = 1, deg Q = m.
/// Requires n >= m_j - 1 for every j.
Poly<Rational> closed_form_Q(const MLSpec& spec, const MultiIndex& idx);

/// Coefficient of z^{n+m+1} in Q E_gamma(lambda_j z) - P_j for the closed-form Q:
/// lambda_j^{n+1}/(gamma)_{n+m} sum_p c_p lambda_j^p / (n+gamma+p).
Rational residual_leading_coeff(const MLSpec& spec, const MultiIndex& idx, std::size_t j);

/// Cosine series G_gamma(x; lambda_j) = sum lambda_j^l/(gamma)_l cos lx.
TrigSystem cosine_system_G(const MLSpec& spec, long K);
/// Chebyshev series F_gamma(x; lambda_j) = sum lambda_j^l/(gamma)_l T_l(x).
ChebSystem cheb_system_F(const MLSpec& spec, long K);

struct HJConstructionG {
    LaurentPoly Qhat;
    std::vector<LaurentPoly> Phat;
    /// Power-series denominator (Q(0) = 1) and numerators the construction uses.
    Poly<Rational> Q;
    std::vector<Poly<Rational>> P;
};

/// Qhat = |Q(e^{ix})|^2, Phat_j = Re(P_j(e^{ix}) conj Q(e^{ix})). Requires n >= m_j.
HJConstructionG hj_construction_G(const MLSpec& spec, const MultiIndex& idx);

struct HJConstructionF {
    ChebPoly Qhat;
    std::vector<ChebPoly> Phat;
};

/// The G construction under cos(px) -> T_p(x).
HJConstructionF hj_construction_F(const MLSpec& spec, const MultiIndex& idx);

/// 2 b_m b_0 a~^j_{n+m+1}, with b_0 = 1 and b_m the leading coefficient of closed_form_Q.
Rational alpha_coeff(const MLSpec& spec, const MultiIndex& idx, std::size_t j);

struct SeparationWitness {
    Rational alpha;
    /// Coefficient of cos((n+1)x) in Qhat G_j - Phat_j.
    Rational measured_cos_coeff;
    /// Lowest harmonic where Qhat G_j - Phat_j is nonzero (-1 if none in range).
    long first_nonzero_harmonic = -1;
    /// Qhat, Phat_j solve the Problem A^t conditions for component j.
    bool is_hp_pair = false;
    /// The measured coefficient equals alpha.
    bool matches_alpha = false;
};

SeparationWitness separation_witness(const MLSpec& spec, const MultiIndex& idx, std::size_t j);

}  // namespace hpade
