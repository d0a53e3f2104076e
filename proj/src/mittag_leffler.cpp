#include "hpade/mittag_leffler.hpp"

#include <algorithm>

namespace hpade {

namespace {

bool nonpositive_integer(const Rational& g) { return denominator(g) == 1 && g <= 0; }

void require_n_at_least(const MultiIndex& idx, long shift, const char* what) {
    for (long mj : idx.m_vec()) {
        if (idx.n() < mj - shift) throw IndexConditionViolated(std::string(what) + " requires " + (shift ? "n >= m_j - 1" : "n >= m_j") + " for every j; got " + idx.to_string());
    }
}

void require_k(const MLSpec& spec, const MultiIndex& idx) {
    if (spec.k() != idx.k()) throw Error("multi-index and Mittag-Leffler system sizes differ");
}

}  // namespace

MLSpec::MLSpec(Rational g, std::vector<Rational> l) : gamma(std::move(g)), lambdas(std::move(l)) {
    if (nonpositive_integer(gamma)) throw Error("gamma must not be 0, -1, -2, ...");
    if (lambdas.empty()) throw Error("need at least one lambda");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (lambdas[i] == 0) throw Error("lambda values must be nonzero");
        for (std::size_t j = 0; j < i; ++j) {
            if (lambdas[i] == lambdas[j]) throw Error("lambda values must be distinct");
        }
    }
    if (lambdas.size() == 1 && lambdas[0] != 1) throw Error("a single-series system uses lambda = 1");
}

PowerSeries taylor_E_gamma(const MLSpec& spec, std::size_t j, long K) {
    std::vector<Rational> c;
    Rational lam_pow = 1, poch = 1;
    for (long l = 0; l <= K; ++l) {
        c.push_back(lam_pow / poch);
        lam_pow *= spec.lambdas.at(j);
        poch *= spec.gamma + l;
    }
    return PowerSeries(std::move(c), false);
}

PowerSystem power_system_E(const MLSpec& spec, long K) {
    PowerSystem F;
    for (std::size_t j = 0; j < spec.k(); ++j) F.series.push_back(taylor_E_gamma(spec, j, K));
    return F;
}

UGammaPoly u_gamma_poly(const MLSpec& spec, const MultiIndex& idx) {
    require_k(spec, idx);
    Poly<Rational> c{Rational(1)};
    for (std::size_t j = 0; j < spec.k(); ++j) {
        Poly<Rational> factor{Rational(-spec.lambdas[j]), Rational(1)};
        for (long i = 0; i < idx.m_j(j); ++i) c = c * factor;
    }
    return {Rational(idx.n() - 1) + spec.gamma, c};
}

Poly<Rational> closed_form_Q(const MLSpec& spec, const MultiIndex& idx) {
    require_k(spec, idx);
    require_n_at_least(idx, 1, "closed_form_Q");
    auto U = u_gamma_poly(spec, idx);
    long n = idx.n(), m = idx.m();
    std::vector<Rational> q(static_cast<std::size_t>(m + 1));
    for (long p = 0; p <= m; ++p) {
        q[static_cast<std::size_t>(m - p)] =
            U.c.coeff(static_cast<std::size_t>(p)) *
            gamma_ratio(spec.gamma, static_cast<unsigned>(n + p), static_cast<unsigned>(m - p));
    }
    return Poly<Rational>(std::move(q));
}

Rational residual_leading_coeff(const MLSpec& spec, const MultiIndex& idx, std::size_t j) {
    require_k(spec, idx);
    require_n_at_least(idx, 1, "residual_leading_coeff");
    auto U = u_gamma_poly(spec, idx);
    long n = idx.n(), m = idx.m();
    const Rational& lam = spec.lambdas.at(j);
    Rational sum = 0;
    Rational lam_p = 1;
    for (long p = 0; p <= m; ++p) {
        sum += U.c.coeff(static_cast<std::size_t>(p)) * lam_p / (spec.gamma + n + p);
        lam_p *= lam;
    }
    return pow(lam, static_cast<int>(n + 1)) / pochhammer(spec.gamma, static_cast<unsigned>(n + m)) * sum;
}

TrigSystem cosine_system_G(const MLSpec& spec, long K) {
    TrigSystem S;
    for (std::size_t j = 0; j < spec.k(); ++j) {
        PowerSeries e = taylor_E_gamma(spec, j, K);
        TrigSeries s(K, false);
        s.set(0, ComplexRational(1));
        for (long l = 1; l <= K; ++l) {
            ComplexRational c(e.at(l) / 2);
            s.set(l, c);
            s.set(-l, c);
        }
        S.series.push_back(std::move(s));
    }
    return S;
}

ChebSystem cheb_system_F(const MLSpec& spec, long K) {
    ChebSystem S;
    for (std::size_t j = 0; j < spec.k(); ++j) {
        std::vector<Rational> a = taylor_E_gamma(spec, j, K).coeffs();
        a[0] = 2;
        S.series.emplace_back(std::move(a), false);
    }
    return S;
}

HJConstructionG hj_construction_G(const MLSpec& spec, const MultiIndex& idx) {
    require_k(spec, idx);
    require_n_at_least(idx, 0, "hj_construction_G");
    long m = idx.m();
    HJConstructionG out;
    out.Q = closed_form_Q(spec, idx);
    HPSolution sol = solve_problem_A(power_system_E(spec, idx.n() + m + 1), idx);
    Rational q0 = sol.Q.coeff(0);
    if (q0 == 0) throw Error("Mittag-Leffler denominator vanishes at 0");
    Rational scale = Rational(1) / q0;
    if (!(sol.Q * scale == out.Q)) throw Error("generic solver disagrees with the closed-form denominator");
    for (auto& p : sol.P) out.P.push_back(p * scale);

    const auto& b = out.Q;
    out.Qhat = LaurentPoly(m);
    for (long s = 0; s <= m; ++s) {
        for (long l = 0; l <= m; ++l) {
            out.Qhat.set(s - l, out.Qhat.coeff(s - l) + ComplexRational(b.coeff(static_cast<std::size_t>(s)) * b.coeff(static_cast<std::size_t>(l))));
        }
    }
    for (std::size_t j = 0; j < idx.k(); ++j) {
        long nj = idx.n_j(j);
        LaurentPoly ph(nj);
        const auto& a = out.P[j];
        for (long p = 0; p <= nj; ++p) {
            for (long l = 0; l <= m; ++l) {
                Rational v = a.coeff(static_cast<std::size_t>(p)) * b.coeff(static_cast<std::size_t>(l)) / 2;
                if (v == 0) continue;
                ph.set(p - l, ph.coeff(p - l) + ComplexRational(v));
                ph.set(l - p, ph.coeff(l - p) + ComplexRational(v));
            }
        }
        out.Phat.push_back(std::move(ph));
    }
    return out;
}

HJConstructionF hj_construction_F(const MLSpec& spec, const MultiIndex& idx) {
    auto g = hj_construction_G(spec, idx);
    HJConstructionF out;
    out.Qhat = ChebPoly::from_cosine(g.Qhat);
    for (const auto& p : g.Phat) out.Phat.push_back(ChebPoly::from_cosine(p));
    return out;
}

Rational alpha_coeff(const MLSpec& spec, const MultiIndex& idx, std::size_t j) {
    require_k(spec, idx);
    require_n_at_least(idx, 0, "alpha_coeff");
    Poly<Rational> Q = closed_form_Q(spec, idx);
    Rational b0 = Q.coeff(0);
    Rational bm = Q.coeff(static_cast<std::size_t>(idx.m()));
    return 2 * bm * b0 * residual_leading_coeff(spec, idx, j);
}

SeparationWitness separation_witness(const MLSpec& spec, const MultiIndex& idx, std::size_t j) {
    auto g = hj_construction_G(spec, idx);
    long n = idx.n(), m = idx.m();
    long nj = idx.n_j(j);
    long window = std::max(nj + idx.m_j(j), n + 1);
    TrigSystem G = cosine_system_G(spec, window + m);
    TrigSeries prod = series_mul(g.Qhat.as_series(), G.series.at(j), window);
    SeparationWitness w;
    w.alpha = alpha_coeff(spec, idx, j);
    bool hp = true;
    for (long l = 0; l <= window; ++l) {
        ComplexRational r = prod.at(l) - g.Phat[j].coeff(l);
        if (!r.is_zero() && w.first_nonzero_harmonic < 0) w.first_nonzero_harmonic = l;
        if (!r.is_zero() && l <= nj + idx.m_j(j)) hp = false;
        if (l == n + 1) w.measured_cos_coeff = 2 * r.re();
    }
    w.is_hp_pair = hp;
    w.matches_alpha = w.measured_cos_coeff == w.alpha;
    return w;
}

}  // namespace hpade
