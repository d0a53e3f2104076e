#include "hpade/cheb_hp.hpp"

#include <algorithm>
#include <cmath>

#include "hpade/quadrature.hpp"

namespace hpade {

int ChebPoly::degree() const {
    for (std::size_t i = q_.size(); i-- > 0;) {
        if (q_[i] != 0) return static_cast<int>(i);
    }
    return -1;
}

double ChebPoly::eval(double x) const {
    if (!(x >= -1.0 && x <= 1.0)) {
        throw EvaluationFailure("Chebyshev objects are evaluated on [-1, 1] only");
    }
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = q_.size(); k-- > 1;) {
        double b0 = to_double(q_[k]) + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    double q0 = q_.empty() ? 0.0 : to_double(q_[0]);
    return q0 + x * b1 - b2;
}

LaurentPoly ChebPoly::to_cosine() const {
    long d = q_.empty() ? 0 : static_cast<long>(q_.size()) - 1;
    LaurentPoly u(d);
    if (q_.empty()) return u;
    u.set(0, ComplexRational(q_[0]));
    for (long p = 1; p <= d; ++p) {
        ComplexRational half(q_[static_cast<std::size_t>(p)] / 2);
        u.set(p, half);
        u.set(-p, half);
    }
    return u;
}

ChebPoly ChebPoly::from_cosine(const LaurentPoly& u) {
    long m = u.bound();
    std::vector<Rational> q(static_cast<std::size_t>(m + 1));
    for (long p = 0; p <= m; ++p) {
        if (!u.coeff(p).is_real() || !(u.coeff(p) == u.coeff(-p))) {
            throw Error("trigonometric polynomial is not a real cosine polynomial");
        }
        q[static_cast<std::size_t>(p)] = p == 0 ? u.coeff(0).re() : Rational(2 * u.coeff(p).re());
    }
    return ChebPoly(std::move(q));
}

bool operator==(const ChebPoly& a, const ChebPoly& b) {
    std::size_t n = std::max(a.q_.size(), b.q_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeff(i) != b.coeff(i)) return false;
    }
    return true;
}

TrigSystem to_cosine_system(const ChebSystem& S) {
    TrigSystem T;
    for (const auto& f : S.series) T.series.push_back(cheb_to_cosine(f));
    return T;
}

namespace {

ChebApproximant from_trig(const TrigApproximant& t) {
    ChebApproximant out;
    out.Q = ChebPoly::from_cosine(t.Q);
    for (const auto& p : t.P) out.P.push_back(ChebPoly::from_cosine(p));
    for (const auto& r : t.residual) {
        std::vector<Rational> a;
        for (long p = 0; p <= r.order(); ++p) {
            if (!r.at(p).is_real()) throw Error("complex residual in a Chebyshev solution");
            a.push_back(2 * r.at(p).re());
        }
        out.residual.emplace_back(std::move(a), r.terminating());
    }
    return out;
}

}  // namespace

ChebApproximant cheb_numerators_for(const ChebPoly& Q, const ChebSystem& S, const MultiIndex& idx) {
    return from_trig(trig_numerators_for(Q.to_cosine(), to_cosine_system(S), idx));
}

ChebHPSolution solve_problem_Ach(const ChebSystem& S, const MultiIndex& idx) {
    TrigSystem T = to_cosine_system(S);
    ChebHPSolution sol;
    sol.trig = solve_problem_At(T, idx);
    long m = idx.m();
    sol.weakly_normal = sol.trig.rank == 2 * m;

    // Restrict H^t to symmetric vectors u_{-p} = u_p = w_p.
    HtMatrix H = build_Ht(T, idx);
    Matrix<Rational> Hs(H.matrix.rows(), static_cast<std::size_t>(m + 1));
    for (std::size_t r = 0; r < H.matrix.rows(); ++r) {
        for (long p = 0; p <= m; ++p) {
            ComplexRational v = H.matrix(r, static_cast<std::size_t>(m + p));
            if (p > 0) v += H.matrix(r, static_cast<std::size_t>(m - p));
            if (!v.is_real()) throw Error("cosine system produced a complex coefficient");
            Hs(r, static_cast<std::size_t>(p)) = v.re();
        }
    }
    for (auto& w : nullspace(Hs)) {
        std::vector<Rational> q(w.size());
        for (std::size_t p = 0; p < w.size(); ++p) q[p] = p == 0 ? w[0] : Rational(2 * w[p]);
        detail::normalize_first_nonzero(q, 0.0);
        sol.basis.push_back(std::move(q));
    }
    sol.solution_dim = static_cast<long>(sol.basis.size());
    sol.unique = sol.solution_dim == 1;
    sol.approx = cheb_numerators_for(ChebPoly(sol.basis.front()), S, idx);
    if (sol.weakly_normal) sol.determinant_formula = from_trig(determinant_formulas(T, idx).approx);
    return sol;
}

HJReport check_nonlinear_hermite_chebyshev(const ChebPoly& Q, const std::vector<ChebPoly>& P,
                                           const ChebSystem& S, const MultiIndex& idx,
                                           const ChebHJOptions& opts) {
    HJReport rep;
    rep.window = idx.n() + idx.m();
    rep.exact = false;
    for (const auto& f : S.series) {
        if (f.lookup(rep.window).beyond_truncation) throw InsufficientOrder(rep.window, f.order());
    }
    rep.certificate = trig_grid_certificate(Q.to_cosine(), opts.grid, opts.vanish_threshold);
    if (!rep.certificate->nonvanishing) {
        throw DenominatorVanishes("Chebyshev denominator vanishes on [-1, 1] (min |Q| = " +
                                  std::to_string(rep.certificate->min_abs) + ")");
    }
    long N = opts.samples > 0 ? opts.samples : default_quadrature_samples(idx.n(), idx.m());
    N = std::max(N, 2 * rep.window + 2);
    const bool adaptive = opts.samples <= 0;
    for (std::size_t j = 0; j < S.k(); ++j) {
        auto ratio = [&](double x) { return P[j].eval(x) / Q.eval(x); };
        long n_used = N;
        auto a = cheb_coeffs(ratio, rep.window, n_used);
        while (adaptive && n_used < (1L << 16)) {
            auto a2 = cheb_coeffs(ratio, rep.window, 2 * n_used);
            double change = 0.0;
            for (std::size_t l = 0; l < a.size(); ++l) change = std::max(change, std::abs(a2[l] - a[l]));
            a = std::move(a2);
            n_used *= 2;
            if (change < 0.1 * opts.tol) break;
        }
        rep.samples = std::max(rep.samples, n_used);
        double scale = 1.0;
        for (long l = 0; l <= rep.window; ++l) scale = std::max(scale, std::abs(to_double(S.series[j].at(l))));
        HJComponent comp;
        comp.expandable = true;
        for (long l = 0; l <= rep.window; ++l) {
            double dev = std::abs(a[static_cast<std::size_t>(l)] - to_double(S.series[j].at(l)));
            comp.max_deviation = std::max(comp.max_deviation, dev);
            if (dev > opts.tol * scale && !comp.first_bad_order) comp.first_bad_order = l;
        }
        comp.mismatch_order = comp.first_bad_order;
        comp.holds = !comp.first_bad_order;
        rep.components.push_back(comp);
    }
    return rep;
}

}  // namespace hpade
