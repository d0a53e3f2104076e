#include "hpade/trig_hp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hpade/quadrature.hpp"

namespace hpade {

namespace {

void require_order(const TrigSystem& S, long needed) {
    for (const auto& s : S.series) {
        if (!s.known(needed)) throw InsufficientOrder(needed, s.order());
    }
}

std::vector<ComplexRational> ht_row(const TrigSeries& s, long l, long m) {
    std::vector<ComplexRational> row;
    row.reserve(static_cast<std::size_t>(2 * m + 1));
    for (long t = 0; t <= 2 * m; ++t) row.push_back(s.at(l + m - t));
    return row;
}

}  // namespace

HtMatrix build_Ht(const TrigSystem& S, const MultiIndex& idx) {
    if (idx.k() != S.k()) throw Error("multi-index and system sizes differ");
    long m = idx.m();
    require_order(S, idx.n() + 2 * m);
    HtMatrix H;
    H.matrix = Matrix<ComplexRational>(static_cast<std::size_t>(2 * m), static_cast<std::size_t>(2 * m + 1));
    std::size_t r = 0;
    auto put = [&](std::size_t j, long l) {
        auto row = ht_row(S.series[j], l, m);
        for (std::size_t c = 0; c < row.size(); ++c) H.matrix(r, c) = row[c];
        H.rows.push_back({j, l});
        ++r;
    };
    for (std::size_t j = S.k(); j-- > 0;) {
        long nj = idx.n_j(j);
        for (long l = nj + idx.m_j(j); l >= nj + 1; --l) put(j, l);
    }
    for (std::size_t j = 0; j < S.k(); ++j) {
        long nj = idx.n_j(j);
        for (long l = -nj - 1; l >= -nj - idx.m_j(j); --l) put(j, l);
    }
    return H;
}

bool weak_normality(const TrigSystem& S, const MultiIndex& idx) {
    return static_cast<long>(rank(build_Ht(S, idx).matrix)) == 2 * idx.m();
}

LaurentPoly laurent_from_vector(const std::vector<ComplexRational>& u) { return LaurentPoly(u); }

TrigApproximant trig_numerators_for(const LaurentPoly& Q, const TrigSystem& S, const MultiIndex& idx) {
    TrigApproximant out;
    out.Q = Q;
    TrigSeries q = Q.as_series();
    for (std::size_t j = 0; j < S.k(); ++j) {
        const TrigSeries& f = S.series[j];
        long nj = idx.n_j(j);
        long K = f.terminating() ? f.order() + Q.bound() : f.order() - std::max(0L, Q.degree());
        K = std::max(K, nj);
        TrigSeries prod = series_mul(q, f, K);
        LaurentPoly P(nj);
        for (long p = -nj; p <= nj; ++p) {
            P.set(p, prod.at(p));
            prod.set(p, ComplexRational());
        }
        out.P.push_back(std::move(P));
        out.residual.push_back(f.terminating() ? TrigSeries(prod.coeffs(), true) : prod);
    }
    return out;
}

TrigHPSolution solve_problem_At(const TrigSystem& S, const MultiIndex& idx) {
    HtMatrix H = build_Ht(S, idx);
    long m = idx.m();
    TrigHPSolution sol;
    sol.rank = static_cast<long>(rank(H.matrix));
    sol.unique = sol.rank == 2 * m;
    if (sol.unique) {
        sol.basis = nullspace(H.matrix);
        for (std::size_t t = 0; t < sol.basis.front().size(); ++t) {
            if (!sol.basis.front()[t].is_zero()) {
                sol.parameters.push_back(static_cast<long>(t) - m);
                break;
            }
        }
    } else {
        std::vector<std::size_t> order{static_cast<std::size_t>(m)};
        for (long p = 1; p <= m; ++p) {
            order.push_back(static_cast<std::size_t>(m - p));
            order.push_back(static_cast<std::size_t>(m + p));
        }
        auto par = parametrize_nullspace(H.matrix, order);
        sol.basis = std::move(par.vectors);
        for (auto c : par.free_columns) sol.parameters.push_back(static_cast<long>(c) - m);
    }
    sol.approx = trig_numerators_for(laurent_from_vector(sol.basis.front()), S, idx);
    return sol;
}

DeterminantSolution determinant_formulas(const TrigSystem& S, const MultiIndex& idx) {
    HtMatrix H = build_Ht(S, idx);
    long m = idx.m();
    LaurentPoly Q(m);
    for (long p = -m; p <= m; ++p) {
        ComplexRational minor = determinant(H.matrix.without_column(static_cast<std::size_t>(p + m)));
        Q.set(p, (p % 2 == 0) ? minor : -minor);
    }
    DeterminantSolution out;
    out.degenerate = Q.is_zero();
    // Residual tail by convolution; the numerator coefficients by the
    // row-replacement determinants themselves.
    out.approx = trig_numerators_for(Q, S, idx);
    for (std::size_t j = 0; j < S.k(); ++j) {
        long nj = idx.n_j(j);
        LaurentPoly P(nj);
        for (long l = -nj; l <= nj; ++l) {
            auto D = H.matrix.with_row_inserted(static_cast<std::size_t>(m), ht_row(S.series[j], l, m));
            P.set(l, determinant(D));
        }
        out.approx.P[j] = std::move(P);
    }
    return out;
}

GridCertificate trig_grid_certificate(const LaurentPoly& Q, long grid, double threshold) {
    GridCertificate cert;
    cert.grid = grid;
    cert.min_abs = INFINITY;
    const double h = 2.0 * std::numbers::pi / static_cast<double>(grid);
    for (long i = 0; i < grid; ++i) {
        double v = std::abs(Q.eval(h * static_cast<double>(i)));
        cert.min_abs = std::min(cert.min_abs, v);
        cert.max_abs = std::max(cert.max_abs, v);
    }
    cert.threshold = threshold * cert.max_abs;
    cert.nonvanishing = cert.max_abs > 0.0 && cert.min_abs > cert.threshold;
    return cert;
}

HJReport check_trig_hermite_jacobi(const LaurentPoly& Q, const std::vector<LaurentPoly>& P,
                                   const TrigSystem& S, const MultiIndex& idx,
                                   const TrigHJOptions& opts) {
    HJReport rep;
    rep.window = idx.n() + idx.m();
    rep.exact = false;
    require_order(S, rep.window);
    rep.certificate = trig_grid_certificate(Q, opts.grid, opts.vanish_threshold);
    if (!rep.certificate->nonvanishing) {
        throw DenominatorVanishes("denominator vanishes on the sample grid (min |Q| = " +
                                  std::to_string(rep.certificate->min_abs) + ")");
    }
    long N = opts.samples > 0 ? opts.samples : default_quadrature_samples(idx.n(), idx.m());
    N = std::max(N, 2 * rep.window + 2);
    const bool adaptive = opts.samples <= 0;
    for (std::size_t j = 0; j < S.k(); ++j) {
        auto ratio = [&](double x) { return P[j].eval(x) / Q.eval(x); };
        long n_used = N;
        auto c = fourier_coeffs(ratio, rep.window, n_used);
        while (adaptive && n_used < (1L << 16)) {
            auto c2 = fourier_coeffs(ratio, rep.window, 2 * n_used);
            double change = 0.0;
            for (long l = -rep.window; l <= rep.window; ++l) change = std::max(change, std::abs(c2[l] - c[l]));
            c = std::move(c2);
            n_used *= 2;
            if (change < 0.1 * opts.tol) break;
        }
        rep.samples = std::max(rep.samples, n_used);
        double scale = 1.0;
        for (long l = -rep.window; l <= rep.window; ++l) {
            scale = std::max(scale, std::abs(to_complex_float(S.series[j].at(l))));
        }
        HJComponent comp;
        comp.expandable = true;
        for (long a = 0; a <= rep.window; ++a) {
            for (long l : {a, -a}) {
                double dev = std::abs(c[l] - to_complex_float(S.series[j].at(l)));
                comp.max_deviation = std::max(comp.max_deviation, dev);
                if (dev > opts.tol * scale && !comp.first_bad_order) comp.first_bad_order = a;
            }
        }
        comp.mismatch_order = comp.first_bad_order;
        comp.holds = !comp.first_bad_order;
        rep.components.push_back(comp);
    }
    return rep;
}

ComplexFloat eval_trig_rational(const LaurentPoly& Q, const LaurentPoly& P, double x) {
    ComplexFloat q = Q.eval(x);
    if (q == ComplexFloat(0.0)) throw DenominatorVanishes("Q(x) = 0");
    return P.eval(x) / q;
}

ComplexRational eval_trig_rational(const LaurentPoly& Q, const LaurentPoly& P, const ComplexRational& z) {
    ComplexRational q = Q.eval(z);
    if (q.is_zero()) throw DenominatorVanishes("Q(z) = 0");
    return P.eval(z) / q;
}

namespace detail {

std::vector<ComplexRational> cramer_solution(const TrigSystem& S, const MultiIndex& idx) {
    HtMatrix H = build_Ht(S, idx);
    long m = idx.m();
    auto centre = static_cast<std::size_t>(m);
    Matrix<ComplexRational> Hp = H.matrix.without_column(centre);
    ComplexRational delta = determinant(Hp);
    if (delta.is_zero()) return {};
    std::vector<ComplexRational> u(static_cast<std::size_t>(2 * m + 1));
    u[centre] = delta;
    for (std::size_t c = 0; c < Hp.cols(); ++c) {
        Matrix<ComplexRational> A = Hp;
        for (std::size_t r = 0; r < A.rows(); ++r) A(r, c) = -H.matrix(r, centre);
        u[c < centre ? c : c + 1] = determinant(A);
    }
    return u;
}

}  // namespace detail

}  // namespace hpade
