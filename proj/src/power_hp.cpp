#include "hpade/power_hp.hpp"

namespace hpade {

Rational hadamard_det(const PowerSeries& f, long n, long m) {
    if (m < 1) throw Error("hadamard_det: m must be positive");
    Matrix<Rational> H(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (long r = 0; r < m; ++r) {
        for (long c = 0; c < m; ++c) H(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = f.at(n - m + 1 + r + c);
    }
    return determinant(H);
}

Rational block_hadamard_det(const PowerSystem& F, const MultiIndex& idx) {
    if (idx.k() != F.k()) throw Error("multi-index and system sizes differ");
    long m = idx.m();
    if (m < 1) throw Error("block_hadamard_det: m must be positive");
    Matrix<Rational> H(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    std::size_t row = 0;
    for (std::size_t j = 0; j < F.k(); ++j) {
        long mj = idx.m_j(j);
        for (long r = 0; r < mj; ++r, ++row) {
            for (long c = 0; c < m; ++c) {
                H(row, static_cast<std::size_t>(c)) = F.series[j].at(idx.n() - mj + 1 + r + c);
            }
        }
    }
    return determinant(H);
}

Matrix<Rational> problem_a_matrix(const PowerSystem& F, const MultiIndex& idx) {
    if (idx.k() != F.k()) throw Error("multi-index and system sizes differ");
    long m = idx.m();
    Matrix<Rational> A(static_cast<std::size_t>(m), static_cast<std::size_t>(m + 1));
    std::size_t row = 0;
    for (std::size_t j = 0; j < F.k(); ++j) {
        long nj = idx.n_j(j);
        for (long i = 1; i <= idx.m_j(j); ++i, ++row) {
            for (long s = 0; s <= m; ++s) A(row, static_cast<std::size_t>(s)) = F.series[j].at(nj + i - s);
        }
    }
    return A;
}

HPSolution numerators_for(const Poly<Rational>& Q, const PowerSystem& F, const MultiIndex& idx) {
    HPSolution sol;
    sol.Q = Q;
    PowerSeries q(std::vector<Rational>(Q.coeffs().begin(), Q.coeffs().end()), true);
    for (std::size_t j = 0; j < F.k(); ++j) {
        const PowerSeries& f = F.series[j];
        long nj = idx.n_j(j);
        long K = f.terminating() ? std::max(f.order() + static_cast<long>(Q.size()) - 1, nj) : f.order();
        PowerSeries prod = series_mul(q, f, std::max(K, nj));
        std::vector<Rational> p(static_cast<std::size_t>(nj + 1));
        for (long i = 0; i <= nj; ++i) p[static_cast<std::size_t>(i)] = prod.at(i);
        std::vector<Rational> r = prod.coeffs();
        for (long i = 0; i <= nj && i < static_cast<long>(r.size()); ++i) r[static_cast<std::size_t>(i)] = 0;
        sol.P.emplace_back(std::move(p));
        sol.residual.emplace_back(std::move(r), f.terminating());
    }
    return sol;
}

HPSolution solve_problem_A(const PowerSystem& F, const MultiIndex& idx) {
    auto basis = nullspace(problem_a_matrix(F, idx));
    HPSolution sol = numerators_for(Poly<Rational>(basis.front()), F, idx);
    sol.basis_dim = static_cast<long>(basis.size());
    sol.unique = basis.size() == 1;
    sol.basis = std::move(basis);
    return sol;
}

HJReport check_hermite_jacobi(const HPSolution& sol, const PowerSystem& F, const MultiIndex& idx) {
    HJReport rep;
    rep.window = idx.n() + idx.m();
    rep.exact = true;
    for (std::size_t j = 0; j < F.k(); ++j) {
        HJComponent comp;
        const PowerSeries& f = F.series[j];
        if (!f.known(rep.window)) throw InsufficientOrder(rep.window, f.order());
        long K = std::max(f.order(), rep.window);
        PowerSeries e;
        try {
            e = rational_expand(sol.P[j], sol.Q, K);
            comp.expandable = true;
        } catch (const NotExpandable&) {
            rep.components.push_back(comp);
            continue;
        }
        for (long i = 0; i <= K; ++i) {
            auto fi = f.lookup(i);
            if (fi.beyond_truncation) break;
            if (e.at(i) != fi.value) {
                comp.mismatch_order = i;
                break;
            }
        }
        if (comp.mismatch_order && *comp.mismatch_order <= rep.window) comp.first_bad_order = comp.mismatch_order;
        comp.holds = !comp.first_bad_order;
        rep.components.push_back(comp);
    }
    return rep;
}

JacobiCriterion jacobi_criterion(const PowerSystem& F, const MultiIndex& idx) {
    if (idx.zero()) return {Rational(1), true};
    Rational det = block_hadamard_det(F, idx);
    bool nz = det != 0;
    return {std::move(det), nz};
}

std::vector<PerfectnessCell> quite_perfect_scan(const PowerSystem& F, long n_max, long m_max) {
    std::vector<PerfectnessCell> out;
    for (const auto& idx : index_box(F.k(), n_max, m_max)) {
        HPSolution sol = solve_problem_A(F, idx);
        PerfectnessCell cell{idx};
        cell.nullity = sol.basis_dim;
        cell.unique = sol.unique;
        cell.exact_degrees = sol.Q.degree() == idx.m();
        cell.coprime = true;
        for (std::size_t j = 0; j < F.k(); ++j) {
            if (sol.P[j].degree() != idx.n_j(j)) cell.exact_degrees = false;
            if (gcd(sol.Q, sol.P[j]).degree() != 0) cell.coprime = false;
        }
        out.push_back(std::move(cell));
    }
    return out;
}

}  // namespace hpade
