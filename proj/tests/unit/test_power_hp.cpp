#include <doctest.h>

#include <random>

#include "hpade/power_hp.hpp"
#include "test_util.hpp"

using namespace hpade;
using testutil::R;

namespace {

PowerSystem example1(long K = 10) {
    std::vector<Rational> f1, f2;
    for (long l = 0; l <= K; ++l) {
        f1.push_back(l % 2 == 0 ? 2 : 1);
        f2.push_back(l == 0 ? 1 : l);
    }
    return {{PowerSeries(f1), PowerSeries(f2)}};
}

PowerSeries exp_series(long K) {
    std::vector<Rational> c;
    Rational f = 1;
    for (long l = 0; l <= K; ++l) {
        if (l) f *= l;
        c.push_back(Rational(1) / f);
    }
    return PowerSeries(c);
}

std::vector<Rational> as_vec(const Poly<Rational>& p, std::size_t n) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(p.coeff(i));
    return v;
}

}  // namespace

TEST_CASE("multi-index") {
    MultiIndex idx(1, {1, 1});
    CHECK(idx.m() == 2);
    CHECK(idx.n_j(0) == 2);
    CHECK(idx.to_string() == "(1, (1, 1))");
    CHECK_THROWS(MultiIndex(-1, {1}));
    CHECK_THROWS(MultiIndex(1, {}));
    CHECK_THROWS(MultiIndex(1, {-1}));
    CHECK(index_box(2, 1, 1).size() == 8);
    CHECK(index_box(1, 0, 0).size() == 1);
}

TEST_CASE("hadamard_det") {
    PowerSeries f({R("3"), R("5"), R("7"), R("11")});
    CHECK(hadamard_det(f, 2, 1) == 7);
    PowerSeries geo(std::vector<Rational>(8, Rational(1)));
    CHECK(hadamard_det(geo, 3, 2) == 0);
    CHECK(hadamard_det(geo, 4, 3) == 0);
    CHECK(hadamard_det(exp_series(6), 1, 2) == R("-1/2"));
    CHECK_THROWS_AS(hadamard_det(f, 3, 2), InsufficientOrder);
}

TEST_CASE("block_hadamard_det") {
    std::mt19937 rng(11);
    auto f = testutil::random_power_series(rng, 8);
    auto g = testutil::random_power_series(rng, 8);
    CHECK(block_hadamard_det(PowerSystem{{f}}, MultiIndex(2, {2})) == hadamard_det(f, 2, 2));
    CHECK(block_hadamard_det(PowerSystem{{f, g}}, MultiIndex(2, {3, 0})) == hadamard_det(f, 2, 3));
    CHECK(block_hadamard_det(example1(), MultiIndex(1, {1, 1})) == 0);
}

TEST_CASE("alternating and linear pair") {
    auto F = example1();
    MultiIndex idx(1, {1, 1});
    auto sol = solve_problem_A(F, idx);
    CHECK(sol.unique);
    CHECK(as_vec(sol.Q, 3) == std::vector<Rational>{0, 1, -2});
    CHECK(as_vec(sol.P[0], 3) == std::vector<Rational>{0, 2, -3});
    CHECK(as_vec(sol.P[1], 3) == std::vector<Rational>{0, 1, -1});
    auto hj = check_hermite_jacobi(sol, F, idx);
    REQUIRE(hj.components.size() == 2);
    for (const auto& c : hj.components) {
        CHECK_FALSE(c.holds);
        CHECK(c.expandable);
        REQUIRE(c.first_bad_order);
        CHECK(*c.first_bad_order == 3);
    }
    auto jc = jacobi_criterion(F, idx);
    CHECK(jc.det == 0);
    CHECK_FALSE(jc.guaranteed);
}

TEST_CASE("zero multi-index gives partial sums") {
    auto F = example1();
    MultiIndex idx(3, {0, 0});
    auto sol = solve_problem_A(F, idx);
    CHECK(sol.Q == Poly<Rational>{R("1")});
    CHECK(sol.P[0] == F.series[0].partial_sum(3));
    CHECK(sol.P[1] == F.series[1].partial_sum(3));
    CHECK(check_hermite_jacobi(sol, F, idx).all_hold());
    CHECK(jacobi_criterion(F, idx).guaranteed);
}

TEST_CASE("geometric series is reproduced exactly") {
    PowerSystem F{{PowerSeries(std::vector<Rational>(6, Rational(1)))}};
    MultiIndex idx(0, {1});
    auto sol = solve_problem_A(F, idx);
    CHECK(sol.unique);
    CHECK(as_vec(sol.Q, 2) == std::vector<Rational>{1, -1});
    CHECK(as_vec(sol.P[0], 1) == std::vector<Rational>{1});
    for (const auto& r : sol.residual[0].coeffs()) CHECK(r == 0);
    auto hj = check_hermite_jacobi(sol, F, idx);
    CHECK(hj.all_hold());
    CHECK_FALSE(hj.components[0].mismatch_order);
}

TEST_CASE("insufficient order") {
    PowerSystem F{{PowerSeries({R("1"), R("2")})}};
    CHECK_THROWS_AS(solve_problem_A(F, MultiIndex(1, {1})), InsufficientOrder);
}

TEST_CASE("order conditions, scale quotient and HJ implies HP on random systems") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t k = 1 + rng() % 3;
        long n = static_cast<long>(rng() % 3);
        std::vector<long> mv;
        for (std::size_t j = 0; j < k; ++j) mv.push_back(static_cast<long>(rng() % 3));
        MultiIndex idx(n, mv);
        long K = n + idx.m() + 3;
        PowerSystem F;
        for (std::size_t j = 0; j < k; ++j) F.series.push_back(testutil::random_power_series(rng, K));
        auto sol = solve_problem_A(F, idx);
        CHECK_FALSE(sol.Q.is_zero());
        CHECK(sol.Q.degree() <= idx.m());
        for (std::size_t j = 0; j < k; ++j) {
            CHECK(sol.P[j].degree() <= idx.n_j(j));
            for (long i = 0; i <= idx.n_j(j) + idx.m_j(j); ++i) CHECK(sol.residual[j].at(i) == 0);
        }
        if (sol.unique) {
            auto again = nullspace(problem_a_matrix(F, idx));
            CHECK(testutil::proportional(again[0], std::vector<Rational>(sol.Q.coeffs().begin(), sol.Q.coeffs().end())));
        }
        auto hj = check_hermite_jacobi(sol, F, idx);
        if (hj.all_hold()) {
            // HJ pairs satisfy the linear conditions through n + m.
            for (std::size_t j = 0; j < k; ++j) {
                auto e = rational_expand(sol.P[j], sol.Q, K);
                for (long i = 0; i <= n + idx.m(); ++i) CHECK(e.at(i) == F.series[j].at(i));
            }
        }
        auto jc = jacobi_criterion(F, idx);
        if (jc.guaranteed) {
            CHECK(sol.unique);
            CHECK(hj.all_hold());
        }
    }
}

TEST_CASE("quite perfect scan on the exponential") {
    PowerSystem F{{exp_series(12)}};
    auto cells = quite_perfect_scan(F, 3, 3);
    CHECK(cells.size() == 16);
    for (const auto& c : cells) CHECK(c.quite_perfect());
}
