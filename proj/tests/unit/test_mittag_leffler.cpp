#include <doctest.h>

#include "hpade/mittag_leffler.hpp"
#include "test_util.hpp"

using namespace hpade;
using testutil::R;

namespace {

Poly<Rational> normalized_generic_Q(const MLSpec& spec, const MultiIndex& idx) {
    auto sol = solve_problem_A(power_system_E(spec, idx.n() + idx.m() + 2), idx);
    return sol.Q * (Rational(1) / sol.Q.coeff(0));
}

}  // namespace

TEST_CASE("MLSpec validation") {
    CHECK_THROWS(MLSpec(R("0"), {R("1")}));
    CHECK_THROWS(MLSpec(R("-2"), {R("1")}));
    CHECK_NOTHROW(MLSpec(R("-1/2"), {R("1")}));
    CHECK_THROWS(MLSpec(R("1"), {R("2")}));
    CHECK_THROWS(MLSpec(R("1"), {R("1"), R("1")}));
    CHECK_THROWS(MLSpec(R("1"), {R("1"), R("0")}));
}

TEST_CASE("taylor_E_gamma") {
    auto e = taylor_E_gamma(MLSpec(R("1"), {R("1")}), 0, 5);
    CHECK(e.at(0) == 1);
    CHECK(e.at(4) == R("1/24"));
    CHECK(taylor_E_gamma(MLSpec(R("1/2"), {R("1")}), 0, 3).at(2) == R("4/3"));
    CHECK(taylor_E_gamma(MLSpec(R("7/3"), {R("1"), R("2")}), 1, 3).at(0) == 1);
}

TEST_CASE("closed_form_Q") {
    MLSpec e1(R("1"), {R("1")});
    CHECK(closed_form_Q(e1, MultiIndex(1, {1})) == Poly<Rational>{R("1"), R("-1/2")});
    CHECK(closed_form_Q(e1, MultiIndex(2, {1})) == Poly<Rational>{R("1"), R("-1/3")});
    CHECK_THROWS_AS(closed_form_Q(e1, MultiIndex(0, {2})), IndexConditionViolated);
    MLSpec two(R("7/3"), {R("1"), R("2")});
    MultiIndex idx(1, {2, 1});
    auto Q = closed_form_Q(two, idx);
    CHECK(Q.coeff(0) == 1);
    CHECK(Q.degree() == 3);
    CHECK(Q == normalized_generic_Q(two, idx));
}

TEST_CASE("residual_leading_coeff") {
    MLSpec e1(R("1"), {R("1")});
    CHECK(residual_leading_coeff(e1, MultiIndex(1, {1}), 0) == R("-1/12"));
    CHECK(residual_leading_coeff(e1, MultiIndex(2, {1}), 0) == R("-1/72"));
    for (const char* g : {"1", "1/2", "7/3"}) {
        MLSpec spec(R(g), {R("1/2"), R("3/2")});
        for (auto mv : std::vector<std::vector<long>>{{1, 1}, {2, 0}, {0, 2}, {1, 2}}) {
            MultiIndex idx(2, mv);
            auto Q = closed_form_Q(spec, idx);
            auto F = power_system_E(spec, idx.n() + idx.m() + 2);
            auto sol = numerators_for(Q, F, idx);
            for (std::size_t j = 0; j < 2; ++j) {
                CHECK(sol.residual[j].at(idx.n() + idx.m() + 1) == residual_leading_coeff(spec, idx, j));
            }
        }
    }
}

TEST_CASE("cosine and Chebyshev systems") {
    MLSpec e1(R("1"), {R("1")});
    auto G = cosine_system_G(e1, 4);
    CHECK(G.series[0].at(0) == ComplexRational(1));
    CHECK(G.series[0].at(1) == ComplexRational(R("1/2")));
    CHECK(G.series[0].at(-3) == ComplexRational(R("1/12")));
    CHECK(G.series[0].cosine_only());
    auto F = cheb_system_F(e1, 4);
    CHECK(F.series[0].at(0) == 2);
    CHECK(F.series[0].at(2) == R("1/2"));
}

TEST_CASE("HJ constructions") {
    MLSpec e1(R("1"), {R("1")});
    MultiIndex idx(1, {1});
    auto g = hj_construction_G(e1, idx);
    CHECK(g.Qhat == LaurentPoly({ComplexRational(R("-1/2")), ComplexRational(R("5/4")), ComplexRational(R("-1/2"))}));
    auto f = hj_construction_F(e1, idx);
    CHECK(f.Qhat == ChebPoly({R("5/4"), R("-1")}));
    CHECK_THROWS_AS(hj_construction_G(e1, MultiIndex(0, {1})), IndexConditionViolated);
    auto z = hj_construction_G(e1, MultiIndex(2, {0}));
    CHECK(z.Qhat == LaurentPoly({ComplexRational(1)}));

    MLSpec two(R("1/2"), {R("1"), R("3")});
    for (long n = 2; n <= 3; ++n) {
        for (auto mv : std::vector<std::vector<long>>{{1, 1}, {2, 1}, {0, 2}}) {
            MultiIndex id(n, mv);
            auto c = hj_construction_G(two, id);
            CHECK(c.Qhat.degree() <= id.m());
            CHECK(c.Qhat.is_real());
            for (std::size_t j = 0; j < 2; ++j) {
                CHECK(c.Phat[j].degree() <= id.n_j(j));
                CHECK(c.Phat[j].is_real());
            }
        }
    }
}

TEST_CASE("HJ construction satisfies the HJ check for G") {
    MLSpec spec(R("1"), {R("1"), R("2")});
    MultiIndex idx(2, {1, 1});
    auto g = hj_construction_G(spec, idx);
    auto G = cosine_system_G(spec, 30);
    auto rep = check_trig_hermite_jacobi(g.Qhat, g.Phat, G, idx);
    CHECK(rep.all_hold());
    auto F = cheb_system_F(spec, 30);
    auto f = hj_construction_F(spec, idx);
    CHECK(check_nonlinear_hermite_chebyshev(f.Qhat, f.Phat, F, idx).all_hold());
}

TEST_CASE("alpha and the separation witness") {
    MLSpec e1(R("1"), {R("1")});
    MultiIndex idx(1, {1});
    CHECK(alpha_coeff(e1, idx, 0) == R("1/12"));
    auto w = separation_witness(e1, idx, 0);
    CHECK_FALSE(w.is_hp_pair);
    CHECK(w.first_nonzero_harmonic == 2);
    // The cos 2x coefficient of Qhat G - Phat is b_m a~ = 1/24, half of alpha.
    CHECK(w.measured_cos_coeff == R("1/24"));
    CHECK_FALSE(w.matches_alpha);

    MLSpec two(R("1"), {R("1"), R("2")});
    MultiIndex id2(2, {1, 1});
    CHECK(alpha_coeff(two, id2, 0) != 0);
    CHECK_FALSE(separation_witness(two, id2, 0).is_hp_pair);
}
