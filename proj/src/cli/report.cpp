#include "hpade/cli/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hpade::cli {

namespace {

using Clock = std::chrono::steady_clock;
using hpade::to_string;
using cli::to_string;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Json rat(const Rational& x) { return to_string(x); }
Json cplx(const ComplexRational& z) { return to_string(z); }

Json poly_json(const Poly<Rational>& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(rat(c));
    return a;
}

Json vec_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(rat(c));
    return a;
}

Json laurent_json(const LaurentPoly& u) {
    Json a = Json::array();
    for (const auto& c : u.coeffs()) a.push_back(cplx(c));
    return Json{{"min_index", -u.bound()}, {"coeffs", a}};
}

Json cheb_json(const ChebPoly& p) { return vec_json(p.coeffs()); }

Json opt_long(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

Json certificate_json(const GridCertificate& c) {
    return Json{{"grid", c.grid},
                {"min_abs", c.min_abs},
                {"max_abs", c.max_abs},
                {"threshold", c.threshold},
                {"nonvanishing", c.nonvanishing}};
}

Json hj_json(const HJReport& r) {
    Json out{{"status", "ok"}, {"window", r.window}, {"exact", r.exact}};
    Json holds = Json::array(), comps = Json::array();
    for (const auto& c : r.components) {
        holds.push_back(c.holds);
        Json cj{{"holds", c.holds},
                {"first_bad_order", opt_long(c.first_bad_order)},
                {"mismatch_order", opt_long(c.mismatch_order)},
                {"expandable", c.expandable}};
        if (!r.exact) cj["max_deviation"] = c.max_deviation;
        comps.push_back(cj);
    }
    out["holds"] = holds;
    out["components"] = comps;
    if (r.certificate) out["certificate"] = certificate_json(*r.certificate);
    if (!r.exact) out["samples"] = r.samples;
    return out;
}

Json vanishing_json(const GridCertificate& cert, const std::string& what) {
    return Json{{"status", "denominator_vanishes"}, {"message", what}, {"certificate", certificate_json(cert)}};
}

/// s with a = s b for the first coordinate where b is nonzero, checked on all coordinates.
std::optional<ComplexRational> scale_between(const std::vector<ComplexRational>& a,
                                             const std::vector<ComplexRational>& b) {
    std::optional<ComplexRational> s;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (!b[i].is_zero()) {
            s = a[i] / b[i];
            break;
        }
    }
    if (!s) return std::nullopt;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        ComplexRational ai = i < a.size() ? a[i] : ComplexRational();
        ComplexRational bi = i < b.size() ? b[i] : ComplexRational();
        if (!(ai == *s * bi)) return std::nullopt;
    }
    return s;
}

std::vector<ComplexRational> as_complex(const std::vector<Rational>& v) {
    return {v.begin(), v.end()};
}

Json index_json(const MultiIndex& idx) {
    Json nj = Json::array();
    for (std::size_t j = 0; j < idx.k(); ++j) nj.push_back(idx.n_j(j));
    return Json{{"n", idx.n()}, {"m_vec", idx.m_vec()}, {"m", idx.m()}, {"n_j", nj}};
}

bool satisfies(const MultiIndex& idx, long shift) {
    return std::all_of(idx.m_vec().begin(), idx.m_vec().end(), [&](long mj) { return idx.n() >= mj - shift; });
}

Json trig_tail(const TrigSeries& r, long from) {
    Json pos = Json::array(), neg = Json::array();
    for (long l = from; l <= r.order(); ++l) {
        pos.push_back(cplx(r.at(l)));
        neg.push_back(cplx(r.at(-l)));
    }
    return Json{{"from", from}, {"to", std::max(r.order(), from - 1)}, {"positive", pos}, {"negative", neg}};
}

Json power_tail(const PowerSeries& r, long from) {
    Json c = Json::array();
    for (long i = from; i <= r.order(); ++i) c.push_back(rat(r.at(i)));
    return Json{{"from", from}, {"to", std::max(r.order(), from - 1)}, {"coeffs", c}};
}

Json cheb_tail(const ChebSeries& r, long from) {
    Json c = Json::array();
    for (long i = from; i <= r.order(); ++i) c.push_back(rat(r.at(i)));
    return Json{{"from", from}, {"to", std::max(r.order(), from - 1)}, {"coeffs", c}};
}

void solve_power(const SystemFile& file, const LoadedSystem& sys, const MultiIndex& idx, const RunOptions& opts,
                 SolveOutcome& out, Json& timings) {
    Json& rep = out.report;
    auto t0 = Clock::now();
    HPSolution sol = solve_problem_A(sys.power, idx);
    timings["solve_ms"] = ms_since(t0);
    JacobiCriterion jc = jacobi_criterion(sys.power, idx);
    rep["normality"] = Json{{"matrix_rank", idx.m() + 1 - sol.basis_dim},
                            {"nullity", sol.basis_dim},
                            {"unique", sol.unique},
                            {"block_hadamard_det", rat(jc.det)},
                            {"jacobi_guaranteed", jc.guaranteed}};
    Json P = Json::array(), res = Json::array(), basis = Json::array();
    for (const auto& p : sol.P) P.push_back(poly_json(p));
    for (const auto& r : sol.residual) res.push_back(power_tail(r, idx.n() + idx.m() + 1));
    for (const auto& b : sol.basis) basis.push_back(vec_json(b));
    rep["solution"] = Json{{"normalization", "lowest-degree nonzero coefficient of Q equals 1"},
                           {"unique", sol.unique},
                           {"basis_dim", sol.basis_dim},
                           {"Q", poly_json(sol.Q)},
                           {"P", P},
                           {"residual", res},
                           {"basis", basis}};
    out.degenerate = !sol.unique;
    t0 = Clock::now();
    rep["hj"] = hj_json(check_hermite_jacobi(sol, sys.power, idx));
    timings["hj_ms"] = ms_since(t0);

    if (file.generator) {
        const MLSpec& spec = file.generator->spec;
        Json cf{{"family", file.generator->family}};
        if (satisfies(idx, 1)) {
            Poly<Rational> Q = closed_form_Q(spec, idx);
            Rational q0 = sol.Q.coeff(0);
            bool match = q0 != 0 && sol.Q * (Rational(1) / q0) == Q;
            Json lead = Json::array();
            for (std::size_t j = 0; j < idx.k(); ++j) lead.push_back(rat(residual_leading_coeff(spec, idx, j)));
            cf["applicable"] = true;
            cf["Q"] = poly_json(Q);
            cf["matches_solver"] = match;
            cf["residual_leading_coeff"] = lead;
        } else {
            cf["applicable"] = false;
            cf["reason"] = "needs n >= m_j - 1 for every j";
        }
        rep["closed_form"] = cf;
    }
    (void)opts;
}

Json separation_json(const SystemFile& file, const MultiIndex& idx, const RunOptions& opts, bool cheb_side) {
    const MLSpec& spec = file.generator->spec;
    Json sep{{"family", file.generator->family}};
    if (idx.zero() || !satisfies(idx, 0)) {
        sep["applicable"] = false;
        sep["reason"] = idx.zero() ? "m = 0" : "needs n >= m_j for every j";
        return sep;
    }
    sep["applicable"] = true;
    long K = 2 * (idx.n() + idx.m()) + 8;
    if (opts.order) K = std::max(K, *opts.order);
    Json construction;
    bool hj_holds = false;
    if (cheb_side) {
        auto c = hj_construction_F(spec, idx);
        Json P = Json::array();
        for (const auto& p : c.Phat) P.push_back(cheb_json(p));
        construction = Json{{"Qhat", cheb_json(c.Qhat)}, {"Phat", P}};
        ChebHJOptions o{opts.tol, opts.grid};
        try {
            auto r = check_nonlinear_hermite_chebyshev(c.Qhat, c.Phat, cheb_system_F(spec, K), idx, o);
            hj_holds = r.all_hold();
            construction["hj"] = hj_json(r);
        } catch (const DenominatorVanishes& e) {
            construction["hj"] = vanishing_json(trig_grid_certificate(c.Qhat.to_cosine(), opts.grid, o.vanish_threshold), e.what());
        }
    } else {
        auto c = hj_construction_G(spec, idx);
        Json P = Json::array();
        for (const auto& p : c.Phat) P.push_back(laurent_json(p));
        construction = Json{{"Qhat", laurent_json(c.Qhat)}, {"Phat", P}};
        TrigHJOptions o{opts.tol, opts.grid};
        try {
            auto r = check_trig_hermite_jacobi(c.Qhat, c.Phat, cosine_system_G(spec, K), idx, o);
            hj_holds = r.all_hold();
            construction["hj"] = hj_json(r);
        } catch (const DenominatorVanishes& e) {
            construction["hj"] = vanishing_json(trig_grid_certificate(c.Qhat, opts.grid, o.vanish_threshold), e.what());
        }
    }
    sep["hj_construction"] = construction;
    Json comps = Json::array();
    bool differs = false;
    for (std::size_t j = 0; j < idx.k(); ++j) {
        auto w = separation_witness(spec, idx, j);
        differs = differs || !w.is_hp_pair;
        comps.push_back(Json{{"alpha", rat(w.alpha)},
                             {"residual_leading_coeff", rat(residual_leading_coeff(spec, idx, j))},
                             {"measured_cos_coeff", rat(w.measured_cos_coeff)},
                             {"first_nonzero_harmonic", w.first_nonzero_harmonic},
                             {"is_hp_pair", w.is_hp_pair},
                             {"matches_alpha", w.matches_alpha}});
    }
    sep["alpha"] = comps.empty() ? Json(nullptr) : comps[0]["alpha"];
    sep["components"] = comps;
    if (cheb_side) sep["witness_computed_on"] = "cosine transplant G";
    sep["separation"] = hj_holds && differs;
    return sep;
}

void solve_trig(const SystemFile& file, const LoadedSystem& sys, const MultiIndex& idx, const RunOptions& opts,
                SolveOutcome& out, Json& timings) {
    Json& rep = out.report;
    auto t0 = Clock::now();
    TrigHPSolution sol = solve_problem_At(sys.trig, idx);
    timings["solve_ms"] = ms_since(t0);
    long m = idx.m();
    rep["normality"] = Json{{"rank", sol.rank},
                            {"required_rank", 2 * m},
                            {"full_rank", sol.unique},
                            {"nullity", static_cast<long>(sol.basis.size())}};
    Json P = Json::array(), res = Json::array(), basis = Json::array(), params = Json::array();
    for (const auto& p : sol.approx.P) P.push_back(laurent_json(p));
    for (const auto& r : sol.approx.residual) res.push_back(trig_tail(r, idx.n() + m + 1));
    for (const auto& b : sol.basis) basis.push_back(laurent_json(LaurentPoly(b)));
    for (long p : sol.parameters) params.push_back("u_" + std::to_string(p));
    rep["solution"] = Json{
        {"normalization", sol.unique ? "first nonzero of u_-m..u_m equals 1"
                                     : "basis vector i sets parameter i to 1 and the other parameters to 0"},
        {"unique", sol.unique},
        {"basis_dim", static_cast<long>(sol.basis.size())},
        {"Q", laurent_json(sol.approx.Q)},
        {"P", P},
        {"residual", res},
        {"parameters", params},
        {"basis", basis}};
    out.degenerate = !sol.unique;

    t0 = Clock::now();
    DeterminantSolution det = determinant_formulas(sys.trig, idx);
    timings["determinant_ms"] = ms_since(t0);
    Json dP = Json::array();
    for (const auto& p : det.approx.P) dP.push_back(laurent_json(p));
    auto s = det.degenerate ? std::nullopt : scale_between(det.approx.Q.coeffs(), sol.approx.Q.coeffs());
    rep["determinant_formula"] = Json{{"degenerate", det.degenerate},
                                      {"Q", laurent_json(det.approx.Q)},
                                      {"P", dP},
                                      {"scale_to_nullspace", s ? cplx(*s) : Json(nullptr)}};

    t0 = Clock::now();
    TrigHJOptions o{opts.tol, opts.grid};
    try {
        rep["hj"] = hj_json(check_trig_hermite_jacobi(sol.approx.Q, sol.approx.P, sys.trig, idx, o));
    } catch (const DenominatorVanishes& e) {
        rep["hj"] = vanishing_json(trig_grid_certificate(sol.approx.Q, opts.grid, o.vanish_threshold), e.what());
    }
    rep["hj"]["certificate_note"] =
        "representability of P_j/Q by a trigonometric series is certified only by grid nonvanishing of Q";
    timings["hj_ms"] = ms_since(t0);

    if (file.generator) rep["separation"] = separation_json(file, idx, opts, false);
}

void solve_cheb(const SystemFile& file, const LoadedSystem& sys, const MultiIndex& idx, const RunOptions& opts,
                SolveOutcome& out, Json& timings) {
    Json& rep = out.report;
    auto t0 = Clock::now();
    ChebHPSolution sol = solve_problem_Ach(sys.cheb, idx);
    timings["solve_ms"] = ms_since(t0);
    long m = idx.m();
    rep["normality"] = Json{{"rank", sol.trig.rank},
                            {"required_rank", 2 * m},
                            {"weakly_normal", sol.weakly_normal},
                            {"solution_dim", sol.solution_dim},
                            {"unique", sol.unique}};
    Json P = Json::array(), res = Json::array(), basis = Json::array();
    for (const auto& p : sol.approx.P) P.push_back(cheb_json(p));
    for (const auto& r : sol.approx.residual) res.push_back(cheb_tail(r, idx.n() + m + 1));
    for (const auto& b : sol.basis) basis.push_back(vec_json(b));
    rep["solution"] = Json{{"normalization", "first nonzero Chebyshev coefficient of Q equals 1"},
                           {"unique", sol.unique},
                           {"basis_dim", sol.solution_dim},
                           {"Q", cheb_json(sol.approx.Q)},
                           {"P", P},
                           {"residual", res},
                           {"basis", basis},
                           {"evaluation_domain", "[-1, 1]; analytic continuation outside is not computed"}};
    out.degenerate = !sol.weakly_normal;
    if (sol.determinant_formula) {
        Json dP = Json::array();
        for (const auto& p : sol.determinant_formula->P) dP.push_back(cheb_json(p));
        auto s = scale_between(as_complex(sol.determinant_formula->Q.coeffs()), as_complex(sol.approx.Q.coeffs()));
        rep["determinant_formula"] = Json{{"degenerate", false},
                                          {"Q", cheb_json(sol.determinant_formula->Q)},
                                          {"P", dP},
                                          {"scale_to_nullspace", s ? cplx(*s) : Json(nullptr)}};
    } else {
        rep["determinant_formula"] = Json{{"degenerate", true}, {"Q", Json::array({"0"})}};
    }
    t0 = Clock::now();
    ChebHJOptions o{opts.tol, opts.grid};
    try {
        rep["hj"] = hj_json(check_nonlinear_hermite_chebyshev(sol.approx.Q, sol.approx.P, sys.cheb, idx, o));
    } catch (const DenominatorVanishes& e) {
        rep["hj"] = vanishing_json(trig_grid_certificate(sol.approx.Q.to_cosine(), opts.grid, o.vanish_threshold), e.what());
    }
    timings["hj_ms"] = ms_since(t0);

    if (file.generator) rep["separation"] = separation_json(file, idx, opts, true);
}

}  // namespace

long default_order(long n, long m) { return 2 * (n + m) + 8; }

SolveOutcome solve_report(const SystemFile& file, const MultiIndex& idx, const RunOptions& opts) {
    if (idx.k() != file.k()) {
        throw ParseError("multi-index has " + std::to_string(idx.k()) + " components but the system has " +
                         std::to_string(file.k()) + " series");
    }
    LoadedSystem sys = file.materialize(opts.order, default_order(idx.n(), idx.m()));
    SolveOutcome out;
    Json& rep = out.report;
    rep["tool"] = "hpade";
    rep["command"] = "solve";
    rep["kind"] = to_string(file.kind);
    rep["index"] = index_json(idx);
    Json input{{"k", static_cast<long>(sys.k())}, {"order", sys.order()}, {"system", file.raw}};
    if (!file.metadata.is_null()) input["metadata"] = file.metadata;
    rep["input"] = input;
    Json timings = Json::object();
    switch (file.kind) {
        case SeriesKind::power: solve_power(file, sys, idx, opts, out, timings); break;
        case SeriesKind::trig: solve_trig(file, sys, idx, opts, out, timings); break;
        case SeriesKind::cheb: solve_cheb(file, sys, idx, opts, out, timings); break;
    }
    rep["degenerate_index"] = out.degenerate;
    if (!opts.canonical) rep["timings"] = timings;
    return out;
}

Json scan_report(const SystemFile& file, long n_max, long m_max, const RunOptions& opts) {
    long k = static_cast<long>(file.k());
    LoadedSystem sys = file.materialize(opts.order, default_order(n_max, k * m_max));
    Json rows = Json::array();
    long degenerate = 0;
    for (const auto& idx : index_box(file.k(), n_max, m_max)) {
        Json row{{"n", idx.n()}, {"m_vec", idx.m_vec()}};
        bool ok = true;
        switch (file.kind) {
            case SeriesKind::power: {
                HPSolution sol = solve_problem_A(sys.power, idx);
                JacobiCriterion jc = jacobi_criterion(sys.power, idx);
                row["rank"] = idx.m() + 1 - sol.basis_dim;
                row["nullity"] = sol.basis_dim;
                row["unique"] = sol.unique;
                row["det"] = rat(jc.det);
                row["det_zero"] = !jc.guaranteed;
                bool exact_deg = sol.Q.degree() == idx.m(), coprime = true;
                for (std::size_t j = 0; j < idx.k(); ++j) {
                    if (sol.P[j].degree() != idx.n_j(j)) exact_deg = false;
                    if (gcd(sol.Q, sol.P[j]).degree() != 0) coprime = false;
                }
                row["exact_degrees"] = exact_deg;
                row["coprime"] = coprime;
                row["quite_perfect_cell"] = sol.unique && exact_deg && coprime;
                ok = sol.unique;
                break;
            }
            case SeriesKind::trig:
            case SeriesKind::cheb: {
                TrigSystem T = file.kind == SeriesKind::trig ? sys.trig : to_cosine_system(sys.cheb);
                long r = static_cast<long>(rank(build_Ht(T, idx).matrix));
                row["rank"] = r;
                row["required_rank"] = 2 * idx.m();
                row["nullity"] = 2 * idx.m() + 1 - r;
                row["full_rank"] = r == 2 * idx.m();
                ok = r == 2 * idx.m();
                break;
            }
        }
        row["degenerate"] = !ok;
        if (!ok) ++degenerate;
        rows.push_back(row);
    }
    Json rep{{"tool", "hpade"},
             {"command", "scan"},
             {"kind", to_string(file.kind)},
             {"box", Json{{"n_max", n_max}, {"m_max", m_max}}},
             {"order", sys.order()},
             {"rows", rows}};
    rep["summary"] = Json{{"cells", static_cast<long>(rows.size())},
                          {"degenerate_cells", degenerate},
                          {file.kind == SeriesKind::power ? "unique_in_box" : "weakly_perfect_in_box", degenerate == 0}};
    return rep;
}

std::string scan_csv(const Json& scan) {
    std::ostringstream os;
    bool power = scan.at("kind") == "power";
    os << "n,m_vec,rank,nullity," << (power ? "unique,det,quite_perfect_cell" : "full_rank") << ",degenerate\n";
    for (const auto& r : scan.at("rows")) {
        os << r.at("n").get<long>() << ",\"";
        bool first = true;
        for (const auto& v : r.at("m_vec")) {
            os << (first ? "" : " ") << v.get<long>();
            first = false;
        }
        os << "\"," << r.at("rank").get<long>() << "," << r.at("nullity").get<long>() << ",";
        if (power) {
            os << r.at("unique").get<bool>() << "," << r.at("det").get<std::string>() << ","
               << r.at("quite_perfect_cell").get<bool>();
        } else {
            os << r.at("full_rank").get<bool>();
        }
        os << "," << r.at("degenerate").get<bool>() << "\n";
    }
    return os.str();
}

Json check_hj_report(const SolveOutcome& solved) {
    const Json& r = solved.report;
    Json out{{"tool", "hpade"}, {"command", "check-hj"}, {"kind", r.at("kind")}, {"index", r.at("index")},
             {"hj", r.at("hj")}};
    if (r.contains("separation") && r.at("separation").value("applicable", false)) {
        out["hj_construction"] = r.at("separation").at("hj_construction").at("hj");
        out["separation"] = r.at("separation").at("separation");
    }
    if (r.contains("timings")) out["timings"] = r.at("timings");
    return out;
}

namespace {

struct Point {
    std::string label;
    double x = 0.0;
    std::optional<Rational> rational;   // x itself, when rational
    std::optional<Rational> pi_multiple;  // x / pi, when given as a multiple of pi
};

Point parse_point(const std::string& text) {
    Point p;
    p.label = text;
    auto pos = text.find("pi");
    if (pos == std::string::npos) {
        p.rational = parse_rational(text);
        p.x = to_double(*p.rational);
        return p;
    }
    std::string coef = text.substr(0, pos);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    Rational c = coef.empty() || coef == "+" ? Rational(1) : coef == "-" ? Rational(-1) : parse_rational(coef);
    std::string rest = text.substr(pos + 2);
    if (!rest.empty()) {
        if (rest.front() != '/') throw ParseError("cannot read point '" + text + "'");
        c /= parse_rational(rest.substr(1));
    }
    p.pi_multiple = c;
    p.x = to_double(c) * std::numbers::pi;
    return p;
}

/// e^{i pi r} when 2r is an integer.
std::optional<ComplexRational> unit_point(const Rational& r) {
    Rational twice = 2 * r;
    if (denominator(twice) != 1) return std::nullopt;
    BigInt q = numerator(twice) % 4;
    if (q < 0) q += 4;
    switch (q.convert_to<int>()) {
        case 0: return ComplexRational(1);
        case 1: return ComplexRational::i();
        case 2: return ComplexRational(-1);
        default: return -ComplexRational::i();
    }
}

Rational cheb_exact(const ChebPoly& p, const Rational& x) {
    Rational t0 = 1, t1 = x, acc = 0;
    const auto& q = p.coeffs();
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (k == 0) {
            acc += q[0] * t0;
        } else if (k == 1) {
            acc += q[1] * t1;
        } else {
            Rational t2 = 2 * x * t1 - t0;
            t0 = t1;
            t1 = t2;
            acc += q[k] * t1;
        }
    }
    return acc;
}

Json value_json(const ComplexFloat& v) { return Json{{"re", v.real()}, {"im", v.imag()}}; }

template <class T>
std::vector<T> combine(const std::vector<std::vector<T>>& basis, const std::vector<Rational>& variant) {
    if (variant.empty()) return basis.at(0);
    if (variant.size() != basis.size()) {
        throw ParseError("variant has " + std::to_string(variant.size()) + " coefficients but the solution family has " +
                         std::to_string(basis.size()) + " basis vectors");
    }
    std::vector<T> out(basis.at(0).size(), T(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t c = 0; c < out.size(); ++c) out[c] += T(variant[i]) * basis[i][c];
    }
    return out;
}

std::vector<Rational> read_rationals(const Json& arr) {
    std::vector<Rational> out;
    for (const auto& v : arr) out.push_back(json_rational(v));
    return out;
}

std::vector<ComplexRational> read_laurent(const Json& obj) {
    std::vector<ComplexRational> out;
    for (const auto& v : obj.at("coeffs")) out.push_back(parse_complex_rational(v.get<std::string>()));
    return out;
}

}  // namespace

EvalOutcome eval_report(const Json& report, const EvalRequest& req) {
    if (!report.is_object() || !report.contains("solution") || !report.contains("input")) {
        throw ParseError("not a solve report (no solution)");
    }
    SeriesKind kind = parse_kind(report.at("kind").get<std::string>());
    const Json& ij = report.at("index");
    MultiIndex idx(ij.at("n").get<long>(), ij.at("m_vec").get<std::vector<long>>());
    SystemFile file = parse_system(report.at("input").at("system"), kind);
    LoadedSystem sys = file.materialize(report.at("input").at("order").get<long>(), 0);
    if (req.j >= idx.k()) throw ParseError("component index out of range");
    const Json& basis_json = report.at("solution").at("basis");

    std::function<ComplexFloat(double)> approx_f;
    std::function<ComplexFloat(double)> series_f;
    std::function<std::optional<ComplexRational>(const Point&)> exact_f;
    std::function<bool(const Point&)> in_domain = [](const Point&) { return true; };
    double lo = 0.0, hi = 2.0 * std::numbers::pi;

    switch (kind) {
        case SeriesKind::power: {
            std::vector<std::vector<Rational>> basis;
            for (const auto& b : basis_json) basis.push_back(read_rationals(b));
            Poly<Rational> Q(combine(basis, req.variant));
            auto sol = numerators_for(Q, sys.power, idx);
            Poly<Rational> P = sol.P[req.j];
            const PowerSeries f = sys.power.series[req.j];
            approx_f = [Q, P](double x) {
                double q = Q(x);
                if (q == 0.0) throw DenominatorVanishes("Q(x) = 0");
                return ComplexFloat(P(x) / q, 0.0);
            };
            series_f = [f](double x) {
                double s = 0.0;
                for (long l = f.order(); l >= 0; --l) s = s * x + to_double(f.at(l));
                return ComplexFloat(s, 0.0);
            };
            exact_f = [Q, P](const Point& p) -> std::optional<ComplexRational> {
                if (!p.rational) return std::nullopt;
                Rational q = Q(*p.rational);
                if (q == 0) throw DenominatorVanishes("Q(x) = 0");
                return ComplexRational(P(*p.rational) / q);
            };
            in_domain = [](const Point& p) { return p.rational.has_value(); };
            lo = -0.5;
            hi = 0.5;
            break;
        }
        case SeriesKind::trig: {
            std::vector<std::vector<ComplexRational>> basis;
            for (const auto& b : basis_json) basis.push_back(read_laurent(b));
            LaurentPoly Q(combine(basis, req.variant));
            auto t = trig_numerators_for(Q, sys.trig, idx);
            LaurentPoly P = t.P[req.j];
            const TrigSeries f = sys.trig.series[req.j];
            approx_f = [Q, P](double x) { return eval_trig_rational(Q, P, x); };
            series_f = [f](double x) {
                ComplexFloat s = 0.0;
                for (long l = -f.order(); l <= f.order(); ++l) s += to_complex_float(f.at(l)) * std::polar(1.0, l * x);
                return s;
            };
            exact_f = [Q, P](const Point& p) -> std::optional<ComplexRational> {
                std::optional<ComplexRational> z;
                if (p.pi_multiple) z = unit_point(*p.pi_multiple);
                if (!z && p.rational && *p.rational == 0) z = ComplexRational(1);
                if (!z) return std::nullopt;
                return eval_trig_rational(Q, P, *z);
            };
            break;
        }
        case SeriesKind::cheb: {
            std::vector<std::vector<Rational>> basis;
            for (const auto& b : basis_json) basis.push_back(read_rationals(b));
            ChebPoly Q(combine(basis, req.variant));
            auto c = cheb_numerators_for(Q, sys.cheb, idx);
            ChebPoly P = c.P[req.j];
            const ChebSeries f = sys.cheb.series[req.j];
            approx_f = [Q, P](double x) {
                double q = Q.eval(x);
                if (q == 0.0) throw DenominatorVanishes("Q(x) = 0");
                return ComplexFloat(P.eval(x) / q, 0.0);
            };
            series_f = [f](double x) {
                std::vector<Rational> a = f.coeffs();
                a[0] /= 2;
                return ComplexFloat(ChebPoly(a).eval(x), 0.0);
            };
            exact_f = [Q, P](const Point& p) -> std::optional<ComplexRational> {
                if (!p.rational) return std::nullopt;
                Rational q = cheb_exact(Q, *p.rational);
                if (q == 0) throw DenominatorVanishes("Q(x) = 0");
                return ComplexRational(cheb_exact(P, *p.rational) / q);
            };
            in_domain = [](const Point& p) { return p.x >= -1.0 && p.x <= 1.0; };
            lo = -1.0;
            hi = 1.0;
            break;
        }
    }

    EvalOutcome out;
    Json rows = Json::array();
    for (const auto& text : req.points) {
        Point p = parse_point(text);
        Json row{{"x", p.label}, {"x_value", p.x}};
        if (!in_domain(p)) {
            row["status"] = "outside_domain";
            rows.push_back(row);
            continue;
        }
        try {
            auto exact = exact_f(p);
            ComplexFloat v = exact ? to_complex_float(*exact) : approx_f(p.x);
            row["status"] = "ok";
            row["value"] = value_json(v);
            row["exact"] = exact ? cplx(*exact) : Json(nullptr);
        } catch (const DenominatorVanishes&) {
            row["status"] = "denominator_vanishes";
        }
        rows.push_back(row);
    }
    Json variant = Json::array();
    for (const auto& v : req.variant) variant.push_back(rat(v));
    out.table = Json{{"tool", "hpade"},
                     {"command", "eval"},
                     {"kind", to_string(kind)},
                     {"index", report.at("index")},
                     {"j", static_cast<long>(req.j) + 1},
                     {"variant", variant},
                     {"rows", rows}};

    if (req.plot_points > 0) {
        std::ostringstream os;
        os.precision(17);
        os << "x,re_f,re_pi,abs_error\n";
        long N = req.plot_points;
        for (long i = 0; i < N; ++i) {
            double x = kind == SeriesKind::trig ? lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(N)
                                                : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(N - 1 > 0 ? N - 1 : 1);
            ComplexFloat f = series_f(x);
            os << x << "," << f.real() << ",";
            try {
                ComplexFloat a = approx_f(x);
                os << a.real() << "," << std::abs(f - a) << "\n";
            } catch (const DenominatorVanishes&) {
                os << "nan,nan\n";
            }
        }
        out.plot_csv = os.str();
    }
    return out;
}

Json families_report() {
    Json list = Json::array();
    for (const auto& f : families()) {
        list.push_back(Json{{"family", f.name},
                            {"kind", to_string(f.kind)},
                            {"parameters", Json::array({"gamma", "lambdas", "order"})},
                            {"description", f.description}});
    }
    return Json{{"tool", "hpade"}, {"command", "families list"}, {"families", list}};
}

}  // namespace hpade::cli
