#include "hpade/cli/app.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hpade/cli/report.hpp"

namespace hpade::cli {

namespace {

std::vector<long> parse_m_vec(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("cannot read --m '" + text + "' (expected comma separated integers)");
        }
    }
    if (out.empty()) throw ParseError("--m is empty");
    return out;
}

std::vector<Rational> parse_variant(const std::string& text) {
    std::vector<Rational> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write '" + path + "'");
    f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct Common {
    std::string input;
    std::string kind;
    std::optional<long> order;
    double tol = 1e-9;
    long grid = 4096;
    bool canonical = false;
    std::string out;

    std::optional<SeriesKind> kind_override() const {
        if (kind.empty()) return std::nullopt;
        return parse_kind(kind);
    }
    RunOptions options() const {
        if (order && *order < 0) throw ParseError("--order must be nonnegative");
        if (!(tol > 0)) throw ParseError("--tol must be positive");
        if (grid < 16) throw ParseError("--grid must be at least 16");
        return RunOptions{order, tol, grid, canonical};
    }
};

void add_common(CLI::App* cmd, Common& c, const char* input_desc) {
    cmd->add_option("input", c.input, input_desc)->required();
    cmd->add_option("--kind", c.kind, "Read explicit series as power, trig or cheb");
    cmd->add_option("--order", c.order, "Series order K used for generators");
    cmd->add_option("--tol", c.tol, "Tolerance for floating-point checks");
    cmd->add_option("--grid", c.grid, "Grid size for the denominator nonvanishing certificate");
    cmd->add_flag("--canonical", c.canonical, "Omit timings so the output is byte-reproducible");
    cmd->add_option("--out", c.out, "Output file (default stdout)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Hermite-Pade approximants for power, trigonometric and Chebyshev series", "hpade"};
    app.require_subcommand(1);

    Common solve_c;
    long solve_n = 0;
    std::string solve_m;
    auto* solve = app.add_subcommand("solve", "Solve for one multi-index and write a JSON report");
    add_common(solve, solve_c, "System JSON file");
    solve->add_option("--n", solve_n, "Degree parameter n")->required();
    solve->add_option("--m", solve_m, "Comma separated m_1,...,m_k")->required();

    Common check_c;
    long check_n = 0;
    std::string check_m;
    auto* check = app.add_subcommand("check-hj", "Solve and report only the Hermite-Jacobi checks");
    add_common(check, check_c, "System JSON file");
    check->add_option("--n", check_n, "Degree parameter n")->required();
    check->add_option("--m", check_m, "Comma separated m_1,...,m_k")->required();

    Common scan_c;
    long n_max = 0, m_max = 0;
    std::string csv_path;
    auto* scan = app.add_subcommand("scan", "Normality over the box 0 <= n <= n-max, 0 <= m_j <= m-max");
    add_common(scan, scan_c, "System JSON file");
    scan->add_option("--n-max", n_max, "Largest n")->required();
    scan->add_option("--m-max", m_max, "Largest m_j")->required();
    scan->add_option("--csv", csv_path, "Also write the table as CSV");

    std::string eval_report_path, eval_out, eval_variant, plot_path;
    std::size_t eval_j = 1;
    long plot_points = 512;
    std::vector<std::string> points;
    auto* eval = app.add_subcommand("eval", "Evaluate P_j/Q from a solve report");
    eval->add_option("report", eval_report_path, "Report written by solve")->required();
    eval->add_option("points", points, "Points: rationals, or multiples of pi such as pi/2 for trig reports");
    eval->add_option("--j", eval_j, "Component, 1-based");
    eval->add_option("--variant", eval_variant, "Comma separated coefficients of the basis vectors");
    eval->add_option("--plot", plot_path, "Write a CSV of the approximant against the truncated series");
    eval->add_option("--plot-points", plot_points, "Number of plot samples");
    eval->add_option("--out", eval_out, "Output file (default stdout)");

    auto* fam = app.add_subcommand("families", "Built-in series generators");
    auto* fam_list = fam->add_subcommand("list", "List the generator families");
    fam->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (solve->parsed()) {
            RunOptions o = solve_c.options();
            SystemFile sys = load_system(solve_c.input, solve_c.kind_override());
            SolveOutcome r = solve_report(sys, MultiIndex(solve_n, parse_m_vec(solve_m)), o);
            write_text(solve_c.out, dump(r.report), out);
            if (r.degenerate) {
                err << "hpade: degenerate index (" << (sys.kind == SeriesKind::power ? "solution not unique" : "not weakly normal")
                    << ")\n";
                return kDegenerate;
            }
            return kOk;
        }
        if (check->parsed()) {
            RunOptions o = check_c.options();
            SystemFile sys = load_system(check_c.input, check_c.kind_override());
            SolveOutcome r = solve_report(sys, MultiIndex(check_n, parse_m_vec(check_m)), o);
            Json rep = check_hj_report(r);
            write_text(check_c.out, dump(rep), out);
            const Json& hj = rep.at("hj");
            bool holds = hj.value("status", "") == "ok";
            if (holds) {
                for (const auto& h : hj.at("holds")) holds = holds && h.get<bool>();
            }
            return holds ? kOk : kFailure;
        }
        if (scan->parsed()) {
            RunOptions o = scan_c.options();
            if (n_max < 0 || m_max < 0) throw ParseError("--n-max and --m-max must be nonnegative");
            SystemFile sys = load_system(scan_c.input, scan_c.kind_override());
            Json rep = scan_report(sys, n_max, m_max, o);
            write_text(scan_c.out, dump(rep), out);
            if (!csv_path.empty()) write_text(csv_path, scan_csv(rep), out);
            return kOk;
        }
        if (eval->parsed()) {
            if (eval_j < 1) throw ParseError("--j is 1-based");
            std::ifstream in(eval_report_path);
            if (!in) throw ParseError("cannot open '" + eval_report_path + "'");
            Json report;
            try {
                report = Json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw ParseError("'" + eval_report_path + "': " + e.what());
            }
            EvalRequest req;
            req.j = eval_j - 1;
            req.variant = parse_variant(eval_variant);
            req.points = points;
            req.plot_points = plot_path.empty() ? 0 : plot_points;
            if (!plot_path.empty() && plot_points < 2) throw ParseError("--plot-points must be at least 2");
            EvalOutcome r = eval_report(report, req);
            write_text(eval_out, dump(r.table), out);
            if (!plot_path.empty()) write_text(plot_path, r.plot_csv, out);
            return kOk;
        }
        if (fam_list->parsed()) {
            out << dump(families_report());
            return kOk;
        }
    } catch (const ParseError& e) {
        err << "hpade: " << e.what() << "\n";
        return kParseError;
    } catch (const InsufficientOrder& e) {
        err << "hpade: " << e.what() << "\n";
        return kInsufficientOrder;
    } catch (const nlohmann::json::exception& e) {
        err << "hpade: malformed input: " << e.what() << "\n";
        return kParseError;
    } catch (const std::exception& e) {
        err << "hpade: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}

}  // namespace hpade::cli
