// bricard: command-line front end.
//
// Subcommands: build, eliminate, solve, verify, split, six, flex, mobility.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bricard/elim.hpp"
#include "bricard/flexcheck.hpp"
#include "bricard/model.hpp"
#include "bricard/parse.hpp"
#include "bricard/solver.hpp"

namespace {

using namespace bricard;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

SideAssignment load_sides(const std::string& path) {
    auto sides = SideAssignment::symbolic();
    if (path.empty()) return sides;
    for (const auto& [name, value] : parse_sides(read_file(path))) sides.set(name, value);
    return sides;
}

std::pair<double, double> parse_interval(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--interval", "expected a:b");
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
}

// "1x9" (freedom x count) or a comma list "1,1,1".
std::vector<int> parse_dof(const std::string& text) {
    std::vector<int> out;
    auto x = text.find('x');
    if (x != std::string::npos) {
        int f = std::stoi(text.substr(0, x));
        int n = std::stoi(text.substr(x + 1));
        out.assign(n, f);
        return out;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
    return out;
}

// ---------------------------------------------------------------------------

int cmd_build(const std::string& sides_path, const std::string& out_path) {
    auto eqs = build_equations(parameters_from_sides(load_sides(sides_path)));
    if (out_path.empty()) {
        for (const auto& eq : eqs) std::cout << eq.to_string() << "\n";
    } else {
        auto out = open_out(out_path);
        for (const auto& eq : eqs) out << eq.to_string() << "\n";
        std::cout << "3 equations -> " << out_path << "\n";
    }
    return 0;
}

int cmd_eliminate(const std::string& sides_path, const std::vector<std::string>& poly_paths,
                  const std::string& order_text, const std::string& out_path,
                  const std::string& report_path) {
    auto u = standard_universe();
    std::vector<Polynomial> system;
    if (poly_paths.empty()) {
        auto eqs = build_equations(parameters_from_sides(load_sides(sides_path)));
        system.assign(eqs.begin(), eqs.end());
    } else {
        for (const auto& path : poly_paths) {
            std::istringstream in(read_file(path));
            std::string line;
            while (std::getline(in, line))
                if (!line.empty() && line[0] != '#') system.push_back(parse_polynomial(line, u));
        }
    }
    std::vector<std::string> order;
    {
        std::istringstream in(order_text);
        std::string item;
        while (std::getline(in, item, ',')) order.push_back(item);
    }
    EliminationReport report = eliminate(std::move(system), order);
    auto out = open_out(out_path);
    out << report.result.to_string() << "\n";
    if (!report_path.empty()) {
        auto rep = open_out(report_path);
        rep << report.to_text();
    } else {
        std::cerr << report.to_text();
    }
    std::cout << "res: " << report.result.term_count() << " terms, degree "
              << report.result.degree_in("t1") << " in t1 -> " << out_path << "\n";
    return 0;
}

int cmd_solve(const std::string& poly_path, const std::string& var,
              const SearchConfig& config, const std::string& out_path, bool log_nodes) {
    auto u = standard_universe();
    Polynomial p = parse_polynomial(read_file(poly_path), u);
    SearchConfig cfg = config;
    if (log_nodes) cfg.log = &std::cerr;
    SolveStats stats;
    auto tables = solve(p, var, cfg, &stats);
    std::string text;
    for (const auto& t : tables) text += t.to_string() + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        open_out(out_path) << text;
    }
    std::cout << tables.size() << " tables (" << stats.suppressed_split
              << " suppressed as split, " << stats.suppressed_degenerate
              << " as degenerate)\n";
    return 0;
}

int cmd_verify(const std::string& poly_path, const std::string& table_path) {
    auto u = standard_universe();
    Polynomial p = parse_polynomial(read_file(poly_path), u);
    SolutionTable table = parse_table(read_file(table_path), u);
    VerifyResult v = verify_table(p, table);
    if (v.zero) {
        std::cout << "ZERO\n";
        return 0;
    }
    std::cout << "NONZERO (residual " << v.residual.term_count() << " terms)\n";
    return 1;
}

int cmd_split(const std::string& sides_path, int equation) {
    auto params = parameters_from_sides(load_sides(sides_path));
    for (int eq = 1; eq <= 3; ++eq) {
        if (equation != 0 && equation != eq) continue;
        for (const auto& row : classify_split(params, eq)) {
            std::cout << "equation " << row.equation << ": " << row.zero_pair[0] << " = "
                      << row.zero_pair[1] << " = 0\n";
            for (const auto& r : row.side_relations)
                std::cout << "  " << r.target << " = " << r.rhs.to_string() << "\n";
            std::cout << "  F = " << row.F.to_string() << "\n";
            for (const auto& b : row.branches)
                std::cout << "  t = " << b.t.to_string()
                          << (b.degenerate ? "  (degenerate)" : "") << "\n";
        }
    }
    return 0;
}

int cmd_six(const std::string& sides_path, const std::string& signs_text, bool probe,
            const std::string& out_path) {
    std::array<int, 3> signs{1, 1, 1};
    if (!signs_text.empty()) {
        std::istringstream in(signs_text);
        std::string item;
        for (int& s : signs) {
            if (!std::getline(in, item, ',')) throw CLI::ValidationError("--signs", "expected three of +1/-1");
            s = std::stoi(item);
        }
    }
    auto six = six_system(load_sides(sides_path), signs);
    std::string text;
    if (probe) {
        text = probe_polynomial(six).to_string() + "\n";
    } else {
        for (const auto& p : six) text += p.to_string() + "\n";
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        open_out(out_path) << text;
        std::cout << (probe ? "probe polynomial" : "6 polynomials") << " -> " << out_path
                  << "\n";
    }
    return 0;
}

int cmd_flex(const std::string& table_path, const std::string& sides_path,
             const std::string& interval_text, int samples, const std::string& format,
             const std::string& out_path) {
    auto u = standard_universe();
    SolutionTable table = parse_table(read_file(table_path), u);
    std::map<std::string, double> free_values;
    for (const auto& [name, value] : parse_sides(read_file(sides_path)))
        free_values[name] = value.get_d();
    FlexTrace trace = sweep(table, free_values, parse_interval(interval_text), samples);

    double max_res = 0;
    for (const auto& s : trace.samples)
        max_res = std::max({max_res, s.residuals[0], s.residuals[1], s.residuals[2]});
    auto cosine = cosine_relation_check(trace);
    auto rank = rank_check(trace);
    std::cout << trace.samples.size() << " samples, " << (trace.split ? "split" : "non-split")
              << ", max residual " << max_res << ", cosine "
              << (cosine.asserted ? (cosine.pass ? "pass" : "FAIL") : "not asserted")
              << ", rank3 " << rank.rank3 << "/" << rank.samples << "\n";
    if (!out_path.empty()) {
        emit_frames(trace, format, out_path);
        std::cout << format << " -> " << out_path << "\n";
    }
    return cosine.pass && rank.pass ? 0 : 1;
}

int cmd_mobility(int members, int joints, const std::string& dof_text) {
    std::cout << "M = " << mobility(members, joints, parse_dof(dof_text)) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bricard three-quadrilateral linkage toolkit"};
    app.require_subcommand(1);

    std::string sides_path, out_path, report_path, poly_path, table_path;
    std::vector<std::string> poly_paths;
    std::string order_text = "t3,t2", var = "t", signs_text, format = "csv";
    std::string interval_text = "0.2:1";
    int equation = 0, samples = 100, members = 7, joints = 9;
    std::string dof_text = "1x9";
    bool probe = false, log_nodes = false;
    SearchConfig config;
    unsigned threads = 1;

    auto* build = app.add_subcommand("build", "emit Eqs. (1)-(3)");
    build->add_option("--sides", sides_path, "side value file");
    build->add_option("--out", out_path, "output file");

    auto* elim = app.add_subcommand("eliminate", "run the resultant pipeline");
    elim->add_option("--sides", sides_path, "side value file");
    elim->add_option("--poly", poly_paths, "system files (default: Eqs. (1)-(3))");
    elim->add_option("--order", order_text, "elimination order (default t3,t2)");
    elim->add_option("--out", out_path, "result file")->required();
    elim->add_option("--report", report_path, "elimination report file");

    auto* solve_cmd = app.add_subcommand("solve", "coefficient-killing search");
    solve_cmd->add_option("--poly", poly_path, "polynomial file")->required();
    solve_cmd->add_option("--var", var, "search variable (default t)");
    solve_cmd->add_option("--max-depth", config.max_depth, "search depth limit");
    solve_cmd->add_option("--branch-limit", config.branch_limit, "per-node branch limit");
    solve_cmd->add_option("--threads", threads, "worker threads");
    solve_cmd->add_flag("--suppress-splits", config.suppress_splits, "drop split tables");
    solve_cmd->add_flag("--suppress-degenerate", config.suppress_degenerate,
                        "drop degenerate tables");
    solve_cmd->add_flag("--log", log_nodes, "stream one line per search node to stderr");
    solve_cmd->add_option("--out", out_path, "table file (default stdout)");

    auto* verify = app.add_subcommand("verify", "table against polynomial");
    verify->add_option("--poly", poly_path, "polynomial file")->required();
    verify->add_option("--table", table_path, "table file")->required();

    auto* split = app.add_subcommand("split", "section-4 classification");
    split->add_option("--sides", sides_path, "side value file");
    split->add_option("--equation", equation, "equation 1..3 (default all)");

    auto* six = app.add_subcommand("six", "Eq. (23) system / Eq. (24) probe");
    six->add_option("--sides", sides_path, "side value file");
    six->add_option("--signs", signs_text, "cosine signs, e.g. 1,-1,1");
    six->add_flag("--probe", probe, "emit the probe polynomial (24)");
    six->add_option("--out", out_path, "output file");

    auto* flex = app.add_subcommand("flex", "numeric sweep of a table");
    flex->add_option("--table", table_path, "table file")->required();
    flex->add_option("--sides", sides_path, "free side values")->required();
    flex->add_option("--interval", interval_text, "t1 interval a:b");
    flex->add_option("--samples", samples, "sample count (default 100)");
    flex->add_option("--format", format, "csv or svg");
    flex->add_option("--out", out_path, "csv file or svg directory");

    auto* mob = app.add_subcommand("mobility", "planar mobility count");
    mob->add_option("--members", members, "member count");
    mob->add_option("--joints", joints, "joint count");
    mob->add_option("--dof", dof_text, "joint freedoms, e.g. 1x9 or 1,1,...");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return cmd_build(sides_path, out_path);
        if (elim->parsed())
            return cmd_eliminate(sides_path, poly_paths, order_text, out_path, report_path);
        if (solve_cmd->parsed()) {
            config.threads = threads;
            return cmd_solve(poly_path, var, config, out_path, log_nodes);
        }
        if (verify->parsed()) return cmd_verify(poly_path, table_path);
        if (split->parsed()) return cmd_split(sides_path, equation);
        if (six->parsed()) return cmd_six(sides_path, signs_text, probe, out_path);
        if (flex->parsed())
            return cmd_flex(table_path, sides_path, interval_text, samples, format, out_path);
        if (mob->parsed()) return cmd_mobility(members, joints, dof_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
