// Command-line front end: compute formula tables, run formula-vs-oracle
// verification campaigns, and check the generating-function identities.
// Exit codes: 0 all good, 1 verification mismatch (or integrity failure),
// 2 usage or budget error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "altcount/formulas.hpp"
#include "altcount/oracle.hpp"
#include "altcount/report.hpp"
#include "altcount/series.hpp"

namespace {

using altcount::BigNat;
using altcount::Composition;
namespace formulas = altcount::formulas;
namespace oracle = altcount::oracle;
namespace qcalc = altcount::qcalc;
namespace series = altcount::series;
using altcount::report::Row;
using altcount::report::RunReport;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct CommonFlags {
    std::string format = "json";
    std::string out_path;
};

int emit(RunReport& report, const CommonFlags& flags) {
    report.sort_rows();
    const std::string text = flags.format == "csv" ? report.to_csv() : report.to_json();
    if (flags.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(flags.out_path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open output file: " + flags.out_path);
        out << text;
    }
    std::cerr << report.command << ": " << report.rows.size() << " rows, "
              << report.total_wall_seconds() << " s\n";
    return report.all_match() ? 0 : 1;
}

int run_table(const std::string& formula, int n_max, std::optional<int> q, std::optional<int> c,
              const CommonFlags& flags) {
    const auto t0 = std::chrono::steady_clock::now();
    const formulas::SequenceTable tab = formulas::sequence_table(formula, n_max, q, c);
    RunReport report;
    report.command = "table";
    report.params = {{"formula", formula}, {"n-max", std::to_string(n_max)}};
    if (q)
        report.params.emplace_back("q", std::to_string(*q));
    if (c)
        report.params.emplace_back("c", std::to_string(*c));
    const double per_row =
        tab.values.empty() ? 0.0 : seconds_since(t0) / static_cast<double>(tab.values.size());
    for (std::size_t i = 0; i < tab.values.size(); ++i) {
        Row row;
        row.formula = tab.name;
        row.n = tab.n_min + static_cast<int>(i);
        row.q = tab.q;
        row.c = tab.c;
        row.value = altcount::to_string(tab.values[i]);
        row.wall_seconds = per_row;
        report.rows.push_back(std::move(row));
    }
    return emit(report, flags);
}

struct VerifyContext {
    int n_max = 0;
    std::optional<int> q;
    int c = 2;
    oracle::OracleConfig cfg;
    bool perturb = false;
    RunReport* report = nullptr;
};

int require_q(const VerifyContext& ctx, const char* scope) {
    if (!ctx.q)
        throw std::invalid_argument(std::string("scope '") + scope + "' requires --q");
    return *ctx.q;
}

void add_comparison(VerifyContext& ctx, Row row, const BigNat& value, const BigNat& oracle_value,
                    double wall) {
    const BigNat reported = ctx.perturb ? BigNat(value + 1) : value;
    row.value = altcount::to_string(reported);
    row.oracle = altcount::to_string(oracle_value);
    row.match = reported == oracle_value;
    row.wall_seconds = wall;
    ctx.report->rows.push_back(std::move(row));
}

void verify_census(VerifyContext& ctx) {
    const int q = require_q(ctx, "census");
    for (int m = 0; m <= ctx.n_max; ++m) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto census = oracle::subspace_census(m, q, ctx.cfg);
        BigNat total = 0;
        for (const auto& [d, cnt] : census)
            total += cnt;
        const double wall = seconds_since(t0) / static_cast<double>(census.size() + 1);
        for (const auto& [d, cnt] : census) {
            Row row{.formula = "gauss", .n = m, .c = d, .q = q};
            add_comparison(ctx, std::move(row), qcalc::gauss_binom(m, d, q), cnt, wall);
        }
        Row row{.formula = "galois", .n = m, .q = q};
        add_comparison(ctx, std::move(row), qcalc::galois_number(m, q), total, wall);
    }
}

void verify_decomp(VerifyContext& ctx) {
    const int q = require_q(ctx, "decomp");
    for (int n = 1; n <= ctx.n_max; ++n)
        for (int c = 1; c <= std::min(n, ctx.c); ++c)
            for (const Composition& parts : qcalc::compositions(n, c)) {
                const auto t0 = std::chrono::steady_clock::now();
                const auto decs =
                    oracle::enumerate_ordered_decompositions(n, parts, q, ctx.cfg.subspace_budget);
                std::ostringstream name;
                name << "decomp(";
                for (std::size_t i = 0; i < parts.parts().size(); ++i)
                    name << (i ? "+" : "") << parts.parts()[i];
                name << ")";
                Row row{.formula = name.str(), .n = n, .c = c, .q = q};
                add_comparison(ctx, std::move(row), qcalc::decomposition_count(n, parts, q),
                               BigNat(static_cast<unsigned long>(decs.size())),
                               seconds_since(t0));
            }
}

void verify_read(VerifyContext& ctx) {
    altcount::oracle::GraphBudget budget{.max_graphs = ctx.cfg.graph_budget,
                                         .max_graph_coloring_pairs = ctx.cfg.graph_budget,
                                         .jobs = ctx.cfg.jobs};
    for (int n = 0; n <= ctx.n_max; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        Row row{.formula = "read", .n = n, .c = ctx.c};
        add_comparison(ctx, std::move(row), formulas::read_colored(n, ctx.c),
                       oracle::count_colored_pairs(n, ctx.c, budget), seconds_since(t0));
    }
}

void verify_pairs(VerifyContext& ctx, const char* scope) {
    const int q = require_q(ctx, scope);
    const bool isotropic = std::string(scope) == "read-q";
    for (int n = 0; n <= ctx.n_max; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        const BigNat formula_value = isotropic ? formulas::read_q_isotropic(n, ctx.c, q)
                                               : formulas::ortho_q(n, ctx.c, q);
        const BigNat oracle_value = isotropic ? oracle::oracle_read_q(n, ctx.c, q, ctx.cfg)
                                              : oracle::oracle_ortho(n, ctx.c, q, ctx.cfg);
        Row row{.formula = scope, .n = n, .c = ctx.c, .q = q};
        add_comparison(ctx, std::move(row), formula_value, oracle_value, seconds_since(t0));
    }
}

void verify_nds(VerifyContext& ctx) {
    const int q = require_q(ctx, "nds");
    for (int n = 0; n <= ctx.n_max; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        Row row{.formula = "nds", .n = n, .q = q};
        add_comparison(ctx, std::move(row), formulas::nds(n, q), oracle::oracle_nds(n, q, ctx.cfg),
                       seconds_since(t0));
    }
}

void verify_dis(VerifyContext& ctx) {
    const int q = require_q(ctx, "dis");
    for (int n = 2; n <= ctx.n_max; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        Row row{.formula = "dis", .n = n, .q = q};
        add_comparison(ctx, std::move(row), formulas::dis(n, q), oracle::oracle_dis(n, q, ctx.cfg),
                       seconds_since(t0));
    }
}

void verify_graph_counts(VerifyContext& ctx, const char* scope) {
    altcount::oracle::GraphBudget budget{.max_graphs = ctx.cfg.graph_budget,
                                         .max_graph_coloring_pairs = ctx.cfg.graph_budget,
                                         .jobs = ctx.cfg.jobs};
    const bool connected = std::string(scope) == "connected";
    for (int n = connected ? 1 : 0; n <= ctx.n_max; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        const BigNat formula_value =
            connected ? formulas::connected_graphs(n) : formulas::no_isolated_graphs(n);
        const BigNat oracle_value =
            connected ? oracle::count_connected(n, budget) : oracle::count_no_isolated(n, budget);
        Row row{.formula = scope, .n = n};
        add_comparison(ctx, std::move(row), formula_value, oracle_value, seconds_since(t0));
    }
}

int run_verify(const std::string& scopes_csv, VerifyContext ctx, const CommonFlags& flags) {
    RunReport report;
    report.command = "verify";
    report.params = {{"scope", scopes_csv}, {"n-max", std::to_string(ctx.n_max)}};
    if (ctx.q)
        report.params.emplace_back("q", std::to_string(*ctx.q));
    report.params.emplace_back("c", std::to_string(ctx.c));
    ctx.report = &report;

    std::stringstream ss(scopes_csv);
    std::string scope;
    while (std::getline(ss, scope, ',')) {
        if (scope == "census")
            verify_census(ctx);
        else if (scope == "decomp")
            verify_decomp(ctx);
        else if (scope == "read")
            verify_read(ctx);
        else if (scope == "read-q" || scope == "ortho-q")
            verify_pairs(ctx, scope.c_str());
        else if (scope == "nds")
            verify_nds(ctx);
        else if (scope == "dis")
            verify_dis(ctx);
        else if (scope == "connected" || scope == "no-isolated")
            verify_graph_counts(ctx, scope.c_str());
        else
            throw std::invalid_argument("unknown verify scope '" + scope + "'");
    }
    return emit(report, flags);
}

int run_series(int q, int order, const CommonFlags& flags) {
    const auto t0 = std::chrono::steady_clock::now();
    const series::RiddellReport rid = series::verify_riddell(q, order);
    RunReport report;
    report.command = "series";
    report.params = {{"q", std::to_string(q)}, {"order", std::to_string(order)}};
    const double per_row = seconds_since(t0) / static_cast<double>(order);
    for (const auto& r : rid.rows) {
        Row row;
        row.formula = "riddell";
        row.n = r.n;
        row.q = q;
        row.value = altcount::to_string(r.lhs);
        row.oracle = altcount::to_string(r.rhs);
        row.match = r.equal;
        row.wall_seconds = per_row;
        report.rows.push_back(std::move(row));
    }
    return emit(report, flags);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of alternating matrix spaces and labelled graphs"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string formula, scopes;
    int n_max = 0, order = 0, jobs = 0;
    int c_flag = 2;
    std::optional<int> q_opt, c_opt;
    std::uint64_t budget = 0;
    bool perturb = false;

    auto add_common = [&flags](CLI::App* cmd) {
        cmd->add_option("--format", flags.format, "Output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        cmd->add_option("--out", flags.out_path, "Write the report to this file");
    };

    CLI::App* table = app.add_subcommand("table", "Evaluate one formula for n = 0..n-max");
    table->add_option("formula", formula,
                      "One of: graphs, spaces, connected, no-isolated, nds, dis, read, "
                      "read-q, ortho-q, rooted")
        ->required();
    table->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::NonNegativeNumber);
    table->add_option("--q", q_opt, "Field size (1 selects the graph case)");
    table->add_option("--c", c_opt, "Number of decomposition parts / colors");
    add_common(table);

    CLI::App* verify = app.add_subcommand("verify", "Compare formulas against the brute-force oracle");
    verify->add_option("--scope", scopes,
                       "Comma-separated list of: census, decomp, read, read-q, ortho-q, nds, "
                       "dis, connected, no-isolated")
        ->required();
    verify->add_option("--n-max", n_max, "Largest n (ambient dimension for census)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--q", q_opt, "Field size (prime: 2, 3 or 5)");
    verify->add_option("--c", c_flag, "Parts/colors for read, read-q, ortho-q; cap for decomp")
        ->capture_default_str();
    verify->add_option("--jobs", jobs, "Oracle worker threads (0 = all cores)")
        ->capture_default_str();
    verify->add_option("--budget", budget, "Enumeration budget (objects per enumeration)");
    verify->add_flag("--perturb", perturb, "Offset formula values by one (mismatch-path check)")
        ->group("");
    add_common(verify);

    int series_q = 0;
    CLI::App* series_cmd = app.add_subcommand("series", "Check the generating-function identity");
    series_cmd->add_option("--q", series_q, "Field size (1 selects the graph identity)")
        ->required()
        ->check(CLI::PositiveNumber);
    series_cmd->add_option("--order", order, "Truncation order")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common(series_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*table)
            return run_table(formula, n_max, q_opt, c_opt, flags);
        if (*verify) {
            VerifyContext ctx;
            ctx.n_max = n_max;
            ctx.q = q_opt;
            ctx.c = c_flag;
            ctx.perturb = perturb;
            ctx.cfg.jobs = altcount::oracle::resolve_jobs(jobs);
            if (budget != 0) {
                ctx.cfg.subspace_budget = budget;
                ctx.cfg.graph_budget = budget;
            }
            return run_verify(scopes, std::move(ctx), flags);
        }
        return run_series(series_q, order, flags);
    } catch (const altcount::budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const altcount::integrity_error& e) {
        std::cerr << "integrity failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
