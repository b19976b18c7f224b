// Command-line front end: ingestion -> transforms -> unit-root tests ->
// cointegration estimates -> reports, plus simulation and Monte-Carlo
// subcommands. Every subcommand is deterministic given (config, seed).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "mdcoint/csv.hpp"
#include "mdcoint/format.hpp"
#include "mdcoint/montecarlo.hpp"
#include "mdcoint/report.hpp"
#include "mdcoint/simulate.hpp"
#include "mdcoint/transforms.hpp"
#include "mdcoint/unit_root.hpp"
#include "pipeline.hpp"

using namespace mdcoint;

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << content;
}

AlignedPanel load_or_build_panel(const Config& cfg, const std::string& panel_path) {
    if (!panel_path.empty()) return read_panel_csv(panel_path);
    return cli::build_regression_panel(cfg);
}

std::string sample_label(const AlignedPanel& p) {
    return p.period(0).to_string() + ".." + p.period(p.rows() - 1).to_string() +
           " (T = " + std::to_string(p.rows()) + ")";
}

int cmd_transform(const Config& cfg, const std::string& out_flag) {
    const AlignedPanel panel = cli::build_regression_panel(cfg);
    const std::string dir = cli::resolve_output_dir(cfg, out_flag);
    const std::string path = dir + "/panel.csv";
    write_panel_csv(panel, path);
    std::cout << "wrote " << path << " with " << panel.cols() << " columns, sample "
              << sample_label(panel) << "\n";
    return 0;
}

int cmd_unitroot(const Config& cfg, const std::string& panel_path, const std::string& out_flag) {
    const AlignedPanel panel = load_or_build_panel(cfg, panel_path);
    std::vector<UnitRootRow> rows;
    for (std::size_t j = 0; j < panel.cols(); ++j) {
        UnitRootRow r;
        r.variable = panel.names()[j];
        r.adf = adf(panel.column(j));
        r.pp = pp(panel.column(j));
        rows.push_back(r);
    }
    const std::string label = cfg.get_or("data", "label", panel_path.empty() ? "config data" : panel_path);
    const std::string text = render_unit_root_report(rows, label);
    const std::string dir = cli::resolve_output_dir(cfg, out_flag);
    write_file(dir + "/unitroot_report.txt", text);
    write_file(dir + "/unitroot_results.csv", unit_root_csv(rows));
    std::cout << text;
    return 0;
}

int cmd_estimate(const Config& cfg, const std::string& equation, const std::string& panel_path,
                 const std::string& out_flag) {
    const AlignedPanel panel = load_or_build_panel(cfg, panel_path);
    const int max_k = cfg.get_int_or("estimate", "max_k", -1);
    const std::string label =
        cfg.get_or("data", "label", panel_path.empty() ? "config data" : panel_path);
    const std::string dir = cli::resolve_output_dir(cfg, out_flag);

    if (equation == "eq15") {
        const std::string y_col = cfg.get_or("eq15", "y", cli::kLnMoneyRatio);
        const std::string spread_col = cfg.get_or("eq15", "spread", cli::kSpread);
        const Eq15Result r = estimate_eq15(panel, max_k, y_col, spread_col);
        const auto& sp = panel.column(spread_col);
        double mean_spread = 0.0;
        for (double v : sp) mean_spread += v;
        mean_spread /= static_cast<double>(sp.size());
        const std::string text = render_eq15_report(r, label, sample_label(panel), mean_spread);
        write_file(dir + "/eq15_report.txt", text);
        write_file(dir + "/eq15_results.csv", eq15_csv(r));
        std::cout << text;
        return 0;
    }
    if (equation == "eq20") {
        const Eq20Result r = estimate_eq20(
            panel, cli::scale_kind(cfg), cli::aggregate_kind(cfg), max_k,
            cfg.get_or("eq20", "y", cli::kLnRealMoney), cfg.get_or("eq20", "ln_oc", cli::kLnOc),
            cfg.get_or("eq20", "spread", cli::kSpread),
            cfg.get_or("eq20", "scale", cli::kLnScale));
        const std::string text = render_eq20_report(r, label, sample_label(panel));
        write_file(dir + "/eq20_report.txt", text);
        write_file(dir + "/eq20_results.csv", eq20_csv(r));
        std::cout << text;
        return 0;
    }
    throw ConfigError("--equation must be eq15 or eq20, got '" + equation + "'");
}

int cmd_simulate(const Config& cfg, const std::string& out_flag) {
    const SimSpec spec = SimSpec::from_config(cfg);
    const AlignedPanel panel = simulate_triangular(spec);
    const std::string dir = cli::resolve_output_dir(cfg, out_flag);
    const std::string path = dir + "/sim_panel.csv";
    write_panel_csv(panel, path);
    std::cout << "wrote " << path << " (T = " << panel.rows() << ", m = " << spec.m
              << ", seed = " << spec.seed << ")\n";
    return 0;
}

int cmd_montecarlo(const Config& cfg, const std::string& out_flag) {
    const int reps = cfg.get_int_or("montecarlo", "replications", 200);
    if (reps < 50) throw ConfigError("[montecarlo] replications must be >= 50");
    const int max_k = cfg.get_int_or("montecarlo", "max_k", -1);
    const SimSpec spec = SimSpec::from_config(cfg);
    const McSummary s = run_montecarlo(spec, reps, max_k);
    const std::string csv = montecarlo_csv(s);
    const std::string dir = cli::resolve_output_dir(cfg, out_flag);
    write_file(dir + "/montecarlo.csv", csv);
    std::cout << csv;
    return 0;
}

// re-renders a results CSV as an aligned text table
int cmd_report(const std::string& results_path) {
    std::ifstream in(results_path);
    if (!in) throw DataError("cannot open '" + results_path + "'");
    std::vector<std::vector<std::string>> table;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> row;
        std::string cell;
        for (char c : line) {
            if (c == ',') {
                row.push_back(cell);
                cell.clear();
            } else if (c != '\r') {
                cell += c;
            }
        }
        row.push_back(cell);
        table.push_back(std::move(row));
    }
    if (table.empty()) throw DataError("'" + results_path + "' is empty");
    std::vector<std::size_t> width;
    for (const auto& row : table) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t j = 0; j < row.size(); ++j)
            width[j] = std::max(width[j], row[j].size());
    }
    for (const auto& row : table) {
        std::string out;
        for (std::size_t j = 0; j < row.size(); ++j) {
            out += row[j];
            if (j + 1 < row.size()) out += std::string(width[j] - row[j].size() + 2, ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        std::cout << out << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"money-demand cointegration toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_dir, panel_path, equation, results_path;

    auto add_config = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("-c,--config", config_path, "run configuration (INI)");
        if (required) opt->required();
        cmd->add_option("-o,--out", out_dir, "output directory");
    };

    auto* t = app.add_subcommand("transform", "build the regression panel from raw CSV data");
    add_config(t);

    auto* u = app.add_subcommand("unitroot", "ADF and PP tests per panel variable");
    add_config(u);
    u->add_option("--panel", panel_path, "use an existing panel CSV instead of raw data");

    auto* e = app.add_subcommand("estimate", "DOLS/FMOLS cointegration estimates and tests");
    add_config(e);
    e->add_option("--equation", equation, "eq15 (relative demand) or eq20 (scale demand)")
        ->required();
    e->add_option("--panel", panel_path, "use an existing panel CSV instead of raw data");

    auto* s = app.add_subcommand("simulate", "generate a synthetic cointegrated panel");
    add_config(s);

    auto* mc = app.add_subcommand("montecarlo", "replication study of the estimators and tests");
    add_config(mc);

    auto* rp = app.add_subcommand("report", "render a results CSV as a text table");
    rp->add_option("--results", results_path, "results CSV produced by estimate/montecarlo")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (t->parsed()) return cmd_transform(Config::parse_file(config_path), out_dir);
        if (u->parsed()) return cmd_unitroot(Config::parse_file(config_path), panel_path, out_dir);
        if (e->parsed())
            return cmd_estimate(Config::parse_file(config_path), equation, panel_path, out_dir);
        if (s->parsed()) return cmd_simulate(Config::parse_file(config_path), out_dir);
        if (mc->parsed()) return cmd_montecarlo(Config::parse_file(config_path), out_dir);
        if (rp->parsed()) return cmd_report(results_path);
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
