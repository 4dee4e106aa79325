#include "mvoyce/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "mvoyce/errors.hpp"
#include "mvoyce/exact.hpp"
#include "mvoyce/modes.hpp"
#include "mvoyce/moments.hpp"
#include "mvoyce/triangle.hpp"

#ifndef MVOYCE_VERSION
#define MVOYCE_VERSION "0.0.0"
#endif

namespace mvoyce::cli {

namespace {

std::vector<std::string> decimal_strings(const std::vector<ExactInt>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) {
        out.push_back(v.to_string());
    }
    return out;
}

void require_nonempty(const char* command, std::size_t size) {
    if (size == 0) {
        throw std::invalid_argument(std::string(command) + ": at least one value is required");
    }
}

}  // namespace

Report cmd_triangle(std::uint32_t max_n) {
    if (max_n < 1) {
        throw std::invalid_argument("triangle: --max-n must be >= 1");
    }
    Report report{"triangle", {{"max_n", max_n}}, {{"n", "coeffs"}, {}}, Table{}};
    Table& wide = report.text_table.emplace();
    wide.columns.push_back("n");
    for (std::uint32_t k = 1; k <= max_n; ++k) {
        wide.columns.push_back(std::to_string(k));
    }
    for (const CoeffRow& row : rows_three_term(max_n)) {
        report.table.rows.push_back({std::int64_t{row.n}, decimal_strings(row.coeffs)});
        std::vector<Cell> cells{std::int64_t{row.n}};
        for (std::uint32_t k = 1; k <= max_n; ++k) {
            cells.push_back(k <= row.n ? Cell{row[k].to_string()} : Cell{});
        }
        wide.rows.push_back(std::move(cells));
    }
    return report;
}

Report cmd_moments(std::uint32_t max_n) {
    if (max_n < 1) {
        throw std::invalid_argument("moments: --max-n must be >= 1");
    }
    Report report{"moments", {{"max_n", max_n}}, {}, std::nullopt};
    report.table.columns = {"n", "u", "v", "w", "mu", "sigma2", "mu_float", "sigma2_float", "mu_over_n",
                            "sigma2_over_n"};
    for (std::uint32_t n = 1; n <= max_n; ++n) {
        const MomentSummary s = moment_summary(n);
        const ExactRatio nr(n);
        report.table.rows.push_back({std::int64_t{n}, s.u.to_string(), s.v.to_string(), s.w.to_string(),
                                     s.mu.to_string(), s.sigma2.to_string(), s.mu.to_double(),
                                     s.sigma2.to_double(), (s.mu / nr).to_double(), (s.sigma2 / nr).to_double()});
    }
    return report;
}

Report cmd_modes(std::uint32_t max_n) {
    if (max_n < 1) {
        throw std::invalid_argument("modes: --max-n must be >= 1");
    }
    Report report{"modes", {{"max_n", max_n}}, {}, std::nullopt};
    report.table.columns = {"n", "smallest_mode", "is_double", "darroch_gap", "darroch_gap_float"};
    for (std::uint32_t n = 1; n <= max_n; ++n) {
        const ModeResult r = locate_mode(n);
        report.table.rows.push_back({std::int64_t{n}, static_cast<std::int64_t>(r.smallest_mode), r.is_double,
                                     r.darroch_gap.to_string(), r.darroch_gap.to_double()});
    }
    return report;
}

Report cmd_pell(std::uint32_t count, bool fundamental) {
    if (count < 1) {
        throw std::invalid_argument("pell: --count must be >= 1");
    }
    Report report{"pell", {{"count", count}, {"fundamental", fundamental}}, {}, std::nullopt};
    if (fundamental) {
        report.table.columns = {"index", "j", "n", "j_mod_5"};
        std::int64_t index = 0;
        for (const PellPair& p : pell_all_solutions(count)) {
            report.table.rows.push_back(
                {index++, p.j.to_string(), p.n.to_string(), static_cast<std::int64_t>(mod(p.j, 5).to_u64())});
        }
    } else {
        report.table.columns = {"k", "m", "n", "j"};
        for (const PellSolution& s : double_mode_sequence(count)) {
            report.table.rows.push_back({std::int64_t{s.k}, s.m.to_string(), s.n.to_string(), s.j.to_string()});
        }
    }
    return report;
}

Report cmd_clt(const std::vector<std::uint32_t>& ns, const Grid& grid) {
    require_nonempty("clt", ns.size());
    for (std::uint32_t n : ns) {
        if (n < 2) {
            throw std::invalid_argument("clt: n must be >= 2 (got " + std::to_string(n) +
                                        "); sigma_1 = 0 leaves the normalization undefined");
        }
    }
    std::vector<std::uint32_t> sorted = ns;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    Report report{"clt", {{"n", sorted}, {"grid", {grid.lo, grid.hi, grid.steps}}}, {}, std::nullopt};
    report.table.columns = {"n", "mu", "sigma", "kolmogorov", "be_bound", "within_bound", "local_sup_error"};
    for (std::uint32_t n : sorted) {
        const CltReport r = kolmogorov_distance(n, grid);
        report.table.rows.push_back({std::int64_t{n}, r.mu, r.sigma, r.kolmogorov, r.be_bound,
                                     r.kolmogorov <= r.be_bound, r.local_sup_error});
    }
    return report;
}

Report cmd_local_table(const std::vector<std::uint32_t>& ns) {
    require_nonempty("local-table", ns.size());
    for (std::uint32_t n : ns) {
        if (n < 2) {
            throw std::invalid_argument("local-table: n must be >= 2 (got " + std::to_string(n) + ")");
        }
    }
    std::vector<std::uint32_t> sorted = ns;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    Report report{"local-table", {{"n", sorted}}, {}, std::nullopt};
    report.table.columns = {"n", "ratio", "scaled_error", "ratio_2sig", "scaled_error_2sig"};
    for (std::uint32_t n : sorted) {
        const LocalLimitRow r = table2_row(n);
        report.table.rows.push_back({std::int64_t{n}, r.ratio, r.scaled_error, guarded_two_digit(r.ratio),
                                     guarded_two_digit(r.scaled_error)});
    }
    return report;
}

Report cmd_singularity(const std::vector<double>& steps) {
    require_nonempty("singularity", steps.size());
    Report report{"singularity", {{"h", steps}}, {}, std::nullopt};
    report.table.columns = {"method", "h", "r0", "r1", "r2", "a", "b2", "a_error", "b2_error"};
    const SingularityConstants exact = singularity_constants();
    auto add = [&](const std::string& method, Cell h, const SingularityConstants& c) {
        report.table.rows.push_back({method, std::move(h), c.r0, c.r1, c.r2, c.a, c.b2, std::abs(c.a - exact.a),
                                     std::abs(c.b2 - exact.b2)});
    };
    add("closed_form", Cell{}, exact);
    for (double h : steps) {
        add("central_difference", h, singularity_constants_numeric(h));
    }
    return report;
}

Grid parse_grid(const std::string& text) {
    std::istringstream in(text);
    std::string lo, hi, steps;
    if (!std::getline(in, lo, ':') || !std::getline(in, hi, ':') || !std::getline(in, steps) || lo.empty() ||
        hi.empty() || steps.empty()) {
        throw std::invalid_argument("--grid expects LO:HI:STEPS, got '" + text + "'");
    }
    Grid grid;
    try {
        std::size_t used = 0;
        grid.lo = std::stod(lo, &used);
        if (used != lo.size()) throw std::invalid_argument(lo);
        grid.hi = std::stod(hi, &used);
        if (used != hi.size()) throw std::invalid_argument(hi);
        const long parsed = std::stol(steps, &used);
        if (used != steps.size() || parsed < 2) throw std::invalid_argument(steps);
        grid.steps = static_cast<std::uint32_t>(parsed);
    } catch (const std::exception&) {
        throw std::invalid_argument("--grid expects LO:HI:STEPS with STEPS >= 2, got '" + text + "'");
    }
    if (!(grid.lo < grid.hi)) {
        throw std::invalid_argument("--grid requires LO < HI, got '" + text + "'");
    }
    return grid;
}

std::string render(const Report& report, OutputFormat format) {
    if (format == OutputFormat::json) {
        nlohmann::json doc;
        doc["meta"] = {{"version", MVOYCE_VERSION}, {"command", report.command}, {"parameters", report.parameters}};
        doc["rows"] = rows_to_json(report.table);
        return doc.dump(2) + "\n";
    }
    const Table& table = report.text_table ? *report.text_table : report.table;
    return render_delimited(table, format == OutputFormat::csv ? ',' : '\t');
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coefficients of the Morgan-Voyce polynomials: exact tables and limit-law checks", "mvoyce"};
    app.set_version_flag("--version", MVOYCE_VERSION);
    app.require_subcommand(1);

    std::string format_name = "json";
    std::string output_path;
    std::uint32_t max_n = 0;
    std::uint32_t count = 0;
    bool fundamental = false;
    bool reference_grid = false;
    std::vector<std::uint32_t> ns;
    std::vector<double> steps;
    std::string grid_text = "-3:3:601";

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "csv", "tsv"}));
        sub->add_option("--output", output_path, "Write data to PATH instead of stdout");
    };

    CLI::App* triangle = app.add_subcommand("triangle", "Rows 1..max-n of A(n,k)");
    triangle->add_option("--max-n", max_n, "Last row")->required();
    common(triangle);

    CLI::App* moments = app.add_subcommand("moments", "Exact row sums, derivative sums, mean and variance");
    moments->add_option("--max-n", max_n, "Last row")->required();
    common(moments);

    CLI::App* modes = app.add_subcommand("modes", "Smallest mode, double-mode flag and distance to the mean");
    modes->add_option("--max-n", max_n, "Last row")->required();
    common(modes);

    CLI::App* pell = app.add_subcommand("pell", "Rows with a double mode, from the Pell-Fermat recursion");
    pell->add_option("--count", count, "Number of solutions")->required();
    pell->add_flag("--fundamental", fundamental, "List all solutions of j^2 - 5n^2 = 1 instead");
    common(pell);

    CLI::App* clt = app.add_subcommand("clt", "Kolmogorov distance versus the Berry-Esseen bound");
    clt->add_option("--n", ns, "Row index (repeatable)")->required();
    clt->add_option("--grid", grid_text, "Local-limit grid LO:HI:STEPS");
    common(clt);

    CLI::App* local = app.add_subcommand("local-table", "Central coefficient against the local-limit formula");
    local->add_option("--n", ns, "Row index (repeatable)");
    local->add_flag("--reference-grid", reference_grid, "Use n = 2..10, 20..100 by 10, 200..1000 by 100");
    common(local);

    CLI::App* singular = app.add_subcommand("singularity", "Dominant-pole constants a and b^2");
    singular->set_help_flag("--help", "Print this help message and exit");
    singular->add_option("--h", steps, "Finite-difference step (repeatable)")->required();
    common(singular);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        app.exit(e, err, err);
        return kExitUsage;
    }

    try {
        const OutputFormat format = parse_output_format(format_name);
        Report report;
        if (app.got_subcommand(triangle)) {
            report = cmd_triangle(max_n);
        } else if (app.got_subcommand(moments)) {
            report = cmd_moments(max_n);
        } else if (app.got_subcommand(modes)) {
            report = cmd_modes(max_n);
        } else if (app.got_subcommand(pell)) {
            report = cmd_pell(count, fundamental);
        } else if (app.got_subcommand(clt)) {
            report = cmd_clt(ns, parse_grid(grid_text));
        } else if (app.got_subcommand(local)) {
            if (reference_grid) {
                const auto extra = table2_reference_ns();
                ns.insert(ns.end(), extra.begin(), extra.end());
            }
            report = cmd_local_table(ns);
        } else {
            report = cmd_singularity(steps);
        }

        const std::string text = render(report, format);
        if (output_path.empty()) {
            out << text;
        } else {
            std::ofstream file(output_path, std::ios::binary);
            if (!file || !(file << text)) {
                err << "error: cannot write " << output_path << '\n';
                return kExitInternal;
            }
        }
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const VerificationFailure& e) {
        err << "verification failure: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace mvoyce::cli
