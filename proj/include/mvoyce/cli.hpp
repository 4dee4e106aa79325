#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mvoyce/limits.hpp"
#include "mvoyce/table.hpp"

namespace mvoyce::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// One command's result: its table plus the parameters echoed in JSON "meta".
struct Report {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    Table table;
    /// Replaces table for csv/tsv when set (the triangle is wide in text form).
    std::optional<Table> text_table;
};

Report cmd_triangle(std::uint32_t max_n);
Report cmd_moments(std::uint32_t max_n);
Report cmd_modes(std::uint32_t max_n);
Report cmd_pell(std::uint32_t count, bool fundamental = false);
Report cmd_clt(const std::vector<std::uint32_t>& ns, const Grid& grid = {});
Report cmd_local_table(const std::vector<std::uint32_t>& ns);
Report cmd_singularity(const std::vector<double>& steps);

/// "LO:HI:STEPS"
Grid parse_grid(const std::string& text);

std::string render(const Report& report, OutputFormat format);

/// Full command line including the program name. Data goes to `out`
/// (or --output), diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvoyce::cli
