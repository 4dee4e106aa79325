#include "mvoyce/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace mvoyce {

OutputFormat parse_output_format(std::string_view name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "tsv") return OutputFormat::tsv;
    throw std::invalid_argument("unknown output format: " + std::string(name));
}

std::string_view to_string(OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        case OutputFormat::tsv: return "tsv";
    }
    return "json";
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) {
        throw std::runtime_error("double formatting failed");
    }
    return std::string(buf, end);
}

namespace {

std::string cell_text(const Cell& cell, char separator) {
    struct Visitor {
        char separator;
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return v; }
        std::string operator()(const std::vector<std::string>& v) const {
            std::string joined;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) joined += ' ';
                joined += v[i];
            }
            return joined;
        }
    };
    std::string text = std::visit(Visitor{separator}, cell);
    if (separator == ',' && text.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : text) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        return quoted + '"';
    }
    return text;
}

nlohmann::json cell_json(const Cell& cell) {
    struct Visitor {
        nlohmann::json operator()(std::monostate) const { return nullptr; }
        nlohmann::json operator()(std::int64_t v) const { return v; }
        nlohmann::json operator()(double v) const {
            return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
        }
        nlohmann::json operator()(bool v) const { return v; }
        nlohmann::json operator()(const std::string& v) const { return v; }
        nlohmann::json operator()(const std::vector<std::string>& v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

std::string scientific(int mantissa_digits, int exponent, int digits) {
    // mantissa_digits has exactly `digits` decimal digits
    std::string m = std::to_string(mantissa_digits);
    std::string text = m.substr(0, 1);
    if (digits > 1) {
        text += '.' + m.substr(1);
    }
    char exp[16];
    std::snprintf(exp, sizeof(exp), "e%+03d", exponent);
    return text + exp;
}

// Integer holding the first `digits` significant digits of |x| (rounded),
// with the matching decimal exponent of the leading digit.
std::pair<int, int> leading_digits(double x, int digits) {
    int exponent = static_cast<int>(std::floor(std::log10(x)));
    double scaled = std::round(x / std::pow(10.0, exponent - digits + 1));
    const double limit = std::pow(10.0, digits);
    if (scaled >= limit) {
        scaled /= 10.0;
        exponent += 1;
    } else if (scaled < limit / 10.0) {
        exponent -= 1;
        scaled = std::round(x / std::pow(10.0, exponent - digits + 1));
    }
    return {static_cast<int>(scaled), exponent};
}

}  // namespace

std::string render_delimited(const Table& table, char separator) {
    std::ostringstream out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << separator;
        out << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << separator;
            out << cell_text(row[i], separator);
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json rows_to_json(const Table& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
            obj[table.columns[i]] = cell_json(row[i]);
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

std::string round_significant(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) {
        return format_double(x);
    }
    auto [mantissa, exponent] = leading_digits(std::abs(x), digits);
    return (x < 0 ? "-" : "") + scientific(mantissa, exponent, digits);
}

std::string guarded_two_digit(double x) {
    if (x == 0.0 || !std::isfinite(x)) {
        return format_double(x);
    }
    auto [three, exponent] = leading_digits(std::abs(x), 3);
    return (x < 0 ? "-" : "") + scientific(three / 10, exponent, 2);
}

}  // namespace mvoyce
