#include "mvoyce/triangle.hpp"

#include <stdexcept>
#include <string>

namespace mvoyce {

namespace {

void require_positive(std::uint32_t n, const char* what) {
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + ": n must be >= 1");
    }
}

}  // namespace

ExactInt CoeffRow::at(std::int64_t k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs.size()) {
        return ExactInt(0);
    }
    return coeffs[static_cast<std::size_t>(k)];
}

CoeffRow row_closed_form(std::uint32_t n) {
    require_positive(n, "row_closed_form");
    CoeffRow row{n, {}};
    row.coeffs.reserve(n + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
        row.coeffs.push_back(binom(n + k - 1, 2 * k - 1));
    }
    return row;
}

std::vector<CoeffRow> rows_three_term(std::uint32_t max_n) {
    require_positive(max_n, "rows_three_term");
    std::vector<CoeffRow> rows;
    rows.reserve(max_n);
    rows.push_back(CoeffRow{1, {0, 1}});
    if (max_n >= 2) {
        rows.push_back(CoeffRow{2, {0, 2, 1}});
    }
    for (std::uint32_t m = 3; m <= max_n; ++m) {
        const auto& prev = rows[m - 2].coeffs;   // Q_{m-1}, length m
        const auto& prev2 = rows[m - 3].coeffs;  // Q_{m-2}, length m-1
        CoeffRow next{m, std::vector<ExactInt>(m + 1)};
        for (std::uint32_t k = 1; k <= m; ++k) {
            ExactInt value;
            if (k < prev.size()) {
                value += prev[k] + prev[k];
            }
            value += prev[k - 1];
            if (k < prev2.size()) {
                value -= prev2[k];
            }
            next.coeffs[k] = std::move(value);
        }
        rows.push_back(std::move(next));
    }
    return rows;
}

CoeffRow row_three_term(std::uint32_t n) {
    require_positive(n, "row_three_term");
    auto rows = rows_three_term(n);
    return std::move(rows.back());
}

std::vector<RationalRow> rows_hereditary(std::uint32_t max_n, const ArithmeticFunction& g) {
    std::vector<ExactRatio> weights(max_n + 1);
    for (std::uint32_t k = 1; k <= max_n; ++k) {
        weights[k] = g(k);
    }
    std::vector<RationalRow> p;
    p.reserve(max_n + 1);
    p.push_back(RationalRow{0, {ExactRatio(1)}});
    for (std::uint32_t m = 1; m <= max_n; ++m) {
        RationalRow row{m, std::vector<ExactRatio>(m + 1)};
        for (std::uint32_t k = 1; k <= m; ++k) {
            if (weights[k].sign() == 0) {
                continue;
            }
            const auto& lower = p[m - k].coeffs;
            for (std::size_t j = 0; j < lower.size(); ++j) {
                if (lower[j].sign() != 0) {
                    row.coeffs[j + 1] += weights[k] * lower[j];
                }
            }
        }
        p.push_back(std::move(row));
    }
    return p;
}

RationalRow row_hereditary(std::uint32_t n, const ArithmeticFunction& g) {
    auto rows = rows_hereditary(n, g);
    return std::move(rows.back());
}

std::optional<CoeffRow> to_integer_row(const RationalRow& row) {
    CoeffRow out{row.n, {}};
    out.coeffs.reserve(row.coeffs.size());
    for (const auto& c : row.coeffs) {
        if (!c.is_integer()) {
            return std::nullopt;
        }
        out.coeffs.push_back(c.numerator());
    }
    return out;
}

CoeffRow reciprocal_row(std::uint32_t n) {
    require_positive(n, "reciprocal_row");
    CoeffRow row{n, {}};
    row.coeffs.reserve(n + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
        row.coeffs.push_back(binom(static_cast<std::uint64_t>(2 * std::int64_t{n} - k - 1), k));
    }
    return row;
}

bool is_log_concave(const CoeffRow& row) {
    for (std::size_t k = 1; k + 1 < row.coeffs.size(); ++k) {
        if (row[k] * row[k] < row[k - 1] * row[k + 1]) {
            return false;
        }
    }
    return true;
}

bool is_unimodal(const CoeffRow& row) {
    std::size_t k = 1;
    const std::size_t end = row.coeffs.size();
    while (k + 1 < end && row[k] <= row[k + 1]) {
        ++k;
    }
    while (k + 1 < end && row[k] >= row[k + 1]) {
        ++k;
    }
    return k + 1 >= end;
}

namespace arithmetic {

ExactRatio identity(std::uint64_t k) { return ExactRatio(ExactInt(k)); }

ExactRatio one(std::uint64_t) { return ExactRatio(1); }

ExactRatio inverse_factorial(std::uint64_t k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return ExactRatio(ExactInt(1), ExactInt(std::move(f)));
}

}  // namespace arithmetic

}  // namespace mvoyce
