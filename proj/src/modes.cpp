#include "mvoyce/modes.hpp"

#include <stdexcept>
#include <string>

#include "mvoyce/errors.hpp"
#include "mvoyce/moments.hpp"

namespace mvoyce {

namespace {

ExactInt discriminant(const ExactInt& n, const ExactInt& m) {
    return ExactInt(5) * m * m + ExactInt(2) * m - n * n;
}

struct Matrix2 {
    ExactInt a, b, c, d;

    PellPair apply(const PellPair& v) const { return {a * v.j + b * v.n, c * v.j + d * v.n}; }
};

bool solves_pell(const PellPair& p) {
    return p.j * p.j - ExactInt(5) * p.n * p.n == ExactInt(1);
}

}  // namespace

int mode_discriminant_sign(const ExactInt& n, const ExactInt& m) {
    return discriminant(n, m).sign();
}

bool in_mode_window(const ExactInt& n, const ExactInt& m) {
    const ExactInt radicand = ExactInt(5) * n * n + ExactInt(1);
    const ExactInt lower = ExactInt(5) * m + ExactInt(1);  // lower bound: sqrt(radicand) <= 5m + 1
    if (lower.sign() < 0 || lower * lower < radicand) {
        return false;
    }
    const ExactInt upper = ExactInt(5) * m - ExactInt(4);  // upper bound: 5m - 4 < sqrt(radicand)
    return upper.sign() < 0 || upper * upper < radicand;
}

ExactInt smallest_mode(const ExactInt& n) {
    if (n.sign() <= 0) {
        throw std::invalid_argument("smallest_mode: n must be >= 1");
    }
    const ExactInt one(1);
    const ExactInt root = isqrt(ExactInt(5) * n * n + one);
    ExactInt m = divide_exact(root - mod(root - one, ExactInt(5)) - one, ExactInt(5));
    if (m < one) {
        m = one;
    }
    while (discriminant(n, m).sign() < 0) {
        m += one;
    }
    while (m > one && discriminant(n, m - one).sign() >= 0) {
        m -= one;
    }
    if (!in_mode_window(n, m)) {
        throw VerificationFailure("mode " + m.to_string() + " of row " + n.to_string() + " is outside the window");
    }
    return m;
}

ModeResult locate_mode(std::uint32_t n) {
    if (n < 1) {
        throw std::invalid_argument("locate_mode: n must be >= 1");
    }
    const ExactInt nn(n);
    const ExactInt m = smallest_mode(nn);

    ModeResult result;
    result.n = n;
    result.smallest_mode = m.to_u64();
    result.is_double = discriminant(nn, m).is_zero();

    const ExactRatio mu = moment_summary(n).mu;
    result.darroch_gap = abs(mu - ExactRatio(m));
    if (result.is_double) {
        const ExactRatio other = abs(mu - ExactRatio(m + ExactInt(1)));
        if (other < result.darroch_gap) {
            result.darroch_gap = other;
        }
    }
    if (n >= 2 && (result.darroch_gap.sign() <= 0 || result.darroch_gap >= ExactRatio(1))) {
        throw VerificationFailure("row " + std::to_string(n) + ": mode is not within distance (0, 1) of the mean");
    }
    return result;
}

std::vector<PellSolution> double_mode_sequence(std::uint32_t count) {
    if (count < 1) {
        throw std::invalid_argument("double_mode_sequence: count must be >= 1");
    }
    const Matrix2 step{161, 360, 72, 161};
    std::vector<PellSolution> out;
    out.reserve(count);
    PellPair v{1, 0};
    for (std::uint32_t k = 1; k <= count; ++k) {
        v = step.apply(v);
        if (!solves_pell(v) || mod(v.j, ExactInt(5)) != ExactInt(1)) {
            throw VerificationFailure("double-mode step " + std::to_string(k) + " left the Pell solution set");
        }
        PellSolution s{k, divide_exact(v.j - ExactInt(1), ExactInt(5)), v.n, v.j};
        if (ExactInt(5) * s.m * s.m + ExactInt(2) * s.m != s.n * s.n) {
            throw VerificationFailure("double-mode step " + std::to_string(k) + " violates 5m^2 + 2m = n^2");
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<PellPair> pell_all_solutions(std::uint32_t count) {
    if (count < 1) {
        throw std::invalid_argument("pell_all_solutions: count must be >= 1");
    }
    const Matrix2 fundamental{9, 20, 4, 9};
    std::vector<PellPair> out;
    out.reserve(count);
    PellPair v{1, 0};
    for (std::uint32_t i = 0; i < count; ++i) {
        if (!solves_pell(v)) {
            throw VerificationFailure("Pell iterate " + std::to_string(i) + " is not a solution");
        }
        const bool residue_one = mod(v.j, ExactInt(5)) == ExactInt(1);
        if (residue_one != (i % 2 == 0)) {
            throw VerificationFailure("Pell iterate " + std::to_string(i) + " has the wrong residue mod 5");
        }
        out.push_back(v);
        v = fundamental.apply(v);
    }
    return out;
}

}  // namespace mvoyce
