// Mode location for the rows of the triangle and the Pell-Fermat
// description of the rows that have two equal maxima.
//
// A(n,m) >= A(n,m+1) exactly when 5m^2 + 2m - n^2 >= 0, so the smallest
// mode is the least m >= 1 with that property, and the row has a second
// mode at m+1 precisely when 5m^2 + 2m = n^2. Substituting j = 5m+1 gives
// j^2 - 5n^2 = 1 with j = 1 (mod 5).
#pragma once

#include <cstdint>
#include <vector>

#include "mvoyce/exact.hpp"

namespace mvoyce {

struct ModeResult {
    std::uint32_t n = 0;
    std::uint64_t smallest_mode = 0;
    bool is_double = false;
    /// |mu_n - m| for the mode m nearest to mu_n.
    ExactRatio darroch_gap;
};

struct PellSolution {
    std::uint32_t k = 0;
    ExactInt m;
    ExactInt n;
    ExactInt j;  ///< 5m + 1
};

struct PellPair {
    ExactInt j;
    ExactInt n;
    friend bool operator==(const PellPair&, const PellPair&) = default;
};

/// Sign of 5m^2 + 2m - n^2, i.e. of A(n,m) - A(n,m+1) for 1 <= m < n.
int mode_discriminant_sign(const ExactInt& n, const ExactInt& m);

/// (sqrt(5n^2+1) - 1)/5 <= m < (sqrt(5n^2+1) + 4)/5, decided in integers.
bool in_mode_window(const ExactInt& n, const ExactInt& m);

/// Smallest mode of row n for arbitrarily large n; O(1) big-integer work.
ExactInt smallest_mode(const ExactInt& n);

/// Mode, double-mode flag and Darroch gap of row n. Requires n >= 1.
/// Throws VerificationFailure if the gap bound 0 < gap < 1 fails for n >= 2.
ModeResult locate_mode(std::uint32_t n);

/// First `count` rows with a double mode: (5m_k+1, n_k) = M^k (1, 0) with
/// M = [[161, 360], [72, 161]].
std::vector<PellSolution> double_mode_sequence(std::uint32_t count);

/// First `count` non-negative solutions of j^2 - 5n^2 = 1, starting at (1, 0),
/// by repeated multiplication with [[9, 20], [4, 9]].
std::vector<PellPair> pell_all_solutions(std::uint32_t count);

}  // namespace mvoyce
