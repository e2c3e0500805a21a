#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zetacount/constants.hpp"

namespace zetacount {

inline constexpr double kHardyWindowHeight = 1000.0;

// Ordered positive ordinates of nontrivial zeros.  The list is trusted to be
// complete up to its last entry, so a height is covered iff it does not
// exceed that entry.
struct ZeroList {
    std::vector<double> ordinates;
    std::string source;

    double max_height() const {
        return ordinates.empty() ? 0.0 : ordinates.back();
    }
};

// One decimal ordinate per line, ascending; '#' lines and blanks ignored.
// Throws config_error with the offending line number on a non-numeric or
// non-ascending entry.
ZeroList ingest_zero_file(const std::filesystem::path& path);

// N(T) = #{gamma in zl : 0 < gamma <= T}; throws coverage_error when the
// list does not reach T.
long count_zeros(double T, const ZeroList& zl);

// Zero ordinates in (0, t_max] located by sign changes of the Hardy
// Z-function on a step-0.05 grid with bisection refinement to 1e-9.
// Assumes every zero in the window is on the critical line and simple.
std::vector<double> hardy_zero_scan(double t_max);

// Independent N(T) oracle for T <= 1000 via hardy_zero_scan.
long count_zeros_hardy(double T);

// S(T) = (N_Q(T) - (T/pi) log(T/2pi e) + 1/4 - g(T) - 2) / 2 with
// N_Q(T) = 2 N(T); requires T >= 5/7 and coverage of T.
double s_of_T(double T, const ZeroList& zl);

struct BoundCheckRow {
    double T = 0.0;
    long N = 0;
    double main_term = 0.0;  // (T/2pi) log(T/2pi e)
    double deviation = 0.0;
    double bound = 0.0;
    double margin = 0.0;
    bool pass = false;
    std::string check;  // "corollary" or "assembled"
};

// Checks |N(T) - main| against the headline corollary constants at every
// height, and additionally |N - main + 1/8| <= n_bound with the supplied
// assembled constants at heights >= bc->params.T0.
std::vector<BoundCheckRow> validate_bounds(const ZeroList& zl,
                                           const BoundConstants* bc,
                                           std::span<const double> heights);

std::string bound_checks_csv(std::span<const BoundCheckRow> rows);

}  // namespace zetacount
