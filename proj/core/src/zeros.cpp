#include "zetacount/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "zetacount/errors.hpp"
#include "zetacount/gamma_error.hpp"
#include "zetacount/specfn.hpp"

namespace zetacount {

ZeroList ingest_zero_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open zero file: " + path.string());
    }
    ZeroList zl;
    zl.source = path.string();
    std::string raw;
    int lineno = 0;
    double prev = 0.0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = raw.find_last_not_of(" \t\r");
        const std::string line = raw.substr(first, last - first + 1);
        if (line[0] == '#') continue;
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
        if (ec != std::errc{} || ptr != line.data() + line.size()) {
            throw config_error("non-numeric ordinate '" + line + "'", lineno);
        }
        if (!(value > prev)) {
            throw config_error("ordinates must be strictly ascending", lineno);
        }
        zl.ordinates.push_back(value);
        prev = value;
    }
    return zl;
}

long count_zeros(double T, const ZeroList& zl) {
    if (T > zl.max_height()) {
        std::ostringstream msg;
        msg << "zero list covers heights up to " << zl.max_height()
            << ", requested T = " << T;
        throw coverage_error(msg.str());
    }
    // Closed interval on the right: a zero exactly at T counts.
    const auto it = std::upper_bound(zl.ordinates.begin(), zl.ordinates.end(), T);
    return static_cast<long>(it - zl.ordinates.begin());
}

std::vector<double> hardy_zero_scan(double t_max) {
    if (t_max > kHardyWindowHeight) {
        throw window_error("hardy_zero_scan supports t <= 1000");
    }
    std::vector<double> zeros;
    if (t_max <= 1.0) return zeros;

    // Z(t) < 0 throughout (0, 14.13), so starting the grid at t = 1 loses
    // nothing; theta(t) is defined from t = 1 on.
    const double step = 0.05;
    double t_prev = 1.0;
    double z_prev = hardy_z(t_prev);
    while (t_prev < t_max) {
        const double t = std::min(t_prev + step, t_max);
        const double z = hardy_z(t);
        if ((z_prev < 0.0 && z > 0.0) || (z_prev > 0.0 && z < 0.0) || z == 0.0) {
            // Bisect the bracket down to 1e-9.
            double lo = t_prev, hi = t, f_lo = z_prev;
            while (hi - lo > 1e-9) {
                const double mid = 0.5 * (lo + hi);
                const double f_mid = hardy_z(mid);
                if ((f_lo < 0.0) == (f_mid < 0.0)) {
                    lo = mid;
                    f_lo = f_mid;
                } else {
                    hi = mid;
                }
            }
            const double root = 0.5 * (lo + hi);
            if (root <= t_max) zeros.push_back(root);
        }
        t_prev = t;
        z_prev = z;
    }
    return zeros;
}

long count_zeros_hardy(double T) {
    if (T > kHardyWindowHeight) {
        throw window_error("count_zeros_hardy supports T <= 1000");
    }
    const auto zeros = hardy_zero_scan(T);
    return static_cast<long>(zeros.size());
}

double s_of_T(double T, const ZeroList& zl) {
    if (!(T >= kGammaErrorMinHeight)) {
        throw std::domain_error("s_of_T requires T >= 5/7");
    }
    const double pi = std::numbers::pi;
    const double n_q = 2.0 * static_cast<double>(count_zeros(T, zl));
    return 0.5 * (n_q - T / pi * std::log(T / (2.0 * pi * std::numbers::e)) + 0.25 -
                  g_of_T(T) - 2.0);
}

std::vector<BoundCheckRow> validate_bounds(const ZeroList& zl,
                                           const BoundConstants* bc,
                                           std::span<const double> heights) {
    const CorollaryConstants corollary;
    const double pi = std::numbers::pi;
    std::vector<BoundCheckRow> rows;
    for (double T : heights) {
        const long n = count_zeros(T, zl);  // throws on missing coverage
        const double main_term = T / (2.0 * pi) * std::log(T / (2.0 * pi * std::numbers::e));

        BoundCheckRow row;
        row.T = T;
        row.N = n;
        row.main_term = main_term;
        row.deviation = std::abs(static_cast<double>(n) - main_term);
        row.bound = corollary.n_bound(T);
        row.margin = row.bound - row.deviation;
        row.pass = row.margin >= 0.0;
        row.check = "corollary";
        rows.push_back(row);

        if (bc != nullptr && T >= bc->params.T0) {
            BoundCheckRow thm = row;
            thm.deviation = std::abs(static_cast<double>(n) - main_term + 0.125);
            thm.bound = n_bound(T, *bc);
            thm.margin = thm.bound - thm.deviation;
            thm.pass = thm.margin >= 0.0;
            thm.check = "assembled";
            rows.push_back(thm);
        }
    }
    return rows;
}

std::string bound_checks_csv(std::span<const BoundCheckRow> rows) {
    std::ostringstream out;
    out.precision(10);
    out << "T,N,main_term,deviation,bound,margin,pass\n";
    for (const auto& r : rows) {
        out << r.T << ',' << r.N << ',' << r.main_term << ',' << r.deviation << ','
            << r.bound << ',' << r.margin << ',' << (r.pass ? 1 : 0) << '\n';
    }
    return out.str();
}

}  // namespace zetacount
