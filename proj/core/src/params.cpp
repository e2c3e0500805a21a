#include "zetacount/params.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "zetacount/errors.hpp"

namespace zetacount {

double theta_split(double c, double r, double y) {
    assert(r > 0.0);
    if (c + r <= y) return 0.0;
    if (y <= c - r) return std::numbers::pi;
    double x = (y - c) / r;
    // Clamp to absorb rounding exactly at y = c -+ r; anything further out
    // would have taken the closed-form branches above.
    if (x > 1.0) {
        assert(x <= 1.0 + 1e-12);
        x = 1.0;
    } else if (x < -1.0) {
        assert(x >= -1.0 - 1e-12);
        x = -1.0;
    }
    return std::acos(x);
}

double theta_split(const ContourParams& params, double y) {
    return theta_split(params.c, params.r, y);
}

ValidationReport validate(const ContourParams& p) {
    ValidationReport rep;
    auto require = [&rep](bool cond, const char* name) {
        if (!cond) {
            rep.ok = false;
            rep.violations.emplace_back(name);
        }
    };
    const double s1 = p.sigma1();
    const double d = p.delta();

    require(std::isfinite(p.c) && std::isfinite(p.r) && std::isfinite(p.eta),
            "c, r, eta finite");
    require(p.r > 0.0, "r > 0");
    require(p.eta > 0.0 && p.eta <= 0.5, "0 < eta <= 1/2");
    require(-0.5 < p.c - p.r, "-1/2 < c-r");
    require(p.c - p.r < 1.0 - p.c, "c-r < 1-c");
    require(1.0 - p.c < -p.eta, "1-c < -eta");
    require(0.25 <= d, "1/4 <= delta");
    require(d < 0.5, "delta < 1/2");
    require(1.0 + p.eta < s1, "1+eta < sigma1");
    require(s1 < p.c + p.r, "sigma1 < c+r");
    require(p.r > 2.0 * p.c - 1.0, "r > 2c-1");
    if (p.r > 0.0) {
        require(theta_split(p, 1.0 + p.eta) <= 2.1, "theta_{1+eta} <= 2.1");
    }
    require(p.T0 >= std::numbers::e, "T0 >= e");
    require(p.J1 >= 1, "J1 >= 1");
    require(p.J2 >= 1, "J2 >= 1");
    return rep;
}

ValidationReport validate(const ZetaLineHypotheses& h) {
    ValidationReport rep;
    auto require = [&rep](bool cond, const char* name) {
        if (!cond) {
            rep.ok = false;
            rep.violations.emplace_back(name);
        }
    };
    require(h.c1 >= 0.0 && h.c2 >= 0.0, "c1, c2 >= 0");
    require(h.k1 >= 0.0 && h.k3 >= 0.0, "k1, k3 >= 0");
    require(h.k2 >= 0.0 && h.k2 <= 0.5, "k2 in [0, 1/2]");
    require(h.t0 >= std::numbers::e, "t0 >= e");
    require(h.t1 >= std::numbers::e, "t1 >= e");
    require(h.Q4 >= 1.0, "Q4 >= 1");
    require(h.Q2 == std::max(h.Q0, h.Q1), "Q2 = max{Q0, Q1}");
    require(h.Q5 == std::max(h.Q3, h.Q4), "Q5 = max{Q3, Q4}");
    return rep;
}

namespace {

double parse_double(const std::string& text, int line) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw config_error("invalid numeric value '" + text + "'", line);
    }
    return value;
}

int parse_int(const std::string& text, int line) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw config_error("invalid integer value '" + text + "'", line);
    }
    return value;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open config file: " + path.string());
    }
    RunConfig cfg;
    bool have_c = false, have_r = false, have_eta = false;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw config_error("expected 'key = value'", lineno);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) {
            throw config_error("expected 'key = value'", lineno);
        }

        if (key == "c") { cfg.params.c = parse_double(val, lineno); have_c = true; }
        else if (key == "r") { cfg.params.r = parse_double(val, lineno); have_r = true; }
        else if (key == "eta") { cfg.params.eta = parse_double(val, lineno); have_eta = true; }
        else if (key == "T0") cfg.params.T0 = parse_double(val, lineno);
        else if (key == "J1") cfg.params.J1 = parse_int(val, lineno);
        else if (key == "J2") cfg.params.J2 = parse_int(val, lineno);
        else if (key == "c1") cfg.hyp.c1 = parse_double(val, lineno);
        else if (key == "c2") cfg.hyp.c2 = parse_double(val, lineno);
        else if (key == "t0") cfg.hyp.t0 = parse_double(val, lineno);
        else if (key == "k1") cfg.hyp.k1 = parse_double(val, lineno);
        else if (key == "k2") cfg.hyp.k2 = parse_double(val, lineno);
        else if (key == "k3") cfg.hyp.k3 = parse_double(val, lineno);
        else if (key == "t1") cfg.hyp.t1 = parse_double(val, lineno);
        else if (key == "Q0") cfg.hyp.Q0 = parse_double(val, lineno);
        else if (key == "Q1") cfg.hyp.Q1 = parse_double(val, lineno);
        else if (key == "Q2") cfg.hyp.Q2 = parse_double(val, lineno);
        else if (key == "Q3") cfg.hyp.Q3 = parse_double(val, lineno);
        else if (key == "Q4") cfg.hyp.Q4 = parse_double(val, lineno);
        else if (key == "Q5") cfg.hyp.Q5 = parse_double(val, lineno);
        else throw config_error("unknown key '" + key + "'", lineno);
    }
    if (!have_c || !have_r || !have_eta) {
        throw config_error("config must set c, r, and eta");
    }
    return cfg;
}

}  // namespace zetacount
