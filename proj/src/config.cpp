#include "sentopt/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sentopt/errors.hpp"
#include "sentopt/grid.hpp"

namespace sentopt {

namespace {

constexpr double trading_day = 1.0 / 252.0;

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

double parse_number(const std::string& text, int line) {
    try {
        std::size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size())
            throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw config_error(line, "expected a number, got '" + text + "'");
    }
}

std::uint64_t parse_uint(const std::string& text, int line) {
    try {
        std::size_t pos = 0;
        auto v = std::stoull(text, &pos);
        if (pos != text.size())
            throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw config_error(line, "expected a nonnegative integer, got '" + text + "'");
    }
}

bool parse_bool(const std::string& text, int line) {
    if (text == "true" || text == "1" || text == "yes")
        return true;
    if (text == "false" || text == "0" || text == "no")
        return false;
    throw config_error(line, "expected true/false, got '" + text + "'");
}

double parse_duration_impl(const std::string& text, int line) {
    if (text.empty())
        throw config_error(line, "empty duration");
    const char suffix = text.back();
    if (suffix == 'd' || suffix == 'w' || suffix == 'm') {
        double n = parse_number(text.substr(0, text.size() - 1), line);
        switch (suffix) {
        case 'd': return n * trading_day;
        case 'w': return n * 5.0 * trading_day;
        default: return n * 21.0 * trading_day;
        }
    }
    return parse_number(text, line);
}

} // namespace

double parse_duration(const std::string& text) { return parse_duration_impl(trim(text), 0); }

double run_config::grid_dt() const {
    return dt > 0.0 ? dt : default_dt(model.tau);
}

run_config parse_config_text(const std::string& text) {
    run_config cfg;
    // defaults chosen so a config only has to override what it cares about
    cfg.model.conf.mu_p = 0.03;
    cfg.model.conf.sigma_p = 0.35;
    cfg.model.conf.hist_len = 10.0 * trading_day;
    cfg.model.conf.phi = initial_curve::constant(100.0);
    cfg.model.mu_s = 1e-5;
    cfg.model.sigma_s = 0.04;
    cfg.model.tau = 5.0 * trading_day;
    cfg.model.rho = 0.0;
    cfg.model.s0 = 450.0;
    cfg.rate = 0.01;
    cfg.contract.kind = option_kind::vanilla_call;
    cfg.contract.strike = 450.0;
    cfg.contract.maturity = 63.0 * trading_day;
    cfg.contract.payout = 100.0;

    bool hist_len_set = false;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error(line_no, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw config_error(line_no, "expected 'key = value'");

        if (key == "mu_S") cfg.model.mu_s = parse_number(val, line_no);
        else if (key == "sigma_S") cfg.model.sigma_s = parse_number(val, line_no);
        else if (key == "mu_P") cfg.model.conf.mu_p = parse_number(val, line_no);
        else if (key == "sigma_P") cfg.model.conf.sigma_p = parse_number(val, line_no);
        else if (key == "rho") {
            cfg.rho_list.clear();
            std::istringstream vs(val);
            std::string item;
            while (std::getline(vs, item, ','))
                cfg.rho_list.push_back(parse_number(trim(item), line_no));
            if (cfg.rho_list.empty())
                throw config_error(line_no, "rho needs at least one value");
            cfg.model.rho = cfg.rho_list.front();
        }
        else if (key == "tau") cfg.model.tau = parse_duration_impl(val, line_no);
        else if (key == "L") { cfg.model.conf.hist_len = parse_duration_impl(val, line_no); hist_len_set = true; }
        else if (key == "P0") cfg.model.conf.phi = initial_curve::constant(parse_number(val, line_no));
        else if (key == "s0") cfg.model.s0 = parse_number(val, line_no);
        else if (key == "r") cfg.rate = parse_number(val, line_no);
        else if (key == "T") cfg.contract.maturity = parse_duration_impl(val, line_no);
        else if (key == "K") cfg.contract.strike = parse_number(val, line_no);
        else if (key == "A") cfg.contract.payout = parse_number(val, line_no);
        else if (key == "kind") {
            if (val == "vanilla_call") cfg.contract.kind = option_kind::vanilla_call;
            else if (val == "vanilla_put") cfg.contract.kind = option_kind::vanilla_put;
            else if (val == "cash_or_nothing_call") cfg.contract.kind = option_kind::cash_or_nothing_call;
            else throw config_error(line_no, "unknown contract kind '" + val + "'");
        }
        else if (key == "n_paths") cfg.n_paths = std::size_t(parse_uint(val, line_no));
        else if (key == "seed") cfg.seed = parse_uint(val, line_no);
        else if (key == "dt") cfg.dt = parse_duration_impl(val, line_no);
        else if (key == "density") cfg.density = parse_bool(val, line_no);
        else if (key == "rows") cfg.rows = std::size_t(parse_uint(val, line_no));
        else if (key == "mc") cfg.mc_columns = parse_bool(val, line_no);
        else if (key == "quad_rule") {
            if (val == "adaptive_simpson") cfg.quad.rule = quad_rule::adaptive_simpson;
            else if (val == "gauss_legendre") cfg.quad.rule = quad_rule::gauss_legendre;
            else throw config_error(line_no, "unknown quad_rule '" + val + "'");
        }
        else if (key == "quad_nodes") cfg.quad.n_nodes = int(parse_uint(val, line_no));
        else if (key == "quad_rel_tol") cfg.quad.rel_tol = parse_number(val, line_no);
        else if (key == "include_head") cfg.quad.include_head = parse_bool(val, line_no);
        else throw config_error(line_no, "unknown key '" + key + "'");
    }

    if (!hist_len_set && cfg.model.conf.hist_len <= cfg.model.tau)
        cfg.model.conf.hist_len = 2.0 * cfg.model.tau;
    if (cfg.rho_list.empty())
        cfg.rho_list.push_back(cfg.model.rho);
    return cfg;
}

run_config load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw config_error(0, "cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_config_text(buf.str());
}

} // namespace sentopt
