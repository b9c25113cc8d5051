// SPDX-License-Identifier: Apache-2.0
//
// risesr - secrecy-rate optimization for RIS-assisted MISO wiretap links
// Copyright (C) 2026 The risesr authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "risesr/config.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

#include "risesr/errors.hpp"

namespace risesr {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_scalar(std::string_view key, std::string_view text, int line)
{
    text = trim(text);
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw ConfigError(line, "invalid value '" + std::string(text) + "' for key '" +
                                    std::string(key) + "'");
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(value))
            throw ConfigError(line, "non-finite value for key '" + std::string(key) + "'");
    }
    return value;
}

template <typename T>
std::vector<T> parse_list(std::string_view key, std::string_view text, int line)
{
    std::vector<T> out;
    text = trim(text);
    while (!text.empty()) {
        const auto comma = text.find(',');
        out.push_back(parse_scalar<T>(key, text.substr(0, comma), line));
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    if (out.empty()) throw ConfigError(line, "empty list for key '" + std::string(key) + "'");
    return out;
}

template <typename T>
std::string join(const std::vector<T>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        if constexpr (std::is_floating_point_v<T>)
            out += format_number(values[i]);
        else
            out += std::to_string(values[i]);
    }
    return out;
}

void require(bool ok, int line, std::string_view key, const char* what)
{
    if (!ok) throw ConfigError(line, "key '" + std::string(key) + "' " + what);
}

std::vector<double> arithmetic(double from, double to, double step)
{
    std::vector<double> v;
    for (double x = from; x <= to + 1e-9; x += step) v.push_back(x);
    return v;
}

} // namespace

Command parse_command(std::string_view name)
{
    if (name == "convergence") return Command::kConvergence;
    if (name == "distance-sweep") return Command::kDistanceSweep;
    if (name == "qos-sweep") return Command::kQosSweep;
    if (name == "nris-sweep") return Command::kNrisSweep;
    if (name == "solve-one") return Command::kSolveOne;
    throw ConfigError(0, "unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command cmd)
{
    switch (cmd) {
    case Command::kConvergence: return "convergence";
    case Command::kDistanceSweep: return "distance-sweep";
    case Command::kQosSweep: return "qos-sweep";
    case Command::kNrisSweep: return "nris-sweep";
    case Command::kSolveOne: return "solve-one";
    }
    return "unknown";
}

std::string format_number(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ec == std::errc() ? ptr : buf);
}

double RunConfig::power_watts() const { return std::pow(10.0, power_dbw / 10.0); }
double RunConfig::noise_watts() const { return std::pow(10.0, noise_dbw / 10.0); }

MonteCarloSetup RunConfig::monte_carlo(int n_antennas, int n_elements, double d_ab_h) const
{
    MonteCarloSetup s;
    s.geom = geom;
    s.geom.d_ab_h = d_ab_h;
    s.n = n_antennas;
    s.n_ris = n_elements;
    s.sigma2_b = s.sigma2_e = noise_watts();
    s.power = power_watts();
    s.solver = solver;
    s.n_realizations = realizations;
    s.seed = seed;
    s.threads = threads;
    return s;
}

RunConfig default_config(Command cmd)
{
    RunConfig cfg;
    cfg.distances = arithmetic(10.0, 70.0, 10.0);
    cfg.qos_exponents = {10.0, 50.0};
    cfg.antennas = {1, 2, 3, 4};
    cfg.nris_values = {8, 16, 32, 64, 128, 256};
    switch (cmd) {
    case Command::kConvergence:
        cfg.realizations = 50;
        cfg.geom.d_ab_h = 10.0;
        break;
    case Command::kDistanceSweep:
        break;
    case Command::kQosSweep:
        cfg.geom.d_ab_h = 40.0;
        cfg.qos_exponents = arithmetic(10.0, 100.0, 10.0);
        break;
    case Command::kNrisSweep:
        cfg.geom.d_ab_h = 40.0;
        cfg.qos_exponents = {10.0, 20.0, 60.0};
        break;
    case Command::kSolveOne:
        cfg.realizations = 1;
        break;
    }
    return cfg;
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value, int line)
{
    key = trim(key);
    value = trim(value);
    auto num = [&] { return parse_scalar<double>(key, value, line); };
    auto positive = [&] {
        const double v = num();
        require(v > 0.0, line, key, "must be positive");
        return v;
    };
    auto non_negative = [&] {
        const double v = num();
        require(v >= 0.0, line, key, "must be non-negative");
        return v;
    };
    auto integer = [&] { return parse_scalar<int>(key, value, line); };

    if (key == "power_dbw") cfg.power_dbw = num();
    else if (key == "noise_dbw") cfg.noise_dbw = num();
    else if (key == "pl_ref_db") cfg.geom.pl_ref_db = num();
    else if (key == "d_ref") cfg.geom.d_ref = positive();
    else if (key == "xi_ai") cfg.geom.xi_ai = positive();
    else if (key == "xi_ib") cfg.geom.xi_ib = positive();
    else if (key == "xi_ie") cfg.geom.xi_ie = positive();
    else if (key == "xi_ab") cfg.geom.xi_ab = positive();
    else if (key == "xi_ae") cfg.geom.xi_ae = positive();
    else if (key == "d_ai") cfg.geom.d_ai = positive();
    else if (key == "d_ab_h") cfg.geom.d_ab_h = non_negative();
    else if (key == "d_ae_h") cfg.geom.d_ae_h = non_negative();
    else if (key == "d_v") {
        cfg.geom.d_v = num();
        require(cfg.geom.d_v != 0.0, line, key, "must be non-zero");
    }
    else if (key == "n") {
        cfg.n = integer();
        require(cfg.n >= 1, line, key, "must be >= 1");
    } else if (key == "n_ris") {
        cfg.n_ris = integer();
        require(cfg.n_ris >= 0, line, key, "must be >= 0");
    } else if (key == "realizations") {
        cfg.realizations = integer();
        require(cfg.realizations >= 1, line, key, "must be >= 1");
    } else if (key == "seed") {
        cfg.seed = parse_scalar<std::uint64_t>(key, value, line);
    } else if (key == "threads") {
        cfg.threads = integer();
        require(cfg.threads >= 1, line, key, "must be >= 1");
    } else if (key == "max_iters") {
        cfg.solver.max_iters = integer();
        require(cfg.solver.max_iters >= 1, line, key, "must be >= 1");
    } else if (key == "rel_tol") {
        cfg.solver.rel_tol = positive();
    } else if (key == "multi_start") {
        cfg.solver.multi_start = integer();
        require(cfg.solver.multi_start >= 1, line, key, "must be >= 1");
    } else if (key == "init") {
        if (value == "ones") cfg.solver.init_mode = InitMode::kAllOnes;
        else if (value == "random") cfg.solver.init_mode = InitMode::kSeededRandom;
        else throw ConfigError(line, "init must be 'ones' or 'random'");
    } else if (key == "esr_base") {
        if (value == "two") cfg.esr_base = ExpBase::kTwo;
        else if (value == "natural") cfg.esr_base = ExpBase::kNatural;
        else throw ConfigError(line, "esr_base must be 'two' or 'natural'");
    } else if (key == "distances") {
        cfg.distances = parse_list<double>(key, value, line);
        for (double d : cfg.distances) require(d >= 0.0, line, key, "entries must be non-negative");
    } else if (key == "qos_exponents") {
        cfg.qos_exponents = parse_list<double>(key, value, line);
        for (double a : cfg.qos_exponents) require(a > 0.0, line, key, "entries must be positive");
    } else if (key == "antennas") {
        cfg.antennas = parse_list<int>(key, value, line);
        for (int n : cfg.antennas) require(n >= 1, line, key, "entries must be >= 1");
    } else if (key == "nris_values") {
        cfg.nris_values = parse_list<int>(key, value, line);
        for (int n : cfg.nris_values) require(n >= 1, line, key, "entries must be >= 1");
    } else {
        throw ConfigError(line, "unknown key '" + std::string(key) + "'");
    }
}

void apply_config_text(RunConfig& cfg, std::string_view text)
{
    const std::string_view body = trim(text);
    if (!body.empty() && body.front() == '{') {
        nlohmann::json manifest;
        try {
            manifest = nlohmann::json::parse(body);
        } catch (const nlohmann::json::parse_error& e) {
            throw ConfigError(0, std::string("manifest is not valid JSON: ") + e.what());
        }
        if (!manifest.contains("config") || !manifest["config"].is_object())
            throw ConfigError(0, "manifest has no 'config' object");
        for (const auto& [key, value] : manifest["config"].items()) {
            if (!value.is_string()) throw ConfigError(0, "manifest value for '" + key + "' is not a string");
            apply_setting(cfg, key, value.get<std::string>());
        }
        return;
    }

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(line_no, "expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        if (key.empty()) throw ConfigError(line_no, "missing key before '='");
        apply_setting(cfg, key, line.substr(eq + 1), line_no);
    }
}

std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg)
{
    const auto& g = cfg.geom;
    return {
        {"power_dbw", format_number(cfg.power_dbw)},
        {"noise_dbw", format_number(cfg.noise_dbw)},
        {"pl_ref_db", format_number(g.pl_ref_db)},
        {"d_ref", format_number(g.d_ref)},
        {"xi_ai", format_number(g.xi_ai)},
        {"xi_ib", format_number(g.xi_ib)},
        {"xi_ie", format_number(g.xi_ie)},
        {"xi_ab", format_number(g.xi_ab)},
        {"xi_ae", format_number(g.xi_ae)},
        {"d_ai", format_number(g.d_ai)},
        {"d_ab_h", format_number(g.d_ab_h)},
        {"d_ae_h", format_number(g.d_ae_h)},
        {"d_v", format_number(g.d_v)},
        {"n", std::to_string(cfg.n)},
        {"n_ris", std::to_string(cfg.n_ris)},
        {"realizations", std::to_string(cfg.realizations)},
        {"seed", std::to_string(cfg.seed)},
        {"threads", std::to_string(cfg.threads)},
        {"max_iters", std::to_string(cfg.solver.max_iters)},
        {"rel_tol", format_number(cfg.solver.rel_tol)},
        {"multi_start", std::to_string(cfg.solver.multi_start)},
        {"init", cfg.solver.init_mode == InitMode::kAllOnes ? "ones" : "random"},
        {"esr_base", cfg.esr_base == ExpBase::kTwo ? "two" : "natural"},
        {"distances", join(cfg.distances)},
        {"qos_exponents", join(cfg.qos_exponents)},
        {"antennas", join(cfg.antennas)},
        {"nris_values", join(cfg.nris_values)},
    };
}

} // namespace risesr
