// Copyright 2026 The rotorq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Kept in a header so tests can drive it in-process:
// run_cli(args, out, err) returns the process exit status.
//
//   0  success
//   1  invalid input or usage error
//   2  numerical failure, or a failed invariant check

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rotorq/analysis.hpp"
#include "rotorq/approximant.hpp"
#include "rotorq/code_params.hpp"
#include "rotorq/code_space.hpp"
#include "rotorq/error.hpp"
#include "rotorq/invariants.hpp"
#include "rotorq/noise_correction.hpp"
#include "rotorq/table_output.hpp"

namespace rotorq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitNumerical = 2;

/// Parse a grid: "a:b" (unit steps), "a:b:step", "log:a:b:count", or "x,y,z".
inline std::vector<double> parse_grid(const std::string &spec) {
    auto num = [&](const std::string &s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != s.size() || s.empty()) {
            throw InvalidArgument("grid: cannot parse '" + s + "' in '" + spec + "'");
        }
        return v;
    };
    auto split = [](const std::string &s, char sep) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, sep)) {
            parts.push_back(item);
        }
        return parts;
    };
    std::vector<double> grid;
    if (spec.find(':') == std::string::npos) {
        for (const auto &p : split(spec, ',')) {
            grid.push_back(num(p));
        }
    } else {
        auto parts = split(spec, ':');
        if (parts.size() == 4 && parts[0] == "log") {
            const double a = num(parts[1]), b = num(parts[2]);
            const double count = num(parts[3]);
            if (!(a > 0 && b > a && count >= 2 && count == std::floor(count))) {
                throw InvalidArgument("grid: log:a:b:count needs 0 < a < b and an integer count >= 2");
            }
            const int n = static_cast<int>(count);
            for (int i = 0; i < n; ++i) {
                grid.push_back(a * std::pow(b / a, static_cast<double>(i) / (n - 1)));
            }
            grid.back() = b;
        } else if (parts.size() == 2 || parts.size() == 3) {
            const double a = num(parts[0]), b = num(parts[1]);
            const double step = parts.size() == 3 ? num(parts[2]) : 1.0;
            if (!(step > 0 && b >= a)) {
                throw InvalidArgument("grid: a:b[:step] needs a <= b and step > 0");
            }
            const auto n = static_cast<long long>(std::floor((b - a) / step + 1e-9));
            if (n > 1'000'000) {
                throw InvalidArgument("grid: more than 10^6 points");
            }
            for (long long i = 0; i <= n; ++i) {
                grid.push_back(a + static_cast<double>(i) * step);
            }
        } else {
            throw InvalidArgument("grid: unrecognized form '" + spec + "'");
        }
    }
    if (grid.empty()) {
        throw InvalidArgument("grid: no points");
    }
    return grid;
}

/// Flat "key = value" file -> "--key value ..." tokens. '#' starts a
/// comment; a value of true/false toggles a flag; a value with spaces
/// becomes several tokens.
inline std::vector<std::string> config_tokens(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("config: cannot open '" + path + "'");
    }
    std::vector<std::string> tokens;
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) {
            return std::string();
        }
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidArgument("config: line " + std::to_string(lineno) + " is not 'key = value'");
        }
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        while (!key.empty() && key.front() == '-') {
            key.erase(key.begin());
        }
        if (key.empty() || value.empty()) {
            throw InvalidArgument("config: line " + std::to_string(lineno) + " has an empty key or value");
        }
        if (value == "true") {
            tokens.push_back("--" + key);
            continue;
        }
        if (value == "false") {
            continue;
        }
        tokens.push_back("--" + key);
        std::stringstream ss(value);
        std::string v;
        while (ss >> v) {
            tokens.push_back(v);
        }
    }
    return tokens;
}

namespace detail {

struct CodeOpts {
    int d = 2;
    int N = 1;
    int delta_L = 0;

    CodeParams params() const {
        return {d, N, delta_L};
    }
};

inline void add_code_options(CLI::App *s, CodeOpts &c) {
    s->add_option("--d", c.d, "qudit dimension d >= 2");
    s->add_option("--N", c.N, "number of encoded digits N >= 1");
    s->add_option("--delta-L", c.delta_L, "max correctable momentum shift (r = 2 delta_L + 1)");
}

inline void add_param_option(CLI::App *s, std::optional<double> &p) {
    s->add_option("--param,--xi,--gamma,--sigma,--L-M", p, "approximant parameter (xi, gamma, sigma or L_M)");
}

/// "name=value" for every option of a subcommand, in declaration order.
inline std::string echo_config(const CLI::App *app, const CLI::App *sub) {
    std::ostringstream os;
    os << "command=" << sub->get_name();
    auto dump = [&](const CLI::App *a) {
        for (const CLI::Option *opt : a->get_options()) {
            if (opt->get_lnames().empty() || opt->get_lnames()[0] == "help") {
                continue;
            }
            if (opt->get_group().empty() && opt->count() == 0) {
                continue;
            }
            std::string value;
            if (opt->count() > 0) {
                const auto res = opt->reduced_results();
                for (std::size_t i = 0; i < res.size(); ++i) {
                    value += (i ? " " : "") + res[i];
                }
            } else if (opt->get_items_expected_max() == 0) {
                value = "false";
            } else {
                value = opt->get_default_str();
                if (value.empty() || value == "{}") {
                    value = "unset";
                }
            }
            os << ' ' << opt->get_lnames()[0] << '=' << value;
        }
    };
    dump(app);
    dump(sub);
    return os.str();
}

inline CodewordKind parse_kind(const std::string &family, const std::optional<double> &param) {
    if (family == "ideal") {
        if (param) {
            throw InvalidArgument("--param is meaningless for --family ideal");
        }
        return IdealComb{};
    }
    if (!param) {
        throw InvalidArgument("--family " + family + " needs --param (or --xi/--gamma/--sigma/--L-M)");
    }
    return Approximant(parse_family(family), *param);
}

inline std::vector<std::string> pe_row(Family f, const CodeParams &p, double param, const PeResult &r,
                                       const std::optional<std::uint64_t> &seed) {
    return {std::string(family_name(f)),
            std::to_string(p.N()),
            std::to_string(p.d()),
            std::to_string(p.delta_L()),
            format_double(param),
            std::string(method_name(r.method)),
            format_double(r.value),
            format_double(r.error_estimate),
            format_double(r.log10_value),
            seed ? std::to_string(*seed) : std::string()};
}

inline const std::vector<std::string> kPeHeader = {"family", "N",     "d",              "delta_L",   "parameter",
                                                   "method", "p_e",   "error_estimate", "log10_p_e", "seed"};

}  // namespace detail

inline int run_cli(const std::vector<std::string> &args_in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Rotor encodings of qubits and qudits: tables, code words, error probabilities, round trips."};
    app.name("rotorq");
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)->always_capture_default();
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, format = "csv", output;
    app.add_option("--config", config_path, "flat 'key = value' file; command-line flags win");
    app.add_option("--format", format, "csv or pretty")->check(CLI::IsMember({"csv", "pretty"}));
    app.add_option("--output,-o", output, "write to this file instead of stdout");

    // tables
    detail::CodeOpts t_code;
    std::vector<long long> t_range{-4, 4};
    bool t_binary = false;
    long long t_window = 0;
    auto *tables = app.add_subcommand("tables", "encoding table (digits, residue q, rotor index) over a range of ell");
    detail::add_code_options(tables, t_code);
    tables->add_option("--range", t_range, "ell range: lo hi")->expected(2);
    tables->add_flag("--binary", t_binary, "sign-and-magnitude binary labels instead");
    tables->add_option("--window-half", t_window, "binary labels: window half-width (0: fit the range)");

    // codeword
    detail::CodeOpts c_code;
    std::optional<long long> c_k;
    std::vector<int> c_digits;
    std::string c_family = "ideal";
    std::optional<double> c_param;
    long long c_window = 0;
    auto *codeword = app.add_subcommand("codeword", "momentum amplitudes of a code word");
    detail::add_code_options(codeword, c_code);
    codeword->add_option("--k", c_k, "code word index");
    codeword->add_option("--digits", c_digits, "digits p_1,...,p_N (instead of --k)")->delimiter(',');
    codeword->add_option("--family", c_family, "ideal, trunc-gauss, cos-power, gauss-env or grating");
    detail::add_param_option(codeword, c_param);
    codeword->add_option("--window-half", c_window, "momentum window half-width (0: default)");

    // pe
    detail::CodeOpts p_code;
    std::string p_family;
    std::optional<double> p_param;
    std::vector<std::string> p_methods;
    int p_trials = 0;
    std::optional<std::uint64_t> p_seed;
    auto *pe = app.add_subcommand("pe", "noncorrectable-error probability at one parameter");
    detail::add_code_options(pe, p_code);
    pe->add_option("--family", p_family, "trunc-gauss, cos-power, gauss-env or grating")->required();
    detail::add_param_option(pe, p_param);
    pe->add_option("--method", p_methods, "quadrature, closed_form, asymptotic, monte_carlo (default: all that apply)")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    pe->add_option("--trials", p_trials, "Monte Carlo trials (adds monte_carlo when > 0)");
    pe->add_option("--seed", p_seed, "random seed (required with --trials)");

    // sweep
    detail::CodeOpts s_code;
    std::vector<int> s_Ns;
    std::string s_family, s_grid;
    std::vector<std::string> s_methods;
    int s_trials = 100000;
    std::optional<std::uint64_t> s_seed;
    auto *sw = app.add_subcommand("sweep", "error probability over a parameter grid");
    sw->add_option("--d", s_code.d, "qudit dimension d >= 2");
    sw->add_option("--N", s_Ns, "digit counts, comma separated")->delimiter(',')->default_str("1");
    sw->add_option("--delta-L", s_code.delta_L, "max correctable momentum shift");
    sw->add_option("--family", s_family, "trunc-gauss, cos-power, gauss-env or grating")->required();
    sw->add_option("--grid", s_grid, "a:b, a:b:step, log:a:b:count or x,y,z")->required();
    sw->add_option("--method", s_methods, "methods, comma separated (default quadrature)")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    sw->add_option("--trials", s_trials, "Monte Carlo trials per point");
    sw->add_option("--seed", s_seed, "random seed (required for monte_carlo)");

    // roundtrip
    detail::CodeOpts r_code;
    std::string r_family = "ideal", r_readout = "eigenphase";
    std::optional<double> r_param;
    std::vector<int> r_digits;
    double r_eps = 0.0;
    long long r_e = 0;
    int r_trials = 100;
    std::optional<std::uint64_t> r_seed;
    long long r_window = 0;
    auto *rt = app.add_subcommand("roundtrip", "encode, apply an error, measure, correct, compare");
    detail::add_code_options(rt, r_code);
    rt->add_option("--family", r_family, "ideal, trunc-gauss, cos-power, gauss-env or grating");
    detail::add_param_option(rt, r_param);
    rt->add_option("--digits", r_digits, "digits p_1,...,p_N (default all 0)")->delimiter(',');
    rt->add_option("--epsilon", r_eps, "angle drift (radians)");
    rt->add_option("--e", r_e, "momentum shift");
    rt->add_option("--trials", r_trials, "number of trials");
    rt->add_option("--seed", r_seed, "random seed (required)");
    rt->add_option("--readout", r_readout, "angle read-off for ideal combs: eigenphase or born")
        ->check(CLI::IsMember({"eigenphase", "born"}));
    rt->add_option("--window-half", r_window, "momentum window half-width (0: default)");

    // check
    detail::CodeOpts k_code{2, 3, 1};
    int k_probes = 20;
    std::uint64_t k_seed = CheckOptions{}.seed;
    long long k_window = 256;
    std::string k_corrupt;
    auto *check = app.add_subcommand("check", "operator-algebra invariant suite");
    detail::add_code_options(check, k_code);
    check->add_option("--probes", k_probes, "random probe states");
    check->add_option("--seed", k_seed, "probe seed");
    check->add_option("--window-half", k_window, "probe window half-width");
    check->add_option("--corrupt-operator", k_corrupt, "test hook")->group("");

    try {
        // Splice the config file in right after the subcommand name so that
        // later (command-line) occurrences of an option take precedence.
        std::vector<std::string> args = args_in;
        for (std::size_t i = 0; i < args.size(); ++i) {
            std::string path;
            if (args[i] == "--config" && i + 1 < args.size()) {
                path = args[i + 1];
            } else if (args[i].rfind("--config=", 0) == 0) {
                path = args[i].substr(9);
            } else {
                continue;
            }
            auto sub_pos = std::find_if(args.begin(), args.end(), [&](const std::string &a) {
                return a == "tables" || a == "codeword" || a == "pe" || a == "sweep" || a == "roundtrip" ||
                       a == "check";
            });
            if (sub_pos == args.end()) {
                throw InvalidArgument("--config given without a command");
            }
            const auto tokens = config_tokens(path);
            args.insert(sub_pos + 1, tokens.begin(), tokens.end());
            break;
        }
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    } catch (const InvalidArgument &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    std::ofstream file;
    std::ostream *os = &out;
    auto emit = [&](const Table &t) {
        if (format == "pretty") {
            t.write_pretty(*os);
        } else {
            t.write_csv(*os);
        }
    };

    try {
        if (!output.empty()) {
            file.open(output);
            if (!file) {
                throw InvalidArgument("cannot open output file '" + output + "'");
            }
            os = &file;
        }
        const CLI::App *sub = app.get_subcommands().front();
        Table table;
        table.comments.push_back("config: " + detail::echo_config(&app, sub));

        if (sub == tables) {
            const Ell lo = t_range.at(0), hi = t_range.at(1);
            if (lo > hi) {
                throw InvalidArgument("--range: lo must not exceed hi");
            }
            if (t_binary) {
                if (t_code.N < 1) {
                    throw InvalidArgument("--N must be >= 1");
                }
                const Ell w = t_window > 0 ? t_window : std::max(std::llabs(lo), std::llabs(hi));
                std::vector<std::vector<int>> bits;
                for (Ell ell = lo; ell <= hi; ++ell) {
                    bits.push_back(binary_labels(ell, t_code.N, w));
                }
                if (format == "pretty") {
                    table.header = {"L"};
                    for (Ell ell = lo; ell <= hi; ++ell) {
                        table.header.push_back(std::to_string(ell));
                    }
                    for (int j = 0; j < t_code.N; ++j) {
                        std::vector<std::string> row{"Z_" + std::to_string(j + 1)};
                        for (const auto &b : bits) {
                            row.push_back(std::to_string(b[static_cast<std::size_t>(j)]));
                        }
                        table.rows.push_back(row);
                    }
                } else {
                    table.header = {"ell"};
                    for (int j = 1; j <= t_code.N; ++j) {
                        table.header.push_back("Z_" + std::to_string(j));
                    }
                    for (Ell ell = lo; ell <= hi; ++ell) {
                        std::vector<std::string> row{std::to_string(ell)};
                        for (int b : bits[static_cast<std::size_t>(ell - lo)]) {
                            row.push_back(std::to_string(b));
                        }
                        table.rows.push_back(row);
                    }
                }
            } else {
                const CodeParams params = t_code.params();
                table.comments.push_back(params.describe());
                const auto rows = encoding_table(params, lo, hi);
                if (format == "pretty") {
                    table.header = {"L"};
                    for (const auto &r : rows) {
                        table.header.push_back(std::to_string(r.ell));
                    }
                    for (int j = 0; j < params.N(); ++j) {
                        std::vector<std::string> row{"Z_" + std::to_string(j + 1)};
                        for (const auto &r : rows) {
                            row.push_back(std::to_string(r.labels.digits[static_cast<std::size_t>(j)]));
                        }
                        table.rows.push_back(row);
                    }
                    std::vector<std::string> qrow{"S_L"}, irow{"floor(L/m)"};
                    for (const auto &r : rows) {
                        qrow.push_back(std::to_string(r.labels.q));
                        irow.push_back(std::to_string(r.labels.rotor_index));
                    }
                    table.rows.push_back(qrow);
                    table.rows.push_back(irow);
                } else {
                    table.header = {"ell"};
                    for (int j = 1; j <= params.N(); ++j) {
                        table.header.push_back("p_" + std::to_string(j));
                    }
                    table.header.push_back("q");
                    table.header.push_back("rotor_index");
                    for (const auto &r : rows) {
                        std::vector<std::string> row{std::to_string(r.ell)};
                        for (int p : r.labels.digits) {
                            row.push_back(std::to_string(p));
                        }
                        row.push_back(std::to_string(r.labels.q));
                        row.push_back(std::to_string(r.labels.rotor_index));
                        table.rows.push_back(row);
                    }
                }
            }
        } else if (sub == codeword) {
            const CodeParams params = c_code.params();
            const CodewordKind kind = detail::parse_kind(c_family, c_param);
            if (c_k && !c_digits.empty()) {
                throw InvalidArgument("give either --k or --digits, not both");
            }
            const std::vector<int> digits =
                !c_digits.empty() ? c_digits : codeword_digits(c_k.value_or(0), params);
            const Ell W = c_window > 0 ? c_window : default_window_half(kind, params);
            const RotorState s = logical_encode(digits, params, kind, W, 0);
            table.comments.push_back(params.describe() + " k=" + std::to_string(codeword_index(digits, params)) +
                                     " window_half=" + std::to_string(W));
            table.header = {"ell", "re", "im", "probability"};
            Ell ell = s.l_min();
            for (const auto &a : s.amplitudes()) {
                if (a != cplx{}) {
                    table.rows.push_back(
                        {std::to_string(ell), format_double(a.real()), format_double(a.imag()), format_double(std::norm(a))});
                }
                ++ell;
            }
        } else if (sub == pe) {
            const CodeParams params = p_code.params();
            if (!p_param) {
                throw InvalidArgument("pe needs --param (or --xi/--gamma/--sigma/--L-M)");
            }
            const Approximant a(parse_family(p_family), *p_param);
            std::vector<PeMethod> methods;
            for (const auto &m : p_methods) {
                methods.push_back(parse_method(m));
            }
            if (methods.empty()) {
                methods.push_back(PeMethod::quadrature);
                if (a.family == Family::TruncatedGaussian) {
                    methods.push_back(PeMethod::closed_form);
                    methods.push_back(PeMethod::asymptotic);
                }
            }
            if (p_trials > 0 && std::find(methods.begin(), methods.end(), PeMethod::monte_carlo) == methods.end()) {
                methods.push_back(PeMethod::monte_carlo);
            }
            const bool wants_mc = std::find(methods.begin(), methods.end(), PeMethod::monte_carlo) != methods.end();
            if (wants_mc && !p_seed) {
                throw InvalidArgument("monte_carlo needs --seed");
            }
            if (wants_mc && p_trials <= 0) {
                throw InvalidArgument("monte_carlo needs --trials > 0");
            }
            table.comments.push_back(params.describe() + " pure_guess=" + format_double(pe_pure_guess(params)));
            table.header = detail::kPeHeader;
            std::optional<double> quad_value, closed_value;
            for (auto m : methods) {
                PeResult r;
                std::optional<std::uint64_t> seed;
                switch (m) {
                    case PeMethod::quadrature: r = pe_quadrature(a, params); quad_value = r.value; break;
                    case PeMethod::closed_form:
                    case PeMethod::asymptotic:
                        if (a.family != Family::TruncatedGaussian) {
                            throw InvalidArgument(std::string(method_name(m)) + " exists only for trunc-gauss");
                        }
                        r = m == PeMethod::closed_form ? pe_closed_form(a.parameter, params)
                                                       : pe_asymptotic(a.parameter, params);
                        if (m == PeMethod::closed_form) {
                            closed_value = r.value;
                        }
                        break;
                    case PeMethod::monte_carlo: {
                        Rng rng = make_rng(*p_seed);
                        r = pe_monte_carlo(a, params, p_trials, rng);
                        seed = p_seed;
                        break;
                    }
                }
                table.rows.push_back(detail::pe_row(a.family, params, a.parameter, r, seed));
            }
            if (quad_value && closed_value) {
                table.comments.push_back("|quadrature - closed_form| = " +
                                         format_double(std::abs(*quad_value - *closed_value)));
            }
        } else if (sub == sw) {
            if (s_Ns.empty()) {
                s_Ns = {1};
            }
            SweepSpec spec;
            spec.family = parse_family(s_family);
            spec.grid = parse_grid(s_grid);
            spec.methods.clear();
            for (const auto &m : s_methods) {
                spec.methods.push_back(parse_method(m));
            }
            if (spec.methods.empty()) {
                spec.methods.push_back(PeMethod::quadrature);
            }
            spec.trials = s_trials;
            spec.seed = s_seed;
            table.header = detail::kPeHeader;
            for (int N : s_Ns) {
                spec.params = CodeParams(s_code.d, N, s_code.delta_L);
                for (const auto &row : sweep(spec)) {
                    table.rows.push_back(detail::pe_row(row.family, row.params, row.parameter, row.result, row.seed));
                }
            }
        } else if (sub == rt) {
            if (!r_seed) {
                throw InvalidArgument("roundtrip needs --seed");
            }
            RoundTripConfig cfg;
            cfg.params = r_code.params();
            cfg.kind = detail::parse_kind(r_family, r_param);
            cfg.digits = r_digits.empty() ? std::vector<int>(static_cast<std::size_t>(cfg.params.N()), 0) : r_digits;
            cfg.error = {r_eps, r_e};
            cfg.trials = r_trials;
            cfg.seed = *r_seed;
            cfg.window_half = r_window;
            cfg.readout = parse_angle_readout(r_readout);
            const auto rep = run_round_trip(cfg);
            table.comments.push_back(cfg.params.describe());
            std::ostringstream summary;
            summary << "trials=" << cfg.trials << " logical_errors=" << rep.logical_errors
                    << " logical_error_rate=" << format_double(rep.logical_error_rate)
                    << " standard_error=" << format_double(rep.standard_error) << " seed=" << rep.seed;
            table.comments.push_back(summary.str());
            table.header = {"trial", "epsilon", "e", "theta_residue", "q_residue", "fidelity", "logical_ok"};
            for (const auto &t : rep.trials) {
                table.rows.push_back({std::to_string(t.trial), format_double(t.epsilon), std::to_string(t.e_shift),
                                      format_double(t.theta_residue), std::to_string(t.q_residue),
                                      format_double(t.fidelity), t.logical_ok ? "1" : "0"});
            }
        } else if (sub == check) {
            CheckOptions opt;
            opt.params = k_code.params();
            opt.probes = k_probes;
            opt.seed = k_seed;
            opt.window_half = k_window;
            opt.corrupt = k_corrupt;
            if (opt.probes < 1) {
                throw InvalidArgument("--probes must be >= 1");
            }
            const auto results = run_algebra_suite(opt);
            table.header = {"suite", "max_residual", "tolerance", "status"};
            for (const auto &s : results) {
                table.rows.push_back(
                    {s.name, format_double(s.max_residual), format_double(s.tolerance), s.passed ? "pass" : "FAIL"});
            }
            emit(table);
            return all_passed(results) ? kExitOk : kExitNumerical;
        }
        emit(table);
        return kExitOk;
    } catch (const InvalidArgument &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const NumericalFailure &e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace rotorq::cli
