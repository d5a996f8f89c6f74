#include "bcft/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcft/errors.hpp"
#include "bcft/format.hpp"
#include "bcft/properties.hpp"
#include "bcft/roc.hpp"
#include "bcft/signals.hpp"
#include "bcft/transform.hpp"

namespace bcft::cli {

namespace {

/// Raised for malformed input that should map to the usage exit code.
struct UsageError : Error {
    using Error::Error;
};

double parse_double(const std::string& text) {
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(text, &used);
    } catch (const std::exception&) {
        throw DomainError("not a number: '" + text + "'");
    }
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
    if (used != text.size() || !std::isfinite(x)) throw DomainError("not a finite number: '" + text + "'");
    return x;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

ParameterMap parse_params(const std::vector<std::string>& items) {
    ParameterMap params;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw DomainError("parameter must be key=value: '" + item + "'");
        params[item.substr(0, eq)] = parse_double(item.substr(eq + 1));
    }
    return params;
}

int axis_index(const std::string& name) {
    static const char* names[] = {"a0", "a1", "a2", "a3"};
    for (int k = 0; k < 4; ++k) {
        if (name == names[k]) return k;
    }
    throw DomainError("unknown axis '" + name + "' (expected a0, a1, a2 or a3)");
}

std::vector<Bicomplex> read_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open grid file '" + path + "'");
    std::vector<Bicomplex> grid;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        try {
            grid.push_back(Bicomplex::from_units(parse_quad(line.substr(first, last - first + 1))));
        } catch (const DomainError& e) {
            throw DomainError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return grid;
}

struct Globals {
    double abs_tol = QuadratureConfig{}.abs_tol;
    double tail_tol = QuadratureConfig{}.tail_tol;
    unsigned jobs = 1;
    std::uint64_t seed = kDefaultSeed;
    std::string config;
};

// Values from the optional JSON config apply only where the flag was not given.
void apply_config(const Globals& flags_in, Globals& g, const CLI::App& app) {
    if (flags_in.config.empty()) return;
    std::ifstream in(flags_in.config);
    if (!in) throw DomainError("cannot open config file '" + flags_in.config + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw DomainError("config: expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "abs_tol") {
                if (app.count("--abs-tol") == 0) g.abs_tol = value.get<double>();
            } else if (key == "tail_tol") {
                if (app.count("--tail-tol") == 0) g.tail_tol = value.get<double>();
            } else if (key == "jobs") {
                if (app.count("--jobs") == 0) g.jobs = value.get<unsigned>();
            } else if (key == "seed") {
                if (app.count("--seed") == 0) g.seed = value.get<std::uint64_t>();
            } else {
                throw DomainError("config: unknown key '" + key + "'");
            }
        } catch (const nlohmann::json::exception& e) {
            throw DomainError("config: bad value for '" + key + "': " + e.what());
        }
    }
}

}  // namespace

std::array<double, 4> parse_quad(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 4) throw DomainError("expected four comma-separated numbers, got '" + text + "'");
    std::array<double, 4> out{};
    for (int k = 0; k < 4; ++k) out[k] = parse_double(parts[k]);
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bicomplex Fourier transform toolkit", "bcft"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--abs-tol", g.abs_tol, "Absolute quadrature tolerance")->check(CLI::PositiveNumber);
    app.add_option("--tail-tol", g.tail_tol, "Truncated-tail budget (half per side)")->check(CLI::PositiveNumber);
    app.add_option("--jobs", g.jobs, "Worker threads (0 = hardware concurrency)");
    app.add_option("--seed", g.seed, "Seed for verify frequency sampling");
    app.add_option("--config", g.config, "JSON file mirroring the global flags; flags win");

    // transform
    auto* tr = app.add_subcommand("transform", "Evaluate the transform on a frequency grid (CSV)");
    std::string tr_signal;
    std::vector<std::string> tr_params, tr_points, tr_idem;
    std::string tr_grid_file, tr_axes, tr_base = "0,0,0,0";
    double tr_from = 0.0, tr_to = 0.0;
    std::size_t tr_steps = 0;
    tr->add_option("--signal", tr_signal, "Catalog signal name")->required();
    tr->add_option("--param", tr_params, "Signal parameter key=value (repeatable)");
    tr->add_option("--point", tr_points, "Frequency a0,a1,a2,a3 (repeatable)");
    tr->add_option("--idempotent", tr_idem, "Frequency re1,im1,re2,im2 (repeatable)");
    tr->add_option("--grid-file", tr_grid_file, "File with one a0,a1,a2,a3 per line");
    tr->add_option("--grid-axis", tr_axes, "Comma list of unit axes to sweep");
    tr->add_option("--from", tr_from, "Sweep start");
    tr->add_option("--to", tr_to, "Sweep end");
    tr->add_option("--steps", tr_steps, "Sweep points per axis");
    tr->add_option("--base", tr_base, "Fixed coordinates of swept grids");

    // roc
    auto* rc = app.add_subcommand("roc", "Region of convergence query or cross-section polygon");
    std::optional<double> rc_alpha, rc_beta;
    std::string rc_signal, rc_point;
    std::vector<std::string> rc_params;
    bool rc_polygon = false;
    rc->add_option("--alpha", rc_alpha, "Right-tail decay rate");
    rc->add_option("--beta", rc_beta, "Left-tail growth bound");
    rc->add_option("--signal", rc_signal, "Take the region from a catalog signal");
    rc->add_option("--param", rc_params, "Signal parameter key=value (repeatable)");
    auto* rc_point_opt = rc->add_option("--point", rc_point, "Query frequency a0,a1,a2,a3");
    rc->add_flag("--polygon", rc_polygon, "Print the (a1, a2) cross-section vertices as CSV")->excludes(rc_point_opt);

    // verify
    auto* vf = app.add_subcommand("verify", "Run the transform property suite (JSON lines)");
    std::vector<std::string> vf_checks, vf_signals;
    std::size_t vf_frequencies = 20;
    vf->add_option("--check", vf_checks, "Only these checks (repeatable)");
    vf->add_option("--signal", vf_signals, "Only these catalog signals (repeatable)");
    vf->add_option("--frequencies", vf_frequencies, "Frequencies per check and signal")->check(CLI::PositiveNumber);

    // catalog
    auto* ct = app.add_subcommand("catalog", "List the built-in signals (JSON)");
    std::string ct_name;
    ct->add_option("--name", ct_name, "Only this signal");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "bcft: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const Globals flags = g;
        apply_config(flags, g, app);
        QuadratureConfig cfg;
        cfg.abs_tol = g.abs_tol;
        cfg.tail_tol = g.tail_tol;
        cfg.validate();

        if (*tr) {
            const SignalSpec s = make_signal(tr_signal, parse_params(tr_params));
            std::vector<Bicomplex> grid;
            for (const auto& p : tr_points) grid.push_back(Bicomplex::from_units(parse_quad(p)));
            for (const auto& p : tr_idem) {
                const auto q = parse_quad(p);
                grid.push_back(Bicomplex::from_idempotent(Complex(q[0], q[1]), Complex(q[2], q[3])));
            }
            if (!tr_grid_file.empty()) {
                const auto file_grid = read_grid_file(tr_grid_file);
                grid.insert(grid.end(), file_grid.begin(), file_grid.end());
            }
            if (!tr_axes.empty()) {
                if (tr_steps == 0) throw DomainError("--grid-axis requires --steps >= 1");
                std::vector<int> axes;
                for (const auto& a : split(tr_axes, ',')) axes.push_back(axis_index(a));
                const auto base = parse_quad(tr_base);
                std::vector<std::size_t> idx(axes.size(), 0);
                auto value = [&](std::size_t i) {
                    if (tr_steps == 1) return tr_from;
                    return tr_from + (tr_to - tr_from) * static_cast<double>(i) / static_cast<double>(tr_steps - 1);
                };
                while (true) {
                    auto a = base;
                    for (std::size_t k = 0; k < axes.size(); ++k) a[axes[k]] = value(idx[k]);
                    grid.push_back(Bicomplex::from_units(a));
                    std::size_t k = axes.size();
                    while (k > 0 && ++idx[k - 1] == tr_steps) idx[--k] = 0;
                    if (k == 0) break;
                }
            }
            if (grid.empty()) {
                throw DomainError("transform: no frequencies (use --point, --idempotent, --grid-file or --grid-axis)");
            }
            const auto results = transform_grid(s, grid, cfg, g.jobs);
            out << grid_csv(results);
            bool all_ok = true;
            for (const auto& p : results) {
                if (p.status != PointStatus::ok) {
                    all_ok = false;
                    err << "bcft: " << p.message << "\n";
                }
            }
            return all_ok ? kExitOk : kExitFailures;
        }

        if (*rc) {
            std::optional<ConvergenceRegion> region;
            if (!rc_signal.empty()) {
                if (rc_alpha || rc_beta) throw DomainError("roc: give either --signal or --alpha/--beta");
                region = make_signal(rc_signal, parse_params(rc_params)).region;
            } else {
                if (!rc_alpha || !rc_beta) throw DomainError("roc: --alpha and --beta are required");
                region = ConvergenceRegion(*rc_alpha, *rc_beta);
            }
            if (rc_polygon) {
                out << polygon_csv(region->cross_section_polygon());
                return kExitOk;
            }
            if (rc_point.empty()) throw DomainError("roc: give --point or --polygon");
            const Bicomplex w = Bicomplex::from_units(parse_quad(rc_point));
            out << (region->contains_strips(w) ? "inside" : "outside") << " margin=" << format_number(region->margin(w))
                << "\n";
            return kExitOk;
        }

        if (*vf) {
            SuiteOptions opts;
            opts.seed = g.seed;
            opts.jobs = g.jobs;
            opts.frequencies = vf_frequencies;
            opts.checks = vf_checks;
            opts.signals = vf_signals;
            opts.quadrature = cfg;
            const auto reports = run_suite(opts);
            std::size_t failures = 0;
            for (const auto& r : reports) {
                out << report_json(r) << "\n";
                if (!r.pass) ++failures;
            }
            if (failures) err << "bcft: " << failures << " of " << reports.size() << " checks failed\n";
            return failures == 0 ? kExitOk : kExitFailures;
        }

        if (*ct) {
            std::vector<SignalSpec> listing;
            if (ct_name.empty()) {
                listing = catalog();
            } else {
                listing.push_back(make_signal(ct_name));
            }
            out << catalog_json(listing) << "\n";
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "bcft: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace bcft::cli
