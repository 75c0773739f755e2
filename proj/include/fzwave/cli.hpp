#pragma once

// Command-line front end: roots, kernel, solve, limits, oracle.
// Exit codes: 0 success, 2 invalid input, 3 numerical non-convergence.
// Data goes to --out (or the output stream); diagnostics to the error stream.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "errors.hpp"
#include "initial_data.hpp"
#include "kernel.hpp"
#include "laplace_oracle.hpp"
#include "params.hpp"
#include "rootfinder.hpp"
#include "solver.hpp"

namespace fzwave::cli {

using json = nlohmann::json;

struct GridConfig {
    double x_min = -4.0;
    double x_max = 4.0;
    int nx = 801;
    std::vector<double> t_list{1.0};
};

struct OutputConfig {
    std::string path;  // empty: output stream
    std::string format = "csv";
};

struct RunConfig {
    ModelParams model;
    QuadratureConfig quadrature;
    GridConfig grid;
    InitialData u0 = InitialData::dirac();
    InitialData v0 = InitialData::zero();
    OutputConfig output;
};

// Shortest text that still carries 17 significant digits; parses back to the
// same double.
inline std::string fmt(double v) {
    char buf[40];
    auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

inline void validate_run(const RunConfig& c) {
    validate_model(c.model);
    validate_quadrature(c.quadrature, c.model.epsilon);
    if (c.grid.nx < 3) throw ValidationError("nx", "[3,inf)", c.grid.nx);
    if (!(c.grid.x_min < c.grid.x_max)) throw ValidationError("x_min", "x_min must be < x_max");
    if (c.grid.t_list.empty()) throw ValidationError("t_list", "t list is empty");
    for (std::size_t i = 0; i < c.grid.t_list.size(); ++i) {
        if (!(c.grid.t_list[i] > 0.0)) throw ValidationError("t_list", "(0,inf)", c.grid.t_list[i]);
        if (i > 0 && !(c.grid.t_list[i] > c.grid.t_list[i - 1]))
            throw ValidationError("t_list", "t list must be strictly increasing");
    }
    if (c.output.format != "csv" && c.output.format != "json")
        throw ValidationError("format", "format must be csv or json");
    validate_initial(c.u0, "u0");
    validate_initial(c.v0, "v0");
}

// ---------------------------------------------------------------------------
// JSON config

namespace detail {

template <class T>
void get_if(const json& j, const char* key, T& dst) {
    if (j.contains(key)) dst = j.at(key).get<T>();
}

inline InitialData initial_from_json(const json& j, const char* name) {
    InitialData d;
    d.kind = parse_kind(j.value("kind", std::string("none")));
    get_if(j, "center", d.center);
    get_if(j, "width", d.width);
    get_if(j, "height", d.height);
    if (d.kind == InitialData::Kind::dirac) d.width = 0.0;
    if (j.contains("samples")) {
        const json& s = j.at("samples");
        d.samples = make_signal(s.at("grid").get<std::vector<double>>(), s.at("values").get<std::vector<double>>());
    }
    validate_initial(d, name);
    return d;
}

inline json initial_to_json(const InitialData& d) {
    json j{{"kind", kind_name(d.kind)}, {"center", d.center}, {"width", d.width}, {"height", d.height}};
    if (d.kind == InitialData::Kind::sampled)
        j["samples"] = {{"grid", d.samples.grid}, {"values", d.samples.values}};
    return j;
}

} // namespace detail

inline void apply_json(const json& j, RunConfig& c) {
    using detail::get_if;
    if (j.contains("model")) {
        const json& m = j.at("model");
        get_if(m, "alpha", c.model.alpha);
        get_if(m, "beta", c.model.beta);
        get_if(m, "tau", c.model.tau);
        get_if(m, "epsilon", c.model.epsilon);
    }
    if (j.contains("quadrature")) {
        const json& q = j.at("quadrature");
        get_if(q, "q_max", c.quadrature.q_max);
        get_if(q, "rho_max", c.quadrature.rho_max);
        get_if(q, "rel_tol", c.quadrature.rel_tol);
        get_if(q, "abs_tol", c.quadrature.abs_tol);
        get_if(q, "panels_per_period", c.quadrature.panels_per_period);
        get_if(q, "bromwich_s0", c.quadrature.bromwich_s0);
        get_if(q, "bromwich_p_max", c.quadrature.bromwich_p_max);
        get_if(q, "node_budget", c.quadrature.node_budget);
    }
    if (j.contains("grid")) {
        const json& g = j.at("grid");
        get_if(g, "x_min", c.grid.x_min);
        get_if(g, "x_max", c.grid.x_max);
        get_if(g, "nx", c.grid.nx);
        get_if(g, "t_list", c.grid.t_list);
    }
    if (j.contains("initial")) {
        const json& i = j.at("initial");
        if (i.contains("u0")) c.u0 = detail::initial_from_json(i.at("u0"), "u0");
        if (i.contains("v0")) c.v0 = detail::initial_from_json(i.at("v0"), "v0");
    }
    if (j.contains("output")) {
        const json& o = j.at("output");
        get_if(o, "path", c.output.path);
        get_if(o, "format", c.output.format);
    }
}

inline json meta_json(const RunConfig& c, const std::string& route) {
    const auto& q = c.quadrature;
    return {{"model", {{"alpha", c.model.alpha}, {"beta", c.model.beta}, {"tau", c.model.tau},
                       {"epsilon", c.model.epsilon}}},
            {"quadrature", {{"q_max", q.q_max}, {"rho_max", q.rho_max}, {"rel_tol", q.rel_tol},
                            {"abs_tol", q.abs_tol}, {"panels_per_period", q.panels_per_period},
                            {"bromwich_s0", q.bromwich_s0}, {"bromwich_p_max", q.bromwich_p_max},
                            {"node_budget", q.node_budget}}},
            {"grid", {{"x_min", c.grid.x_min}, {"x_max", c.grid.x_max}, {"nx", c.grid.nx},
                      {"t_list", c.grid.t_list}}},
            {"initial", {{"u0", detail::initial_to_json(c.u0)}, {"v0", detail::initial_to_json(c.v0)}}},
            {"route", route}};
}

// ---------------------------------------------------------------------------
// Tables

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

inline Table field_table(const Field& f) {
    Table t{{"x", "t", "u"}, {}};
    t.rows.reserve(f.t_list.size() * f.x_grid.size());
    for (std::size_t it = 0; it < f.t_list.size(); ++it)
        for (std::size_t i = 0; i < f.x_grid.size(); ++i) t.rows.push_back({f.x_grid[i], f.t_list[it], f.values[it][i]});
    return t;
}

inline void write_table(const Table& t, const std::string& format, const json& meta, std::ostream& os) {
    if (format == "json") {
        json j{{"meta", meta}, {"columns", t.columns}, {"data", t.rows}};
        os << j.dump() << '\n';
        return;
    }
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
    os << '\n';
    std::string line;
    for (const auto& r : t.rows) {
        line.clear();
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c) line += ',';
            line += fmt(r[c]);
        }
        line += '\n';
        os << line;
    }
}

inline void emit(const Table& t, const RunConfig& c, const json& meta, std::ostream& out) {
    if (c.output.path.empty()) {
        write_table(t, c.output.format, meta, out);
        return;
    }
    std::ofstream f(c.output.path, std::ios::binary);
    if (!f) throw ValidationError("out", "cannot open output file '" + c.output.path + "'");
    write_table(t, c.output.format, meta, f);
    if (!f) throw ValidationError("out", "failed writing output file '" + c.output.path + "'");
}

// ---------------------------------------------------------------------------
// Commands

struct Flags {
    std::optional<double> alpha, beta, tau, eps, theta, rho, t, x_min, x_max, s0;
    std::optional<int> nx;
    std::vector<double> t_list;
    std::string config, out, format, limit_case = "beta1";
};

inline RunConfig load_config(const Flags& f) {
    RunConfig c;
    if (!f.config.empty()) {
        std::ifstream in(f.config);
        if (!in) throw ValidationError("config", "cannot open config file '" + f.config + "'");
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw ValidationError("config", "invalid JSON in '" + f.config + "': " + e.what());
        }
        try {
            apply_json(j, c);
        } catch (const json::exception& e) {
            throw ValidationError("config", "bad value in '" + f.config + "': " + e.what());
        }
    }
    if (f.alpha) c.model.alpha = *f.alpha;
    if (f.beta) c.model.beta = *f.beta;
    if (f.tau) c.model.tau = *f.tau;
    if (f.eps) c.model.epsilon = *f.eps;
    if (f.x_min) c.grid.x_min = *f.x_min;
    if (f.x_max) c.grid.x_max = *f.x_max;
    if (f.nx) c.grid.nx = *f.nx;
    if (!f.t_list.empty()) c.grid.t_list = f.t_list;
    if (f.t) c.grid.t_list = {*f.t};
    if (!f.out.empty()) c.output.path = f.out;
    if (!f.format.empty()) c.output.format = f.format;
    return c;
}

inline std::vector<double> x_grid_of(const RunConfig& c) {
    return linspace(c.grid.x_min, c.grid.x_max, static_cast<std::size_t>(c.grid.nx));
}

inline int cmd_roots(const Flags& f, std::ostream& out) {
    const double alpha = f.alpha.value_or(0.25), tau = f.tau.value_or(0.1);
    double theta;
    if (f.theta) {
        theta = *f.theta;
    } else if (f.rho) {
        theta = theta_of_rho(*f.rho, f.beta.value_or(0.45));
    } else {
        throw ValidationError("theta", "roots needs --theta or --rho");
    }
    const ZeroPair z = find_zero_pair({alpha, tau, theta});
    char buf[160];
    std::snprintf(buf, sizeof buf, "s_z = %.6f %c %.6fi\n", z.s_z.real(), z.s_z.imag() < 0 ? '-' : '+',
                  std::abs(z.s_z.imag()));
    out << buf;
    out << "residual = " << fmt(z.residual) << '\n';
    out << "winding_checked = " << (z.winding_checked ? "true" : "false") << '\n';
    if (z.boundary_warning) out << "boundary_warning = true\n";
    return 0;
}

inline int cmd_kernel(const Flags& f, std::ostream& out) {
    RunConfig c = load_config(f);
    validate_run(c);
    if (f.rho) {
        Table t{{"rho", "t", "branch", "residue", "total"}, {}};
        for (double tt : c.grid.t_list) {
            const SpectralKernel k = spectral_kernel(*f.rho, tt, c.model, c.quadrature);
            t.rows.push_back({k.rho, k.t, k.branch_part, k.residue_part, k.total});
        }
        emit(t, c, meta_json(c, "spectral"), out);
        return 0;
    }
    const Field fld = kernel_eps(x_grid_of(c), c.grid.t_list, c.model, c.quadrature);
    emit(field_table(fld), c, meta_json(c, fld.route), out);
    return 0;
}

inline int cmd_solve(const Flags& f, std::ostream& out) {
    RunConfig c = load_config(f);
    validate_run(c);
    const Field fld = solve_field(c.u0, c.v0, x_grid_of(c), c.grid.t_list, c.model, c.quadrature);
    emit(field_table(fld), c, meta_json(c, fld.route), out);
    return 0;
}

// general assembly forced through a limit point vs the closed-form limit
inline int cmd_limits(const Flags& f, std::ostream& out) {
    RunConfig c = load_config(f);
    const std::string& which = f.limit_case;
    Field limit;
    ModelParams gp = c.model;
    if (which == "beta0") {
        gp.beta = f.beta.value_or(1e-3);
    } else if (which == "beta1") {
        gp.beta = f.beta.value_or(0.99);
    } else if (which == "alpha0") {
        gp.alpha = f.alpha.value_or(1e-3);
    } else if (which == "classical") {
        gp.alpha = 0.0;
        gp.beta = 1.0;
    } else {
        throw ValidationError("case", "case must be one of beta0|beta1|alpha0|classical");
    }
    c.model = gp;
    validate_run(c);
    const auto xs = x_grid_of(c);
    const auto& ts = c.grid.t_list;
    const Field general = kernel_eps(xs, ts, gp, c.quadrature, Route::general);
    if (which == "beta0") {
        limit = nonprop_solution(InitialData::dirac(), InitialData::zero(), xs, ts, gp.epsilon);
    } else if (which == "beta1") {
        if (!(gp.alpha > 0.0)) throw ValidationError("alpha", "(0,1)", gp.alpha);
        limit = kernel_time_fractional(xs, ts, gp.alpha, gp.tau, gp.epsilon, c.quadrature);
    } else if (which == "alpha0") {
        ModelParams lp = gp;
        lp.alpha = 0.0;
        limit = kernel_eps(xs, ts, lp, c.quadrature);
    } else {
        limit = kernel_classical(xs, ts, gp.tau, gp.epsilon);
    }
    Table t{{"x", "t", "u_general", "u_limit", "abs_diff"}, {}};
    for (std::size_t it = 0; it < ts.size(); ++it)
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double a = general.values[it][i], b = limit.values[it][i];
            t.rows.push_back({xs[i], ts[it], a, b, std::abs(a - b)});
        }
    json meta = meta_json(c, general.route + " vs " + limit.route);
    meta["case"] = which;
    emit(t, c, meta, out);
    return 0;
}

inline int cmd_oracle(const Flags& f, std::ostream& out) {
    RunConfig c = load_config(f);
    validate_run(c);
    const double rho = f.rho.value_or(1.0);
    BromwichConfig bc;
    bc.s0 = f.s0.value_or(c.quadrature.bromwich_s0);
    bc.p_max = c.quadrature.bromwich_p_max;
    Table t{{"rho", "t", "s0", "bromwich", "spectral", "abs_diff"}, {}};
    for (double tt : c.grid.t_list) {
        const double b = bromwich_invert(rho, tt, c.model, bc);
        const double s = spectral_kernel(rho, tt, c.model, c.quadrature).total;
        t.rows.push_back({rho, tt, bc.s0, b, s, std::abs(b - s)});
    }
    emit(t, c, meta_json(c, "bromwich"), out);
    return 0;
}

inline int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Space-time fractional Zener wave equation: kernels, solutions, certification", "fzwave"};
    app.require_subcommand(1);
    Flags f;

    auto model_opts = [&](CLI::App* s) {
        s->add_option("--alpha", f.alpha, "time-fractional order, [0,1)");
        s->add_option("--beta", f.beta, "space-fractional order, [0,1]");
        s->add_option("--tau", f.tau, "relaxation ratio tau_sigma/tau_eps, (0,1)");
    };
    auto run_opts = [&](CLI::App* s) {
        model_opts(s);
        s->add_option("--eps", f.eps, "regularization width, (0,1]");
        s->add_option("--x-min", f.x_min, "left end of the x grid");
        s->add_option("--x-max", f.x_max, "right end of the x grid");
        s->add_option("--nx", f.nx, "number of x grid points, >= 3");
        s->add_option("--t-list", f.t_list, "comma-separated output times")->delimiter(',');
        s->add_option("--t", f.t, "single output time (overrides --t-list)");
        s->add_option("--config", f.config, "JSON run configuration");
        s->add_option("--out", f.out, "output file (default: standard output)");
        s->add_option("--format", f.format, "csv or json");
    };

    CLI::App* roots = app.add_subcommand("roots", "zero pair of the characteristic function");
    model_opts(roots);
    roots->add_option("--theta", f.theta, "spatial symbol theta >= 0");
    roots->add_option("--rho", f.rho, "wave number (theta from rho and beta)");

    CLI::App* kernel = app.add_subcommand("kernel", "regularized kernel field, or S(rho,t) with --rho");
    run_opts(kernel);
    kernel->add_option("--rho", f.rho, "tabulate the spectral kernel at this wave number");

    CLI::App* solve = app.add_subcommand("solve", "displacement field for the configured initial data");
    run_opts(solve);

    CLI::App* limits = app.add_subcommand("limits", "general assembly next to a limiting-case kernel");
    run_opts(limits);
    limits->add_option("--case", f.limit_case, "beta0|beta1|alpha0|classical")
        ->check(CLI::IsMember({"beta0", "beta1", "alpha0", "classical"}));

    CLI::App* oracle = app.add_subcommand("oracle", "Bromwich inversion next to the spectral kernel");
    run_opts(oracle);
    oracle->add_option("--rho", f.rho, "wave number (default 1)");
    oracle->add_option("--s0", f.s0, "Bromwich abscissa (default from config, 1)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (roots->parsed()) return cmd_roots(f, out);
        if (kernel->parsed()) return cmd_kernel(f, out);
        if (solve->parsed()) return cmd_solve(f, out);
        if (limits->parsed()) return cmd_limits(f, out);
        if (oracle->parsed()) return cmd_oracle(f, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return 3;
    }
    err << app.help();
    return 2;
}

} // namespace fzwave::cli
