// struvekit command-line front end.
//
//   struvekit eval       --nu NU --x X [--fn M] [--method auto]
//   struvekit verify     [--case all|ID[,ID...]] [grid flags] [--flip-case ID]
//   struvekit identities [--nu NU --x X | grid flags]
//   struvekit table      [grid flags] [--out data.csv]
//
// Exit codes: 0 success, 2 usage or domain error, 3 verification violations.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <struvekit/closed_forms.hpp>
#include <struvekit/errors.hpp>
#include <struvekit/evaluate.hpp>
#include <struvekit/fox_wright.hpp>
#include <struvekit/identities.hpp>
#include <struvekit/inequalities.hpp>
#include <struvekit/quadrature.hpp>
#include <struvekit/report_json.hpp>
#include <struvekit/series.hpp>

namespace {

using namespace struvekit;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_violation = 3;

constexpr double identity_tolerance = 1e-8;

struct GridFlags {
    std::optional<double> nu_min, nu_max, x_min, x_max;
    int nu_steps = 10;
    int x_steps = 25;
    bool log_spacing = false;
    std::string grid = "default";

    bool nu_given() const { return nu_min || nu_max; }
    bool x_given() const { return x_min || x_max; }
};

struct Options {
    double nu = 0.0;
    double x = 0.0;
    std::optional<double> y;
    std::string fn = "M";
    std::string method = "auto";
    std::string cases = "all";
    std::string flip_case;
    std::string format = "human";
    std::string out;
    std::optional<double> tol;
    GridFlags grid;
};

// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ConfigError("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    void finish() {
        stream().flush();
        if (file_.is_open() && !file_) throw ConfigError("write to output file failed");
    }

private:
    std::ofstream file_;
};

QuadConfig quad_config(const Options& o) {
    QuadConfig q;
    if (const char* env = std::getenv("STRUVE_KIT_TOL")) {
        try {
            q.abs_tol = q.rel_tol = std::stod(env);
        } catch (const std::exception&) {
            throw ConfigError(std::string("STRUVE_KIT_TOL is not a number: ") + env);
        }
    }
    if (o.tol) q.abs_tol = q.rel_tol = *o.tol;
    q.validate();
    return q;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> axis(double lo, double hi, int steps, bool log_spacing) {
    if (steps < 1) throw ConfigError("grid steps must be >= 1");
    if (hi < lo) throw ConfigError("grid maximum below minimum");
    if (log_spacing && lo > 0.0) return logspace(lo, hi, steps);
    return linspace(lo, hi, steps);
}

// A case's standard grid with any axis the user specified replaced.
GridSpec effective_grid(const GridSpec& base, const GridFlags& g) {
    if (g.grid != "default" && g.grid != "custom") throw ConfigError("--grid must be default or custom");
    GridSpec out = base;
    if (g.grid == "default" && !g.nu_given() && !g.x_given()) return out;
    if (g.nu_given()) {
        const double lo = g.nu_min.value_or(base.nu_values.front());
        const double hi = g.nu_max.value_or(base.nu_values.back());
        out.nu_values = axis(lo, hi, g.nu_steps, g.log_spacing);
    }
    if (g.x_given()) {
        const double lo = g.x_min.value_or(1e-3);
        const double hi = g.x_max.value_or(30.0);
        out.x_values = axis(lo, hi, g.x_steps, g.log_spacing);
        if (!out.y_values.empty()) out.y_values = out.x_values;
    }
    return out;
}

// ---------------------------------------------------------------------------
// eval

FuncValue evaluate(const Options& o, const QuadConfig& q) {
    const EvalPoint p{o.nu, o.x};
    std::string method = o.method;
    if (method == "auto") {
        if (o.fn == "I" || o.fn == "L") method = "series";
        else if (o.fn == "calM" && o.x == 0.0) method = "quadrature";
        else if (o.fn == "Mprime") method = has_closed_form(o.nu) ? "closedform" : "quadrature";
        else if (o.x <= sign_m_series_max_x) method = "series";
        else if (o.nu > -0.5) method = "quadrature";
        else if (o.nu == -0.5) method = "closedform";
        else method = "series";
    }

    if (o.fn == "I" || o.fn == "L") {
        if (method != "series") throw DomainError(o.fn + " is available through the series route only");
        return o.fn == "I" ? bessel_i(p) : struve_l(p);
    }
    if (o.fn == "M") {
        if (method == "series") return struve_m_series(p);
        if (method == "quadrature") return m_from_quadrature(p, q);
        if (method == "foxwright") return m_from_calm(p, calm_via_fox_wright(p));
        if (method == "closedform") return closed_form_value(p);
    }
    if (o.fn == "calM") {
        if (method == "series") {
            if (!(o.x > 0.0)) throw DomainError("calM by series requires x > 0; use --method quadrature at x = 0");
            return calm_from_m(p, struve_m_series(p));
        }
        if (method == "quadrature") return calm(p, q);
        if (method == "foxwright") return calm_via_fox_wright(p);
        if (method == "closedform") return calm_from_m(p, closed_form_value(p));
    }
    if (o.fn == "Mprime") {
        if (method == "quadrature") return m_deriv(p, q);
        if (method == "closedform") {
            const double v = closed_jet(p).dm;
            return {v, 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(v), Method::ClosedForm};
        }
        if (method == "series") {
            // x M'_nu = x M_{nu-1} - nu M_nu
            if (!(o.nu > 0.0)) throw DomainError("Mprime by series requires nu > 0 (uses M_{nu-1})");
            if (!(o.x > 0.0)) throw DomainError("Mprime requires x > 0");
            const FuncValue a = struve_m_series({o.nu - 1.0, o.x});
            const FuncValue b = struve_m_series(p);
            const double v = a.value - o.nu / o.x * b.value;
            return {v, a.abs_err + std::fabs(o.nu / o.x) * b.abs_err, Method::Series};
        }
    }
    throw DomainError("function " + o.fn + " is not available through method " + method);
}

int cmd_eval(const Options& o) {
    const QuadConfig q = quad_config(o);
    const FuncValue v = evaluate(o, q);
    Sink sink(o.out);
    auto& os = sink.stream();
    if (o.format == "json") {
        os << nlohmann::json{{"nu", o.nu}, {"x", o.x}, {"fn", o.fn}, {"value", v.value},
                             {"abs_err", v.abs_err}, {"method", to_string(v.method)}}
                  .dump()
           << '\n';
    } else if (o.format == "csv") {
        os << "nu,x,fn,value,abs_err,method\n"
           << fmt17(o.nu) << ',' << fmt17(o.x) << ',' << o.fn << ',' << fmt17(v.value) << ',' << fmt17(v.abs_err)
           << ',' << to_string(v.method) << '\n';
    } else {
        os << o.fn << "(nu=" << fmt17(o.nu) << ", x=" << fmt17(o.x) << ") = " << fmt17(v.value)
           << "  +- " << v.abs_err << "  [" << to_string(v.method) << "]\n";
    }
    sink.finish();
    return exit_ok;
}

// ---------------------------------------------------------------------------
// verify

std::vector<InequalityCase> selected_cases(const Options& o) {
    std::vector<InequalityCase> out;
    if (o.cases == "all") {
        out = catalog();
    } else {
        std::stringstream ss(o.cases);
        std::string id;
        while (std::getline(ss, id, ',')) {
            auto c = find_case(id);
            if (!c) throw ConfigError("unknown case id '" + id + "'");
            out.push_back(std::move(*c));
        }
    }
    if (!o.flip_case.empty()) {
        bool found = false;
        for (auto& c : out)
            if (c.id == o.flip_case) {
                c = flipped(c);
                found = true;
            }
        if (!found) {
            auto c = find_case(o.flip_case);
            if (!c) throw ConfigError("unknown case id '" + o.flip_case + "' for --flip-case");
            out = {flipped(*c)};
        }
    }
    return out;
}

int cmd_verify(const Options& o) {
    const QuadConfig q = quad_config(o);
    const auto cases = selected_cases(o);
    std::vector<CaseOutcome> outcomes;
    for (const auto& c : cases) {
        const GridSpec g = effective_grid(c.standard_grid(), o.grid);
        try {
            outcomes.push_back({c.id, run_case(c, g, q), {}});
        } catch (const EmptyDomainError& e) {
            outcomes.push_back({c.id, std::nullopt, e.what()});
        }
    }

    bool violated = false;
    bool any_report = false;
    for (const auto& oc : outcomes) {
        if (oc.report) any_report = true;
        if (oc.report && !oc.report->violations.empty()) violated = true;
    }

    Sink sink(o.out);
    auto& os = sink.stream();
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& oc : outcomes)
            arr.push_back(oc.report ? to_json(*oc.report) : nlohmann::json{{"case_id", oc.case_id}, {"error", oc.error}});
        os << (arr.size() == 1 && outcomes.front().report ? arr.front() : arr).dump(2) << '\n';
    } else if (o.format == "csv") {
        os << "case_id,points_tested,points_skipped,min_margin,violations,inconclusive,wall_time\n";
        for (const auto& oc : outcomes) {
            if (!oc.report) continue;
            const auto& r = *oc.report;
            os << r.case_id << ',' << r.points_tested << ',' << r.points_skipped << ','
               << (r.min_margin ? fmt17(*r.min_margin) : "") << ',' << r.violations.size() << ','
               << r.inconclusive.size() << ',' << r.wall_time << '\n';
        }
    } else {
        for (const auto& oc : outcomes) {
            if (!oc.report) {
                os << oc.case_id << ": " << oc.error << '\n';
                continue;
            }
            const auto& r = *oc.report;
            char line[256];
            std::snprintf(line, sizeof line, "%-24s %s  tested %5d  skipped %4d  min margin % .3e  violations %zu  "
                                             "inconclusive %zu  %.2fs\n",
                          r.case_id.c_str(), r.violations.empty() ? "ok  " : "FAIL", r.points_tested,
                          r.points_skipped, r.min_margin.value_or(std::nan("")), r.violations.size(),
                          r.inconclusive.size(), r.wall_time);
            os << line;
            for (std::size_t i = 0; i < r.violations.size() && i < 5; ++i) {
                const auto& v = r.violations[i];
                os << "    violation at nu=" << v.point.nu << " x=" << v.point.x;
                if (v.point.y) os << " y=" << *v.point.y;
                if (v.margin) os << " margin=" << *v.margin;
                if (!v.error.empty()) os << " error: " << v.error;
                os << '\n';
            }
        }
        if (auto m = global_min_margin(outcomes)) os << "global min normalized margin: " << *m << '\n';
    }
    sink.finish();
    if (violated) return exit_violation;
    if (!any_report) return exit_usage;
    return exit_ok;
}

// ---------------------------------------------------------------------------
// identities

int cmd_identities(const Options& o, bool point_given) {
    const QuadConfig q = quad_config(o);
    GridSpec base{{0.6, 1.0, 1.5, 2.0, 3.0, 5.0, 8.0}, {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0}, {}, Spacing::Linear};
    if (point_given) base = {{o.nu}, {o.x}, {}, Spacing::Linear};
    const GridSpec g = effective_grid(base, o.grid);

    std::vector<IdentityResidual> all;
    for (double nu : g.nu_values)
        for (double x : g.x_values)
            for (auto& r : all_identities({nu, x}, q)) all.push_back(std::move(r));

    bool failed = false;
    Sink sink(o.out);
    auto& os = sink.stream();
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : all)
            arr.push_back({{"id", r.id}, {"nu", r.point.nu}, {"x", r.point.x}, {"residual", r.residual},
                           {"scale", r.scale}, {"relative", r.relative()}});
        os << arr.dump(2) << '\n';
    } else if (o.format == "csv") {
        os << "id,nu,x,residual,scale,relative\n";
        for (const auto& r : all)
            os << r.id << ',' << fmt17(r.point.nu) << ',' << fmt17(r.point.x) << ',' << fmt17(r.residual) << ','
               << fmt17(r.scale) << ',' << fmt17(r.relative()) << '\n';
    } else {
        for (const auto& r : all) {
            char line[160];
            std::snprintf(line, sizeof line, "%-20s nu=%-8g x=%-8g relative residual %.3e\n", r.id.c_str(),
                          r.point.nu, r.point.x, r.relative());
            os << line;
        }
    }
    for (const auto& r : all) failed = failed || !(r.relative() <= identity_tolerance);
    sink.finish();
    return failed ? exit_violation : exit_ok;
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const Options& o) {
    const QuadConfig q = quad_config(o);
    const GridSpec base{linspace(0.0, 5.0, 5), linspace(0.5, 10.0, 5), {}, Spacing::Linear};
    GridFlags flags = o.grid;
    if (flags.nu_given() || flags.x_given()) flags.grid = "custom";
    if (!flags.nu_given()) flags.nu_steps = 5;
    if (!flags.x_given()) flags.x_steps = 5;
    const GridSpec g = effective_grid(base, flags);
    for (double nu : g.nu_values)
        if (!(nu > -0.5)) throw DomainError("table requires nu > -1/2 (integral representation)");
    for (double x : g.x_values)
        if (!(x > 0.0)) throw DomainError("table requires x > 0");

    Sink sink(o.out);
    auto& os = sink.stream();
    os << "nu,x,M,calM,Mprime,lower_th4,upper_th4\n";
    for (double nu : g.nu_values)
        for (double x : g.x_values) {
            const EvalPoint p{nu, x};
            const MJet j = m_jet(p, q);
            const double cm = calm(p, q).value;
            const Bounds b = theorem4_bounds(p);
            os << fmt17(nu) << ',' << fmt17(x) << ',' << fmt17(j.m.value) << ',' << fmt17(cm) << ','
               << fmt17(j.dm.value) << ',' << fmt17(b.lower) << ',' << fmt17(b.upper) << '\n';
        }
    sink.finish();
    return exit_ok;
}

void add_grid_flags(CLI::App* app, GridFlags& g) {
    app->add_option("--grid", g.grid, "default: each case's standard grid; custom: apply range flags")
        ->check(CLI::IsMember({"default", "custom"}));
    app->add_option("--nu-min", g.nu_min, "Smallest order");
    app->add_option("--nu-max", g.nu_max, "Largest order");
    app->add_option("--nu-steps", g.nu_steps, "Number of orders")->check(CLI::PositiveNumber);
    app->add_option("--x-min", g.x_min, "Smallest argument");
    app->add_option("--x-max", g.x_max, "Largest argument");
    app->add_option("--x-steps", g.x_steps, "Number of arguments")->check(CLI::PositiveNumber);
    app->add_flag("--log-spacing", g.log_spacing, "Logarithmic spacing for positive ranges");
}

void add_common(CLI::App* app, Options& o, std::vector<std::string> formats) {
    app->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(formats)));
    app->add_option("--out", o.out, "Output path (default stdout)");
    app->add_option("--tol", o.tol, "Quadrature tolerance (absolute and relative); overrides STRUVE_KIT_TOL");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"struvekit: modified Struve function M_nu evaluation and inequality verification"};
    app.require_subcommand(1);
    Options o;

    auto* eval = app.add_subcommand("eval", "Evaluate I, L, M, calM or M' at one point");
    eval->add_option("--nu", o.nu, "Order nu")->required();
    eval->add_option("--x", o.x, "Argument x")->required();
    eval->add_option("--y", o.y, "Second argument (unused by eval)");
    eval->add_option("--fn", o.fn, "Function")->check(CLI::IsMember({"I", "L", "M", "calM", "Mprime"}));
    eval->add_option("--method", o.method, "Evaluation route")
        ->check(CLI::IsMember({"series", "quadrature", "foxwright", "auto"}));
    add_common(eval, o, {"human", "json", "csv"});

    auto* verify = app.add_subcommand("verify", "Sweep inequality cases over a grid");
    verify->add_option("--case", o.cases, "Case id, comma-separated ids, or all");
    verify->add_option("--flip-case", o.flip_case, "Reverse one case's claim (harness self-test)");
    add_grid_flags(verify, o.grid);
    add_common(verify, o, {"human", "json", "csv"});

    auto* ident = app.add_subcommand("identities", "Residuals of the identities satisfied by M");
    auto* nu_opt = ident->add_option("--nu", o.nu, "Order nu");
    auto* x_opt = ident->add_option("--x", o.x, "Argument x");
    nu_opt->needs(x_opt);
    x_opt->needs(nu_opt);
    add_grid_flags(ident, o.grid);
    add_common(ident, o, {"human", "json", "csv"});

    auto* table = app.add_subcommand("table", "CSV of M, calM, M' and the two-sided bounds over a grid");
    add_grid_flags(table, o.grid);
    std::string table_format = "csv";
    table->add_option("--format", table_format, "Output format")->check(CLI::IsMember({"csv"}));
    table->add_option("--out", o.out, "Output path (default stdout)");
    table->add_option("--tol", o.tol, "Quadrature tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (eval->parsed()) return cmd_eval(o);
        if (verify->parsed()) return cmd_verify(o);
        if (ident->parsed()) return cmd_identities(o, nu_opt->count() > 0);
        if (table->parsed()) return cmd_table(o);
    } catch (const struvekit::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
