#include "lyap/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <thread>

#include "lyap/continuous.hpp"
#include "lyap/oracles.hpp"
#include "lyap/standard.hpp"

namespace lyap::cli {

namespace fs = std::filesystem;

namespace {

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string short_num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.7g", v);
    return buf;
}

double max_abs_of(const std::vector<double>& v)
{
    double m = 0.0;
    for (double e : v)
        m = std::max(m, std::abs(e));
    return m;
}

struct Outcome {
    Summary summary;
    RunResult run;
    bool failed = false;
};

Outcome execute(const SystemSpec& system, Method method, const Vector& x0, const RunConfig& cfg)
{
    RunOptions opts;
    opts.h = cfg.h;
    opts.t_end = cfg.t_end;
    opts.record_every = cfg.record_every;

    Outcome o;
    try {
        o.run = method == Method::continuous ? run_continuous(system, x0, opts)
                                             : run_standard(system, x0, opts);
    } catch (const IntegrationFailure& e) {
        o.run = e.partial();
        o.failed = true;
        o.summary.error = e.what();
    }
    if (!o.run.series.rows.empty()) {
        Summary s = summarize(system, o.run, cfg.h, cfg.t_end);
        s.error = o.summary.error;
        o.summary = std::move(s);
    } else {
        o.summary.system = system.name;
        o.summary.method = method;
        o.summary.h = cfg.h;
        o.summary.t_end = cfg.t_end;
        o.summary.wall_seconds = o.run.series.wall.count();
    }
    if (o.failed)
        o.summary.status = "failed";
    return o;
}

std::string plot_script(const SpectrumSeries& series, const std::string& csv_name,
                        const std::vector<double>& shift)
{
    const std::size_t n = series.rows.empty() ? 0 : series.rows.front().exponents.size();
    std::ostringstream os;
    os << "# exponents against 1/t; shifts are for display only\n"
       << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set xlabel '1/t'\n"
       << "plot ";
    for (std::size_t i = 0; i < n; ++i) {
        const double s = i < shift.size() ? shift[i] : 0.0;
        if (i)
            os << ", \\\n     ";
        os << "'" << csv_name << "' using 2:($" << (i + 3) << " + " << num(s) << ") with lines";
        if (s != 0.0)
            os << " title 'lambda_" << (i + 1) << " + " << short_num(s) << "'";
    }
    os << '\n';
    return os.str();
}

void write_outputs(const RunConfig& cfg, const Outcome& o)
{
    const std::string stem = cfg.system + "_" + std::string(method_name(o.summary.method));
    fs::create_directories(cfg.out_dir);
    write_atomic(cfg.out_dir / (stem + ".csv"), format_csv(o.run.series));
    write_atomic(cfg.out_dir / (stem + ".summary"), format_summary(o.summary));
    write_atomic(cfg.out_dir / (stem + ".gp"), plot_script(o.run.series, stem + ".csv", cfg.shift));
}

// Resolves the system and x0; returns nullopt after reporting a usage error.
std::optional<std::pair<SystemSpec, Vector>> prepare(const RunConfig& cfg, std::ostream& err)
{
    SystemSpec system;
    try {
        system = make_system(cfg.system);
    } catch (const UnknownSystem& e) {
        err << e.what() << '\n';
        cmd_list(err);
        return std::nullopt;
    }
    Vector x0 = cfg.x0.value_or(system.default_x0);
    std::string problem;
    if (!(cfg.h > 0.0))
        problem = "--h must be positive";
    else if (!(cfg.t_end > cfg.h))
        problem = "--t-end must exceed h";
    else if (x0.size() != system.dim)
        problem = "--x0 needs " + std::to_string(system.dim) + " components for " + system.name;
    else if (cfg.record_every < 1)
        problem = "--record-every must be >= 1";
    else if (std::llround(cfg.t_end / (kSubsteps * cfg.h)) < 1)
        problem = "--t-end is shorter than one big step (4h)";
    if (!problem.empty()) {
        err << problem << '\n';
        return std::nullopt;
    }
    return std::make_pair(std::move(system), std::move(x0));
}

void print_final(std::ostream& out, const Summary& s)
{
    out << s.system << ' ' << method_name(s.method) << ": t=" << short_num(s.t_final) << " {";
    for (std::size_t i = 0; i < s.final_exponents.size(); ++i)
        out << (i ? ", " : "") << short_num(s.final_exponents[i]);
    out << "} residual=" << short_num(s.sum_rule_residual)
        << " wall=" << short_num(s.wall_seconds) << "s";
    if (s.status != "ok")
        out << " [" << s.status << "]";
    out << '\n';
}

} // namespace

MethodChoice parse_method(std::string_view s)
{
    if (s == "continuous")
        return MethodChoice::continuous;
    if (s == "standard")
        return MethodChoice::standard;
    if (s == "both")
        return MethodChoice::both;
    throw Error("unknown method '" + std::string(s) + "' (continuous|standard|both)");
}

fs::path default_out_dir()
{
    if (const char* env = std::getenv("LYAP_OUT"); env && *env)
        return env;
    return ".";
}

std::string format_csv(const SpectrumSeries& series)
{
    std::string out = "t,inv_t";
    const std::size_t n = series.rows.empty() ? 0 : series.rows.front().exponents.size();
    for (std::size_t i = 1; i <= n; ++i)
        out += ",lambda_" + std::to_string(i);
    out += '\n';
    for (const auto& row : series.rows) {
        out += num(row.t);
        out += ',';
        out += num(1.0 / row.t);
        for (double e : row.exponents) {
            out += ',';
            out += num(e);
        }
        out += '\n';
    }
    return out;
}

Summary summarize(const SystemSpec& system, const RunResult& run, double h, double t_end)
{
    const SpectrumRow& last = run.series.final_row();
    Summary s;
    s.system = system.name;
    s.method = run.series.method;
    s.h = h;
    s.t_end = t_end;
    s.t_final = last.t;
    s.final_exponents = last.exponents;
    s.wall_seconds = run.series.wall.count();
    s.max_abs_final = max_abs_of(last.exponents);

    const double probe = last.t / 10.0;
    const auto nearest = std::min_element(
        run.series.rows.begin(), run.series.rows.end(), [&](const auto& a, const auto& b) {
            return std::abs(a.t - probe) < std::abs(b.t - probe);
        });
    s.max_abs_decade_ago = max_abs_of(nearest->exponents);

    if (run.trajectory.size() >= 2)
        s.sum_rule_residual = sum_rule_residual(run.series, system, run.trajectory);
    if (system.known_exponents) {
        double worst = 0.0;
        for (std::size_t i = 0; i < last.exponents.size(); ++i)
            worst = std::max(worst, std::abs(last.exponents[i] - (*system.known_exponents)[i]));
        s.max_deviation_from_known = worst;
    }
    return s;
}

std::string format_summary(const Summary& s)
{
    std::ostringstream os;
    os << "system=" << s.system << '\n'
       << "method=" << method_name(s.method) << '\n'
       << "status=" << s.status << '\n'
       << "h=" << num(s.h) << '\n'
       << "t_end=" << num(s.t_end) << '\n'
       << "t_final=" << num(s.t_final) << '\n';
    for (std::size_t i = 0; i < s.final_exponents.size(); ++i)
        os << "final_lambda_" << (i + 1) << '=' << num(s.final_exponents[i]) << '\n';
    os << "sum_rule_residual=" << num(s.sum_rule_residual) << '\n'
       << "max_abs_lambda=" << num(s.max_abs_final) << '\n'
       << "last_decade_trend="
       << (s.max_abs_final < s.max_abs_decade_ago ? "decreasing" : "increasing") << '\n';
    if (s.max_deviation_from_known)
        os << "max_deviation_from_known=" << num(*s.max_deviation_from_known) << '\n';
    os << "wall_seconds=" << num(s.wall_seconds) << '\n';
    if (!s.error.empty())
        os << "error=" << s.error << '\n';
    return os.str();
}

void write_atomic(const fs::path& path, std::string_view content)
{
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw Error("cannot open " + tmp.string() + " for writing");
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!f)
            throw Error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    auto prepared = prepare(config, err);
    if (!prepared)
        return kExitUsage;
    const auto& [system, x0] = *prepared;

    std::vector<Method> methods;
    if (config.method != MethodChoice::standard)
        methods.push_back(Method::continuous);
    if (config.method != MethodChoice::continuous)
        methods.push_back(Method::standard);

    std::vector<Outcome> outcomes;
    if (methods.size() == 2 && std::thread::hardware_concurrency() > 1) {
        auto other = std::async(std::launch::async, [&] {
            return execute(system, methods[1], x0, config);
        });
        outcomes.push_back(execute(system, methods[0], x0, config));
        outcomes.push_back(other.get());
    } else {
        for (Method m : methods)
            outcomes.push_back(execute(system, m, x0, config));
    }

    int status = kExitOk;
    for (const auto& o : outcomes) {
        write_outputs(config, o);
        print_final(out, o.summary);
        if (o.failed) {
            err << o.summary.error << '\n';
            status = kExitIntegration;
        }
    }
    return status;
}

int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    auto prepared = prepare(config, err);
    if (!prepared)
        return kExitUsage;
    const auto& [system, x0] = *prepared;

    // sequential so the timing ratio is not distorted by contention
    const Outcome cont = execute(system, Method::continuous, x0, config);
    const Outcome stdm = execute(system, Method::standard, x0, config);
    write_outputs(config, cont);
    write_outputs(config, stdm);

    std::ostringstream rep;
    rep << "system=" << system.name << '\n' << "h=" << num(config.h) << '\n'
        << "t_end=" << num(config.t_end) << '\n';
    const auto& a = cont.summary.final_exponents;
    const auto& b = stdm.summary.final_exponents;
    double worst = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        const double d = a[i] - b[i];
        worst = std::max(worst, std::abs(d));
        rep << "continuous_lambda_" << (i + 1) << '=' << num(a[i]) << '\n'
            << "standard_lambda_" << (i + 1) << '=' << num(b[i]) << '\n'
            << "delta_lambda_" << (i + 1) << '=' << num(d) << '\n';
    }
    rep << "max_abs_delta=" << num(worst) << '\n'
        << "continuous_sum_rule_residual=" << num(cont.summary.sum_rule_residual) << '\n'
        << "standard_sum_rule_residual=" << num(stdm.summary.sum_rule_residual) << '\n'
        << "continuous_max_abs_lambda=" << num(cont.summary.max_abs_final) << '\n'
        << "standard_max_abs_lambda=" << num(stdm.summary.max_abs_final) << '\n'
        << "continuous_wall_seconds=" << num(cont.summary.wall_seconds) << '\n'
        << "standard_wall_seconds=" << num(stdm.summary.wall_seconds) << '\n'
        << "timing_ratio=" << num(cont.summary.wall_seconds / stdm.summary.wall_seconds) << '\n'
        << "status=" << (cont.failed || stdm.failed ? "failed" : "ok") << '\n';

    fs::create_directories(config.out_dir);
    write_atomic(config.out_dir / (system.name + "_compare.txt"), rep.str());
    out << rep.str();
    for (const Outcome* o : {&cont, &stdm})
        if (o->failed)
            err << o->summary.error << '\n';
    return cont.failed || stdm.failed ? kExitIntegration : kExitOk;
}

int cmd_list(std::ostream& out)
{
    for (const auto& name : system_names()) {
        const SystemSpec s = make_system(name);
        out << s.name << " (n=" << s.dim << ")";
        if (s.known_exponents) {
            out << ", known exponents {";
            for (std::size_t i = 0; i < s.known_exponents->size(); ++i)
                out << (i ? "," : "") << short_num((*s.known_exponents)[i]);
            out << '}';
        }
        out << '\n';
    }
    return kExitOk;
}

} // namespace lyap::cli
