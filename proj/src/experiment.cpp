#include "qwline/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "qwline/analytic.hpp"
#include "qwline/errors.hpp"
#include "qwline/fit.hpp"
#include "qwline/observables.hpp"

namespace qwline {

namespace {

namespace fs = std::filesystem;

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

// ---------------------------------------------------------------------------
// Formatting: locale-independent, 17 significant digits (round-trips every
// double exactly), LF line endings.
// ---------------------------------------------------------------------------

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string render_series_csv(const std::string& value_column, const TimeSeries& series) {
    std::string text = "t," + value_column + "\n";
    for (const Sample& s : series.samples()) {
        text += std::to_string(s.t);
        text += ',';
        text += format_double(s.value);
        text += '\n';
    }
    return text;
}

std::string render_profile_csv(const ProbabilityProfile& prof) {
    std::string text = "x,p\n";
    for (std::size_t i = 0; i < prof.p.size(); ++i) {
        text += std::to_string(prof.x_min + static_cast<int>(i));
        text += ',';
        text += format_double(prof.p[i]);
        text += '\n';
    }
    return text;
}

void write_file(const fs::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << body;
    out.flush();
    if (!out) throw IoError("failed while writing " + path.string());
}

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    }
}

// ---------------------------------------------------------------------------
// Emit items
// ---------------------------------------------------------------------------

const char* emit_name(EmitItem item) {
    switch (item) {
        case EmitItem::survival: return "survival";
        case EmitItem::entropy: return "entropy";
        case EmitItem::variance: return "variance";
        case EmitItem::profile: return "profile";
        case EmitItem::analytic_survival: return "analytic_survival";
        case EmitItem::fit_report: return "fit_report";
    }
    return "?";
}

EmitItem emit_from_name(const std::string& name) {
    for (EmitItem item : {EmitItem::survival, EmitItem::entropy, EmitItem::variance,
                          EmitItem::profile, EmitItem::analytic_survival, EmitItem::fit_report}) {
        if (name == emit_name(item)) return item;
    }
    throw std::invalid_argument("unknown --emit item: " + name);
}

// ---------------------------------------------------------------------------
// Custom initial-state file: header `x,a_re,a_im,b_re,b_im`, one site per row.
// ---------------------------------------------------------------------------

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

[[noreturn]] void bad_field(const std::string& path, int lineno, const char* what) {
    throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + what);
}

int parse_int_field(std::string_view f, const std::string& path, int lineno) {
    int value = 0;
    const auto res = std::from_chars(f.data(), f.data() + f.size(), value);
    if (res.ec != std::errc{} || res.ptr != f.data() + f.size()) {
        bad_field(path, lineno, "malformed integer field");
    }
    return value;
}

double parse_double_field(std::string_view f, const std::string& path, int lineno) {
    double value = 0.0;
    const auto res = std::from_chars(f.data(), f.data() + f.size(), value);
    if (res.ec != std::errc{} || res.ptr != f.data() + f.size()) {
        bad_field(path, lineno, "malformed numeric field");
    }
    return value;
}

Custom read_custom_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read custom initial file: " + path);

    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument(path + ": custom initial file is empty");
    }
    strip_cr(line);
    if (line != "x,a_re,a_im,b_re,b_im") {
        throw std::invalid_argument(path + ": first line must be the header x,a_re,a_im,b_re,b_im");
    }

    Custom custom;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) continue;  // tolerate a blank trailing line
        const auto fields = split_fields(line);
        if (fields.size() != 5) bad_field(path, lineno, "expected 5 comma-separated fields");
        CustomEntry e;
        e.x = parse_int_field(fields[0], path, lineno);
        e.a = Complex(parse_double_field(fields[1], path, lineno),
                      parse_double_field(fields[2], path, lineno));
        e.b = Complex(parse_double_field(fields[3], path, lineno),
                      parse_double_field(fields[4], path, lineno));
        custom.entries.push_back(e);
    }
    return custom;  // site uniqueness and normalization are checked downstream
}

// ---------------------------------------------------------------------------
// Command line
// ---------------------------------------------------------------------------

const char* kind_name(InitialKind kind) {
    switch (kind) {
        case InitialKind::localized: return "localized";
        case InitialKind::pair: return "pair";
        case InitialKind::custom: return "custom";
    }
    return "?";
}

struct CliParser {
    CLI::App app{"Discrete-time Hadamard walk on the integer line", "qwline"};

    std::string initial = "localized";
    double alpha_re = 0.0;
    double alpha_im = kInvSqrt2;
    double beta_re = kInvSqrt2;
    double beta_im = 0.0;
    int k = 1;
    std::string phase = "plus";
    std::string custom_file;
    int steps = 1000;
    int s = -1;           // resolved to k (pair) or 0 (otherwise)
    int fit_min = 0;      // resolved to 100
    int fit_max = 0;      // resolved to steps
    int smooth = 32;
    int record_every = 0;  // resolved to 1 (steps <= 2000) or 4
    std::vector<int> snapshots;
    std::vector<std::string> emit_names;
    std::string out = ".";
    int jobs = 1;
    bool dump = false;
    std::vector<std::string> batch_files;
    bool compare = false;

    CLI::Option* o_config = nullptr;
    CLI::Option* o_alpha_re = nullptr;
    CLI::Option* o_alpha_im = nullptr;
    CLI::Option* o_beta_re = nullptr;
    CLI::Option* o_beta_im = nullptr;
    CLI::Option* o_k = nullptr;
    CLI::Option* o_phase = nullptr;
    CLI::Option* o_custom = nullptr;
    CLI::Option* o_dump = nullptr;
    CLI::Option* o_batch = nullptr;
    CLI::Option* o_jobs = nullptr;
    CLI::Option* o_compare = nullptr;

    CliParser() {
        const int int_max = std::numeric_limits<int>::max();
        o_config = app.set_config("--config", "", "Read options from a TOML config file");
        app.add_option("--initial", initial, "Initial condition kind")
            ->check(CLI::IsMember({"localized", "pair", "custom"}));
        o_alpha_re = app.add_option("--alpha-re", alpha_re, "Re alpha of the localized coin");
        o_alpha_im = app.add_option("--alpha-im", alpha_im, "Im alpha of the localized coin");
        o_beta_re = app.add_option("--beta-re", beta_re, "Re beta of the localized coin");
        o_beta_im = app.add_option("--beta-im", beta_im, "Im beta of the localized coin");
        o_k = app.add_option("--k", k, "Half-separation of the symmetric pair")
                  ->check(CLI::Range(1, int_max));
        o_phase = app.add_option("--phase", phase, "Relative phase of the symmetric pair")
                      ->check(CLI::IsMember({"plus", "minus"}));
        o_custom = app.add_option("--custom-file", custom_file,
                                  "CSV of initial amplitudes (x,a_re,a_im,b_re,b_im)");
        app.add_option("--steps", steps, "Number of walk steps")
            ->check(CLI::Range(1, 10000000));
        app.add_option("--s", s, "Survival radius: walker counted while in [-s, s]")
            ->check(CLI::Range(0, int_max));
        app.add_option("--fit-min", fit_min, "Start of the power-law fit window")
            ->check(CLI::Range(1, int_max));
        app.add_option("--fit-max", fit_max, "End of the power-law fit window")
            ->check(CLI::Range(1, int_max));
        app.add_option("--smooth", smooth, "Samples per smoothing block for fits")
            ->check(CLI::Range(1, int_max));
        app.add_option("--record-every", record_every, "Sampling cadence in steps")
            ->check(CLI::Range(1, int_max));
        app.add_option("--snapshot", snapshots, "Time of a probability-profile snapshot")
            ->check(CLI::Range(0, int_max));
        app.add_option("--emit", emit_names,
                       "Outputs to write: survival, entropy, variance, profile, "
                       "analytic_survival, fit_report")
            ->delimiter(',')
            ->check(CLI::IsMember({"survival", "entropy", "variance", "profile",
                                   "analytic_survival", "fit_report"}));
        app.add_option("--out", out, "Output directory");
        o_jobs = app.add_option("--jobs", jobs, "Worker threads for --batch")
                     ->check(CLI::Range(1, 1024));
        o_dump = app.add_flag("--dump-config", dump,
                              "Print the resolved config as a TOML file and exit");
        o_batch = app.add_option("--batch", batch_files,
                                 "Run each listed config file as an independent experiment");
        o_compare = app.add_flag("--compare", compare,
                                 "Run the exact walk against the closed-form prediction");
    }

    void parse(const std::vector<std::string>& args) {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    }

    bool batch_mode() const { return o_batch->count() > 0; }

    void check_batch_exclusivity() const {
        for (const CLI::Option* opt : app.get_options()) {
            if (opt == o_batch || opt == o_jobs || opt == app.get_help_ptr()) continue;
            if (opt->count() > 0) {
                throw std::invalid_argument("--batch accepts only --jobs alongside it; remove " +
                                            opt->get_name());
            }
        }
    }

    ExperimentConfig finalize() const {
        ExperimentConfig cfg;
        if (initial == "localized") {
            cfg.initial = InitialKind::localized;
        } else if (initial == "pair") {
            cfg.initial = InitialKind::pair;
        } else {
            cfg.initial = InitialKind::custom;
        }

        const auto used = [](const CLI::Option* o) { return o->count() > 0; };
        if (cfg.initial != InitialKind::localized &&
            (used(o_alpha_re) || used(o_alpha_im) || used(o_beta_re) || used(o_beta_im))) {
            throw std::invalid_argument(
                "--alpha-re/--alpha-im/--beta-re/--beta-im apply only to --initial localized");
        }
        if (cfg.initial != InitialKind::pair && (used(o_k) || used(o_phase))) {
            throw std::invalid_argument("--k and --phase apply only to --initial pair");
        }
        if (cfg.initial == InitialKind::custom && custom_file.empty()) {
            throw std::invalid_argument("--initial custom requires --custom-file");
        }
        if (cfg.initial != InitialKind::custom && used(o_custom)) {
            throw std::invalid_argument("--custom-file applies only to --initial custom");
        }

        cfg.alpha = Complex(alpha_re, alpha_im);
        cfg.beta = Complex(beta_re, beta_im);
        cfg.k = k;
        cfg.sign = (phase == "minus") ? -1 : +1;
        cfg.custom_file = custom_file;
        cfg.steps = steps;
        cfg.survival_s = (s >= 0) ? s : (cfg.initial == InitialKind::pair ? k : 0);
        cfg.fit_min = (fit_min > 0) ? fit_min : 100;
        cfg.fit_max = (fit_max > 0) ? fit_max : steps;
        cfg.smoothing = smooth;
        cfg.record_every = (record_every > 0) ? record_every : (steps <= 2000 ? 1 : 4);

        cfg.snapshot_times = snapshots;
        if (cfg.snapshot_times.empty()) cfg.snapshot_times.push_back(steps);
        std::sort(cfg.snapshot_times.begin(), cfg.snapshot_times.end());
        cfg.snapshot_times.erase(
            std::unique(cfg.snapshot_times.begin(), cfg.snapshot_times.end()),
            cfg.snapshot_times.end());
        if (cfg.snapshot_times.back() > steps) {
            throw std::invalid_argument("--snapshot times must lie in [0, steps]");
        }

        if (emit_names.empty()) {
            cfg.emit = {EmitItem::survival, EmitItem::fit_report};
        } else {
            for (const std::string& name : emit_names) cfg.emit.insert(emit_from_name(name));
        }

        cfg.out_dir = out;
        cfg.jobs = jobs;
        cfg.compare = compare;

        const bool fitting = cfg.compare || cfg.emit.count(EmitItem::fit_report) > 0;
        if (fitting &&
            (cfg.fit_min < 1 || cfg.fit_min >= cfg.fit_max || cfg.fit_max > cfg.steps)) {
            throw std::invalid_argument(
                "fit window [" + std::to_string(cfg.fit_min) + ", " + std::to_string(cfg.fit_max) +
                "] must lie inside [1, steps] with --fit-min < --fit-max");
        }
        return cfg;
    }
};

// ---------------------------------------------------------------------------
// Batch mode
// ---------------------------------------------------------------------------

int dispatch(const ExperimentConfig& cfg) {
    return cfg.compare ? compare_exact_analytic(cfg) : run_experiment(cfg);
}

int run_batch(const std::vector<std::string>& files, int jobs, std::ostream& err) {
    std::vector<ExperimentConfig> configs;
    configs.reserve(files.size());
    for (const std::string& file : files) {
        configs.push_back(parse_config({"--config", file}));
    }

    std::set<std::string> dirs;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const std::string dir = fs::weakly_canonical(fs::path(configs[i].out_dir)).string();
        if (!dirs.insert(dir).second) {
            throw std::invalid_argument("batch configs must use distinct --out directories (" +
                                        files[i] + " reuses " + configs[i].out_dir + ")");
        }
    }

    std::atomic<std::size_t> next{0};
    std::vector<int> codes(configs.size(), 0);
    std::mutex err_mutex;
    const auto work = [&]() {
        for (std::size_t i; (i = next.fetch_add(1)) < configs.size();) {
            try {
                codes[i] = dispatch(configs[i]);
            } catch (const IoError& e) {
                codes[i] = 3;
                const std::lock_guard<std::mutex> lock(err_mutex);
                err << "error: " << files[i] << ": " << e.what() << '\n';
            } catch (const std::exception& e) {
                codes[i] = 2;
                const std::lock_guard<std::mutex> lock(err_mutex);
                err << "error: " << files[i] << ": " << e.what() << '\n';
            }
        }
    };

    const int n_threads = std::min<int>(jobs, static_cast<int>(configs.size()));
    if (n_threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(work);
    }
    return *std::max_element(codes.begin(), codes.end());
}

// ---------------------------------------------------------------------------
// Fit-report rendering (header: series,t_min,t_max,smoothing,exponent,
// intercept,rms_residual)
// ---------------------------------------------------------------------------

constexpr const char* kFitReportHeader = "series,t_min,t_max,smoothing,exponent,intercept,rms_residual\n";

// Appends one fit row; returns false when the fit could not be performed.
bool append_fit_row(std::string& text, const TimeSeries& series, const ExperimentConfig& cfg) {
    text += series.label();
    text += ',';
    text += std::to_string(cfg.fit_min);
    text += ',';
    text += std::to_string(cfg.fit_max);
    text += ',';
    text += std::to_string(cfg.smoothing);
    text += ',';
    try {
        const DecayFit fit = fit_decay_exponent(series, cfg.fit_min, cfg.fit_max, cfg.smoothing);
        text += format_double(fit.exponent);
        text += ',';
        text += format_double(fit.intercept);
        text += ',';
        text += format_double(fit.rms_residual);
        text += '\n';
        return true;
    } catch (const FitError&) {
        text += "nan,nan,nan\n";
        return false;
    }
}

TimeSeries analytic_survival_series(const InitialCondition& cond, const TimeSeries& exact,
                                    int survival_s) {
    TimeSeries result("p_surv_analytic");
    const auto* pair = std::get_if<SymmetricPair>(&cond);
    AnalyticInitial init = to_analytic(cond);
    if (init.entries().size() > 10000) {
        throw std::invalid_argument(
            "closed-form evaluation supports at most 10000 occupied initial sites");
    }
    for (const Sample& s : exact.samples()) {
        if (s.t < 1) continue;  // the closed form starts at t = 1
        const double v = pair != nullptr
                             ? analytic_survival_pair(s.t, survival_s, pair->k, pair->sign)
                             : analytic_survival(s.t, survival_s, init);
        result.append(s.t, v);
    }
    return result;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

ExperimentConfig parse_config(const std::vector<std::string>& args) {
    CliParser cli;
    cli.parse(args);
    if (cli.batch_mode()) {
        throw std::invalid_argument("--batch does not describe a single experiment config");
    }
    return cli.finalize();
}

std::string dump_config(const ExperimentConfig& cfg) {
    std::string text;
    const auto escape = [](const std::string& raw) {
        std::string esc;
        for (char c : raw) {
            if (c == '\\' || c == '"') esc += '\\';
            esc += c;
        }
        return esc;
    };
    const auto kv_string = [&](const char* key, const std::string& value) {
        text += key;
        text += "=\"";
        text += escape(value);
        text += "\"\n";
    };
    const auto kv_int = [&](const char* key, long long value) {
        text += key;
        text += '=';
        text += std::to_string(value);
        text += '\n';
    };
    const auto kv_double = [&](const char* key, double value) {
        text += key;
        text += '=';
        text += format_double(value);
        text += '\n';
    };

    kv_string("initial", kind_name(cfg.initial));
    switch (cfg.initial) {
        case InitialKind::localized:
            kv_double("alpha-re", cfg.alpha.real());
            kv_double("alpha-im", cfg.alpha.imag());
            kv_double("beta-re", cfg.beta.real());
            kv_double("beta-im", cfg.beta.imag());
            break;
        case InitialKind::pair:
            kv_int("k", cfg.k);
            kv_string("phase", cfg.sign == -1 ? "minus" : "plus");
            break;
        case InitialKind::custom:
            kv_string("custom-file", cfg.custom_file);
            break;
    }
    kv_int("steps", cfg.steps);
    kv_int("s", cfg.survival_s);
    kv_int("fit-min", cfg.fit_min);
    kv_int("fit-max", cfg.fit_max);
    kv_int("smooth", cfg.smoothing);
    kv_int("record-every", cfg.record_every);

    text += "snapshot=[";
    for (std::size_t i = 0; i < cfg.snapshot_times.size(); ++i) {
        if (i > 0) text += ", ";
        text += std::to_string(cfg.snapshot_times[i]);
    }
    text += "]\n";

    text += "emit=[";
    bool first = true;
    for (EmitItem item : cfg.emit) {
        if (!first) text += ", ";
        first = false;
        text += '"';
        text += emit_name(item);
        text += '"';
    }
    text += "]\n";

    kv_string("out", cfg.out_dir);
    kv_int("jobs", cfg.jobs);
    if (cfg.compare) text += "compare=true\n";
    return text;
}

InitialCondition build_initial_condition(const ExperimentConfig& cfg) {
    switch (cfg.initial) {
        case InitialKind::localized: return Localized{cfg.alpha, cfg.beta};
        case InitialKind::pair: return SymmetricPair{cfg.k, cfg.sign};
        case InitialKind::custom: return read_custom_file(cfg.custom_file);
    }
    throw std::invalid_argument("unknown initial condition kind");
}

int run_experiment(const ExperimentConfig& cfg) {
    const fs::path dir(cfg.out_dir);
    ensure_directory(dir);

    const InitialCondition cond = build_initial_condition(cfg);
    const bool want_survival = cfg.emit.count(EmitItem::survival) > 0;
    const bool want_entropy = cfg.emit.count(EmitItem::entropy) > 0;
    const bool want_variance = cfg.emit.count(EmitItem::variance) > 0;
    const bool want_profile = cfg.emit.count(EmitItem::profile) > 0;
    const bool want_analytic = cfg.emit.count(EmitItem::analytic_survival) > 0;
    const bool want_fit = cfg.emit.count(EmitItem::fit_report) > 0;

    TimeSeries surv("p_surv");
    TimeSeries ent("entropy_bits");
    TimeSeries var("variance");
    std::vector<ProbabilityProfile> profiles;
    const std::set<int> snaps(cfg.snapshot_times.begin(), cfg.snapshot_times.end());

    WalkState state = make_initial(cond, cfg.steps);
    const auto record = [&](const WalkState& st) {
        surv.append(st.time(), survival(st, cfg.survival_s));
        if (want_entropy) ent.append(st.time(), entanglement_entropy(coin_density(st)));
        if (want_variance) var.append(st.time(), variance(st));
    };
    const auto maybe_snapshot = [&](const WalkState& st) {
        if (want_profile && snaps.count(st.time()) > 0) {
            profiles.push_back(probability_profile(st));
        }
    };

    record(state);
    maybe_snapshot(state);
    for (int t = 1; t <= cfg.steps; ++t) {
        state.advance();
        if (t % cfg.record_every == 0) record(state);
        maybe_snapshot(state);
    }

    TimeSeries analytic("p_surv_analytic");
    if (want_analytic) analytic = analytic_survival_series(cond, surv, cfg.survival_s);

    int exit_code = 0;
    std::string fit_csv = kFitReportHeader;
    if (want_fit) {
        if (!append_fit_row(fit_csv, surv, cfg)) exit_code = 4;
        if (want_analytic && !append_fit_row(fit_csv, analytic, cfg)) exit_code = 4;
        if (want_variance && !append_fit_row(fit_csv, var, cfg)) exit_code = 4;
    }

    if (want_survival) write_file(dir / "survival.csv", render_series_csv("p_surv", surv));
    if (want_entropy) write_file(dir / "entropy.csv", render_series_csv("entropy_bits", ent));
    if (want_variance) write_file(dir / "variance.csv", render_series_csv("variance", var));
    if (want_analytic) {
        write_file(dir / "analytic_survival.csv",
                   render_series_csv("p_surv_analytic", analytic));
    }
    if (want_profile) {
        for (const ProbabilityProfile& prof : profiles) {
            write_file(dir / ("profile_t" + std::to_string(prof.t) + ".csv"),
                       render_profile_csv(prof));
        }
    }
    if (want_fit) write_file(dir / "fit_report.csv", fit_csv);
    return exit_code;
}

int compare_exact_analytic(const ExperimentConfig& cfg) {
    const fs::path dir(cfg.out_dir);
    ensure_directory(dir);

    const InitialCondition cond = build_initial_condition(cfg);

    TimeSeries exact("p_surv");
    WalkState state = make_initial(cond, cfg.steps);
    exact.append(0, survival(state, cfg.survival_s));
    for (int t = 1; t <= cfg.steps; ++t) {
        state.advance();
        if (t % cfg.record_every == 0) exact.append(t, survival(state, cfg.survival_s));
    }
    const TimeSeries analytic = analytic_survival_series(cond, exact, cfg.survival_s);

    // Per-time table over the common t >= 1 grid.
    std::string table = "t,p_surv,p_surv_analytic,ratio\n";
    {
        std::size_t ia = 0;
        for (const Sample& s : exact.samples()) {
            if (s.t < 1) continue;
            const Sample& a = analytic.samples()[ia++];
            table += std::to_string(s.t);
            table += ',';
            table += format_double(s.value);
            table += ',';
            table += format_double(a.value);
            table += ',';
            table += format_double(s.value / a.value);
            table += '\n';
        }
    }
    write_file(dir / "compare.csv", table);

    int exit_code = 0;
    double exp_exact = std::numeric_limits<double>::quiet_NaN();
    double exp_analytic = std::numeric_limits<double>::quiet_NaN();
    try {
        exp_exact = fit_decay_exponent(exact, cfg.fit_min, cfg.fit_max, cfg.smoothing).exponent;
    } catch (const FitError&) {
        exit_code = 4;
    }
    try {
        exp_analytic =
            fit_decay_exponent(analytic, cfg.fit_min, cfg.fit_max, cfg.smoothing).exponent;
    } catch (const FitError&) {
        exit_code = 4;
    }

    // Ratio of window means rather than mean of ratios: the pointwise ratio
    // blows up near the zeros of the oscillating closed form, while the two
    // window means compare the envelopes, which is the meaningful statement.
    double sum_exact = 0.0, sum_analytic = 0.0;
    {
        std::size_t ia = 0;
        for (const Sample& s : exact.samples()) {
            if (s.t < 1) continue;
            const Sample& a = analytic.samples()[ia++];
            if (s.t >= cfg.fit_min && s.t <= cfg.fit_max) {
                sum_exact += s.value;
                sum_analytic += a.value;
            }
        }
    }
    const double mean_ratio = sum_exact / sum_analytic;

    std::string report = "exponent_exact,exponent_analytic,exponent_diff,mean_ratio\n";
    report += format_double(exp_exact);
    report += ',';
    report += format_double(exp_analytic);
    report += ',';
    report += format_double(exp_exact - exp_analytic);
    report += ',';
    report += format_double(mean_ratio);
    report += '\n';
    write_file(dir / "compare_report.csv", report);
    return exit_code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliParser cli;
    try {
        cli.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << cli.app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (cli.batch_mode()) {
            cli.check_batch_exclusivity();
            return run_batch(cli.batch_files, cli.jobs, err);
        }
        const ExperimentConfig cfg = cli.finalize();
        if (cli.dump) {
            out << dump_config(cfg);
            return 0;
        }
        return dispatch(cfg);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const FitError& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace qwline
