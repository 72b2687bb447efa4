// Command-line front end: heavy-tailed sum experiments, rate tables and
// convergence sweeps. Exit codes: 0 success, 2 validation, 3 budget refusal,
// 4 internal numeric failure.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tailsum/csv.hpp"
#include "tailsum/error_rates.hpp"
#include "tailsum/errors.hpp"
#include "tailsum/manifest.hpp"
#include "tailsum/mc_harness.hpp"
#include "tailsum/refined_approx.hpp"
#include "tailsum/study_setup.hpp"
#include "tailsum/tail_model.hpp"
#include "svg.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tailsum;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Opts {
    std::string family = "centered-pareto";
    double xi = kNaN;
    double omega = 1.0;
    double delta = kNaN;
    double kappa = kNaN;
    double x0 = kNaN;
    double nu = kNaN;
    double alpha = kNaN;
    std::int64_t n = 1000;
    std::string k = "auto";
    double k_multiplier = 1.0;
    std::string variants = "unified";
    std::int64_t reps = 200000;
    std::uint64_t seed = 1;
    std::string n_grid;
    std::string xi_grid;
    std::string t_grid;
    double confidence = 0.99;
    int workers = 1;
    int stable_truncation = kDefaultStableTruncation;
    std::string out_dir = ".";
    std::string config_path;
    bool svg = false;
};

std::vector<double> parse_real_grid(const std::string& s) {
    std::vector<double> out;
    if (s.find(':') != std::string::npos) {
        double lo, hi, step;
        char c1, c2;
        std::istringstream is(s);
        if (!(is >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
            !(step > 0.0))
            throw std::invalid_argument("bad grid spec: " + s);
        for (double v = lo; v <= hi + 1e-12; v += step) out.push_back(v);
        return out;
    }
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw std::invalid_argument("empty grid: " + s);
    return out;
}

std::vector<std::int64_t> parse_int_grid(const std::string& s) {
    std::vector<std::int64_t> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoll(tok));
    if (out.empty()) throw std::invalid_argument("empty grid: " + s);
    return out;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(tok);
    return out;
}

DistributionSpec build_spec(const Opts& o) {
    const Family fam = family_from_name(o.family);
    DistributionSpec spec = [&] {
        switch (fam) {
            case Family::CenteredPareto:
                if (std::isnan(o.xi))
                    throw std::invalid_argument("centered-pareto requires --xi");
                return DistributionSpec::centered_pareto(o.xi, o.omega);
            case Family::StudentT: {
                const double nu = !std::isnan(o.nu) ? o.nu
                                  : !std::isnan(o.xi) ? 1.0 / o.xi
                                                      : kNaN;
                if (std::isnan(nu))
                    throw std::invalid_argument("student-t requires --nu or --xi");
                return DistributionSpec::student_t(nu);
            }
            case Family::FrechetCentered: {
                const double alpha = !std::isnan(o.alpha) ? o.alpha
                                     : !std::isnan(o.xi)  ? 1.0 / o.xi
                                                          : kNaN;
                if (std::isnan(alpha))
                    throw std::invalid_argument("frechet-centered requires --alpha or --xi");
                return DistributionSpec::frechet_centered(alpha);
            }
            case Family::Custom: {
                TailParams p;
                p.xi = o.xi;
                p.omega = o.omega;
                p.delta = o.delta;
                p.x0 = std::isnan(o.x0) ? 1.0 : o.x0;
                return DistributionSpec::custom(p);
            }
        }
        throw std::invalid_argument("bad family");
    }();
    if (!std::isnan(o.delta)) spec.params().delta = o.delta;
    if (!std::isnan(o.x0)) spec.params().x0 = o.x0;
    if (!std::isnan(o.kappa)) spec.params().kappa = o.kappa;
    spec.params().validate();
    return spec;
}

json opts_to_json(const Opts& o) {
    return json{{"family", o.family},   {"xi", o.xi},
                {"omega", o.omega},     {"delta", o.delta},
                {"kappa", o.kappa},     {"x0", o.x0},
                {"nu", o.nu},           {"alpha", o.alpha},
                {"n", o.n},             {"k", o.k},
                {"k_multiplier", o.k_multiplier},
                {"variants", o.variants}, {"reps", o.reps},
                {"seed", o.seed},       {"n_grid", o.n_grid},
                {"xi_grid", o.xi_grid}, {"t_grid", o.t_grid},
                {"confidence", o.confidence}, {"workers", o.workers},
                {"stable_truncation", o.stable_truncation},
                {"out_dir", o.out_dir}, {"svg", o.svg}};
}

// Flag precedence: explicit flags beat the JSON config file, which beats
// built-in defaults.
void apply_config_file(CLI::App* sub, Opts& o) {
    if (o.config_path.empty()) return;
    std::ifstream in(o.config_path);
    if (!in) throw std::invalid_argument("cannot open config file: " + o.config_path);
    json j;
    in >> j;
    auto set_if_default = [&](const char* flag, const char* key, auto& target) {
        using T = std::decay_t<decltype(target)>;
        if (j.contains(key) && (sub->get_option_no_throw(flag) == nullptr ||
                                sub->count(flag) == 0))
            target = j.at(key).get<T>();
    };
    set_if_default("--family", "family", o.family);
    set_if_default("--xi", "xi", o.xi);
    set_if_default("--omega", "omega", o.omega);
    set_if_default("--delta", "delta", o.delta);
    set_if_default("--kappa", "kappa", o.kappa);
    set_if_default("--x0", "x0", o.x0);
    set_if_default("--nu", "nu", o.nu);
    set_if_default("--alpha", "alpha", o.alpha);
    set_if_default("--n", "n", o.n);
    set_if_default("--k", "k", o.k);
    set_if_default("--k-multiplier", "k_multiplier", o.k_multiplier);
    set_if_default("--variant", "variants", o.variants);
    set_if_default("--reps", "reps", o.reps);
    set_if_default("--seed", "seed", o.seed);
    set_if_default("--n-grid", "n_grid", o.n_grid);
    set_if_default("--xi-grid", "xi_grid", o.xi_grid);
    set_if_default("--t-grid", "t_grid", o.t_grid);
    set_if_default("--confidence", "confidence", o.confidence);
    set_if_default("--workers", "workers", o.workers);
    set_if_default("--stable-truncation", "stable_truncation", o.stable_truncation);
    set_if_default("--out-dir", "out_dir", o.out_dir);
    set_if_default("--svg", "svg", o.svg);
}

void add_common_flags(CLI::App* sub, Opts& o) {
    sub->add_option("--family", o.family, "centered-pareto | student-t | frechet-centered | custom");
    sub->add_option("--xi", o.xi, "tail shape");
    sub->add_option("--omega", o.omega, "tail scale");
    sub->add_option("--delta", o.delta, "Pareto-neighborhood exponent");
    sub->add_option("--kappa", o.kappa, "tail shift");
    sub->add_option("--x0", o.x0, "tail-onset threshold");
    sub->add_option("--nu", o.nu, "student-t degrees of freedom");
    sub->add_option("--alpha", o.alpha, "Frechet shape");
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--workers", o.workers, "worker threads");
    sub->add_option("--out-dir", o.out_dir, "output directory");
    sub->add_option("--config", o.config_path, "JSON config file");
    sub->add_flag("--svg", o.svg, "also emit an SVG chart where applicable");
}

int resolve_k(const Opts& o, const DistributionSpec& spec, Variant v, double delta_eff) {
    if (o.k != "auto") {
        const int k = std::stoi(o.k);
        if (k < 1 || k >= o.n) throw std::invalid_argument("--k must satisfy 1 <= k < n");
        return k;
    }
    const double xi = spec.params().xi;
    const std::int64_t ks = k_star(o.n, xi, delta_eff, o.k_multiplier);
    if (ks == 0)
        throw std::invalid_argument(
            "k* = 0 for this (xi, delta): use variant normal-baseline");
    (void)v;
    return static_cast<int>(ks);
}

RunManifest start_manifest(const std::string& cmd, const Opts& o) {
    RunManifest m;
    m.command = cmd;
    m.config = opts_to_json(o);
    m.seed = o.seed;
    m.replicates = o.reps;
    return m;
}

int cmd_moments(const Opts& o) {
    DistributionSpec spec = build_spec(o);
    std::vector<double> grid;
    if (!o.t_grid.empty()) {
        grid = parse_real_grid(o.t_grid);
    } else {
        const double lo = spec.params().x0;
        for (int i = 0; i < 20; ++i) grid.push_back(lo * std::pow(10.0, 3.0 * i / 19.0));
    }
    const DistributionSummary sum = summary(spec);
    struct Row {
        double t, mu, s2, mu_a, s2_a;
    };
    std::vector<Row> rows;
    for (double t : grid) {
        TruncatedMoments tm = truncated_moments(spec, t);  // throws below support
        double mu_a = kNaN, s2_a = kNaN;
        if (t >= spec.params().x0 && t > spec.params().omega)
            mu_a = mu_tail_approx(spec.params(), t);
        if (spec.params().xi < 0.5 && t >= spec.params().x0)
            s2_a = sigma_sq_tail_approx(spec.params(), sum.sigma0_sq, t);
        rows.push_back({t, tm.mu, tm.sigma_sq, mu_a, s2_a});
    }
    fs::create_directories(o.out_dir);
    const std::string path = o.out_dir + "/moments.csv";
    {
        CsvWriter csv(path);
        csv.raw_row("t,mu,sigma_sq,mu_tail_approx,sigma_sq_tail_approx");
        for (const Row& r : rows) csv.row(r.t, r.mu, r.s2, r.mu_a, r.s2_a);
    }
    RunManifest m = start_manifest("moments", o);
    m.replicates = 0;
    m.output_files = {path};
    m.write(o.out_dir + "/moments_manifest.json");
    std::cout << "wrote " << path << "\n";
    return 0;
}

int cmd_sample(const Opts& o) {
    const auto t0 = std::chrono::steady_clock::now();
    DistributionSpec spec = build_spec(o);
    std::vector<double> values;
    std::int64_t clamps = 0;
    if (o.variants == "true-sums") {
        values = simulate_true_sums(spec, o.n, o.reps, o.seed, 1, o.workers);
    } else {
        const Variant v = variant_from_name(o.variants);
        StudySetupOptions sopt;
        sopt.delta = o.delta;
        sopt.stable_truncation = o.stable_truncation;
        sopt.k_multiplier = o.k_multiplier;
        const double delta_eff = effective_delta(spec, v, sopt);
        const int k = (v == Variant::NormalBaseline || v == Variant::StableBaseline)
                          ? 1
                          : resolve_k(o, spec, v, delta_eff);
        sopt.fixed_k = k;
        StudyVariant sv = make_study_variant(spec, v, sopt);
        ApproxConfig cfg{o.n, k, v, true};
        SampleResult r = sample_approx(cfg, sv.inputs_for(o.n, k), o.reps, o.seed, 1,
                                       o.workers);
        values = std::move(r.values);
        clamps = r.clamp_count;
    }
    fs::create_directories(o.out_dir);
    const std::string path = o.out_dir + "/sample.csv";
    {
        CsvWriter csv(path);
        csv.raw_row("replicate,value");
        for (std::size_t i = 0; i < values.size(); ++i)
            csv.row(static_cast<long long>(i), values[i]);
    }
    RunManifest m = start_manifest("sample", o);
    m.clamp_activations = clamps;
    m.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    m.output_files = {path};
    m.write(o.out_dir + "/sample_manifest.json");
    std::cout << "wrote " << path << "\n";
    return 0;
}

int cmd_compare(const Opts& o) {
    const auto t0 = std::chrono::steady_clock::now();
    DistributionSpec spec = build_spec(o);
    const double xi = spec.params().xi;
    std::vector<std::string> names = split_commas(o.variants);
    if (names.empty()) throw std::invalid_argument("no variants given");

    // Resolve everything (validation) before any sampling.
    struct Planned {
        Variant v;
        int k;
        double delta_eff;
        StudyVariant sv;
    };
    std::vector<Planned> plan;
    for (const auto& name : names) {
        const Variant v = variant_from_name(name);
        StudySetupOptions sopt;
        sopt.delta = o.delta;
        sopt.stable_truncation = o.stable_truncation;
        sopt.k_multiplier = o.k_multiplier;
        const double delta_eff = effective_delta(spec, v, sopt);
        int k = 1;
        if (v != Variant::NormalBaseline && v != Variant::StableBaseline)
            k = resolve_k(o, spec, v, delta_eff);
        sopt.fixed_k = k;
        plan.push_back({v, k, delta_eff, make_study_variant(spec, v, sopt)});
    }
    if (o.n > kDefaultSampleBudget / o.reps)
        throw budget_exceeded("compare: n * reps exceeds the budget");

    EmpiricalCdf truth =
        make_ecdf(simulate_true_sums(spec, o.n, o.reps, o.seed, 1, o.workers));

    fs::create_directories(o.out_dir);
    const std::string path = o.out_dir + "/compare.csv";
    std::int64_t total_clamps = 0;
    {
        CsvWriter csv(path);
        csv.raw_row(
            "variant,n,k,ks,dkw,reps,clamp_count,rate_bound,beta_star,noise_limited");
        std::uint64_t task = 2;
        for (const Planned& p : plan) {
            ApproxConfig cfg{o.n, p.k, p.v, true};
            SampleResult r =
                sample_approx(cfg, p.sv.inputs_for(o.n, p.k), o.reps, o.seed, task++,
                              o.workers);
            total_clamps += r.clamp_count;
            KsResult ks =
                ks_two_sample(truth, make_ecdf(std::move(r.values)), o.confidence);
            const double rb = p.k >= 1 && p.k < o.n
                                  ? rate_bound(p.k, o.n, xi, p.delta_eff)
                                  : kNaN;
            csv.row(variant_name(p.v), static_cast<long long>(o.n), p.k, ks.statistic,
                    ks.dkw_margin, static_cast<long long>(o.reps),
                    static_cast<long long>(r.clamp_count), rb,
                    beta_star(xi, p.delta_eff),
                    std::string(ks.statistic < 3 * ks.dkw_margin ? "1" : "0"));
        }
    }
    RunManifest m = start_manifest("compare", o);
    m.clamp_activations = total_clamps;
    m.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    m.output_files = {path};
    m.write(o.out_dir + "/compare_manifest.json");
    std::cout << "wrote " << path << "\n";
    return 0;
}

int cmd_rates(const Opts& o) {
    if (o.xi_grid.empty()) throw std::invalid_argument("rates requires --xi-grid");
    const double delta = std::isnan(o.delta) ? 1.0 : o.delta;
    std::vector<double> grid = parse_real_grid(o.xi_grid);
    for (double xi : grid)
        if (!(xi > 1.0 / 3.0 - 1e-12 && xi < 1.0))
            throw std::invalid_argument("xi grid must lie in (1/3, 1)");
    auto rows = rate_curves(grid, delta);
    fs::create_directories(o.out_dir);
    const std::string path = o.out_dir + "/rates.csv";
    {
        CsvWriter csv(path);
        csv.raw_row("xi,beta_star,alpha_star,benchmark,regime");
        for (const auto& r : rows)
            csv.row(r.xi, r.beta_star, r.alpha_star, r.benchmark, r.regime);
    }
    if (o.svg) {
        SvgSeries refined{"beta_star", {}}, bench{"benchmark", {}};
        for (const auto& r : rows) {
            refined.points.emplace_back(r.xi, r.beta_star);
            if (std::isfinite(r.benchmark)) bench.points.emplace_back(r.xi, r.benchmark);
        }
        write_svg_chart(o.out_dir + "/rates.svg", "error-rate exponents vs xi",
                        {refined, bench}, false, false);
    }
    RunManifest m = start_manifest("rates", o);
    m.replicates = 0;
    m.output_files = {path};
    m.write(o.out_dir + "/rates_manifest.json");
    std::cout << "wrote " << path << "\n";
    return 0;
}

int cmd_sweep(const Opts& o) {
    const auto t0 = std::chrono::steady_clock::now();
    DistributionSpec spec = build_spec(o);
    const double xi = spec.params().xi;
    if (o.n_grid.empty()) throw std::invalid_argument("sweep requires --n-grid");
    std::vector<std::int64_t> n_grid = parse_int_grid(o.n_grid);
    if (n_grid.size() < 3)
        throw std::invalid_argument("sweep: n grid needs at least 3 points");
    std::vector<StudyVariant> variants;
    std::vector<double> deltas;
    for (const auto& name : split_commas(o.variants)) {
        const Variant v = variant_from_name(name);
        StudySetupOptions sopt;
        sopt.delta = o.delta;
        sopt.stable_truncation = o.stable_truncation;
        sopt.k_multiplier = o.k_multiplier;
        if (o.k != "auto") sopt.fixed_k = std::stoi(o.k);
        variants.push_back(make_study_variant(spec, v, sopt));
        deltas.push_back(effective_delta(spec, v, sopt));
    }
    StudyTable table = convergence_study(spec, variants, n_grid, o.reps, o.seed,
                                         o.confidence, o.workers);

    fs::create_directories(o.out_dir);
    const std::string path = o.out_dir + "/sweep.csv";
    std::int64_t total_clamps = 0;
    {
        CsvWriter csv(path);
        csv.raw_row(
            "n,variant,ks,dkw,reps,clamp_count,noise_limited,slope,beta_star_ref,"
            "benchmark_ref");
        for (const auto& cell : table.cells) {
            total_clamps += cell.clamp_count;
            double delta_ref = kNaN;
            for (std::size_t i = 0; i < variants.size(); ++i)
                if (variants[i].label == cell.variant) delta_ref = deltas[i];
            csv.row(static_cast<long long>(cell.n), cell.variant, cell.ks, cell.dkw,
                    static_cast<long long>(cell.reps),
                    static_cast<long long>(cell.clamp_count),
                    std::string(cell.noise_limited ? "1" : "0"),
                    table.slope_for(cell.variant), beta_star(xi, delta_ref),
                    benchmark_exponent(xi, delta_ref));
        }
    }
    if (o.svg) {
        std::vector<SvgSeries> series;
        for (const auto& v : variants) {
            SvgSeries s{v.label, {}};
            for (const auto& cell : table.cells)
                if (cell.variant == v.label)
                    s.points.emplace_back(static_cast<double>(cell.n), cell.ks);
            series.push_back(std::move(s));
        }
        write_svg_chart(o.out_dir + "/sweep.svg", "KS distance vs n", series, true, true);
    }
    RunManifest m = start_manifest("sweep", o);
    m.clamp_activations = total_clamps;
    m.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    m.output_files = {path};
    m.write(o.out_dir + "/sweep_manifest.json");
    std::cout << "wrote " << path << "\n";
    return 0;
}

int cmd_kstar(const Opts& o) {
    if (std::isnan(o.xi)) throw std::invalid_argument("kstar requires --xi");
    const double delta = std::isnan(o.delta) ? 1.0 : o.delta;
    std::vector<std::int64_t> ns =
        o.n_grid.empty() ? std::vector<std::int64_t>{o.n} : parse_int_grid(o.n_grid);
    fs::create_directories(o.out_dir);
    const std::string path = o.out_dir + "/kstar.csv";
    {
        CsvWriter csv(path);
        csv.raw_row("n,xi,delta,multiplier,alpha_star,beta_star,k_star");
        for (std::int64_t n : ns) {
            const std::int64_t ks = k_star(n, o.xi, delta, o.k_multiplier);
            csv.row(static_cast<long long>(n), o.xi, delta, o.k_multiplier,
                    alpha_star(o.xi, delta), beta_star(o.xi, delta),
                    static_cast<long long>(ks));
            std::cout << "n=" << n << " k*=" << ks << "\n";
        }
    }
    RunManifest m = start_manifest("kstar", o);
    m.replicates = 0;
    m.output_files = {path};
    m.write(o.out_dir + "/kstar_manifest.json");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"heavy-tailed sum approximation toolkit"};
    app.require_subcommand(1);
    Opts o;

    CLI::App* moments = app.add_subcommand("moments", "truncated moments vs tail approximations");
    add_common_flags(moments, o);
    moments->add_option("--t-grid", o.t_grid, "truncation grid (comma list or lo:hi:step)");

    CLI::App* sample = app.add_subcommand("sample", "draw an ensemble and write it to CSV");
    add_common_flags(sample, o);
    sample->add_option("--n", o.n, "sum length");
    sample->add_option("--k", o.k, "order statistics retained, or 'auto'");
    sample->add_option("--k-multiplier", o.k_multiplier, "multiplier on n^{alpha*}");
    sample->add_option("--variant", o.variants, "variant name or 'true-sums'");
    sample->add_option("--reps", o.reps, "replicates");
    sample->add_option("--stable-truncation", o.stable_truncation, "stable ladder length");

    CLI::App* compare = app.add_subcommand("compare", "KS of variants against true sums");
    add_common_flags(compare, o);
    compare->add_option("--n", o.n, "sum length");
    compare->add_option("--k", o.k, "order statistics retained, or 'auto'");
    compare->add_option("--k-multiplier", o.k_multiplier, "multiplier on n^{alpha*}");
    compare->add_option("--variant", o.variants, "comma list of variants");
    compare->add_option("--reps", o.reps, "replicates");
    compare->add_option("--confidence", o.confidence, "DKW confidence");
    compare->add_option("--stable-truncation", o.stable_truncation, "stable ladder length");

    CLI::App* rates = app.add_subcommand("rates", "rate-curve table over a xi grid");
    add_common_flags(rates, o);
    rates->add_option("--xi-grid", o.xi_grid, "xi grid (comma list or lo:hi:step)");

    CLI::App* sweep = app.add_subcommand("sweep", "convergence study over an n grid");
    add_common_flags(sweep, o);
    sweep->add_option("--n-grid", o.n_grid, "comma list of n values (>= 3)");
    sweep->add_option("--k", o.k, "fixed k, or 'auto'");
    sweep->add_option("--k-multiplier", o.k_multiplier, "multiplier on n^{alpha*}");
    sweep->add_option("--variant", o.variants, "comma list of variants");
    sweep->add_option("--reps", o.reps, "replicates");
    sweep->add_option("--confidence", o.confidence, "DKW confidence");
    sweep->add_option("--stable-truncation", o.stable_truncation, "stable ladder length");

    CLI::App* kstar_cmd = app.add_subcommand("kstar", "rate-optimal k for given n");
    add_common_flags(kstar_cmd, o);
    kstar_cmd->add_option("--n", o.n, "sum length");
    kstar_cmd->add_option("--n-grid", o.n_grid, "comma list of n values");
    kstar_cmd->add_option("--k-multiplier", o.k_multiplier, "multiplier on n^{alpha*}");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    try {
        apply_config_file(sub, o);
        if (o.workers < 1 || o.workers > 256)
            throw std::invalid_argument("--workers must lie in [1, 256]");
        if (sub == moments) return cmd_moments(o);
        if (sub == sample) return cmd_sample(o);
        if (sub == compare) return cmd_compare(o);
        if (sub == rates) return cmd_rates(o);
        if (sub == sweep) return cmd_sweep(o);
        if (sub == kstar_cmd) return cmd_kstar(o);
        return 2;
    } catch (const budget_exceeded& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal failure: " << e.what() << "\n";
        return 4;
    }
}
