// odsup — off-diagonal sequential U-process test of the iid hypothesis.
//
// Subcommands:
//   test      run the test on a CSV of observations or a precomputed matrix
//   simulate  draw a sample from one of the built-in simulation models
//   power     run a Monte Carlo size/power table from a config file
//   gamma     emit the limit covariance and its finite-n counterpart (debug)
//
// Exit codes: 0 the command ran (rejection is data, not an error),
// 2 malformed input, 3 invalid flags or config, 4 numerical failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "odsup/config.hpp"
#include "odsup/csv.hpp"
#include "odsup/errors.hpp"
#include "odsup/limits.hpp"
#include "odsup/mc.hpp"
#include "odsup/report.hpp"
#include "odsup/version.hpp"

namespace {

unsigned threads_from_env() {
    const char* env = std::getenv("ODSUP_THREADS");
    if (!env) return 0;
    const long value = std::strtol(env, nullptr, 10);
    return value > 0 ? static_cast<unsigned>(value) : 0;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw odsup::InputError("cannot open output file: " + path);
    out << content;
}

struct TestArgs {
    std::string input;
    std::string kernel = "expneg";
    std::string matrix_kind;
    bool header = false;
    std::size_t replicates = 300;
    double alpha = 0.05;
    std::uint64_t seed = 0;
    std::string path = "fast";
    bool plus_one = false;
    unsigned threads = 0;
    std::string out;
};

int cmd_test(const TestArgs& args) {
    odsup::csv::Table table = odsup::csv::read_table_file(args.input, args.header);

    std::optional<odsup::ObservationSet> obs;
    std::optional<odsup::Kernel> kernel;
    if (args.matrix_kind.empty()) {
        obs = odsup::ObservationSet::vectors(std::move(table.values), table.rows, table.cols);
        if (args.kernel == "expneg") {
            kernel = odsup::Kernel::expneg();
        } else if (args.kernel == "invquartic") {
            kernel = odsup::Kernel::invquartic();
        } else if (args.kernel == "const") {
            kernel = odsup::Kernel::constant();
        } else {
            throw odsup::ConfigError("unknown kernel '" + args.kernel + "'");
        }
    } else {
        if (table.rows != table.cols) {
            throw odsup::InputError("matrix input must be square, got " +
                                    std::to_string(table.rows) + "x" +
                                    std::to_string(table.cols));
        }
        if (args.matrix_kind == "kernel") {
            if (args.kernel != "expneg" && args.kernel != "const") {
                // expneg is the flag default; any explicit transform is a mistake here.
                throw odsup::ConfigError(
                    "--kernel does not apply to kernel-matrix input (matrix values are used "
                    "directly)");
            }
            obs = odsup::ObservationSet::kernel_matrix(std::move(table.values), table.rows);
            kernel = args.kernel == "const" ? odsup::Kernel::constant()
                                            : odsup::Kernel::precomputed();
        } else if (args.matrix_kind == "distance") {
            obs = odsup::ObservationSet::distance_matrix(std::move(table.values), table.rows);
            if (args.kernel == "expneg") {
                kernel = odsup::Kernel::of_distance(odsup::DistanceTransform::ExpNeg);
            } else if (args.kernel == "invquartic") {
                kernel = odsup::Kernel::of_distance(odsup::DistanceTransform::InverseQuartic);
            } else if (args.kernel == "const") {
                kernel = odsup::Kernel::constant();
            } else {
                throw odsup::ConfigError("unknown kernel '" + args.kernel + "'");
            }
        } else {
            throw odsup::ConfigError("--matrix-kind must be 'kernel' or 'distance'");
        }
    }

    odsup::TestOptions options;
    options.replicates = args.replicates;
    options.alpha = args.alpha;
    options.seed = args.seed;
    options.plus_one_correction = args.plus_one;
    options.threads = args.threads != 0 ? args.threads : threads_from_env();
    if (args.path == "fast") {
        options.path = odsup::BootstrapPath::Fast;
    } else if (args.path == "naive") {
        options.path = odsup::BootstrapPath::Naive;
    } else if (args.path == "both") {
        options.path = odsup::BootstrapPath::Both;
    } else {
        throw odsup::ConfigError("--path must be fast, naive or both");
    }

    const odsup::TestReport report = odsup::run_iid_test(*obs, *kernel, options);
    write_output(args.out, odsup::report_json(report));
    return 0;
}

struct SimulateArgs {
    std::string model = "M0";
    std::size_t n = 0;
    std::size_t p = 5;
    std::uint64_t seed = 0;
    std::optional<double> mu, sigma, a, b, tau, delta;
    std::optional<std::size_t> m;
    std::string out;
};

int cmd_simulate(const SimulateArgs& args) {
    const auto model = odsup::dgp_model_from_string(args.model);
    if (!model) throw odsup::ConfigError("unknown model '" + args.model + "'");
    odsup::DgpSpec spec;
    spec.model = *model;
    spec.n = args.n;
    spec.p = args.p;
    spec.seed = args.seed;
    spec.mu = args.mu;
    spec.sigma = args.sigma;
    spec.ar = args.a;
    spec.ma = args.b;
    spec.cluster = args.m;
    spec.tau = args.tau;
    spec.delta = args.delta;

    const odsup::ObservationSet sample = odsup::generate(spec);
    std::ostringstream body;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const auto row = sample.row(i);
        odsup::csv::write_row(body, row.data(), row.size());
    }
    write_output(args.out, body.str());
    return 0;
}

struct PowerArgs {
    std::string config;
    std::string out_csv;
    std::string out_md;
    unsigned threads = 0;
    bool no_timing = false;
};

int cmd_power(const PowerArgs& args) {
    const odsup::PowerConfig config = odsup::load_power_config(args.config);
    odsup::Kernel kernel = odsup::Kernel::expneg();
    if (config.kernel == "invquartic") kernel = odsup::Kernel::invquartic();
    if (config.kernel == "const") kernel = odsup::Kernel::constant();

    const unsigned threads = args.threads != 0 ? args.threads : threads_from_env();
    std::cerr << "running " << config.cells.size() << " cell(s), seed " << config.seed
              << ", kernel " << config.kernel << "\n";

    odsup::PowerTable table;
    table.kernel = kernel.describe();
    table.master_seed = config.seed;
    // Run via run_table for key validation, but emit progress per cell.
    {
        std::set<std::string> seen;
        for (const auto& request : config.cells) {
            odsup::validate_spec(request.spec);
            const std::string key = odsup::cell_key(request.spec);
            if (!seen.insert(key).second) {
                throw odsup::ConfigError("duplicate cell in grid: " + key);
            }
        }
    }
    for (const auto& request : config.cells) {
        const odsup::PowerCell cell = odsup::run_cell(request, config.seed, kernel, threads);
        std::cerr << "  " << cell.key << "  rejections " << cell.rejections << "/"
                  << cell.request.replications << "  (" << odsup::csv::format_double(cell.wall_seconds)
                  << "s)\n";
        table.cells.push_back(cell);
    }

    write_output(args.out_csv, odsup::power_table_csv(table, !args.no_timing));
    if (!args.out_md.empty()) {
        write_output(args.out_md, odsup::power_table_markdown(table));
    }
    return 0;
}

struct GammaArgs {
    std::size_t grid = 25;
    std::size_t n = 1000;
    std::string out;
};

int cmd_gamma(const GammaArgs& args) {
    if (args.grid < 1) throw odsup::ConfigError("--grid must be >= 1");
    if (args.n < 3) throw odsup::ConfigError("--n must be >= 3");
    std::ostringstream body;
    body << "s,t,gamma,gamma_finite_n,error\n";
    const std::size_t m = args.grid;
    for (std::size_t j = 0; j <= m; ++j) {
        for (std::size_t k = 0; k <= m; ++k) {
            const double s = static_cast<double>(j) / static_cast<double>(m);
            const double t = static_cast<double>(k) / static_cast<double>(m);
            const std::size_t jn = (args.n * j) / m;
            const std::size_t kn = (args.n * k) / m;
            const double exact = odsup::limits::gamma(s, t);
            const double finite = odsup::limits::gamma_finite_n(args.n, jn, kn);
            body << odsup::csv::format_double(s) << ',' << odsup::csv::format_double(t) << ','
                 << odsup::csv::format_double(exact) << ',' << odsup::csv::format_double(finite)
                 << ',' << odsup::csv::format_double(finite - exact) << '\n';
        }
    }
    write_output(args.out, body.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ODSUP: a general test of the iid hypothesis"};
    app.set_version_flag("--version", std::string(odsup::kVersion));
    app.require_subcommand(1);

    TestArgs test_args;
    CLI::App* test = app.add_subcommand("test", "Run the iid test on a CSV input file");
    test->add_option("input", test_args.input, "CSV file: one observation per row, or an n-by-n matrix")
        ->required();
    test->add_option("--kernel", test_args.kernel,
                     "expneg | invquartic | const (distance transform for --matrix-kind distance)");
    test->add_option("--matrix-kind", test_args.matrix_kind,
                     "treat input as a precomputed 'kernel' or 'distance' matrix");
    test->add_flag("--header", test_args.header, "skip the first input line");
    test->add_option("--B", test_args.replicates, "bootstrap replicates")->check(CLI::PositiveNumber);
    test->add_option("--alpha", test_args.alpha, "significance level in (0,1)");
    test->add_option("--seed", test_args.seed, "bootstrap seed");
    test->add_option("--path", test_args.path, "bootstrap path: fast | naive | both");
    test->add_flag("--plus-one-correction", test_args.plus_one,
                   "use the (1 + count)/(B + 1) finite-sample p-value");
    test->add_option("--threads", test_args.threads,
                     "worker threads (0 = hardware; env ODSUP_THREADS as fallback)");
    test->add_option("--out", test_args.out, "write the JSON report here instead of stdout");

    SimulateArgs sim_args;
    CLI::App* simulate = app.add_subcommand("simulate", "Draw a sample from a simulation model");
    simulate->add_option("--model", sim_args.model,
                         "M0 | MD | VCP | AR | MA | MDMA | VCPMA | Cluster | ChangePoint")
        ->required();
    simulate->add_option("--n", sim_args.n, "sample size")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--p", sim_args.p, "dimension")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim_args.seed, "innovation seed");
    double mu = 0, sigma = 0, a = 0, b = 0, tau = 0, delta = 0;
    std::size_t m = 0;
    CLI::Option* mu_opt = simulate->add_option("--mu", mu, "drift per step (MD, MDMA)");
    CLI::Option* sigma_opt = simulate->add_option("--sigma", sigma, "post-break scale (VCP, VCPMA)");
    CLI::Option* a_opt = simulate->add_option("--a", a, "AR coefficient");
    CLI::Option* b_opt = simulate->add_option("--b", b, "MA coefficient");
    CLI::Option* m_opt = simulate->add_option("--m", m, "cluster size (Cluster)");
    CLI::Option* tau_opt = simulate->add_option("--tau", tau, "break fraction in (0,1) (ChangePoint)");
    CLI::Option* delta_opt =
        simulate->add_option("--delta", delta, "second-segment mean shift (ChangePoint)");
    simulate->add_option("--out", sim_args.out, "write CSV here instead of stdout");

    PowerArgs power_args;
    CLI::App* power = app.add_subcommand("power", "Run a Monte Carlo size/power table");
    power->add_option("config", power_args.config, "TOML grid config")->required();
    power->add_option("--out-csv", power_args.out_csv, "write the CSV table here instead of stdout");
    power->add_option("--out-md", power_args.out_md, "also write a markdown table here");
    power->add_option("--threads", power_args.threads,
                      "worker threads (0 = hardware; env ODSUP_THREADS as fallback)");
    power->add_flag("--no-timing", power_args.no_timing, "omit the wall_seconds column");

    GammaArgs gamma_args;
    CLI::App* gamma = app.add_subcommand("gamma", "Emit the limit covariance grid (debug)");
    gamma->add_option("--grid", gamma_args.grid, "grid resolution m (points at j/m)");
    gamma->add_option("--n", gamma_args.n, "sample size for the finite-n comparison");
    gamma->add_option("--out", gamma_args.out, "write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
        if (test->parsed()) return cmd_test(test_args);
        if (simulate->parsed()) {
            if (mu_opt->count()) sim_args.mu = mu;
            if (sigma_opt->count()) sim_args.sigma = sigma;
            if (a_opt->count()) sim_args.a = a;
            if (b_opt->count()) sim_args.b = b;
            if (m_opt->count()) sim_args.m = m;
            if (tau_opt->count()) sim_args.tau = tau;
            if (delta_opt->count()) sim_args.delta = delta;
            return cmd_simulate(sim_args);
        }
        if (power->parsed()) return cmd_power(power_args);
        if (gamma->parsed()) return cmd_gamma(gamma_args);
        return 3;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    } catch (const odsup::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const odsup::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 3;
    } catch (const odsup::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
