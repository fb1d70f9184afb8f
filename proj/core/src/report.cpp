#include "odsup/report.hpp"

#include <nlohmann/json.hpp>

#include "odsup/uprocess.hpp"
#include "odsup/version.hpp"

namespace odsup {

namespace {

const char* path_name(BootstrapPath path) {
    switch (path) {
        case BootstrapPath::Naive: return "naive";
        case BootstrapPath::Fast: return "fast";
        case BootstrapPath::Both: return "both";
    }
    return "?";
}

const char* input_name(DataKind kind) {
    switch (kind) {
        case DataKind::Vectors: return "vectors";
        case DataKind::KernelMatrix: return "kernel-matrix";
        case DataKind::DistanceMatrix: return "distance-matrix";
    }
    return "?";
}

}  // namespace

TestReport run_iid_test(const ObservationSet& obs, const Kernel& kernel,
                        const TestOptions& options) {
    const LagSums lags = lag_sums(kernel, obs, options.threads);
    const UProcessGrid grid = build_uprocess(lags);
    const JackknifeTerms terms = jackknife_terms(lags, grid);

    BootstrapConfig boot;
    boot.replicates = options.replicates;
    boot.alpha = options.alpha;
    boot.seed = options.seed;
    boot.path = options.path;
    boot.plus_one_correction = options.plus_one_correction;
    boot.threads = options.threads;
    const BootstrapResult result = run_bootstrap(terms, grid.statistic, boot);

    TestReport report;
    report.n = obs.size();
    report.p = obs.dim();
    report.input = obs.kind();
    report.kernel = kernel.describe();
    report.replicates = options.replicates;
    report.alpha = options.alpha;
    report.seed = options.seed;
    report.bootstrap_path = path_name(options.path);
    report.p_value_correction = options.plus_one_correction ? "plus-one" : "none";
    report.t_stat = grid.statistic;
    report.critical_value = result.critical_value;
    report.p_value = result.p_value;
    report.reject = report.p_value < options.alpha;
    report.argmax_k = grid.argmax_k;
    report.argmax_t = static_cast<double>(grid.argmax_k) / static_cast<double>(obs.size());
    return report;
}

std::string report_json(const TestReport& report) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["rng"] = kRngScheme;
    j["n"] = report.n;
    if (report.input == DataKind::Vectors) {
        j["p"] = report.p;
    } else {
        j["p"] = "matrix";
    }
    j["input"] = input_name(report.input);
    j["kernel"] = report.kernel;
    j["B"] = report.replicates;
    j["alpha"] = report.alpha;
    j["seed"] = report.seed;
    j["bootstrap_path"] = report.bootstrap_path;
    j["p_value_correction"] = report.p_value_correction;
    j["T_n"] = report.t_stat;
    j["c_alpha"] = report.critical_value;
    j["p_value"] = report.p_value;
    j["reject"] = report.reject;
    j["argmax_k"] = report.argmax_k;
    j["argmax_t"] = report.argmax_t;
    return j.dump(2) + "\n";
}

}  // namespace odsup
