#pragma once

#include <cstdint>
#include <string>

#include "odsup/bootstrap.hpp"
#include "odsup/kernel.hpp"
#include "odsup/observations.hpp"

namespace odsup {

struct TestOptions {
    std::size_t replicates = 300;  // B
    double alpha = 0.05;
    std::uint64_t seed = 0;
    BootstrapPath path = BootstrapPath::Fast;
    bool plus_one_correction = false;
    unsigned threads = 1;
};

// Everything the CLI reports about one test run. Thread count is
// deliberately absent: reports are byte-identical for any worker count.
struct TestReport {
    std::size_t n = 0;
    std::size_t p = 0;  // 0 for matrix input
    DataKind input = DataKind::Vectors;
    std::string kernel;
    std::size_t replicates = 0;
    double alpha = 0.05;
    std::uint64_t seed = 0;
    std::string bootstrap_path;
    std::string p_value_correction;  // "none" | "plus-one"
    double t_stat = 0.0;
    double critical_value = 0.0;
    double p_value = 1.0;
    bool reject = false;
    std::size_t argmax_k = 0;
    double argmax_t = 0.0;  // argmax_k / n, in (0,1)
};

// End-to-end run: lag sums -> U-process -> jackknife -> multiplier bootstrap.
TestReport run_iid_test(const ObservationSet& obs, const Kernel& kernel,
                        const TestOptions& options);

// Stable-schema JSON (fixed key order, shortest round-trip numbers). Two runs
// with identical inputs produce identical bytes.
std::string report_json(const TestReport& report);

}  // namespace odsup
