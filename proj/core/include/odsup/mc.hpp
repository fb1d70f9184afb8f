#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "odsup/dgp.hpp"
#include "odsup/kernel.hpp"

namespace odsup {

// One Monte Carlo cell: a simulation model plus the test settings to run
// against it. The spec's own seed field is ignored; every replicate derives
// its data seed and bootstrap seed from disjoint substreams of the cell seed.
struct CellRequest {
    DgpSpec spec;
    std::size_t replications = 200;
    std::size_t replicates = 300;  // bootstrap B
    double alpha = 0.05;
};

struct PowerCell {
    CellRequest request;
    std::string key;  // canonical "model=..;n=..;..." identity
    std::uint64_t cell_seed = 0;
    std::size_t rejections = 0;
    double proportion = 0.0;
    double wall_seconds = 0.0;
};

struct PowerTable {
    std::string kernel;
    std::uint64_t master_seed = 0;
    std::vector<PowerCell> cells;
};

// Canonical identity of a cell: model, n, p and the set parameters in fixed
// order, with shortest round-trip number formatting. The cell seed is derived
// from (master seed, key), so a cell's results depend only on what it is,
// never on its position in the grid.
std::string cell_key(const DgpSpec& spec);

// Run `replications` end-to-end tests and count p-value < alpha. Replicates
// may run in parallel; rejection flags are recorded by replicate index, so
// the outcome is independent of the worker count.
PowerCell run_cell(const CellRequest& request, std::uint64_t master_seed, const Kernel& kernel,
                   unsigned threads = 1);

// One PowerCell per request, in grid order. Duplicate cell keys are rejected;
// a failing cell aborts with an error naming it.
PowerTable run_table(const std::vector<CellRequest>& grid, std::uint64_t master_seed,
                     const Kernel& kernel, unsigned threads = 1);

// One row per cell. Bytes are identical across runs of the same config
// except for the wall_seconds column (suppressed when with_timing is false).
std::string power_table_csv(const PowerTable& table, bool with_timing = true);

// Per-model tables with parameter rows and one column per sample size,
// proportions in percent.
std::string power_table_markdown(const PowerTable& table);

}  // namespace odsup
