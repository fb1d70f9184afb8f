#include "odsup/mc.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "odsup/csv.hpp"
#include "odsup/errors.hpp"
#include "odsup/parallel.hpp"
#include "odsup/report.hpp"
#include "odsup/rng.hpp"

namespace odsup {

std::string cell_key(const DgpSpec& spec) {
    std::ostringstream key;
    key << "model=" << to_string(spec.model) << ";n=" << spec.n << ";p=" << spec.p;
    if (spec.mu) key << ";mu=" << csv::format_double(*spec.mu);
    if (spec.sigma) key << ";sigma=" << csv::format_double(*spec.sigma);
    if (spec.ar) key << ";a=" << csv::format_double(*spec.ar);
    if (spec.ma) key << ";b=" << csv::format_double(*spec.ma);
    if (spec.cluster) key << ";m=" << *spec.cluster;
    if (spec.tau) key << ";tau=" << csv::format_double(*spec.tau);
    if (spec.delta) key << ";delta=" << csv::format_double(*spec.delta);
    return key.str();
}

PowerCell run_cell(const CellRequest& request, std::uint64_t master_seed, const Kernel& kernel,
                   unsigned threads) {
    if (request.replications < 1) throw ConfigError("run_cell needs replications >= 1");
    validate_spec(request.spec);

    PowerCell cell;
    cell.request = request;
    cell.key = cell_key(request.spec);
    cell.cell_seed = rng::derive_seed(master_seed, cell.key, 0);

    const auto start = std::chrono::steady_clock::now();
    std::vector<unsigned char> rejected(request.replications, 0);
    parallel_for(request.replications, threads, [&](std::size_t r0, std::size_t r1) {
        for (std::size_t r = r0; r < r1; ++r) {
            DgpSpec spec = request.spec;
            spec.seed = rng::derive_seed(cell.cell_seed, "data", r);
            const ObservationSet sample = generate(spec);

            TestOptions options;
            options.replicates = request.replicates;
            options.alpha = request.alpha;
            options.seed = rng::derive_seed(cell.cell_seed, "boot", r);
            options.threads = 1;  // parallelism lives at the replicate level
            const TestReport report = run_iid_test(sample, kernel, options);
            rejected[r] = report.p_value < request.alpha ? 1 : 0;
        }
    });
    cell.rejections = 0;
    for (unsigned char f : rejected) cell.rejections += f;
    cell.proportion =
        static_cast<double>(cell.rejections) / static_cast<double>(request.replications);
    cell.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cell;
}

PowerTable run_table(const std::vector<CellRequest>& grid, std::uint64_t master_seed,
                     const Kernel& kernel, unsigned threads) {
    if (grid.empty()) throw ConfigError("power table needs at least one cell");

    std::set<std::string> seen;
    for (const CellRequest& request : grid) {
        validate_spec(request.spec);
        const std::string key = cell_key(request.spec);
        if (!seen.insert(key).second) {
            throw ConfigError("duplicate cell in grid: " + key);
        }
    }

    PowerTable table;
    table.kernel = kernel.describe();
    table.master_seed = master_seed;
    table.cells.reserve(grid.size());
    for (const CellRequest& request : grid) {
        const std::string key = cell_key(request.spec);
        try {
            table.cells.push_back(run_cell(request, master_seed, kernel, threads));
        } catch (const InputError& e) {
            throw InputError("cell " + key + ": " + e.what());
        } catch (const ConfigError& e) {
            throw ConfigError("cell " + key + ": " + e.what());
        } catch (const NumericError& e) {
            throw NumericError("cell " + key + ": " + e.what());
        }
    }
    return table;
}

namespace {

std::string opt_field(const std::optional<double>& v) {
    return v ? csv::format_double(*v) : std::string();
}

}  // namespace

std::string power_table_csv(const PowerTable& table, bool with_timing) {
    std::ostringstream out;
    out << "model,n,p,mu,sigma,a,b,m,tau,delta,replications,B,alpha,cell_seed,rejections,"
           "proportion";
    if (with_timing) out << ",wall_seconds";
    out << '\n';
    for (const PowerCell& cell : table.cells) {
        const DgpSpec& spec = cell.request.spec;
        out << to_string(spec.model) << ',' << spec.n << ',' << spec.p << ','
            << opt_field(spec.mu) << ',' << opt_field(spec.sigma) << ',' << opt_field(spec.ar)
            << ',' << opt_field(spec.ma) << ','
            << (spec.cluster ? std::to_string(*spec.cluster) : std::string()) << ','
            << opt_field(spec.tau) << ',' << opt_field(spec.delta) << ','
            << cell.request.replications << ',' << cell.request.replicates << ','
            << csv::format_double(cell.request.alpha) << ',' << cell.cell_seed << ','
            << cell.rejections << ',' << csv::format_double(cell.proportion);
        if (with_timing) out << ',' << csv::format_double(cell.wall_seconds);
        out << '\n';
    }
    return out.str();
}

std::string power_table_markdown(const PowerTable& table) {
    // Rows are parameter settings, columns are sample sizes, mirroring the
    // usual power-table layout.
    std::ostringstream out;
    out << "# Rejection proportions (%), kernel " << table.kernel << ", seed "
        << table.master_seed << "\n";

    std::vector<DgpModel> model_order;
    for (const PowerCell& cell : table.cells) {
        if (std::find(model_order.begin(), model_order.end(), cell.request.spec.model) ==
            model_order.end()) {
            model_order.push_back(cell.request.spec.model);
        }
    }

    for (DgpModel model : model_order) {
        std::vector<const PowerCell*> cells;
        std::set<std::size_t> sizes;
        for (const PowerCell& cell : table.cells) {
            if (cell.request.spec.model == model) {
                cells.push_back(&cell);
                sizes.insert(cell.request.spec.n);
            }
        }
        out << "\n## " << to_string(model) << "\n\n| params |";
        for (std::size_t n : sizes) out << " n=" << n << " |";
        out << "\n|---|";
        for (std::size_t i = 0; i < sizes.size(); ++i) out << "---|";
        out << '\n';

        // Group by parameter signature, preserving first appearance order.
        std::vector<std::string> row_order;
        std::map<std::string, std::map<std::size_t, double>> rows;
        for (const PowerCell* cell : cells) {
            const DgpSpec& spec = cell->request.spec;
            std::ostringstream label;
            const char* sep = "";
            auto add = [&](const char* name, const std::string& value) {
                label << sep << name << "=" << value;
                sep = ", ";
            };
            if (spec.mu) add("mu", csv::format_double(*spec.mu));
            if (spec.sigma) add("sigma", csv::format_double(*spec.sigma));
            if (spec.ar) add("a", csv::format_double(*spec.ar));
            if (spec.ma) add("b", csv::format_double(*spec.ma));
            if (spec.cluster) add("m", std::to_string(*spec.cluster));
            if (spec.tau) add("tau", csv::format_double(*spec.tau));
            if (spec.delta) add("delta", csv::format_double(*spec.delta));
            std::string text = label.str();
            if (text.empty()) text = "-";
            if (rows.find(text) == rows.end()) row_order.push_back(text);
            rows[text][spec.n] = 100.0 * cell->proportion;
        }
        for (const std::string& label : row_order) {
            out << "| " << label << " |";
            for (std::size_t n : sizes) {
                const auto it = rows[label].find(n);
                if (it == rows[label].end()) {
                    out << " - |";
                } else {
                    char buf[32];
                    std::snprintf(buf, sizeof(buf), "%.1f", it->second);
                    out << ' ' << buf << " |";
                }
            }
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace odsup
