#include <doctest.h>

#include <sstream>

#include "odsup/config.hpp"
#include "odsup/errors.hpp"
#include "odsup/mc.hpp"
#include "test_helpers.hpp"

using namespace odsup;

namespace {

CellRequest tiny_cell(DgpModel model, std::size_t n = 20) {
    CellRequest request;
    request.spec.model = model;
    request.spec.n = n;
    request.spec.p = 2;
    request.replications = 8;
    request.replicates = 25;
    request.alpha = 0.2;
    return request;
}

}  // namespace

TEST_CASE("cell_key is canonical and order-independent") {
    auto a = tiny_cell(DgpModel::MD);
    a.spec.mu = 0.0015;
    CHECK(cell_key(a.spec) == "model=MD;n=20;p=2;mu=0.0015");
    auto b = tiny_cell(DgpModel::M0);
    CHECK(cell_key(b.spec) == "model=M0;n=20;p=2");
    // The spec seed is not part of the identity.
    auto c = a;
    c.spec.seed = 999;
    CHECK(cell_key(c.spec) == cell_key(a.spec));
}

TEST_CASE("run_cell counts rejections exactly and deterministically") {
    const auto request = tiny_cell(DgpModel::M0);
    const auto cell = run_cell(request, 77, Kernel::expneg(), 1);
    CHECK(cell.rejections <= request.replications);
    CHECK(cell.proportion * static_cast<double>(request.replications) ==
          static_cast<double>(cell.rejections));
    for (unsigned threads : {2u, 4u}) {
        const auto again = run_cell(request, 77, Kernel::expneg(), threads);
        CHECK(again.rejections == cell.rejections);
        CHECK(again.cell_seed == cell.cell_seed);
    }
    // Different master seed moves the whole cell.
    const auto other = run_cell(request, 78, Kernel::expneg(), 1);
    CHECK(other.cell_seed != cell.cell_seed);
}

TEST_CASE("run_table: singleton grid equals run_cell; order does not matter") {
    auto md = tiny_cell(DgpModel::MD);
    md.spec.mu = 0.1;
    auto ma = tiny_cell(DgpModel::MA);
    ma.spec.ma = 4.0;

    const auto single = run_table({md}, 11, Kernel::expneg(), 2);
    CHECK(single.cells.size() == 1);
    CHECK(single.cells[0].rejections == run_cell(md, 11, Kernel::expneg(), 2).rejections);

    const auto forward = run_table({md, ma}, 11, Kernel::expneg(), 2);
    const auto reversed = run_table({ma, md}, 11, Kernel::expneg(), 2);
    CHECK(forward.cells[0].rejections == reversed.cells[1].rejections);
    CHECK(forward.cells[1].rejections == reversed.cells[0].rejections);
}

TEST_CASE("run_table rejects duplicate cells and empty grids") {
    const auto cell = tiny_cell(DgpModel::M0);
    CHECK_THROWS_AS(run_table({cell, cell}, 1, Kernel::expneg()), ConfigError);
    CHECK_THROWS_AS(run_table({}, 1, Kernel::expneg()), ConfigError);
}

TEST_CASE("a failing cell aborts with an error naming it") {
    auto bad = tiny_cell(DgpModel::M0);
    bad.replications = 0;  // passes spec validation, fails inside run_cell
    try {
        run_table({tiny_cell(DgpModel::MA, 24), bad}, 1, Kernel::expneg());
        FAIL("expected the bad cell to abort the table");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("model=M0;n=20;p=2") != std::string::npos);
    }
}

TEST_CASE("power table CSV bytes are reproducible without timing") {
    auto md = tiny_cell(DgpModel::MD);
    md.spec.mu = 0.05;
    const auto t1 = run_table({md}, 5, Kernel::expneg(), 1);
    const auto t2 = run_table({md}, 5, Kernel::expneg(), 4);
    CHECK(power_table_csv(t1, false) == power_table_csv(t2, false));
    // Timed output only differs in the wall_seconds column.
    const std::string a = power_table_csv(t1, true);
    CHECK(a.find("wall_seconds") != std::string::npos);
}

TEST_CASE("markdown emitter mirrors the rows-by-n layout") {
    auto a = tiny_cell(DgpModel::VCP, 20);
    a.spec.sigma = 1.5;
    auto b = tiny_cell(DgpModel::VCP, 24);
    b.spec.sigma = 1.5;
    const auto table = run_table({a, b}, 3, Kernel::expneg(), 2);
    const std::string md = power_table_markdown(table);
    CHECK(md.find("## VCP") != std::string::npos);
    CHECK(md.find("n=20") != std::string::npos);
    CHECK(md.find("n=24") != std::string::npos);
    CHECK(md.find("sigma=1.5") != std::string::npos);
}

TEST_CASE("config parsing: defaults, overrides and cross products") {
    std::istringstream in(R"(
# master settings
seed = 99
alpha = 0.1          # default level
B = 40
replications = 6
kernel = "expneg"
p = 3

[[cell]]
model = "M0"
n = 24

[[cell]]
model = "MD"
n = [24, 36]
mu = [1e-3, 2e-3]
B = 50

[[cell]]
model = "Cluster"
n = 25
m = 5
p = 2
alpha = 0.05
)");
    const PowerConfig config = parse_power_config(in);
    CHECK(config.seed == 99);
    CHECK(config.kernel == "expneg");
    REQUIRE(config.cells.size() == 6);  // 1 + 2*2 + 1

    CHECK(config.cells[0].spec.model == DgpModel::M0);
    CHECK(config.cells[0].spec.p == 3);
    CHECK(config.cells[0].replications == 6);
    CHECK(config.cells[0].replicates == 40);
    CHECK(config.cells[0].alpha == 0.1);

    // Cross product in fixed order, last axis fastest: (n=24,mu=1e-3),
    // (24,2e-3), (36,1e-3), (36,2e-3).
    CHECK(config.cells[1].spec.n == 24);
    CHECK(config.cells[1].spec.mu == 1e-3);
    CHECK(config.cells[2].spec.n == 24);
    CHECK(config.cells[2].spec.mu == 2e-3);
    CHECK(config.cells[3].spec.n == 36);
    CHECK(config.cells[4].spec.n == 36);
    CHECK(config.cells[1].replicates == 50);

    CHECK(config.cells[5].spec.model == DgpModel::Cluster);
    CHECK(config.cells[5].spec.cluster == 5);
    CHECK(config.cells[5].spec.p == 2);
    CHECK(config.cells[5].alpha == 0.05);
}

TEST_CASE("config parsing rejects malformed input") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_power_config(in);
    };
    CHECK_THROWS_AS(parse("seed = 1\n"), ConfigError);  // no cells
    CHECK_THROWS_AS(parse("[[cell]]\nn = 20\n"), ConfigError);  // missing model
    CHECK_THROWS_AS(parse("[[cell]]\nmodel = \"M0\"\n"), ConfigError);  // missing n
    CHECK_THROWS_AS(parse("[[cell]]\nmodel = \"nope\"\nn = 20\n"), ConfigError);
    CHECK_THROWS_AS(parse("[[cell]]\nmodel = \"M0\"\nn = 20\nwhat = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse("bogus = 3\n[[cell]]\nmodel = \"M0\"\nn = 20\n"), ConfigError);
    CHECK_THROWS_AS(parse("[[cell]]\nmodel = \"M0\"\nn = 20\nn = 30\n"), ConfigError);
    CHECK_THROWS_AS(parse("[section]\n"), ConfigError);
    CHECK_THROWS_AS(parse("[[cell]]\nmodel = \"MD\"\nn = 20\nmu = [1e-3\n"), ConfigError);
    CHECK_THROWS_AS(parse("[[cell]]\nmodel = \"M0\"\nn = 2.5\n"), ConfigError);
    // Model/parameter mismatch caught at expansion time.
    CHECK_THROWS_AS(parse("[[cell]]\nmodel = \"M0\"\nn = 20\nmu = 1e-3\n"), ConfigError);
}
