#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sentopt/config.hpp"
#include "sentopt/errors.hpp"

using namespace sentopt;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

struct temp_dir {
    fs::path path;
    explicit temp_dir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~temp_dir() { fs::remove_all(path); }
};

int run_cli(const std::string& args, const fs::path& dir) {
    std::string cmd = std::string(SENTOPT_CLI_PATH) + " " + args + " > " +
                      (dir / "stdout.txt").string() + " 2> " + (dir / "stderr.txt").string();
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

fs::path write_config(const fs::path& dir, const std::string& name, const std::string& body) {
    fs::path p = dir / name;
    std::ofstream f(p);
    f << body;
    return p;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::ifstream f(p);
    REQUIRE(f.good());
    std::string line;
    while (std::getline(f, line)) {
        std::vector<std::string> cells;
        std::istringstream is(line);
        std::string cell;
        while (std::getline(is, cell, ','))
            cells.push_back(cell);
        if (!line.empty() && line.back() == ',')
            cells.push_back("");
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_CASE("duration grammar") {
    CHECK(parse_duration("5d") == doctest::Approx(5.0 / 252.0).epsilon(1e-15));
    CHECK(parse_duration("1w") == doctest::Approx(5.0 / 252.0).epsilon(1e-15));
    CHECK(parse_duration("2w") == doctest::Approx(10.0 / 252.0).epsilon(1e-15));
    CHECK(parse_duration("3m") == doctest::Approx(63.0 / 252.0).epsilon(1e-15));
    CHECK(parse_duration("0.25") == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(parse_duration(" 1w ") == doctest::Approx(5.0 / 252.0).epsilon(1e-15));
}

TEST_CASE("config parsing: keys, comments and defaults") {
    run_config cfg = parse_config_text(
        "# reference setup\n"
        "mu_P = 0.03\n"
        "sigma_P = 0.35\n"
        "P0 = 100      # confidence level\n"
        "s0 = 450\n"
        "r = 0.01\n"
        "T = 3m\n"
        "tau = 1w\n"
        "K = 475\n"
        "kind = cash_or_nothing_call\n"
        "A = 100\n"
        "n_paths = 5000\n"
        "seed = 9\n"
        "rho = 0, 0.5, 1\n");
    CHECK(cfg.model.conf.mu_p == 0.03);
    CHECK(cfg.model.conf.phi0() == 100.0);
    CHECK(cfg.contract.maturity == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(cfg.model.tau == doctest::Approx(5.0 / 252.0).epsilon(1e-15));
    CHECK(cfg.contract.kind == option_kind::cash_or_nothing_call);
    CHECK(cfg.contract.strike == 475.0);
    CHECK(cfg.n_paths == 5000);
    CHECK(cfg.seed == 9);
    REQUIRE(cfg.rho_list.size() == 3);
    CHECK(cfg.rho_list[1] == 0.5);
    CHECK(cfg.model.conf.hist_len > cfg.model.tau);
}

TEST_CASE("config parsing rejects unknown keys with the line number") {
    try {
        parse_config_text("mu_P = 0.03\nsigmaS = 0.04\n");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("sigmaS") != std::string::npos);
    }
}

TEST_CASE("config parsing rejects malformed lines and values") {
    CHECK_THROWS_AS(parse_config_text("mu_P 0.03\n"), config_error);
    CHECK_THROWS_AS(parse_config_text("mu_P = abc\n"), config_error);
    CHECK_THROWS_AS(parse_config_text("kind = straddle\n"), config_error);
    CHECK_THROWS_AS(parse_config_text("T = 3x\n"), config_error);
}

TEST_CASE("cli: price command writes the quoted grid value") {
    temp_dir dir("sentopt_cli_price");
    fs::path cfg = write_config(dir.path, "run.cfg",
                                "P0 = 100\nK = 450\nT = 3m\ntau = 1w\nkind = vanilla_call\n");
    int rc = run_cli("--out " + (dir.path / "out").string() + " price " + cfg.string(), dir.path);
    CHECK(rc == 0);
    auto rows = read_csv(dir.path / "out" / "price.csv");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0][0] == "kind");
    CHECK(rows[1][0] == "vanilla_call");
    CHECK(std::stod(rows[1][5]) == doctest::Approx(34.94).epsilon(2e-3));
    // q1, q2 populated for calls
    CHECK(!rows[1][6].empty());
    CHECK(!rows[1][7].empty());
}

TEST_CASE("cli: binary price matches the quoted grid value") {
    temp_dir dir("sentopt_cli_binary");
    fs::path cfg = write_config(dir.path, "run.cfg",
                                "P0 = 1000\nK = 400\nT = 3m\ntau = 1w\nA = 100\n"
                                "kind = cash_or_nothing_call\n");
    int rc = run_cli("--out " + (dir.path / "out").string() + " price " + cfg.string(), dir.path);
    CHECK(rc == 0);
    auto rows = read_csv(dir.path / "out" / "price.csv");
    REQUIRE(rows.size() == 2);
    CHECK(std::stod(rows[1][5]) == doctest::Approx(45.70).epsilon(2e-3));
    CHECK(rows[1][6].empty());  // q1 reported as absent for binaries
}

TEST_CASE("cli: malformed key exits with code 2 and names the key") {
    temp_dir dir("sentopt_cli_badkey");
    fs::path cfg = write_config(dir.path, "bad.cfg", "sigmaS = 0.04\n");
    int rc = run_cli("--out " + (dir.path / "out").string() + " price " + cfg.string(), dir.path);
    CHECK(rc == 2);
    std::string err = slurp(dir.path / "stderr.txt");
    CHECK(err.find("sigmaS") != std::string::npos);
    CHECK(err.find("line 1") != std::string::npos);
}

TEST_CASE("cli: invalid table selector exits with code 2") {
    temp_dir dir("sentopt_cli_tbl5");
    int rc = run_cli("--out " + (dir.path / "out").string() + " table 5", dir.path);
    CHECK(rc == 2);
}

TEST_CASE("cli: maturity not exceeding the delay exits with code 2") {
    temp_dir dir("sentopt_cli_shortT");
    fs::path cfg = write_config(dir.path, "bad.cfg", "T = 1d\ntau = 1w\n");
    int rc = run_cli("--out " + (dir.path / "out").string() + " price " + cfg.string(), dir.path);
    CHECK(rc == 2);
}

TEST_CASE("cli: table 1 emits quadrature and MC columns") {
    temp_dir dir("sentopt_cli_tbl1");
    int rc = run_cli("--out " + (dir.path / "out").string() + " table 1 --n-paths 2000", dir.path);
    CHECK(rc == 0);
    auto rows = read_csv(dir.path / "out" / "table1.csv");
    REQUIRE(rows.size() == 16);  // header + 3x5 grid
    CHECK(rows[0][6] == "price_quad");
    // reference row: P0=100
    CHECK(std::stod(rows[6][6]) == doctest::Approx(64.12).epsilon(2e-3));
    CHECK(std::stod(rows[8][6]) == doctest::Approx(34.94).epsilon(2e-3));
    CHECK(std::stod(rows[10][6]) == doctest::Approx(16.97).epsilon(2e-3));
    // MC column present and of sane magnitude
    CHECK(std::stod(rows[8][7]) > 20.0);
    CHECK(std::stod(rows[8][7]) < 60.0);
}

TEST_CASE("cli: simulate is byte-deterministic and density requires two paths") {
    temp_dir dir("sentopt_cli_sim");
    fs::path cfg = write_config(dir.path, "sim.cfg",
                                "T = 1m\ntau = 1w\nn_paths = 3\nseed = 4\ndt = 1d\n"
                                "rho = 0, 0.5, 1\ndensity = true\n");
    int rc1 = run_cli("--out " + (dir.path / "a").string() + " simulate " + cfg.string(), dir.path);
    int rc2 = run_cli("--out " + (dir.path / "b").string() + " simulate " + cfg.string(), dir.path);
    CHECK(rc1 == 0);
    CHECK(rc2 == 0);
    for (std::string rho : {"0", "0.5", "1"}) {
        CHECK(slurp(dir.path / "a" / ("paths_rho" + rho + ".csv")) ==
              slurp(dir.path / "b" / ("paths_rho" + rho + ".csv")));
        CHECK(slurp(dir.path / "a" / ("density_rho" + rho + ".csv")) ==
              slurp(dir.path / "b" / ("density_rho" + rho + ".csv")));
    }

    auto rows = read_csv(dir.path / "a" / "paths_rho0.5.csv");
    // header + 3 paths x 22 grid points
    REQUIRE(rows.size() == 1 + 3 * 22);
    CHECK(rows[0] == std::vector<std::string>{"path_id", "t", "P", "S", "X"});

    // the confidence path is shared across correlation levels; prices differ
    auto rows0 = read_csv(dir.path / "a" / "paths_rho0.csv");
    auto rows1 = read_csv(dir.path / "a" / "paths_rho1.csv");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows0[i][2] == rows[i][2]);
        CHECK(rows0[i][2] == rows1[i][2]);
    }
    CHECK(slurp(dir.path / "a" / "paths_rho0.csv") != slurp(dir.path / "a" / "paths_rho1.csv"));

    fs::path single = write_config(dir.path, "single.cfg",
                                   "T = 1m\ntau = 1w\nn_paths = 1\ndensity = true\n");
    int rc3 = run_cli("--out " + (dir.path / "c").string() + " simulate " + single.string(),
                      dir.path);
    CHECK(rc3 == 3);
}

TEST_CASE("cli: moments table has the documented shape") {
    temp_dir dir("sentopt_cli_mom");
    fs::path cfg = write_config(dir.path, "mom.cfg",
                                "T = 3m\ntau = 1w\nn_paths = 2000\nrows = 10\ndt = 1d\n");
    int rc = run_cli("--out " + (dir.path / "out").string() + " moments " + cfg.string(), dir.path);
    CHECK(rc == 0);
    auto rows = read_csv(dir.path / "out" / "moments.csv");
    REQUIRE(rows.size() == 12);  // header + 11 times
    CHECK(std::stod(rows.back()[0]) == doctest::Approx(0.25).epsilon(1e-12));
    double prev = -1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double mean_x_val = std::stod(rows[i][1]);
        CHECK(mean_x_val >= prev);
        prev = mean_x_val;
        double t = std::stod(rows[i][0]);
        double var_x_val = std::stod(rows[i][2]);
        if (t <= 5.0 / 252.0 + 1e-12)
            CHECK(var_x_val == 0.0);
    }
}
