#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qszasz/config.hpp"
#include "qszasz/errors.hpp"
#include "qszasz/runner.hpp"

using namespace qszasz;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path work_dir() {
    const fs::path dir = fs::temp_directory_path() / "qszasz_runner_tests";
    fs::create_directories(dir);
    return dir;
}

ExperimentConfig small_config() {
    ExperimentConfig c;
    c.q_kind = "ratio";
    c.n_list = {5, 10};
    c.t_list = {0.0, 0.25};
    c.alpha = 1.0;
    c.beta = 2.0;
    c.a_coeffs = {1.0, 1.0};
    c.functions = {"sin"};
    c.lip_functions = {{"absdev(0.5)", 1.0, 1.0}};
    c.x_step = 0.1;
    c.horizon = 400;
    return c;
}

} // namespace

TEST_CASE("moments runner: exit code and determinism") {
    const fs::path dir = work_dir();
    ExperimentConfig c = small_config();
    c.out_path = (dir / "m1.csv").string();
    CHECK(run_moments(c) == 0);
    const std::string first = slurp(c.out_path);
    CHECK(first.find("direct,closed_form") != std::string::npos);
    c.out_path = (dir / "m2.csv").string();
    CHECK(run_moments(c) == 0);
    CHECK(first == slurp(c.out_path)); // byte identical
}

TEST_CASE("bounds runner gates on the guaranteed sections") {
    const fs::path dir = work_dir();
    ExperimentConfig c = small_config();
    c.t_list = {0.25};
    c.out_path = (dir / "b.csv").string();
    CHECK(run_bounds(c) == 0);
    const std::string text = slurp(c.out_path);
    CHECK(text.find("pointwise") != std::string::npos);
    CHECK(text.find("uniform") != std::string::npos);
    CHECK(text.find("lipschitz") != std::string::npos);
    CHECK(text.find("second-modulus") != std::string::npos);
}

TEST_CASE("statconv runner writes the experiment tables") {
    const fs::path dir = work_dir();
    ExperimentConfig c = small_config();
    c.out_path = (dir / "s.csv").string();
    CHECK(run_statconv(c) == 0);
    const std::string text = slurp(c.out_path);
    CHECK(text.find("korovkin") != std::string::npos);
    CHECK(text.find("square_density") != std::string::npos);
    CHECK(text.find("admissibility") != std::string::npos);
}

TEST_CASE("sweep runner") {
    const fs::path dir = work_dir();
    ExperimentConfig c = small_config();
    c.out_path = (dir / "w.csv").string();
    CHECK(run_sweep(c) == 0);
    CHECK(slurp(c.out_path).find("central2_direct") != std::string::npos);
}

TEST_CASE("verify-all aggregates into a directory") {
    const fs::path dir = work_dir() / "all";
    ExperimentConfig c = small_config();
    c.out_path = dir.string();
    CHECK(run_verify_all(c) == 0);
    for (const char* leaf : {"moments.csv", "bounds.csv", "statconv.csv", "sweep.csv"})
        CHECK(fs::exists(dir / leaf));
}

TEST_CASE("command dispatch rejects a mismatched config") {
    ExperimentConfig c = small_config();
    c.command = "moments";
    CHECK_THROWS_AS(run_command("bounds", c), ConfigError);
}
