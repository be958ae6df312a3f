#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <sys/wait.h>

#include "crosstalk/cli.hpp"

using namespace crosstalk;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("crosstalk_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream ss(s);
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(CROSSTALK_CLI_PATH) + " " + args;
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

RunConfig base_config(RunConfig::Command cmd) {
    RunConfig cfg;
    cfg.command = cmd;
    return cfg;
}

}  // namespace

TEST_CASE("point command prints the two-photon anchor value") {
    std::ostringstream out, err;
    const int rc = run(base_config(RunConfig::Command::point), out, err);
    CHECK(rc == kExitOk);
    CHECK(out.str().find("chi_minus = (-0.0784314, 0.0000000)") != std::string::npos);
}

TEST_CASE("fig3a output has a vanishing-dispersion row at delta0") {
    RunConfig cfg = base_config(RunConfig::Command::fig3a);
    cfg.output = (temp_dir() / "fig3a.csv").string();
    std::ostringstream out, err;
    REQUIRE(run(cfg, out, err) == kExitOk);

    bool found = false;
    std::istringstream in(slurp(cfg.output));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("delta_over_gamma", 0) == 0) continue;
        const auto cols = split(line, ',');
        REQUIRE(cols.size() >= 14);
        if (std::abs(std::stod(cols[0]) - 10.25) < 1e-12) {
            found = true;
            CHECK(std::abs(std::stod(cols[3])) < 1e-6);  // re_chi_minus
        }
    }
    CHECK(found);
}

TEST_CASE("fig2 golden output is byte-identical across runs") {
    RunConfig cfg = base_config(RunConfig::Command::fig2);
    cfg.output = (temp_dir() / "fig2_a.csv").string();
    std::ostringstream out, err;
    REQUIRE(run(cfg, out, err) == kExitOk);
    const std::string first = slurp(cfg.output);

    cfg.output = (temp_dir() / "fig2_b.csv").string();
    REQUIRE(run(cfg, out, err) == kExitOk);
    CHECK(first == slurp(cfg.output));

    // header records the resolved parameters; rows carry both engines
    CHECK(first.find("# command: fig2") != std::string::npos);
    CHECK(first.find("# B_over_gamma: 2.00000000e+00") != std::string::npos);
    CHECK(first.find("# skipped: -8.00000000e+00") != std::string::npos);
    size_t analytic_rows = 0, lambda_rows = 0;
    std::istringstream in(first);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find(",analytic") != std::string::npos) ++analytic_rows;
        if (line.find(",lambda") != std::string::npos) ++lambda_rows;
    }
    CHECK(analytic_rows == 600);
    CHECK(lambda_rows == 600);
}

TEST_CASE("json output mirrors the csv rows with 9-digit decimal strings") {
    RunConfig cfg = base_config(RunConfig::Command::fig3b);
    cfg.format = RunConfig::Format::json;
    cfg.output = (temp_dir() / "fig3b.json").string();
    std::ostringstream out, err;
    REQUIRE(run(cfg, out, err) == kExitOk);

    const nlohmann::json doc = nlohmann::json::parse(slurp(cfg.output));
    CHECK(doc.at("command") == "fig3b");
    CHECK(doc.at("params").at("B_over_gamma") == "2.00000000e+00");
    const auto& rows = doc.at("rows");
    REQUIRE(rows.size() == 50);
    for (const auto& row : rows) {
        const double re = std::stod(row.at("re_chi_minus").get<std::string>());
        CHECK(re < 0.0);
        CHECK(row.at("engine") == "analytic");
    }
}

TEST_CASE("physical-scale column is appended without touching core columns") {
    RunConfig cfg = base_config(RunConfig::Command::fig3a);
    cfg.scale_A_MHz = 6.079;
    cfg.output = (temp_dir() / "fig3a_mhz.csv").string();
    std::ostringstream out, err;
    REQUIRE(run(cfg, out, err) == kExitOk);
    const std::string text = slurp(cfg.output);
    CHECK(text.find(",axis_MHz") != std::string::npos);

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("delta_over_gamma", 0) == 0) continue;
        const auto cols = split(line, ',');
        REQUIRE(cols.size() == 15);
        const double axis = std::stod(cols[0]);
        const double mhz = std::stod(cols[14]);
        CHECK(mhz == doctest::Approx(axis * 6.079 / 12.0).epsilon(1e-9));
        break;
    }
}

TEST_CASE("exit codes: validation, engine, io") {
    RunConfig cfg = base_config(RunConfig::Command::point);
    cfg.params.G = Complex{0.0, 0.0};
    std::ostringstream out, err;
    CHECK(run(cfg, out, err) == kExitValidation);

    cfg = base_config(RunConfig::Command::point);
    cfg.engine = Engine::bloch;
    cfg.params.B = cfg.params.B_prime = 0.0;
    cfg.params.Delta = cfg.params.delta = 0.0;
    CHECK(run(cfg, out, err) == kExitEngine);

    cfg = base_config(RunConfig::Command::fig3a);
    cfg.output = "/nonexistent_dir_for_sure/out.csv";
    CHECK(run(cfg, out, err) == kExitIo);
}

TEST_CASE("command-line binary end to end") {
    const fs::path out_csv = temp_dir() / "cli_fig3b.csv";
    CHECK(run_cli("fig3b --output " + out_csv.string()) == 0);
    CHECK(slurp(out_csv).find("# command: fig3b") != std::string::npos);

    CHECK(run_cli("point --delta 4 --Delta 4 > " + (temp_dir() / "pt.txt").string()) == 0);
    CHECK(slurp(temp_dir() / "pt.txt").find("chi_minus = (-0.0784314, 0.0000000)") !=
          std::string::npos);

    // config file supplies overrides; explicit flags win
    const fs::path config = temp_dir() / "config.json";
    {
        std::ofstream f(config);
        f << R"({"delta": 6.0, "format": "csv"})";
    }
    const fs::path pt6 = temp_dir() / "pt6.txt";
    CHECK(run_cli("point --config " + config.string() + " > " + pt6.string()) == 0);
    CHECK(slurp(pt6).find("chi_minus = (-0.0642956,") != std::string::npos);
    const fs::path pt4 = temp_dir() / "pt4.txt";
    CHECK(run_cli("point --config " + config.string() + " --delta 4 > " + pt4.string()) == 0);
    CHECK(slurp(pt4).find("chi_minus = (-0.0784314,") != std::string::npos);

    // validation failures surface as exit code 2 through the binary
    CHECK(run_cli("point --G 0 2>/dev/null") == 2);
}
