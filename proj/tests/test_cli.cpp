#include "commands.hpp"
#include "run_config.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace jastrow1d;
using namespace jastrow1d::cli;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "jastrow1d");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "jastrow1d_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string read_file(const std::filesystem::path &p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

void write_file(const std::filesystem::path &p, const std::string &text) { std::ofstream(p) << text; }

} // namespace

TEST_CASE("defaults fill in everything not given") {
    const Result r = run({"twobody", "--interaction", "quasi1d_coulomb", "--g", "0.5", "--emit-config"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["range-b"] == 0.1);
    CHECK(j["particles"] == 3);
    CHECK(j["orbitals"] == 15);
    CHECK(j["quad-order"] == 64);
    CHECK(j["alpha-min"] == 0.7);
    CHECK(j["alpha-max"] == 1.1);
    CHECK(j["alpha-steps"] == 17);
    CHECK(j["eigenvalues"] == 4);
    CHECK(j["statistics"] == "bosons");
}

TEST_CASE("invalid values are usage errors naming the flag") {
    Result r = run({"scan", "--alpha-min", "0.3", "--particles", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--alpha-min") != std::string::npos);
    CHECK(r.err.find("0.578") != std::string::npos);

    r = run({"scan", "--particles", "7"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--particles") != std::string::npos);
    CHECK(r.err.find("[2, 4]") != std::string::npos);

    CHECK(run({"scan", "--statistics", "anyons"}).code == 2);
    CHECK(run({"scan", "--interaction", "yukawa"}).code == 2);
    CHECK(run({"scan", "--range-b", "0"}).code == 2);
    CHECK(run({"scan", "--quad-order", "8"}).code == 2);
    CHECK(run({"scan", "--orbitals", "abc"}).code == 2);
    CHECK(run({"scan", "--no-such-flag"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"ci", "--orbitals", "30"}).code == 2);
    CHECK(run({"ci", "--statistics", "fermions", "--particles", "4", "--orbitals", "6"}).code == 2);
    CHECK(run({"scan", "--help"}).code == 0);
}

TEST_CASE("config files: precedence, unknown keys and round trip") {
    const auto dir = scratch_dir();
    const auto cfg = dir / "run.json";
    write_file(cfg, R"({"g": 2.0, "statistics": "fermions", "orbitals": 12})");
    Result r = run({"ci", "--config", cfg.string(), "--g", "3", "--emit-config"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["g"] == 3.0);
    CHECK(j["statistics"] == "fermions");
    CHECK(j["orbitals"] == 12);

    write_file(cfg, R"({"g": 2.0, "colour": "red"})");
    r = run({"ci", "--config", cfg.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("colour") != std::string::npos);

    write_file(cfg, R"({"particles": "three"})");
    CHECK(run({"ci", "--config", cfg.string()}).code == 2);
    CHECK(run({"ci", "--config", (dir / "missing.json").string()}).code == 2);

    const Result first = run({"scan", "--interaction", "soft_coulomb", "--g", "1.25", "--range-b", "0.2", "--particles",
                              "4", "--statistics", "fermions", "--orbitals", "11", "--quad-order", "40",
                              "--alpha-min", "0.85", "--alpha-max", "1.2", "--alpha-steps", "9", "--eigenvalues",
                              "3", "--output", "x.csv", "--emit-config"});
    REQUIRE(first.code == 0);
    write_file(cfg, first.out);
    const Result second = run({"scan", "--config", cfg.string(), "--emit-config"});
    REQUIRE(second.code == 0);
    CHECK(second.out == first.out);

    RunConfig c;
    c.interaction = Interaction::make(InteractionKind::gaussian, -0.75, 0.3);
    c.particles = 2;
    c.alpha_min = 0.123456789012345;
    CHECK(apply_json(to_json(c), RunConfig{}) == c);
}

TEST_CASE("twobody command") {
    const Result r = run({"twobody", "--g", "0.5", "--orbitals", "15"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["parity"] == "even");
    CHECK(j["coefficients"].size() == 15);
    CHECK(j["energy"].get<double>() == doctest::Approx(1.455644959741).epsilon(1e-11));
    CHECK(j["basis_convergence_delta"].get<double>() < 0.0);
    CHECK(j["config"]["g"] == 0.5);
    const json odd = json::parse(run({"twobody", "--statistics", "fermions", "--interaction", "none"}).out);
    CHECK(odd["parity"] == "odd");
    CHECK(odd["energy"].get<double>() == doctest::Approx(1.5));
}

TEST_CASE("scan command writes one CSV row per alpha") {
    const Result r = run({"scan", "--interaction", "none", "--quad-order", "24", "--alpha-min", "0.9", "--alpha-max",
                          "1.1", "--alpha-steps", "5"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "alpha,energy,log_norm,convergence_delta");
    int rows = 0;
    while (std::getline(in, line) && line != "{") ++rows;
    CHECK(rows == 5);
    std::string rest = "{\n";
    while (std::getline(in, line)) rest += line + "\n";
    const json summary = json::parse(rest);
    CHECK(summary["alpha_star"].get<double>() == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(summary["energy_star"].get<double>() == doctest::Approx(1.5).epsilon(1e-8));
    CHECK(summary["boundary_minimum"] == false);

    const auto csv = scratch_dir() / "curve.csv";
    REQUIRE(run({"scan", "--interaction", "none", "--quad-order", "24", "--alpha-min", "1.0", "--alpha-max", "1.2",
                 "--alpha-steps", "3", "--output", csv.string()})
                .code == 0);
    CHECK(read_file(csv).find("alpha,energy") == 0);
    const json s = json::parse(read_file(scratch_dir() / "curve.summary.json"));
    CHECK(s["boundary_minimum"] == true);
    CHECK_FALSE(s["warnings"].empty());
}

TEST_CASE("minimize command") {
    const Result r = run({"minimize", "--interaction", "none", "--quad-order", "24", "--alpha-min", "0.9",
                          "--alpha-max", "1.1", "--alpha-steps", "5"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["command"] == "minimize");
    CHECK(j["alpha_star"].get<double>() == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("ci command") {
    const Result r = run({"ci", "--g", "0.5", "--orbitals", "12"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["energies"].size() == 4);
    CHECK(j["gap"].get<double>() == doctest::Approx(1.0).epsilon(0.02));
    CHECK(j["M"] == 12);
    CHECK(j["N"] == 3);
    CHECK(j["dimension"].get<int>() > 0);
    CHECK(j["statistics"] == "bosons");
    CHECK(j["interaction"]["kind"] == "quasi1d_coulomb");
    CHECK(j["m_convergence_delta"].is_number());
}

TEST_CASE("compare command: free bosons and determinism") {
    const Result r = run({"compare", "--interaction", "none", "--quad-order", "32", "--alpha-min", "0.9",
                          "--alpha-max", "1.1", "--alpha-steps", "5", "--orbitals", "10"});
    REQUIRE(r.code == 0);
    const auto brace = r.out.find("\n{");
    REQUIRE(brace != std::string::npos);
    CHECK(r.out.find("E_trial") < brace);
    const json j = json::parse(r.out.substr(brace + 1));
    CHECK(std::abs(j["delta"].get<double>()) < 1e-8);
    CHECK(j["alpha_star"].get<double>() == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(j["partial"] == false);

    const auto out = scratch_dir() / "compare.json";
    const std::vector<std::string> args{"compare", "--particles", "2", "--g", "0.5", "--orbitals", "8",
                                        "--quad-order", "24", "--alpha-steps", "5", "--output", out.string()};
    REQUIRE(run(args).code == 0);
    const std::string once = read_file(out);
    REQUIRE(run(args).code == 0);
    CHECK(read_file(out) == once);
    CHECK(json::parse(once)["schema_version"] == kSchemaVersion);
}

TEST_CASE("runtime failures exit with code 1") {
    const Result r = run({"twobody", "--output", "/nonexistent-dir/out.json"});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
}
