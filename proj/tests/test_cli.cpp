#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    const int status = std::system((std::string(QUERMASS_BIN) + " " + args).c_str());
#ifdef _WIN32
    return status;
#else
    return WEXITSTATUS(status);
#endif
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "quermass_cli_tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write_spec(const std::string& name, const std::string& content) {
    const fs::path p = scratch_dir() / name;
    std::ofstream(p) << content;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ostringstream os;
    os << std::ifstream(p).rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("cli exit codes") {
    const fs::path ball = write_spec("ball.json", R"({"kind":"ball","dimension":3})");

    SUBCASE("missing subcommand is a usage error") { CHECK(run("> /dev/null 2>&1") == 2); }
    SUBCASE("successful oracle run") {
        CHECK(run("oracle --body " + ball.string() + " --l 1 --t 0.6 > /dev/null") == 0);
    }
    SUBCASE("malformed spec exits 2") {
        const fs::path bad = write_spec("bad.json", "{\"kind\":");
        CHECK(run("sweep --body " + bad.string() + " --l 0 2> /dev/null") == 2);
    }
    SUBCASE("unknown body kind exits 2") {
        const fs::path bad = write_spec("kind.json", R"({"kind":"torus"})");
        CHECK(run("sweep --body " + bad.string() + " --l 0 2> /dev/null") == 2);
    }
    SUBCASE("offset outside the admissible band exits 3") {
        CHECK(run("oracle --body " + ball.string() + " --l 1 --t 0.99 2> /dev/null") == 3);
    }
    SUBCASE("non-decreasing lambda schedule exits 2") {
        const fs::path eps = write_spec(
            "eps.json", R"({"dimension":3,"terms":[{"exponents":[0,0,1],"coeff":1.0}]})");
        CHECK(run("perturb --body " + eps.string() +
                  " --d 3 --l 1 --lambda-schedule 1e-3,1e-2 2> /dev/null") == 2);
    }
}

TEST_CASE("cli reports") {
    const fs::path shifted = write_spec(
        "shifted.json", R"({"kind":"shifted-ball","center":[0.0,0.0,0.1],"radius":1.0})");

    SUBCASE("sweep report carries the schema and tracks the shift") {
        const fs::path out = scratch_dir() / "sweep.json";
        REQUIRE(run("sweep --body " + shifted.string() +
                    " --l 0 --t-grid 41 --poles 6 --quad-order 24 --out " + out.string()) == 0);
        const nlohmann::json report = nlohmann::json::parse(slurp(out));
        CHECK(report.at("schema") == "quermass-report/1");
        CHECK(report.at("records").size() == 6);
        const double max_t = report.at("summary").at("max_abs_t_star").get<double>();
        CHECK(max_t > 0.05);
        CHECK(max_t < 0.15);
    }
    SUBCASE("csv profiles start with the header row") {
        const fs::path out = scratch_dir() / "sweep.csv";
        REQUIRE(run("sweep --body " + shifted.string() +
                    " --l 0 --t-grid 21 --poles 4 --quad-order 16 --format csv --out " +
                    out.string()) == 0);
        CHECK(slurp(out).starts_with("pole0,pole1,pole2,t_star,w_star"));
    }
    SUBCASE("identical spec and seed give byte-identical reports") {
        const fs::path a = scratch_dir() / "det_a.json";
        const fs::path b = scratch_dir() / "det_b.json";
        const std::string cmd = "oracle --body " + shifted.string() +
                                " --l 1 --t 0.2 --seed 99 --out ";
        REQUIRE(run(cmd + a.string()) == 0);
        REQUIRE(run(cmd + b.string()) == 0);
        CHECK(slurp(a) == slurp(b));
        CHECK(!slurp(a).empty());
    }
    SUBCASE("evenness verdicts") {
        const fs::path even = write_spec(
            "even.json", R"({"dimension":3,"terms":[{"exponents":[0,0,2],"coeff":1.0}]})");
        const fs::path out = scratch_dir() / "even.json.out";
        REQUIRE(run("evenness --body " + even.string() + " --poles 16 --out " + out.string()) ==
                0);
        CHECK(nlohmann::json::parse(slurp(out)).at("verdict") == "even-consistent");

        const fs::path odd = write_spec(
            "odd.json", R"({"dimension":3,"terms":[{"exponents":[0,0,1],"coeff":1.0}]})");
        REQUIRE(run("evenness --body " + odd.string() + " --poles 16 --out " + out.string()) ==
                0);
        CHECK(nlohmann::json::parse(slurp(out)).at("verdict") == "not-even");
    }
    SUBCASE("remark2d exposes the integration-by-parts defect") {
        const fs::path spec = write_spec("remark.json", R"({
            "rho0":{"dimension":3,"terms":[{"exponents":[0,0,0],"coeff":1.0},
                                           {"exponents":[2,0,0],"coeff":0.1}]},
            "epsilon":{"dimension":3,"terms":[{"exponents":[0,0,1],"coeff":0.1}]}})");
        const fs::path out = scratch_dir() / "remark.json.out";
        REQUIRE(run("remark2d --body " + spec.string() + " --out " + out.string()) == 0);
        const nlohmann::json report = nlohmann::json::parse(slurp(out));
        CHECK(report.at("ibp_defect").get<double>() < 1e-6);
    }
}
