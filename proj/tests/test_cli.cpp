#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + CASIMIR_CLI_PATH " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        out.append(buf, n);
    }
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

// Extract the value of a "name  = value [unit]" line; names sharing a prefix
// (eta_F vs eta_F_P) are disambiguated by the character after the name.
double field(const std::string& out, const std::string& name) {
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(name, 0) != 0) continue;
        if (line.size() > name.size() && line[name.size()] != ' ' &&
            line[name.size()] != '=') {
            continue;
        }
        const auto eq = line.find('=');
        REQUIRE(eq != std::string::npos);
        return std::stod(line.substr(eq + 1));
    }
    FAIL(("field not found: " + name));
    return 0.0;
}

fs::path scratch_dir(const char* leaf) {
    const fs::path p = fs::temp_directory_path() / "casimir_cli_tests" / leaf;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("point: full report for a metal at room temperature") {
    const auto r = run_cli("point --material Al --l-um 1 --temperature-k 300");
    REQUIRE(r.code == 0);
    CHECK(field(r.out, "eta_F") == doctest::Approx(0.917652738).epsilon(1e-6));
    CHECK(field(r.out, "eta_F_P") == doctest::Approx(0.915725229).epsilon(1e-6));
    CHECK(field(r.out, "eta_F_T") == doctest::Approx(1.001571192).epsilon(1e-6));
    CHECK(field(r.out, "eta_E") == doctest::Approx(0.963267799).epsilon(1e-6));
    const double delta_F = field(r.out, "delta_F");
    CHECK(delta_F > 0.0);
    CHECK(delta_F < 0.01);
    const double Delta_F = field(r.out, "Delta_F");
    CHECK(Delta_F == doctest::Approx(7.6329484 / 0.107 * delta_F).epsilon(1e-5));
}

TEST_CASE("point: perfect mirrors in vacuum are the ideal limit") {
    const auto r = run_cli("point --material Perfect --l-um 1 --temperature-k 0");
    REQUIRE(r.code == 0);
    CHECK(field(r.out, "eta_F") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(field(r.out, "eta_E") == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("point: softer mirrors show larger deviations") {
    const auto al = run_cli("point --material Al --l-um 2 --temperature-k 300");
    const auto lp = run_cli("point --lambda-p-nm 500 --l-um 2 --temperature-k 300");
    REQUIRE(al.code == 0);
    REQUIRE(lp.code == 0);
    CHECK(field(lp.out, "delta_F") > field(al.out, "delta_F"));
    CHECK(field(lp.out, "eta_F") < field(al.out, "eta_F"));
}

TEST_CASE("point: representation cross-check") {
    const auto r =
        run_cli("point --material Al --l-um 1 --temperature-k 300 --representation both");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("rel_difference") != std::string::npos);
    CHECK(field(r.out, "F_matsubara/A") ==
          doctest::Approx(field(r.out, "F_poisson/A")).epsilon(1e-4));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("point --material Al --l-um 1 --no-such-flag").code == 2);
    CHECK(run_cli("point --material gold --l-um 1").code == 2);
    CHECK(run_cli("point --l-um 1 --material Al --lambda-p-nm 500").code == 2);
    CHECK(run_cli("").code == 2);
    // Sweeps evaluate the Matsubara representation only.
    CHECK(run_cli("sweep --material Al --representation poisson").code == 2);
}

TEST_CASE("sweep: writes a deterministic csv") {
    const auto dir = scratch_dir("sweep");
    const std::string out = (dir / "s.csv").string();
    const std::string args = "sweep --material Al --lmin-um 1 --lmax-um 2 "
                             "--points-per-decade 3 --output " +
                             out;
    const auto r1 = run_cli(args);
    REQUIRE(r1.code == 0);
    REQUIRE(fs::exists(out));
    CHECK_FALSE(fs::exists(out + ".tmp"));
    const std::string first = slurp(out);
    CHECK(first.find("L_um,material,") != std::string::npos);
    CHECK(first.find(",Al,") != std::string::npos);

    const auto r2 = run_cli(args);
    REQUIRE(r2.code == 0);
    CHECK(slurp(out) == first);
}

TEST_CASE("sweep: io failures exit with code 4 and leave nothing behind") {
    const auto dir = scratch_dir("sweep_io");
    const fs::path blocker = dir / "blocker";
    std::ofstream(blocker) << "x";
    const std::string out = (blocker / "s.csv").string();
    const auto r = run_cli("sweep --material Al --lmin-um 1 --lmax-um 2 "
                           "--points-per-decade 3 --output " +
                           out);
    CHECK(r.code == 4);
    CHECK_FALSE(fs::exists(out));
}

TEST_CASE("sweep: default output lands in CASIMIR_OUT_DIR") {
    const auto dir = scratch_dir("sweep_env");
    const auto r = run_cli("sweep --material Al --lmin-um 1 --lmax-um 2 --points-per-decade 3",
                           "CASIMIR_OUT_DIR=" + dir.string() + " ");
    REQUIRE(r.code == 0);
    CHECK(fs::exists(dir / "sweep.csv"));
}

TEST_CASE("figures: emits all four panels as csv and svg") {
    const auto dir = scratch_dir("figures");
    const auto r = run_cli("figures --points-per-decade 2 --out " + dir.string());
    REQUIRE(r.code == 0);
    for (const char* stem : {"fig1", "fig2", "fig3", "fig4"}) {
        CHECK(fs::exists(dir / (std::string(stem) + ".csv")));
        CHECK(fs::exists(dir / (std::string(stem) + ".svg")));
    }
    const std::string fig3 = slurp(dir / "fig3.csv");
    CHECK(fig3.find(",lp300nm,") != std::string::npos);
    CHECK(fig3.find(",lp500nm,") != std::string::npos);
    const std::string fig4 = slurp(dir / "fig4.csv");
    CHECK(fig4.find(",lp500nm,") == std::string::npos);
}
