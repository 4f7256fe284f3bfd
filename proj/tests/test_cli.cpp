#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(SYMINEQ_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const char* name) { return std::string(SYMINEQ_DATA) + "/" + name; }
std::string fixture(const char* name) { return std::string(SYMINEQ_FIXTURES) + "/" + name; }

}  // namespace

TEST(Cli, Theorem1WorkedExampleCertifies) {
    const auto r = run("theorem1 --x " + data("Q.json") + " --y " + data("R.json") + " --r 2 --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["certified_interval"], json::array({0.0, 3.0}));
    EXPECT_TRUE(j["conclusions_pass"].get<bool>());
    EXPECT_EQ(j["seed"], 20100418);
}

TEST(Cli, Theorem1WorkedExampleWitness) {
    const auto r = run("theorem1 --x " + data("Q.json") + " --y " + data("R.json") + " --r 3 --format json");
    ASSERT_EQ(r.code, 1);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["first_failure_k"], 10);
    const auto& c = j["checks"][10 - 3];
    EXPECT_EQ(c["k"], 10);
    EXPECT_EQ(c["fx"], "73/216");  // 1226400 / 10!
    EXPECT_EQ(c["fy"], "71/216");  // 1192800 / 10!
}

TEST(Cli, Theorem1RMax) {
    const auto r = run("theorem1 --x " + data("Q.json") + " --y " + data("R.json") + " --r-max 3 --format json");
    EXPECT_EQ(r.code, 1);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["r"], 2);
    EXPECT_EQ(j["failure_witness"]["k"], 10);
    EXPECT_EQ(run("theorem1 --x '[2,0]' --y '[1,1]' --r-max 1").code, 0);
}

TEST(Cli, SpectralWorkedExample) {
    const auto r = run("spectral --q " + data("Q.json") + " --r 2 --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["e_coeffs"], json::array({"1/1", "9/1", "16/1", "9/1", "1/1"}));
    EXPECT_EQ(j["f"]["2"]["k_factorial_coeffs"][8], "2520/1");
    const auto csv = run("spectral --q " + data("Q.csv") + " --r 2 --format json");
    ASSERT_EQ(csv.code, 0);
    EXPECT_EQ(json::parse(csv.out)["e_coeffs"], j["e_coeffs"]);
}

TEST(Cli, SpectralVariants) {
    const auto r = run("spectral --q " + data("Q.json") + " --r 2 --variants 4 --format json");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["variants"].size(), 4u);
}

TEST(Cli, OtherCommands) {
    EXPECT_EQ(run("norms --x '[1,2,3]' --p 1 --p 0 --p inf").code, 0);
    EXPECT_EQ(run("fkr --x '[1,1]' --r 2").code, 0);
    EXPECT_EQ(run("majorize --x '[3,1]' --y '[2,2]'").code, 0);
    EXPECT_EQ(run("majorize --x " + data("probe_x.json") + " --y " + data("probe_y.json")).code, 1);
    EXPECT_EQ(run("majorize --x '[3,1,0]' --y '[2,1,1]' --samples 5 --seed 7").code, 0);
    EXPECT_EQ(run("theorem2 --x '[3,1]' --y '[2,2]' --k-max 6").code, 0);
    EXPECT_EQ(run("theorem2 --x " + data("probe_x.json") + " --y " + data("probe_y.json") + " --k-max 12").code, 1);
    EXPECT_EQ(run("theorem2 --x '[3,2]' --y '[2,2]'").code, 1);
    EXPECT_EQ(run("mellin-validate --r 2 --which id1 --p 0.5 --a 2").code, 0);
    EXPECT_EQ(run("mellin-validate --r 1").code, 0);
    EXPECT_EQ(run("catalyst --x '[1,2]' --c '[1,1]'").code, 0);
}

TEST(Cli, UsageAndParseErrorsExitTwo) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("theorem1 --x '[1]'").code, 2);
    EXPECT_EQ(run("theorem1 --x '[1,2]' --y '[1]' --r 1").code, 2);
    EXPECT_EQ(run("fkr --x " + fixture("bad_vector.json") + " --r 2").code, 2);
    EXPECT_EQ(run("spectral --q " + fixture("ragged.json")).code, 2);
    EXPECT_EQ(run("spectral --q " + fixture("bad.csv")).code, 2);
    EXPECT_EQ(run("norms --x /nonexistent/file.json").code, 2);
    EXPECT_EQ(run("mellin-validate --r 2 --which id2 --p 0.5").code, 2);
    EXPECT_EQ(run("theorem1 --x '[1,2]' --y '[2,1]' --r 1 --format yaml").code, 2);
}

TEST(Cli, DiagnosticsCarryLineAndColumn) {
    const std::string cmd = std::string(SYMINEQ_CLI) + " fkr --r 2 --x " + fixture("bad_vector.json") + " 2>&1 >/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::array<char, 1024> buf{};
    std::string err;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) err.append(buf.data(), n);
    pclose(pipe);
    EXPECT_NE(err.find("bad_vector.json:2:2"), std::string::npos) << err;
}

TEST(Cli, ReportsAreReproducible) {
    const std::string args = "majorize --x '[3,1,0]' --y '[2,1,1]' --samples 5 --seed 11 --format json";
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    const auto j = json::parse(a.out);
    EXPECT_EQ(j["seed"], 11);
    EXPECT_EQ(json::parse(a.out).dump(2) + "\n", a.out);
}
