// End-to-end checks of the hecke-dft executable: exit codes, formats, determinism.

#include "hecke_dft/io.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <string>

using namespace hecke_dft;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run(const std::string& args) {
    const std::string command = std::string(HECKE_DFT_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {};
    CliRun r;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(HECKE_DFT_TEST_DATA) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "hecke_dft_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(CliSpectrum, MidpointRoot) {
    const CliRun r = run("spectrum --M 2 --tau 0.5 --format csv");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("\n1,1.5707963267949,-1,"), std::string::npos) << r.out;
}

TEST(CliSpectrum, JsonHasAllPoints) {
    const CliRun r = run("spectrum --M 6 --tau 0.3");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["points"].size(), 7u);
}

TEST(CliSpectrum, InteriorRootsNearCosineLimit) {
    const CliRun r = run("spectrum --M 8 --tau 0.999 --format json");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    for (int m = 1; m < 8; ++m) {
        EXPECT_NEAR(j["points"][static_cast<std::size_t>(m)]["xi"].get<double>(), m * std::numbers::pi / 8, 1e-3) << m;
    }
}

TEST(CliSpectrum, RejectsSmallLattice) {
    const CliRun r = run("spectrum --M 1 --tau 0.5");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("M > 1"), std::string::npos) << r.out;
}

TEST(CliConfig, InvalidValuesExitTwo) {
    EXPECT_EQ(run("kernel --M 4 --tau 1.5").code, 2);
    EXPECT_EQ(run("kernel --M 4").code, 2);
    EXPECT_EQ(run("spectrum --M 4 --tau 0.5 --format xml").code, 2);
    EXPECT_EQ(run("verify --suite nope").code, 2);
    EXPECT_EQ(run("verify --tol daha").code, 2);
    EXPECT_EQ(run("transform --M 2 --tau 0.5 --input /nonexistent/signal.json").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST(CliKernel, ColumnZeroAndRoundTrip) {
    const CliRun r = run("kernel --M 5 --tau 0.42");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto table = io::parse_kernel(r.out);
    for (const auto& row : table.phi) EXPECT_NEAR(row[0], 1.0 + 0.42 * 0.42, 1e-14);
    EXPECT_EQ(io::write_kernel(table, io::Format::json, 15), r.out);
}

TEST(CliKernel, CsvLineCount) {
    const CliRun r = run("kernel --M 5 --tau 0.42 --format csv");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
    EXPECT_EQ(io::write_kernel(io::parse_kernel(r.out), io::Format::csv, 15), r.out);
}

TEST(CliTransform, RoundTripBothFormats) {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    Signal s(9);
    for (int i = 0; i < 9; ++i) s(i) = Complex{dist(rng), dist(rng)};
    for (auto format : {io::Format::json, io::Format::csv}) {
        const auto in = scratch(format == io::Format::json ? "in.json" : "in.csv");
        write(in, io::write_signal(s, format, 17));
        const CliRun fwd = run("transform --M 8 --tau 0.37 --precision 17 --input " + in.string());
        ASSERT_EQ(fwd.code, 0) << fwd.out;
        const auto mid = scratch(format == io::Format::json ? "mid.json" : "mid.csv");
        write(mid, fwd.out);
        const CliRun back = run("transform --M 8 --tau 0.37 --precision 17 --direction inverse --input " + mid.string());
        ASSERT_EQ(back.code, 0) << back.out;
        const auto parsed = io::parse_signal(back.out);
        EXPECT_EQ(parsed.format, format);
        EXPECT_LT((parsed.values - s).cwiseAbs().maxCoeff(), 1e-10 * s.cwiseAbs().maxCoeff());
    }
}

TEST(CliTransform, FileSignal) {
    const CliRun r = run("transform --M 8 --tau 0.5 --input " + data("signal9.json"));
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(io::parse_signal(r.out).values.size(), 9);
}

TEST(CliTransform, ZeroSignal) {
    const CliRun r = run("transform --M 4 --tau 0.5 --input " + data("zeros5.json"));
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out, "[[0,0],[0,0],[0,0],[0,0],[0,0]]\n");
}

TEST(CliTransform, LengthMismatch) {
    const CliRun r = run("transform --M 3 --tau 0.5 --input " + data("signal3.json"));
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("index 3"), std::string::npos) << r.out;
}

TEST(CliTransform, ParseError) {
    const CliRun r = run("transform --M 2 --tau 0.5 --input " + data("malformed.json"));
    EXPECT_EQ(r.code, 4);
    EXPECT_NE(r.out.find("entry 2"), std::string::npos) << r.out;
}

TEST(CliVerify, FullSuiteReferenceRun) {
    const CliRun r = run("verify --M 4 --tau 0.5 --suite all --window 24 --seed 7");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("xhat-indexing: direct (v); inverse (v^-1) equivalent"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(CliVerify, SymbolicSuiteIsExact) {
    const CliRun r = run("verify --suite daha");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("(exact)"), std::string::npos);
    EXPECT_EQ(r.out.find("deviation="), std::string::npos);
}

TEST(CliVerify, TamperedKernelFails) {
    const CliRun r = run("verify --M 4 --tau 0.5 --suite orthogonality --tamper-kernel 1,2,1e-3");
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_NE(r.out.find("FAIL orthogonality.gram_rows"), std::string::npos) << r.out;
}

TEST(CliVerify, ToleranceOverride) {
    // An absurdly tight override turns a passing numeric suite into a failure.
    EXPECT_EQ(run("verify --M 3 --tau 0.5 --suite orthogonality").code, 0);
    EXPECT_EQ(run("verify --M 3 --tau 0.5 --suite orthogonality --tol orthogonality=1e-30").code, 1);
}

TEST(CliVerify, Deterministic) {
    const CliRun a = run("verify --M 3 --tau 0.6 --suite reps --seed 11 --format json");
    const CliRun b = run("verify --M 3 --tau 0.6 --suite reps --seed 11 --format json");
    ASSERT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
}
