#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

using namespace trigspline::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("trigspline_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

} // namespace

TEST(Cli, Grid) {
    const Outcome o = run_cli({"grid", "--family", "full", "--i", "0", "--n", "5"});
    ASSERT_EQ(o.code, exit_ok) << o.err;
    const auto rows = lines(o.out);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0], "j,x");
    EXPECT_EQ(rows[1], "1,0");
    EXPECT_NEAR(std::stod(rows[2].substr(2)), 1.2566370614359172, 1e-15);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, exit_usage);
    EXPECT_EQ(run_cli({"frobnicate"}).code, exit_usage);
    EXPECT_EQ(run_cli({"grid", "--family", "full", "--n", "4"}).code, exit_usage);
    EXPECT_EQ(run_cli({"grid", "--family", "wavy", "--n", "5"}).code, exit_usage);
    EXPECT_EQ(run_cli({"grid", "--family", "full"}).code, exit_usage);
    EXPECT_EQ(run_cli({"coeffs", "--family", "full", "--samples", "/nonexistent/file.csv"}).code, exit_usage);
    const Outcome help = run_cli({"--help"});
    EXPECT_EQ(help.code, exit_ok);
}

TEST(Cli, Coefficients) {
    const std::string samples = write_temp("coeffs.csv", "j,f\n1,1\n2,2\n3,3\n4,4\n5,5\n");
    const Outcome o = run_cli({"coeffs", "--family", "full", "--i", "0", "--samples", samples});
    ASSERT_EQ(o.code, exit_ok) << o.err;
    const auto rows = lines(o.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0], "k,a_k,b_k");
    EXPECT_EQ(rows[1], "0,6,0");
}

TEST(Cli, EvalInterpolatesAndFormsAgree) {
    const std::string samples = write_temp("eval.csv", "j,f\n1,0.5\n2,-1\n3,2\n4,0\n5,1\n6,0.25\n7,-0.75\n8,1.5\n9,0\n");
    const std::string points = write_temp("points.txt", "0\n0.6981317007977318\n2.2\n");
    std::vector<double> reference;
    for (std::string form : {"coefficient", "fundamental", "bspline"}) {
        std::vector<std::string> args{"--format", "json", "eval", "--family", "full", "--i1", "0", "--i2", "0",
                                      "--r", "3", "--samples", samples, "--points", "list:" + points, "--form",
                                      form};
        if (form == "bspline") {
            args.push_back("--kind");
            args.push_back("BC0");
        }
        const Outcome o = run_cli(args);
        ASSERT_EQ(o.code, exit_ok) << form << ": " << o.err;
        const auto rows = nlohmann::json::parse(o.out);
        ASSERT_EQ(rows.size(), 3u);
        EXPECT_NEAR(rows[0]["value"].get<double>(), 0.5, 1e-9);
        EXPECT_NEAR(rows[1]["value"].get<double>(), -1.0, 1e-9);
        if (reference.empty())
            for (const auto& row : rows)
                reference.push_back(row["value"].get<double>());
        else
            EXPECT_NEAR(rows[2]["value"].get<double>(), reference[2], 1e-9) << form;
    }
}

TEST(Cli, OddSplineVanishesAtZero) {
    const std::string samples = write_temp("odd.csv", "j,f\n1,1\n2,2\n3,3\n");
    const Outcome o = run_cli({"eval", "--family", "odd", "--i1", "0", "--i2", "0", "--samples", samples,
                               "--points", "dense:3"});
    ASSERT_EQ(o.code, exit_ok) << o.err;
    const auto rows = lines(o.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0], "t,value");
    EXPECT_NEAR(std::stod(rows[1].substr(rows[1].find(',') + 1)), 0.0, 1e-12);
}

TEST(Cli, SampleAbscissaeMustMatchGrid) {
    const std::string good = write_temp("x_good.csv", "x,f\n0,1\n2.0943951023931957,2\n4.1887902047863905,3\n");
    const std::string bad = write_temp("x_bad.csv", "x,f\n0,1\n2.1,2\n4.1887902047863905,3\n");
    EXPECT_EQ(run_cli({"coeffs", "--family", "full", "--samples", good}).code, exit_ok);
    const Outcome o = run_cli({"coeffs", "--family", "full", "--samples", bad});
    EXPECT_EQ(o.code, exit_usage);
    EXPECT_NE(o.err.find("error"), std::string::npos);
}

TEST(Cli, WarnsOutsideHalfRange) {
    const std::string samples = write_temp("even.csv", "j,f\n1,1\n2,0\n3,1\n");
    const std::string points = write_temp("far.txt", "4.0\n");
    const Outcome o = run_cli({"eval", "--family", "even", "--samples", samples, "--points", "list:" + points});
    EXPECT_EQ(o.code, exit_ok) << o.err;
    EXPECT_NE(o.err.find("warning"), std::string::npos);
}

TEST(Cli, Determinants) {
    const Outcome o = run_cli({"det", "--kinds", "BR,BC0", "--r", "1,2", "--n", "9"});
    ASSERT_EQ(o.code, exit_ok) << o.err;
    const auto rows = lines(o.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], "kind,r=1,r=2");
    const std::string bc0 = rows[2];
    EXPECT_EQ(bc0.substr(0, 4), "BC0,");
    EXPECT_NEAR(std::stod(bc0.substr(bc0.rfind(',') + 1)), 1134.7, 0.01 * 1134.7);
}

TEST(Cli, BasisTable) {
    const Outcome o = run_cli({"basis", "--kind", "fundamental", "--n", "5", "--points", "dense:2"});
    ASSERT_EQ(o.code, exit_ok) << o.err;
    const auto rows = lines(o.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], "t,phi_1,phi_2,phi_3,phi_4,phi_5");
    EXPECT_EQ(rows[1].substr(0, 4), "0,1,");

    const Outcome b = run_cli({"basis", "--kind", "BR", "--r", "2", "--n", "9", "--points", "dense:4"});
    ASSERT_EQ(b.code, exit_ok) << b.err;
    EXPECT_EQ(lines(b.out).size(), 5u);
    EXPECT_EQ(run_cli({"basis", "--kind", "BQ", "--n", "9"}).code, exit_usage);
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"det", "--kinds", "all", "--r", "1,3", "--n", "9", "--i", "1"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(Cli, CheckSubset) {
    const Outcome o = run_cli({"check", "--only", "4"});
    EXPECT_EQ(o.code, exit_ok) << o.out << o.err;
    EXPECT_NE(o.out.find("[PASS] 4."), std::string::npos);
    EXPECT_EQ(run_cli({"check", "--only", "12"}).code, exit_usage);
}

TEST(Cli, SingularBasisIsNumericalFailure) {
    const std::string samples = write_temp("singular.csv", "j,f\n1,1\n2,0\n3,1\n4,0\n5,1\n6,0\n7,1\n8,0\n9,1\n");
    const Outcome o = run_cli({"eval", "--family", "full", "--samples", samples, "--r", "11", "--form", "bspline",
                               "--kind", "BC", "--points", "dense:2"});
    EXPECT_EQ(o.code, exit_numerical);
    EXPECT_NE(o.err.find("numerical"), std::string::npos);
}

TEST(Cli, ToleranceFromEnvironment) {
    const std::string samples = write_temp("env.csv", "j,f\n1,1\n2,2\n3,3\n");
    const std::vector<std::string> args{"eval", "--family", "full", "--samples", samples, "--points", "dense:2"};
    ::setenv("TRIGSPLINE_TRUNC_TOL", "not-a-number", 1);
    EXPECT_EQ(run_cli(args).code, exit_usage);
    ::setenv("TRIGSPLINE_TRUNC_TOL", "1e-10", 1);
    EXPECT_EQ(run_cli(args).code, exit_ok);
    ::unsetenv("TRIGSPLINE_TRUNC_TOL");
}
