#include "toric/examples.hpp"
#include "toric/json_io.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace toric;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(TORICDF_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Json run_json(const std::string& args, int expected_code) {
    auto r = run(args);
    EXPECT_EQ(r.code, expected_code) << args << "\n" << r.out;
    return Json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("toricdf_cli_test_" + name);
}

void write(const std::filesystem::path& p, const Json& j) {
    std::ofstream f(p);
    f << j.dump();
}

}  // namespace

TEST(JsonIo, RationalStrings) {
    EXPECT_EQ(rat_str(Rat(1, 4)), "1/4");
    EXPECT_EQ(rat_str(Rat(-6, 3)), "-2");
    EXPECT_EQ(parse_rat(Json("-3/9")), Rat(-1, 3));
    EXPECT_EQ(parse_rat(Json(7)), 7);
    EXPECT_THROW(parse_rat(Json(0.5)), Error);
    EXPECT_THROW(parse_rat(Json("x")), Error);
}

TEST(JsonIo, FanAndConfigurationRoundTrip) {
    for (const auto& name : example_names()) {
        auto tc = named_example(name);
        auto back = tc_from_json(Json::parse(tc_to_json(tc).dump()));
        EXPECT_EQ(back.total_fan.rays, tc.total_fan.rays);
        EXPECT_EQ(back.total_fan.max_cones, tc.total_fan.max_cones);
        EXPECT_EQ(back.lambda(), tc.lambda());
        EXPECT_EQ(back.polarisation.coeffs, tc.polarisation.coeffs);
    }
}

TEST(JsonIo, PolarisationFollowsInputRayOrder) {
    Json j{{"rays", {{0, -1}, {1, 0}, {0, 1}, {-1, 0}}},
           {"max_cones", {{0, 1}, {1, 2}, {2, 3}, {3, 0}}},
           {"lambda", {1, 0}},
           {"polarisation", {{"ray_coeffs", {"1", "2", "3", "4"}}}}};
    auto tc = tc_from_json(j);
    std::map<IVec, Rat> want{{ivec({0, -1}), 1}, {ivec({1, 0}), 2}, {ivec({0, 1}), 3}, {ivec({-1, 0}), 4}};
    for (std::size_t i = 0; i < tc.total_fan.rays.size(); ++i)
        EXPECT_EQ(tc.polarisation.coeffs[i], want.at(tc.total_fan.rays[i]));
}

TEST(JsonIo, GroupingAndErrors) {
    EXPECT_EQ(grouping_from_json(Json::parse("[[0,2],[1]]")), (Grouping{{0, 2}, {1}}));
    EXPECT_THROW(grouping_from_json(Json::parse("[0,1]")), Error);
    EXPECT_THROW(grouping_from_json(Json::parse("[[-1]]")), Error);
    EXPECT_EQ(exit_code(ErrorKind::Validation), 2);
    EXPECT_EQ(exit_code(ErrorKind::SolverIncomplete), 3);
    EXPECT_EQ(exit_code(ErrorKind::HypothesisFailed), 4);
    auto e = error_to_json(Error("X", "y", ErrorKind::HypothesisFailed));
    EXPECT_EQ(e["error"]["code"], "X");
    EXPECT_EQ(e["error"]["kind"], "hypothesis-failed");
}

TEST(Cli, ReproduceNormalCone) {
    auto j = run_json("reproduce normal-cone-p1", 0);
    EXPECT_TRUE(j["diff"].empty());
    EXPECT_EQ(j["checks"].size(), 9u);
}

TEST(Cli, ReproduceHirzebruch) {
    auto j = run_json("reproduce hirzebruch-product", 0);
    EXPECT_TRUE(j["diff"].empty());
}

TEST(Cli, DfExactStrings) {
    auto j = run_json("df --example normal-cone", 0);
    EXPECT_EQ(j["report"]["intersection"], "1/4");
    EXPECT_EQ(j["report"]["localised"], "1/4");
    EXPECT_EQ(j["report"]["polytope"], "1/4");
    auto h = run_json("df --example hirzebruch", 0);
    EXPECT_EQ(h["report"]["intersection"], "0");
}

TEST(Cli, ConfigFileAndOut) {
    auto cfg = temp_file("cfg.json");
    auto out = temp_file("out.json");
    std::filesystem::remove(out);
    write(cfg, Json{{"tc", tc_to_json(normal_cone_example())}, {"k_list", {"4", "8"}}, {"out", out.string()}});
    auto r = run("vanishing --config " + cfg.string());
    EXPECT_EQ(r.code, 0);
    std::ifstream f(out);
    std::string written((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    EXPECT_EQ(written, r.out);
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["report"]["df"], "1/4");
    EXPECT_EQ(j["report"]["rows"].size(), 2u);
}

TEST(Cli, Deterministic) {
    auto a = run("critical --example hirzebruch --k 8 --seed 3 --digits 40");
    auto b = run("critical --example hirzebruch --k 8 --seed 3 --digits 40");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto j = Json::parse(a.out);
    EXPECT_EQ(j["report"]["count"], 4);
    EXPECT_TRUE(j["report"]["points"][0]["value"]["re"].is_string());
}

TEST(Cli, PolytopeDual) {
    auto j = run_json("polytope --dual --vertices '[[1,0],[0,1],[-1,-1]]'", 0);
    std::set<std::vector<long>> got;
    for (const auto& v : j["dual"]["vertices"]) got.insert(v.get<std::vector<long>>());
    EXPECT_EQ(got, (std::set<std::vector<long>>{{2, -1}, {-1, 2}, {-1, -1}}));
    EXPECT_EQ(j["reflexive"], true);
    EXPECT_EQ(j["normalized_volume"], "3");
}

TEST(Cli, OrbifoldReport) {
    auto j = run_json("polytope --orbifold-duals", 0);
    ASSERT_EQ(j["orbifold_duals"].size(), 4u);
    EXPECT_EQ(j["orbifold_duals"][0]["name"], "Q1");
}

TEST(Cli, Theorem1Report) {
    auto j = run_json("theorem1 --example normal-cone --k 16", 0);
    ASSERT_EQ(j["report"]["rows"].size(), 2u);
    EXPECT_EQ(j["report"]["df"], "1/4");
    for (const auto& row : j["report"]["rows"]) EXPECT_TRUE(row["rank_inequality"]["comparison"].is_string());
}

TEST(Cli, ExitCodes) {
    auto bad = run_json("df --example nowhere", 2);
    EXPECT_EQ(bad["error"]["code"], "UnknownExample");
    run_json("frobnicate", 2);
    run_json("residue --example normal-cone --grouping '[[0]]'", 2);
    auto inc = run_json("critical --example normal-cone --max-starts 0", 3);
    EXPECT_EQ(inc["error"]["kind"], "solver-incomplete");
    auto cfg = temp_file("third.json");
    write(cfg, Json{{"tc", tc_to_json(normal_cone_example(Rat(1, 3)))}});
    auto hyp = run_json("vanishing --k-list 4 --config " + cfg.string(), 4);
    EXPECT_EQ(hyp["error"]["kind"], "hypothesis-failed");
}
