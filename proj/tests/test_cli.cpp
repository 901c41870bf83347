#include "narayana/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace narayana;
using namespace narayana::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path fresh_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("narayana_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST(Cli, NarayanaExamples) {
    EXPECT_EQ(run({"narayana", "--n", "3"}).out, "1, 3, 1 (sum 5)\n");
    EXPECT_EQ(run({"narayana", "--n", "1"}).out, "1 (sum 1)\n");
    EXPECT_EQ(run({"narayana", "--n", "4"}).out, "1, 6, 6, 1 (sum 14)\n");
    EXPECT_EQ(run({"narayana", "--n", "3", "--format", "csv"}).out, "k,value\n0,1\n1,3\n2,1\nsum,5\n");
}

TEST(Cli, QNarayanaExamples) {
    const auto all = run({"qnarayana", "--n", "3", "--k", "1", "--route", "all"});
    EXPECT_EQ(all.code, 0);
    EXPECT_EQ(all.out,
              "closed: q^2 + q^3 + q^4\nschur-ssyt: q^2 + q^3 + q^4\nschur-hook: q^2 + q^3 + q^4\n"
              "enumerate: q^2 + q^3 + q^4\npass\n");
    EXPECT_EQ(run({"qnarayana", "--n", "5", "--k", "0"}).out, "1\n");
    EXPECT_EQ(run({"qnarayana", "--n", "3", "--k", "2"}).out, "q^6\n");
    for (const char* route : {"closed", "schur-ssyt", "schur-hook", "enumerate"}) {
        EXPECT_EQ(run({"qnarayana", "--n", "3", "--k", "2", "--route", route}).out, "q^6\n");
    }
    EXPECT_EQ(run({"qnarayana", "--n", "13", "--k", "2", "--route", "enumerate"}).code, kExitUsage);
    EXPECT_EQ(run({"qnarayana", "--n", "40", "--k", "7", "--route", "all"}).code, kExitPass);
}

TEST(Cli, DistExamples) {
    EXPECT_EQ(run({"dist", "--n", "3", "--stat", "lnfs"}).out, "{0:1, 1:3, 2:1}\n");
    EXPECT_EQ(run({"dist", "--n", "3", "--stat", "lnfs", "--q"}).out, "{0:1, 1:q^2 + q^3 + q^4, 2:q^6}\n");
    EXPECT_EQ(run({"dist", "--n", "1", "--stat", "des"}).out, "{0:1}\n");
    EXPECT_EQ(run({"dist", "--n", "3", "--stat", "da"}).out, "{0:1, 1:3, 2:1}\n");
    EXPECT_EQ(run({"dist", "--n", "3", "--stat", "des", "--ref-path", "vvvhhh", "--q"}).out,
              run({"dist", "--n", "3", "--stat", "des", "--q"}).out);
    EXPECT_EQ(run({"dist", "--n", "3", "--stat", "lnfs", "--format", "csv"}).out, "value,count\n0,1\n1,3\n2,1\n");
    EXPECT_EQ(run({"dist", "--n", "3", "--stat", "des", "--q", "--format", "csv"}).out,
              "value,polynomial\n0,1\n1,q^2 + q^3 + q^4\n2,q^6\n");
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"narayana", "--n", "0"}).code, kExitUsage);
    EXPECT_EQ(run({"narayana", "--n", "61"}).code, kExitUsage);
    EXPECT_EQ(run({"narayana", "--n", "-3"}).code, kExitUsage);
    EXPECT_EQ(run({"narayana"}).code, kExitUsage);
    EXPECT_EQ(run({"dist", "--n", "13", "--stat", "des"}).code, kExitUsage);
    EXPECT_EQ(run({"dist", "--n", "3", "--stat", "foo"}).code, kExitUsage);
    for (const char* stat : {"ea", "hp", "da"}) {
        const auto r = run({"dist", "--n", "3", "--stat", stat, "--q"});
        EXPECT_EQ(r.code, kExitUsage) << stat;
        EXPECT_TRUE(r.out.empty());
        EXPECT_FALSE(r.err.empty());
    }
    EXPECT_EQ(run({"dist", "--n", "3", "--stat", "lnfs", "--ref-path", "vhvhvh"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--check", "main-theorem", "--n", "3", "--ref-path", "vvh"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--check", "main-theorem", "--n", "3", "--ref-path", "hvvhvh"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--check", "main-theorem", "--n", "3", "--ref-path", "vvhh"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--check", "main-theorem", "--n", "7"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--check", "preshelling", "--n", "6"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--check", "ssyt", "--n", "9"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--check", "nope", "--n", "3"}).code, kExitUsage);
    EXPECT_EQ(run({"omega", "--n", "9"}).code, kExitUsage);
    EXPECT_EQ(run({"omega", "--n", "3", "--format", "csv"}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitPass);
}

TEST(Cli, VerifyChecksPass) {
    const std::vector<std::vector<std::string>> cases = {
        {"verify", "--check", "main-theorem", "--n", "3", "--ref-path", "vhvhvh"},
        {"verify", "--check", "main-theorem", "--n", "2", "--ref-path", "vvhh"},
        {"verify", "--check", "main-theorem", "--n", "4"},
        {"verify", "--check", "main-theorem", "--n", "5", "--ref-path", "random", "--seed", "3", "--samples", "4"},
        {"verify", "--check", "ssyt", "--n", "6"},
        {"verify", "--check", "preshelling", "--n", "4"},
        {"verify", "--check", "q-identity", "--n", "6"},
        {"verify", "--check", "parth", "--n", "5"},
        {"verify", "--check", "parth", "--n", "7"},
    };
    for (const auto& c : cases) {
        const auto r = run(c);
        EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
        EXPECT_NE(r.out.find("verdict: pass"), std::string::npos);
    }
    const auto pre = run({"verify", "--check", "preshelling", "--n", "4"}).out;
    for (const char* cond : {"mutual_containment: true", "interval_partition: true", "restriction_implies: true",
                             "shelling_step: true"}) {
        EXPECT_NE(pre.find(cond), std::string::npos) << cond;
    }
}

TEST(Cli, OmegaExports) {
    const auto j4 = Json::parse(run({"omega", "--n", "4", "--format", "json"}).out);
    EXPECT_EQ(j4["payload"]["nodes"].size(), 14u);
    EXPECT_EQ(j4["payload"]["edges"].size(), 16u);
    bool bottom_edge = false;
    for (const auto& e : j4["payload"]["edges"]) bottom_edge |= e["from"] == "vhvhvhvh" && e["to"] == "vhvhvvhh";
    EXPECT_TRUE(bottom_edge);

    const auto j3 = Json::parse(run({"omega", "--n", "3", "--format", "json"}).out);
    EXPECT_EQ(j3["payload"]["nodes"].size(), 5u);
    std::vector<std::string> minimal;
    for (const auto& node : j3["payload"]["nodes"]) {
        bool has_lower = false;
        for (const auto& e : j3["payload"]["edges"]) has_lower |= e["to"] == node["path"];
        if (!has_lower) minimal.push_back(node["path"]);
    }
    EXPECT_EQ(minimal, (std::vector<std::string>{"vhvhvh"}));

    const auto dot1 = run({"omega", "--n", "1"});
    EXPECT_EQ(dot1.code, 0);
    EXPECT_EQ(dot1.out, "digraph omega_1 {\n  \"vh\" [label=\"vh\\nLS={}\"];\n}\n");
    const auto dot4 = run({"omega", "--n", "4"}).out;
    EXPECT_NE(dot4.find("\"vhvhvhvh\" -> \"vhvhvvhh\";"), std::string::npos);
    EXPECT_EQ(std::count(dot4.begin(), dot4.end(), '>'), 16);
}

TEST(Cli, JsonRoundTrips) {
    const std::vector<std::vector<std::string>> cases = {
        {"narayana", "--n", "60"},
        {"qnarayana", "--n", "30", "--k", "14", "--route", "all"},
        {"dist", "--n", "5", "--stat", "hp"},
        {"dist", "--n", "5", "--stat", "des", "--q", "--ref-path", "vhvvhvhhvh"},
        {"verify", "--check", "main-theorem", "--n", "3"},
        {"verify", "--check", "q-identity", "--n", "4"},
        {"omega", "--n", "3"},
    };
    for (auto c : cases) {
        c.push_back("--format");
        c.push_back("json");
        const auto r = run(c);
        ASSERT_EQ(r.code, 0) << c[0] << r.err;
        const Json parsed = Json::parse(r.out);
        const Report report = report_from_json(parsed);
        EXPECT_EQ(report_to_json(report).dump(2) + "\n", r.out);
        EXPECT_EQ(report_from_json(report_to_json(report)), report);
        EXPECT_TRUE(report.witnesses.empty());
    }
}

TEST(Cli, LargeValuesSerializeExactly) {
    const auto j = Json::parse(run({"narayana", "--n", "60", "--format", "json"}).out);
    EXPECT_EQ(integer_from_json(j["payload"]["row"][29]), narayana::narayana(60, 29));
    EXPECT_TRUE(j["payload"]["row"][29].is_string());
    EXPECT_TRUE(j["payload"]["row"][1].is_number_integer());

    const QPoly big = q_narayana_closed(40, 20);
    EXPECT_EQ(qpoly_from_json(qpoly_to_json(big)), big);
    EXPECT_EQ(qpoly_from_json(Json::parse(qpoly_to_json(big).dump())), big);
    EXPECT_EQ(qpoly_to_json(QPoly{}), Json::array());
    EXPECT_EQ(qpoly_to_json(QPoly{1, 0, 3}).dump(), "[1,0,3]");
    const RankSubset s = RankSubset::from_members({2, 4});
    EXPECT_EQ(subset_to_json(s).dump(), "[2,4]");
    EXPECT_EQ(subset_from_json(subset_to_json(s)), s);
}

TEST(Cli, CsvQuoting) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
}

TEST(Cli, DeterministicWithSeed) {
    const std::vector<std::string> args = {"verify", "--check", "main-theorem", "--n", "6", "--ref-path",
                                           "random",  "--seed",  "42",           "--samples", "5", "--format", "json"};
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.out, b.out);
    auto other = args;
    other[7] = "43";
    EXPECT_NE(run(other).out, a.out);
    const std::vector<std::string> dist = {"dist", "--n", "6", "--stat", "des", "--ref-path", "random", "--seed", "9"};
    EXPECT_EQ(run(dist).out, run(dist).out);
    EXPECT_NE(run({"verify", "--check", "ssyt", "--n", "3", "--timing"}).out.find("time: "), std::string::npos);
    EXPECT_EQ(run({"verify", "--check", "ssyt", "--n", "3"}).out.find("time: "), std::string::npos);
}

TEST(Cli, CacheDirectory) {
    const auto dir = fresh_dir("cache_flag");
    const std::vector<std::string> args = {"dist", "--n", "7", "--stat", "lnfs", "--q", "--cache-dir", dir.string()};
    const auto first = run(args);
    ASSERT_EQ(first.code, 0);
    ASSERT_TRUE(std::filesystem::exists(dir));
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        ++files;
        EXPECT_NE(entry.path().filename().string().find("_v" + std::string(kCodeVersion)), std::string::npos);
    }
    EXPECT_EQ(files, 1u);
    EXPECT_EQ(run(args).out, first.out);
    EXPECT_EQ(run({"dist", "--n", "7", "--stat", "lnfs", "--q"}).out, first.out);

    const auto env_dir = fresh_dir("cache_env");
    ::setenv("NARAYANA_CACHE_DIR", env_dir.c_str(), 1);
    EXPECT_EQ(run({"dist", "--n", "4", "--stat", "ea"}).code, 0);
    ::unsetenv("NARAYANA_CACHE_DIR");
    EXPECT_TRUE(std::filesystem::exists(env_dir));

    const auto none = fresh_dir("cache_none");
    EXPECT_EQ(run({"dist", "--n", "4", "--stat", "ea"}).code, 0);
    EXPECT_FALSE(std::filesystem::exists(none));
    std::filesystem::remove_all(dir);
    std::filesystem::remove_all(env_dir);
}
