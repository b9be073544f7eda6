#include "qseries/cli.hpp"
#include "qseries/identities.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "qseries");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = qseries::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

int run_binary(const std::string& args)
{
    std::string cmd = std::string(QSERIES_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST(Cli, VerifyJsonSchema)
{
    auto r = run({"verify", "--id", "thm-t1", "--order", "100", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = json::parse(r.out);
    ASSERT_TRUE(doc.is_array());
    ASSERT_EQ(doc.size(), 1u);
    const auto& rep = doc[0];
    std::vector<std::string> keys;
    for (auto it = rep.begin(); it != rep.end(); ++it) {
        keys.push_back(it.key());
    }
    std::sort(keys.begin(), keys.end());
    EXPECT_EQ(keys, (std::vector<std::string>{"elapsed_ms", "id", "mismatch", "mode", "order", "status"}));
    EXPECT_EQ(rep["id"], "thm-t1");
    EXPECT_EQ(rep["order"], 100);
    EXPECT_EQ(rep["status"], "VERIFIED");
    EXPECT_TRUE(rep["mismatch"].is_null());
}

TEST(Cli, NegativeControlReportsMismatch)
{
    auto r = run({"verify", "--id", "liu-412-uncorrected", "--format", "json"});
    EXPECT_EQ(r.code, 1);
    auto rep = json::parse(r.out)[0];
    EXPECT_EQ(rep["status"], "MISMATCH");
    const auto& m = rep["mismatch"];
    ASSERT_TRUE(m.is_object());
    auto direct = qseries::verify(std::string("liu-412-uncorrected"));
    EXPECT_EQ(m["exponent"], direct.mismatch->exponent);
    EXPECT_EQ(m["dega"], 0);
    EXPECT_EQ(m["degb"], 0);
    EXPECT_TRUE(m["lhs"].is_string());
    EXPECT_EQ(m["lhs"].get<std::string>(), qseries::to_exact_string(direct.mismatch->lhs));
    EXPECT_EQ(m["rhs"].get<std::string>().find('.'), std::string::npos);
}

TEST(Cli, UnknownIdSuggestsNearest)
{
    auto r = run({"verify", "--id", "thm-7-51"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("thm-7-15"), std::string::npos) << r.err;
    EXPECT_EQ(run({"verify", "--id", "no-such-id"}).code, 2);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"verify", "--id", "thm-t1", "--order", "3"}).code, 2);
    EXPECT_EQ(run({"verify", "--id", "thm-t1", "--parallelism", "0"}).code, 2);
    EXPECT_EQ(run({"verify", "--id", "thm-t1", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"expand"}).code, 2);
}

TEST(Cli, Inequality)
{
    auto r = run({"inequality", "--id", "thm-t4-1-4-1", "--max-n", "500"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("NONNEGATIVE"), std::string::npos);
    auto j = run({"inequality", "--id", "thm-t4-1-5-10", "--max-n", "40", "--format", "json"});
    ASSERT_EQ(j.code, 0);
    auto doc = json::parse(j.out);
    EXPECT_EQ(doc[0]["status"], "NONNEGATIVE");
    EXPECT_EQ(doc[0]["zeros"][0], 1);
    EXPECT_EQ(run({"inequality", "--id", "nope"}).code, 2);
}

TEST(Cli, TextAndJsonAgree)
{
    auto t = run({"verify", "--id", "sp-7-15-*", "--order", "60", "--parallelism", "2"});
    auto j = run({"verify", "--id", "sp-7-15-*", "--order", "60", "--parallelism", "2", "--format", "json"});
    ASSERT_EQ(t.code, j.code);
    auto doc = json::parse(j.out);
    ASSERT_GE(doc.size(), 5u);
    for (const auto& rep : doc) {
        std::string line = rep["id"].get<std::string>() + " " + rep["mode"].get<std::string>() + " order=60 " +
                           rep["status"].get<std::string>();
        EXPECT_NE(t.out.find(line), std::string::npos) << line;
    }
}

TEST(Cli, OutputFile)
{
    auto path = std::filesystem::temp_directory_path() / "qseries_cli_test.json";
    std::filesystem::remove(path);
    auto r = run({"verify", "--id", "two-squares", "--format", "json", "--output", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    auto doc = json::parse(f);
    EXPECT_EQ(doc[0]["status"], "VERIFIED");
    std::filesystem::remove(path);
}

TEST(Cli, ListAndExpand)
{
    auto r = run({"list", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    auto doc = json::parse(r.out);
    EXPECT_EQ(doc["identities"].size(), qseries::registry().size() + qseries::negative_controls().size());
    EXPECT_EQ(doc["inequalities"].size(), 10u);

    auto e = run({"expand", "--id", "p", "--order", "8", "--format", "json"});
    ASSERT_EQ(e.code, 0);
    EXPECT_EQ(json::parse(e.out)["coefficients"],
              (json{"1", "1", "2", "3", "5", "7", "11", "15"}));
    auto s = run({"expand", "--id", "two-squares", "--order", "6", "--format", "json"});
    ASSERT_EQ(s.code, 0) << s.err;
    auto sd = json::parse(s.out);
    EXPECT_EQ(sd["lhs"], sd["rhs"]);
    EXPECT_EQ(run({"expand", "--id", "eq-1-6"}).code, 2);
}

TEST(Cli, BinaryExitCodes)
{
    EXPECT_EQ(run_binary("verify --id thm-t1 --order 100 --format json"), 0);
    EXPECT_EQ(run_binary("verify --id liu-412-uncorrected"), 1);
    EXPECT_EQ(run_binary("verify --id no-such-id"), 2);
    EXPECT_EQ(run_binary("no-such-command"), 2);
}
