#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using qcw::cli::run;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
    args.insert(args.end(), {"--format", "json", "--no-timing"});
    const auto r = invoke(args);
    return json::parse(r.out);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST(Cli, ClassifyExitCodes) {
    const auto in = invoke({"classify", "3", "7", "11"});
    EXPECT_EQ(in.code, 0);
    EXPECT_NE(in.out.find("in class"), std::string::npos);
    EXPECT_NE(in.out.find("M3=2"), std::string::npos);

    const auto out = invoke({"classify", "3", "5", "9"});
    EXPECT_EQ(out.code, 3);
    EXPECT_NE(out.out.find("obstruction-set-hit"), std::string::npos);

    const auto bad = invoke({"classify", "5", "5", "7"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("not strictly increasing"), std::string::npos);
}

TEST(Cli, ClassifyJson) {
    const auto j = invoke_json({"classify", "3", "7", "11"});
    EXPECT_EQ(j["command"], "classify");
    EXPECT_EQ(j["result"]["in_class"], true);
    EXPECT_EQ(j["result"]["witnesses"], json::array({2}));
    EXPECT_TRUE(j["result"]["failure"].is_null());
    EXPECT_FALSE(j.contains("elapsed_ms"));

    const auto rejected = invoke_json({"classify", "3", "5", "9"});
    EXPECT_EQ(rejected["result"]["failure"]["kind"], "obstruction-set-hit");
}

TEST(Cli, Iset) {
    EXPECT_EQ(invoke_json({"iset", "3", "7", "--M", "2"})["result"]["elements"],
              json::array({12, 13, 14, 15, 16, 17, 18, 19}));
    EXPECT_EQ(invoke_json({"iset", "3", "5", "--M", "1"})["result"]["elements"], json::array({6}));
    const auto apery = invoke_json({"iset", "3", "5", "--M", "2", "--backend", "apery"});
    EXPECT_EQ(apery["result"]["elements"], json::array({9, 10, 11, 12, 13, 14, 15}));
    EXPECT_EQ(apery["backend"], "apery");
    EXPECT_EQ(invoke({"iset", "3", "5", "--M", "0"}).code, 1);
    EXPECT_EQ(invoke({"iset", "3", "5", "--M", "2", "--backend", "quick"}).code, 1);
    EXPECT_EQ(invoke({"iset", "3", "7", "--M", "2", "--backend", "brute"}).out,
              "I(3, 7) M=2 window (10, 20): {12, 13, 14, 15, 16, 17, 18, 19}\n");
}

TEST(Cli, Resonances) {
    EXPECT_EQ(invoke_json({"resonances", "3", "5", "7"})["result"]["count"], 0);
    EXPECT_EQ(invoke_json({"resonances", "1", "2", "3"})["result"]["count"], 4);
    const auto r = invoke_json({"resonances", "2", "3", "5"});
    EXPECT_EQ(r["result"]["count"], 2);
    EXPECT_EQ(r["result"]["witnesses"][0], (json{{"i", 1}, {"j", 3}, {"k", {0, 1}}}));
    EXPECT_EQ(invoke({"resonances", "3", "5", "7"}).code, 0);
}

TEST(Cli, Enumerate) {
    EXPECT_EQ(invoke_json({"enumerate", "5", "7", "--M", "2"})["result"]["admissible"], json::array({13, 16, 18, 23}));
    EXPECT_EQ(invoke_json({"enumerate", "3", "5", "--M", "2"})["result"]["admissible"], json::array());
    EXPECT_EQ(invoke_json({"enumerate", "3", "13", "--M", "2"})["result"]["admissible"], json::array({17, 20, 23}));
    EXPECT_EQ(invoke({"enumerate", "3", "6", "--M", "2"}).code, 1);
}

TEST(Cli, Count) {
    const auto d = invoke_json({"count", "5", "11"});
    EXPECT_EQ(d["result"]["closed_form"], 7);
    EXPECT_EQ(d["result"]["formula"], "d");
    EXPECT_EQ(d["result"]["matches"], true);
    EXPECT_EQ(invoke_json({"count", "3", "7"})["result"]["closed_form"], 1);
    const auto none = invoke_json({"count", "4", "9"});
    EXPECT_TRUE(none["result"]["closed_form"].is_null());
    EXPECT_TRUE(none["result"]["matches"].is_null());
    EXPECT_EQ(invoke({"count", "4", "9"}).code, 0);
    EXPECT_EQ(invoke({"count", "9", "4"}).code, 1);
}

TEST(Cli, TablesMatchGoldenFiles) {
    const auto d = invoke({"table", "d-table"});
    EXPECT_EQ(d.code, 0);
    EXPECT_EQ(d.out, read_file(QCW_GOLDEN_DIR "/d_table.txt"));
    const auto f = invoke({"table", "f-table"});
    EXPECT_EQ(f.code, 0);
    EXPECT_EQ(f.out, read_file(QCW_GOLDEN_DIR "/f_table.txt"));
    EXPECT_EQ(invoke({"table", "bogus"}).code, 1);
    EXPECT_EQ(invoke_json({"table", "f-table"})["result"]["rows"].size(), 13u);
}

TEST(Cli, ScanCsvAndFilters) {
    const auto in = invoke({"scan", "--n", "3", "--max", "12", "--filter", "in-class"});
    EXPECT_EQ(in.code, 0);
    EXPECT_EQ(in.out.rfind("weight,in_class,witnesses,failure,resonances,iset_sizes\n", 0), 0u);
    EXPECT_NE(in.out.find("\n3 5 7,true,1,,0,"), std::string::npos);
    EXPECT_NE(in.out.find("\n4 5 7,true,1,,0,"), std::string::npos);
    EXPECT_NE(in.out.find("\n3 7 11,true,2,,0,8\n"), std::string::npos);

    const auto disagree = invoke({"scan", "--n", "3", "--max", "12", "--filter", "disagree"});
    EXPECT_EQ(disagree.code, 0);
    EXPECT_EQ(disagree.out, "weight,in_class,witnesses,failure,resonances,iset_sizes\n");

    const auto two = invoke_json({"scan", "--n", "2", "--max", "5", "--filter", "in-class"});
    EXPECT_EQ(two["result"]["emitted"], 5);
    EXPECT_EQ(invoke({"scan", "--n", "1", "--max", "5"}).code, 1);
}

TEST(Cli, ScanDeterministicAcrossThreads) {
    const auto one = invoke({"scan", "--n", "3", "--max", "25", "--threads", "1"});
    const auto many = invoke({"scan", "--n", "3", "--max", "25", "--threads", "4"});
    EXPECT_EQ(one.out, many.out);
}

TEST(Cli, ByteStableJson) {
    const auto a = invoke({"count", "5", "7", "--format", "json", "--no-timing"});
    const auto b = invoke({"count", "5", "7", "--format", "json", "--no-timing"});
    EXPECT_EQ(a.out, b.out);
    // Keys come out sorted.
    const auto pos_backend = a.out.find("\"backend\"");
    const auto pos_command = a.out.find("\"command\"");
    const auto pos_result = a.out.find("\"result\"");
    EXPECT_LT(pos_backend, pos_command);
    EXPECT_LT(pos_command, pos_result);
    // Timing only appears at envelope level.
    const auto timed = json::parse(invoke({"count", "5", "7", "--format", "json"}).out);
    EXPECT_TRUE(timed.contains("elapsed_ms"));
    EXPECT_FALSE(timed["result"].contains("elapsed_ms"));
}

TEST(Cli, OutFileAndFormatErrors) {
    const auto path = (std::filesystem::temp_directory_path() / "qcw_cli_test_out.txt").string();
    const auto r = invoke({"table", "f-table", "--out", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(read_file(path), read_file(QCW_GOLDEN_DIR "/f_table.txt"));
    std::filesystem::remove(path);

    EXPECT_EQ(invoke({"classify", "3", "5", "7", "--format", "csv"}).code, 1);
    EXPECT_EQ(invoke({"classify", "3", "5", "7", "--format", "yaml"}).code, 1);
    EXPECT_EQ(invoke({"frobnicate"}).code, 1);
    EXPECT_EQ(invoke({}).code, 1);
}

TEST(Cli, Criteria) {
    const auto j = invoke_json({"criteria", "4", "5", "7"});
    EXPECT_EQ(j["result"]["criteria"],
              json::array({"basic-criterion", "prime-pair", "twin-prime", "doubling-bound"}));
    EXPECT_EQ(invoke_json({"criteria", "3", "4", "8"})["result"]["criteria"], json::array());
}
