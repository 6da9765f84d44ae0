#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "equipart/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = equipart::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

equipart::json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return equipart::json::parse(r.out);
}

}  // namespace

TEST(Cli, BoundsLine) {
  const auto r = run({"bounds", "--j", "7", "--k", "3", "--no-header"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "17 ≤ Δ(7,3) ≤ 19");
  const auto e = run({"bounds", "--j", "5", "--k", "2", "--no-header"});
  EXPECT_EQ(e.out.substr(0, e.out.find('\n')), "Δ(5,2) = 8");
}

TEST(Cli, HeaderIsOptional) {
  const auto a = run({"bounds", "--j", "3", "--k", "2"});
  const auto b = run({"bounds", "--j", "3", "--k", "2", "--no-header"});
  EXPECT_EQ(a.out.rfind("# equipart ", 0), 0u);
  EXPECT_EQ(a.out.substr(a.out.find('\n') + 1), b.out);
}

TEST(Cli, ObstructionJson) {
  const auto j = run_json({"obstruction", "--d", "8", "--j", "5"});
  EXPECT_EQ(j["schema"], "equipart.obstruction/1");
  ASSERT_EQ(j["classes"].size(), 3u);
  const auto& c = j["classes"][0];
  EXPECT_EQ(c["canonical"], "AAABBB");
  EXPECT_EQ(c["signs"], "++");
  EXPECT_EQ(c["components"], 2);
  EXPECT_EQ(c["stabilizer"], equipart::json({"e", "ab", "ga", "gb"}));
  EXPECT_EQ(c["epsilon"], -1);
  EXPECT_EQ(c["eta"], 1);
  EXPECT_EQ(c["contribution"], "-Xca");
  EXPECT_EQ(j["counters"]["omega"], 2);
  EXPECT_EQ(j["total"], "Xab");
  EXPECT_EQ(j["admissible"], true);
}

TEST(Cli, WordsTable) {
  const auto j = run_json({"words", "--nmax", "4"});
  const auto& row = j["rows"][1];
  EXPECT_EQ(row["R"], 2);
  EXPECT_EQ(row["P2n"], 3);
  EXPECT_EQ(row["Q"], 1);
  EXPECT_EQ(row["A"], 1);
  const auto b = run_json({"words", "--nmax", "6", "--brute"});
  for (const auto& r : b["rows"]) {
    EXPECT_EQ(r["R"], r["R_brute"]);
    EXPECT_EQ(r["P"], r["P_brute"]);
    EXPECT_EQ(r["Q"], r["Q_brute"]);
  }
}

TEST(Cli, CirclesJson) {
  const auto j = run_json({"circles", "--j", "3"});
  EXPECT_EQ(j["j"], 3);
  EXPECT_EQ(j["states"], 96);
  EXPECT_EQ(j["circles"].size(), 6u);
  bool found = false;
  for (const auto& c : j["circles"])
    if (c["compressed"] == equipart::json({"AABB++", "BAAB+-", "BBAA++", "ABBA-+"})) found = c["length"] == 16;
  EXPECT_TRUE(found);
}

TEST(Cli, JacobianJson) {
  const auto j = run_json({"jacobian", "--word", "ABABAB"});
  EXPECT_EQ(j["det_sign"], -1);
  EXPECT_EQ(j["block_sign"], -1);
  EXPECT_EQ(j["matrix"].size(), 15u);
  const auto s = run_json({"jacobian", "--word", "AAABBB++", "--row-order", "swapped"});
  EXPECT_EQ(s["det_sign"], -1);
}

TEST(Cli, DicksonAndTable) {
  const auto d = run_json({"dickson", "--j", "5", "--k", "2", "--d", "8"});
  EXPECT_EQ(d["admissible"], false);
  EXPECT_EQ(d["minimal_d"], 9);
  const auto t = run_json({"table", "--k", "3"});
  std::vector<int> best;
  for (const auto& r : t["rows"]) best.push_back(r["best"].get<int>());
  EXPECT_EQ(best, (std::vector<int>{19, 18, 39, 38}));
  const auto all = run_json({"table", "--k", "2", "--jmax", "5"});
  EXPECT_EQ(all["rows"].size(), 5u);
}

TEST(Cli, TextIsDerivedFromJson) {
  // The text table carries the same numbers as the JSON rows.
  const auto txt = run({"table", "--k", "4", "--no-header"}).out;
  const auto table = run_json({"table", "--k", "4"});
  for (const auto& r : table["rows"]) {
    const std::string line = std::to_string(r["lower"].get<int>()) + " ≤ Δ(" + std::to_string(r["j"].get<int>()) +
                             ",4) ≤ " + std::to_string(r["best"].get<int>());
    EXPECT_NE(txt.find(line), std::string::npos) << line;
  }
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"obstruction", "--d", "14", "--j", "9", "--json"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> text{"circles", "--j", "5"};
  EXPECT_EQ(run(text).out, run(text).out);
}

TEST(Cli, SignMapReproducesFlippedOutput) {
  using equipart::Conventions;
  const auto base = run_json({"obstruction", "--d", "14", "--j", "9"});
  const auto flipped = run_json({"obstruction", "--d", "14", "--j", "9", "--epsilon-convention", "three-quarter"});
  const Conventions from{}, to{equipart::EpsilonConvention::three_quarter, equipart::RowOrder::paper};
  EXPECT_EQ(equipart::apply_sign_map(base, from, to), flipped);
  EXPECT_EQ(base["admissible"], flipped["admissible"]);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"bounds", "--j", "x", "--k", "2"}).code, 2);
  EXPECT_EQ(run({"obstruction", "--d", "9", "--j", "5"}).code, 2);
  EXPECT_EQ(run({"circles", "--j", "4"}).code, 2);
  EXPECT_EQ(run({"obstruction", "--d", "8", "--j", "5", "--epsilon-convention", "half"}).code, 2);
  EXPECT_EQ(run({"jacobian", "--word", "BAAB"}).code, 2);
  const auto r = run({"dickson", "--j", "15", "--k", "5", "--cap", "1000"});
  EXPECT_EQ(r.code, 4);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "equipart_cli_test.json";
  const auto r = run({"bounds", "--j", "5", "--k", "2", "--json", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const auto j = equipart::json::parse(f);
  EXPECT_EQ(j["best"], 8);
  std::filesystem::remove(path);
}
