#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "ips/cli.hpp"
#include "ips/datasets.hpp"
#include "ips/io.hpp"

using namespace ips;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("ips_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

std::string write_dataset(const TempDir& dir, const std::string& name) {
  const std::string path = dir.file(name + ".ips");
  EXPECT_EQ(run({"examples", name, "--out", path}).code, 0);
  return path;
}

}  // namespace

TEST(PointSetIo, RoundTripsBytes) {
  for (const auto& ds : embedded_datasets()) {
    const std::string text = serialize_point_set(ds.file);
    const auto parsed = parse_point_set(text);
    EXPECT_EQ(parsed, ds.file) << ds.name;
    EXPECT_EQ(serialize_point_set(parsed), text) << ds.name;
  }
}

TEST(PointSetIo, AcceptsPrintedCoordinateStyles) {
  const auto f = parse_point_set(
      "# a comment\nformat_version 1\nq 385\ndenom 2\npoints 3\n(1105 ; 48)\n(-1105, 48)\n2189 0\n");
  EXPECT_EQ(f.set.size(), 3u);
  EXPECT_EQ(f.set.radicand(), 385);
  EXPECT_FALSE(f.name.has_value());
}

TEST(PointSetIo, ReportsLineNumbers) {
  try {
    parse_point_set("format_version 1\nq 2\ndenom 1\npoints 2\n0 0\n1 x\n");
    FAIL() << "expected a parse error";
  } catch (const IpsError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    EXPECT_NE(std::string(e.what()).find("line 6"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_point_set("format_version 2\nq 2\ndenom 1\npoints 0\n"), IpsError);
  EXPECT_THROW(parse_point_set("format_version 1\nq 2\ndenom 1\npoints 3\n0 0\n1 1\n"), IpsError);
  EXPECT_THROW(parse_point_set("format_version 1\nq 4\ndenom 1\npoints 2\n0 0\n1 1\n"), IpsError);
  EXPECT_THROW(read_point_set_file("/nonexistent/file.ips"), IpsError);
}

TEST(CliVerify, Char385) {
  TempDir dir;
  const auto r = run({"verify", write_dataset(dir, "char385")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("characteristic 385, diameter 2189, rails"), std::string::npos) << r.out;
}

TEST(CliVerify, AllVerifiedDatasetsRoundTrip) {
  TempDir dir;
  for (const auto& ds : embedded_datasets()) {
    const auto r = run({"verify", write_dataset(dir, ds.name)});
    EXPECT_EQ(r.code, ds.expected_to_verify ? 0 : 1) << ds.name;
    EXPECT_EQ(dataset_status(ds), ds.expected_to_verify ? "verified" : "unverified-as-transcribed");
  }
}

TEST(CliVerify, HeptagonRequireGeneral) {
  TempDir dir;
  EXPECT_EQ(run({"verify", write_dataset(dir, "heptagon_fixed"), "--require", "general"}).code, 0);
  // The printed digits are in general position but not integral.
  const auto printed = run({"verify", write_dataset(dir, "heptagon"), "--require", "general"});
  EXPECT_EQ(printed.code, 1);
  EXPECT_NE(printed.out.find("general: yes"), std::string::npos);
  EXPECT_EQ(run({"verify", write_dataset(dir, "char385"), "--require", "semi-general"}).code, 1);
  EXPECT_EQ(run({"verify", write_dataset(dir, "char385"), "--require", "sideways"}).code, 2);
}

TEST(CliVerify, PerturbedCoordinateNamesPair) {
  TempDir dir;
  auto file = find_dataset("rails255255").file;
  std::vector<GridPoint> pts = file.set.points();
  pts[0].a += 1;  // (-306, 0) -> (-305, 0)
  file.set = GridPointSet(file.set.radicand(), file.set.denom(), pts);
  const std::string path = dir.file("bad.ips");
  write_point_set_file(path, file);
  const auto r = run({"verify", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("non-integral: #0 (-305, 0) #"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("result: FAIL"), std::string::npos);
}

TEST(CliVerify, BadInput) {
  TempDir dir;
  EXPECT_EQ(run({"verify", dir.file("missing.ips")}).code, 2);
  std::ofstream(dir.file("junk.ips")) << "hello\n";
  EXPECT_EQ(run({"verify", dir.file("junk.ips")}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliVerify, JsonMatchesText) {
  TempDir dir;
  const std::string path = write_dataset(dir, "rails255255");
  const auto text = run({"verify", path});
  const auto js = run({"verify", path, "--json"});
  ASSERT_EQ(js.code, 0);
  const auto j = nlohmann::json::parse(js.out);
  EXPECT_EQ(j["characteristic"], 255255);
  EXPECT_EQ(j["cardinality"], 11);
  EXPECT_EQ(j["shape"], "rails");
  EXPECT_EQ(j["rails_split"][0], 3);
  EXPECT_EQ(j["rails_split"][1], 8);
  EXPECT_EQ(j["ok"], true);
  // Every number printed in the text report appears in the JSON report.
  std::ostringstream flat;
  flat << j.dump();
  const std::string jtext = flat.str();
  const std::regex number("-?[0-9]+");
  std::istringstream lines(text.out);
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("  ...", 0) == 0) continue;  // truncation count, display only
    for (auto it = std::sregex_iterator(line.begin(), line.end(), number); it != std::sregex_iterator(); ++it) {
      EXPECT_NE(jtext.find(it->str()), std::string::npos) << it->str() << " in: " << line;
    }
  }
  EXPECT_NE(text.out.find(j["diameter"].dump()), std::string::npos);
  EXPECT_NE(text.out.find(j["diameter_squared"].dump()), std::string::npos);
}

TEST(CliChar, Examples) {
  const auto r = run({"char", "3", "4", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("characteristic: 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("q mod 4: 1\n"), std::string::npos);
  const auto r2 = run({"char", "2", "3", "4", "--json"});
  EXPECT_EQ(r2.code, 0);
  const auto j = nlohmann::json::parse(r2.out);
  EXPECT_EQ(j["characteristic"], 15);
  EXPECT_EQ(j["mod8"], 7);
  EXPECT_EQ(j["heron16"], 135);
  const auto bad = run({"char", "1", "1", "2"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("degenerate"), std::string::npos);
  EXPECT_EQ(run({"char", "1", "2"}).code, 2);
  // Big sides stay exact and go to JSON as strings when they overflow 64 bits.
  const auto big = run({"char", "100000000000000000000", "100000000000000000000", "100000000000000000000", "--json"});
  EXPECT_EQ(nlohmann::json::parse(big.out)["characteristic"], 3);
  EXPECT_TRUE(nlohmann::json::parse(big.out)["heron16"].is_string());
}

TEST(CliCurves, Examples) {
  const auto r = run({"curves", "3", "1", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n3 2 5 8 6 2\n"), std::string::npos) << r.out;
  EXPECT_EQ(run({"curves", "3", "3", "10"}).code, 2);
  const auto empty = run({"curves", "4", "1", "100", "--char-class", "4k1,4k2", "--json"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(empty.out)["points"].empty());
  const auto neg = run({"curves", "4", "-1", "20", "--q", "15"});
  EXPECT_EQ(neg.code, 0);
  EXPECT_NE(neg.out.find("\n2 3 -5 3 8 15\n"), std::string::npos) << neg.out;
}

TEST(CliBounds, Examples) {
  const auto all = run({"bounds", "36", "--d", "13975"});
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(all.out.find("FAIL"), std::string::npos);
  const auto fail = run({"bounds", "4", "--d", "3", "--json"});
  EXPECT_EQ(fail.code, 1);
  const auto j = nlohmann::json::parse(fail.out);
  for (const auto& row : j["bounds"]) {
    if (row["variant"] == "main_54") EXPECT_EQ(row["satisfied"], false);
  }
  const auto plain = run({"bounds", "3"});
  EXPECT_EQ(plain.code, 0);
  EXPECT_EQ(plain.out.find("pass"), std::string::npos);
  EXPECT_NE(plain.out.find("main_54"), std::string::npos);
  EXPECT_EQ(run({"bounds", "2"}).code, 2);
}

TEST(CliSearch, MinimumAndWitnessFiles) {
  TempDir dir;
  const auto r = run({"search", "--n", "4", "--position", "semi-general", "--max-diam", "8", "--out-dir",
                      dir.file("w")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("minimum diameter: 4\n"), std::string::npos) << r.out;
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir.file("w"))) {
    ++files;
    EXPECT_EQ(run({"verify", e.path().string(), "--require", "semi-general"}).code, 0);
  }
  EXPECT_GT(files, 0u);

  const auto general = run({"search", "--n", "4", "--position", "general", "--max-diam", "8", "--no-files"});
  EXPECT_EQ(general.code, 0);
  EXPECT_NE(general.out.find("minimum diameter: 8\n"), std::string::npos) << general.out;

  const auto none = run({"search", "--n", "5", "--position", "general", "--max-diam", "10", "--no-files"});
  EXPECT_EQ(none.code, 1);
  EXPECT_NE(none.out.find("no conforming set"), std::string::npos);
}

TEST(CliSearch, CompareWeeding) {
  const auto r = run({"search", "--n", "4", "--char-class", "4k1,4k2", "--max-diam", "10", "--compare-weeding"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("identical outcome: yes"), std::string::npos) << r.out;

  const auto on = run({"search", "--n", "4", "--char-class", "4k1,4k2", "--max-diam", "10", "--no-files", "--json"});
  const auto off = run({"search", "--n", "4", "--char-class", "4k1,4k2", "--max-diam", "10", "--no-files", "--json",
                        "--no-weeding"});
  const auto jon = nlohmann::json::parse(on.out), joff = nlohmann::json::parse(off.out);
  EXPECT_EQ(jon["min_diameter"], joff["min_diameter"]);
  EXPECT_EQ(jon["witnesses"], joff["witnesses"]);
  EXPECT_NE(jon["stats"], joff["stats"]);

  EXPECT_EQ(run({"search", "--n", "4", "--max-diam", "10", "--compare-weeding"}).code, 2);
}

TEST(CliSearch, WorkersFromEnvironment) {
  ::setenv("IPS_WORKERS", "3", 1);
  const auto a = run({"search", "--n", "4", "--max-diam", "8", "--no-files", "--json"});
  ::unsetenv("IPS_WORKERS");
  const auto b = run({"search", "--n", "4", "--max-diam", "8", "--no-files", "--json", "--workers", "1"});
  EXPECT_EQ(nlohmann::json::parse(a.out), nlohmann::json::parse(b.out));
}

TEST(CliSearch, UsageErrors) {
  EXPECT_EQ(run({"search", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"search", "--n", "4", "--max-diam", "8", "--position", "diagonal"}).code, 2);
  EXPECT_EQ(run({"search", "--n", "4", "--max-diam", "8", "--char-class", "4k9"}).code, 2);
  EXPECT_EQ(run({"search", "--n", "2", "--max-diam", "8"}).code, 2);
}

TEST(CliExamples, ListAndExport) {
  const auto list = run({"examples", "--list"});
  EXPECT_EQ(list.code, 0);
  for (const char* name : {"char385", "heptagon", "rails255255"}) EXPECT_NE(list.out.find(name), std::string::npos);
  const auto hept = run({"examples", "heptagon"});
  EXPECT_EQ(hept.code, 0);
  EXPECT_EQ(parse_point_set(hept.out).set.radicand(), 2002);
  const auto rails = parse_point_set(run({"examples", "rails255255"}).out).set;
  EXPECT_EQ(rails.size(), 11u);
  std::size_t low = 0, on_axis = 0;
  for (const auto& p : rails.points()) {
    low += p.b == -3;
    on_axis += p.b == 0;
  }
  EXPECT_EQ(low, 3u);
  EXPECT_EQ(on_axis, 8u);
  EXPECT_EQ(run({"examples", "nope"}).code, 2);
}
