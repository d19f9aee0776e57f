#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "gso/canonical.hpp"
#include "gso/io.hpp"
#include "gso/obstruction.hpp"
#include "gso_cli/cli.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;

  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gso");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = gso::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("gso-cli-test-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("fnv1a hashes") {
  CHECK(gso::cli::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(gso::cli::fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(gso::cli::version() == GSO_VERSION);
}

TEST_CASE("solve examples") {
  TempDir dir;
  const Run k4 = run({"solve", "--g6", "C~", "--param", "cmms"});
  REQUIRE(k4.code == gso::cli::kOk);
  CHECK(k4.report()["results"][0]["value"] == 3);

  const std::string paths = dir.write("paths.g6", gso::graph6_encode(gso::path_graph(5)) + "\n");
  const Run p = run({"solve", paths, "--param", "cmms"});
  REQUIRE(p.code == gso::cli::kOk);
  CHECK(p.report()["results"][0]["value"] == 1);
  CHECK(p.report()["inputs"][0]["fnv1a64"] == gso::cli::fnv1a_hex(read_file(paths)));

  const Run cmp = run({"solve", "--g6", "C~", "--param", "cmp", "--emit-witness"});
  REQUIRE(cmp.code == gso::cli::kOk);
  CHECK(cmp.report()["results"][0]["value"] == 3);
  CHECK(cmp.report()["results"][0].contains("expansion"));

  const Run decide = run({"solve", "--g6", "C~", "--param", "cmp", "-k", "2"});
  REQUIRE(decide.code == gso::cli::kOk);
  CHECK(decide.out.find("false") != std::string::npos);
}

TEST_CASE("solve exit codes") {
  TempDir dir;
  const std::string bad = dir.write("bad.g6", "C~~\n");
  CHECK(run({"solve", bad}).code == gso::cli::kParseError);
  CHECK(run({"solve", "--g6", "!!"}).code == gso::cli::kParseError);
  CHECK(run({"solve", dir.file("missing.g6")}).code == gso::cli::kParseError);
  CHECK(run({"solve", "--g6", "C~", "--param", "bogus"}).code == gso::cli::kParseError);
  CHECK(run({"frobnicate"}).code == gso::cli::kParseError);
  CHECK(run({"solve", "--g6", "Fw~~w", "--param", "cmp", "--budget", "1"}).code ==
        gso::cli::kBudgetExhausted);
  CHECK(run({"--help"}).code == gso::cli::kOk);
}

TEST_CASE("mine examples") {
  TempDir dir;
  const Run k1 = run({"mine", "--max-n", "6", "--param", "cmp", "-k", "1", "--out", dir.file("k1.g6")});
  REQUIRE(k1.code == gso::cli::kOk);
  CHECK(k1.report()["results"]["obstructions"].size() == 2);
  const auto mined = gso::read_graph6_file(dir.file("k1.g6"));
  CHECK(mined.size() == 2);
  CHECK(fs::exists(dir.file("k1.g6.meta.json")));

  const Run mp = run({"mine", "--max-n", "6", "--param", "mp", "-k", "1", "--relation", "minor"});
  REQUIRE(mp.code == gso::cli::kOk);
  CHECK(mp.report()["results"]["obstructions"].size() == 2);

  const Run tiny = run({"mine", "--max-n", "1"});
  REQUIRE(tiny.code == gso::cli::kOk);
  CHECK(tiny.report()["results"]["obstructions"].empty());
}

TEST_CASE("reports are byte-identical across runs") {
  const std::vector<std::string> args{"mine", "--max-n", "6", "--param", "cmp", "-k", "1"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> solve{"solve", "--g6", "Fw~~w", "--g6", "C~", "--emit-witness"};
  CHECK(run(solve).out == run(solve).out);
  const std::vector<std::string> verify{"verify-paper", "--only", "9"};
  CHECK(run(verify).out == run(verify).out);
}

TEST_CASE("emitted graph6 lines round trip") {
  TempDir dir;
  REQUIRE(run({"enumerate", "-n", "6", "--out", dir.file("n6.g6")}).code == gso::cli::kOk);
  std::ifstream in(dir.file("n6.g6"));
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    const gso::Graph g = gso::graph6_decode(line);
    CHECK(gso::graph6_encode(g) == line);
    CHECK(gso::canonical_form(gso::graph6_decode(gso::graph6_encode(g))) == gso::canonical_form(g));
    ++count;
  }
  CHECK(count == 112);
}

TEST_CASE("branches and glue") {
  const Run k2 = run({"branches", "-k", "2", "--count-only"});
  REQUIRE(k2.code == gso::cli::kOk);
  CHECK(k2.report()["results"]["branch_count"] == "15");

  const Run k10 = run({"branches", "-k", "10", "--count-only"});
  REQUIRE(k10.code == gso::cli::kOk);
  CHECK(k10.report()["results"]["branch_count"] == gso::branch_count(10).str());

  TempDir dir;
  std::string family;
  for (const gso::RootedGraph& m : gso::mine_fan_base(7).members) family += gso::rooted_to_json_line(m) + "\n";
  const std::string path = dir.write("base.jsonl", family);
  const Run glued = run({"glue", "--family", path, "-m", "3"});
  REQUIRE(glued.code == gso::cli::kOk);
  CHECK(glued.report()["results"]["count"] == 35);
}

TEST_CASE("simulate and recognize") {
  TempDir dir;
  const std::string strategy =
      dir.write("k3.jsonl", "{\"op\":\"p\",\"v\":0}\n{\"op\":\"p\",\"v\":1}\n{\"op\":\"s\",\"v\":0,\"u\":2}\n");
  const Run sim = run({"simulate", "--g6", "Bw", "--strategy", strategy});
  REQUIRE(sim.code == gso::cli::kOk);
  CHECK(sim.out.find("\"width\": 2") != std::string::npos);

  const Run k4 = run({"recognize", "--g6", "C~"});
  REQUIRE(k4.code == gso::cli::kOk);
  CHECK(k4.report()["results"][0]["cmms_at_most_2"] == false);
  const Run c5 = run({"recognize", "--g6", gso::graph6_encode(gso::cycle_graph(5))});
  REQUIRE(c5.code == gso::cli::kOk);
  CHECK(c5.report()["results"][0]["cmms_at_most_2"] == true);
}

TEST_CASE("verify-paper with the k=2 outerplanar obstructions") {
  const Run none = run({"verify-paper", "--only", "10"});
  CHECK(none.code == gso::cli::kOk);
  CHECK(none.report()["results"][0]["skipped"] == "external data required");

  TempDir dir;
  dir.write("o1.g6", "C~\n" + gso::graph6_encode(gso::complete_bipartite(2, 3)) + "\n" +
                         gso::graph6_encode(gso::k23_plus()) + "\n");
  const Run o1 = run({"verify-paper", "--only", "10", "--families", dir.path().string()});
  CHECK(o1.code == gso::cli::kOk);
  CHECK(o1.err.find("3/3") != std::string::npos);

  dir.write("extra.g6", "C~\nBw\n");
  const Run wrong = run({"verify-paper", "--only", "10", "--families", dir.path().string()});
  CHECK(wrong.code == gso::cli::kCheckFailed);
}
