#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "qda/cli/cli.hpp"
#include "qda/cli/manifest.hpp"
#include "qda/io/json.hpp"

using namespace qda;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

io::json run_json(std::vector<std::string> args) {
  args.insert(args.end(), {"--format", "json"});
  const Result r = run(args);
  REQUIRE(r.code == 0);
  return io::json::parse(r.out);
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& name)
      : path_(fs::temp_directory_path() / ("qda_" + name + "_" + std::to_string(::getpid()))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("orbits prints the degree 5 inventory") {
    const Result r = run({"orbits"});
    CHECK(r.code == 0);
    CHECK(r.out == "22 orbits of length 4, 14 of length 2\n");
  }

  TEST_CASE("zones prints the zone label") {
    CHECK(run({"zones", "--a", "-2", "--b", "3"}).out == "A\n");
    CHECK(run({"zones", "--a", "0.05", "--b", "-0.12"}).out == "J\n");
  }

  TEST_CASE("survey prints the global count") {
    const Result r = run({"survey", "--evidence", "2000"});
    CHECK(r.code == 0);
    CHECK(r.out == "57 realizable, 1 unresolved: ++-+-- (3,0)\n");
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kParseError);
    CHECK(run({"nonsense"}).code == cli::kParseError);
    CHECK(run({"zones", "--a", "abc", "--b", "1"}).code == cli::kParseError);
    CHECK(run({"zones", "--a", "1"}).code == cli::kParseError);
    CHECK(run({"zones", "--a", "1", "--b", "1", "--format", "yaml"}).code == cli::kParseError);
    CHECK(run({"admissible", "++x"}).code == cli::kParseError);
    CHECK(run({"realize", "++-+--", "2", "2"}).code == cli::kParseError);
    CHECK(run({"zones", "--a", "0", "--b", "1"}).code == cli::kBoundary);
    CHECK(run({"zones", "--a", "2/5", "--b", "2/25"}).code == cli::kBoundary);
    CHECK(run({"classify", "--a", "0.4", "--b", "0.08", "--c", "0.008", "--d", "0.00032"}).code == cli::kBoundary);
    CHECK(run({"classify", "--a", "-2", "--b", "3", "--c", "0", "--d", "1"}).code == cli::kBoundary);
    CHECK(run({"tables", "--zone", "Q"}).code == cli::kParseError);
  }

  TEST_CASE("decimal arguments are exact") {
    const io::json j = run_json({"classify", "--a", "-0.014", "--b", "-0.15", "--c", "1e-3", "--d", "-2.5E-4"});
    CHECK(j.at("params").at("a") == "-7/500");
    CHECK(j.at("params").at("b") == "-3/20");
    CHECK(j.at("params").at("c") == "1/1000");
    CHECK(j.at("params").at("d") == "-1/4000");
  }

  TEST_CASE("JSON outputs parse back into their types") {
    for (const auto& o : run_json({"orbits"})) CHECK(io::encode(io::decode<Orbit>(o)) == o);
    const io::json cl = run_json({"classify", "--a", "-2", "--b", "3", "--c", "-1", "--d", "1"});
    CHECK(io::encode(io::decode<Classification>(cl)) == cl);
    const io::json sc = run_json({"slice", "--a", "-2", "--b", "-1", "--samples", "32"});
    CHECK(io::encode(io::decode<SliceCurve>(sc)) == sc);
    const io::json cert = run_json({"realize", "++-+--", "1", "2"});
    CHECK(verify(io::decode<Certificate>(cert)));
    const io::json nf = run_json({"realize", "++-+--", "3", "0", "--attempts", "300"});
    CHECK(io::decode<Couple>(nf.at("not_found")) == Couple(SignPattern("++-+--"), {3, 0}));
    const io::json rules = run_json({"rules", "--a", "-2", "--b", "3"});
    CHECK(io::encode(io::decode<RuleReport>(rules)) == rules);
    for (const auto& t : run_json({"tables", "--zone", "B"})) CHECK(io::encode(io::decode<CaseTable>(t)) == t);
    const io::json ad = run_json({"admissible", "++-+--"});
    CHECK(ad.at("admissible").size() == 4);
    CHECK(run_json({"zones", "--a", "1", "--b", "1"}).at("zone") == "P");
    const io::json sv = run_json({"survey", "--evidence", "1000"});
    CHECK(io::encode(io::decode<RealizabilityReport>(sv)) == sv);
  }

  TEST_CASE("files are written under --out") {
    TempDir dir("out");
    const Result r = run({"slice", "--a", "-2", "--b", "1/2", "--svg", "--detail", "1/20", "--out", dir.path().string()});
    CHECK(r.code == 0);
    CHECK(fs::exists(dir.path() / "slice.json"));
    CHECK(read_file(dir.path() / "slice.svg").rfind("<?xml", 0) == 0);
    CHECK(fs::exists(dir.path() / "slice_detail.svg"));
    CHECK(r.out.find("cusp") != std::string::npos);
    CHECK(run({"tables", "--zone", "A", "--format", "csv", "--out", dir.path().string()}).code == 0);
    CHECK(read_file(dir.path() / "tables.csv").rfind("zone,sigma", 0) == 0);
    CHECK(run({"render-ab", "--m-curve", "--out", dir.path().string()}).code == 0);
    CHECK(read_file(dir.path() / "ab_plane.svg").find("T5") != std::string::npos);
  }

  TEST_CASE("every figure and table has one manifest entry") {
    const cli::Manifest m = cli::default_manifest();
    int figures = 0, tables = 0;
    std::set<std::string> ids;
    for (const auto& e : m.entries) {
      ids.insert(e.id);
      (e.id.rfind("fig", 0) == 0 ? figures : tables)++;
    }
    CHECK(figures == 20);
    CHECK(tables == 16);
    CHECK(ids.size() == m.entries.size());
  }

  TEST_CASE("reproduce is idempotent and detects mismatches") {
    TempDir dir("repro");
    cli::Manifest m;
    m.entries.push_back({"fig05", {"slice", "--a", "-2", "--b", "3", "--svg"}, ""});
    m.entries.push_back({"table_A", {"tables", "--zone", "A", "--format", "json"}, ""});
    const fs::path manifest = dir.path() / "manifest.json";
    cli::save_manifest(m, manifest);
    const std::string out = (dir.path() / "out").string();
    CHECK(run({"reproduce", "--manifest", manifest.string(), "--out", out}).code == cli::kManifestMismatch);
    CHECK(run({"reproduce", "--manifest", manifest.string(), "--out", out, "--update"}).code == 0);
    const cli::Manifest stored = cli::load_manifest(manifest);
    for (const auto& e : stored.entries) CHECK(e.checksum.size() == 16);
    const Result again = run({"reproduce", "--manifest", manifest.string(), "--out", out});
    CHECK(again.code == 0);
    CHECK(again.out.find("MISMATCH") == std::string::npos);
    CHECK(cli::load_manifest(manifest).entries[0].checksum == stored.entries[0].checksum);
  }

  TEST_CASE("FNV-1a reference values") {
    CHECK(cli::hex64(cli::fnv1a64("")) == "cbf29ce484222325");
    CHECK(cli::hex64(cli::fnv1a64("a")) == "af63dc4c8601ec8c");
    CHECK(cli::hex64(cli::fnv1a64("foobar")) == "85944171f73967e8");
  }
}
