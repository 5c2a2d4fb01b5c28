#include "qda/cli/manifest.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qda::cli {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

namespace {

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

Manifest default_manifest() {
  struct Fig {
    const char* args;
  };
  // Figures in order: four (a, b)-plane views, then one slice per sample
  // point. Two-panel figures get a detail view near the origin.
  static const Fig figures[] = {
      {"render-ab --view -18,2,-5,4"},
      {"render-ab --view -0.1,0.45,-0.25,0.2"},
      {"render-ab --m-curve --view -3,1.5,-3,3"},
      {"render-ab --m-curve --view 0.15,0.45,-0.02,0.1"},
      {"slice --a -2 --b 3 --svg"},
      {"slice --a -2 --b 0.5 --svg --detail 1/20"},
      {"slice --a -16 --b 0.1 --svg --detail 1/20"},
      {"slice --a -2 --b -0.5 --svg --detail 1/20"},
      {"slice --a -2 --b -1 --svg --detail 1/20"},
      {"slice --a -0.014 --b -0.15 --svg"},
      {"slice --a -2 --b -2.5 --svg --detail 1/20"},
      {"slice --a -2 --b -4 --svg"},
      {"slice --a 1 --b -1 --svg"},
      {"slice --a 0.05 --b -0.2 --svg"},
      {"slice --a 0.05 --b -0.12 --svg"},
      {"slice --a 0.05 --b -0.09 --svg"},
      {"slice --a 0.22 --b 0.01 --svg --detail 1/20"},
      {"slice --a 0.28 --b 0.01 --svg --detail 1/20"},
      {"slice --a 0.295 --b 0.01 --svg --detail 1/20"},
      {"slice --a 1 --b 1 --svg"},
  };
  static const char* tables[] = {"A", "B", "C", "D", "E", "E'", "F", "G", "H", "I", "J", "K", "L", "M", "N", "P"};
  Manifest m;
  int n = 0;
  for (const auto& f : figures) {
    char id[8];
    std::snprintf(id, sizeof id, "fig%02d", ++n);
    m.entries.push_back({id, split(f.args), ""});
  }
  for (const char* t : tables) {
    std::string label = t;
    std::string id = "table_" + (label == "E'" ? std::string("E2") : label);
    m.entries.push_back({id, {"tables", "--zone", label, "--format", "json"}, ""});
  }
  return m;
}

Manifest load_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read manifest " + path.string());
  const nlohmann::json j = nlohmann::json::parse(in);
  Manifest m;
  for (const auto& e : j.at("entries"))
    m.entries.push_back({e.at("id").get<std::string>(), e.at("args").get<std::vector<std::string>>(),
                         e.at("checksum").get<std::string>()});
  return m;
}

void save_manifest(const Manifest& manifest, const fs::path& path) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : manifest.entries) entries.push_back({{"id", e.id}, {"args", e.args}, {"checksum", e.checksum}});
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest " + path.string());
  out << nlohmann::json{{"entries", entries}}.dump(2) << '\n';
}

std::string directory_checksum(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::uint64_t h = fnv1a64("");
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    h = fnv1a64(fs::relative(f, dir).generic_string(), h);
    h = fnv1a64(std::string_view("\0", 1), h);
    h = fnv1a64(buf.str(), h);
  }
  return hex64(h);
}

}  // namespace qda::cli
