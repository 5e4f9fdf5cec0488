#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the grlab binary through the shell; stderr is kept apart unless merged.
Run grlab(const std::string& args, bool merge_stderr = false, const std::string& env = "") {
  std::string cmd = env + " '" GRLAB_BINARY "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("grlab_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name) << content;
    return (path_ / name).string();
  }

 private:
  fs::path path_;
};

std::string ring_file(const std::vector<std::pair<std::string, int>>& vars, const std::vector<std::string>& ideal) {
  json doc;
  doc["field"] = {{"kind", "rational"}};
  doc["variables"] = json::array();
  for (const auto& [name, degree] : vars) doc["variables"].push_back({{"name", name}, {"degree", degree}});
  doc["ideal"] = ideal;
  return doc.dump();
}

std::vector<std::pair<std::string, int>> unit_vars(std::vector<std::string> names) {
  std::vector<std::pair<std::string, int>> out;
  for (auto& n : names) out.emplace_back(n, 1);
  return out;
}

std::set<std::string> lines(const std::string& s) {
  std::set<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.insert(l);
  return out;
}

}  // namespace

TEST_CASE("dim, gb and charpoly subcommands") {
  TempDir tmp;
  auto xy = tmp.write("xy.json", ring_file(unit_vars({"x", "y", "z"}), {"x*y"}));
  auto dim = grlab("dim " + xy);
  CHECK(dim.code == 0);
  CHECK(dim.out == "2\n");

  auto lin = tmp.write("lin.json", ring_file(unit_vars({"x", "y", "z"}), {"x", "y"}));
  auto gb = grlab("gb " + lin);
  CHECK(gb.code == 0);
  CHECK(lines(gb.out) == std::set<std::string>{"x", "y"});

  // l(k[x,y]/m^n) is the number of monomials of degree < n.
  auto plane = tmp.write("plane.json", ring_file(unit_vars({"x", "y"}), {}));
  auto chi = grlab("--json charpoly " + plane);
  REQUIRE(chi.code == 0);
  json j = json::parse(chi.out);
  CHECK(j["polynomial"] == "t*(t+1)/2");
  CHECK(j["degree"] == 2);
  int threshold = j["threshold"];
  CHECK(threshold >= 1);
  for (int n = threshold; n < threshold + 6; ++n) {
    int count = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; a + b < n; ++b) ++count;
    CHECK(count == n * (n + 1) / 2);
  }
  CHECK(grlab("charpoly " + plane).out.starts_with("t*(t+1)/2 for n >= "));

  auto custom = grlab("--json charpoly --ideal 'x^2, y' " + plane);
  REQUIRE(custom.code == 0);
  CHECK(json::parse(custom.out)["polynomial"] == "t*(t+1)");
  CHECK(grlab("charpoly --ideal 'x' " + plane).code == 3);
}

TEST_CASE("analyze reports") {
  TempDir tmp;
  auto cone = tmp.write("cone.json", ring_file(unit_vars({"x", "y", "z"}), {"x*y - z^2"}));
  auto r = grlab("--json analyze " + cone);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["regular"] == false);
  CHECK(j["isolated"] == true);
  CHECK(j["qgr_gldim"] == 1);
  CHECK_FALSE(j.contains("timings"));

  auto poly = tmp.write("poly.json", ring_file(unit_vars({"x", "y", "z"}), {}));
  json p = json::parse(grlab("--json analyze " + poly).out);
  CHECK(p["regular"] == true);
  CHECK(p["regular_sequence"] == json({"x", "y", "z"}));
  CHECK(p["pdim_k"] == 3);

  // Timings go to stderr only, so stdout is byte-identical across runs.
  CHECK(grlab("--json analyze " + cone).out == r.out);
  CHECK(grlab("analyze " + cone, true).out.find("timing") != std::string::npos);

  json fp = json::parse(grlab("--json --field 'GF(7)' analyze " + cone).out);
  CHECK(fp["ring"]["field"] == "GF(7)");
  CHECK(fp["field_caveat"].is_string());
  CHECK(json::parse(grlab("--json --order lex analyze " + cone).out)["ring"]["order"] == "lex");
}

TEST_CASE("exit codes") {
  TempDir tmp;
  auto nonhom = tmp.write("nonhom.json", ring_file(unit_vars({"x", "y"}), {"x + y^2"}));
  auto r = grlab("analyze " + nonhom, true);
  CHECK(r.code == 3);
  CHECK(r.out.starts_with("error[invalid_input]: "));

  CHECK(grlab("analyze " + tmp.write("unit.json", ring_file(unit_vars({"x"}), {"1"}))).code == 3);
  CHECK(grlab("analyze " + tmp.write("w0.json", ring_file({{"x", 0}}, {}))).code == 3);
  CHECK(grlab("analyze " + tmp.path().string() + "/missing.json").code == 3);
  CHECK(grlab("--field 'GF(8)' analyze " + nonhom).code == 3);

  auto bad_poly = grlab("analyze " + tmp.write("bad.json", ring_file(unit_vars({"x"}), {"x^"})), true);
  CHECK(bad_poly.code == 2);
  CHECK(bad_poly.out.starts_with("error[parse_error]: "));
  CHECK(grlab("analyze " + tmp.write("badjson.json", "{\"field\": ")).code == 2);
  CHECK(grlab("frobnicate").code == 2);
  CHECK(grlab("").code == 2);
  CHECK(grlab("--help").code == 0);

  auto quartic = tmp.write("quartic.json", ring_file(unit_vars({"x", "y", "z"}), {"x^4 - y*z^3", "x*y - z^2"}));
  CHECK(grlab("--max-basis 1 gb " + quartic).code == 4);
  CHECK(grlab("gb " + quartic, false, "GRLAB_MAX_BASIS=1").code == 4);
  // Flags take precedence over the environment.
  CHECK(grlab("--max-basis 100 gb " + quartic, false, "GRLAB_MAX_BASIS=1").code == 0);
  CHECK(grlab("--max-degree 3 gb " + quartic).code == 4);
}

TEST_CASE("corpus runner") {
  auto bundled = grlab("corpus '" GRLAB_CORPUS_DIR "'");
  CHECK(bundled.code == 0);
  CHECK(bundled.out.find("15 cases, 0 failed") != std::string::npos);

  TempDir empty;
  auto none = grlab("corpus " + empty.path().string(), true);
  CHECK(none.code == 0);
  CHECK(none.out.find("0 cases") != std::string::npos);

  TempDir copy;
  for (const auto& e : fs::directory_iterator(GRLAB_CORPUS_DIR)) fs::copy_file(e.path(), copy.path() / e.path().filename());
  auto expected_path = copy.path() / "a1_cone.expected.json";
  json expected = json::parse(std::ifstream(expected_path));
  expected["singular_locus_dim"] = 2;
  std::ofstream(expected_path) << expected.dump(2);
  auto broken = grlab("corpus " + copy.path().string());
  CHECK(broken.code == 5);
  CHECK(broken.out.find("FAIL a1_cone") != std::string::npos);
  CHECK(broken.out.find("singular_locus_dim: expected 2, got 0") != std::string::npos);

  // A witness that is not a zero divisor is itself a mismatch.
  auto cone = copy.path() / "a1_cone.expected.json";
  expected["singular_locus_dim"] = 0;
  expected["zero_divisor_witness"] = {{"u", "x"}, {"v", "y"}};
  std::ofstream(cone) << expected.dump(2);
  auto witness = grlab("corpus " + copy.path().string());
  CHECK(witness.code == 5);
  CHECK(witness.out.find("zero_divisor_witness") != std::string::npos);
}
