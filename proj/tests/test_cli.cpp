#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string &args) {
  const std::string cmd = std::string(HARMONIUM_CLI) + " " + args + " 2>/dev/null";
  Run r;
  std::unique_ptr<FILE, int (*)(FILE *)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) {
    r.out.append(buf.data(), got);
  }
  const int status = pclose(pipe.release());
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch(const std::string &name) {
  const auto dir = std::filesystem::temp_directory_path() / "harmonium_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path &p, const std::string &text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_CASE("gen writes a commented edge list") {
  const auto r = run("gen petersen");
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("# petersen\n10 15\n"));
  const auto l = run("gen lollipop -n 6 -m 4");
  CHECK(l.code == 0);
  CHECK(l.out.find("9 18\n") != std::string::npos);
  CHECK(run("gen nonsense").code == 2);
  CHECK(run("gen lollipop -n 2 -m 4").code == 2);
}

TEST_CASE("gen then solve round trip through a file") {
  const auto path = scratch("tt.txt");
  CHECK(run("gen truncated_tetrahedron -o " + path.string()).code == 0);
  const auto r = run("--json solve " + path.string());
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"]["h"] == 8);
  CHECK(j["graph_id"] == path.string());
  CHECK(j.contains("elapsed"));
  CHECK(j["artifacts"].empty());
}

TEST_CASE("solve -k exit codes") {
  CHECK(run("solve petersen -k 10").code == 0);
  CHECK(run("solve petersen -k 9").code == 1);
  CHECK(run("solve gp:12,5 -k 9 --node-budget 1500").code == 3);
  CHECK(run("solve gp:12,5 --node-budget 1500").code == 3);
  CHECK(run("solve").code == 2);
}

TEST_CASE("solve writes its witness and check verifies it") {
  const auto col = scratch("franklin.col");
  const auto r = run("--json solve franklin -o " + col.string());
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"]["h"] == 9);
  CHECK(j["artifacts"][0] == col.string());
  CHECK(run("check franklin " + col.string()).code == 0);
  const auto bad = scratch("bad.col");
  write(bad, "0 1\n1 2\n2 1\n3 2\n");
  const auto c = run("--json check path:4 " + bad.string());
  CHECK(c.code == 1);
  CHECK(nlohmann::json::parse(c.out)["results"]["verdict"] == "pair_repeated");
  write(bad, "0 1\n1 2\n");
  CHECK(run("check path:4 " + bad.string()).code == 2);
}

TEST_CASE("bound prints the report") {
  const auto r = run("bound petersen");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["combined"] == 10);
}

TEST_CASE("greedy and vc-color") {
  const auto g = run("--json greedy --adversarial 4");
  CHECK(g.code == 0);
  const auto j = nlohmann::json::parse(g.out);
  CHECK(j["results"]["colors"] == 10);
  CHECK(j["results"]["good_colors"] == 6);
  CHECK(run("greedy cycle:5 --order 4,3,2,1,0").code == 0);
  CHECK(run("greedy cycle:5 --order 0,0,1,2,3").code == 2);
  const auto v = run("--json vc-color star:4");
  CHECK(v.code == 0);
  CHECK(nlohmann::json::parse(v.out)["results"]["colors"] == 5);
  CHECK(run("vc-color cycle:9 --approx").code == 0);
}

TEST_CASE("construct") {
  const auto s = run("--json construct sunflower -n 7");
  CHECK(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["results"]["colors"] == 8);
  const auto l = run("--json construct lollipop -n 6 -m 4");
  CHECK(l.code == 0);
  const auto j = nlohmann::json::parse(l.out);
  CHECK(j["results"]["colors"] == 8);
  CHECK(j["results"]["trail"].size() == 4);
  CHECK(run("construct sunflower -n 5").code == 2);
  CHECK(run("construct wheel -n 5").code == 2);
}

TEST_CASE("reduce") {
  const auto r = run("--json reduce cycle:5 -k 2 --verify");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"]["threshold"] == 11);
  CHECK(j["results"]["equivalent"] == true);
  const auto gadget = run("reduce complete:2 -k 1");
  CHECK(gadget.out.starts_with("7 "));
  CHECK(run("reduce cycle:5 -k 9").code == 2);
}

TEST_CASE("export") {
  const auto col = scratch("k3.col");
  write(col, "0 1\n1 2\n2 3\n");
  const auto r = run("export complete:3 -c " + col.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("0 [label=\"1\", fillcolor=1];") != std::string::npos);
  CHECK(run("export cycle:4").out.find("0 -- 1;") != std::string::npos);
}

TEST_CASE("reproduce exits 0 and reports JSON rows") {
  const auto r = run("reproduce --scope greedy");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  const auto j = run("--json reproduce --scope regular33");
  CHECK(j.code == 0);
  const auto rows = nlohmann::json::parse(j.out)["results"];
  CHECK(rows.size() >= 17);
  for (const auto &row : rows) {
    CHECK(row["status"] == "PASS");
  }
  CHECK(run("reproduce --scope bogus").code == 2);
}

TEST_CASE("help and usage errors") {
  CHECK(run("--help").code == 0);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("solve no_such_graph_anywhere").code == 2);
}
