// End-to-end checks of the installed binary: exit codes, document schemas,
// and a full encode / witness / verify round trip through child processes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

using nlohmann::json;

const std::string kBin = SCGD_BIN;

std::string tmp_path(const std::string& name) {
  return "/tmp/scgd-cli-" + std::to_string(::getpid()) + "-" + name;
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  static int seq = 0;
  const std::string out_file = tmp_path("run" + std::to_string(seq++));
  const std::string cmd = kBin + " " + args + " >" + out_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(out_file.c_str());
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("help and malformed invocations") {
  const Run help = run_cli("--help");
  CHECK(help.code == 0);
  CHECK(help.out.find("sidon") != std::string::npos);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);

  const std::string bad = tmp_path("bad.json");
  write_file(bad, "definitely not json");
  CHECK(run_cli("solve -i " + bad).code == 2);
  write_file(bad, R"({"slopes":["1",0.5],"k":5})");
  CHECK(run_cli("solve -i " + bad).code == 2);
  std::remove(bad.c_str());
}

TEST_CASE("sidon subcommand") {
  const Run r = run_cli("sidon --h 3 --count 4 --verify");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["h"] == 3);
  CHECK(j["terms"] == json({1, 2, 5, 14}));
  CHECK(j["verified"] == true);
  CHECK(j["growth_ratio"].is_number());
}

TEST_CASE("solver verdicts drive the exit code") {
  const std::string yes = tmp_path("yes.json");
  const std::string no = tmp_path("no.json");
  write_file(yes, R"({"slopes":["1","2","3","4","5","7"],"k":4})");
  write_file(no, R"({"slopes":["0","1","2"],"k":4})");

  const Run ry = run_cli("solve -i " + yes);
  REQUIRE(ry.code == 0);
  const json jy = json::parse(ry.out);
  CHECK(jy["verdict"] == "YES");
  CHECK(jy["certificate"]["type"] == "points");
  CHECK(jy["certificate"]["points"].size() == 4);

  const Run rn = run_cli("solve -i " + no);
  REQUIRE(rn.code == 1);
  const json jn = json::parse(rn.out);
  CHECK(jn["verdict"] == "NO");
  CHECK(jn["no_is_conditional"] == false);
  CHECK(jn["certificate"].is_null());

  // Restricted regime: 11 integer slopes never host 9 points, but the NO
  // leans on the polygon-container conjecture.
  const std::string big = tmp_path("big.json");
  json slopes = json::array();
  for (int i = 0; i <= 10; ++i) slopes.push_back(std::to_string(i));
  write_file(big, json{{"slopes", slopes}, {"k", 9}}.dump());
  const Run rb = run_cli("solve -i " + big);
  REQUIRE(rb.code == 1);
  CHECK(json::parse(rb.out)["no_is_conditional"] == true);

  const Run rmc = run_cli("solve-mc --reps 5 --seed 1 -i " + big);
  REQUIRE(rmc.code == 1);
  CHECK(json::parse(rmc.out)["fallback"] == true);

  std::remove(yes.c_str());
  std::remove(no.c_str());
  std::remove(big.c_str());
}

TEST_CASE("oracle and witness checking") {
  const std::string yes = tmp_path("oyes.json");
  const std::string no = tmp_path("ono.json");
  const std::string wit = tmp_path("owit.json");
  write_file(yes, R"({"slopes":["1","2","3","4","5","7"],"k":4})");
  write_file(no, R"({"slopes":["0","1","2"],"k":4})");

  const Run rw = run_cli("oracle -i " + yes + " -o " + wit);
  REQUIRE(rw.code == 0);
  const json w = json::parse(read_file(wit));
  CHECK(w["k"] == 4);
  CHECK(w["triples"].size() == 6);

  const Run rn = run_cli("oracle -i " + no);
  CHECK(rn.code == 1);
  CHECK(json::parse(rn.out)["verdict"] == "NO");

  const Run rc =
      run_cli("check-witness --instance " + yes + " --witness " + wit);
  REQUIRE(rc.code == 0);
  const json cj = json::parse(rc.out);
  CHECK(cj["ok"] == true);
  CHECK(cj["points"].size() == 4);

  json tampered = w;
  tampered["triples"][0][2] = "99";
  const std::string bad = tmp_path("obad.json");
  write_file(bad, tampered.dump());
  const Run rt =
      run_cli("check-witness --instance " + yes + " --witness " + bad);
  CHECK(rt.code == 1);
  CHECK(json::parse(rt.out)["reason"] == "slope outside the instance");

  std::remove(yes.c_str());
  std::remove(no.c_str());
  std::remove(wit.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("dual subcommand") {
  const std::string pts = tmp_path("dual.json");
  write_file(pts, R"({"points":[["1","-1"],["-1","0"],["0","0"],["0","1"]]})");
  const Run r = run_cli("dual -i " + pts);
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const json want = json::array({json::array({"-2", "-1"}),
                                 json::array({"-2", "2"}),
                                 json::array({"-1", "0"}),
                                 json::array({"1", "-1"})});
  CHECK(j["points"] == want);
  // The reported sextuple belongs to the dual quadruple, not the input.
  CHECK(j["sextuple"] == json({"inf", "1", "0", "-2", "-1", "-1/2"}));
  CHECK_FALSE(j.contains("q"));  // vertical member, no finite polynomial value

  write_file(pts, R"({"points":[[0,0],[1,0],[2.0,2.0],[3,6]]})");
  const Run rf = run_cli("dual -i " + pts);
  REQUIRE(rf.code == 0);
  const json jf = json::parse(rf.out);
  REQUIRE(jf.contains("q"));
  // The dual is itself simple, so the slope relation annihilates its sextuple.
  CHECK(std::abs(jf["q"].get<double>()) < 1e-9);
  std::remove(pts.c_str());
}

TEST_CASE("generic set generation feeds the standalone check") {
  const std::string lab = tmp_path("lab.json");
  const Run rg = run_cli("generic --count 4 --check -o " + lab);
  REQUIRE(rg.code == 0);
  const json lj = json::parse(read_file(lab));
  CHECK(lj["generic"] == true);
  CHECK(lj["classes"] == 2);
  CHECK(lj["case_counts"]["other"] == 0);

  // The labeling document doubles as a points document.
  const Run rc = run_cli("check-generic -i " + lab);
  REQUIRE(rc.code == 0);
  CHECK(json::parse(rc.out)["generic"] == true);
  std::remove(lab.c_str());
}

TEST_CASE("affreg subcommand") {
  const Run r = run_cli("affreg --n 7");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["order"] == 7);
  CHECK(j["vertices"].size() == 7);
  CHECK(j["cyclic_order_ok"] == true);
  CHECK(j["boundary_ok"] == true);

  const Run rr = run_cli("affreg --n 9 --random --seed 3");
  REQUIRE(rr.code == 0);
  const json jr = json::parse(rr.out);
  CHECK(jr["order"] == 9);
  CHECK(jr["cyclic_order_ok"] == true);
  CHECK(jr["boundary_ok"] == true);
}

TEST_CASE("cases subcommand") {
  const Run r = run_cli("cases");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["cases"].size() == 24);
  CHECK(j["solvable_cases"] == 1);
  CHECK(j["total_solutions"] == 128);
  CHECK(j["orbit_count"] == 2);
  CHECK(j["orbit_representatives"].size() == 2);
}

TEST_CASE("render subcommand") {
  const std::string pts = tmp_path("render.json");
  write_file(pts, R"({"points":[["0","0"],["1","0"],["0","1"]]})");
  const Run r = run_cli("render -i " + pts);
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("<svg", 0) == 0);
  CHECK(r.out.find("</svg>") != std::string::npos);
  std::remove(pts.c_str());
}

TEST_CASE("clique and the full reduction round trip") {
  const std::string g5 = tmp_path("k5.json");
  json edges = json::array();
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) edges.push_back({u, v});
  write_file(g5, json{{"vertices", 5}, {"edges", edges}}.dump());

  const Run rc = run_cli("clique --k 5 -i " + g5);
  REQUIRE(rc.code == 0);
  CHECK(json::parse(rc.out)["found"] == true);
  CHECK(run_cli("clique --k 6 -i " + g5).code == 1);

  const std::string red = tmp_path("red.json");
  const std::string wit = tmp_path("rwit.json");
  const Run rr = run_cli("reduce --k 5 --witness-out " + wit + " -i " + g5 +
                         " -o " + red);
  REQUIRE(rr.code == 0);
  const json rj = json::parse(read_file(red));
  CHECK(rj["instance"]["k"] == 5);
  CHECK(rj["instance"]["slopes"].size() == 10);

  const std::string inst = tmp_path("inst.json");
  write_file(inst, rj["instance"].dump());
  const Run rv = run_cli("check-witness --instance " + inst + " --witness " + wit);
  REQUIRE(rv.code == 0);
  CHECK(json::parse(rv.out)["ok"] == true);

  std::remove(g5.c_str());
  std::remove(red.c_str());
  std::remove(wit.c_str());
  std::remove(inst.c_str());
}

TEST_CASE("bench subcommand") {
  const Run r = run_cli("bench --family reduction --sizes 6 8");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("family,n,seconds", 0) == 0);
  CHECK(r.out.find("reduction,6,") != std::string::npos);
  CHECK(r.out.find("# fitted exponent") != std::string::npos);
}
