#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "k2ham/error.hpp"
#include "k2ham/certificate.hpp"
#include "k2ham/formats.hpp"
#include "k2ham/named.hpp"

using namespace k2ham;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string g6(const char* name) { return encode_graph6(named::by_name(name)); }

std::string temp_path(const std::string& leaf) {
  return (std::filesystem::temp_directory_path() / ("k2ham_test_" + leaf)).string();
}

}  // namespace

TEST_CASE("filter keeps survivors in input order") {
  std::string stream = g6("petersen") + "\n" + g6("complete:4") + "\n" + g6("cube:3") + "\n";
  auto r = run({"filter", "--pred", "k2hypo"}, stream);
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == g6("petersen") + "\n");
  CHECK(r.err.find("matched 1") != std::string::npos);
  auto c = run({"filter", "--pred", "k2hypo", "--count", "-q"}, stream);
  CHECK(c.out == "1\n");
  CHECK(c.err.empty());
  auto n = run({"filter", "--pred", "hamiltonian", "--not", "--count"}, stream);
  CHECK(n.out == "1\n");
  CHECK(run({"filter", "--pred", "k2hypo", "--count"}, "").out == "0\n");
}

TEST_CASE("filter output does not depend on the job count") {
  std::ifstream f(std::string(TEST_DATA_DIR) + "/graphs_n8.g6");
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string corpus = ss.str();
  auto one = run({"--jobs", "1", "filter", "--pred", "hamiltonian"}, corpus);
  auto four = run({"--jobs", "4", "filter", "--pred", "hamiltonian"}, corpus);
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(one.err == four.err);
  CHECK_FALSE(one.out.empty());
}

TEST_CASE("malformed lines") {
  std::string stream = g6("petersen") + "\nnot a graph\n" + g6("petersen") + "\n";
  auto lax = run({"filter", "--pred", "cubic"}, stream);
  CHECK(lax.code == cli::kExitOk);
  CHECK(lax.err.find("line 2") != std::string::npos);
  CHECK(lax.err.find("malformed 1") != std::string::npos);
  CHECK(lax.out == g6("petersen") + "\n" + g6("petersen") + "\n");
  auto strict = run({"filter", "--pred", "cubic", "--strict"}, stream);
  CHECK(strict.code == cli::kExitParse);
  CHECK(strict.out == g6("petersen") + "\n");
}

TEST_CASE("undecided outcomes are reported and fail strict runs") {
  std::string stream = g6("petersen") + "\n";
  auto r = run({"--node-limit", "2", "filter", "--pred", "hypo"}, stream);
  CHECK(r.code == cli::kExitOk);
  CHECK(r.err.find("undecided 1") != std::string::npos);
  CHECK(run({"--node-limit", "2", "filter", "--pred", "hypo", "--strict"}, stream).code == cli::kExitUndecided);
  CHECK(run({"--node-limit", "2", "check", "--pred", "hypo", "petersen"}).code == cli::kExitUndecided);
}

TEST_CASE("filter certificates") {
  auto r = run({"filter", "--pred", "k2", "--certificates"}, g6("petersen") + "\n" + g6("coxeter") + "\n");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(replay_certificate(Json::parse(line)).ok);
    ++count;
  }
  CHECK(count == 1);
}

TEST_CASE("check with --expect") {
  CHECK(run({"check", "--pred", "k2hypo", "petersen", "--expect", "true"}).code == cli::kExitOk);
  CHECK(run({"check", "--pred", "k2hypo", "petersen", "--expect", "false"}).code == cli::kExitFalse);
  CHECK(run({"check", "--pred", "girth>=5", g6("petersen"), "--expect", "true"}).code == cli::kExitOk);
  CHECK(run({"check", "--pred", "snark", "flower:5", "--expect", "true"}).code == cli::kExitOk);
  CHECK(run({"check", "--pred", "k2", "complete:4"}).code == cli::kExitPrecondition);
  CHECK(run({"check", "--pred", "bogus", "petersen"}).code == cli::kExitUsage);
  CHECK(run({"check", "--pred", "k2", "Zzzz"}).code == cli::kExitParse);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("graph arguments: file, stdin, edge list") {
  std::string path = temp_path("c5.txt");
  {
    std::ofstream f(path);
    f << "# five-cycle\n5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
  }
  auto r = run({"check", "--pred", "hamiltonian", path});
  CHECK(r.out.find("hamiltonian: true") != std::string::npos);
  std::filesystem::remove(path);
  CHECK(run({"check", "--pred", "k2hypo", "-", "--expect", "true"}, g6("petersen") + "\n").code == 0);
  CHECK(run({"check", "--pred", "k2hypo", std::string(TEST_DATA_DIR) + "/petersen.s6", "--expect", "true"}).code ==
        0);
}

TEST_CASE("cell verify on J18") {
  auto r = run({"--one-based", "cell", "verify", "j18", "--outer", "6,9,3,1", "--level", "k2"});
  CHECK(r.code == 0);
  CHECK(r.out == "suitable ✓ k1 ✓ k2 ✓\n");
  auto rotated = run({"--one-based", "cell", "verify", "j18", "--outer", "9,3,1,6", "--expect", "true"});
  CHECK(rotated.code == cli::kExitFalse);
  CHECK(run({"cell", "verify", "j18", "--level", "k1", "--ledger"}).out.find("1.2") != std::string::npos);
  CHECK(run({"cell", "verify", "petersen"}).code == cli::kExitUsage);
}

TEST_CASE("cell find") {
  auto r = run({"cell", "find", "cycle:5"});
  CHECK(r.out == "0 cells up to relabelling\n");
}

TEST_CASE("gamma piped into check") {
  auto built = run({"build", "gamma", "--cells", "j18,j18,j18", "--variant", "k2"});
  REQUIRE(built.code == 0);
  CHECK(decode_graph_line(built.out.substr(0, built.out.find('\n'))).order() == 48);
  auto checked = run({"check", "--pred", "k2hypo", "-"}, built.out);
  CHECK(checked.code == 0);
  CHECK(checked.out.find("k2hypo: true (n=48)") != std::string::npos);
  CHECK(run({"build", "gamma", "--cells", "j18,j18"}).code == cli::kExitPrecondition);
}

TEST_CASE("glue and dot") {
  auto glued = run({"build", "glue", "--first", "petersen", "--first-vertex", "0", "--second", "petersen",
                    "--second-vertex", "4"});
  REQUIRE(glued.code == 0);
  CHECK(decode_graph_line(glued.out.substr(0, glued.out.find('\n'))).order() == 15);
  auto dot = run({"build", "dot", "--left", "petersen", "--right", "petersen", "--ab", "0,1", "--cd", "2,3", "--xy",
                  "0,1"});
  REQUIRE(dot.code == 0);
  CHECK(run({"check", "--pred", "snark", "-", "--expect", "true"}, dot.out).code == 0);
  auto found = run({"build", "dot", "--left", "flower:5", "--right", "flower:5", "--find"});
  REQUIRE(found.code == 0);
  CHECK(run({"check", "--pred", "k2hypo", "-", "--expect", "true"}, found.out).code == 0);
  CHECK(run({"build", "dot", "--left", "petersen", "--right", "petersen", "--find"}).code ==
        cli::kExitPrecondition);
}

TEST_CASE("conditions, extendable, grinberg, named") {
  CHECK(run({"conditions", "h", "cube:3", "--xy", "0,1", "--expect", "false"}).code == 0);
  auto ext = run({"extendable", "gp:11:2", "--expect", "true"});
  CHECK(ext.code == 0);
  auto g = run({"grinberg", "dodecahedron", "--all-cycles", "--expect", "true"});
  CHECK(g.code == 0);
  CHECK(g.out.find("30 hamiltonian cycles") != std::string::npos);
  CHECK(run({"--one-based", "grinberg", "j18", "--chord", "6,1", "--expect", "true"}).code == 0);
  CHECK(run({"grinberg", "k4", "--expect", "false"}).code == 0);
  CHECK(run({"grinberg", std::string(SHIPPED_DATA_DIR) + "/j18.emb"}).out.find("faces 9") != std::string::npos);
  CHECK(run({"named", "petersen"}).out == g6("petersen") + "\n");
  CHECK(run({"named", "--list"}).out.find("flower") != std::string::npos);
}

TEST_CASE("certify and replay") {
  std::string path = temp_path("petersen_k2.json");
  CHECK(run({"certify", "--pred", "k2", "petersen", "-o", path}).code == 0);
  auto r = run({"replay", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("15 witnesses checked") != std::string::npos);
  {
    std::ofstream f(path);
    f << "{\"format\": \"k2ham-certificate\", \"version\": 1}";
  }
  CHECK(run({"replay", path}).code == cli::kExitFalse);
  {
    std::ofstream f(path);
    f << "not json";
  }
  CHECK(run({"replay", path}).code == cli::kExitParse);
  std::filesystem::remove(path);
  auto cell = run({"certify", "--claim", "cell-k2", "j18"});
  CHECK(cell.code == 0);
  CHECK(replay_certificate(Json::parse(cell.out)).ok);
}
