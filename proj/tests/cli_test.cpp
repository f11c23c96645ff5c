#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fusion/canonical.hpp"
#include "fusion/record_io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = fusion::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
  return std::size_t(std::count(s.begin(), s.end(), '\n'));
}

const std::string fib_json = R"({"rank":2,"loops":[1],"arcs":[],"hyperedges":[]})";
const std::string sem_json = R"({"rank":2,"loops":[],"arcs":[],"hyperedges":[]})";
const std::string broken_figure_json =
    R"({"rank":6,"loops":[1,2,3,4],"arcs":[[1,5],[2,5],[3,5],[4,5]],"hyperedges":[[1,2,3],[1,2,4],[1,3,4]]})";

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("fusion_forge_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("enumerate formats") {
  const Run table = run({"enumerate", "--rank", "4", "--format", "table"});
  CHECK(table.code == 0);
  CHECK(count_lines(table.out) == 7);
  CHECK(table.out.rfind("Loops | Arcs | Hyperedges | Name\n", 0) == 0);
  CHECK(table.out.find("PSU(2)_6") != std::string::npos);

  const Run json = run({"enumerate", "--rank", "2", "--format", "json"});
  CHECK(json.code == 0);
  const auto parsed = fusion::Json::parse(json.out);
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 2);
  for (const auto& r : parsed) CHECK_NOTHROW(fusion::record_from_json(r));

  const Run lines = run({"enumerate", "--rank", "3", "--format", "lines"});
  CHECK(lines.out == "L:{}|A:{(1,2)}|H:{}\tIsing\nL:{1}|A:{(1,2)}|H:{}\tRep(S3)\n"
                     "L:{1}|A:{(1,2);(2,1)}|H:{}\tPSU(3)_2\n");
}

TEST_CASE("enumerate rank guard") {
  CHECK(run({"enumerate", "--rank", "9"}).code == 3);
  CHECK(run({"enumerate", "--rank", "8"}).code == 3);
  CHECK(run({"enumerate", "--rank", "1"}).code == 2);
  CHECK(run({"enumerate"}).code == 2);
  CHECK(run({"enumerate", "--rank", "4", "--format", "xml"}).code == 2);
  CHECK(run({"enumerate", "--rank", "4", "--jobs", "0"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);

  setenv("FUSION_FORGE_MAX_RANK", "3", 1);
  CHECK(run({"enumerate", "--rank", "4"}).code == 3);
  CHECK(run({"enumerate", "--rank", "3"}).code == 0);
  setenv("FUSION_FORGE_MAX_RANK", "x", 1);
  CHECK(run({"enumerate", "--rank", "3"}).code == 2);
  unsetenv("FUSION_FORGE_MAX_RANK");
}

TEST_CASE("enumerate filters and output directory") {
  const Run tf = run({"enumerate", "--rank", "4", "--undirected", "--triangle-free", "--format", "lines"});
  CHECK(tf.code == 0);
  CHECK(count_lines(tf.out) == 2);

  const Run empty = run({"enumerate", "--rank", "8", "--empty-graph", "--extended", "--format", "lines"});
  CHECK(empty.code == 0);
  CHECK(count_lines(empty.out) == 1);

  const auto dir = std::filesystem::temp_directory_path() / "fusion_forge_cli_out";
  std::filesystem::remove_all(dir);
  const Run saved = run({"enumerate", "--rank", "3", "--out", dir.string()});
  CHECK(saved.code == 0);
  std::ifstream f(dir / "rank3.json");
  REQUIRE(f);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == run({"enumerate", "--rank", "3"}).out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("enumerate statistics go to stderr") {
  const Run r = run({"enumerate", "--rank", "3", "--stats", "--format", "lines"});
  CHECK(r.err.find("digraphs generated: 10") != std::string::npos);
  CHECK(count_lines(r.out) == 3);
}

TEST_CASE("verify command") {
  const Run fib = run({"verify", "-"}, fib_json);
  CHECK(fib.code == 0);
  CHECK(fib.out == "VALID\n");

  const Run broken = run({"verify", "-"}, broken_figure_json);
  CHECK(broken.code == 1);
  CHECK(broken.out.rfind("COMMUTATOR ", 0) == 0);

  CHECK(run({"verify", "-"}, R"({"rank":2,"loops":[1)").code == 2);
  CHECK(run({"verify", "/nonexistent/ring.json"}).code == 2);

  const std::string path = write_temp("fib.json", fib_json);
  CHECK(run({"verify", path}).code == 0);
}

TEST_CASE("product piped into canon matches the table row") {
  const std::string sem = write_temp("sem.json", sem_json);
  const std::string fib = write_temp("fib.json", fib_json);
  const Run product = run({"product", sem, fib});
  REQUIRE(product.code == 0);
  const Run canon = run({"canon", "-"}, product.out);
  REQUIRE(canon.code == 0);
  const auto key = fusion::Json::parse(canon.out).at("key").get<std::string>();
  const fusion::GraphPair row(3, {2}, {{1, 2}}, {{1, 2, 3}});
  CHECK(key == fusion::canonical_form(row).hex());

  const Run lines = run({"canon", "--format", "lines", "-"}, product.out);
  CHECK(lines.out.find(key) != std::string::npos);
  CHECK(run({"product", "-", "-"}, sem_json).code == 2);
}

TEST_CASE("classify command") {
  const Run fib = run({"classify", "-"}, fib_json);
  CHECK(fib.code == 0);
  CHECK(fib.out == "triangle-free family 1\n");

  const Run empty7 = run({"classify", "-"}, R"({"rank":8,"loops":[],"arcs":[],"hyperedges":[]})");
  CHECK(empty7.out == "triangle-free family 4 (k = 3)\n");

  CHECK(run({"classify", "-"}, R"({"rank":6,"loops":[],"arcs":[],"hyperedges":[]})").code == 1);
  CHECK(run({"classify", "-"}, R"({"rank":3,"loops":[1],"arcs":[[1,2]],"hyperedges":[]})").code == 1);
}

TEST_CASE("catalog command") {
  const Run rank3 = run({"catalog", "--rank", "3", "--format", "lines"});
  CHECK(rank3.code == 0);
  CHECK(rank3.out.find("Ising") != std::string::npos);
  const Run all = run({"catalog"});
  CHECK(all.code == 0);
  CHECK(fusion::Json::parse(all.out).size() == 60);
}

TEST_CASE("sts command") {
  const Run check = run({"sts", "--k", "3", "--check", "-"});
  CHECK(check.code == 0);
  CHECK(check.out == "STS: yes; generates ring: yes\n");

  const Run built = run({"sts", "--k", "2"});
  CHECK(fusion::Json::parse(built.out).at("triples").size() == 1);

  const Run piped = run({"sts", "--check", "-"}, run({"sts", "--k", "4"}).out);
  CHECK(piped.out == "STS: yes; generates ring: yes\n");

  const Run grid = run({"sts", "--check", "-"},
                       R"({"points":9,"triples":[[1,2,3],[4,5,6],[7,8,9],[1,4,7],[2,5,8],[3,6,9],)"
                       R"([1,5,9],[2,6,7],[3,4,8],[1,6,8],[2,4,9],[3,5,7]]})");
  CHECK(grid.code == 1);
  CHECK(grid.out == "STS: yes; generates ring: no\n");

  CHECK(run({"sts"}).code == 2);
  CHECK(run({"sts", "--k", "9"}).code == 3);
}
