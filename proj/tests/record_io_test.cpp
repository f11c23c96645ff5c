#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "fusion/graph_model.hpp"
#include "fusion/record_io.hpp"

using namespace fusion;

TEST_CASE("ring record JSON layout") {
  RingRecord r = make_record(fixtures::rep_s3());
  r.name = "Rep(S3)";
  CHECK(to_json(r).dump() ==
        R"j({"rank":3,"loops":[1],"arcs":[[1,2]],"hyperedges":[],"name":"Rep(S3)"})j");
}

TEST_CASE("JSON round trip is the identity") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    RingRecord r = make_record(fixtures::random_pair(trial % 7, 0.35, rng));
    if (trial % 3 == 0) r.name = "ring " + std::to_string(trial);
    if (trial % 5 == 0) r.source = "test";
    if (trial % 2 == 0) r.invariants = invariant_tuple(decode(r.pair));
    CHECK(record_from_json(to_json(r)) == r);
    CHECK(parse_record(to_json(r).dump(2)) == r);
  }
  RingRecord fig = make_record(fixtures::figure_ring());
  fig.invariants = ring_invariants(decode(fig.pair));
  CHECK(parse_record(to_json(fig).dump()) == fig);
}

TEST_CASE("unsorted input is normalized") {
  const RingRecord r = parse_record(
      R"({"rank":4,"loops":[2,1],"arcs":[[2,1],[1,2]],"hyperedges":[[3,1,2]]})");
  CHECK(r.pair == fixtures::psu2_6());
}

TEST_CASE("malformed records are rejected") {
  CHECK_THROWS_AS(parse_record(R"({"rank":2,"loops":[1],"arcs":[)"), parse_error);
  CHECK_THROWS_AS(parse_record(R"({"loops":[],"arcs":[],"hyperedges":[]})"), parse_error);
  CHECK_THROWS_AS(parse_record(R"({"rank":2,"loops":[2],"arcs":[],"hyperedges":[]})"), parse_error);
  CHECK_THROWS_AS(parse_record(R"({"rank":3,"loops":[],"arcs":[[1,1]],"hyperedges":[]})"), parse_error);
  CHECK_THROWS_AS(parse_record(R"({"rank":4,"loops":[],"arcs":[],"hyperedges":[[1,2]]})"), parse_error);
  CHECK_THROWS_AS(parse_record(R"({"rank":"4","loops":[],"arcs":[],"hyperedges":[]})"), parse_error);
  CHECK_THROWS_AS(parse_record(R"([1,2,3])"), parse_error);
  CHECK_THROWS_AS(parse_record(R"({"rank":2,"loops":[],"arcs":[],"hyperedges":[],"name":3})"),
                  parse_error);
}

TEST_CASE("line format") {
  CHECK(to_line(fixtures::psu2_6()) == "L:{1;2}|A:{(1,2);(2,1)}|H:{(1,2,3)}");
  CHECK(to_line(fixtures::sem()) == "L:{}|A:{}|H:{}");
  RingRecord named = make_record(fixtures::fib());
  named.name = "Fib";
  CHECK(format_lines({named, make_record(fixtures::sem())}) == "L:{1}|A:{}|H:{}\tFib\nL:{}|A:{}|H:{}\n");
}

TEST_CASE("table format") {
  RingRecord psu = make_record(fixtures::psu2_6());
  psu.name = "PSU(2)_6";
  CHECK(format_table({psu, make_record(fixtures::sem())}) ==
        "Loops | Arcs | Hyperedges | Name\n"
        "1, 2 | (1, 2), (2, 1) | (1, 2, 3) | PSU(2)_6\n"
        " |  |  | \n");
}

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("table") == Format::Table);
  CHECK(parse_format("lines") == Format::Lines);
  CHECK_THROWS_AS(parse_format("xml"), parse_error);
}

TEST_CASE("triple system JSON") {
  const TripleSystem ts = boolean_sts(3);
  CHECK(triple_system_from_json(to_json(ts)) == ts);
  CHECK_THROWS_AS(triple_system_from_json(Json::parse(R"({"points":3,"triples":[[1,2]]})")),
                  parse_error);
}
