#include <doctest.h>

#include <stdexcept>

#include "affmult/json_io.hpp"

using namespace affmult;
using nlohmann::json;

TEST_CASE("library types serialize to compact JSON") {
  CHECK(json(Partition({3, 2, 2, 1})).dump() == "[3,2,2,1]");
  CHECK(json(Partition()).dump() == "[]");
  CHECK(json(StandardTableau({{1, 4}, {2}, {3}})).dump() == "[[1,4],[2],[3]]");
  CHECK(json(ExtendedYoungDiagram({-2, -1})).dump() == "[-2,-1]");
  CHECK(json(CrystalTuple{{ExtendedYoungDiagram({-1}), ExtendedYoungDiagram()}}).dump() ==
        "[[-1],[]]");
  CHECK(json(WeightVector{1, {1, 0, 1}}).dump() == "{\"c\":[1,0,1],\"level\":1}");

  PathSequence seq;
  seq.kind = PathKind::lower;
  seq.moves = {"RU", "UU"};
  CHECK(json(seq).dump() == "[\"RU\",\"UU\"]");
}

TEST_CASE("bigint_json keeps small values as numbers and big ones as strings") {
  CHECK(bigint_json(BigInt(119)).is_number_integer());
  CHECK(bigint_json(BigInt(119)).get<long long>() == 119);
  CHECK(bigint_json(BigInt(-7)).get<long long>() == -7);
  BigInt big = BigInt(1) << 100;
  CHECK(bigint_json(big).is_string());
  CHECK(bigint_json(big).get<std::string>() == "1267650600228229401496703205376");
}

TEST_CASE("report serialization carries query, values, and breakdown") {
  MultiplicityReport report = cross_check({2, 1, 1, 2, std::nullopt},
                                          {"formula", "permutations"});
  json j = report;
  CHECK(j["query"]["k"] == 2);
  CHECK(j["query"]["n"] == 4);
  CHECK(j["agree"] == true);
  CHECK(j["values"]["formula"] == 2);
  CHECK(j["breakdown"].is_array());
  CHECK(j["breakdown"].size() == 2);
}

TEST_CASE("parsers reject malformed input") {
  CHECK(partition_from_json(json::parse("[3,1]")) == Partition({3, 1}));
  CHECK(partition_from_json(json::parse("[]")) == Partition());
  CHECK_THROWS_AS(partition_from_json(json::parse("{}")), std::invalid_argument);
  CHECK_THROWS_AS(partition_from_json(json::parse("[1,2]")), std::invalid_argument);
  CHECK_THROWS_AS(partition_from_json(json::parse("[1.5]")), std::invalid_argument);

  CHECK(tableau_from_json(json::parse("[[1,3],[2]]")) == StandardTableau({{1, 3}, {2}}));
  CHECK_THROWS_AS(tableau_from_json(json::parse("[[1,\"x\"]]")), std::invalid_argument);
  CHECK_THROWS_AS(tableau_from_json(json::parse("[[2,1]]")), std::invalid_argument);

  CHECK(word_from_string("3,2,9,8,6,1,7,5,4") == Word{3, 2, 9, 8, 6, 1, 7, 5, 4});
  CHECK(word_from_string("7") == Word{7});
  CHECK_THROWS_AS(word_from_string("3,x,1"), std::invalid_argument);
}
