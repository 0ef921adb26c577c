#include <doctest.h>

#include "oracles.hpp"
#include "qgl1/report_json.hpp"
#include "qgl1/serialize.hpp"

using namespace qgl1;
using namespace qgl1::testing;

TEST_SUITE("serialize") {

TEST_CASE("vector serialization is byte-exact") {
  SparseVec x1 = SparseVec::from_entries(
      {{1, 1}, {3, make_rational(-1, 2)}, {4, make_rational(-1, 2)}});
  CHECK(dump_line(to_json(x1)) == R"({"1":"1","3":"-1/2","4":"-1/2"})");
  CHECK(dump_line(to_json(SparseVec{})) == "{}");
}

TEST_CASE("keys are emitted in numeric, not lexicographic, order") {
  SparseVec v = SparseVec::from_entries({{10, 1}, {2, 1}});
  CHECK(dump_line(to_json(v)) == R"({"2":"1","10":"1"})");
}

TEST_CASE("parsing accepts any key order") {
  SparseVec v = sparse_vec_from_json(parse_json(R"({"4":"1","1":"2"})"));
  CHECK(v == SparseVec::from_entries({{1, 2}, {4, 1}}));
}

TEST_CASE("round-trip is exact") {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    SparseVec v = random_sparse_vec(rng, 40, 10);
    CHECK(sparse_vec_from_json(parse_json(dump_line(to_json(v)))) == v);
  }
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(sparse_vec_from_json(parse_json(R"({"x":"1"})")), Error);
  CHECK_THROWS_AS(sparse_vec_from_json(parse_json(R"({"0":"1"})")), Error);
  CHECK_THROWS_AS(sparse_vec_from_json(parse_json(R"({"-1":"1"})")), Error);
  CHECK_THROWS_AS(sparse_vec_from_json(parse_json(R"({"1":2})")), Error);
  CHECK_THROWS_AS(sparse_vec_from_json(parse_json(R"({"1":"1/0"})")), Error);
  CHECK_THROWS_AS(sparse_vec_from_json(parse_json(R"([1,2])")), Error);
  CHECK_THROWS_AS(parse_json("{"), Error);
}

TEST_CASE("direct-sum vectors round-trip") {
  DSVec y = DSVec::from_blocks(
      {{2, CoeffMap::from_entries({{1, 1}, {2, make_rational(1, 2)}})},
       {5, CoeffMap::from_entries({{3, make_rational(-1, 4)}})}});
  Json j = ds_vec_to_json(y);
  CHECK(dump_line(j) == R"({"2":{"1":"1","2":"1/2"},"5":{"3":"-1/4"}})");
  CHECK(ds_vec_from_json(j) == y);
}

TEST_CASE("instances round-trip") {
  Instance instance = Instance::make(
      {1}, {3}, CoeffMap::from_entries({{1, 1}, {3, make_rational(1, 2)}}));
  Json j = instance_to_json(instance);
  Instance back = instance_from_json(j);
  CHECK(back.s1 == instance.s1);
  CHECK(back.s2 == instance.s2);
  CHECK(back.alpha == instance.alpha);
}

}  // TEST_SUITE
