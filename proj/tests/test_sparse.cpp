#include <doctest.h>

#include "oracles.hpp"
#include "qgl1/sparse.hpp"

using namespace qgl1;
using namespace qgl1::testing;

namespace {

SparseVec vec(std::vector<SparseVec::Entry> entries) {
  return SparseVec::from_entries(std::move(entries));
}

}  // namespace

TEST_SUITE("sparse") {

TEST_CASE("l1 norm") {
  CHECK(l1_norm(SparseVec{}) == 0);
  CHECK(l1_norm(vec({{1, 1}, {3, make_rational(-1, 2)}, {4, make_rational(-1, 2)}})) == 2);
  CHECK(l1_norm(vec({{1, make_rational(3, 2)}})) == make_rational(3, 2));
}

TEST_CASE("sup norm") {
  CHECK(sup_norm(vec({{1, make_rational(1, 4)}, {3, make_rational(1, 2)}, {7, 1}})) == 1);
  CHECK(sup_norm(SparseVec{}) == 0);
  CHECK(sup_norm(vec({{2, -5}})) == 5);
}

TEST_CASE("pairing") {
  SparseVec x1 = vec({{1, 1}, {3, make_rational(-1, 2)}, {4, make_rational(-1, 2)}});
  CHECK(pairing(vec({{1, 1}}), x1) == 1);
  CHECK(pairing(vec({{1, make_rational(1, 2)}, {3, 1}}), x1) == 0);
  CHECK(pairing(SparseVec{}, x1) == 0);
}

TEST_CASE("linear_combine") {
  std::vector<std::pair<Rational, SparseVec>> cancel = {
      {Rational(1), vec({{1, 1}})}, {Rational(-1), vec({{1, 1}})}};
  CHECK(linear_combine(cancel).empty());

  std::vector<std::pair<Rational, SparseVec>> sum;
  for (Index i : {1, 3, 4}) {
    std::vector<SparseVec::Entry> entries = {
        {i, 1}, {2 * i + 1, make_rational(-1, 2)}, {2 * i + 2, make_rational(-1, 2)}};
    sum.emplace_back(Rational(1), vec(std::move(entries)));
  }
  SparseVec expected = vec({{1, 1},
                            {3, make_rational(1, 2)},
                            {4, make_rational(1, 2)},
                            {7, make_rational(-1, 2)},
                            {8, make_rational(-1, 2)},
                            {9, make_rational(-1, 2)},
                            {10, make_rational(-1, 2)}});
  CHECK(linear_combine(sum) == expected);

  std::vector<std::pair<Rational, SparseVec>> scaled = {
      {Rational(2), vec({{2, make_rational(1, 2)}})}};
  CHECK(linear_combine(scaled) == vec({{2, 1}}));
}

TEST_CASE("restrict") {
  SparseVec v = vec({{1, 1}, {3, make_rational(1, 2)}});
  CHECK(restrict_to(v, std::vector<Index>{1}) == vec({{1, 1}}));
  CHECK(restrict_to(vec({{1, 1}}), std::vector<Index>{}).empty());
  SparseVec x1 = vec({{1, 1}, {3, make_rational(-1, 2)}, {4, make_rational(-1, 2)}});
  CHECK(restrict_to(x1, std::vector<Index>{3, 4}) ==
        vec({{3, make_rational(-1, 2)}, {4, make_rational(-1, 2)}}));
}

TEST_CASE("from_entries normalizes") {
  CHECK(vec({{2, 1}, {2, -1}}).empty());
  CHECK(vec({{5, 0}}).empty());
  CHECK(vec({{4, 1}, {2, 2}}).entries()[0].first == 2);
  CHECK(vec({{1, make_rational(1, 2)}, {1, make_rational(1, 2)}}) == vec({{1, 1}}));
  CHECK_THROWS_AS(vec({{0, 1}}), Error);
  CHECK_THROWS_AS(vec({{-3, 1}}), Error);
}

TEST_CASE("lookup helpers") {
  SparseVec v = vec({{2, 1}, {9, make_rational(-2, 3)}});
  CHECK(v.at(2) == 1);
  CHECK(v.at(3) == 0);
  CHECK(v.contains(9));
  CHECK(!v.contains(1));
  CHECK(v.max_index() == 9);
  CHECK(SparseVec{}.max_index() == 0);
  CHECK(v.support() == std::vector<Index>{2, 9});
}

TEST_CASE("norm ordering and emptiness") {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    SparseVec v = random_sparse_vec(rng, 30, 8);
    CHECK(l1_norm(v) >= sup_norm(v));
    CHECK(sup_norm(v) >= 0);
    CHECK((l1_norm(v) == 0) == v.empty());
    CHECK((sup_norm(v) == 0) == v.empty());
  }
}

TEST_CASE("disjoint restriction is additive") {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    SparseVec v = random_sparse_vec(rng, 30, 8);
    std::vector<Index> a, b, both;
    for (Index j = 1; j <= 30; ++j) {
      switch (rng.below(3)) {
        case 0: a.push_back(j); both.push_back(j); break;
        case 1: b.push_back(j); both.push_back(j); break;
        default: break;
      }
    }
    CHECK(l1_norm(restrict_to(v, a)) + l1_norm(restrict_to(v, b)) ==
          l1_norm(restrict_to(v, both)));
  }
}

TEST_CASE("triangle inequality is exact") {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    SparseVec u = random_sparse_vec(rng, 25, 8);
    SparseVec v = random_sparse_vec(rng, 25, 8);
    CHECK(l1_norm(add(u, v)) <= l1_norm(u) + l1_norm(v));
  }
}

TEST_CASE("pairing is bilinear") {
  Rng rng(14);
  for (int t = 0; t < 200; ++t) {
    SparseVec f = random_sparse_vec(rng, 25, 8);
    SparseVec u = random_sparse_vec(rng, 25, 8);
    SparseVec v = random_sparse_vec(rng, 25, 8);
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    CHECK(pairing(f, add(scale(a, u), scale(b, v))) ==
          a * pairing(f, u) + b * pairing(f, v));
  }
}

}  // TEST_SUITE
