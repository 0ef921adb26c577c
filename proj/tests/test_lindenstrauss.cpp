#include <doctest.h>

#include "oracles.hpp"
#include "qgl1/lindenstrauss.hpp"

using namespace qgl1;
using namespace qgl1::testing;

TEST_SUITE("lindenstrauss") {

TEST_CASE("basis vectors couple a node to its children") {
  CHECK(basis_vector(1) ==
        SparseVec::from_entries({{1, 1}, {3, make_rational(-1, 2)}, {4, make_rational(-1, 2)}}));
  CHECK(basis_vector(2) ==
        SparseVec::from_entries({{2, 1}, {5, make_rational(-1, 2)}, {6, make_rational(-1, 2)}}));
  CHECK(basis_vector(10) ==
        SparseVec::from_entries({{10, 1}, {21, make_rational(-1, 2)}, {22, make_rational(-1, 2)}}));
  CHECK_THROWS_AS(basis_vector(0), Error);
  CHECK_THROWS_AS(basis_vector(-2), Error);
}

TEST_CASE("parent") {
  CHECK(parent(3) == 1);
  CHECK(parent(4) == 1);
  CHECK(parent(5) == 2);
  CHECK(parent(6) == 2);
  CHECK(!parent(1).has_value());
  CHECK(!parent(2).has_value());
  CHECK_THROWS_AS(parent(0), Error);
}

TEST_CASE("index chains walk to a root") {
  CHECK(alpha_chain(7).entries == std::vector<Index>{7, 3, 1});
  CHECK(alpha_chain(5).entries == std::vector<Index>{5, 2});
  CHECK(alpha_chain(1).entries == std::vector<Index>{1});
  CHECK_THROWS_AS(alpha_chain(0), Error);
}

TEST_CASE("chain steps agree with parent") {
  for (Index i = 3; i <= 500; ++i) {
    CHECK(alpha_chain(i).entries[1] == parent(i).value());
    CHECK(parent(2 * i + 1).value() == i);
    CHECK(parent(2 * i + 2).value() == i);
  }
}

TEST_CASE("dual vectors place halving weights along the chain") {
  CHECK(dual_vector(8) == SparseVec::from_entries(
                              {{1, make_rational(1, 4)}, {3, make_rational(1, 2)}, {8, 1}}));
  CHECK(dual_vector(4) == SparseVec::from_entries({{1, make_rational(1, 2)}, {4, 1}}));
  CHECK(dual_vector(2) == SparseVec::from_entries({{2, 1}}));
}

TEST_CASE("level") {
  CHECK(level(1) == 1);
  CHECK(level(2) == 1);
  CHECK(level(6) == 2);
  CHECK(level(7) == 3);
  for (int l = 1; l <= 10; ++l) {
    CHECK(level((Index(1) << l) - 1) == l);
    CHECK(level((Index(1) << (l + 1)) - 2) == l);
  }
  for (Index i = 1; i <= 1000; ++i) {
    CHECK(level(i) == static_cast<int>(alpha_chain(i).entries.size()));
  }
  CHECK_THROWS_AS(level(0), Error);
}

TEST_CASE("expand") {
  CHECK(expand(CoeffMap::from_entries({{1, 1}})) == basis_vector(1));
  CHECK(expand(CoeffMap::from_entries(
            {{1, 1}, {3, make_rational(1, 2)}, {4, make_rational(1, 2)}})) ==
        SparseVec::from_entries({{1, 1},
                                 {7, make_rational(-1, 4)},
                                 {8, make_rational(-1, 4)},
                                 {9, make_rational(-1, 4)},
                                 {10, make_rational(-1, 4)}}));
  CHECK(expand(CoeffMap{}).empty());
}

TEST_CASE("expand matches the naive accumulation") {
  Rng rng(31);
  for (int t = 0; t < 300; ++t) {
    CoeffMap coeffs = random_coeffs(rng, 40, 10);
    CHECK(to_map(expand(coeffs)) == naive_expand(coeffs));
  }
}

TEST_CASE("analyze recovers coefficients and certifies membership") {
  CoeffMap a = CoeffMap::from_entries({{2, 3}, {5, make_rational(-1, 2)}});
  CHECK(analyze(expand(a), 5) == a);
  CHECK(analyze(SparseVec{}, 1).empty());
  CHECK_THROWS_AS(analyze(SparseVec::from_entries({{1, 1}}), 4), Error);
  try {
    analyze(SparseVec::from_entries({{1, 1}}), 4);
  } catch (const Error& e) {
    CHECK(e.code() == "NotInSpan");
  }
}

TEST_CASE("biorthogonality") {
  for (Index i = 1; i <= 60; ++i) {
    SparseVec dual = dual_vector(i);
    for (Index k = 1; k <= 60; ++k) {
      CHECK(pairing(dual, basis_vector(k)) == (i == k ? 1 : 0));
    }
  }
}

TEST_CASE("normalization") {
  for (Index i = 1; i <= 300; ++i) {
    CHECK(l1_norm(basis_vector(i)) == 2);
    CHECK(sup_norm(dual_vector(i)) == 1);
  }
}

TEST_CASE("analyze round-trips random coefficient maps") {
  Rng rng(32);
  for (int t = 0; t < 200; ++t) {
    CoeffMap a = random_coeffs(rng, 30, 8);
    Index bound = a.empty() ? 1 : a.max_index();
    CHECK(analyze(expand(a), bound) == a);
  }
}

TEST_CASE("partial sums are monotone in the cutoff") {
  Rng rng(33);
  for (int t = 0; t < 200; ++t) {
    CoeffMap a = random_coeffs(rng, 20, 10);
    Index top = a.empty() ? 1 : a.max_index();
    Rational previous(0);
    for (Index n = 1; n <= top; ++n) {
      std::vector<Index> prefix;
      for (Index i = 1; i <= n; ++i) prefix.push_back(i);
      Rational current = l1_norm(expand(restrict_to(a, prefix)));
      CHECK(current >= previous);
      previous = current;
    }
  }
}

TEST_CASE("level weights halve per level") {
  CHECK(level_weights(1) == CoeffMap::from_entries({{1, 1}, {2, 1}}));
  CoeffMap w2 = level_weights(2);
  CHECK(w2.size() == 6);
  CHECK(w2.at(1) == 1);
  CHECK(w2.at(2) == 1);
  for (Index i = 3; i <= 6; ++i) CHECK(w2.at(i) == make_rational(1, 2));
  CoeffMap w3 = level_weights(3);
  CHECK(w3.size() == 14);
  for (Index i = 7; i <= 14; ++i) CHECK(w3.at(i) == make_rational(1, 4));
  CHECK(level_block_end(3) == 14);
  CHECK_THROWS_AS(level_weights(0), Error);
}

}  // TEST_SUITE
